from qsmooth.algebra.elements import Element, word_from_text
from qsmooth.algebra.presentation import Generator, Presentation, RewriteRule
from qsmooth.algebra.scalars import scalar_field
from qsmooth.algebra.utils import REAL, UNITARY, CatalogError

# parameter names
Q = 'q'
LAMBDA = 'lam'

# defaults for entries that take integer parameters
DEFAULT_L = 2
DEFAULT_K = 1
MAX_L = 12
MAX_K = 8


def q_field():
    return scalar_field(Q, REAL)


def lambda_field():
    return scalar_field(LAMBDA, UNITARY)


class PresentationBuilder(object):
    """
    Collects generators and rules in catalog order. Star images are
    word texts resolved at build time, so partners can be declared in
    either order. Rule right-hand sides are brought to normal form.
    """

    def __init__(self, name, field, params=None):
        self.name = name
        self.field = field
        self.params = dict(params or {})
        self._gens = []
        self._rules = []

    def q(self, n):
        return self.field.power(n)

    def x(self, text, coeff=None):
        return Element.word(self.field, word_from_text(text), coeff)

    def one(self):
        return Element.one(self.field)

    def gen(self, name, weight=1, star=None):
        self._gens.append((name, weight, star))
        return self

    def pair(self, name, weight=1):
        """name and name* as star partners of equal weight."""
        self.gen(name, weight, name + '*')
        self.gen(name + '*', weight, name)
        return self

    def rule(self, lhs, rhs):
        if not isinstance(rhs, Element):
            rhs = Element.constant(self.field, rhs)
        self._rules.append(RewriteRule(word_from_text(lhs), rhs))
        return self

    def commute(self, central, others):
        for g in others:
            self.rule('%s.%s' % (central, g), self.x('%s.%s' % (g, central)))
        return self

    def build(self):
        gens = [Generator(name, weight,
                          None if star is None else self.x(star))
                for name, weight, star in self._gens]
        raw = Presentation(self.name, self.field, gens, self._rules,
                           self.params)
        rules = [RewriteRule(r.lhs, raw.normal_form(r.rhs))
                 for r in self._rules]
        return Presentation(self.name, self.field, gens, rules, self.params)


def poch(field, base, m, first=0, step=2):
    """prod_{k<m} (1 - q^(first + step*k) base) in the free algebra."""
    one = Element.one(field)
    out = one
    for k in range(m):
        out = out * (one - base.scale(field.power(first + step * k)))
    return out


def check_l(l, low=1):
    if l is None or not isinstance(l, int) or l < low or l > MAX_L:
        raise CatalogError('unsupported parameter l=%r (need %d <= l <= %d)'
                           % (l, low, MAX_L))
    return l


def check_k(k):
    if k is None or not isinstance(k, int) or k < 0 or k > MAX_K:
        raise CatalogError('unsupported parameter k=%r (need 0 <= k <= %d)'
                           % (k, MAX_K))
    return k
