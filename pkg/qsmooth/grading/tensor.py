"""
Elements of A (x) A, stored as scalars on pairs of normal words.
"""

from collections import defaultdict

from qsmooth.algebra.elements import Element, word_text


class TensorElement(object):
    __slots__ = ('field', 'terms')

    def __init__(self, field, terms=None):
        self.field = field
        self.terms = {}
        for pair, coeff in (terms or {}).items():
            if coeff:
                self.terms[pair] = coeff

    @classmethod
    def unit(cls, field):
        """1 (x) 1."""
        return cls(field, {((), ()): field.one})

    @classmethod
    def from_pairs(cls, p, pairs):
        """Sum of s * NF(u) (x) NF(v) over (s, u, v)."""
        return collect(p.field, (item for s, u, v in pairs
                                 for item in _product_terms(
                                     p.normal_form(u), p.normal_form(v), s)))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        zero = self.field.zero
        out = dict(self.terms)
        for pair, coeff in other.terms.items():
            total = out.get(pair, zero) + coeff
            if total:
                out[pair] = total
            else:
                out.pop(pair, None)
        res = TensorElement(self.field)
        res.terms = out
        return res

    def __sub__(self, other):
        return self + other.scale(-self.field.one)

    def scale(self, s):
        if not s:
            return TensorElement(self.field)
        res = TensorElement(self.field)
        res.terms = {pair: c * s for pair, c in self.terms.items()}
        return res

    def __eq__(self, other):
        return isinstance(other, TensorElement) and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def legs(self):
        """(coeff, left word, right word) in a stable order."""
        for (u, v), c in sorted(self.terms.items(),
                                key=lambda kv: (len(kv[0][0]) + len(kv[0][1]),
                                                kv[0])):
            yield c, u, v

    def format(self):
        if not self.terms:
            return '0'
        return ' + '.join('(%s) * %s (x) %s' % (self.field.format(c),
                                               word_text(u), word_text(v))
                          for c, u, v in self.legs())

    def to_json(self):
        return [[self.field.format(c), word_text(u), word_text(v)]
                for c, u, v in self.legs()]

    def __repr__(self):
        return 'TensorElement(%s)' % self.format()


def collect(field, items):
    """
    TensorElement from (pair, coeff) items with repeated pairs. Each pair's
    coefficients are gathered first and summed once, so building a large
    sum costs one pass instead of a dict copy per summand.
    """
    parts = defaultdict(list)
    for pair, coeff in items:
        parts[pair].append(coeff)
    out = TensorElement(field)
    for pair, coeffs in parts.items():
        total = field.sum_all(coeffs)
        if total:
            out.terms[pair] = total
    return out


def _product_terms(u, v, s):
    for w1, c1 in u.terms.items():
        for w2, c2 in v.terms.items():
            yield (w1, w2), s * c1 * c2


def simple_tensor(p, u, v):
    return collect(p.field, _product_terms(p.normal_form(u),
                                           p.normal_form(v), p.field.one))


def tensor_mu(p, t):
    parts = defaultdict(list)
    for (u, v), c in t.terms.items():
        for w, d in p.normal_form(Element.word(p.field, u + v)).terms.items():
            parts[w].append(c * d)
    return Element(p.field, {w: p.field.sum_all(cs)
                             for w, cs in parts.items()})


def sandwich_terms(p, left, t, right, s=None):
    """(pair, coeff) items of s * left * (first legs), (second legs) * right."""
    for (u, v), c in t.terms.items():
        first = p.normal_form(left * Element.word(p.field, u))
        second = p.normal_form(Element.word(p.field, v) * right)
        yield from _product_terms(first, second, c if s is None else c * s)


def tensor_sandwich(p, left, t, right):
    """left * (first legs), (second legs) * right."""
    return collect(p.field, sandwich_terms(p, left, t, right))


def tensor_map_leg(p, t, leg, fn):
    """Apply fn to one leg (0 or 1) of every term."""
    def items():
        for (u, v), c in t.terms.items():
            eu = Element.word(p.field, u)
            ev = Element.word(p.field, v)
            if leg == 0:
                eu = fn(eu)
            else:
                ev = fn(ev)
            yield from _product_terms(p.normal_form(eu), p.normal_form(ev), c)
    return collect(p.field, items())


def tensor_from_json(p, rows):
    return TensorElement.from_pairs(
        p, [(p.field.parse(coeff), p.elem(u), p.elem(v))
            for coeff, u, v in rows])
