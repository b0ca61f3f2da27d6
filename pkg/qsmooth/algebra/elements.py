"""
Words and elements of the free algebra over a ScalarField.

A word is a tuple of generator names; the empty tuple is the identity.
An Element maps words to nonzero scalars. Elements do not know any
relations: reduction lives in presentation.py.
"""

from fractions import Fraction

from .utils import ONE


def word_from_text(text):
    """'beta.alpha' -> ('beta', 'alpha'); '1' -> ()."""
    text = text.strip()
    if text == '1':
        return ONE
    return tuple(g.strip() for g in text.split('.'))


def word_text(word):
    return '.'.join(word) if word else '1'


class Element(object):
    """
    Finite sum of scalar multiples of words. Scalars multiply from the
    right (`e * s`) or through `scale`; never put a sympy scalar on the
    left of an Element.
    """
    __slots__ = ('field', 'terms')

    def __init__(self, field, terms=None):
        self.field = field
        self.terms = {}
        if terms:
            for word, coeff in terms.items():
                if coeff:
                    self.terms[tuple(word)] = coeff

    @classmethod
    def zero(cls, field):
        return cls(field)

    @classmethod
    def one(cls, field):
        return cls(field, {ONE: field.one})

    @classmethod
    def word(cls, field, word, coeff=None):
        coeff = field.one if coeff is None else field.convert(coeff)
        return cls(field, {tuple(word): coeff})

    @classmethod
    def gen(cls, field, name):
        return cls(field, {(name,): field.one})

    @classmethod
    def constant(cls, field, value):
        return cls(field, {ONE: field.convert(value)})

    def copy(self):
        out = Element(self.field)
        out.terms = dict(self.terms)
        return out

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def words(self):
        return list(self.terms)

    def coefficient(self, word):
        return self.terms.get(tuple(word), self.field.zero)

    def generators(self):
        return {g for word in self.terms for g in word}

    def is_scalar(self):
        return not self.terms or list(self.terms) == [ONE]

    def _coerce(self, other):
        if isinstance(other, Element):
            return other
        return Element.constant(self.field, other) \
            if isinstance(other, (int, Fraction, str)) \
            else Element(self.field, {ONE: other})

    def __add__(self, other):
        other = self._coerce(other)
        out = self.copy()
        for word, coeff in other.terms.items():
            total = out.terms.get(word, self.field.zero) + coeff
            if total:
                out.terms[word] = total
            else:
                out.terms.pop(word, None)
        return out

    __radd__ = __add__

    def __neg__(self):
        out = Element(self.field)
        out.terms = {w: -c for w, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, s):
        s = self.field.convert(s) if isinstance(s, (int, Fraction, str)) else s
        if not s:
            return Element(self.field)
        out = Element(self.field)
        out.terms = {w: c * s for w, c in self.terms.items()}
        return out

    def __mul__(self, other):
        if not isinstance(other, Element):
            return self.scale(other)
        out = {}
        zero = self.field.zero
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                total = out.get(w, zero) + c1 * c2
                if total:
                    out[w] = total
                else:
                    out.pop(w, None)
        res = Element(self.field)
        res.terms = out
        return res

    def __rmul__(self, other):
        # int and Fraction on the left; scalars commute with words
        return self.scale(other)

    def __pow__(self, n):
        if n < 0:
            raise ValueError('negative power of an Element')
        out = Element.one(self.field)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.terms == other.terms
        return self == self._coerce(other)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def map_coefficients(self, fn, field=None):
        field = self.field if field is None else field
        return Element(field, {w: fn(c) for w, c in self.terms.items()})

    def sorted_terms(self, key=None):
        key = key or (lambda w: (len(w), w))
        return sorted(self.terms.items(), key=lambda kv: key(kv[0]),
                      reverse=True)

    def format(self, key=None):
        """Text in the DSL expression grammar, largest word first."""
        if not self.terms:
            return '0'
        parts = []
        for word, coeff in self.sorted_terms(key):
            if coeff == self.field.one:
                parts.append(word_text(word))
            else:
                parts.append('(%s) * %s' % (self.field.format(coeff),
                                            word_text(word)))
        return ' + '.join(parts)

    def __repr__(self):
        return 'Element(%s)' % self.format()

    __str__ = format
