"""
Exact scalars: the coefficient field Q(t) of a formal parameter t
(q for the spheres and Weyl algebras, lam for the torus), its
involution, evaluation at rational points, and univariate
polynomials over it in the auxiliary commuting variable a.

Scalars are plain sympy field elements. sympy keeps every rational
function as numerator/denominator with coprime integer coefficients
and a positive leading denominator coefficient, so equality of
elements is equality of representations.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from tokenize import TokenError

from sympy import QQ, Integer, Rational, Symbol, nan, oo, zoo
from sympy.parsing.sympy_parser import (convert_xor, parse_expr,
                                        standard_transformations)
from sympy.polys.fields import field as frac_field
from sympy.polys.polyerrors import CoercionFailed
from sympy.polys.rings import ring

from .utils import MODES, REAL, UNITARY, PoleError, PolyError, ScalarError

_SCALAR_CHARS = re.compile(r'^[0-9A-Za-z_+\-*/^(). ]*$')
_NAME = re.compile(r'[A-Za-z_][A-Za-z0-9_]*')

POLY_VARIABLE = 'a'


@dataclass(frozen=True)
class Parameter:
    name: str
    mode: str = REAL

    def __post_init__(self):
        if self.mode not in MODES:
            raise ScalarError('unknown parameter mode %r' % self.mode)
        if not _NAME.fullmatch(self.name) or self.name == POLY_VARIABLE:
            raise ScalarError('bad parameter name %r' % self.name)


class ScalarField:
    """
    Q(t) for one Parameter. With `point` set, the field is Q itself and
    stands for the specialization t = point; such a field converts
    symbolic scalars by evaluation.
    """

    def __init__(self, parameter, point=None):
        self.parameter = parameter
        self.point = point
        self.symbol = Symbol(parameter.name)
        if point is None:
            self.frac_field, self.gen = frac_field(parameter.name, QQ)
            self.domain = self.frac_field.to_domain()
            self._ring_gen = self.frac_field.ring.gens[0]
        else:
            self.frac_field = None
            self.gen = None
            self.domain = QQ
        self.one = self.domain.one
        self.zero = self.domain.zero
        self._poly_ring = None

    @property
    def symbolic(self):
        return self.point is None

    def __eq__(self, other):
        return (isinstance(other, ScalarField)
                and self.parameter == other.parameter
                and self.point == other.point)

    def __hash__(self):
        return hash((self.parameter, self.point))

    def __repr__(self):
        if self.symbolic:
            return 'ScalarField(Q(%s), %s)' % (self.parameter.name,
                                               self.parameter.mode)
        return 'ScalarField(Q, %s=%s)' % (self.parameter.name, self.point)

    def convert(self, value):
        """int, Fraction, text or field element -> field element."""
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, bool):
            raise ScalarError('cannot convert bool to a scalar')
        if isinstance(value, int):
            return self.domain.from_sympy(Integer(value))
        if isinstance(value, Fraction):
            return self.domain.from_sympy(
                Rational(value.numerator, value.denominator))
        if self.domain.of_type(value):
            return value
        if not self.symbolic and self.parameter_field().domain.of_type(value):
            return self.domain.from_sympy(
                Rational(*_as_pair(self.parameter_field().evaluate(value, self.point))))
        raise ScalarError('cannot convert %r to a scalar' % (value,))

    def parameter_field(self):
        """The symbolic field this one specializes (itself if symbolic)."""
        if self.symbolic:
            return self
        return scalar_field(self.parameter.name, self.parameter.mode)

    def specialized(self, point):
        if not self.symbolic:
            raise ScalarError('field is already specialized')
        return ScalarField(self.parameter, Fraction(point))

    def power(self, n):
        """t^n for any integer n."""
        if not self.symbolic:
            return self.convert(self.point) ** n
        if n >= 0:
            return self.gen ** n
        return self.one / self.gen ** (-n)

    def is_zero(self, x):
        return not x

    def sum_all(self, values):
        """
        Sum of many scalars. Numerators over a shared denominator are
        added as polynomials, so cancellation runs once per distinct
        denominator instead of once per summand.
        """
        values = list(values)
        if len(values) == 1:
            return values[0]
        if not self.symbolic:
            return sum(values, self.zero)
        groups = {}
        for x in values:
            d = x.denom
            groups[d] = groups[d] + x.numer if d in groups else x.numer
        total = self.zero
        for d, n in groups.items():
            if n:
                total = total + self.frac_field.new(n, d)
        return total

    def conjugate(self, x):
        if self.parameter.mode == REAL or not x:
            return x
        if not self.symbolic:
            raise ScalarError('conjugation is not defined after '
                              'specializing a unitary parameter')
        return _reverse(self, x.numer) / _reverse(self, x.denom) \
            * self.power(x.denom.degree() - x.numer.degree())

    def evaluate(self, x, v):
        """Exact value of x at t = v, as a Fraction."""
        if not self.symbolic:
            return Fraction(*_as_pair(x))
        v = Fraction(v)
        point = QQ(v.numerator, v.denominator)
        denom = x.denom.evaluate(self._ring_gen, point)
        if not denom:
            raise PoleError('%s has a pole at %s = %s' % (
                self.format(x), self.parameter.name, v))
        return Fraction(*_as_pair(x.numer.evaluate(self._ring_gen, point) / denom))

    def numerator(self, x):
        """Numerator of x normalized so that the denominator is monic."""
        if not self.symbolic:
            return self.convert(Fraction(*_as_pair(x)))
        return x.numer.quo_ground(x.denom.LC)

    def denominator(self, x):
        if not self.symbolic:
            return self.one
        return x.denom.monic()

    def format(self, x):
        if not self.symbolic:
            num, den = _as_pair(x)
            return str(num) if den == 1 else '%d/%d' % (num, den)
        numer = self._format_poly(x.numer)
        if x.denom == self.frac_field.ring.one:
            return numer
        denom = self._format_poly(x.denom)
        if ' ' in numer:
            numer = '(%s)' % numer
        if not denom.isdigit():
            denom = '(%s)' % denom
        return '%s/%s' % (numer, denom)

    def _format_poly(self, p):
        if not p:
            return '0'
        name = self.parameter.name
        out = []
        for (deg,), coeff in sorted(p.items(), key=lambda kv: -kv[0][0]):
            num, den = _as_pair(coeff)
            assert den == 1
            mag = abs(num)
            if deg == 0:
                text = str(mag)
            else:
                mono = name if deg == 1 else '%s^%d' % (name, deg)
                text = mono if mag == 1 else '%d*%s' % (mag, mono)
            if not out:
                out.append('-' + text if num < 0 else text)
            else:
                out.append(('- ' if num < 0 else '+ ') + text)
        return ' '.join(out)

    def parse(self, text):
        text = text.strip()
        if not text or not _SCALAR_CHARS.match(text):
            raise ScalarError('malformed scalar %r' % text)
        for name in _NAME.findall(text):
            if name != self.parameter.name:
                raise ScalarError('malformed scalar %r: unknown name %r'
                                  % (text, name))
        try:
            expr = parse_expr(
                text, local_dict={self.parameter.name: self.symbol},
                transformations=standard_transformations + (convert_xor,))
        except (SyntaxError, TokenError, TypeError, ValueError,
                AttributeError, ZeroDivisionError) as e:
            raise ScalarError('malformed scalar %r: %s' % (text, e))
        if expr.has(zoo, oo, nan) or expr.has(Symbol) and \
                expr.free_symbols != {self.symbol}:
            raise ScalarError('malformed scalar %r' % text)
        try:
            if self.symbolic:
                return self.frac_field.from_expr(expr)
            return self.convert(self.parameter_field().frac_field.from_expr(expr))
        except (ValueError, CoercionFailed, ZeroDivisionError) as e:
            raise ScalarError('malformed scalar %r: %s' % (text, e))

    def poly_ring(self):
        """(R, a) with R = K[a]."""
        if self._poly_ring is None:
            self._poly_ring = ring(POLY_VARIABLE, self.domain)
        return self._poly_ring


@lru_cache(maxsize=None)
def scalar_field(name='q', mode=REAL):
    return ScalarField(Parameter(name, mode))


def _as_pair(x):
    return int(x.numerator), int(x.denominator)


def _reverse(field, p):
    """t^deg(p) * p(1/t) as a field element."""
    deg = p.degree()
    ring_ = field.frac_field.ring
    rev = ring_({(deg - m[0],): c for m, c in p.items()})
    return field.frac_field(rev)


def scalar_arith(op, x, y=None):
    if op == 'add':
        return x + y
    if op == 'sub':
        return x - y
    if op == 'mul':
        return x * y
    if op == 'neg':
        return -x
    if op in ('inv', 'div'):
        den = x if op == 'inv' else y
        if not den:
            raise ScalarError('inversion of zero')
        return 1 / x if op == 'inv' else x / y
    raise ScalarError('unknown scalar operation %r' % op)


# univariate polynomials over the scalar field

def poly_from_coefficients(field, coefficients):
    R, a = field.poly_ring()
    result = R.zero
    for i, c in enumerate(coefficients):
        if c:
            result += a ** i * field.convert(c)
    return result


def poly_coefficients(f):
    """[c_0, ..., c_deg]; the zero polynomial gives []."""
    if not f:
        return []
    zero = f.ring.domain.zero
    return [f.get((i,), zero) for i in range(f.degree() + 1)]


def poly_degree(f):
    return f.degree() if f else -1


def poly_derivative(f):
    return f.diff(f.ring.gens[0])


def poly_gcd(f, g):
    if not f and not g:
        raise PolyError('gcd(0, 0) is undefined')
    return f.gcd(g).monic()


def poly_compose(f, kappa, chi):
    """f(kappa*a + chi)."""
    a = f.ring.gens[0]
    return f.compose(a, a * kappa + chi)


def poly_divides(g, f):
    return not f.rem(g)


def format_poly(field, f):
    if not f:
        return '0'
    out = []
    for i in range(f.degree(), -1, -1):
        c = f.get((i,))
        if not c:
            continue
        mono = '' if i == 0 else (POLY_VARIABLE if i == 1
                                  else '%s^%d' % (POLY_VARIABLE, i))
        if not mono:
            out.append('(%s)' % field.format(c))
        elif c == field.one:
            out.append(mono)
        else:
            out.append('(%s)*%s' % (field.format(c), mono))
    return ' + '.join(out)
