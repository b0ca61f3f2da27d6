"""
The algebras A(k, l): generated by a self-adjoint a and b, b* with

    b a = q^(2l) a b,   b b* = q^(2kl) a^k (a; q^2)_l,
    b* b = a^k prod_{m=1..l} (1 - q^(-2m) a).

A(1, l) is the quantum teardrop WP(1, l). With `printed=True` the
commutation exponent is 2kl instead of 2l; that variant is only
confluent for k = 1.
"""

from math import gcd

from qsmooth.weyl.gwa import GWASpec

from .utils import PresentationBuilder, check_k, check_l, poch, q_field


def weight_of_b(k, l):
    return max(1, (k + l + 1) // 2)


def algebra_a(k, l, printed=False, name='A'):
    check_k(k)
    check_l(l)
    b = PresentationBuilder(name, q_field(), {'k': k, 'l': l})
    b.gen('a').pair('b', weight=weight_of_b(k, l))
    a = b.x('a')
    e = 2 * k * l if printed else 2 * l
    b.rule('b.a', b.x('a.b', b.q(e)))
    b.rule('b*.a', b.x('a.b*', b.q(-e)))
    b.rule('b.b*', (a ** k * poch(b.field, a, l)).scale(b.q(2 * k * l)))
    b.rule('b*.b', a ** k * poch(b.field, a, l, first=-2, step=-2))
    return b.build()


def teardrop(l):
    return algebra_a(1, l, name='wp')


def gwa_polynomial(k, l, field=None):
    """a^k prod_{m=1..l} (1 - q^(-2m) a)."""
    field = field or q_field()
    R, a = field.poly_ring()
    f = a ** k
    for m in range(1, l + 1):
        f = f * (R.one - a * field.power(-2 * m))
    return f


def gwa_spec(k, l, field=None):
    field = field or q_field()
    return GWASpec(field, field.power(2 * l), 0, gwa_polynomial(k, l, field))


def is_spindle(k, l):
    return k >= 1 and gcd(k, l) == 1


def is_even_plane(k, l):
    return k == 0 and l % 2 == 1
