"""
The Podles sphere, its Laurent extension S2[u, u^-1], the 3-manifold
Sigma3 with its central unitary xi, the quotient Sigma3(l; -) and the
quantum real projective plane RP2(l; -).

Star images of zeta1 and y are not generators: zeta1* = zeta1 xi and
y* = y z.
"""

from qsmooth.grading.connection import AnsatzTerm, ConnectionAnsatz
from qsmooth.grading.groups import DegreeGrading, GradingGroup

from .spheres import lemma_ansatz
from .utils import PresentationBuilder, check_l, poch, q_field


def _podles(b):
    b.rule('z0.z1', b.x('z1.z0', b.q(1)))
    b.rule('z0*.z1', b.x('z1.z0*', b.q(-1)))
    b.rule('z0.z0*', b.one() - b.x('z1.z1'))
    b.rule('z0*.z0', b.one() - b.x('z1.z1', b.q(-2)))


def s2():
    b = PresentationBuilder('s2', q_field())
    b.gen('z1').pair('z0')
    _podles(b)
    return b.build()


def s2u():
    b = PresentationBuilder('s2u', q_field())
    b.gen('z1').pair('z0').pair('u')
    _podles(b)
    b.commute('u', ['z1', 'z0', 'z0*'])
    b.commute('u*', ['z1', 'z0', 'z0*'])
    b.rule('u.u*', 1)
    b.rule('u*.u', 1)
    return b.build()


def sigma3():
    b = PresentationBuilder('sigma3', q_field())
    b.gen('zeta1', star='zeta1.xi').pair('zeta0', weight=2).pair('xi')
    a = b.x('zeta1.zeta1.xi')
    b.rule('zeta0.zeta1', b.x('zeta1.zeta0', b.q(1)))
    b.rule('zeta0*.zeta1', b.x('zeta1.zeta0*', b.q(-1)))
    b.rule('zeta0.zeta0*', b.one() - a)
    b.rule('zeta0*.zeta0', b.one() - a.scale(b.q(-2)))
    b.commute('xi', ['zeta1', 'zeta0', 'zeta0*'])
    b.commute('xi*', ['zeta1', 'zeta0', 'zeta0*'])
    b.rule('xi.xi*', 1)
    b.rule('xi*.xi', 1)
    return b.build()


def sigma3_minus(l):
    check_l(l)
    b = PresentationBuilder('sigma3l', q_field(), {'l': l})
    b.gen('y', star='y.z').pair('x', weight=2 * l).pair('z')
    a = b.x('y.y.z')
    b.rule('x.y', b.x('y.x', b.q(l)))
    b.rule('x*.y', b.x('y.x*', b.q(-l)))
    b.rule('x.x*', poch(b.field, a, l))
    b.rule('x*.x', poch(b.field, a, l, first=-2, step=-2))
    b.commute('z', ['y', 'x', 'x*'])
    b.commute('z*', ['y', 'x', 'x*'])
    b.rule('z.z*', 1)
    b.rule('z*.z', 1)
    return b.build()


def rp2_minus(l):
    check_l(l)
    b = PresentationBuilder('rp2minus', q_field(), {'l': l})
    b.gen('a').pair('b', weight=l + 1).pair('c', weight=2 * l + 1)
    a = b.x('a')
    P = poch(b.field, a, l)
    Q = poch(b.field, a, l, first=-2, step=-2)
    bb, bs, cc, cs = b.x('b'), b.x('b*'), b.x('c'), b.x('c*')
    b.rule('b.a', b.x('a.b', b.q(2 * l)))
    b.rule('c.a', b.x('a.c', b.q(4 * l)))
    b.rule('b.b', b.x('a.c', b.q(3 * l)))
    b.rule('c.b', b.x('b.c', b.q(2 * l)))
    b.rule('b.b*', (a * P).scale(b.q(2 * l)))
    b.rule('b*.b', a * Q)
    b.rule('b*.c', (Q * bb).scale(b.q(-l)))
    b.rule('c.b*', (bb * P).scale(b.q(l)))
    b.rule('c.c*', poch(b.field, a, 2 * l))
    b.rule('c*.c', poch(b.field, a, 2 * l, first=-2, step=-2))
    b.rule('b*.a', b.x('a.b*', b.q(-2 * l)))
    b.rule('c*.a', b.x('a.c*', b.q(-4 * l)))
    b.rule('b*.b*', b.x('a.c*', b.q(-l)))
    b.rule('c*.b*', b.x('b*.c*', b.q(-2 * l)))
    b.rule('c*.b', (bs * Q).scale(b.q(-l)))
    b.rule('b.c*', (P * bs).scale(b.q(l)))
    return b.build()


# gradings

def s2u_z2():
    return DegreeGrading('Z2', GradingGroup.cyclic(2), {
        'z1': 1, 'z0': 1, 'z0*': 1, 'u': 1, 'u*': 1})


def sigma3_zl(l):
    check_l(l)
    return DegreeGrading('Zl', GradingGroup.cyclic(l), {
        'zeta0': 1, 'zeta0*': l - 1, 'zeta1': 0, 'xi': 0, 'xi*': 0})


def sigma3_minus_z():
    return DegreeGrading('Z', GradingGroup.integers(), {
        'x': 1, 'y': 1, 'x*': -1, 'z': -2, 'z*': 2})


# connection ansatze

def s2u_z2_ansatz(p):
    """c0 z0 (x) z0* + c1 z1 (x) z1; mu = 1 forces c0 = c1 = 1."""
    return ConnectionAnsatz('Z2', [
        AnsatzTerm('c0', p.gen('z0'), p.gen('z0*')),
        AnsatzTerm('c1', p.gen('z1'), p.gen('z1')),
    ])


def sigma3_lemma_ansatz(p, l):
    return lemma_ansatz(p, 'zeta0', p.elem('zeta1.zeta1.xi'), check_l(l),
                        'Zl')
