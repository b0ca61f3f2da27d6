"""
The quantum 3-sphere and the quantum lens spaces L(l; 1, l).

Generators are declared base first (beta before alpha, d before c) so
that the relations alpha alpha* + beta beta* = 1 orient towards the
beta letters. Normal words of the sphere are beta^j beta*^k alpha^i
and beta^j beta*^k alpha*^i.
"""

from qsmooth.grading.connection import AnsatzTerm, ConnectionAnsatz
from qsmooth.grading.groups import DegreeGrading, GradingGroup

from .utils import PresentationBuilder, check_l, poch, q_field


def su2q():
    b = PresentationBuilder('su2q', q_field())
    b.pair('beta').pair('alpha')
    b.rule('alpha.beta', b.x('beta.alpha', b.q(1)))
    b.rule('alpha.beta*', b.x('beta*.alpha', b.q(1)))
    b.rule('beta*.beta', b.x('beta.beta*'))
    b.rule('alpha.alpha*', b.one() - b.x('beta.beta*'))
    b.rule('alpha*.alpha', b.one() - b.x('beta.beta*', b.q(-2)))
    b.rule('alpha*.beta', b.x('beta.alpha*', b.q(-1)))
    b.rule('alpha*.beta*', b.x('beta*.alpha*', b.q(-1)))
    return b.build()


def lens(l):
    check_l(l)
    b = PresentationBuilder('lens', q_field(), {'l': l})
    b.pair('d').pair('c', weight=l)
    a = b.x('d.d*')
    b.rule('c.d', b.x('d.c', b.q(l)))
    b.rule('c.d*', b.x('d*.c', b.q(l)))
    b.rule('d*.d', b.x('d.d*'))
    b.rule('c.c*', poch(b.field, a, l))
    b.rule('c*.c', poch(b.field, a, l, first=-2, step=-2))
    b.rule('c*.d', b.x('d.c*', b.q(-l)))
    b.rule('c*.d*', b.x('d*.c*', b.q(-l)))
    return b.build()


def su2q_zl(l):
    check_l(l)
    return DegreeGrading('Zl', GradingGroup.cyclic(l), {
        'alpha': 1, 'alpha*': l - 1, 'beta': 0, 'beta*': 0})


def lens_z(l):
    return DegreeGrading('Z', GradingGroup.integers(), {
        'c': 1, 'd*': 1, 'c*': -1, 'd': -1})


def lemma_ansatz(p, alpha, base, l, name):
    """
    x1 alpha^(l-1) (x) alpha*^(l-1) + sum_{p<l} y_p base^(p-1) alpha* (x) alpha,
    the ansatz whose system has the q-binomial coefficients in its first
    column.
    """
    x = p.gen(alpha)
    xs = p.gen(alpha + '*')
    terms = [AnsatzTerm('x1', p.normal_form(x ** (l - 1)),
                        p.normal_form(xs ** (l - 1)))]
    for k in range(1, l):
        terms.append(AnsatzTerm('y%d' % k,
                                p.normal_form(base ** (k - 1) * xs), x))
    return ConnectionAnsatz(name, terms)


def su2q_lemma_ansatz(p, l):
    return lemma_ansatz(p, 'alpha', p.elem('beta.beta*'), check_l(l), 'Zl')
