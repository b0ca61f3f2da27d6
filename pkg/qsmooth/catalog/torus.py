"""
The noncommutative torus on unitaries U, V with U V = lam V U, and the
pillow: its Z/2 grading by the flip sigma(U) = U*, sigma(V) = V*.

Normal words are U^m V^n, where a negative power is a run of U* or V*.
"""

from dataclasses import dataclass

from qsmooth.algebra.elements import Element
from qsmooth.grading.connection import AnsatzTerm, ConnectionAnsatz
from qsmooth.grading.groups import InvolutiveGrading
from qsmooth.grading.tensor import TensorElement

from .utils import PresentationBuilder, lambda_field


def torus():
    b = PresentationBuilder('torus', lambda_field())
    b.pair('U').pair('V')
    for g in ('U', 'V'):
        b.rule('%s.%s*' % (g, g), 1)
        b.rule('%s*.%s' % (g, g), 1)
    b.rule('V.U', b.x('U.V', b.q(-1)))
    b.rule('V.U*', b.x('U*.V', b.q(1)))
    b.rule('V*.U', b.x('U.V*', b.q(1)))
    b.rule('V*.U*', b.x('U*.V*', b.q(-1)))
    return b.build()


SIGMA = {'U': 'U*', 'U*': 'U', 'V': 'V*', 'V*': 'V'}


def sigma_grading(p):
    return InvolutiveGrading('sigma', {g: p.gen(h) for g, h in SIGMA.items()})


def hats(p):
    """x^ = U - U*, y^ = V - V*, z^ = U V* - U* V and z = U V* + U* V."""
    e = p.elem
    return {
        'xhat': e('U') - e('U*'),
        'yhat': e('V') - e('V*'),
        'zhat': e('U.V*') - e('U*.V'),
        'z': e('U.V*') + e('U*.V'),
    }


def pillow_coefficients(p):
    """Fixed leg coefficients (1, 1, -lam^-1, -1)."""
    f = p.field
    return [f.one, f.one, -f.power(-1), -f.one]


def pillow_legs(p):
    h = hats(p)
    return [(h['xhat'], h['xhat']), (h['yhat'], h['yhat']),
            (h['zhat'], h['zhat']), (p.normal_form(h['xhat'] * h['z']),
                                     h['yhat'])]


def pillow_ansatz(p):
    terms = [AnsatzTerm('c', left, right, coeff)
             for coeff, (left, right) in zip(pillow_coefficients(p),
                                             pillow_legs(p))]
    return ConnectionAnsatz('sigma', terms)


def pillow_element(p):
    """x^^2 + y^^2 - lam^-1 z^^2 - x^ z y^, a nonzero constant."""
    out = Element(p.field)
    for coeff, (left, right) in zip(pillow_coefficients(p), pillow_legs(p)):
        out = out + (left * right).scale(coeff)
    return p.normal_form(out)


def pillow_constant(p):
    """2 (lam^-2 - 1)."""
    f = p.field
    return (f.power(-2) - f.one) * 2


@dataclass
class PillowData:
    sigma: InvolutiveGrading
    xhat: Element
    yhat: Element
    zhat: Element
    z: Element
    constant: object
    omega: TensorElement
    even_generators: tuple


def pillow_data(p):
    h = hats(p)
    c = p.field.one / pillow_constant(p)
    omega = TensorElement.from_pairs(
        p, [(coeff * c, left, right)
            for coeff, (left, right) in zip(pillow_coefficients(p),
                                            pillow_legs(p))])
    even = (p.elem('U') + p.elem('U*'), p.elem('V') + p.elem('V*'))
    return PillowData(sigma_grading(p), h['xhat'], h['yhat'], h['zhat'],
                      h['z'], pillow_constant(p), omega, even)
