"""
Degree-one generalized Weyl algebras over K[a].

The data (kappa, chi, p) define pi(a) = kappa*a + chi and the algebra
generated by a, xp, xm with

    xp r = pi(r) xp,  xm r = pi^-1(r) xm,  xm xp = p(a),  xp xm = pi(p)(a).

Such an algebra is smooth (of dimension 2) exactly when p has no
repeated roots, i.e. when gcd(p, p') is constant.
"""

from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional

from qsmooth.algebra.elements import Element
from qsmooth.algebra.morphism import verify_automorphism
from qsmooth.algebra.presentation import Generator, Presentation, RewriteRule
from qsmooth.algebra.scalars import (format_poly, poly_compose,
                                     poly_coefficients, poly_degree,
                                     poly_derivative, poly_from_coefficients,
                                     poly_gcd)
from qsmooth.algebra.utils import GWAError, log

SMOOTH = 'smooth-dim-2'
NOT_SMOOTH = 'not-smooth'

# axiom families checked by gwa_match
TWIST = 'twist'
INVERSE_TWIST = 'inverse-twist'
BASE = 'base-polynomial'
PI_TWIST = 'pi-twist'


class GWASpec(object):

    def __init__(self, field, kappa, chi, p):
        kappa = field.convert(kappa)
        if not kappa:
            raise GWAError('kappa must be nonzero')
        self.field = field
        self.kappa = kappa
        self.chi = field.convert(chi)
        self.p = p

    def __repr__(self):
        return 'GWASpec(kappa=%s, chi=%s, p=%s)' % (
            self.field.format(self.kappa), self.field.format(self.chi),
            format_poly(self.field, self.p))

    def pi(self, f):
        return poly_compose(f, self.kappa, self.chi)

    def pi_inverse(self, f):
        inv = self.field.one / self.kappa
        return poly_compose(f, inv, -self.chi * inv)


def poly_element(field, f, a='a'):
    """f(a) as an Element."""
    out = Element(field)
    for i, c in enumerate(poly_coefficients(f)):
        if c:
            out = out + Element.word(field, (a,) * i, c)
    return out


def element_poly(field, e, a='a'):
    """Inverse of poly_element; None when e is not a polynomial in a."""
    coeffs = {}
    for word, c in e.terms.items():
        if any(g != a for g in word):
            return None
        coeffs[len(word)] = c
    top = max(coeffs) if coeffs else -1
    return poly_from_coefficients(
        field, [coeffs.get(i, field.zero) for i in range(top + 1)])


def gwa_presentation(s, name='gwa'):
    field = s.field
    a = Element.gen(field, 'a')
    xp = Element.gen(field, 'xp')
    xm = Element.gen(field, 'xm')
    weight = max(1, (poly_degree(s.p) + 1) // 2)
    gens = [Generator('a'), Generator('xp', weight, xm),
            Generator('xm', weight, xp)]
    inv = field.one / s.kappa
    rules = [
        RewriteRule(('xp', 'a'), (a.scale(s.kappa)
                                  + Element.one(field).scale(s.chi)) * xp),
        RewriteRule(('xm', 'a'), (a - Element.one(field).scale(s.chi))
                    .scale(inv) * xm),
        RewriteRule(('xm', 'xp'), poly_element(field, s.p)),
        RewriteRule(('xp', 'xm'), poly_element(field, s.pi(s.p))),
    ]
    return Presentation(name, field, gens, rules)


@dataclass
class GWACandidate:
    xp: str
    xm: str
    kappa: object = None
    chi: object = None
    p: object = None
    axioms: Dict[str, bool] = dc_field(default_factory=dict)

    @property
    def ok(self):
        return bool(self.axioms) and all(self.axioms.values()) \
            and len(self.axioms) == 4

    def spec(self, field):
        return GWASpec(field, self.kappa, self.chi, self.p)

    def to_json(self, field):
        out = {'xp': self.xp, 'xm': self.xm,
               'axioms': dict(self.axioms)}
        if self.kappa is not None:
            out['kappa'] = field.format(self.kappa)
            out['chi'] = field.format(self.chi)
        if self.p is not None:
            out['p'] = [field.format(c) for c in poly_coefficients(self.p)]
        return out


@dataclass
class GWAMatchReport:
    base: str
    generator: str
    candidates: List[GWACandidate] = dc_field(default_factory=list)

    @property
    def match(self):
        for c in self.candidates:
            if c.ok:
                return c
        return None

    @property
    def ok(self):
        return self.match is not None


def _twist(p, xp, a):
    """(kappa, chi) with NF(xp a) = (kappa a + chi) xp, or None."""
    e = p.normal_form(p.gen(xp) * p.gen(a))
    kappa = e.coefficient((a, xp))
    chi = e.coefficient((xp,))
    if set(e.terms) - {(a, xp), (xp,)} or not kappa:
        return None
    return kappa, chi


def _check_candidate(p, a, xp, xm):
    field = p.field
    cand = GWACandidate(xp, xm)
    twist = _twist(p, xp, a)
    cand.axioms[TWIST] = twist is not None
    if twist is None:
        return cand
    cand.kappa, cand.chi = twist
    inv = field.one / cand.kappa
    want = ((p.gen(a) - p.one().scale(cand.chi)).scale(inv)) * p.gen(xm)
    cand.axioms[INVERSE_TWIST] = \
        p.normal_form(p.gen(xm) * p.gen(a)) == p.normal_form(want)
    base = element_poly(field, p.normal_form(p.gen(xm) * p.gen(xp)), a)
    cand.axioms[BASE] = base is not None
    if base is None:
        return cand
    cand.p = base
    spec = GWASpec(field, cand.kappa, cand.chi, base)
    cand.axioms[PI_TWIST] = p.normal_form(p.gen(xp) * p.gen(xm)) == \
        p.normal_form(poly_element(field, spec.pi(base), a))
    return cand


def gwa_match(p, a, b):
    """Try both orientations (b, b*) and (b*, b) for (xp, xm)."""
    gens = p.generators
    if not gens.is_selfadjoint(a):
        raise GWAError('%s is not self-adjoint' % a)
    partner = gens.star_image(p.field, b)
    words = list(partner.terms)
    if len(words) != 1 or len(words[0]) != 1 or \
            partner.terms[words[0]] != p.field.one or words[0][0] == b:
        raise GWAError('%s has no star partner generator' % b)
    b_star = words[0][0]
    report = GWAMatchReport(a, b)
    for xp, xm in ((b, b_star), (b_star, b)):
        cand = _check_candidate(p, a, xp, xm)
        log.debug('%s: xp=%s xm=%s axioms %s', p.name, xp, xm, cand.axioms)
        report.candidates.append(cand)
    return report


def find_gwa_structure(p):
    """gwa_match over every (self-adjoint, starred) pair of generators."""
    gens = p.generators
    reports = []
    seen = set()
    for a in gens.names:
        if not gens.is_selfadjoint(a):
            continue
        for b in gens.names:
            if gens.is_selfadjoint(b) or b in seen:
                continue
            try:
                report = gwa_match(p, a, b)
            except GWAError:
                continue
            seen.add(b)
            seen.add(report.candidates[0].xm)
            reports.append(report)
    return reports


@dataclass
class SmoothnessVerdict:
    verdict: str
    p: object
    gcd: object

    @property
    def smooth(self):
        return self.verdict == SMOOTH


def smoothness_check(s):
    if not s.p:
        raise GWAError('p must be nonzero')
    g = poly_gcd(s.p, poly_derivative(s.p))
    verdict = SMOOTH if poly_degree(g) == 0 else NOT_SMOOTH
    return SmoothnessVerdict(verdict, s.p, g)


@dataclass
class NakayamaReport:
    conventions: Dict[str, bool] = dc_field(default_factory=dict)
    failures: Dict[str, List[str]] = dc_field(default_factory=dict)

    @property
    def verified(self):
        return [name for name, ok in self.conventions.items() if ok]

    @property
    def ok(self):
        return bool(self.verified)


def nakayama_images(s, pres, xp='xp', xm='xm', a='a', sign=1):
    """nu(xp) = kappa^sign xp, nu(xm) = kappa^-sign xm, nu(a) = a."""
    k = s.kappa if sign > 0 else s.field.one / s.kappa
    images = {g: pres.gen(g) for g in pres.generators.names}
    images[xp] = pres.gen(xp).scale(k)
    images[xm] = pres.gen(xm).scale(s.field.one / k)
    images[a] = pres.gen(a)
    return images


def nakayama_check(s, pres, xp='xp', xm='xm', a='a'):
    report = NakayamaReport()
    for label, sign in (('kappa^(+1)', 1), ('kappa^(-1)', -1)):
        result = verify_automorphism(
            pres, nakayama_images(s, pres, xp, xm, a, sign),
            check_star=False, name='nu')
        report.conventions[label] = result.ok
        report.failures[label] = result.failures()
    return report
