"""
Gradings by Z or Z/n. A DegreeGrading assigns a degree to every
generator; an InvolutiveGrading is the Z/2 grading by eigenspaces of
an order-two automorphism.
"""

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Dict, List

from qsmooth.algebra.elements import Element, word_text
from qsmooth.algebra.morphism import (MorphismSpec, apply_morphism,
                                      verify_automorphism)
from qsmooth.algebra.utils import GradingError


@dataclass(frozen=True)
class GradingGroup:
    # 0 stands for Z
    modulus: int = 0

    def __post_init__(self):
        if self.modulus < 0:
            raise GradingError('modulus must be >= 1 (or 0 for Z)')

    @classmethod
    def integers(cls):
        return cls(0)

    @classmethod
    def cyclic(cls, n):
        if n < 1:
            raise GradingError('Z/n needs n >= 1, got %d' % n)
        return cls(n)

    def reduce(self, g):
        return g % self.modulus if self.modulus else g

    def add(self, g, h):
        return self.reduce(g + h)

    def inverse(self, g):
        return self.reduce(-g)

    def times(self, n, g):
        return self.reduce(n * g)

    @property
    def identity(self):
        return 0

    @property
    def label(self):
        return 'Z/%d' % self.modulus if self.modulus else 'Z'

    def __str__(self):
        return self.label


@dataclass
class HomogeneityReport:
    grading: str
    violations: List[str] = dc_field(default_factory=list)

    @property
    def ok(self):
        return not self.violations


class DegreeGrading(object):

    def __init__(self, name, group, degrees):
        self.name = name
        self.group = group
        self.degrees = {g: group.reduce(d) for g, d in degrees.items()}

    def __repr__(self):
        return 'DegreeGrading(%s, %s)' % (self.name, self.group)

    def word_degree(self, word):
        try:
            return self.group.reduce(sum(self.degrees[g] for g in word))
        except KeyError as e:
            raise GradingError('grading %s has no degree for %s'
                               % (self.name, e))

    def degree(self, p, e):
        """Degree of e, or None when e is not homogeneous."""
        degrees = {self.word_degree(w) for w in e.terms}
        if len(degrees) > 1:
            return None
        return degrees.pop() if degrees else self.group.identity

    def check_presentation(self, p):
        missing = [g for g in p.generators.names if g not in self.degrees]
        if missing:
            raise GradingError('grading %s has no degree for %s'
                               % (self.name, ', '.join(missing)))

    def leg_failures(self, p, t, left, right):
        out = []
        for (u, v) in t.terms:
            du, dv = self.word_degree(u), self.word_degree(v)
            if du != left or dv != right:
                out.append('%s (x) %s has degrees (%s, %s), want (%s, %s)'
                           % (word_text(u), word_text(v), du, dv, left, right))
        return out


class InvolutiveGrading(object):
    group = GradingGroup(2)

    def __init__(self, name, images):
        self.name = name
        self.images = dict(images)
        self._spec = None

    def __repr__(self):
        return 'InvolutiveGrading(%s)' % self.name

    def sigma(self, p):
        if self._spec is None or self._spec.source is not p:
            self._spec = MorphismSpec(self.name, p, p, self.images)
        return self._spec

    def apply(self, p, e):
        return apply_morphism(self.sigma(p), e)

    def verify(self, p):
        return verify_automorphism(p, self.images, order=2, name=self.name)

    def check_presentation(self, p):
        self.sigma(p)

    def degree(self, p, e):
        e = p.normal_form(e)
        image = self.apply(p, e)
        if image == e:
            return 0
        if image == -e:
            return 1
        return None

    def leg_failures(self, p, t, left, right):
        from .tensor import tensor_map_leg
        out = []
        for leg, want in ((0, left), (1, right)):
            image = tensor_map_leg(p, t, leg, lambda e: self.apply(p, e))
            expected = t if want == 0 else t.scale(-p.field.one)
            if image != expected:
                out.append('leg %d is not in the %s eigenspace of %s'
                           % (leg + 1, 'even' if want == 0 else 'odd',
                              self.name))
        return out


def check_rule_homogeneity(p, g):
    """Every word on both sides of every rule has one degree."""
    g.check_presentation(p)
    report = HomogeneityReport(g.name)
    if isinstance(g, InvolutiveGrading):
        report.violations.extend(g.verify(p).failures())
        return report
    for rule in p.rules:
        want = g.word_degree(rule.lhs)
        for w in rule.rhs.terms:
            d = g.word_degree(w)
            if d != want:
                report.violations.append('%s -> %s: %s has degree %s, lhs %s'
                                         % (word_text(rule.lhs),
                                            p.format(rule.rhs), word_text(w),
                                            d, want))
    return report


def degree_decompose(p, g, e):
    out = {}
    for word, coeff in e.terms.items():
        d = g.word_degree(word)
        out.setdefault(d, Element(p.field))
        out[d] = out[d] + Element.word(p.field, word, coeff)
    if not out:
        out[g.group.identity] = Element(p.field)
    return out


def involutive_decompose(p, s, e):
    """(even, odd) parts of e for the involution s."""
    e = p.normal_form(e)
    image = s.apply(p, e)
    half = Fraction(1, 2)
    return (e + image).scale(half), (e - image).scale(half)
