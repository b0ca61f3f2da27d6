"""
Algebra maps between presentations, given on generators.
"""

from dataclasses import dataclass, field as dc_field
from typing import Dict, List

from .elements import Element, word_text
from .utils import PresentationError


@dataclass
class MorphismSpec:
    name: str
    source: object
    target: object
    images: Dict[str, Element]

    def __post_init__(self):
        missing = [g for g in self.source.generators.names
                   if g not in self.images]
        if missing:
            raise PresentationError('%s: no image for %s'
                                    % (self.name, ', '.join(missing)))
        if self.source.field != self.target.field:
            raise PresentationError('%s: source and target scalars differ'
                                    % self.name)

    def image_of(self, name):
        return self.images[name]


@dataclass
class MorphismReport:
    name: str
    rules: List[str] = dc_field(default_factory=list)
    star: List[str] = dc_field(default_factory=list)
    order: List[str] = dc_field(default_factory=list)
    checked: int = 0

    @property
    def ok(self):
        return not (self.rules or self.star or self.order)

    def failures(self):
        return self.rules + self.star + self.order


def _apply_word(m, word):
    t = m.target
    out = Element.one(t.field)
    for g in word:
        out = t.normal_form(out * m.images[g])
    return out


def apply_morphism(m, e):
    t = m.target
    out = Element(t.field)
    for word, coeff in e.terms.items():
        out = out + _apply_word(m, word).scale(coeff)
    return out


def identity_morphism(p):
    return MorphismSpec('id', p, p, {g: p.gen(g) for g in p.generators.names})


def compose(first, second, name=None):
    """second after first."""
    images = {g: apply_morphism(second, first.images[g])
              for g in first.source.generators.names}
    return MorphismSpec(name or '%s.%s' % (second.name, first.name),
                        first.source, second.target, images)


def verify_morphism(m, check_star=True):
    s, t = m.source, m.target
    report = MorphismReport(m.name)
    for rule in s.rules:
        residue = apply_morphism(m, rule.as_element())
        report.checked += 1
        if residue:
            report.rules.append('%s -> %s leaves %s' % (
                word_text(rule.lhs), s.format(rule.rhs), t.format(residue)))
    if check_star:
        for g in s.generators.names:
            lhs = apply_morphism(m, s.generators.star_image(s.field, g))
            rhs = t.star_element(apply_morphism(m, s.gen(g)))
            report.checked += 1
            if lhs != rhs:
                report.star.append('star of %s: %s vs %s' % (
                    g, t.format(lhs), t.format(rhs)))
    return report


def verify_automorphism(p, images, order=None, check_star=True, name='auto'):
    m = MorphismSpec(name, p, p, images)
    report = verify_morphism(m, check_star=check_star)
    if order is not None:
        for g in p.generators.names:
            x = p.gen(g)
            for _ in range(order):
                x = apply_morphism(m, x)
            if x != p.normal_form(p.gen(g)):
                report.order.append('%s^%d(%s) = %s' % (name, order, g,
                                                        p.format(x)))
    return report
