"""
Critical pairs of a rewrite system. Each overlap or inclusion of two
left-hand sides is reduced both ways; a pair whose two normal forms
differ is unresolved. With termination, an empty list means the
normal form is unique.
"""

from dataclasses import dataclass

from .elements import Element, word_text
from .utils import log


@dataclass
class CriticalPair:
    word: tuple
    first: int
    second: int
    kind: str
    left: Element
    right: Element

    @property
    def difference(self):
        return self.left - self.right

    @property
    def resolved(self):
        return self.left == self.right

    def describe(self, p):
        return '%s %s (rules %d, %d): %s vs %s' % (
            self.kind, word_text(self.word), self.first, self.second,
            p.format(self.left), p.format(self.right))


def overlaps(p):
    """Yield (word, i, j, kind, left, right) before reduction."""
    field = p.field
    for i, r1 in enumerate(p.rules):
        l1 = r1.lhs
        for j, r2 in enumerate(p.rules):
            l2 = r2.lhs
            # suffix of l1 equals prefix of l2
            for k in range(1, min(len(l1), len(l2))):
                if l1[-k:] == l2[:k]:
                    word = l1 + l2[k:]
                    left = r1.rhs * Element.word(field, l2[k:])
                    right = Element.word(field, l1[:-k]) * r2.rhs
                    yield word, i, j, 'overlap', left, right
            if i == j or len(l2) > len(l1):
                continue
            for s in range(len(l1) - len(l2) + 1):
                if l1[s:s + len(l2)] == l2:
                    left = r1.rhs
                    right = Element.word(field, l1[:s]) * r2.rhs \
                        * Element.word(field, l1[s + len(l2):])
                    yield l1, i, j, 'inclusion', left, right


def critical_pairs(p):
    out = []
    for word, i, j, kind, left, right in overlaps(p):
        out.append(CriticalPair(word, i, j, kind, p.normal_form(left),
                                p.normal_form(right)))
    return out


def confluence_check(p):
    """Unresolved critical pairs of p, in enumeration order."""
    pairs = critical_pairs(p)
    unresolved = [c for c in pairs if not c.resolved]
    log.debug('%s: %d critical pairs, %d unresolved', p.name, len(pairs),
              len(unresolved))
    return unresolved
