"""
Presentations of *-algebras by oriented rewrite rules, with the
normal form, the star operation and the validation report.

Words are compared by weighted deglex: total generator weight first,
then lexicographically by precedence rank (declaration order). Every
rule must rewrite its left-hand side into strictly smaller words.
"""

import heapq
from collections import defaultdict
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Tuple

from .elements import Element, word_from_text, word_text
from .utils import (NF_CACHE_LIMIT, ONE, FuelExhausted, PresentationError,
                    ScalarError, default_fuel, log)


@dataclass
class Generator:
    name: str
    weight: int = 1
    # None means self-adjoint
    star: Optional[Element] = None


class GeneratorTable(object):

    def __init__(self, generators):
        self.generators = list(generators)
        self.rank = {}
        for i, g in enumerate(self.generators):
            if g.name in self.rank:
                raise PresentationError('duplicate generator %r' % g.name)
            if g.weight < 1:
                raise PresentationError('generator %r needs a positive weight'
                                        % g.name)
            self.rank[g.name] = i
        self.weight = {g.name: g.weight for g in self.generators}

    @property
    def names(self):
        return [g.name for g in self.generators]

    def __contains__(self, name):
        return name in self.rank

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __getitem__(self, name):
        try:
            return self.generators[self.rank[name]]
        except KeyError:
            raise PresentationError('unknown generator %r' % name)

    def is_selfadjoint(self, name):
        return self[name].star is None

    def star_image(self, field, name):
        image = self[name].star
        return Element.gen(field, name) if image is None else image


@dataclass
class RewriteRule:
    lhs: Tuple[str, ...]
    rhs: Element

    def as_element(self):
        """lhs - rhs, the relation the rule encodes."""
        return Element.word(self.rhs.field, self.lhs) - self.rhs


@dataclass
class ValidationReport:
    termination: List[str] = dc_field(default_factory=list)
    unknown: List[str] = dc_field(default_factory=list)
    involutivity: List[str] = dc_field(default_factory=list)
    star_closure: List[str] = dc_field(default_factory=list)
    skipped: List[str] = dc_field(default_factory=list)

    @property
    def ok(self):
        return not (self.termination or self.unknown or self.involutivity
                    or self.star_closure)

    def failures(self):
        out = []
        for kind in ('termination', 'unknown', 'involutivity', 'star_closure'):
            out.extend('%s: %s' % (kind, msg) for msg in getattr(self, kind))
        return out


class Presentation(object):
    """
    Generators with star structure and rules over one ScalarField.
    `params` records the integer parameters (k, l) the presentation was
    built from; catalog entries set it, DSL documents leave it empty.
    """

    def __init__(self, name, field, generators, rules, params=None,
                 fuel=None):
        self.name = name
        self.field = field
        self.generators = generators if isinstance(generators, GeneratorTable) \
            else GeneratorTable(generators)
        self.rules = list(rules)
        self.params = dict(params or {})
        self.fuel = default_fuel() if fuel is None else fuel
        self._by_first = {}
        for rule in self.rules:
            if not rule.lhs:
                raise PresentationError('rule with empty left-hand side')
            self._by_first.setdefault(rule.lhs[0], []).append(rule)
        self._nf_cache = {}

    def __repr__(self):
        return 'Presentation(%s, %d generators, %d rules)' % (
            self.name, len(self.generators), len(self.rules))

    # term order

    def key(self, word):
        rank = self.generators.rank
        weight = self.generators.weight
        try:
            return (sum(weight[g] for g in word), tuple(rank[g] for g in word))
        except KeyError as e:
            raise PresentationError('unknown generator %s' % e)

    def word_less(self, u, v):
        return self.key(u) < self.key(v)

    # element construction

    def gen(self, name):
        if name not in self.generators:
            raise PresentationError('unknown generator %r' % name)
        return Element.gen(self.field, name)

    def elem(self, text, coeff=None):
        word = word_from_text(text)
        for g in word:
            if g not in self.generators:
                raise PresentationError('unknown generator %r' % g)
        return Element.word(self.field, word, coeff)

    def one(self):
        return Element.one(self.field)

    def scalar(self, value):
        return Element.constant(self.field, value)

    def format(self, e):
        return e.format(self.key)

    # rewriting

    def find_redex(self, word):
        """(position, rule) of the leftmost redex, or None."""
        for i, g in enumerate(word):
            for rule in self._by_first.get(g, ()):
                n = len(rule.lhs)
                if word[i:i + n] == rule.lhs:
                    return i, rule
        return None

    def is_irreducible(self, word):
        return self.find_redex(word) is None

    def normal_form(self, e, fuel=None):
        fuel = [self.fuel if fuel is None else fuel]
        parts = defaultdict(list)
        for word, coeff in e.terms.items():
            for w, c in self._nf_word(word, fuel).terms.items():
                parts[w].append(c * coeff)
        return Element(self.field, {w: self.field.sum_all(cs)
                                    for w, cs in parts.items()})

    def _nf_word(self, word, fuel):
        cached = self._nf_cache.get(word)
        if cached is not None:
            return cached
        zero = self.field.zero
        pending = {word: self.field.one}
        heap = [self._heap_key(word)]
        result = {}
        while heap:
            _, w = heapq.heappop(heap)
            c = pending.pop(w)
            if not c:
                continue
            known = self._nf_cache.get(w)
            if known is not None:
                for u, d in known.terms.items():
                    total = result.get(u, zero) + c * d
                    if total:
                        result[u] = total
                    else:
                        result.pop(u, None)
                continue
            redex = self.find_redex(w)
            if redex is None:
                total = result.get(w, zero) + c
                if total:
                    result[w] = total
                else:
                    result.pop(w, None)
                continue
            fuel[0] -= 1
            if fuel[0] < 0:
                raise FuelExhausted('normal form of %s exceeded the rewrite '
                                    'budget' % word_text(word))
            i, rule = redex
            head, tail = w[:i], w[i + len(rule.lhs):]
            for u, d in rule.rhs.terms.items():
                v = head + u + tail
                if v in pending:
                    pending[v] = pending[v] + c * d
                else:
                    pending[v] = c * d
                    heapq.heappush(heap, self._heap_key(v))
        nf = Element(self.field)
        nf.terms = result
        if len(self._nf_cache) >= NF_CACHE_LIMIT:
            self._nf_cache.clear()
        self._nf_cache[word] = nf
        return nf

    def _heap_key(self, word):
        weight, ranks = self.key(word)
        # max-heap on the term order; equal weights never nest as prefixes
        return (-weight, tuple(-r for r in ranks)), word

    # star structure

    def star_word(self, word):
        out = Element.one(self.field)
        for g in reversed(word):
            out = out * self.generators.star_image(self.field, g)
        return out

    def star_element(self, e):
        out = Element(self.field)
        for word, coeff in e.terms.items():
            out = out + self.star_word(word).scale(self.field.conjugate(coeff))
        return self.normal_form(out)

    # parameters

    def specialize(self, value):
        """The same presentation over Q with the parameter set to value."""
        field = self.field.specialized(value)
        convert = field.convert
        gens = [Generator(g.name, g.weight,
                          None if g.star is None
                          else g.star.map_coefficients(convert, field))
                for g in self.generators]
        rules = [RewriteRule(r.lhs, r.rhs.map_coefficients(convert, field))
                 for r in self.rules]
        return Presentation(self.name, field, gens, rules, self.params,
                            self.fuel)


def normal_form(p, e, fuel=None):
    return p.normal_form(e, fuel)


def star_element(p, e):
    return p.star_element(e)


def validate_presentation(p):
    report = ValidationReport()
    known = p.generators
    for g in known:
        if g.star is not None:
            bad = g.star.generators() - set(known.names)
            if bad:
                report.unknown.append('star image of %s uses %s'
                                      % (g.name, ', '.join(sorted(bad))))
    for rule in p.rules:
        text = '%s -> %s' % (word_text(rule.lhs), rule.rhs.format())
        bad = (set(rule.lhs) | rule.rhs.generators()) - set(known.names)
        if bad:
            report.unknown.append('%s uses %s' % (text, ', '.join(sorted(bad))))
            continue
        lkey = p.key(rule.lhs)
        if any(p.key(w) >= lkey for w in rule.rhs.terms):
            report.termination.append(text)
    if not report.ok:
        return report

    try:
        for g in known:
            twice = p.star_element(known.star_image(p.field, g.name))
            if twice != p.normal_form(p.gen(g.name)):
                report.involutivity.append('%s** = %s' % (g.name, p.format(twice)))
        for rule in p.rules:
            residue = p.star_element(rule.as_element())
            if residue:
                report.star_closure.append('star(%s) leaves %s' % (
                    word_text(rule.lhs), p.format(residue)))
    except ScalarError as e:
        report.skipped.append('star checks: %s' % e)
    log.debug('validated %s: %s', p.name, 'ok' if report.ok else
              report.failures())
    return report
