"""
Built-in presentations, gradings, connection ansatze and embeddings.

Entries are built on demand and cached per parameter tuple. Before an
entry is handed out it is validated and, unless it is a printed variant,
its critical pairs are all checked to resolve.
"""

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Callable, Dict, Optional

from qsmooth.algebra.confluence import confluence_check
from qsmooth.algebra.presentation import validate_presentation
from qsmooth.algebra.utils import CatalogError, log

from . import seifert, spheres, torus, tower, weighted
from .utils import DEFAULT_K, DEFAULT_L, check_k, check_l


@dataclass
class CatalogEntry:
    name: str
    description: str
    build: Callable
    uses_l: bool = False
    uses_k: bool = False
    gradings: Dict[str, Callable] = dc_field(default_factory=dict)
    ansatze: Dict[str, Callable] = dc_field(default_factory=dict)
    # (k, l) filter for aliases of A(k, l)
    accepts: Optional[Callable] = None


ENTRIES = {e.name: e for e in [
    CatalogEntry('torus', 'noncommutative torus, U V = lam V U',
                 lambda k, l, printed: torus.torus(),
                 gradings={'sigma': lambda p, k, l: torus.sigma_grading(p)},
                 ansatze={'sigma': lambda p, k, l: torus.pillow_ansatz(p)}),
    CatalogEntry('su2q', 'quantum 3-sphere',
                 lambda k, l, printed: spheres.su2q(),
                 gradings={'Zl': lambda p, k, l: spheres.su2q_zl(l)},
                 ansatze={'Zl': lambda p, k, l:
                          spheres.su2q_lemma_ansatz(p, l)}),
    CatalogEntry('lens', 'quantum lens space L(l; 1, l)',
                 lambda k, l, printed: spheres.lens(l), uses_l=True,
                 gradings={'Z': lambda p, k, l: spheres.lens_z(l)}),
    CatalogEntry('A', 'A(k, l), a generalized Weyl algebra over K[a]',
                 lambda k, l, printed: weighted.algebra_a(k, l, printed),
                 uses_l=True, uses_k=True),
    CatalogEntry('wp', 'quantum teardrop WP(1, l) = A(1, l)',
                 lambda k, l, printed: weighted.teardrop(l), uses_l=True),
    CatalogEntry('spindle', 'quantum spindle A(k, l), gcd(k, l) = 1',
                 lambda k, l, printed: weighted.algebra_a(
                     k, l, printed, name='spindle'),
                 uses_l=True, uses_k=True, accepts=weighted.is_spindle),
    CatalogEntry('evenwp', 'even real weighted projective plane A(0, l), '
                 'l odd',
                 lambda k, l, printed: weighted.algebra_a(
                     0, l, printed, name='evenwp'),
                 uses_l=True,
                 accepts=lambda k, l: weighted.is_even_plane(0, l)),
    CatalogEntry('s2', 'Podles sphere', lambda k, l, printed: seifert.s2()),
    CatalogEntry('s2u', 'Podles sphere with a central unitary u',
                 lambda k, l, printed: seifert.s2u(),
                 gradings={'Z2': lambda p, k, l: seifert.s2u_z2()},
                 ansatze={'Z2': lambda p, k, l: seifert.s2u_z2_ansatz(p)}),
    CatalogEntry('sigma3', 'Sigma3 with central unitary xi',
                 lambda k, l, printed: seifert.sigma3(),
                 gradings={'Zl': lambda p, k, l: seifert.sigma3_zl(l)},
                 ansatze={'Zl': lambda p, k, l:
                          seifert.sigma3_lemma_ansatz(p, l)}),
    CatalogEntry('sigma3l', 'Sigma3(l; -) with central unitary z',
                 lambda k, l, printed: seifert.sigma3_minus(l), uses_l=True,
                 gradings={'Z': lambda p, k, l: seifert.sigma3_minus_z()}),
    CatalogEntry('rp2minus', 'quantum real projective plane RP2(l; -)',
                 lambda k, l, printed: seifert.rp2_minus(l), uses_l=True),
]}


def list_entries():
    return sorted(ENTRIES)


def describe(name):
    return _entry(name).description


def _entry(name):
    try:
        return ENTRIES[name]
    except KeyError:
        raise CatalogError('unknown catalog entry %r (known: %s)'
                           % (name, ', '.join(list_entries())))


def _params(entry, k, l):
    l = DEFAULT_L if l is None else check_l(l)
    k = DEFAULT_K if k is None else check_k(k)
    if entry.accepts is not None and not entry.accepts(k, l):
        given = 'k=%d, l=%d' % (k, l) if entry.uses_k else 'l=%d' % l
        raise CatalogError('%s does not accept %s' % (entry.name, given))
    return k, l


@lru_cache(maxsize=None)
def _build(name, k, l, printed):
    entry = _entry(name)
    p = entry.build(k, l, printed)
    report = validate_presentation(p)
    if not report.ok:
        raise CatalogError('catalog entry %s failed validation: %s'
                           % (name, '; '.join(report.failures())))
    # printed variants are kept as published, overlaps and all
    unresolved = [] if printed else confluence_check(p)
    if unresolved:
        raise CatalogError('catalog entry %s is not confluent: %s'
                           % (name, '; '.join(c.describe(p)
                                               for c in unresolved)))
    log.debug('built %s (k=%s, l=%s)', name, k, l)
    return p


def get_algebra(name, l=None, k=None, printed=False):
    entry = _entry(name)
    k, l = _params(entry, k, l)
    return _build(name, k if entry.uses_k else None,
                  l if entry.uses_l else None, printed)


def grading_ids(name):
    return list(_entry(name).gradings)


def get_grading(name, grading_id, l=None, k=None):
    entry = _entry(name)
    k, l = _params(entry, k, l)
    try:
        make = entry.gradings[grading_id]
    except KeyError:
        raise CatalogError('%s has no grading %r (known: %s)' % (
            name, grading_id, ', '.join(entry.gradings) or 'none'))
    return make(get_algebra(name, l, k), k, l)


def get_ansatz(name, grading_id, l=None, k=None):
    entry = _entry(name)
    k, l = _params(entry, k, l)
    try:
        make = entry.ansatze[grading_id]
    except KeyError:
        raise CatalogError('%s has no ansatz for %r' % (name, grading_id))
    return make(get_algebra(name, l, k), k, l)


def pillow_data():
    return torus.pillow_data(get_algebra('torus'))


def gwa_spec(k, l):
    return weighted.gwa_spec(check_k(k), check_l(l))


# embeddings

EDGES = {
    'wp-to-lens': (('wp', 'lens'), tower.wp_to_lens),
    'lens-to-su2q': (('lens', 'su2q'), tower.lens_to_su2q),
    'sigma3l-to-sigma3': (('sigma3l', 'sigma3'), tower.sigma3l_to_sigma3),
    'rp2minus-to-sigma3l': (('rp2minus', 'sigma3l'),
                            tower.rp2minus_to_sigma3l),
    'sigma3-to-s2u': (('sigma3', 's2u'), tower.sigma3_to_s2u),
    'su2q-to-s2': (('su2q', 's2'), tower.su2q_to_s2),
}

COMPOSITES = {
    'wp-to-su2q': ('wp-to-lens', 'lens-to-su2q'),
    'rp2minus-to-s2u': ('rp2minus-to-sigma3l', 'sigma3l-to-sigma3',
                        'sigma3-to-s2u'),
}

TOWERS = {
    'wp': ['wp-to-lens', 'lens-to-su2q', 'wp-to-su2q'],
    'rp2minus': ['rp2minus-to-sigma3l', 'sigma3l-to-sigma3',
                 'sigma3-to-s2u', 'rp2minus-to-s2u'],
}


def list_edges():
    return sorted(EDGES) + sorted(COMPOSITES)


@lru_cache(maxsize=None)
def _morphism(edge, l):
    if edge in COMPOSITES:
        parts = [_morphism(e, l) for e in COMPOSITES[edge]]
        return tower.composite(edge, *parts)
    try:
        (source, target), make = EDGES[edge]
    except KeyError:
        raise CatalogError('unknown morphism %r (known: %s)'
                           % (edge, ', '.join(list_edges())))
    return make(get_algebra(source, l), get_algebra(target, l), l)


def get_morphism(edge, l=None):
    l = DEFAULT_L if l is None else check_l(l)
    return _morphism(edge, l)


def get_tower(name, l=None):
    try:
        edges = TOWERS[name]
    except KeyError:
        raise CatalogError('unknown tower %r (known: %s)'
                           % (name, ', '.join(sorted(TOWERS))))
    return [get_morphism(e, l) for e in edges]
