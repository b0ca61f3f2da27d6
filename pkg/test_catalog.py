"""
Catalog presentations, ansatze and the embedding towers
"""

import sys
import os

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from qsmooth import catalog
from qsmooth.algebra.confluence import confluence_check
from qsmooth.algebra.morphism import apply_morphism, verify_morphism
from qsmooth.algebra.presentation import validate_presentation
from qsmooth.algebra.sampling import make_rng, property_suite, random_element
from qsmooth.algebra.utils import CatalogError, PoleError
from qsmooth.catalog import weighted


def parameter_grid(name):
    entry = catalog.ENTRIES[name]
    ls = range(1, 4) if entry.uses_l else [None]
    ks = range(0, 3) if entry.uses_k else [None]
    for l in ls:
        for k in ks:
            if entry.accepts is not None and \
                    not entry.accepts(1 if k is None else k, l):
                continue
            yield l, k


@pytest.mark.parametrize('name', catalog.list_entries())
def test_entries_validate_and_are_confluent(name):
    for l, k in parameter_grid(name):
        p = catalog.get_algebra(name, l=l, k=k)
        assert validate_presentation(p).ok, (name, l, k)
        assert confluence_check(p) == [], (name, l, k)


@pytest.mark.parametrize('name', catalog.list_entries())
def test_normal_form_properties(name):
    for l, k in parameter_grid(name):
        p = catalog.get_algebra(name, l=l, k=k)
        assert property_suite(p, 3, seed=5, max_len=3) == [], (name, l, k)


@pytest.mark.parametrize('name', catalog.list_entries())
def test_normal_forms_commute_with_specialization(name):
    for l, k in parameter_grid(name):
        p = catalog.get_algebra(name, l=l, k=k)
        s = p.specialize('1/2')
        rng = make_rng(13)
        for _ in range(5):
            e = random_element(p, rng, max_len=4)
            try:
                e_half = e.map_coefficients(s.field.convert, s.field)
                want = p.normal_form(e).map_coefficients(s.field.convert,
                                                         s.field)
            except PoleError:
                continue
            assert s.normal_form(e_half) == want, (name, l, k)


def test_sphere():
    p = catalog.get_algebra('su2q')
    assert len(p.rules) == 7
    assert p.generators.names == ['beta', 'beta*', 'alpha', 'alpha*']


def test_lemma_ansatz_unknowns():
    assert catalog.get_ansatz('su2q', 'Zl', l=3).unknowns == \
        ['x1', 'y1', 'y2']


def test_pillow_identity():
    p = catalog.get_algebra('torus')
    data = catalog.pillow_data()
    f = p.field
    lam = f.gen
    assert data.constant == (f.one / lam ** 2 - 1) * 2
    nf = p.normal_form
    identity = nf(data.xhat * data.xhat) + nf(data.yhat * data.yhat) \
        - nf(data.zhat * data.zhat).scale(f.one / lam) \
        - nf(data.xhat * data.z * data.yhat)
    assert identity == p.scalar(data.constant)


@pytest.mark.parametrize('edge', sorted(catalog.EDGES))
@pytest.mark.parametrize('l', range(1, 5))
def test_edges(edge, l):
    report = verify_morphism(catalog.get_morphism(edge, l))
    assert report.ok, report.failures()


@pytest.mark.parametrize('l', range(1, 4))
def test_composite_is_direct_substitution(l):
    m = catalog.get_morphism('wp-to-su2q', l)
    su2q = m.target
    assert m.images['a'] == su2q.normal_form(su2q.elem('beta.beta*'))
    assert m.images['b'] == su2q.normal_form(
        su2q.elem('.'.join(['alpha'] * l + ['beta'])))
    assert verify_morphism(m).ok


def test_composites_agree_with_steps():
    l = 2
    first = catalog.get_morphism('wp-to-lens', l)
    second = catalog.get_morphism('lens-to-su2q', l)
    both = catalog.get_morphism('wp-to-su2q', l)
    e = first.source.elem('b.b*.a')
    assert apply_morphism(both, e) == \
        apply_morphism(second, apply_morphism(first, e))


def test_towers():
    assert [m.name for m in catalog.get_tower('rp2minus', 3)] == [
        'rp2minus-to-sigma3l', 'sigma3l-to-sigma3', 'sigma3-to-s2u',
        'rp2minus-to-s2u']
    for m in catalog.get_tower('rp2minus', 3):
        assert verify_morphism(m).ok, m.name
    for m in catalog.get_tower('wp', 3):
        assert verify_morphism(m).ok, m.name


def test_aliases():
    assert catalog.get_algebra('spindle', l=3, k=2).name == 'spindle'
    with pytest.raises(CatalogError):
        catalog.get_algebra('spindle', l=4, k=2)
    with pytest.raises(CatalogError):
        catalog.get_algebra('evenwp', l=2)


@pytest.mark.parametrize('call', [
    lambda: catalog.get_algebra('nope'),
    lambda: catalog.get_algebra('lens', l=0),
    lambda: catalog.get_algebra('A', l=1, k=-1),
    lambda: catalog.get_grading('su2q', 'nope'),
    lambda: catalog.get_morphism('nope'),
    lambda: catalog.get_tower('nope'),
])
def test_catalog_errors(call):
    with pytest.raises(CatalogError):
        call()


def test_rejection_names_only_used_parameters():
    with pytest.raises(CatalogError, match=r'^evenwp does not accept l=2$'):
        catalog.get_algebra('evenwp', l=2)
    with pytest.raises(CatalogError, match=r'^spindle does not accept '
                                           r'k=2, l=4$'):
        catalog.get_algebra('spindle', l=4, k=2)


def test_non_confluent_entry_is_refused(monkeypatch):
    broken = catalog.CatalogEntry(
        'broken', 'A(2, 2) with its printed relations',
        lambda k, l, printed: weighted.algebra_a(2, 2, printed=True))
    monkeypatch.setitem(catalog.ENTRIES, 'broken', broken)
    with pytest.raises(CatalogError, match='not confluent'):
        catalog.get_algebra('broken')
    assert confluence_check(catalog.get_algebra('A', l=2, k=2,
                                                printed=True))
