"""
Generalized Weyl algebras: structure matching, smoothness and Nakayama
"""

import sys
import os

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from qsmooth import catalog
from qsmooth.algebra.confluence import confluence_check
from qsmooth.algebra.presentation import validate_presentation
from qsmooth.algebra.sampling import make_rng, random_scalar
from qsmooth.algebra.scalars import (poly_degree, poly_from_coefficients,
                                     scalar_field)
from qsmooth.algebra.utils import GWAError
from qsmooth.weyl.gwa import (GWASpec, NOT_SMOOTH, SMOOTH, element_poly,
                              find_gwa_structure, gwa_match,
                              gwa_presentation, nakayama_check,
                              poly_element, smoothness_check)


@pytest.mark.parametrize('k', range(4))
@pytest.mark.parametrize('l', range(1, 5))
def test_smoothness_grid(k, l):
    spec = catalog.gwa_spec(k, l)
    verdict = smoothness_check(spec)
    assert verdict.smooth == (k in (0, 1))
    R, a = spec.field.poly_ring()
    assert verdict.gcd == a ** max(k - 1, 0)


@pytest.mark.parametrize('k', range(4))
def test_catalog_algebra_is_gwa(k):
    l = 2
    p = catalog.get_algebra('A', l=l, k=k)
    report = gwa_match(p, 'a', 'b')
    match = report.match
    assert match is not None
    assert (match.xp, match.xm) == ('b', 'b*')
    assert match.kappa == p.field.power(2 * l)
    assert not match.chi
    # b* b = p(a)
    assert match.p == catalog.gwa_spec(k, l).p


def test_find_structure():
    p = catalog.get_algebra('wp', l=3)
    reports = find_gwa_structure(p)
    assert len(reports) == 1
    assert reports[0].base == 'a'
    assert reports[0].ok


def test_no_structure_on_the_sphere():
    p = catalog.get_algebra('su2q')
    assert not any(r.ok for r in find_gwa_structure(p))


def test_gwa_presentation_round_trip():
    spec = catalog.gwa_spec(2, 3)
    p = gwa_presentation(spec)
    assert validate_presentation(p).ok
    assert confluence_check(p) == []
    match = gwa_match(p, 'a', 'xp').match
    assert match.kappa == spec.kappa
    assert match.p == spec.p


def test_poly_element():
    spec = catalog.gwa_spec(1, 2)
    e = poly_element(spec.field, spec.p)
    assert element_poly(spec.field, e) == spec.p
    assert poly_degree(spec.p) == 3


@pytest.mark.parametrize('k', [0, 1])
@pytest.mark.parametrize('l', range(1, 5))
def test_nakayama(k, l):
    p = catalog.get_algebra('A', l=l, k=k)
    spec = catalog.gwa_spec(k, l)
    report = nakayama_check(spec, p, 'b', 'b*', 'a')
    assert report.ok
    assert report.conventions == {'kappa^(+1)': True, 'kappa^(-1)': True}


def test_verdict_names():
    assert smoothness_check(catalog.gwa_spec(1, 1)).verdict == SMOOTH
    assert smoothness_check(catalog.gwa_spec(3, 1)).verdict == NOT_SMOOTH


def test_bad_specs():
    f = scalar_field('q')
    R, a = f.poly_ring()
    with pytest.raises(GWAError):
        GWASpec(f, 0, 0, a)
    with pytest.raises(GWAError):
        smoothness_check(GWASpec(f, 1, 0, R.zero))


def monic_factors(f):
    """Pairwise coprime irreducibles over Q(q)."""
    R, a = f.poly_ring()
    q = f.gen
    return [a, a - 1, a + q, a - q ** 2, a ** 2 + q, a ** 2 + q ** 3]


@pytest.mark.parametrize('seed', range(20))
def test_smoothness_matches_root_multiplicities(seed):
    rng = make_rng(seed)
    f = scalar_field('q')
    R, a = f.poly_ring()
    exponents = [int(e) for e in rng.integers(0, 3, size=6)]
    p, repeated = R.one, R.one
    for factor, e in zip(monic_factors(f), exponents):
        p = p * factor ** e
        if e > 1:
            repeated = repeated * factor ** (e - 1)
    p = p * random_scalar(f, rng, nonzero=True)
    verdict = smoothness_check(GWASpec(f, f.power(2), 0, p))
    assert verdict.smooth == (max(exponents) <= 1), exponents
    assert verdict.gcd == repeated


def random_spec(f, rng):
    degree = int(rng.integers(0, 6))
    coefficients = [random_scalar(f, rng) for _ in range(degree)]
    coefficients.append(random_scalar(f, rng, nonzero=True))
    return GWASpec(f, random_scalar(f, rng, nonzero=True),
                   random_scalar(f, rng, nonzero=True),
                   poly_from_coefficients(f, coefficients))


def test_random_gwa_presentations_are_confluent():
    f = scalar_field('q')
    rng = make_rng(17)
    for i in range(50):
        spec = random_spec(f, rng)
        p = gwa_presentation(spec, name='random%d' % i)
        assert validate_presentation(p).ok, spec
        assert confluence_check(p) == [], spec
        assert poly_degree(spec.p) <= 5
