"""
Normal forms, star structure, validation, critical pairs and morphisms
"""

import sys
import os

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from qsmooth.algebra.confluence import confluence_check, critical_pairs
from qsmooth.algebra.elements import Element, word_from_text
from qsmooth.algebra.morphism import (apply_morphism, compose,
                                      identity_morphism, verify_automorphism)
from qsmooth.algebra.presentation import (Generator, Presentation,
                                          RewriteRule, validate_presentation)
from qsmooth.algebra.sampling import make_rng, property_suite, random_word
from qsmooth.algebra.utils import FuelExhausted, PresentationError
from qsmooth.catalog.spheres import su2q
from qsmooth.catalog.torus import torus
from qsmooth.catalog.weighted import algebra_a


def test_sphere_normal_forms():
    p = su2q()
    q = p.field.gen
    assert p.normal_form(p.elem('alpha.beta')) == p.elem('beta.alpha', q)
    assert p.normal_form(p.elem('alpha.alpha*')) == \
        p.one() - p.elem('beta.beta*')
    assert p.normal_form(p.elem('alpha*.alpha')) == \
        p.one() - p.elem('beta.beta*', p.field.power(-2))
    assert p.normal_form(p.elem('beta*.beta')) == p.elem('beta.beta*')
    # already normal
    assert p.normal_form(p.elem('beta.beta*.alpha')) == \
        p.elem('beta.beta*.alpha')


def test_normal_form_is_linear_in_scalars():
    p = su2q()
    q = p.field.gen
    e = p.elem('alpha.beta').scale(q + 1) + p.elem('alpha.alpha*')
    assert p.normal_form(e) == p.elem('beta.alpha', q * (q + 1)) + \
        p.one() - p.elem('beta.beta*')


def test_star():
    p = su2q()
    # star(alpha beta) = beta* alpha*, which is already normal
    assert p.star_element(p.elem('alpha.beta')) == p.elem('beta*.alpha*')
    assert p.star_element(p.star_element(p.elem('alpha.beta'))) == \
        p.normal_form(p.elem('alpha.beta'))
    assert p.normal_form(p.elem('alpha*.beta*')) == \
        p.elem('beta*.alpha*', p.field.power(-1))


def test_star_conjugates_unitary_scalars():
    p = torus()
    lam = p.field.gen
    assert p.star_element(p.elem('U', lam)) == \
        p.elem('U*', p.field.power(-1))


def test_validation():
    assert validate_presentation(su2q()).ok
    assert validate_presentation(torus()).ok


def test_validation_catches_growing_rule():
    p = su2q()
    q = p.field.gen
    # beta.alpha is smaller than alpha.beta, so this rule grows
    rules = list(p.rules) + [RewriteRule(word_from_text('beta.alpha'),
                                         p.elem('alpha.beta', 1 / q))]
    bad = Presentation('bad', p.field, list(p.generators), rules)
    report = validate_presentation(bad)
    assert not report.ok
    assert report.termination


def test_validation_catches_unknown_generator():
    p = su2q()
    rules = list(p.rules) + [RewriteRule(word_from_text('alpha.alpha'),
                                         Element.gen(p.field, 'gamma'))]
    bad = Presentation('bad', p.field, list(p.generators), rules)
    assert validate_presentation(bad).unknown


def test_validation_catches_star_closure():
    p = su2q()
    q = p.field.gen
    # alpha beta = q^2 beta alpha is not star-closed with the other rules
    rules = [RewriteRule(r.lhs, p.elem('beta.alpha', q ** 2))
             if r.lhs == ('alpha', 'beta') else r for r in p.rules]
    bad = Presentation('bad', p.field, list(p.generators), rules)
    assert validate_presentation(bad).star_closure


def test_duplicate_generator():
    with pytest.raises(PresentationError):
        Presentation('dup', su2q().field, [Generator('x'), Generator('x')], [])


def test_fuel():
    p = su2q()
    with pytest.raises(FuelExhausted):
        p.normal_form(p.elem('alpha.alpha.beta'), fuel=1)


def test_confluent_catalog_systems():
    assert confluence_check(su2q()) == []
    assert confluence_check(torus()) == []
    assert len(critical_pairs(su2q())) > 0


@pytest.mark.parametrize('k', [0, 2, 3])
def test_printed_variant_is_not_confluent(k):
    assert confluence_check(algebra_a(k, 2, printed=True))
    assert confluence_check(algebra_a(k, 2)) == []


def torus_oracle(p, word):
    """U^m V^n with lam^e, e counting V letters before U letters."""
    sign = {'U': 1, 'U*': -1, 'V': 1, 'V*': -1}
    e = 0
    for i, g in enumerate(word):
        if g[0] != 'V':
            continue
        for h in word[i + 1:]:
            if h[0] == 'U':
                e -= sign[g] * sign[h]
    m = sum(sign[g] for g in word if g[0] == 'U')
    n = sum(sign[g] for g in word if g[0] == 'V')
    nf = ('U' if m >= 0 else 'U*',) * abs(m) + \
        ('V' if n >= 0 else 'V*',) * abs(n)
    return Element.word(p.field, nf, p.field.power(e))


def test_torus_matches_oracle():
    p = torus()
    rng = make_rng(7)
    for _ in range(200):
        word = random_word(p, rng, max_len=10)
        assert p.normal_form(Element.word(p.field, word)) == \
            torus_oracle(p, word)


def test_property_suite():
    assert property_suite(su2q(), 5, seed=1) == []
    assert property_suite(torus(), 3, seed=2) == []


def test_specialize():
    p = su2q()
    s = p.specialize('1/2')
    assert confluence_check(s) == []
    assert s.normal_form(s.elem('alpha.beta')) == s.elem('beta.alpha', '1/2')


def test_morphisms():
    p = su2q()
    # alpha -> q^-1 alpha is not star-compatible for real q, but it is an
    # automorphism of the relations
    images = {'alpha': p.gen('alpha').scale(p.field.power(-1)),
              'alpha*': p.gen('alpha*').scale(p.field.gen),
              'beta': p.gen('beta'), 'beta*': p.gen('beta*')}
    assert verify_automorphism(p, images, check_star=False).ok
    assert not verify_automorphism(p, images).ok
    flip = {'alpha': -p.gen('alpha'), 'alpha*': -p.gen('alpha*'),
            'beta': p.gen('beta'), 'beta*': p.gen('beta*')}
    assert verify_automorphism(p, flip, order=2).ok
    ident = identity_morphism(p)
    both = compose(ident, ident)
    e = p.elem('alpha.beta')
    assert apply_morphism(both, e) == p.normal_form(e)
