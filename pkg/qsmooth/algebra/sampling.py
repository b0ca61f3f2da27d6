"""
Seeded random scalars, words and elements for property checks.
"""

import numpy as np

from .elements import Element
from .utils import ScalarError, log


def make_rng(seed=0):
    return np.random.default_rng(seed)


def random_int_poly(field, rng, degree=2, height=3):
    """Element of Z[t] with coefficients in [-height, height]."""
    t = field.gen if field.symbolic else field.convert(field.point)
    out = field.zero
    for i in range(int(rng.integers(0, degree + 1)) + 1):
        c = int(rng.integers(-height, height + 1))
        if c:
            out = out + t ** i * c
    return out


def random_scalar(field, rng, degree=2, height=3, nonzero=False):
    while True:
        num = random_int_poly(field, rng, degree, height)
        den = random_int_poly(field, rng, degree, height)
        if den and (num or not nonzero):
            return num / den


def random_word(p, rng, max_len=6, min_len=0):
    names = p.generators.names
    n = int(rng.integers(min_len, max_len + 1))
    return tuple(names[int(i)] for i in rng.integers(0, len(names), size=n))


def random_element(p, rng, terms=3, max_len=6):
    out = Element(p.field)
    for _ in range(terms):
        out = out + Element.word(p.field, random_word(p, rng, max_len),
                                 random_scalar(p.field, rng, nonzero=True))
    return out


def property_suite(p, samples, seed=0, max_len=4):
    """
    Normal-form properties on random elements: idempotence, linearity,
    compatibility with products (NF(ef) = NF(NF(e) NF(f))), star
    involutivity and antimultiplicativity. Returns the failures.
    """
    rng = make_rng(seed)
    nf = p.normal_form
    failures = []
    star_ok = True
    for i in range(samples):
        e = random_element(p, rng, max_len=max_len)
        f = random_element(p, rng, max_len=max_len)
        s = random_scalar(p.field, rng, nonzero=True)
        ne, nf_f = nf(e), nf(f)
        if nf(ne) != ne:
            failures.append('sample %d: normal form is not idempotent' % i)
        if nf(e.scale(s) + f) != ne.scale(s) + nf_f:
            failures.append('sample %d: normal form is not linear' % i)
        if nf(e * f) != nf(ne * nf_f):
            failures.append('sample %d: normal form does not respect '
                            'products' % i)
        if not star_ok:
            continue
        try:
            if p.star_element(p.star_element(e)) != ne:
                failures.append('sample %d: star is not involutive' % i)
            if p.star_element(nf(e * f)) != \
                    nf(p.star_element(f) * p.star_element(e)):
                failures.append('sample %d: star is not antimultiplicative'
                                % i)
        except ScalarError as err:
            log.info('%s: skipping star properties: %s', p.name, err)
            star_ok = False
    return failures
