"""
Embeddings between catalog algebras. Images are given on one generator
of each star pair; the partner's image is the star of that image.
"""

from qsmooth.algebra.morphism import MorphismSpec, compose
from qsmooth.algebra.utils import CatalogError


def _spec(name, source, target, images):
    images = {g: target.normal_form(target.elem(text))
              for g, text in images.items()}
    gens = source.generators
    for g in gens.names:
        if g in images:
            continue
        # g is the star partner of a mapped generator
        image = gens.star_image(source.field, g)
        words = list(image.terms)
        partner = words[0][0] if len(words) == 1 and len(words[0]) == 1 \
            else None
        if partner is None or partner not in images:
            raise CatalogError('%s: no image for %s' % (name, g))
        images[g] = target.star_element(images[partner])
    return MorphismSpec(name, source, target, images)


def wp_to_lens(wp, lens, l):
    return _spec('wp-to-lens', wp, lens, {'a': 'd.d*', 'b': 'c.d'})


def lens_to_su2q(lens, su2q, l):
    return _spec('lens-to-su2q', lens, su2q,
                 {'c': '.'.join(['alpha'] * l), 'd': 'beta'})


def sigma3l_to_sigma3(sigma3l, sigma3, l):
    return _spec('sigma3l-to-sigma3', sigma3l, sigma3,
                 {'x': '.'.join(['zeta0'] * l), 'y': 'zeta1', 'z': 'xi'})


def rp2minus_to_sigma3l(rp2, sigma3l, l):
    return _spec('rp2minus-to-sigma3l', rp2, sigma3l,
                 {'a': 'y.y.z', 'b': 'x.y.z', 'c': 'x.x.z'})


def sigma3_to_s2u(sigma3, s2u, l=None):
    return _spec('sigma3-to-s2u', sigma3, s2u,
                 {'zeta0': 'z0.u', 'zeta1': 'z1.u', 'xi': 'u*.u*',
                  'xi*': 'u.u'})


def su2q_to_s2(su2q, s2, l=None):
    return _spec('su2q-to-s2', su2q, s2,
                 {'alpha': 'z0', 'beta': 'z1', 'beta*': 'z1'})


def composite(name, *edges):
    out = edges[0]
    for m in edges[1:]:
        out = compose(out, m)
    out.name = name
    return out
