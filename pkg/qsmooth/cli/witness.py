"""
JSON-ready witnesses for certificates, shared by the commands and the
sweep workers. Scalars are written in the canonical text form of their
field, words in the dotted DSL form.
"""

from qsmooth.algebra.morphism import verify_morphism
from qsmooth.algebra.scalars import (format_poly, poly_coefficients,
                                     poly_degree, poly_derivative,
                                     poly_divides, poly_from_coefficients,
                                     poly_gcd)
from qsmooth.grading.connection import (cofactor_terms,
                                        connection_matrix_det,
                                        det_closed_forms, format_solution,
                                        expansion_terms)
from qsmooth.weyl.gwa import (NOT_SMOOTH, find_gwa_structure, nakayama_check,
                              smoothness_check)

FAIL = 'fail'
PASS = 'pass'


def poly_json(field, f):
    return [field.format(c) for c in poly_coefficients(f)]


def poly_from_json(field, coefficients):
    return poly_from_coefficients(field, [field.parse(c)
                                          for c in coefficients])


# generalized Weyl algebras

def gwa_witness(p):
    """(status, witness) for the first GWA structure found on p."""
    field = p.field
    reports = find_gwa_structure(p)
    witness = {'candidates': [c.to_json(field) for r in reports
                              for c in r.candidates]}
    found = [r for r in reports if r.ok]
    if not found:
        return FAIL, witness
    report = found[0]
    match = report.match
    spec = match.spec(field)
    verdict = smoothness_check(spec)
    witness.update(
        base=report.base, xp=match.xp, xm=match.xm,
        kappa=field.format(spec.kappa), chi=field.format(spec.chi),
        p=poly_json(field, spec.p), gcd=poly_json(field, verdict.gcd),
        gcd_text=format_poly(field, verdict.gcd), verdict=verdict.verdict)
    if verdict.smooth:
        nakayama = nakayama_check(spec, p, match.xp, match.xm, report.base)
        witness['nakayama'] = dict(nakayama.conventions)
        if not nakayama.ok:
            return FAIL, witness
    return verdict.verdict, witness


def recheck_gcd(field, witness):
    """Problems with the gcd witness of a gwa certificate."""
    f = poly_from_json(field, witness['p'])
    g = poly_from_json(field, witness['gcd'])
    problems = []
    if not g:
        return ['gcd witness is zero']
    if not poly_divides(g, f) or not poly_divides(g, poly_derivative(f)):
        problems.append('gcd witness does not divide p and p\'')
    if poly_gcd(f, poly_derivative(f)) != g.monic():
        problems.append('gcd witness is not the monic gcd')
    smooth = poly_degree(g) == 0
    if smooth != (witness['verdict'] != NOT_SMOOTH):
        problems.append('verdict %s contradicts gcd of degree %d'
                        % (witness['verdict'], poly_degree(g)))
    return problems


# morphisms

def morphism_witness(m):
    report = verify_morphism(m)
    t = m.target
    return report.ok, {
        'edge': m.name,
        'source': m.source.name,
        'target': t.name,
        'images': {g: t.format(m.images[g])
                   for g in m.source.generators.names},
        'checked': report.checked,
        'failures': report.failures(),
    }


def direct_substitution(m, images):
    """Generators whose image under m differs from the given text."""
    t = m.target
    out = []
    for g, text in images.items():
        want = t.normal_form(t.elem(text))
        if m.images[g] != want:
            out.append('%s: %s vs %s' % (g, t.format(m.images[g]),
                                         t.format(want)))
    return out


# strong connections

def solution_witness(p, solution):
    return {
        'ansatz': solution.ansatz,
        'status': solution.status,
        'coefficients': format_solution(p, solution),
        'free': list(solution.free),
        'equations': solution.equations,
    }


def power_witness(report):
    return {
        'n': report.n,
        'omega': report.omega.to_json(),
        'mu': report.mu_ok,
        'legs': list(report.leg_failures),
    }


def determinant_witness(l, field):
    """Direct determinant of the lens-space system beside both closed forms."""
    det = connection_matrix_det(l, field)
    forms = det_closed_forms(l, field)
    expansion = expansion_terms(l, field)
    cofactors = cofactor_terms(l, field)
    return {
        'l': l,
        'det': field.format(det),
        'closed_form': field.format(forms['computed']),
        'printed_closed_form': field.format(forms['printed']),
        'matches_closed_form': det == forms['computed'],
        'matches_printed_closed_form': det == forms['printed'],
        'expansion_terms': [field.format(c) for c in expansion],
        'expansion_matches_cofactors': expansion == cofactors,
    }
