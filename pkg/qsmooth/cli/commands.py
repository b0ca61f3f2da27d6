"""
The verification commands. Each returns (exit code, Certificate, text
lines); `run` maps errors onto the exit-code contract and prints.
"""

import logging
import sys
import timeit
import traceback
from fractions import Fraction

from qsmooth import catalog
from qsmooth.algebra.confluence import confluence_check
from qsmooth.algebra.morphism import MorphismSpec, verify_morphism
from qsmooth.algebra.presentation import Presentation, validate_presentation
from qsmooth.algebra.sampling import property_suite
from qsmooth.algebra.utils import (CatalogError, DslSyntaxError,
                                   FuelExhausted, GradingError, GWAError,
                                   PresentationError, QSmoothError,
                                   ScalarError, log)
from qsmooth.catalog import torus
from qsmooth.grading.connection import (NO_SOLUTION, PASS, connection_powers,
                                        search_connection, solve_connection,
                                        verify_connection)
from qsmooth.grading.groups import (InvolutiveGrading, check_rule_homogeneity,
                                    degree_decompose, involutive_decompose)
from qsmooth.grading.tensor import TensorElement, tensor_from_json, tensor_mu
from qsmooth.weyl.gwa import gwa_match, nakayama_check

from .certificate import Certificate, CertificateWriter, load_certificate
from .dsl import (CATALOG_PREFIX, catalog_document, emit_dsl, load_document,
                  parse_dsl, parse_expression)
from .pool import DIRECT, run_sweep, sweep_tasks
from .witness import (FAIL, determinant_witness, direct_substitution,
                      gwa_witness, morphism_witness, power_witness,
                      recheck_gcd, solution_witness)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_VERIFICATION = 4
EXIT_NO_SOLUTION = 5

# catalog algebras whose connection system is the q-binomial one
LENS_SYSTEMS = ('su2q', 'sigma3')


class UnknownName(QSmoothError):
    pass


def _load(args):
    return load_document(args.file, args.l, args.k, args.printed, args.fuel)


def _certificate(task, doc, /, **params):
    params = dict(doc.params, **params) if doc is not None else params
    algebra = {}
    if doc is not None:
        algebra = {'name': doc.name, 'source': doc.source,
                   'parameter': doc.parameter.name,
                   'mode': doc.parameter.mode, 'dsl': emit_dsl(doc)}
    return Certificate(task, algebra, params)


def _param_value(args):
    if args.param_value is None:
        return None
    try:
        return Fraction(args.param_value)
    except (ValueError, ZeroDivisionError):
        raise DslSyntaxError('--param-value needs a rational number, got %r'
                             % args.param_value)


def _specialize(e, field):
    return e.map_coefficients(field.convert, field)


def _cross_check(cert, value, check):
    """Run check(value) -> failures and record it under param_value."""
    entry = {'value': str(value), 'failures': [], 'skipped': []}
    try:
        entry['failures'] = check(value)
    except ScalarError as e:
        entry['skipped'].append(str(e))
    cert.witnesses['param_value'] = entry
    return not entry['failures']


def _grading(doc, name):
    try:
        return doc.gradings[name]
    except KeyError:
        raise UnknownName('%s has no grading %r (known: %s)' % (
            doc.name, name, ', '.join(doc.gradings) or 'none'))


def _ansatz(doc, name, grading):
    if name is None:
        if grading in doc.ansatze:
            return doc.ansatze[grading]
        if doc.ansatze:
            return next(iter(doc.ansatze.values()))
        raise UnknownName('%s has no ansatz; use --search' % doc.name)
    try:
        return doc.ansatze[name]
    except KeyError:
        raise UnknownName('%s has no ansatz %r' % (doc.name, name))


# commands

def cmd_check(args):
    doc = _load(args)
    p = doc.presentation()
    cert = _certificate('check', doc, samples=args.samples, seed=args.seed)
    w = cert.witnesses
    report = validate_presentation(p)
    w['validation'] = report.failures()
    w['skipped'] = list(report.skipped)
    lines = ['%s: %d generators, %d rules' % (p.name, len(p.generators),
                                               len(p.rules))]
    lines += ['validation: %s' % f for f in report.failures()]
    if not report.ok:
        return EXIT_VALIDATION, cert, lines

    unresolved = confluence_check(p)
    w['critical_pairs'] = [c.describe(p) for c in unresolved]
    lines += ['unresolved %s' % text for text in w['critical_pairs']]
    w['homogeneity'] = {name: check_rule_homogeneity(p, g).violations
                        for name, g in doc.gradings.items()}
    for name, violations in w['homogeneity'].items():
        lines += ['grading %s: %s' % (name, v) for v in violations]
    failed = bool(unresolved) or any(w['homogeneity'].values())
    if args.samples:
        w['properties'] = property_suite(p, args.samples, args.seed)
        lines += w['properties']
        failed = failed or bool(w['properties'])

    value = _param_value(args)
    if value is not None:
        def check(v):
            sp = p.specialize(v)
            return [c.describe(sp) for c in confluence_check(sp)]
        failed = not _cross_check(cert, value, check) or failed

    cert.status = FAIL if failed else PASS
    lines.append('%s: %s' % (p.name, cert.status))
    return (EXIT_VERIFICATION if failed else EXIT_OK), cert, lines


def cmd_nf(args):
    doc = _load(args)
    p = doc.presentation()
    e = parse_expression(doc, args.expr)
    result = p.normal_form(e)
    cert = _certificate('nf', doc, expr=args.expr)
    cert.witnesses.update(input=p.format(e), normal_form=p.format(result))
    cert.status = PASS

    value = _param_value(args)
    if value is not None:
        def check(v):
            sp = p.specialize(v)
            got = sp.normal_form(_specialize(e, sp.field))
            want = _specialize(result, sp.field)
            return [] if got == want else \
                ['NF at %s is %s, evaluated NF is %s'
                 % (v, sp.format(got), sp.format(want))]
        if not _cross_check(cert, value, check):
            cert.status = FAIL
    code = EXIT_OK if cert.status == PASS else EXIT_VERIFICATION
    return code, cert, [p.format(result)]


def cmd_grade(args):
    doc = _load(args)
    p = doc.presentation()
    g = _grading(doc, args.grading)
    report = check_rule_homogeneity(p, g)
    cert = _certificate('grade', doc, grading=g.name)
    w = cert.witnesses
    w.update(grading=g.name, group=g.group.label,
             violations=report.violations)
    lines = ['grading %s by %s: %s' % (g.name, g.group.label,
                                       'homogeneous' if report.ok
                                       else 'NOT homogeneous')]
    lines += report.violations
    if args.expr is not None:
        e = p.normal_form(parse_expression(doc, args.expr))
        cert.params['expr'] = args.expr
        if isinstance(g, InvolutiveGrading):
            even, odd = involutive_decompose(p, g, e)
            parts = {0: even, 1: odd}
        else:
            parts = degree_decompose(p, g, e)
        w['components'] = {str(d): p.format(part)
                           for d, part in sorted(parts.items())}
        lines += ['degree %s: %s' % kv for kv in w['components'].items()]
    cert.status = PASS if report.ok else FAIL
    return (EXIT_OK if report.ok else EXIT_VERIFICATION), cert, lines


def _pillow_witness(p, sigma):
    h = torus.hats(p)
    odd = {name: sigma.apply(p, h[name]) == -h[name]
           for name in ('xhat', 'yhat', 'zhat')}
    identity = torus.pillow_element(p)
    constant = torus.pillow_constant(p)
    return {
        'identity': p.format(identity),
        'constant': p.field.format(constant),
        'identity_holds': identity == p.scalar(constant),
        'sigma_odd': odd,
    }


def cmd_connection(args):
    doc = _load(args)
    p = doc.presentation()
    g = _grading(doc, args.grading)
    cert = _certificate('connection', doc, grading=g.name, power=args.power,
                        degree=args.degree)
    w = cert.witnesses
    if args.search is not None:
        cert.params['search'] = args.search
        ansatz, solution = search_connection(p, g, args.degree, args.search)
        if ansatz is not None:
            doc.ansatze[ansatz.name] = ansatz
            cert.algebra['dsl'] = emit_dsl(doc)
    else:
        ansatz = _ansatz(doc, args.ansatz, g.name)
        solution = solve_connection(p, g, ansatz, args.degree)
    if ansatz is not None:
        cert.params['ansatz'] = ansatz.name
    if ansatz is None or solution.status == NO_SOLUTION:
        cert.status = NO_SOLUTION
        if solution is not None:
            w['solution'] = solution_witness(p, solution)
        return EXIT_NO_SOLUTION, cert, ['%s: no solution' % p.name]

    w['solution'] = solution_witness(p, solution)
    lines = ['%s = %s' % kv for kv in w['solution']['coefficients'].items()]
    reports = list(connection_powers(p, g, solution.omega, args.power,
                                     args.degree)) if solution.ok else []
    w['powers'] = [power_witness(r) for r in reports]
    ok = solution.ok and all(r.ok for r in reports)
    for r in reports:
        lines.append('w(%d): %d terms, mu %s%s' % (
            r.n, len(r.omega), 'ok' if r.mu_ok else 'FAILED',
            '' if not r.leg_failures else ', legs FAILED'))

    source = doc.source[len(CATALOG_PREFIX):] \
        if doc.source.startswith(CATALOG_PREFIX) else None
    if source in LENS_SYSTEMS and g.group.modulus:
        w['determinant'] = determinant_witness(g.group.modulus, p.field)
        lines.append('det = %s' % w['determinant']['det'])
    if source == 'torus' and isinstance(g, InvolutiveGrading):
        w['pillow'] = _pillow_witness(p, g)
        ok = ok and w['pillow']['identity_holds'] \
            and all(w['pillow']['sigma_odd'].values())
        lines.append('pillow identity: %s = %s' % (w['pillow']['identity'],
                                                   w['pillow']['constant']))

    value = _param_value(args)
    if value is not None and solution.omega is not None:
        def check(v):
            sp = p.specialize(v)
            out = []
            for r in reports:
                omega = TensorElement(sp.field, {
                    pair: sp.field.convert(c)
                    for pair, c in r.omega.terms.items()})
                if tensor_mu(sp, omega) != sp.one():
                    out.append('mu(w(%d)) != 1 at %s' % (r.n, v))
            return out
        ok = _cross_check(cert, value, check) and ok

    cert.status = PASS if ok else FAIL
    lines.append('%s: %s' % (p.name, cert.status))
    return (EXIT_OK if ok else EXIT_VERIFICATION), cert, lines


def cmd_gwa(args):
    doc = _load(args)
    p = doc.presentation()
    cert = _certificate('gwa', doc)
    status, w = gwa_witness(p)
    cert.witnesses = w
    cert.status = status
    if status == FAIL:
        return EXIT_VERIFICATION, cert, ['%s: no GWA structure' % p.name]
    lines = ['%s: xp = %s, xm = %s, kappa = %s, chi = %s' % (
        p.name, w['xp'], w['xm'], w['kappa'], w['chi']),
        'gcd(p, p\') = %s' % w['gcd_text'], 'verdict: %s' % w['verdict']]
    if 'nakayama' in w:
        lines.append('nakayama: %s' % ', '.join(
            name for name, ok in w['nakayama'].items() if ok))

    value = _param_value(args)
    if value is not None:
        def check(v):
            sp = p.specialize(v)
            cand = gwa_match(sp, w['base'], w['xp']).candidates[0]
            if not cand.ok:
                return ['GWA axioms fail at %s' % v]
            out = []
            for key in ('kappa', 'chi'):
                if getattr(cand, key) != sp.field.parse(w[key]):
                    out.append('%s at %s differs from the evaluated %s'
                               % (key, v, key))
            return out
        if not _cross_check(cert, value, check):
            return EXIT_VERIFICATION, cert, lines + ['cross-check FAILED']
    return EXIT_OK, cert, lines


def _with_fuel(p, fuel):
    return Presentation(p.name, p.field, p.generators, p.rules, p.params,
                        fuel)


def _specialize_morphism(m, v):
    source, target = m.source.specialize(v), m.target.specialize(v)
    images = {g: _specialize(e, target.field) for g, e in m.images.items()}
    return MorphismSpec(m.name, source, target, images)


def cmd_tower(args):
    morphisms = catalog.get_tower(args.name, args.l)
    l = morphisms[0].source.params.get('l')
    cert = _certificate('tower', None, tower=args.name, l=l)
    edges = []
    ok = True
    lines = []
    for m in morphisms:
        if args.fuel is not None:
            m = MorphismSpec(m.name, _with_fuel(m.source, args.fuel),
                             _with_fuel(m.target, args.fuel), m.images)
        edge_ok, witness = morphism_witness(m)
        ok = ok and edge_ok
        edges.append(witness)
        lines.append('%s: %s (%d checks)' % (m.name, 'ok' if edge_ok
                                             else 'FAILED',
                                             witness['checked']))
        lines += witness['failures']
    cert.witnesses['edges'] = edges
    if args.name in DIRECT:
        edge, images = DIRECT[args.name]
        mismatch = direct_substitution(catalog.get_morphism(edge, l),
                                       images(l))
        cert.witnesses['direct_substitution'] = mismatch
        ok = ok and not mismatch
        lines.append('%s equals direct substitution: %s'
                     % (edge, 'yes' if not mismatch else 'NO'))

    value = _param_value(args)
    if value is not None:
        def check(v):
            out = []
            for m in morphisms:
                out += verify_morphism(_specialize_morphism(m, v)).failures()
            return out
        ok = _cross_check(cert, value, check) and ok

    cert.status = PASS if ok else FAIL
    return (EXIT_OK if ok else EXIT_VERIFICATION), cert, lines


def cmd_catalog(args):
    if args.emit:
        doc = catalog_document(args.emit, args.l, args.k, args.printed)
        cert = _certificate('catalog', doc, emit=args.emit)
        cert.witnesses['dsl'] = cert.algebra['dsl']
        cert.status = PASS
        return EXIT_OK, cert, [cert.algebra['dsl'].rstrip('\n')]
    entries = []
    for name in catalog.list_entries():
        entry = catalog.ENTRIES[name]
        entries.append({'name': name, 'description': entry.description,
                        'gradings': list(entry.gradings),
                        'ansatze': list(entry.ansatze)})
    cert = _certificate('catalog', None)
    cert.witnesses.update(entries=entries, morphisms=catalog.list_edges(),
                          towers=sorted(catalog.TOWERS))
    cert.status = PASS
    lines = ['%-10s %s' % (e['name'], e['description']) for e in entries]
    lines += ['morphism %s' % e for e in catalog.list_edges()]
    return EXIT_OK, cert, lines


def cmd_sweep(args):
    tasks = sweep_tasks(args.kind, args.max_k, args.max_l)
    results = run_sweep(tasks, args.num_workers)
    cert = _certificate('sweep', None, kind=args.kind, max_k=args.max_k,
                        max_l=args.max_l)
    cert.witnesses['results'] = results
    ok = all(r['ok'] for r in results)
    cert.status = PASS if ok else FAIL
    lines = []
    for r in results:
        label = ('k=%s l=%s %s' % (r.get('k'), r.get('l'), r.get('verdict'))
                 if r['kind'] == 'gwa'
                 else '%s l=%s' % (r.get('name'), r.get('l')))
        lines.append('%s: %s' % (label, 'ok' if r['ok'] else 'FAILED'))
    return (EXIT_OK if ok else EXIT_VERIFICATION), cert, lines


# recheck

def _document(cert):
    return parse_dsl(cert.algebra['dsl'])


def _recheck_check(cert):
    doc = _document(cert)
    p = doc.presentation()
    if not validate_presentation(p).ok:
        return ['presentation fails validation']
    pairs = [c.describe(p) for c in confluence_check(p)]
    if pairs != cert.witnesses.get('critical_pairs', []):
        return ['critical pairs differ from the certificate']
    if cert.status == PASS and pairs:
        return ['pass status with unresolved critical pairs']
    return []


def _recheck_nf(cert):
    doc = _document(cert)
    p = doc.presentation()
    e = parse_expression(doc, cert.witnesses['input'])
    got = p.format(p.normal_form(e))
    if got != cert.witnesses['normal_form']:
        return ['normal form is %s, certificate says %s'
                % (got, cert.witnesses['normal_form'])]
    return []


def _recheck_grade(cert):
    doc = _document(cert)
    p = doc.presentation()
    g = _grading(doc, cert.params['grading'])
    if check_rule_homogeneity(p, g).violations != \
            cert.witnesses['violations']:
        return ['homogeneity violations differ from the certificate']
    return []


def _recheck_connection(cert):
    doc = _document(cert)
    p = doc.presentation()
    g = _grading(doc, cert.params['grading'])
    degree = cert.params.get('degree', 1)
    problems = []
    powers = cert.witnesses.get('powers', [])
    if cert.status == PASS and not powers:
        problems.append('pass status without a connection witness')
    for entry in powers:
        omega = tensor_from_json(p, entry['omega'])
        report = verify_connection(p, g, omega, entry['n'], degree)
        if not report.mu_ok:
            problems.append('mu(w(%d)) != 1' % entry['n'])
        if report.leg_failures:
            problems.append('w(%d) legs: %s' % (
                entry['n'], '; '.join(report.leg_failures)))
    det = cert.witnesses.get('determinant')
    if det is not None and det != determinant_witness(det['l'], p.field):
        problems.append('determinant witness differs')
    return problems


def _recheck_gwa(cert):
    w = cert.witnesses
    if cert.status == FAIL:
        return []
    doc = _document(cert)
    p = doc.presentation()
    field = p.field
    cand = gwa_match(p, w['base'], w['xp']).candidates[0]
    problems = []
    if not cand.ok:
        problems.append('GWA axioms fail for xp = %s' % w['xp'])
        return problems
    if field.format(cand.kappa) != w['kappa'] or \
            field.format(cand.chi) != w['chi']:
        problems.append('twist differs from the certificate')
    problems += recheck_gcd(field, w)
    if 'nakayama' in w:
        spec = cand.spec(field)
        report = nakayama_check(spec, p, w['xp'], w['xm'], w['base'])
        if report.conventions != w['nakayama']:
            problems.append('Nakayama conventions differ')
    return problems


def _recheck_tower(cert):
    problems = []
    l = cert.params.get('l')
    for edge in cert.witnesses['edges']:
        report = verify_morphism(catalog.get_morphism(edge['edge'], l))
        if report.failures() != edge['failures']:
            problems.append('%s: failures differ' % edge['edge'])
    return problems


def _recheck_catalog(cert):
    text = cert.witnesses.get('dsl')
    if text is not None and emit_dsl(parse_dsl(text)) != text:
        return ['emitted document does not round-trip']
    return []


def _recheck_sweep(cert):
    problems = []
    for r in cert.witnesses['results']:
        if r['kind'] == 'gwa':
            args = (r['k'], r['l'])
        else:
            args = (r['name'], r['l'])
        if 'error' in r:
            continue
        again = run_sweep([(r['kind'], args)])[0]
        if again['ok'] != r['ok']:
            problems.append('%s%s: ok flag differs' % (r['kind'], args))
    return problems


RECHECKS = {
    'check': _recheck_check,
    'nf': _recheck_nf,
    'grade': _recheck_grade,
    'connection': _recheck_connection,
    'gwa': _recheck_gwa,
    'tower': _recheck_tower,
    'catalog': _recheck_catalog,
    'sweep': _recheck_sweep,
}


def recheck_certificate(cert):
    """Problems found re-verifying the witnesses of cert."""
    try:
        check = RECHECKS[cert.task]
    except KeyError:
        return ['cannot recheck task %r' % cert.task]
    return check(cert)


def cmd_recheck(args):
    original = load_certificate(args.certificate)
    problems = recheck_certificate(original)
    cert = _certificate('recheck', None, certificate=args.certificate,
                        task=original.task)
    cert.witnesses['problems'] = problems
    cert.status = FAIL if problems else PASS
    lines = problems or ['%s certificate: witnesses verified' % original.task]
    return (EXIT_VERIFICATION if problems else EXIT_OK), cert, lines


COMMANDS = {
    'check': cmd_check,
    'nf': cmd_nf,
    'grade': cmd_grade,
    'connection': cmd_connection,
    'gwa': cmd_gwa,
    'tower': cmd_tower,
    'catalog': cmd_catalog,
    'recheck': cmd_recheck,
    'sweep': cmd_sweep,
}


def run(args, out=None):
    out = out or sys.stdout
    if args.verbose:
        log.setLevel(logging.DEBUG)
    elif args.quiet:
        log.setLevel(logging.WARNING)
    start = timeit.default_timer()
    try:
        code, cert, lines = COMMANDS[args.command](args)
    except (DslSyntaxError, CatalogError, UnknownName, OSError) as e:
        log.error('%s', e)
        return EXIT_PARSE
    except (PresentationError, GradingError, GWAError, ScalarError) as e:
        log.error('%s', e)
        return EXIT_VALIDATION
    except FuelExhausted as e:
        log.error('%s', e)
        return EXIT_VERIFICATION
    except Exception as e:
        log.error('Exception in command %s', args.command)
        traceback.print_exc()
        raise e
    cert.timing = {'seconds': round(timeit.default_timer() - start, 6)}

    if args.json:
        out.write(cert.to_json() + '\n')
    else:
        for line in lines:
            out.write(line + '\n')
    if args.out:
        CertificateWriter(args.out).write(cert)
    return code
