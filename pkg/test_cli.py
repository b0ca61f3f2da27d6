"""
DSL round trips, the command-line contract and certificates
"""

import sys
import os
import io
import json

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from qsmooth import catalog
from qsmooth.algebra.elements import Element
from qsmooth.algebra.presentation import RewriteRule
from qsmooth.algebra.sampling import make_rng, random_element, random_word
from qsmooth.algebra.scalars import Parameter
from qsmooth.algebra.utils import DslSyntaxError
from qsmooth.cli import (EXIT_NO_SOLUTION, EXIT_OK, EXIT_PARSE,
                         EXIT_VALIDATION, EXIT_VERIFICATION, main)
from qsmooth.cli.dsl import (DslDocument, GeneratorDecl, catalog_document,
                             emit_dsl, parse_dsl, parse_expression,
                             tokenize)
from qsmooth.cli.pool import task_allocation_per_worker

HEADER = 'algebra test over q real\n'


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*(argv + ('--json',)))
    return code, json.loads(text)


def write(tmp_path, text, name='algebra.qs'):
    path = tmp_path / name
    path.write_text(text, encoding='utf8')
    return str(path)


# DSL

def test_parse_rule():
    doc = parse_dsl(HEADER + 'gen alpha selfadjoint\ngen beta selfadjoint\n'
                    'rule beta.alpha -> (1/q) * alpha.beta ;\n')
    assert len(doc.rules) == 1
    rule = doc.rules[0]
    assert rule.lhs == ('beta', 'alpha')
    f = doc.field
    assert rule.rhs == Element.word(f, ('alpha', 'beta'), f.power(-1))


def test_composite_star_image():
    doc = parse_dsl('algebra s over q real\n'
                    'gen zeta1 star -> zeta1.xi\n'
                    'gen xi star -> xi*\ngen xi* star -> xi\n')
    zeta1 = doc.generators[0]
    assert zeta1.star == Element.word(doc.field, ('zeta1', 'xi'))


def test_expressions():
    doc = parse_dsl(HEADER + 'gen x selfadjoint\n')
    f = doc.field
    e = parse_expression(doc, '-2 * x.x + (q^2 - 1) * x - 1')
    want = Element.word(f, ('x', 'x'), -2) + \
        Element.word(f, ('x',), f.power(2) - 1) - Element.one(f)
    assert e == want
    assert parse_expression(doc, '0') == Element(f)


def test_gradings_and_ansatze():
    doc = parse_dsl(HEADER + '''
        gen x weight 2 star -> y   # a comment
        gen y weight 2 star -> x
        grading G : Z/3 { x = 1, y = -1 }
        involution s { x -> y, y -> x }
        ansatz G { c : (2) * [y, x], c : [x.y, 1] }
    ''')
    g = doc.gradings['G']
    assert g.group.label == 'Z/3'
    assert g.degrees == {'x': 1, 'y': 2}
    assert doc.gradings['s'].images['x'] == Element.gen(doc.field, 'y')
    ansatz = doc.ansatze['G']
    assert ansatz.unknowns == ['c']
    assert ansatz.terms[0].coefficient == doc.field.convert(2)
    assert doc.generators[0].weight == 2


@pytest.mark.parametrize('text,line,column', [
    (HEADER + 'gen a selfadjoint\nrule a. -> 1 ;\n', 3, 9),
    (HEADER + 'gen a selfadjoint\nrule a -> b ;\n', 3, 11),
    (HEADER + 'gen a selfadjoint\nrule a -> (q +* 1) * a ;\n', 3, 11),
    (HEADER + 'gen a selfadjoint\nrule a -> a\n', 4, 1),
    ('algebra test over q imaginary\n', 1, 21),
    (HEADER + 'gen a selfadjoint\nrule a -> (q * a ;\n', 3, 11),
])
def test_syntax_errors(text, line, column):
    with pytest.raises(DslSyntaxError) as info:
        parse_dsl(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_keywords_are_reserved():
    assert [t.type for t in tokenize('gen star* -> (q)')] == \
        ['GEN', 'NAME', 'ARROW', 'SCALAR']
    with pytest.raises(DslSyntaxError) as info:
        parse_dsl(HEADER + 'gen rule selfadjoint\n')
    assert (info.value.line, info.value.column) == (2, 5)


def test_expression_errors():
    doc = parse_dsl(HEADER + 'gen x selfadjoint\n')
    with pytest.raises(DslSyntaxError) as info:
        parse_expression(doc, 'x.y')
    assert (info.value.line, info.value.column) == (1, 3)
    with pytest.raises(DslSyntaxError) as info:
        parse_expression(doc, 'x +')
    assert (info.value.line, info.value.column) == (1, 4)


@pytest.mark.parametrize('name', catalog.list_entries())
def test_catalog_round_trip(name):
    doc = catalog_document(name, l=3, k=1 if name != 'evenwp' else None)
    text = emit_dsl(doc)
    again = parse_dsl(text)
    assert emit_dsl(again) == text
    assert emit_dsl(catalog_document(name, l=3, k=1 if name != 'evenwp'
                                     else None)) == text


def random_document(rng, index):
    mode = 'real' if index % 2 else 'unitary'
    doc = DslDocument('random%d' % index, Parameter('t', mode))
    n = int(rng.integers(1, 4))
    for i in range(n):
        doc.generators.append(GeneratorDecl('g%d' % i,
                                            int(rng.integers(1, 3))))
        doc.generators.append(GeneratorDecl('g%d*' % i, 1))
    doc.generators[0].star = None
    p = doc.presentation()
    for decl in doc.generators[1:]:
        decl.star = random_element(p, rng, terms=2, max_len=2)
    for _ in range(int(rng.integers(0, 4))):
        lhs = random_word(p, rng, max_len=3, min_len=1)
        doc.rules.append(RewriteRule(lhs, random_element(p, rng, max_len=3)))
    doc._presentation = None
    return doc


def test_random_documents_round_trip():
    rng = make_rng(11)
    for i in range(100):
        text = emit_dsl(random_document(rng, i))
        assert emit_dsl(parse_dsl(text)) == text


# commands

def test_check():
    code, cert = run_json('check', 'catalog:su2q', '--samples', '3')
    assert code == EXIT_OK
    assert cert['status'] == 'pass'
    assert cert['witnesses']['critical_pairs'] == []
    assert cert['witnesses']['properties'] == []


def test_check_printed_variant_fails():
    code, cert = run_json('check', 'catalog:A', '-k', '2', '-l', '2',
                          '--printed')
    assert code == EXIT_VERIFICATION
    assert cert['witnesses']['critical_pairs']


def test_nf():
    code, text = run('nf', 'catalog:su2q', '-e', 'alpha.beta')
    assert code == EXIT_OK
    assert text == '(q) * beta.alpha\n'


def test_grade():
    code, cert = run_json('grade', 'catalog:torus', '-g', 'sigma', '-e', 'U')
    assert code == EXIT_OK
    assert set(cert['witnesses']['components']) == {'0', '1'}


def test_connection_certificate():
    code, cert = run_json('connection', 'catalog:su2q', '-g', 'Zl', '-l', '4',
                          '--power', '4')
    assert code == EXIT_OK
    assert cert['status'] == 'pass'
    w = cert['witnesses']
    assert sorted(w['solution']['coefficients']) == ['x1', 'y1', 'y2', 'y3']
    assert [p['n'] for p in w['powers']] == [1, 2, 3, 4]
    assert all(p['mu'] and not p['legs'] for p in w['powers'])
    det = w['determinant']
    assert det['matches_closed_form']
    assert not det['matches_printed_closed_form']
    assert det['expansion_matches_cofactors']


def test_pillow_connection():
    code, cert = run_json('connection', 'catalog:torus', '-g', 'sigma')
    assert code == EXIT_OK
    pillow = cert['witnesses']['pillow']
    assert pillow['identity_holds']
    assert all(pillow['sigma_odd'].values())


def test_search():
    code, cert = run_json('connection', 'catalog:s2u', '-g', 'Z2',
                          '--search', '2')
    assert code == EXIT_OK
    assert cert['params']['ansatz'].startswith('search-')


def test_param_value_cross_check():
    code, cert = run_json('connection', 'catalog:su2q', '-g', 'Zl', '-l', '3',
                          '--power', '3', '--param-value', '1/2')
    assert code == EXIT_OK
    assert cert['witnesses']['param_value']['failures'] == []
    code, cert = run_json('tower', 'wp', '-l', '2', '--param-value', '1/2')
    assert code == EXIT_OK
    code, cert = run_json('nf', 'catalog:torus', '-e', 'V.U.V*',
                          '--param-value', '3')
    assert code == EXIT_OK


def test_gwa_not_smooth():
    code, cert = run_json('gwa', 'catalog:A', '-k', '2', '-l', '1')
    assert code == EXIT_OK
    assert cert['status'] == 'not-smooth'
    assert cert['witnesses']['gcd_text'] == 'a'


def test_gwa_smooth():
    code, cert = run_json('gwa', 'catalog:wp', '-l', '2')
    assert code == EXIT_OK
    assert cert['status'] == 'smooth-dim-2'
    assert any(cert['witnesses']['nakayama'].values())


def test_tower():
    code, cert = run_json('tower', 'rp2minus', '-l', '3')
    assert code == EXIT_OK
    assert len(cert['witnesses']['edges']) == 4
    code, cert = run_json('tower', 'wp', '-l', '3')
    assert code == EXIT_OK
    assert cert['witnesses']['direct_substitution'] == []


def test_catalog_listing_and_emit():
    code, text = run('catalog')
    assert code == EXIT_OK
    assert 'su2q' in text
    code, text = run('catalog', '--emit', 'su2q', '-l', '3')
    assert code == EXIT_OK
    assert text == emit_dsl(catalog_document('su2q', l=3))


def test_exit_codes(tmp_path):
    assert run('check', write(tmp_path, 'algebra x over\n'))[0] == EXIT_PARSE
    assert run('check', str(tmp_path / 'missing.qs'))[0] == EXIT_PARSE
    assert run('check', 'catalog:nope')[0] == EXIT_PARSE
    assert run('nf', 'catalog:su2q', '-e', 'gamma')[0] == EXIT_PARSE
    assert run('grade', 'catalog:su2q', '-g', 'nope')[0] == EXIT_PARSE
    growing = write(tmp_path, HEADER + 'gen x selfadjoint\n'
                    'gen y selfadjoint\nrule x -> y.y ;\n', 'growing.qs')
    assert run('check', growing)[0] == EXIT_VALIDATION
    hopeless = write(tmp_path, HEADER + 'gen x selfadjoint\n'
                     'grading G : Z/2 { x = 1 }\n'
                     'ansatz G { c : [x, x] }\n', 'hopeless.qs')
    assert run('connection', hopeless, '-g', 'G')[0] == EXIT_NO_SOLUTION


def test_fuel_flag():
    code, _ = run('nf', 'catalog:A', '-k', '3', '-l', '3', '-e',
                  'b.b.b*.b*', '--fuel', '1')
    assert code == EXIT_VERIFICATION


def test_recheck(tmp_path):
    path = str(tmp_path / 'certs' / 'su2q.json')
    code, _ = run('connection', 'catalog:su2q', '-g', 'Zl', '-l', '3',
                  '--power', '2', '--out', path)
    assert code == EXIT_OK
    assert run('recheck', path)[0] == EXIT_OK

    with open(path, encoding='utf8') as f:
        cert = json.load(f)
    omega = cert['witnesses']['powers'][0]['omega']
    omega[0][0] = '7'
    with open(path, 'w', encoding='utf8') as f:
        json.dump(cert, f)
    assert run('recheck', path)[0] == EXIT_VERIFICATION


def test_recheck_gwa(tmp_path):
    path = str(tmp_path / 'gwa.json')
    assert run('gwa', 'catalog:A', '-k', '3', '-l', '2', '--out', path)[0] \
        == EXIT_OK
    assert run('recheck', path)[0] == EXIT_OK
    with open(path, encoding='utf8') as f:
        cert = json.load(f)
    cert['witnesses']['verdict'] = 'smooth-dim-2'
    with open(path, 'w', encoding='utf8') as f:
        json.dump(cert, f)
    assert run('recheck', path)[0] == EXIT_VERIFICATION


def test_deterministic_certificates():
    argv = ('connection', 'catalog:su2q', '-g', 'Zl', '-l', '3')
    _, first = run_json(*argv)
    _, second = run_json(*argv)
    first.pop('timing')
    second.pop('timing')
    assert first == second


def test_allocation():
    tasks = list(range(5))
    assert task_allocation_per_worker(tasks, 2) == [
        [(0, 0), (2, 2), (4, 4)], [(1, 1), (3, 3)]]


def test_sweep():
    code, cert = run_json('sweep', 'gwa', '-K', '2', '-L', '2')
    assert code == EXIT_OK
    assert len(cert['witnesses']['results']) == 6
    code, cert = run_json('sweep', 'tower', '-L', '1', '--num_workers', '2')
    assert code == EXIT_OK
    assert [r['name'] for r in cert['witnesses']['results']] == \
        ['rp2minus', 'wp']
