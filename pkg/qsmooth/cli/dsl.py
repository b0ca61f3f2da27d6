"""
Text format for presentations, gradings and connection ansatze.

    algebra su2q over q real
    gen beta star -> beta*
    gen beta* star -> beta
    gen alpha weight 1 star -> alpha*
    rule alpha.beta -> (q) * beta.alpha ;
    grading Zl : Z/3 { alpha = 1, alpha* = 2, beta = 0, beta* = 0 }
    involution sigma { U -> U*, U* -> U }
    ansatz Zl { x1 : [alpha.alpha, alpha*.alpha*], y1 : (2) * [1, 1] }

Scalars are integers or parenthesized rational functions of the
parameter. `#` starts a comment. The keywords below cannot be used as
generator names.

The grammar is built with the PLY implementation of lex and yacc.
"""

from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Set

import ply.lex as lex
import ply.yacc as yacc

from qsmooth import catalog
from qsmooth.algebra.elements import Element, word_text
from qsmooth.algebra.presentation import Generator, Presentation, RewriteRule
from qsmooth.algebra.scalars import Parameter, scalar_field
from qsmooth.algebra.utils import MODES, DslSyntaxError, ScalarError
from qsmooth.catalog.utils import DEFAULT_K, DEFAULT_L
from qsmooth.grading.connection import AnsatzTerm, ConnectionAnsatz
from qsmooth.grading.groups import (DegreeGrading, GradingGroup,
                                    InvolutiveGrading)


@dataclass
class GeneratorDecl:
    name: str
    weight: int = 1
    star: Optional[Element] = None


@dataclass
class DslDocument:
    name: str
    parameter: Parameter
    generators: List[GeneratorDecl] = dc_field(default_factory=list)
    rules: List[RewriteRule] = dc_field(default_factory=list)
    gradings: Dict[str, object] = dc_field(default_factory=dict)
    ansatze: Dict[str, ConnectionAnsatz] = dc_field(default_factory=dict)
    # catalog origin and parameters, when the document came from there
    source: str = ''
    params: Dict[str, int] = dc_field(default_factory=dict)
    _presentation: Optional[Presentation] = None

    @property
    def field(self):
        return scalar_field(self.parameter.name, self.parameter.mode)

    def presentation(self, fuel=None):
        if self._presentation is None:
            gens = [Generator(g.name, g.weight, g.star)
                    for g in self.generators]
            self._presentation = Presentation(self.name, self.field, gens,
                                              self.rules, self.params, fuel)
        elif fuel is not None and fuel != self._presentation.fuel:
            # catalog presentations are shared, so never retune them in place
            p = self._presentation
            self._presentation = Presentation(p.name, p.field, p.generators,
                                              p.rules, p.params, fuel)
        return self._presentation

    @classmethod
    def from_presentation(cls, p, gradings=None, ansatze=None, source=''):
        doc = cls(p.name, p.field.parameter,
                  [GeneratorDecl(g.name, g.weight, g.star)
                   for g in p.generators],
                  list(p.rules), dict(gradings or {}), dict(ansatze or {}),
                  source, dict(p.params))
        doc._presentation = p
        return doc


KEYWORDS = ('algebra', 'over', 'gen', 'weight', 'selfadjoint', 'star',
            'rule', 'grading', 'involution', 'ansatz')
reserved = {word: word.upper() for word in KEYWORDS}

tokens = ('NAME', 'INT', 'SCALAR', 'ARROW') + tuple(reserved.values())

literals = ['.', ',', ';', ':', '{', '}', '[', ']', '=', '+', '-', '*', '/']


def location(text, pos):
    """(line, column) of an offset, both counted from 1."""
    line = text.count('\n', 0, pos) + 1
    return line, pos - (text.rfind('\n', 0, pos) + 1) + 1


def _error_at(text, pos, message):
    line, column = location(text, pos)
    return DslSyntaxError(message, line, column)


# Tokens

t_ARROW = r'->'
t_INT = r'[0-9]+'

# Ignored characters
t_ignore = ' \t\r'
t_ignore_COMMENT = r'\#[^\n]*'


def t_NAME(t):
    r'[A-Za-z_][A-Za-z0-9_]*\*?'
    t.type = reserved.get(t.value, 'NAME')
    return t


def t_SCALAR(t):
    r'\('
    # scalar literal: balanced parentheses, kept as raw text
    text = t.lexer.lexdata
    depth, end = 0, t.lexpos
    while end < len(text):
        ch = text[end]
        if ch == '(':
            depth += 1
        elif ch == ')':
            depth -= 1
            if depth == 0:
                break
        elif ch == '\n':
            break
        end += 1
    if depth:
        raise _error_at(text, t.lexpos, 'unterminated scalar')
    t.value = text[t.lexpos + 1:end]
    t.lexer.lexpos = end + 1
    return t


def t_newline(t):
    r'\n+'
    t.lexer.lineno += len(t.value)


def t_error(t):
    raise _error_at(t.lexer.lexdata, t.lexpos,
                    'unexpected character %r' % t.value[0])


# Build the lexer
lexer = lex.lex()


@dataclass
class ParseState:
    """What the grammar actions need besides the tokens."""
    known: Set[str] = dc_field(default_factory=set)
    field: object = None
    doc: object = None


def _lexer_for(text, state=None):
    out = lexer.clone()
    out.lineno = 1
    out.state = state
    out.input(text)
    return out


def tokenize(text):
    return list(_lexer_for(text))


def declared_generators(text):
    toks = tokenize(text)
    return {b.value for a, b in zip(toks, toks[1:])
            if a.type == 'GEN' and b.type == 'NAME'}


# Parsing rules

start = 'document'


def _fail(p, n, message):
    return _error_at(p.lexer.lexdata, p.lexpos(n), message)


def p_document(p):
    '''document : header items'''
    p[0] = p[1]


def p_header(p):
    '''header : ALGEBRA NAME OVER NAME NAME'''
    state = p.lexer.state
    if p[5] not in MODES:
        raise _fail(p, 5, 'parameter mode must be real or unitary')
    try:
        parameter = Parameter(p[4], p[5])
    except ScalarError as e:
        raise _fail(p, 4, str(e))
    state.field = scalar_field(parameter.name, parameter.mode)
    state.doc = DslDocument(p[2], parameter)
    p[0] = state.doc


def p_items(p):
    '''items : items item
             | empty'''


def p_empty(p):
    '''empty :'''


def p_item_generator(p):
    '''item : GEN NAME weight SELFADJOINT
            | GEN NAME weight STAR ARROW expression'''
    star = p[6] if len(p) == 7 else None
    p.lexer.state.doc.generators.append(GeneratorDecl(p[2], p[3], star))


def p_weight(p):
    '''weight : WEIGHT signed_int
              | empty'''
    if len(p) == 2:
        p[0] = 1
        return
    if p[2] < 1:
        raise _fail(p, 2, 'weight must be positive')
    p[0] = p[2]


def p_signed_int(p):
    '''signed_int : INT
                  | '-' INT'''
    p[0] = int(p[1]) if len(p) == 2 else -int(p[2])
    p.set_lexpos(0, p.lexpos(1))


def p_item_rule(p):
    '''item : RULE word ARROW expression ';' '''
    p.lexer.state.doc.rules.append(RewriteRule(p[2], p[4]))


def p_item_grading(p):
    '''item : GRADING NAME ':' group '{' degrees '}' '''
    g = DegreeGrading(p[2], p[4], dict(p[6]))
    p.lexer.state.doc.gradings[g.name] = g


def p_group(p):
    '''group : NAME
             | NAME '/' signed_int'''
    if p[1] != 'Z':
        raise _fail(p, 1, 'expected Z, found %r' % p[1])
    if len(p) == 2:
        p[0] = GradingGroup.integers()
        return
    if p[3] < 1:
        raise _fail(p, 3, 'Z/n needs n >= 1')
    p[0] = GradingGroup.cyclic(p[3])


def p_degrees(p):
    '''degrees : degree
               | degrees ',' degree'''
    p[0] = [p[1]] if len(p) == 2 else p[1] + [p[3]]


def p_degree(p):
    '''degree : generator '=' signed_int'''
    p[0] = (p[1], p[3])


def p_item_involution(p):
    '''item : INVOLUTION NAME '{' images '}' '''
    g = InvolutiveGrading(p[2], dict(p[4]))
    p.lexer.state.doc.gradings[g.name] = g


def p_images(p):
    '''images : image
              | images ',' image'''
    p[0] = [p[1]] if len(p) == 2 else p[1] + [p[3]]


def p_image(p):
    '''image : generator ARROW expression'''
    p[0] = (p[1], p[3])


def p_item_ansatz(p):
    '''item : ANSATZ NAME '{' pairs '}' '''
    p.lexer.state.doc.ansatze[p[2]] = ConnectionAnsatz(p[2], p[4])


def p_pairs(p):
    '''pairs : pair
             | pairs ',' pair'''
    p[0] = [p[1]] if len(p) == 2 else p[1] + [p[3]]


def p_pair(p):
    '''pair : NAME ':' legs
            | NAME ':' coefficient '*' legs'''
    if len(p) == 4:
        left, right = p[3]
        p[0] = AnsatzTerm(p[1], left, right)
    else:
        left, right = p[5]
        p[0] = AnsatzTerm(p[1], left, right, p[3])


def p_legs(p):
    '''legs : '[' expression ',' expression ']' '''
    p[0] = (p[2], p[4])


def p_expression(p):
    '''expression : term
                  | '-' term
                  | expression '+' term
                  | expression '-' term'''
    if len(p) == 2:
        p[0] = p[1]
    elif len(p) == 3:
        p[0] = -p[2]
    elif p[2] == '+':
        p[0] = p[1] + p[3]
    else:
        p[0] = p[1] - p[3]


def p_term_constant(p):
    '''term : coefficient'''
    p[0] = Element.constant(p.lexer.state.field, p[1])


def p_term_word(p):
    '''term : word
            | coefficient '*' word'''
    field = p.lexer.state.field
    if len(p) == 2:
        p[0] = Element.word(field, p[1])
    else:
        p[0] = Element.word(field, p[3], p[1])


def p_term_one(p):
    '''term : coefficient '*' INT'''
    if p[3] != '1':
        raise _fail(p, 3, 'expected a word, found %r' % p[3])
    p[0] = Element.constant(p.lexer.state.field, p[1])


def p_coefficient(p):
    '''coefficient : SCALAR
                   | INT'''
    try:
        p[0] = p.lexer.state.field.parse(p[1])
    except ScalarError as e:
        raise _fail(p, 1, str(e))


def p_word(p):
    '''word : generator
            | word '.' generator'''
    p[0] = (p[1],) if len(p) == 2 else p[1] + (p[3],)


def p_generator(p):
    '''generator : NAME'''
    if p[1] not in p.lexer.state.known:
        raise _fail(p, 1, 'unknown generator %r' % p[1])
    p[0] = p[1]


def p_error(t):
    if t is None:
        raise DslSyntaxError('unexpected end of input')
    raise _error_at(t.lexer.lexdata, t.lexpos,
                    'unexpected %r' % (t.value,))


parser = yacc.yacc(write_tables=False, debug=False)
expression_parser = yacc.yacc(start='expression', write_tables=False,
                              debug=False, errorlog=yacc.NullLogger())


def _run(parse, text, state):
    try:
        return parse.parse(text, lexer=_lexer_for(text, state))
    except DslSyntaxError as e:
        if e.line is not None:
            raise
        line, column = location(text, len(text))
        raise DslSyntaxError(e.message, line, column)


def parse_dsl(text):
    return _run(parser, text, ParseState(declared_generators(text)))


def parse_expression(doc, text):
    """An element in the document's generators and scalars."""
    state = ParseState({g.name for g in doc.generators}, doc.field, doc)
    return _run(expression_parser, text, state)


CATALOG_PREFIX = 'catalog:'


def catalog_document(name, l=None, k=None, printed=False):
    """A catalog entry with all its gradings and ansatze."""
    entry = catalog.ENTRIES.get(name)
    p = catalog.get_algebra(name, l, k, printed)
    gradings = {g: catalog.get_grading(name, g, l, k)
                for g in catalog.grading_ids(name)}
    ansatze = {a: catalog.get_ansatz(name, a, l, k)
               for a in entry.ansatze}
    doc = DslDocument.from_presentation(p, gradings, ansatze,
                                        CATALOG_PREFIX + name)
    if entry.gradings and 'l' not in doc.params:
        doc.params['l'] = DEFAULT_L if l is None else l
    if entry.uses_k and 'k' not in doc.params:
        doc.params['k'] = DEFAULT_K if k is None else k
    return doc


def load_document(source, l=None, k=None, printed=False, fuel=None):
    """catalog:NAME or the path of a UTF-8 DSL file."""
    if source.startswith(CATALOG_PREFIX):
        doc = catalog_document(source[len(CATALOG_PREFIX):], l, k, printed)
    else:
        with open(source, 'r', encoding='utf8') as f:
            doc = parse_dsl(f.read())
        doc.source = source
    doc.presentation(fuel)
    return doc


def _emit_element(p, e):
    return p.format(e) if e else '0'


def _emit_scalar(field, s):
    return '(%s)' % field.format(s)


def emit_dsl(doc):
    p = doc.presentation()
    field = doc.field
    lines = ['algebra %s over %s %s' % (doc.name, doc.parameter.name,
                                        doc.parameter.mode)]
    for g in doc.generators:
        text = 'gen %s' % g.name
        if g.weight != 1:
            text += ' weight %d' % g.weight
        if g.star is None:
            text += ' selfadjoint'
        else:
            text += ' star -> %s' % _emit_element(p, g.star)
        lines.append(text)
    for r in doc.rules:
        lines.append('rule %s -> %s ;' % (word_text(r.lhs),
                                          _emit_element(p, r.rhs)))
    order = [g.name for g in doc.generators]
    for name, g in doc.gradings.items():
        if isinstance(g, InvolutiveGrading):
            images = ', '.join('%s -> %s' % (h, _emit_element(p, g.images[h]))
                               for h in order if h in g.images)
            lines.append('involution %s { %s }' % (name, images))
        else:
            degrees = ', '.join('%s = %d' % (h, g.degrees[h])
                                for h in order if h in g.degrees)
            lines.append('grading %s : %s { %s }' % (name, g.group.label,
                                                     degrees))
    for name, a in doc.ansatze.items():
        pairs = []
        for t in a.terms:
            coeff = '' if t.coefficient is None else \
                '%s * ' % _emit_scalar(field, field.convert(t.coefficient))
            pairs.append('%s : %s[%s, %s]' % (
                t.unknown, coeff, _emit_element(p, t.left),
                _emit_element(p, t.right)))
        lines.append('ansatz %s { %s }' % (name, ', '.join(pairs)))
    return '\n'.join(lines) + '\n'
