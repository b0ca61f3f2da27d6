"""
Strong connections for group gradings.

A connection for the degree g is an element w of A_{-g} (x) A_g whose
product mu(w) is 1. Given one for g, the one for n*g is built by
sandwiching: w(n+1) = sum_i u_i w(n) v_i where w(1) = sum_i u_i (x) v_i.

The solver takes an ansatz (pairs of homogeneous legs with unknown
coefficients), reduces sum c_i u_i v_i - 1 to normal form and solves
the linear system in the coefficients exactly.
"""

from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional

from sympy.polys.matrices import DomainMatrix

from qsmooth.algebra.elements import Element
from qsmooth.algebra.scalars import (poly_coefficients, scalar_field)
from qsmooth.algebra.utils import ONE, GradingError, log

from .groups import InvolutiveGrading
from .tensor import TensorElement, collect, sandwich_terms, tensor_mu

NO_SOLUTION = 'no-solution'
PASS = 'pass'
FAIL = 'fail'


@dataclass
class AnsatzTerm:
    unknown: str
    left: Element
    right: Element
    coefficient: object = None


@dataclass
class ConnectionAnsatz:
    name: str
    terms: List[AnsatzTerm]

    @property
    def unknowns(self):
        seen = []
        for t in self.terms:
            if t.unknown not in seen:
                seen.append(t.unknown)
        return seen


@dataclass
class ConnectionSolution:
    ansatz: str
    status: str
    unknowns: List[str]
    values: Dict[str, object] = dc_field(default_factory=dict)
    free: List[str] = dc_field(default_factory=list)
    omega: Optional[TensorElement] = None
    mu: Optional[Element] = None
    equations: int = 0

    @property
    def ok(self):
        return self.status == PASS


@dataclass
class PowerReport:
    n: int
    omega: TensorElement
    mu_ok: bool
    leg_failures: List[str] = dc_field(default_factory=list)

    @property
    def ok(self):
        return self.mu_ok and not self.leg_failures


def ansatz_failures(p, grading, ansatz, degree=1):
    """Legs that are not homogeneous of degrees (-degree, degree)."""
    group = grading.group
    want_left, want_right = group.inverse(degree), group.reduce(degree)
    out = []
    for t in ansatz.terms:
        dl, dr = grading.degree(p, t.left), grading.degree(p, t.right)
        if dl != want_left or dr != want_right:
            out.append('%s: legs %s, %s have degrees (%s, %s)' % (
                t.unknown, p.format(t.left), p.format(t.right), dl, dr))
    return out


def _term_coefficient(p, term):
    if term.coefficient is None:
        return p.field.one
    return p.field.convert(term.coefficient)


def solve_connection(p, grading, ansatz, degree=1):
    bad = ansatz_failures(p, grading, ansatz, degree)
    if bad:
        raise GradingError('ansatz %s is not homogeneous: %s'
                           % (ansatz.name, '; '.join(bad)))
    field = p.field
    unknowns = ansatz.unknowns
    columns = {u: Element(field) for u in unknowns}
    for t in ansatz.terms:
        product = p.normal_form(t.left * t.right)
        columns[t.unknown] = columns[t.unknown] + \
            product.scale(_term_coefficient(p, t))

    words = {ONE}
    for col in columns.values():
        words.update(col.terms)
    words = sorted(words, key=p.key)
    n = len(unknowns)
    rows = [[columns[u].coefficient(w) for u in unknowns]
            + [field.one if w == ONE else field.zero] for w in words]
    system = DomainMatrix(rows, (len(rows), n + 1), field.domain)
    reduced, pivots = system.rref()
    log.debug('%s: %d equations in %d unknowns, pivots %s', ansatz.name,
              len(rows), n, pivots)
    if n in pivots:
        return ConnectionSolution(ansatz.name, NO_SOLUTION, unknowns,
                                  equations=len(rows))

    reduced = _rows(reduced)
    values = {u: field.zero for u in unknowns}
    for r, c in enumerate(pivots):
        values[unknowns[c]] = reduced[r][n]
    free = [u for i, u in enumerate(unknowns) if i not in pivots]
    omega = TensorElement.from_pairs(
        p, [(_term_coefficient(p, t) * values[t.unknown], t.left, t.right)
            for t in ansatz.terms])
    mu = tensor_mu(p, omega)
    status = PASS if mu == p.one() else FAIL
    return ConnectionSolution(ansatz.name, status, unknowns, values, free,
                              omega, mu, len(rows))


def verify_connection(p, grading, omega, n=1, degree=1):
    """Check mu(omega) = 1 and leg membership for the degree n*degree."""
    group = grading.group
    right = group.times(n, degree)
    failures = grading.leg_failures(p, omega, group.inverse(right), right)
    return PowerReport(n, omega, tensor_mu(p, omega) == p.one(), failures)


def _next_power(p, omega1, current):
    """w(n+1) = sum c * u w(n) v over the terms c * u (x) v of w(1)."""
    return collect(p.field, (
        item for (u, v), c in omega1.terms.items()
        for item in sandwich_terms(p, Element.word(p.field, u), current,
                                   Element.word(p.field, v), c)))


def connection_powers(p, grading, omega1, up_to, degree=1):
    """Yield the verified w(n) for n = 1 .. up_to."""
    current = omega1
    for n in range(1, up_to + 1):
        if n > 1:
            current = _next_power(p, omega1, current)
        report = verify_connection(p, grading, current, n, degree)
        log.info('%s: w(%d) has %d terms, mu %s', p.name, n, len(current),
                 'ok' if report.mu_ok else 'FAILED')
        yield report


def connection_power(p, grading, omega1, n, degree=1):
    if n < 0:
        raise GradingError('connection power needs n >= 0')
    if n == 0:
        return verify_connection(p, grading, TensorElement.unit(p.field),
                                 0, degree)
    report = None
    for report in connection_powers(p, grading, omega1, n, degree):
        pass
    return report


def _rows(m):
    return [list(row) for row in m.to_ddm()]


# the q-binomial system for the quantum lens spaces

def poch_expand(m, field=None):
    """Coefficients of (a; q^2)_m = prod_{k<m} (1 - q^(2k) a)."""
    if m < 0:
        raise GradingError('poch_expand needs m >= 0')
    field = field or scalar_field('q')
    R, a = field.poly_ring()
    f = R.one
    for k in range(m):
        f = f * (R.one - a * field.power(2 * k))
    return poly_coefficients(f)


def connection_matrix(l, field=None):
    if l < 1:
        raise GradingError('connection matrix needs l >= 1')
    field = field or scalar_field('q')
    coeffs = poch_expand(l - 1, field)
    qm2 = field.power(-2)
    rows = []
    for r in range(l):
        row = [coeffs[r]]
        for j in range(1, l):
            entry = field.zero
            if r == j - 1:
                entry += field.one
            if r == j:
                entry -= qm2
            row.append(entry)
        rows.append(row)
    return DomainMatrix(rows, (l, l), field.domain)


def connection_matrix_det(l, field=None):
    return connection_matrix(l, field).det()


def _prod_factor(l, field):
    out = field.one
    for k in range(1, l):
        out = out * (field.one - field.power(2 * k))
    return out


def det_closed_forms(l, field=None):
    """(-q^-2)^(l-1) prod(1 - q^2p) and the variant with (-q^2)^(l-1)."""
    field = field or scalar_field('q')
    base = _prod_factor(l, field)
    return {
        'computed': (-field.power(-2)) ** (l - 1) * base,
        'printed': (-field.power(2)) ** (l - 1) * base,
    }


def cofactor_terms(l, field=None):
    """First-column cofactor expansion of the connection matrix."""
    field = field or scalar_field('q')
    rows = _rows(connection_matrix(l, field))
    out = []
    for r in range(l):
        minor = [row[1:] for i, row in enumerate(rows) if i != r]
        det = DomainMatrix(minor, (l - 1, l - 1), field.domain).det() \
            if l > 1 else field.one
        sign = field.one if r % 2 == 0 else -field.one
        out.append(sign * rows[r][0] * det)
    return out


def expansion_terms(l, field=None):
    """(-1)^(l-1) q^(-2(l-1-p)) c_p for p = 0 .. l-1."""
    field = field or scalar_field('q')
    coeffs = poch_expand(l - 1, field)
    sign = field.one if (l - 1) % 2 == 0 else -field.one
    return [sign * field.power(-2 * (l - 1 - r)) * coeffs[r]
            for r in range(l)]


def verify_poch_identity(p, m, alpha='alpha', beta='beta'):
    """NF(alpha^m alpha*^m) = sum_p c_p NF((beta beta*)^p)."""
    field = p.field
    lhs = p.normal_form(p.gen(alpha) ** m * p.gen(alpha + '*') ** m)
    a = p.gen(beta) * p.gen(beta + '*')
    rhs = Element(field)
    for k, c in enumerate(poch_expand(m, field)):
        rhs = rhs + p.normal_form(a ** k).scale(c)
    return lhs == rhs


# generic ansatz search

def irreducible_words(p, max_len):
    """Irreducible words of length <= max_len in enumeration order."""
    names = p.generators.names
    level = [ONE]
    out = [ONE]
    for _ in range(max_len):
        nxt = []
        for w in level:
            for g in names:
                v = w + (g,)
                # a reducible word has no irreducible extensions
                if p.is_irreducible(v):
                    nxt.append(v)
        out.extend(nxt)
        level = nxt
    return out


def generic_ansatz(p, grading, degree, cap):
    if isinstance(grading, InvolutiveGrading):
        raise GradingError('ansatz search needs a generator-degree grading')
    group = grading.group
    want_left, want_right = group.inverse(degree), group.reduce(degree)
    words = irreducible_words(p, cap)
    lefts = [w for w in words if grading.word_degree(w) == want_left]
    rights = [w for w in words if grading.word_degree(w) == want_right]
    terms = []
    for u in lefts:
        for v in rights:
            terms.append(AnsatzTerm('c%d' % len(terms),
                                    Element.word(p.field, u),
                                    Element.word(p.field, v)))
    return ConnectionAnsatz('search-%d' % cap, terms)


def search_connection(p, grading, degree=1, max_len=2):
    """First solvable generic ansatz with word length cap 1 .. max_len."""
    solution = None
    for cap in range(1, max_len + 1):
        ansatz = generic_ansatz(p, grading, degree, cap)
        if not ansatz.terms:
            continue
        solution = solve_connection(p, grading, ansatz, degree)
        log.info('%s: search cap %d with %d pairs: %s', p.name, cap,
                 len(ansatz.terms), solution.status)
        if solution.ok:
            return ansatz, solution
    return None, solution


def format_solution(p, solution):
    return {u: p.field.format(v) for u, v in solution.values.items()}
