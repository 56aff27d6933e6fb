"""Single-variable Alexander polynomial from arcs and crossing relations.

This is the classical construction, kept separate from the beta-calculus on
purpose: each crossing gives one linear relation between the over arc and the
two under arcs, and the Alexander polynomial is any first minor of the
resulting square matrix.  It shares no code with ``zbeta.beta``.
"""

from __future__ import annotations

from itertools import permutations

from zbeta.algebra import LaurentPoly, as_rational, symbol
from zbeta.errors import MultiComponentError, NonMonomialDenominator
from zbeta.tangle import PDCode, classify_crossings

__all__ = [
    "ALEXANDER_VARIABLE",
    "alexander_matrix",
    "wirtinger_alexander",
    "bareiss_det",
    "cofactor_det",
    "canonical_unit_form",
    "coefficients",
    "compare_up_to_units",
]

ALEXANDER_VARIABLE = symbol("T")
_T = LaurentPoly.var(ALEXANDER_VARIABLE)
_ONE = LaurentPoly.const(1)


def _arcs(pd: PDCode) -> dict[int, int]:
    """Map each edge to its arc index; an arc runs between two undercrossings."""
    parent = {e: e for e in pd.successor}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for _, b, _, d in pd.crossings:
        rb, rd = find(b), find(d)
        if rb != rd:
            parent[max(rb, rd)] = min(rb, rd)
    roots = sorted({find(e) for e in parent})
    index = {r: i for i, r in enumerate(roots)}
    return {e: index[find(e)] for e in parent}


def alexander_matrix(pd: PDCode) -> list[list[LaurentPoly]]:
    """Rows are crossings, columns arcs.

    A crossing of sign s with over arc k, incoming under arc i and outgoing
    under arc j contributes ``T^s x_i + (1 - T^s) x_k - x_j``.
    """
    arc = _arcs(pd)
    n_arcs = len(set(arc.values()))
    if n_arcs != pd.n_crossings:
        raise ValueError(f"{n_arcs} arcs for {pd.n_crossings} crossings; diagram is not a knot diagram")
    rows = []
    for (a, b, c, d), site in zip(pd.crossings, classify_crossings(pd)):
        t_s = _T ** site.sign
        row = [LaurentPoly.const(0)] * n_arcs
        row[arc[a]] = row[arc[a]] + t_s
        row[arc[b]] = row[arc[b]] + (_ONE - t_s)
        row[arc[c]] = row[arc[c]] - _ONE
        rows.append(row)
    return rows


def bareiss_det(matrix: list[list[LaurentPoly]]) -> LaurentPoly:
    """Fraction-free Gaussian elimination; every division is exact."""
    m = [list(r) for r in matrix]
    n = len(m)
    if n == 0:
        return _ONE
    sign = 1
    prev = _ONE
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly.const(0)
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                q = (m[i][j] * pivot - m[i][k] * m[k][j]).divexact(prev)
                if q is None:
                    raise ArithmeticError("inexact Bareiss step")
                m[i][j] = q
        prev = pivot
    return m[n - 1][n - 1] if sign > 0 else -m[n - 1][n - 1]


def cofactor_det(matrix: list[list[LaurentPoly]]) -> LaurentPoly:
    """Leibniz expansion; only sensible for small matrices."""
    n = len(matrix)
    total = LaurentPoly.const(0)
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = LaurentPoly.const(-1 if inversions % 2 else 1)
        for i, j in enumerate(perm):
            term = term * matrix[i][j]
            if term.is_zero():
                break
        total = total + term
    return total


def _minor(matrix, row: int, col: int):
    return [[x for j, x in enumerate(r) if j != col] for i, r in enumerate(matrix) if i != row]


def wirtinger_alexander(pd: PDCode, row: int | None = None, col: int | None = None, method: str = "bareiss") -> LaurentPoly:
    """Alexander polynomial of a knot, as a Laurent polynomial in ``T``.

    ``row``/``col`` choose the deleted row and column (default: the last);
    the result depends on the choice only up to ``+-T^k``.
    """
    if pd.n_components != 1:
        raise MultiComponentError(f"the Alexander oracle handles knots only; got {pd.n_components} components")
    if pd.n_crossings == 0:
        return _ONE
    matrix = alexander_matrix(pd)
    n = len(matrix)
    row = n - 1 if row is None else row
    col = n - 1 if col is None else col
    minor = _minor(matrix, row, col)
    if method == "bareiss":
        return bareiss_det(minor)
    if method == "cofactor":
        return cofactor_det(minor)
    raise ValueError(f"unknown determinant method {method!r}")


def _single_variable(p: LaurentPoly):
    vs = p.variables()
    if len(vs) > 1:
        raise ValueError(f"expected a one-variable polynomial, got variables {sorted(map(str, vs))}")
    return next(iter(vs), None)


def canonical_unit_form(p: LaurentPoly) -> LaurentPoly:
    """The multiple of ``p`` by ``+-T^k`` with lowest exponent 0 and positive lowest coefficient."""
    if p.is_zero():
        return p
    v = _single_variable(p)
    if v is None:
        c = p.constant_value()
        return LaurentPoly.const(abs(c))
    lo, _ = p.degree_range(v)
    shifted = p.mul_monomial(((v, -lo),) if lo else ())
    low_coeff = dict(shifted.items())[()]
    return -shifted if low_coeff < 0 else shifted


def coefficients(p: LaurentPoly) -> tuple[int, ...]:
    """Coefficients of the unit-canonical form, lowest degree first."""
    q = canonical_unit_form(p)
    if q.is_zero():
        return ()
    v = _single_variable(q)
    if v is None:
        return (q.constant_value(),)
    _, hi = q.degree_range(v)
    terms = {dict(m).get(v, 0): c for m, c in q.items()}
    return tuple(terms.get(k, 0) for k in range(hi + 1))


def compare_up_to_units(a, b: LaurentPoly) -> bool:
    """True iff ``a / b`` is a unit ``+-T^k`` (variable names are ignored)."""
    a = as_rational(a)
    # normalization already absorbs unit monomial denominators into num
    if not a.is_polynomial():
        raise NonMonomialDenominator(f"corner {a} is not a Laurent polynomial")
    return coefficients(a.num) == coefficients(b)
