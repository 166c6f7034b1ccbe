"""Tableau polynomial bases in three models, and expansions between them.

A tableau stands for the product of its columns.  In the Vandermonde model a
column (i, j, ..., k) read bottom-up is the product of pairwise differences
of x_i, x_j, ..., x_k; in the bracket model each height-2 column (i, j) is
the antisymmetric symbol z[i,j]; in the minor model a two-column tableau of
shape 2^m is the m x m minor of a symbolic symmetric matrix on rows given by
the first column, columns by the second.

The orthogonal basis is generated from the top tableau by edge factors
s_i + 1/rho along the tableau graph; path independence is a consequence of
the braid-type relations satisfied by those factors.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .exactpoly import (
    ONE,
    Polynomial,
    RationalFunction,
    substitute,
    variable,
    vandermonde,
)
from .symgroup import act, transposition
from .tableaux import (
    Shape,
    StandardTableau,
    TableauGraph,
    bottom_tableau,
    enumerate_syt,
    tableau_graph,
)


@dataclass(frozen=True)
class SpechtModel:
    """Which polynomial realisation a tableau is read in."""

    kind: str  # "vandermonde" | "bracket" | "minor"
    family: str

    def acting_families(self) -> tuple[str, ...]:
        return (self.family,)


def vandermonde_model(family: str = "x") -> SpechtModel:
    return SpechtModel("vandermonde", family)


def bracket_model(family: str = "z") -> SpechtModel:
    return SpechtModel("bracket", family)


def minor_model(family: str = "g") -> SpechtModel:
    return SpechtModel("minor", family)


def _minor_polynomial(family: str, rows: tuple[int, ...], cols: tuple[int, ...]) -> Polynomial:
    """Determinant of the symbolic symmetric submatrix on rows x cols."""
    if len(rows) != len(cols):
        raise ValueError("minor needs equally many rows and columns")
    m = len(rows)
    total = Polynomial()
    for perm in itertools.permutations(range(m)):
        inv = sum(1 for a in range(m) for b in range(a + 1, m) if perm[a] > perm[b])
        term = ONE
        for r in range(m):
            term = term * variable(family, rows[r], cols[perm[r]])
        total = total + term * ((-1) ** inv)
    return total


def specht_polynomial(t: StandardTableau, model: SpechtModel) -> Polynomial:
    """The product-of-columns polynomial of a tableau in the given model."""
    if model.kind == "vandermonde":
        out = ONE
        for col in t.columns():
            out = out * vandermonde(model.family, col)
        return out
    if model.kind == "bracket":
        out = ONE
        for col in t.columns():
            if len(col) == 1:
                continue
            if len(col) != 2:
                raise ValueError("bracket model needs columns of height <= 2")
            out = out * variable(model.family, col[0], col[1])
        return out
    if model.kind == "minor":
        cols = t.columns()
        if len(cols) != 2 or len(cols[0]) != len(cols[1]):
            raise ValueError("minor model needs a two-column shape 2^m")
        return _minor_polynomial(model.family, cols[0], cols[1])
    raise ValueError(f"unknown model kind {model.kind!r}")


def row_specialization(f: Polynomial | RationalFunction, t: StandardTableau,
                       family: str = "x") -> Fraction:
    """Evaluate f with family_i set to the (bottom-up) row index of i in t."""
    mapping = {}
    vars_in = f.variables() if isinstance(f, Polynomial) else (
        f.num.variables() | f.den.variables())
    for var in vars_in:
        fam, idx = var
        if fam == family and len(idx) == 1:
            r, _ = t.position(idx[0])
            mapping[var] = Fraction(r)
    return substitute(f, mapping).as_constant()


def bottom_coefficient(f: Polynomial, shape: Shape, family: str = "x") -> Fraction:
    """Coefficient of the bottom tableau's polynomial in the expansion of f.

    Valid when f lies in the span of the tableau polynomials of this shape;
    one specialization suffices because every other tableau has, in some
    column, two letters from the same row of the bottom tableau.
    """
    aleph = bottom_tableau(shape)
    delta = specht_polynomial(aleph, vandermonde_model(family))
    return row_specialization(f, aleph, family) / row_specialization(delta, aleph, family)


def young_polynomial(
    t: StandardTableau,
    model: SpechtModel,
    graph: TableauGraph | None = None,
) -> Polynomial:
    """Orthogonal-basis element: the top polynomial pushed along a graph path.

    Each edge contributes f -> f^{s_i} + (1/rho) f.  Path independence makes
    the choice of path irrelevant.
    """
    if graph is None:
        graph = tableau_graph(t.shape)
    f = specht_polynomial(graph.top, model)
    fams = model.acting_families()
    n = t.n
    for i, rho in graph.path_from_top(t):
        f = act(transposition(i, n), f, fams) + f * Fraction(1, rho)
    return f


@dataclass(frozen=True)
class ChangeOfBasisMatrix:
    """Rows express orthogonal-basis elements over the tableau basis."""

    shape: Shape
    order: tuple[StandardTableau, ...]
    entries: tuple[tuple[Fraction, ...], ...]

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "tableaux": [t.to_json() for t in self.order],
            "matrix": [[str(c) for c in row] for row in self.entries],
        }


def exact_solve(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Solve a square rational system by Gaussian elimination; None if singular."""
    n = len(rows)
    a = [list(r) + [rhs[i]] for i, r in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                factor = a[r][col]
                a[r] = [v - factor * w for v, w in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def exact_inverse(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(rows)
    cols = []
    for j in range(n):
        rhs = [Fraction(1 if i == j else 0) for i in range(n)]
        sol = exact_solve(rows, rhs)
        if sol is None:
            raise ValueError("singular matrix")
        cols.append(sol)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def _evaluate_at(f: Polynomial, point: dict, family: str) -> Fraction:
    mapping = {}
    for var in f.variables():
        fam, idx = var
        if fam == family and len(idx) == 1:
            mapping[var] = point[idx[0]]
    return substitute(f, mapping).as_constant()


def _expand_by_evaluation(
    f: Polynomial,
    basis: list[Polynomial],
    shape: Shape,
    family: str,
) -> list[Fraction]:
    """Express f over the tableau basis by solving an evaluation system.

    Evaluation points are the row-specialization maps of all tableaux of the
    shape; deterministic small random integer points are appended if that
    system happens to be singular.
    """
    n = sum(shape)
    d = len(basis)
    points: list[dict[int, Fraction]] = []
    for t in enumerate_syt(shape):
        points.append({i: Fraction(t.position(i)[0]) for i in range(1, n + 1)})
    rng = random.Random(31)
    for _ in range(4 * d):
        rows = [[_evaluate_at(b, p, family) for b in basis] for p in points]
        rhs = [_evaluate_at(f, p, family) for p in points]
        if len(points) == d:
            sol = exact_solve(rows, rhs)
            if sol is not None:
                return sol
        elif len(points) > d:
            sol = _solve_overdetermined(rows, rhs)
            if sol is not None:
                return sol
        points.append({i: Fraction(rng.randint(-9, 9)) for i in range(1, n + 1)})
    raise ArithmeticError("specialization system stayed singular; enlarge the point set")


def _solve_overdetermined(
    rows: list[list[Fraction]], rhs: list[Fraction]
) -> list[Fraction] | None:
    """Solve a consistent overdetermined system; None if rank-deficient."""
    m, d = len(rows), len(rows[0])
    a = [list(r) + [rhs[i]] for i, r in enumerate(rows)]
    row_used = 0
    for col in range(d):
        pivot = next((r for r in range(row_used, m) if a[r][col]), None)
        if pivot is None:
            return None
        a[row_used], a[pivot] = a[pivot], a[row_used]
        inv = 1 / a[row_used][col]
        a[row_used] = [v * inv for v in a[row_used]]
        for r in range(m):
            if r != row_used and a[r][col]:
                factor = a[r][col]
                a[r] = [v - factor * w for v, w in zip(a[r], a[row_used])]
        row_used += 1
    for r in range(row_used, m):
        if a[r][d]:
            raise ArithmeticError("inconsistent evaluation system")
    return [a[r][d] for r in range(d)]


def change_of_basis(shape: Shape, model: SpechtModel | None = None) -> ChangeOfBasisMatrix:
    """Matrix expressing the orthogonal basis over the tableau basis.

    Rows and columns follow the graph order (rank, then reading
    permutation); the result is lower unitriangular in that order.
    """
    if model is None:
        model = vandermonde_model()
    if model.kind != "vandermonde":
        raise ValueError("change_of_basis expands in the Vandermonde model")
    graph = tableau_graph(shape)
    order = tuple(graph.tableaux)
    basis = [specht_polynomial(t, model) for t in order]
    rows = []
    for t in order:
        y = young_polynomial(t, model, graph)
        rows.append(tuple(_expand_by_evaluation(y, basis, shape, model.family)))
    return ChangeOfBasisMatrix(shape, order, tuple(rows))


def expand_mm(f: Polynomial, m: int, family: str = "a") -> dict[StandardTableau, Fraction]:
    """Expand f over the tableau basis of the two-row rectangle [m, m].

    Works by 0/1 specializations: for each standard tableau u, set the
    variables indexed by the first m letters of u's reading permutation to 1
    and the rest to 0.  The number of specializations equals the number of
    unknown coefficients and the resulting square system is solvable.
    """
    from .exactpoly import specialize01

    shape = (m, m)
    tabs = sorted(enumerate_syt(shape), key=lambda t: t.reading_permutation())
    basis = [specht_polynomial(t, vandermonde_model(family)) for t in tabs]
    rows = []
    rhs = []
    for u in tabs:
        ones = set(u.reading_permutation()[:m])
        rows.append([specialize01(b, ones, family).as_constant() for b in basis])
        rhs.append(specialize01(f, ones, family).as_constant())
    sol = exact_solve(rows, rhs)
    if sol is None:
        raise ArithmeticError("0/1 specialization system is singular")
    return dict(zip(tabs, sol))
