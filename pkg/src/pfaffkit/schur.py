"""Complete and Schur functions of alphabet sums/differences, and families
of antisymmetric quantities satisfying the three-term quadratic relations.

An alphabet is an ordered list of variables.  S_k(A - B) is the coefficient
of q^k in prod_{b in B}(1 - qb) / prod_{a in A}(1 - qa), with S_k = 0 for
k < 0.  S_v for an arbitrary integer vector v of length r is the r x r
determinant det(S_{v_j + j - i}); no sorting or sign normalisation is
applied to v, the determinant itself encodes them.

Pair families z[i,j] built here (generic 2 x N minors, differences a_i-a_j,
(x_i - x_j) S_v(A +- x_i +- x_j)) all satisfy

    z[i,j] z[k,l] - z[i,k] z[j,l] + z[j,k] z[i,l] = 0

for every quadruple, which plucker_check verifies by expansion.  Minors of a
symbolic symmetric matrix satisfy the analogous relations (kronecker_check).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .exactpoly import (
    ONE,
    ZERO,
    Polynomial,
    RationalFunction,
    Variable,
    as_ratfn,
    exact_div,
    parse_variable_name,
    ratfn_equal,
    variable,
)
from .specht import _minor_polynomial

Alphabet = Sequence[Variable]


def letters(family: str, count: int) -> list[Variable]:
    return [(family, (i,)) for i in range(1, count + 1)]


def alphabet_of(*parts) -> list[Variable]:
    """Concatenate variables / alphabets into one letter list."""
    out: list[Variable] = []
    for p in parts:
        if isinstance(p, tuple) and len(p) == 2 and isinstance(p[0], str):
            out.append(p)  # a single Variable
        else:
            out.extend(p)
    if len(set(out)) != len(out):
        raise ValueError("alphabet letters must be distinct")
    return out


def _letter_poly(v: Variable) -> Polynomial:
    return variable(v[0], *v[1])


def _h_series(plus: Alphabet, up_to: int) -> list[Polynomial]:
    """Complete homogeneous functions h_0..h_k of the alphabet."""
    series = [ONE] + [ZERO] * up_to
    for letter in plus:
        a = _letter_poly(letter)
        for d in range(1, up_to + 1):
            series[d] = series[d] + series[d - 1] * a
    return series


def _e_series(minus: Alphabet) -> list[Polynomial]:
    """Elementary functions e_0..e_{|B|} of the alphabet."""
    series = [ONE]
    for letter in minus:
        a = _letter_poly(letter)
        new = series + [ZERO]
        for d in range(len(series), 0, -1):
            new[d] = new[d] + series[d - 1] * a
        series = new
    return series


_complete_cache: dict[tuple, Polynomial] = {}


def complete_fn(k: int, plus: Alphabet = (), minus: Alphabet = ()) -> Polynomial:
    """S_k of the alphabet difference, exactly expanded."""
    if k < 0:
        return ZERO
    key = (k, tuple(plus), tuple(minus))
    hit = _complete_cache.get(key)
    if hit is not None:
        return hit
    h = _h_series(plus, k)
    e = _e_series(minus)
    total = ZERO
    for j in range(0, min(k, len(minus)) + 1):
        total = total + h[k - j] * e[j] * ((-1) ** j)
    _complete_cache[key] = total
    return total


def power_sum(k: int, plus: Alphabet) -> Polynomial:
    """p_k of an alphabet; not a Schur function, used as a negative control."""
    total = ZERO
    for letter in plus:
        total = total + _letter_poly(letter) ** k
    return total


def _jt_determinant(v: Sequence[int], plus: Alphabet, minus: Alphabet) -> Polynomial:
    """Row-choice search over the determinant det(S_{v_j + j - i}).

    Zero entries (negative index) prune the search, which keeps gapped index
    vectors cheap despite large degrees.
    """
    r = len(v)
    degrees = [[v[j] + (j + 1) - (i + 1) for j in range(r)] for i in range(r)]
    total = ZERO

    def search(col: int, used: list[int], partial: Polynomial, sign: int) -> None:
        nonlocal total
        if col == r:
            total = total + partial * sign
            return
        for row in range(r):
            if row in used:
                continue
            d = degrees[row][col]
            if d < 0:
                continue
            entry = complete_fn(d, plus, minus)
            if entry.is_zero:
                continue
            inv = sum(1 for u in used if u > row)
            used.append(row)
            search(col + 1, used, partial * entry, sign * ((-1) ** inv))
            used.pop()

    search(0, [], ONE, 1)
    return total


def _bialternant(v: Sequence[int], plus: Alphabet) -> Polynomial:
    """Quotient of the exponent alternant by the ascending-power alternant.

    With exponents e_j = v_j + j - 1 this is det(x_i^{e_j}) / det(x_i^{j-1}),
    which equals the complete-function determinant for every integer vector
    v, column order and signs included.  Needs r = |alphabet| distinct
    arity-1 letters.
    """
    r = len(v)
    exps = [v[j] + j for j in range(r)]
    if len(set(exps)) != r or min(exps) < 0:
        return ZERO
    xs = [_letter_poly(p) for p in plus]
    alternant = ZERO
    for perm in itertools.permutations(range(r)):
        pinv = sum(1 for a in range(r) for b in range(a + 1, r) if perm[a] > perm[b])
        term = Polynomial.constant((-1) ** pinv)
        for i in range(r):
            term = term * xs[i] ** exps[perm[i]]
        alternant = alternant + term
    quotient = alternant
    for i in range(r):
        for j in range(i + 1, r):
            quotient = exact_div(quotient, xs[i] - xs[j])
    # det(x_i^{j-1}) = (-1)^(r(r-1)/2) * prod_{i<j} (x_i - x_j)
    return quotient * ((-1) ** (r * (r - 1) // 2))


def schur_fn(v: Sequence[int], plus: Alphabet = (), minus: Alphabet = (),
             method: str = "auto") -> Polynomial:
    """S_v(A - B) for an arbitrary integer vector v.

    method "determinant" always evaluates the complete-function determinant;
    "alternant" uses the quotient-of-alternants form (pure plus alphabet of
    exactly len(v) distinct letters); "auto" picks the alternant exactly in
    that case when the degree is large enough to matter.
    """
    v = list(v)
    if not v:
        return ONE
    if method == "determinant":
        return _jt_determinant(v, plus, minus)
    pure = not minus and len(plus) == len(v) and all(len(p[1]) == 1 for p in plus)
    if method == "alternant":
        if not pure:
            raise ValueError("alternant form needs a pure alphabet of len(v) letters")
        return _bialternant(v, plus)
    if pure and sum(d for d in v if d > 0) > 8:
        return _bialternant(v, plus)
    return _jt_determinant(v, plus, minus)


# -- pair families -----------------------------------------------------------

class PairFamily:
    """Assignment (i, j) -> entry for 1 <= i < j <= n, with a symmetry kind.

    kind "anti" extends by entry(j, i) = -entry(i, j); kind "sym" by
    entry(j, i) = entry(i, j).  act_families lists the arity-1 variable
    families through which the symmetric group moves the indices of the
    entries, so diagonal actions can be applied to substituted expressions.
    """

    def __init__(self, n: int, kind: str, build: Callable[[int, int], RationalFunction],
                 act_families: Sequence[str], label: str):
        if kind not in ("anti", "sym"):
            raise ValueError("kind must be 'anti' or 'sym'")
        self.n = n
        self.kind = kind
        self.label = label
        self.act_families = tuple(act_families)
        self._entries = {(i, j): as_ratfn(build(i, j))
                         for i in range(1, n) for j in range(i + 1, n + 1)}

    def entry(self, i: int, j: int) -> RationalFunction:
        if i == j:
            if self.kind == "anti":
                return as_ratfn(0)
            raise ValueError("diagonal entries are not generated")
        if i < j:
            return self._entries[(i, j)]
        e = self._entries[(j, i)]
        return -e if self.kind == "anti" else e

    def substitution(self, bracket_family: str) -> dict[Variable, RationalFunction]:
        """Map bracket symbols of the given family onto this family's entries."""
        return {(bracket_family, (i, j)): self._entries[(i, j)]
                for (i, j) in self._entries}

    def __repr__(self) -> str:
        return f"PairFamily({self.label}, n={self.n})"


def plucker_generic(n: int, row_families: tuple[str, str] = ("X", "Y")) -> PairFamily:
    """Minors of a generic 2 x n matrix: z[i,j] = X_i Y_j - X_j Y_i."""
    fx, fy = row_families

    def build(i: int, j: int) -> RationalFunction:
        return as_ratfn(variable(fx, i) * variable(fy, j)
                        - variable(fx, j) * variable(fy, i))

    return PairFamily(n, "anti", build, row_families, "generic2xN")


def plucker_differences(n: int, family: str = "a") -> PairFamily:
    return PairFamily(n, "anti", lambda i, j: as_ratfn(
        variable(family, i) - variable(family, j)), (family,), f"differences({family})")


def plucker_schur(n: int, v: Sequence[int], alphabet: Alphabet,
                  sign: str = "+", xfamily: str = "x") -> PairFamily:
    """(x_i - x_j) S_v(A + x_i + x_j), or with both letters subtracted."""
    v = list(v)
    alphabet = list(alphabet)

    def build(i: int, j: int) -> RationalFunction:
        xi, xj = (xfamily, (i,)), (xfamily, (j,))
        if sign == "+":
            s = schur_fn(v, alphabet + [xi, xj], ())
        else:
            s = schur_fn(v, alphabet, [xi, xj])
        return as_ratfn((variable(xfamily, i) - variable(xfamily, j)) * s)

    return PairFamily(n, "anti", build, (xfamily,), f"schur({v},{sign})")


def plucker_symbolic(n: int, family: str = "z") -> PairFamily:
    return PairFamily(n, "anti", lambda i, j: as_ratfn(variable(family, i, j)),
                      (family,), f"symbolic({family})")


def symmetric_symbolic(n: int, family: str = "g") -> PairFamily:
    return PairFamily(n, "sym", lambda i, j: as_ratfn(variable(family, i, j)),
                      (family,), f"symbolic({family})")


def symmetric_inverse_sum(n: int, xfamily: str = "x") -> PairFamily:
    """g[i,j] = 1 / (x_i + x_j)."""
    return PairFamily(n, "sym", lambda i, j: RationalFunction(
        ONE, variable(xfamily, i) + variable(xfamily, j)), (xfamily,), "inverse-sum")


def symmetric_power_quotient(n: int, k: int, xfamily: str = "x") -> PairFamily:
    """g[i,j] = (x_i^k - x_j^k)/(x_i - x_j) as the expanded polynomial."""

    def build(i: int, j: int) -> RationalFunction:
        total = ZERO
        for p in range(k):
            total = total + variable(xfamily, i) ** p * variable(xfamily, j) ** (k - 1 - p)
        return as_ratfn(total)

    return PairFamily(n, "sym", build, (xfamily,), f"power-quotient({k})")


def make_plucker(spec: Mapping | str, n: int) -> PairFamily:
    """Build a pair family from a JSON-style descriptor."""
    if isinstance(spec, str):
        spec = {"kind": spec}
    kind = spec["kind"]
    if kind == "generic2xN":
        return plucker_generic(n)
    if kind == "differences":
        return plucker_differences(n, spec.get("family", "a"))
    if kind == "schur":
        alphabet = [parse_variable_name(s) for s in spec.get("alphabet", ["B_1"])]
        return plucker_schur(n, spec.get("v", [1]), alphabet, spec.get("sign", "+"))
    if kind == "symbolic":
        return plucker_symbolic(n, spec.get("family", "z"))
    raise ValueError(f"unknown producer kind {kind!r}")


def plucker_check(family: PairFamily, n: int | None = None) -> bool:
    """Three-term quadratic relation on every quadruple i < j < k < l."""
    n = family.n if n is None else n
    for i, j, k, l in itertools.combinations(range(1, n + 1), 4):
        lhs = (family.entry(i, j) * family.entry(k, l)
               - family.entry(i, k) * family.entry(j, l)
               + family.entry(j, k) * family.entry(i, l))
        if not ratfn_equal(lhs, 0):
            return False
    return True


def symmetric_minor(rows: Sequence[int], cols: Sequence[int], family: str = "g") -> Polynomial:
    """Minor of a symbolic symmetric matrix, expanded into its pair symbols."""
    return _minor_polynomial(family, tuple(rows), tuple(cols))


def kronecker_check(m: int, family: str = "g") -> bool:
    """Alternating sum of complementary minors of a symmetric matrix is zero.

    Term i moves index m+i into the row set: rows (1..m-1, m+i), columns the
    sorted complement in 1..2m, with sign (-1)^i, for i = 0..m.
    """
    if m < 1:
        raise ValueError("m must be positive")
    n = 2 * m
    total = ZERO
    for i in range(0, m + 1):
        rows = tuple(range(1, m)) + (m + i,)
        cols = tuple(sorted(set(range(1, n + 1)) - set(rows)))
        total = total + symmetric_minor(rows, cols, family) * ((-1) ** i)
    return total.is_zero
