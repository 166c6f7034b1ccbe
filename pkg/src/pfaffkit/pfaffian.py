"""Formal and symbolic Pfaffians, hafnians, and exact determinants.

The formal Pfaffian of even order n is a signed sum of (n-1)!! permutation
words; each word lists the pairs of a perfect matching, smaller element
first, pairs ordered by their larger element.  Signs follow the recursion

    Pf(v) = sum over i of (-1)^(len(v)-1-i) Pf(v without v_i, v_last) . [v_i, v_last]

whose n = 4 expansion is [1,2,3,4] - [1,3,2,4] + [2,3,1,4].

Symbolic evaluation over rational-function entries clears denominators with
a single common product over all entry denominators, so no intermediate
fraction addition happens.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Mapping, Sequence

from .exactpoly import (
    ONE,
    Polynomial,
    RationalFunction,
    as_ratfn,
    exact_div,
    ratfn_from_json,
    ratfn_to_json,
)
from .symgroup import GroupAlgebraElement, Perm, nabla


class AntisymmetricMatrix:
    """Even-order matrix with M[j][i] == -M[i][j], stored as its upper triangle."""

    def __init__(self, n: int, entries: Mapping[tuple[int, int], RationalFunction | Polynomial]):
        if n % 2:
            raise ValueError("antisymmetric matrix must have even order")
        self.n = n
        self.entries: dict[tuple[int, int], RationalFunction] = {}
        for (i, j), value in entries.items():
            if not 1 <= i < j <= n:
                raise ValueError(f"entry index ({i},{j}) must satisfy 1 <= i < j <= n")
            self.entries[(i, j)] = as_ratfn(value)

    def entry(self, i: int, j: int) -> RationalFunction:
        if i == j:
            return as_ratfn(0)
        if i < j:
            return self.entries.get((i, j), as_ratfn(0))
        return -self.entries.get((j, i), as_ratfn(0))

    @staticmethod
    def from_function(n: int, fn) -> "AntisymmetricMatrix":
        return AntisymmetricMatrix(
            n, {(i, j): fn(i, j) for i in range(1, n) for j in range(i + 1, n + 1)})

    def to_json(self) -> dict:
        out = []
        for (i, j) in sorted(self.entries):
            out.append({"i": i, "j": j, "value": ratfn_to_json(self.entries[(i, j)])})
        return {"n": self.n, "entries": out}

    @staticmethod
    def from_json(data: Mapping) -> "AntisymmetricMatrix":
        entries = {(e["i"], e["j"]): ratfn_from_json(e["value"]) for e in data["entries"]}
        return AntisymmetricMatrix(data["n"], entries)


@lru_cache(maxsize=None)
def _pf_words(v: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    if not v:
        return (((), 1),)
    n = len(v)
    out: list[tuple[tuple[int, ...], int]] = []
    for i in range(n - 1):
        s = (-1) ** (n - 2 - i)  # i is 0-based here
        rest = v[:i] + v[i + 1:n - 1]
        for word, c in _pf_words(rest):
            out.append((word + (v[i], v[n - 1]), c * s))
    return tuple(out)


def pf_formal(n: int) -> GroupAlgebraElement:
    """The Pfaffian of order n as a signed sum of (n-1)!! permutations."""
    if n % 2:
        raise ValueError("the formal Pfaffian needs an even order")
    terms = {word: Fraction(c) for word, c in _pf_words(tuple(range(1, n + 1)))}
    return GroupAlgebraElement(n, terms)


def matchings_with_signs(n: int) -> list[tuple[int, tuple[tuple[int, int], ...]]]:
    """Perfect matchings of 1..n with the formal-Pfaffian sign of each."""
    out = []
    for word, c in _pf_words(tuple(range(1, n + 1))):
        pairs = tuple((word[k], word[k + 1]) for k in range(0, n, 2))
        out.append((int(c), pairs))
    return out


def _common_denominator_sum(
    parts: Sequence[tuple[Fraction, Sequence[Polynomial], Sequence[Polynomial]]],
    all_dens: Sequence[Polynomial],
) -> RationalFunction:
    """Sum of coeff * prod(nums) / prod(dens) over a shared denominator.

    Each part lists the denominators it does NOT carry (its complement in
    all_dens), so the total is sum(coeff * nums * complement) / prod(all_dens).
    """
    total = Polynomial()
    for coeff, nums, complement in parts:
        term = Polynomial.constant(coeff)
        for p in nums:
            term = term * p
        for d in complement:
            if not d.is_one:
                term = term * d
        total = total + term
    den = ONE
    for d in all_dens:
        if not d.is_one:
            den = den * d
    return RationalFunction(total, den)


def pfaffian(Z: AntisymmetricMatrix) -> RationalFunction:
    """Exact Pfaffian of an antisymmetric matrix of rational functions."""
    n = Z.n
    if n == 0:
        return as_ratfn(1)
    pairs = [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]
    nums = {p: Z.entry(*p).num for p in pairs}
    dens = {p: Z.entry(*p).den for p in pairs}
    parts = []
    for sign, matching in matchings_with_signs(n):
        in_matching = set(matching)
        complement = [dens[p] for p in pairs if p not in in_matching]
        parts.append((Fraction(sign), [nums[p] for p in matching], complement))
    return _common_denominator_sum(parts, [dens[p] for p in pairs])


def hafnian(entries: Mapping[tuple[int, int], RationalFunction | Polynomial], n: int) -> RationalFunction:
    """Unsigned matching sum of symmetric entries (the sign-twisted Pfaffian)."""
    if n % 2:
        raise ValueError("hafnian needs an even order")
    if n == 0:
        return as_ratfn(1)
    values = {}
    for (i, j), v in entries.items():
        values[(min(i, j), max(i, j))] = as_ratfn(v)
    pairs = [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]
    parts = []
    for _, matching in matchings_with_signs(n):
        in_matching = set(matching)
        complement = [values[p].den for p in pairs if p not in in_matching]
        parts.append((Fraction(1), [values[p].num for p in matching], complement))
    return _common_denominator_sum(parts, [values[p].den for p in pairs])


def _det_small(rows: list[list[RationalFunction]]) -> RationalFunction:
    """Permutation expansion over one common denominator (orders <= 4)."""
    n = len(rows)
    all_positions = [(i, j) for i in range(n) for j in range(n)]
    parts = []
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        used = {(i, perm[i]) for i in range(n)}
        nums = [rows[i][perm[i]].num for i in range(n)]
        complement = [rows[i][j].den for (i, j) in all_positions if (i, j) not in used]
        parts.append((Fraction((-1) ** inv), nums, complement))
    return _common_denominator_sum(
        parts, [rows[i][j].den for (i, j) in all_positions])


def _det_bareiss(rows: list[list[Polynomial]]) -> Polynomial:
    """Fraction-free elimination with exact division by the previous pivot."""
    a = [list(r) for r in rows]
    n = len(a)
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero:
            pivot = next((r for r in range(k + 1, n) if not a[r][k].is_zero), None)
            if pivot is None:
                return Polynomial()
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = exact_div(num, prev)
            a[i][k] = Polynomial()
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


def determinant(rows: Sequence[Sequence[RationalFunction | Polynomial]]) -> RationalFunction:
    """Exact determinant of a square matrix of rational functions.

    Orders up to 4 expand over permutations with a single common
    denominator; larger orders clear each row and run fraction-free
    elimination on the resulting polynomial matrix.
    """
    n = len(rows)
    if n == 0:
        return as_ratfn(1)
    mat = [[as_ratfn(v) for v in row] for row in rows]
    if len(mat[0]) != n:
        raise ValueError("determinant needs a square matrix")
    if n <= 4:
        return _det_small(mat)
    cleared: list[list[Polynomial]] = []
    row_factor = ONE
    for row in mat:
        common = ONE
        for v in row:
            if not v.den.is_one:
                common = common * v.den
        row_factor = row_factor * common
        new_row = []
        for v in row:
            if v.den.is_one:
                new_row.append(v.num * common)
            else:
                new_row.append(v.num * exact_div(common, v.den))
        cleared.append(new_row)
    det = _det_bareiss(cleared)
    return RationalFunction(det, row_factor)


def theta(n: int) -> GroupAlgebraElement:
    """Sum of the permutations moving the blocks (1,2), (3,4), ... as wholes."""
    if n % 2:
        raise ValueError("block sum needs an even order")
    m = n // 2
    terms = {}
    for tau in itertools.permutations(range(m)):
        images = [0] * n
        for block, dest in enumerate(tau):
            images[2 * block] = 2 * dest + 1
            images[2 * block + 1] = 2 * dest + 2
        terms[tuple(images)] = Fraction(1)
    return GroupAlgebraElement(n, terms)


def prop31_check(n: int) -> bool:
    """Factorization of the alternating sum through matching representatives.

    Checks n! * nabla == (1-s_1)(1-s_3)...(1-s_{n-1}) * Theta_n * Pf_n with
    the block sum on either side of the sign factors, as exact equality of
    group-algebra coefficient maps.
    """
    if n % 2 or n > 8:
        raise ValueError("supported for even n <= 8")
    from .symgroup import generator

    target = nabla(n).scale(factorial(n))
    signs = GroupAlgebraElement.one(n)
    for i in range(1, n, 2):
        signs = signs.convolve(GroupAlgebraElement.one(n) - generator(i, n))
    t = theta(n)
    pf = pf_formal(n)
    first = signs.convolve(t).convolve(pf)
    second = t.convolve(signs).convolve(pf)
    return first == target and second == target
