"""Permutations of {1..n}, the rational group algebra of S_n, and its action
on polynomials through indexed variable families.

Permutations are stored in one-line notation as tuples of images of 1..n.
Two composition conventions coexist deliberately:

* ``compose(s, t)`` is the classical function composition s after t
  ("apply t first, then s" on values).
* The group-algebra product ``convolve(u, v)`` extends "u first, then v",
  matching the way elements act on polynomials from the right:
  acting by u*v is acting by u and then by v.

With ``f^sigma`` relabelling index i to sigma(i), this makes
act(act(f, u), v) == act(f, convolve(u, v)) hold exactly.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations as _permutations
from math import factorial
from typing import Iterable, Mapping, Union

from .exactpoly import (
    Polynomial,
    RationalFunction,
    Scalar,
    ratfn_sum,
    relabel,
)

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def transposition(i: int, n: int) -> Perm:
    """The simple transposition s_i swapping i and i+1."""
    if not 1 <= i < n:
        raise ValueError(f"s_{i} is not a generator of S_{n}")
    images = list(range(1, n + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return tuple(images)


def compose(s: Perm, t: Perm) -> Perm:
    """Classical composition: apply t first, then s (on values)."""
    if len(s) != len(t):
        raise ValueError("degree mismatch")
    return tuple(s[t[k] - 1] for k in range(len(s)))


def inverse(s: Perm) -> Perm:
    out = [0] * len(s)
    for k, v in enumerate(s):
        out[v - 1] = k + 1
    return tuple(out)


def length(s: Perm) -> int:
    """Inversion count."""
    n = len(s)
    return sum(1 for a in range(n) for b in range(a + 1, n) if s[a] > s[b])


def sign(s: Perm) -> int:
    return -1 if length(s) % 2 else 1


class GroupAlgebraElement:
    """Finite rational linear combination of permutations of fixed degree."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Perm, Fraction] | None = None):
        self.n = n
        self.terms: dict[Perm, Fraction] = dict(terms) if terms else {}

    @staticmethod
    def from_perm(p: Perm, coeff: Scalar = 1) -> "GroupAlgebraElement":
        c = Fraction(coeff)
        return GroupAlgebraElement(len(p), {p: c} if c else {})

    @staticmethod
    def one(n: int) -> "GroupAlgebraElement":
        return GroupAlgebraElement.from_perm(identity(n))

    def _check(self, other: "GroupAlgebraElement") -> None:
        if self.n != other.n:
            raise ValueError("degree mismatch")

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check(other)
        out = dict(self.terms)
        for p, c in other.terms.items():
            s = out.get(p, Fraction(0)) + c
            if s:
                out[p] = s
            else:
                out.pop(p, None)
        return GroupAlgebraElement(self.n, out)

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return self + other.scale(-1)

    def __neg__(self) -> "GroupAlgebraElement":
        return self.scale(-1)

    def scale(self, value: Scalar) -> "GroupAlgebraElement":
        c = Fraction(value)
        if not c:
            return GroupAlgebraElement(self.n)
        return GroupAlgebraElement(self.n, {p: k * c for p, k in self.terms.items()})

    def convolve(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        """Bilinear extension of "self first, then other"."""
        self._check(other)
        out: dict[Perm, Fraction] = {}
        get = out.get
        for p, cp in self.terms.items():
            for q, cq in other.terms.items():
                # p then q as relabelling actions = q o p as functions
                r = compose(q, p)
                c = cp * cq
                s = get(r)
                if s is None:
                    out[r] = c
                else:
                    s = s + c
                    if s:
                        out[r] = s
                    else:
                        del out[r]
        return GroupAlgebraElement(self.n, out)

    __matmul__ = convolve

    def sign_twist(self) -> "GroupAlgebraElement":
        """The involution induced by s_i -> -s_i: sigma -> (-1)^l(sigma) sigma."""
        return GroupAlgebraElement(
            self.n, {p: c * sign(p) for p, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*{list(p)}" for p, c in sorted(self.terms.items()))
        return f"GroupAlgebraElement({body or '0'})"

    def to_json(self) -> list:
        out = []
        for p in sorted(self.terms):
            c = self.terms[p]
            out.append({"perm": list(p),
                        "coeff": str(c.numerator) if c.denominator == 1
                        else f"{c.numerator}/{c.denominator}"})
        return out


def algebra_from_json(data: Iterable[Mapping]) -> GroupAlgebraElement:
    terms: dict[Perm, Fraction] = {}
    n = 0
    for item in data:
        p = tuple(item["perm"])
        n = len(p)
        terms[p] = Fraction(item["coeff"])
    return GroupAlgebraElement(n, terms)


def generator(i: int, n: int) -> GroupAlgebraElement:
    return GroupAlgebraElement.from_perm(transposition(i, n))


def nabla(n: int) -> GroupAlgebraElement:
    """Normalised antisymmetrizer (1/n!) sum of (-1)^l(sigma) sigma."""
    terms = {p: Fraction(sign(p), factorial(n)) for p in _permutations(range(1, n + 1))}
    return GroupAlgebraElement(n, terms)


def box(n: int) -> GroupAlgebraElement:
    """Normalised symmetrizer (1/n!) sum of all permutations."""
    terms = {p: Fraction(1, factorial(n)) for p in _permutations(range(1, n + 1))}
    return GroupAlgebraElement(n, terms)


def yang_baxter_factor(i: int, rho: Scalar, n: int) -> GroupAlgebraElement:
    """The edge factor s_i + 1/rho."""
    out = GroupAlgebraElement.from_perm(transposition(i, n))
    return out + GroupAlgebraElement.from_perm(identity(n), Fraction(1, 1) / Fraction(rho))


PolyLike = Union[Polynomial, RationalFunction]


def act(
    e: GroupAlgebraElement | Perm,
    f: PolyLike,
    families: Iterable[str],
) -> PolyLike:
    """Right action f . e = sum of coeff(sigma) * f^sigma.

    f^sigma relabels index i to sigma(i) simultaneously in every listed
    variable family (the diagonal action when several families are given).
    """
    fams = tuple(families)
    if isinstance(e, tuple):
        return relabel(f, e, fams)
    if isinstance(f, Polynomial):
        total = Polynomial()
        for p, c in e.terms.items():
            total = total + relabel(f, p, fams) * c
        return total
    parts = []
    for p, c in e.terms.items():
        parts.append(relabel(f, p, fams) * c)
    return ratfn_sum(parts)


def act_word(f: PolyLike, word: Iterable[int], families: Iterable[str], n: int) -> PolyLike:
    """Apply simple transpositions s_i in sequence (leftmost first)."""
    fams = tuple(families)
    out = f
    for i in word:
        out = relabel(out, transposition(i, n), fams)
    return out
