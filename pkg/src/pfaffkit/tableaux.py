"""Partitions, standard Young tableaux, and the transposition graph on them.

Rows are stored bottom-up: rows[0] is the bottom (longest) row, matching the
French-style pictures the rest of the library is built around.  The content
of a box is column - row with both numbered from 0 at the bottom left.

The graph on tableaux of a fixed shape is generated by letter swaps
i <-> i+1 starting from the top tableau (columns filled consecutively); the
rank of a tableau is its graph distance from the top.  Each edge t -> t.s_i
carries the reciprocal-distance label used to build orthogonal bases: the
stored rho is the axial distance measured in the *target* tableau t.s_i,
i.e. -axial_distance(t, i).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from .symgroup import Perm

Shape = tuple[int, ...]


def check_shape(shape: Shape) -> Shape:
    shape = tuple(shape)
    if not shape or any(p <= 0 for p in shape):
        raise ValueError(f"invalid partition {shape}")
    if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {shape}")
    return shape


def conjugate(shape: Shape) -> Shape:
    shape = check_shape(shape)
    return tuple(sum(1 for p in shape if p > c) for c in range(shape[0]))


@dataclass(frozen=True)
class StandardTableau:
    """Standard filling of a partition diagram, rows bottom-up."""

    rows: tuple[tuple[int, ...], ...]

    @cached_property
    def shape(self) -> Shape:
        return tuple(len(r) for r in self.rows)

    @cached_property
    def n(self) -> int:
        return sum(self.shape)

    @cached_property
    def _positions(self) -> dict[int, tuple[int, int]]:
        return {v: (r, c) for r, row in enumerate(self.rows) for c, v in enumerate(row)}

    def position(self, letter: int) -> tuple[int, int]:
        """(row, column) of a letter, rows counted from the bottom."""
        return self._positions[letter]

    def content(self, letter: int) -> int:
        r, c = self.position(letter)
        return c - r

    def columns(self) -> list[tuple[int, ...]]:
        """Column fillings, each read bottom-up."""
        out = []
        for c in range(self.shape[0]):
            col = tuple(row[c] for row in self.rows if len(row) > c)
            out.append(col)
        return out

    def swap_letters(self, i: int) -> "StandardTableau | None":
        """Swap i and i+1; None when the result is not standard."""
        (r1, c1), (r2, c2) = self.position(i), self.position(i + 1)
        if r1 == r2 or c1 == c2:
            return None
        rows = [list(r) for r in self.rows]
        rows[r1][c1], rows[r2][c2] = i + 1, i
        return StandardTableau(tuple(tuple(r) for r in rows))

    def transpose(self) -> "StandardTableau":
        shape_t = conjugate(self.shape)
        rows = [[0] * shape_t[r] for r in range(len(shape_t))]
        for letter, (r, c) in self._positions.items():
            rows[c][r] = letter
        return StandardTableau(tuple(tuple(r) for r in rows))

    def reading_permutation(self) -> Perm:
        """Concatenate rows bottom-up as one-line notation."""
        out: list[int] = []
        for row in self.rows:
            out.extend(row)
        return tuple(out)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __repr__(self) -> str:
        return "StandardTableau(" + "/".join(
            ",".join(map(str, r)) for r in self.rows) + ")"


def tableau_from_rows(rows) -> StandardTableau:
    t = StandardTableau(tuple(tuple(r) for r in rows))
    letters = sorted(v for row in t.rows for v in row)
    if letters != list(range(1, t.n + 1)):
        raise ValueError("entries must be exactly 1..n")
    check_shape(t.shape)
    for row in t.rows:
        if any(row[c] >= row[c + 1] for c in range(len(row) - 1)):
            raise ValueError("rows must increase left to right")
    for col in t.columns():
        if any(col[r] >= col[r + 1] for r in range(len(col) - 1)):
            raise ValueError("columns must increase bottom to top")
    return t


def enumerate_syt(shape: Shape) -> list[StandardTableau]:
    """All standard Young tableaux of the given shape."""
    shape = check_shape(shape)
    n = sum(shape)
    results: list[StandardTableau] = []

    def grow(rows: list[list[int]], letter: int) -> Iterator[None]:
        if letter > n:
            results.append(StandardTableau(tuple(tuple(r) for r in rows)))
            return
        for r in range(len(shape)):
            c = len(rows[r])
            if c >= shape[r]:
                continue
            # The box below (row r-1) must already be filled.
            if r > 0 and len(rows[r - 1]) <= c:
                continue
            rows[r].append(letter)
            yield from grow(rows, letter + 1)
            rows[r].pop()

    list(grow([[] for _ in shape], 1))
    return results


def top_tableau(shape: Shape) -> StandardTableau:
    """Columns filled with consecutive letters, bottom-up, left to right."""
    shape = check_shape(shape)
    cols = conjugate(shape)
    rows: list[list[int]] = [[] for _ in shape]
    letter = 1
    for c, height in enumerate(cols):
        for r in range(height):
            rows[r].append(letter)
            letter += 1
    return StandardTableau(tuple(tuple(r) for r in rows))


def bottom_tableau(shape: Shape) -> StandardTableau:
    """Rows filled with consecutive letters, bottom row first."""
    shape = check_shape(shape)
    rows = []
    letter = 1
    for p in shape:
        rows.append(tuple(range(letter, letter + p)))
        letter += p
    return StandardTableau(tuple(rows))


def extreme_tableaux(shape: Shape) -> tuple[StandardTableau, StandardTableau]:
    return top_tableau(shape), bottom_tableau(shape)


def axial_distance(t: StandardTableau, i: int) -> int:
    """content(i+1) - content(i) in t."""
    if not 1 <= i < t.n:
        raise ValueError(f"letter index {i} out of range")
    return t.content(i + 1) - t.content(i)


@dataclass(frozen=True)
class Edge:
    src: StandardTableau
    i: int
    rho: int
    dst: StandardTableau


class TableauGraph:
    """Transposition graph on the standard tableaux of one shape.

    Vertices are ordered by (rank, reading permutation); edges are oriented
    away from the top tableau and labelled with the axial distance in the
    target tableau.
    """

    def __init__(self, shape: Shape):
        self.shape = check_shape(shape)
        top = top_tableau(self.shape)
        rank: dict[StandardTableau, int] = {top: 0}
        edges: list[Edge] = []
        frontier = [top]
        while frontier:
            nxt: list[StandardTableau] = []
            for t in frontier:
                for i in range(1, t.n):
                    u = t.swap_letters(i)
                    if u is None:
                        continue
                    if u not in rank:
                        rank[u] = rank[t] + 1
                        nxt.append(u)
                    if rank[u] == rank[t] + 1:
                        edges.append(Edge(t, i, axial_distance(u, i), u))
            frontier = nxt
        self.rank = rank
        self.edges = edges
        self.tableaux = sorted(rank, key=lambda t: (rank[t], t.reading_permutation()))
        self._parents: dict[StandardTableau, Edge] = {}
        for e in edges:
            self._parents.setdefault(e.dst, e)

    @property
    def top(self) -> StandardTableau:
        return self.tableaux[0]

    def path_from_top(self, t: StandardTableau) -> list[tuple[int, int]]:
        """One (i, rho) edge sequence from the top tableau to t."""
        steps: list[tuple[int, int]] = []
        while self.rank[t] > 0:
            e = self._parents[t]
            steps.append((e.i, e.rho))
            t = e.src
        steps.reverse()
        return steps

    def all_paths_from_top(self, t: StandardTableau) -> list[list[tuple[int, int]]]:
        if self.rank[t] == 0:
            return [[]]
        out = []
        for e in self.edges:
            if e.dst == t:
                for prefix in self.all_paths_from_top(e.src):
                    out.append(prefix + [(e.i, e.rho)])
        return out

    def __len__(self) -> int:
        return len(self.tableaux)


def tableau_graph(shape: Shape) -> TableauGraph:
    return TableauGraph(shape)


def tableau_count(shape: Shape) -> int:
    return len(enumerate_syt(shape))
