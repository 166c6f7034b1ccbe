"""Tableau polynomial models, orthogonal basis, and expansions."""

from fractions import Fraction as F

import pytest

from pfaffkit.exactpoly import ONE, substitute, vandermonde, variable
from pfaffkit.specht import (
    SpechtModel,
    bottom_coefficient,
    bracket_model,
    change_of_basis,
    exact_inverse,
    expand_mm,
    minor_model,
    row_specialization,
    specht_polynomial,
    vandermonde_model,
    young_polynomial,
)
from pfaffkit.symgroup import act, transposition
from pfaffkit.tableaux import (
    bottom_tableau,
    enumerate_syt,
    tableau_from_rows,
    tableau_graph,
    top_tableau,
)


def x(i):
    return variable("x", i)


def a(i):
    return variable("a", i)


class TestSpechtPolynomial:
    def test_column_products(self):
        t = tableau_from_rows([[1, 2, 4], [3, 6], [5]])
        expected = (vandermonde("x", [1, 3, 5]) * vandermonde("x", [2, 6])
                    * vandermonde("x", [4]))
        assert specht_polynomial(t, vandermonde_model()) == expected

    def test_single_column(self):
        t = tableau_from_rows([[1], [2], [3]])
        d = specht_polynomial(t, vandermonde_model())
        assert d == (x(1) - x(2)) * (x(1) - x(3)) * (x(2) - x(3))

    def test_bracket_top(self):
        # two-block column products for the top tableau of a 2 x m rectangle
        t = top_tableau((3, 3))
        z = specht_polynomial(t, bracket_model())
        expected = variable("z", 1, 2) * variable("z", 3, 4) * variable("z", 5, 6)
        assert z == expected

    def test_bracket_two_column_shape(self):
        # columns of height m contribute all pairwise brackets
        t = top_tableau((2, 2, 2))
        z = specht_polynomial(t, bracket_model())
        expected = ONE
        for i in range(1, 3):
            for j in range(i + 1, 4):
                expected = expected * variable("z", i, j)
        for i in range(4, 6):
            for j in range(i + 1, 7):
                expected = expected * variable("z", i, j)
        assert z == expected

    def test_minor_model(self):
        t = top_tableau((2, 2))
        g = specht_polynomial(t, minor_model())
        g13, g14, g23, g24 = (variable("g", *p) for p in ((1, 3), (1, 4), (2, 3), (2, 4)))
        assert g == g13 * g24 - g14 * g23

    def test_minor_model_rejects_other_shapes(self):
        with pytest.raises(ValueError):
            specht_polynomial(tableau_from_rows([[1, 2, 3], [4, 5, 6]]), minor_model())


class TestRowSpecialization:
    def test_bottom_at_bottom(self):
        aleph = bottom_tableau((2, 2))
        d = specht_polynomial(aleph, vandermonde_model())
        assert row_specialization(d, aleph) == 1

    def test_other_tableau_vanishes(self):
        aleph = bottom_tableau((2, 2))
        zeta = top_tableau((2, 2))
        d = specht_polynomial(zeta, vandermonde_model())
        assert row_specialization(d, aleph) == 0

    def test_constant(self):
        assert row_specialization(ONE * 5, top_tableau((2, 2))) == 5


class TestBottomCoefficient:
    def test_bottom_itself(self):
        aleph = bottom_tableau((2, 2))
        d = specht_polynomial(aleph, vandermonde_model())
        assert bottom_coefficient(d, (2, 2)) == 1

    def test_top_gives_zero(self):
        # the top tableau's columns repeat bottom-tableau rows, so its
        # coefficient functional vanishes on it
        zeta = top_tableau((2, 2))
        d = specht_polynomial(zeta, vandermonde_model())
        assert bottom_coefficient(d, (2, 2)) == 0

    def test_linear_combination(self):
        shape = (3, 3)
        tabs = enumerate_syt(shape)
        f = ONE - ONE
        coeffs = {}
        for k, t in enumerate(tabs):
            coeffs[t] = F(k - 2, 3)
            f = f + specht_polynomial(t, vandermonde_model()) * coeffs[t]
        assert bottom_coefficient(f, shape) == coeffs[bottom_tableau(shape)]


class TestYoungPolynomial:
    def test_top_is_plain_product(self):
        g = tableau_graph((3, 3))
        y = young_polynomial(g.top, vandermonde_model(), g)
        assert y == specht_polynomial(g.top, vandermonde_model())

    def test_33_rows_against_frozen_matrix(self):
        g = tableau_graph((3, 3))
        basis = [specht_polynomial(t, vandermonde_model()) for t in g.tableaux]
        y1 = young_polynomial(g.tableaux[1], vandermonde_model(), g)
        assert y1 == basis[1] - basis[0] * F(1, 2)
        y4 = young_polynomial(g.tableaux[4], vandermonde_model(), g)
        expected = (basis[4] + basis[0] * F(2, 3)
                    - (basis[1] + basis[2] + basis[3]) * F(1, 3))
        assert y4 == expected

    @pytest.mark.parametrize("shape", [(3, 3), (2, 2, 2)])
    def test_path_independence(self, shape):
        g = tableau_graph(shape)
        model = vandermonde_model()
        for t in g.tableaux:
            paths = g.all_paths_from_top(t)
            if len(paths) < 2:
                continue
            images = []
            for path in paths:
                f = specht_polynomial(g.top, model)
                for i, rho in path:
                    f = act(transposition(i, t.n), f, ["x"]) + f * F(1, rho)
                images.append(f)
            assert all(img == images[0] for img in images[1:])

    def test_antisymmetry_characterization(self):
        # the top element changes sign under every column transposition
        for shape in ((2, 2), (3, 3), (2, 2, 2)):
            zeta = top_tableau(shape)
            d = specht_polynomial(zeta, vandermonde_model())
            for col in zeta.columns():
                for p in range(len(col) - 1):
                    if col[p + 1] == col[p] + 1:
                        img = act(transposition(col[p], zeta.n), d, ["x"])
                        assert img == -d


class TestChangeOfBasis:
    def test_frozen_33(self):
        cb = change_of_basis((3, 3))
        golden = [
            [1, 0, 0, 0, 0],
            [F(-1, 2), 1, 0, 0, 0],
            [F(-1, 2), 0, 1, 0, 0],
            [F(1, 4), F(-1, 2), F(-1, 2), 1, 0],
            [F(2, 3), F(-1, 3), F(-1, 3), F(-1, 3), 1],
        ]
        assert [list(r) for r in cb.entries] == golden

    def test_frozen_33_inverse(self):
        cb = change_of_basis((3, 3))
        inv = exact_inverse([list(r) for r in cb.entries])
        golden_inv = [
            [1, 0, 0, 0, 0],
            [F(1, 2), 1, 0, 0, 0],
            [F(1, 2), 0, 1, 0, 0],
            [F(1, 4), F(1, 2), F(1, 2), 1, 0],
            [F(-1, 4), F(1, 2), F(1, 2), F(1, 3), 1],
        ]
        assert inv == golden_inv

    def test_22(self):
        cb = change_of_basis((2, 2))
        assert [list(r) for r in cb.entries] == [[1, 0], [F(-1, 2), 1]]

    def test_top_row_unit(self):
        for shape in ((2, 2), (3, 3), (2, 2, 1)):
            cb = change_of_basis(shape)
            assert list(cb.entries[0]) == [1] + [0] * (len(cb.order) - 1)

    def test_unitriangular(self):
        for shape in ((3, 3), (3, 2), (2, 2, 2)):
            cb = change_of_basis(shape)
            d = len(cb.order)
            assert all(cb.entries[i][i] == 1 for i in range(d))
            assert all(cb.entries[i][j] == 0 for i in range(d) for j in range(i + 1, d))


class TestExpandMM:
    def test_bottom_delta(self):
        aleph = bottom_tableau((2, 2))
        f = specht_polynomial(aleph, vandermonde_model("a"))
        out = expand_mm(f, 2)
        assert out[aleph] == 1
        assert all(c == 0 for t, c in out.items() if t != aleph)

    def test_three_term_relation(self):
        # (a1-a4)(a2-a3) = bottom - top in the tableau basis
        f = (a(1) - a(4)) * (a(2) - a(3))
        out = expand_mm(f, 2)
        assert out[bottom_tableau((2, 2))] == 1
        assert out[top_tableau((2, 2))] == -1

    def test_zero(self):
        out = expand_mm(ONE - ONE, 2)
        assert all(c == 0 for c in out.values())

    def test_roundtrip_m3(self):
        shape = (3, 3)
        tabs = enumerate_syt(shape)
        f = ONE - ONE
        want = {}
        for k, t in enumerate(tabs):
            want[t] = F((-1) ** k, k + 1)
            f = f + specht_polynomial(t, vandermonde_model("a")) * want[t]
        out = expand_mm(f, 3)
        assert out == want

    def test_matches_change_of_basis(self):
        g = tableau_graph((3, 3))
        cb = change_of_basis((3, 3))
        for row, t in zip(cb.entries, cb.order):
            y = young_polynomial(t, vandermonde_model("a"), g)
            out = expand_mm(y, 3)
            got = [out[u] for u in cb.order]
            assert got == list(row)


class TestSpanRank:
    @pytest.mark.parametrize("shape", [(2, 2), (3, 3)])
    def test_row_specialization_matrix_invertible(self, shape):
        from pfaffkit.specht import exact_solve
        tabs = enumerate_syt(shape)
        basis = [specht_polynomial(t, vandermonde_model()) for t in tabs]
        rows = [[row_specialization(b, u) for b in basis] for u in tabs]
        d = len(tabs)
        # invertible iff solving against each unit vector succeeds
        for j in range(d):
            rhs = [F(1 if i == j else 0) for i in range(d)]
            assert exact_solve(rows, rhs) is not None
