"""Partitions, standard tableaux, and the transposition graph."""

import pytest

from pfaffkit.tableaux import (
    axial_distance,
    bottom_tableau,
    conjugate,
    enumerate_syt,
    extreme_tableaux,
    tableau_from_rows,
    tableau_graph,
    top_tableau,
)


class TestEnumeration:
    @pytest.mark.parametrize("shape,count", [((3, 3), 5), ((2, 2), 2), ((1,), 1)])
    def test_counts(self, shape, count):
        assert len(enumerate_syt(shape)) == count

    def test_catalan_counts(self):
        # two-row rectangles are counted by the Catalan numbers
        for m, c in ((1, 1), (2, 2), (3, 5), (4, 14), (5, 42)):
            assert len(enumerate_syt((m, m))) == c

    def test_all_distinct_and_standard(self):
        seen = set()
        for t in enumerate_syt((3, 2, 1)):
            assert t not in seen
            seen.add(t)
            tableau_from_rows(t.rows)  # validates

    def test_conjugate_involution(self):
        for shape in ((3, 3), (4, 3, 2), (2, 2, 2), (5,)):
            assert conjugate(conjugate(shape)) == shape


class TestExtremes:
    def test_paper_shape_432(self):
        zeta, aleph = extreme_tableaux((4, 3, 2))
        # columns of the top tableau filled consecutively bottom-up
        assert zeta.columns() == [(1, 2, 3), (4, 5, 6), (7, 8), (9,)]
        assert aleph.rows == ((1, 2, 3, 4), (5, 6, 7), (8, 9))

    def test_single_row(self):
        zeta, aleph = extreme_tableaux((4,))
        assert zeta == aleph

    def test_33(self):
        assert top_tableau((3, 3)).rows == ((1, 3, 5), (2, 4, 6))
        assert bottom_tableau((3, 3)).rows == ((1, 2, 3), (4, 5, 6))


class TestTranspose:
    def test_involution(self):
        for t in enumerate_syt((3, 3)):
            assert t.transpose().transpose() == t

    def test_aleph_33(self):
        assert bottom_tableau((3, 3)).transpose().rows == ((1, 4), (2, 5), (3, 6))

    def test_swaps_extremes(self):
        assert top_tableau((3, 3)).transpose() == bottom_tableau((2, 2, 2))
        assert bottom_tableau((3, 3)).transpose() == top_tableau((2, 2, 2))


class TestAxialDistance:
    def test_top_33(self):
        assert axial_distance(top_tableau((3, 3)), 2) == 2

    def test_bottom_33(self):
        assert axial_distance(bottom_tableau((3, 3)), 3) == -3

    def test_single_row(self):
        assert axial_distance(top_tableau((2,)), 1) == 1


class TestGraph:
    def test_diamond_33(self):
        g = tableau_graph((3, 3))
        assert len(g) == 5
        assert g.top == top_tableau((3, 3))
        assert g.rank[bottom_tableau((3, 3))] == 3
        # edge letters with the reciprocal labels measured in the target
        labels = sorted((e.i, e.rho) for e in g.edges)
        assert labels == [(2, -2), (2, -2), (3, -3), (4, -2), (4, -2)]

    def test_22(self):
        g = tableau_graph((2, 2))
        assert len(g) == 2
        assert len(g.edges) == 1
        assert g.edges[0].i == 2 and g.edges[0].rho == -2

    def test_single_vertex(self):
        g = tableau_graph((4,))
        assert len(g) == 1 and not g.edges

    def test_rank_step_one(self):
        for shape in ((3, 3), (2, 2, 2), (3, 2, 1)):
            g = tableau_graph(shape)
            for e in g.edges:
                assert g.rank[e.dst] == g.rank[e.src] + 1

    def test_unique_source_and_sink(self):
        g = tableau_graph((3, 3))
        targets = {e.dst for e in g.edges}
        sources = {e.src for e in g.edges}
        assert set(g.tableaux) - targets == {top_tableau((3, 3))}
        assert set(g.tableaux) - sources == {bottom_tableau((3, 3))}

    def test_transpose_negates_edge_labels(self):
        g = tableau_graph((3, 3))
        gt = tableau_graph((2, 2, 2))
        # transposition maps the graph onto the conjugate graph; the
        # conjugate poset is reversed, so each edge appears with sign
        # flipped and direction reversed.
        flipped = sorted((e.i, -e.rho) for e in g.edges)
        assert flipped == sorted((e.i, e.rho) for e in gt.edges)


class TestReadingPermutation:
    def test_examples(self):
        assert bottom_tableau((3, 3)).reading_permutation() == (1, 2, 3, 4, 5, 6)
        assert top_tableau((3, 3)).reading_permutation() == (1, 3, 5, 2, 4, 6)
        assert top_tableau((2, 2)).reading_permutation() == (1, 3, 2, 4)


class TestValidation:
    def test_rejects_bad_rows(self):
        with pytest.raises(ValueError):
            tableau_from_rows([[2, 1], [3, 4]])
        with pytest.raises(ValueError):
            tableau_from_rows([[1, 3], [2, 2]])
        with pytest.raises(ValueError):
            tableau_from_rows([[3, 4], [1, 2]])
