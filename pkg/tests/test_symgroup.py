"""Permutations, the group algebra, and actions on polynomials."""

import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pfaffkit.exactpoly import ONE, as_ratfn, ratfn, ratfn_equal, variable
from pfaffkit.symgroup import (
    GroupAlgebraElement,
    act,
    box,
    compose,
    generator,
    identity,
    inverse,
    length,
    nabla,
    sign,
    transposition,
    yang_baxter_factor,
)


def x(i):
    return variable("x", i)


def a(i):
    return variable("a", i)


class TestPermOps:
    def test_compose_convention(self):
        # "apply right then left on positions": brute-forced on S_3.
        s, t = (2, 1, 3), (1, 3, 2)
        expected = tuple(s[t[k] - 1] for k in range(3))
        assert compose(s, t) == (2, 3, 1) == expected

    def test_compose_all_s3(self):
        for s in itertools.permutations((1, 2, 3)):
            for t in itertools.permutations((1, 2, 3)):
                manual = tuple(s[t[k] - 1] for k in range(3))
                assert compose(s, t) == manual

    def test_length_and_sign(self):
        assert length((2, 1, 3)) == 1
        assert sign((2, 1, 4, 3)) == 1
        assert sign((2, 1, 3)) == -1

    def test_inverse(self):
        for s in itertools.permutations((1, 2, 3, 4)):
            assert compose(s, inverse(s)) == identity(4)

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            compose((1, 2), (1, 2, 3))


class TestAlgebra:
    def test_sign_idempotent_pair(self):
        one = GroupAlgebraElement.one(2)
        s1 = generator(1, 2)
        assert (one - s1).convolve(one + s1) == GroupAlgebraElement(2)

    def test_edge_factor_product(self):
        # (s_i + 1/2)(s_i - 1/2) = 1 - 1/4
        n = 3
        lhs = yang_baxter_factor(1, 2, n).convolve(
            generator(1, n) + GroupAlgebraElement.one(n).scale(F(-1, 2)))
        assert lhs == GroupAlgebraElement.one(n).scale(F(3, 4))

    def test_block_sum_idempotent_up_to_scale(self):
        from pfaffkit.pfaffian import theta
        t2 = theta(4)
        assert t2.convolve(t2) == t2.scale(2)

    def test_nabla_box(self):
        assert nabla(2) == (GroupAlgebraElement.one(2) - generator(1, 2)).scale(F(1, 2))
        assert box(2).convolve(box(2)) == box(2)
        assert nabla(3).convolve(nabla(3)) == nabla(3)
        assert len(nabla(3)) == 6
        assert all(abs(c) == F(1, 6) for c in nabla(3).terms.values())


class TestSignTwist:
    def test_nabla_to_box(self):
        assert nabla(3).sign_twist() == box(3)

    def test_involution(self):
        e = nabla(3).convolve(generator(2, 3)) + box(3).scale(F(2, 5))
        assert e.sign_twist().sign_twist() == e

    def test_formal_pfaffian_twist_is_matching_sum(self):
        from pfaffkit.pfaffian import pf_formal
        h = pf_formal(4).sign_twist()
        assert h.terms == {(1, 2, 3, 4): F(1), (1, 3, 2, 4): F(1), (2, 3, 1, 4): F(1)}


class TestAct:
    def test_single_transposition(self):
        assert act(transposition(1, 2), x(1) - x(2), ["x"]) == -(x(1) - x(2))

    def test_bracket_antisymmetry(self):
        z12 = variable("z", 1, 2)
        assert act(transposition(1, 2), z12, ["z"]) == -z12

    def test_pfaffian_normalization_constant(self):
        # Antisymmetrizing the seed matching monomial recovers the full
        # Pfaffian once scaled by n!/(2^(n/2) (n/2)!) = 3 at n = 4.
        from pfaffkit.pfaffian import AntisymmetricMatrix, pfaffian
        n = 4
        seed = ratfn((a(1) - a(2)) * (a(3) - a(4)), (x(1) + x(2)) * (x(3) + x(4)))
        lhs = act(nabla(n), seed, ["a", "x"]) * 3
        pf = pfaffian(AntisymmetricMatrix.from_function(
            n, lambda i, j: ratfn(a(i) - a(j), x(i) + x(j))))
        assert ratfn_equal(lhs, pf)

    def test_diagonal_vs_single(self):
        f = (a(1) - a(2)) * (x(1) - x(2))
        assert act(transposition(1, 2), f, ["a", "x"]) == f
        assert act(transposition(1, 2), f, ["a"]) == -f


class TestYangBaxter:
    @pytest.mark.parametrize("alpha,beta", [(2, 3), (3, 2), (2, 2), (5, 7)])
    @pytest.mark.parametrize("n,i", [(3, 1), (4, 1), (4, 2)])
    def test_braid_relation(self, alpha, beta, n, i):
        def f(j, c):
            return yang_baxter_factor(j, c, n)
        lhs = f(i, alpha).convolve(f(i + 1, alpha + beta)).convolve(f(i, beta))
        rhs = f(i + 1, beta).convolve(f(i, alpha + beta)).convolve(f(i + 1, alpha))
        assert lhs == rhs

    @pytest.mark.parametrize("alpha,beta", [(2, 3), (3, 2), (2, 2), (5, 7)])
    def test_distant_commutation(self, alpha, beta):
        n = 4
        lhs = yang_baxter_factor(1, alpha, n).convolve(yang_baxter_factor(3, beta, n))
        rhs = yang_baxter_factor(3, beta, n).convolve(yang_baxter_factor(1, alpha, n))
        assert lhs == rhs


# -- properties --------------------------------------------------------------

perms3 = st.permutations([1, 2, 3]).map(tuple)


@settings(max_examples=50, deadline=None)
@given(perms3, perms3, perms3)
def test_convolve_associative(p, q, r):
    ep, eq, er = (GroupAlgebraElement.from_perm(s) for s in (p, q, r))
    assert ep.convolve(eq).convolve(er) == ep.convolve(eq.convolve(er))


@settings(max_examples=30, deadline=None)
@given(perms3, perms3)
def test_act_is_right_action(p, q):
    f = (x(1) - x(2)) * (x(2) - x(3)) + x(1) ** 2
    u = GroupAlgebraElement.from_perm(p)
    v = GroupAlgebraElement.from_perm(q)
    lhs = act(v, act(u, f, ["x"]), ["x"])
    rhs = act(u.convolve(v), f, ["x"])
    assert lhs == rhs


def test_act_right_action_on_algebra_elements():
    f = (x(1) - x(2)) * (x(3) - x(4))
    u = nabla(4).convolve(generator(2, 4)) + box(4).scale(F(1, 3))
    v = yang_baxter_factor(2, -2, 4)
    lhs = act(v, act(u, f, ["x"]), ["x"])
    rhs = act(u.convolve(v), f, ["x"])
    assert lhs == rhs


def test_identity_neutral():
    e = GroupAlgebraElement.one(3)
    g = generator(2, 3)
    assert e.convolve(g) == g
    assert g.convolve(e) == g
