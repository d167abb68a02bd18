"""Arc pullbacks, relative-closure membership, and the sampling refuter."""

import math
import random

import pytest

from subintegral import (
    ArcPair,
    ArcSampler,
    LocalArc,
    MonomialIdeal,
    SubmodulePair,
    arc_pair_stream,
    basic_facts_check,
    bounded_search,
    delta_pair_of_ideal,
    i_greater,
    ideal_pair_membership,
    in_integral_closure,
    prefix_arc_pairs,
    pullback,
    pullback_order,
    refute_star_membership,
    relative_membership,
    sigma1_check,
)
from subintegral.poly import SparsePoly

from oracles import random_igt_element, random_monomial, random_monomial_ideal


def ideal(*exps):
    return MonomialIdeal(len(exps[0]), exps)


def mono(*exp):
    return SparsePoly.monomial(tuple(exp))


def arc(*component_dicts):
    comps = []
    for d in component_dicts:
        comps.append(SparsePoly(1, {(k,): v for k, v in d.items()}))
    return LocalArc(tuple(comps))


T_T = arc({1: 1}, {1: 1})
T_MINUS_T = arc({1: 1}, {1: -1})
CORNER = ideal((2, 0), (0, 2))
WEIGHTED = ideal((2, 0), (1, 2), (0, 3))


class TestPullback:
    def test_square_along_diagonal(self):
        assert pullback_order(mono(2, 0), T_T) == 2

    def test_difference_of_squares_cancels(self):
        f = mono(2, 0) - mono(0, 2)
        a = arc({1: 1}, {1: 1, 2: 1})
        assert pullback(f, a) == SparsePoly(1, {(3,): -2, (4,): -1})
        assert pullback_order(f, a) == 3

    def test_weighted_monomial_arc(self):
        assert pullback_order(mono(1, 1), arc({2: 1}, {3: 1})) == 5

    def test_vanishing_pullback(self):
        assert pullback_order(mono(1, 0), arc({}, {1: 1})) == math.inf


class TestDeltaPair:
    def test_two_generators(self):
        pair = delta_pair_of_ideal(CORNER)
        assert len(pair.inner) == 2 and len(pair.outer) == 4

    def test_three_generators(self):
        pair = delta_pair_of_ideal(ideal((2, 0), (1, 1), (0, 2)))
        assert len(pair.inner) == 3 and len(pair.outer) == 6

    def test_zero_ideal(self):
        pair = delta_pair_of_ideal(MonomialIdeal.zero(2))
        assert pair.inner == () and pair.outer == ()


class TestRelativeMembership:
    def test_hand_checked_refutation(self):
        pair = delta_pair_of_ideal(CORNER)
        h = mono(1, 1)
        arcs = ArcPair(T_T, T_MINUS_T)
        assert not relative_membership((h, h), pair, arcs)
        assert not ideal_pair_membership(h, CORNER, arcs)

    def test_ideal_elements_always_pass(self):
        rng = random.Random(7)
        pair = delta_pair_of_ideal(CORNER)
        h = mono(2, 0) + 3 * mono(1, 2)
        for arcs in arc_pair_stream(2, ArcSampler(seed=1, count=25)):
            assert relative_membership((h, h), pair, arcs)
            assert ideal_pair_membership(h, CORNER, arcs)

    def test_interior_monomial_of_parameter_ideal(self):
        J = ideal((2, 0), (0, 3))
        pair = delta_pair_of_ideal(J)
        h = mono(1, 2)
        arcs = ArcPair(T_T, arc({1: 2}, {1: 3}))
        assert relative_membership((h, h), pair, arcs)
        assert ideal_pair_membership(h, J, arcs)

    def test_fast_path_matches_general_path(self):
        rng = random.Random(77)
        for _ in range(40):
            n = rng.choice([2, 3])
            I = random_monomial_ideal(rng, n, max_exp=3)
            h = random_monomial(rng, n, max_exp=5)
            pair = delta_pair_of_ideal(I)
            for arcs in list(arc_pair_stream(n, ArcSampler(seed=3, count=8))):
                assert relative_membership((h, h), pair, arcs) == ideal_pair_membership(
                    h, I, arcs
                )

    def test_truncation_stability(self):
        pair = delta_pair_of_ideal(CORNER)
        h = mono(1, 1)
        for arcs in prefix_arc_pairs(2):
            base = relative_membership((h, h), pair, arcs, trunc=6)
            assert relative_membership((h, h), pair, arcs, trunc=12) == base

    def test_truncation_guard(self):
        from subintegral import TruncationTooSmall

        pair = delta_pair_of_ideal(CORNER)
        h = mono(1, 1)
        with pytest.raises(TruncationTooSmall):
            relative_membership((h, h), pair, ArcPair(T_T, T_MINUS_T), trunc=2)

    def test_one_sided_pair_is_integral_closure_test(self):
        # With the second arc zero, membership reduces to the valuative
        # test along the first arc; integral-closure members never fail.
        rng = random.Random(81)
        for _ in range(20):
            I = random_monomial_ideal(rng, 2, max_exp=3)
            h = random_monomial(rng, 2, max_exp=5)
            if not in_integral_closure(h, I):
                continue
            for arcs in [
                ArcPair(T_T, LocalArc.zero(2)),
                ArcPair(arc({2: 1}, {3: -2}), LocalArc.zero(2)),
                ArcPair(arc({1: 1, 2: 1}, {1: -1}), LocalArc.zero(2)),
            ]:
                assert ideal_pair_membership(h, I, arcs)


class TestRefuter:
    def test_witness_for_mixed_monomial(self):
        refutation = refute_star_membership(mono(1, 1), CORNER)
        assert refutation is not None
        assert refutation.index < 10
        assert refutation.pair == ArcPair(T_T, T_MINUS_T)

    def test_no_witness_for_interior_elements(self):
        rng = random.Random(83)
        sampler = ArcSampler(seed=5, count=60)
        for _ in range(10):
            I = random_monomial_ideal(rng, 2, max_exp=3)
            h = random_igt_element(rng, i_greater(I))
            assert refute_star_membership(h, I, sampler) is None

    def test_unit_element_refuted_immediately(self):
        h = SparsePoly.constant(2, 1) + mono(1, 0)
        refutation = refute_star_membership(h, CORNER)
        assert refutation is not None and refutation.index == 0

    def test_refutation_blocks_certificates(self):
        rng = random.Random(87)
        sampler = ArcSampler(seed=9, count=40)
        checked = 0
        for _ in range(200):
            if checked >= 8:
                break
            I = random_monomial_ideal(rng, 2, max_exp=3)
            h = random_monomial(rng, 2, max_exp=4)
            refutation = refute_star_membership(h, I, sampler)
            if refutation is None:
                continue
            checked += 1
            assert bounded_search(h, I, q_max=2) is None
        assert checked >= 5


class TestTruncatedSeries:
    def test_arithmetic(self):
        from subintegral import TruncatedSeries

        a = TruncatedSeries([1, 2, 0, 5], 4)
        b = TruncatedSeries.from_poly(SparsePoly(1, {(1,): 1, (3,): -1}), 4)
        assert (a + b).coeffs == (1, 3, 0, 4)
        assert (a * b).coeffs == (0, 1, 2, -1)
        assert b.shift(2).coeffs == (0, 0, 0, 1)
        assert b.t_order() == 1
        assert TruncatedSeries([0, 0], 2).t_order() == math.inf


class TestSigma1:
    def test_below_the_facet(self):
        assert not sigma1_check(mono(1, 1), WEIGHTED)

    def test_on_the_facet(self):
        assert sigma1_check(mono(2, 0), WEIGHTED)

    def test_ideal_element(self):
        assert sigma1_check(mono(1, 2) + mono(0, 3), WEIGHTED)


class TestBasicFacts:
    def test_inner_span_passes_everywhere(self):
        pair = delta_pair_of_ideal(CORNER)
        probe = tuple(
            a + b for a, b in zip(pair.inner[0], pair.inner[1])
        )
        outcomes = basic_facts_check(pair, [probe])
        assert outcomes[0].passes

    def test_unit_component_refuted_by_first_arc(self):
        # N the full free module, M inside m*F: a probe with a unit entry
        # cannot be in the relative closure.
        one = SparsePoly.constant(2, 1)
        zero = SparsePoly.zero(2)
        pair = SubmodulePair(
            rank=2,
            inner=tuple((g, g) for g in CORNER.generator_polys()),
            outer=((one, zero), (zero, one)),
        )
        outcomes = basic_facts_check(pair, [(one, zero)])
        assert not outcomes[0].passes
        assert outcomes[0].refutation.index == 0

    def test_diagonal_of_ideal_element_passes(self):
        pair = delta_pair_of_ideal(CORNER)
        h = mono(0, 2)
        outcomes = basic_facts_check(pair, [(h, h)])
        assert outcomes[0].passes
