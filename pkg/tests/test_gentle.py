"""Band walks and band modules: validity, matrices, Hom spaces, g-vectors."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bandbrick import dyck, gentle, words
from bandbrick.forms import euler_form
from bandbrick.errors import (
    InvalidWalk,
    LetterOutOfRange,
    NonPrimitive,
    ZeroLambda,
)


primitive_words = (
    st.lists(st.integers(2, 5), min_size=1, max_size=7)
    .map(tuple)
    .filter(words.is_primitive)
)


class TestWalks:
    def test_letter_cycle_display(self):
        assert gentle.walk_to_str(gentle.letter_cycle(2)) == "a1 b1-"
        assert gentle.walk_to_str(gentle.letter_cycle(3)) == "a1 a2 b2- b1-"

    def test_letter_cycle_range(self):
        with pytest.raises(LetterOutOfRange):
            gentle.letter_cycle(1)

    def test_psi_golden(self):
        assert (
            gentle.walk_to_str(gentle.psi((2, 3, 2, 2, 3)))
            == "a1 b1- a1 a2 b2- b1- a1 b1- a1 b1- a1 a2 b2- b1-"
        )

    def test_psi_rejects_powers(self):
        with pytest.raises(NonPrimitive):
            gentle.psi((2, 3, 2, 3))

    def test_psi_rejects_small_n(self):
        with pytest.raises(LetterOutOfRange):
            gentle.psi((2, 3), n=2)

    def test_round_trip_serialization(self):
        text = "a1 b1- a1 a2 b2- b1-"
        assert gentle.walk_to_str(gentle.walk_from_str(text)) == text

    def test_validate_accepts_psi(self):
        assert gentle.validate_band_walk(gentle.psi((2, 3, 2, 2, 3)))

    def test_validate_rejects_backtrack(self):
        assert not gentle.validate_band_walk(gentle.walk_from_str("a1 a1-"))

    def test_validate_rejects_power(self):
        assert not gentle.validate_band_walk(gentle.walk_from_str("a1 b1- a1 b1-"))

    def test_validate_rejects_relation(self):
        # b1 a2 written consecutively is a zero relation
        assert not gentle.validate_band_walk(gentle.walk_from_str("b1 a2 b2- a1-"))

    def test_validate_rejects_non_composable(self):
        assert not gentle.validate_band_walk(gentle.walk_from_str("a1 a2"))

    def test_canonical_rotation_invariant(self):
        walk = gentle.psi((2, 3, 2, 2, 3))
        canon = gentle.canonical_walk(walk)
        for k in range(len(walk)):
            assert gentle.canonical_walk(walk[k:] + walk[:k]) == canon

    @given(primitive_words)
    @settings(max_examples=60, deadline=None)
    def test_psi_always_valid(self, w):
        assert gentle.validate_band_walk(gentle.psi(w))


class TestBandModule:
    def test_minimal_module(self):
        m = gentle.band_module(gentle.psi((2,)), Fraction(5))
        assert m.dims == (1, 1)
        assert m.mats[("a", 1)] == ((Fraction(5),),)
        assert m.mats[("b", 1)] == ((Fraction(1),),)

    def test_multi_visit_module(self):
        walk = gentle.walk_from_str("a1 a2 b2- a2 b2- b1-")
        m = gentle.band_module(walk, Fraction(1), n=3)
        assert m.dims == (1, 3, 2)
        entries = [
            v
            for mat in m.mats.values()
            for row in mat
            for v in row
            if v not in (0, 1)
        ]
        assert entries == []  # lambda = 1 leaves only 0/1 entries

    def test_lambda_appears_once(self):
        walk = gentle.walk_from_str("a1 a2 b2- a2 b2- b1-")
        m = gentle.band_module(walk, Fraction(7), n=3)
        entries = [
            v
            for mat in m.mats.values()
            for row in mat
            for v in row
            if v not in (0, 1)
        ]
        assert entries == [Fraction(7)]

    def test_zero_lambda_rejected(self):
        with pytest.raises(ZeroLambda):
            gentle.band_module(gentle.psi((2,)), 0)

    def test_invalid_walk_rejected(self):
        with pytest.raises(InvalidWalk):
            gentle.band_module(gentle.walk_from_str("a1 a1-"), 1)

    @given(primitive_words, st.integers(1, 5))
    @settings(max_examples=40, deadline=None)
    def test_dimension_vector_counts_visits(self, w, lam):
        m = gentle.band_module(gentle.psi(w), Fraction(lam))
        assert sum(m.dims) == len(m.walk)


class TestHom:
    def test_brick_detection(self):
        m = gentle.band_module(gentle.psi((2, 3)), Fraction(1))
        assert gentle.is_brick(m)

    def test_non_brick(self):
        m = gentle.band_module(gentle.psi((2, 2, 3, 3)), Fraction(1))
        assert gentle.hom_dim(m, m) == 2
        assert not gentle.is_brick(m)

    def test_hom_asymmetry_matches_euler(self):
        x = gentle.band_module(gentle.psi((2,), n=3), Fraction(1), n=3)
        y = gentle.band_module(gentle.psi((2, 3)), Fraction(1))
        gx = gentle.g_vector_of_band(x.walk, 3)
        gy = gentle.g_vector_of_band(y.walk, 3)
        diff = gentle.hom_dim(x, y) - gentle.hom_dim(y, x)
        assert diff == euler_form(gx, gy)

    def test_ext_is_reversed_hom(self):
        x = gentle.band_module(gentle.psi((2,), n=3), Fraction(1), n=3)
        y = gentle.band_module(gentle.psi((2, 3)), Fraction(2))
        assert gentle.ext1_dim(x, y) == gentle.hom_dim(y, x)

    def test_distinct_lambda_no_hom(self):
        walk = gentle.psi((2,))
        x = gentle.band_module(walk, Fraction(1))
        y = gentle.band_module(walk, Fraction(2))
        assert gentle.hom_dim(x, y) == 0
        assert gentle.hom_dim(x, x) == 1


class TestGVector:
    def test_minimal(self):
        assert gentle.g_vector_of_band(gentle.psi((2,))) == (-1, 1)

    def test_golden(self):
        assert gentle.g_vector_of_band(gentle.psi((2, 3, 2, 2, 3))) == (-5, 3, 2)

    def test_mixed_sign_walk(self):
        walk = gentle.walk_from_str("a1 a2 b2- a2 b2- b1-")
        assert gentle.g_vector_of_band(walk) == (-1, -1, 2)

    @given(primitive_words)
    @settings(max_examples=60, deadline=None)
    def test_psi_gvector_counts_letters(self, w):
        n = max(w)
        expected = (-len(w),) + tuple(w.count(i) for i in range(2, n + 1))
        assert gentle.g_vector_of_band(gentle.psi(w)) == expected


class TestSlalom:
    def test_single_component_walk(self):
        ms = dyck.reconstruct_multislalom((-1, -1, 2))
        walk = gentle.slalom_to_band_walk(ms.components[0])
        assert gentle.canonical_walk(walk) == gentle.walk_from_str(
            "a1 a2 b2- a2 b2- b1-"
        )

    def test_minimal_component_is_psi_2(self):
        ms = dyck.reconstruct_multislalom((-1, 1))
        walk = gentle.slalom_to_band_walk(ms.components[0])
        assert gentle.canonical_walk(walk) == gentle.canonical_walk(gentle.psi((2,)))

    @given(
        st.lists(st.integers(-4, 4), min_size=1, max_size=4)
        .map(lambda h: tuple(h) + (-sum(h),))
        .filter(
            lambda g: len(g) >= 2
            and sum(map(abs, g)) <= 14
            and all(sum(g[: k + 1]) <= 0 for k in range(len(g) - 1))
            and any(g)
        )
    )
    @settings(max_examples=50, deadline=None)
    def test_component_walks_validate_and_sum(self, g):
        ms = dyck.reconstruct_multislalom(g)
        total = [0] * len(g)
        for comp in ms.components:
            walk = gentle.slalom_to_band_walk(comp)
            assert gentle.validate_band_walk(walk, len(g))
            gv = gentle.g_vector_of_band(walk, len(g))
            total = [a + b for a, b in zip(total, gv)]
        assert tuple(total) == g
