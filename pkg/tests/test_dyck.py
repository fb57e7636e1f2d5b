"""Dyck-path model: validation, matching, components, circular words."""

from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bandbrick import dyck, words
from bandbrick.errors import BadDimension, InvalidGVector


def _safe_valid(g):
    try:
        return dyck.validate_gvector(g)
    except BadDimension:
        return False


valid_gvectors = (
    st.lists(st.integers(-5, 5), min_size=1, max_size=4)
    .map(lambda h: tuple(h) + (-sum(h),))
    .filter(_safe_valid)
)


class TestValidate:
    def test_examples(self):
        assert dyck.validate_gvector((-1, 1))
        assert dyck.validate_gvector((-3, -1, 3, -2, 3))
        assert not dyck.validate_gvector((1, -1))
        assert not dyck.validate_gvector((-1, 2))
        assert not dyck.validate_gvector((0, 0))

    def test_too_short(self):
        with pytest.raises(BadDimension):
            dyck.validate_gvector((0,))

    def test_invalid_rejected_downstream(self):
        with pytest.raises(InvalidGVector):
            dyck.to_dyck_diagram((1, -1))


class TestDiagram:
    def test_path_golden(self):
        d = dyck.to_dyck_diagram((-3, -1, 3, -2, 3))
        assert d.word == "uuuuddduuddd"
        assert d.labels == (1, 1, 1, 2, 3, 3, 3, 4, 4, 5, 5, 5)

    def test_minimal(self):
        d = dyck.to_dyck_diagram((-1, 1))
        assert d.word == "ud"
        assert d.labels == (1, 2)

    @given(valid_gvectors)
    @settings(max_examples=60, deadline=None)
    def test_balanced_and_nonnegative(self, g):
        d = dyck.to_dyck_diagram(g)
        h = 0
        for c in d.word:
            h += 1 if c == "u" else -1
            assert h >= 0
        assert h == 0

    @given(valid_gvectors)
    @settings(max_examples=60, deadline=None)
    def test_label_counts(self, g):
        d = dyck.to_dyck_diagram(g)
        assert Counter(d.labels) == {i + 1: abs(a) for i, a in enumerate(g) if a}


class TestCircularWords:
    def test_two_components(self):
        assert dyck.circular_words((-3, -1, 3, -2, 3)) == (
            (1, 3, 1, 5, 4, 5, 4, 5),
            (1, 3, 2, 3),
        )

    def test_repeated_component(self):
        assert dyck.circular_words((-8, 2, 2, 4)) == (
            (1, 2, 1, 4, 1, 3, 1, 4),
            (1, 2, 1, 4, 1, 3, 1, 4),
        )

    def test_minimal(self):
        assert dyck.circular_words((-1, 1)) == ((1, 2),)

    def test_single_component(self):
        assert dyck.circular_words((-1, -1, 2)) == ((1, 3, 2, 3),)

    @given(valid_gvectors)
    @settings(max_examples=60, deadline=None)
    def test_letter_counts_match_entries(self, g):
        ms = dyck.circular_words(g)
        letters = Counter(v for w in ms for v in w)
        assert letters == {i + 1: abs(a) for i, a in enumerate(g) if a}


class TestEraseOnes:
    def test_golden(self):
        erased = dyck.erase_ones(dyck.circular_words((-8, 2, 2, 4)))
        assert erased == words.phi((4, 4, 4, 4, 3, 3, 2, 2))

    def test_all_ones_vanish(self):
        assert dyck.erase_ones(((1, 1, 1),)) == ((),)

    def test_recanonicalizes(self):
        assert dyck.erase_ones(((2, 1, 3),)) == ((2, 3),)


class TestComponents:
    def test_decompose_golden(self):
        assert dyck.component_gvectors((-3, -1, 3, -2, 3)) == (
            (-2, 0, 1, -2, 3),
            (-1, -1, 2, 0, 0),
        )

    def test_single(self):
        assert dyck.component_gvectors((-1, -1, 2)) == ((-1, -1, 2),)

    @given(valid_gvectors)
    @settings(max_examples=60, deadline=None)
    def test_components_sum_to_g(self, g):
        comps = dyck.component_gvectors(g)
        assert comps
        assert tuple(sum(col) for col in zip(*comps)) == g

    @given(valid_gvectors)
    @settings(max_examples=40, deadline=None)
    def test_each_component_is_valid(self, g):
        for c in dyck.component_gvectors(g):
            assert dyck.validate_gvector(c)

    @given(valid_gvectors)
    @settings(max_examples=40, deadline=None)
    def test_component_count_matches_words(self, g):
        ms = dyck.reconstruct_multislalom(g)
        assert len(ms.components) == len(dyck.circular_words(g))
