import pytest
from hypothesis import given, settings, strategies as st

from cohrealize.errors import TokenError
from cohrealize.token_core import (
    coherent, cons_token, enumerate_tokens, grade, hat, in_web, level, project, rank, require_web, shift, union,
)
from cohrealize.types.token import get_context
from cohrealize.types.universe import Universe
from cohrealize.util import proper_subsets, token_string

ctx = get_context()
EMPTY = ctx.empty
NU0, NU1 = ctx.nu(0), ctx.nu(1)
NU01 = ctx.make([(0, EMPTY), (1, EMPTY)])
TOKENS = Universe(3, 2).tokens()


class TestEnumeration:
    def test_level_zero_is_empty(self):
        assert enumerate_tokens(Universe(0, 2)) == []

    def test_level_one_is_the_empty_token(self):
        assert enumerate_tokens(Universe(1, 3)) == [EMPTY]
        assert [token_string(t) for t in enumerate_tokens(Universe(1, 1))] == ['[]']

    def test_small_web(self, small_universe):
        assert small_universe.tokens() == [EMPTY, NU0, NU1, NU01]

    def test_default_web_size(self, universe):
        assert len(universe.tokens()) == 25

    def test_rank_order(self, universe):
        ranks = [rank(t) for t in universe.tokens()]
        assert ranks == sorted(ranks)
        assert len(set(universe.tokens())) == len(universe.tokens())

    def test_levels_are_nested(self, universe):
        assert set(Universe(2, 2).tokens()) <= set(universe.tokens())
        assert set(Universe(3, 1).tokens()) <= set(universe.tokens())


class TestTokens:
    def test_interning(self):
        assert ctx.make([(0, EMPTY)]) is NU0
        assert ctx.make([(1, EMPTY), (0, EMPTY)]) is ctx.make([(0, EMPTY), (1, EMPTY)])

    def test_json(self):
        assert token_string(NU0) == '[[0,[]]]'
        assert ctx.from_json([[1, []], [0, []]]) is NU01

    @given(st.sampled_from(TOKENS))
    @settings(deadline=None, max_examples=25)
    def test_json_round_trip_is_identity(self, alpha):
        assert ctx.from_json(alpha.to_json()) is alpha

    def test_projections(self):
        assert project(NU01, 0) == frozenset([EMPTY])
        assert project(NU0, 1) == frozenset()

    def test_shift_and_cons(self):
        assert shift(NU1) is NU0
        assert shift(NU0) is EMPTY
        assert cons_token([EMPTY], NU0) is NU01
        assert cons_token([], EMPTY) is EMPTY
        assert hat(EMPTY) is NU0
        assert union(NU0, NU1) is NU01

    def test_levels(self):
        assert level(EMPTY) == 1
        assert level(NU0) == 2
        assert level(hat(NU0)) == 3

    def test_grades(self):
        assert grade(EMPTY) == 0
        assert grade(NU0) == 1
        assert grade(NU01) == 1
        assert grade(hat(NU0)) == 0

    @given(st.sampled_from(TOKENS))
    @settings(deadline=None, max_examples=25)
    def test_grade_is_one_iff_some_child_has_grade_zero(self, alpha):
        assert grade(alpha) == (1 if any(grade(c) == 0 for _, c in alpha.entries) else 0)


class TestWeb:
    def test_incoherent_children_leave_the_web(self):
        bad = ctx.make([(0, EMPTY), (0, NU0)])
        verdict = in_web(bad)
        assert not verdict.in_web
        assert verdict.witness[0] == 0
        with pytest.raises(TokenError):
            require_web(bad)
        with pytest.raises(TokenError):
            coherent(bad, EMPTY)

    def test_small_coherence(self):
        assert not coherent(EMPTY, NU0)
        assert not coherent(NU0, NU1)
        assert coherent(NU0, NU0)
        assert coherent(NU0, hat(NU0))

    @given(st.sampled_from(TOKENS))
    @settings(deadline=None, max_examples=25)
    def test_subsets_stay_in_the_web(self, alpha):
        for entries in proper_subsets(alpha.entries):
            assert in_web(ctx.make(entries)).in_web

    @given(st.sampled_from(TOKENS), st.sampled_from(TOKENS))
    @settings(deadline=None, max_examples=50)
    def test_incoherence_is_membership_of_the_union(self, a, b):
        assert coherent(a, b) == coherent(b, a)
        if a != b:
            assert (not coherent(a, b)) == in_web(union(a, b)).in_web
        else:
            assert coherent(a, b)
