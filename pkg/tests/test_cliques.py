import itertools
import pytest
from hypothesis import given, settings, strategies as st

from cohrealize.cliques import (
    BOT, BOTTOM_STACK, TOP, TOP_STACK, FiniteTerm, Process, Stack,
    apply, bar_I, cc, evaluate, fire_by_tokens, h, h_stack, identity, is_prooflike, k_of,
    meet_terms, numeral, prooflike_refuter, push, r_P,
)
from cohrealize.errors import CliqueError
from cohrealize.token_core import grade
from cohrealize.types.token import get_context
from cohrealize.types.universe import Universe
from cohrealize.types.verdicts import Outcome

ctx = get_context()
U = Universe(3, 2).warm()
CLIQUES = U.cliques()
STACKS = U.stacks()
POOL = U.component_pool()
FEW = settings(deadline=None, max_examples=30)


def outcome(t, pi):
    return evaluate(Process(t, pi), universe=U).outcome


class TestTerms:
    def test_constants(self):
        assert TOP.token_set == {ctx.empty}
        assert BOT.token_set == frozenset()
        assert numeral(3).token_set == {ctx.nu(3)}
        assert bar_I(()) == TOP
        assert bar_I((2,)) == numeral(2)
        assert bar_I((1, 0)).token_set == {ctx.make([(0, ctx.empty), (1, ctx.empty)])}

    def test_incoherent_tokens_are_rejected(self):
        with pytest.raises(CliqueError):
            FiniteTerm([ctx.empty, ctx.nu(0)])

    def test_default_cliques(self, small_universe):
        cliques = small_universe.cliques()
        assert len(cliques) == 5
        assert cliques[0] == BOT
        assert TOP in cliques

    def test_numerals_reject_negatives(self):
        with pytest.raises(ValueError):
            numeral(-1)


class TestStacks:
    def test_trailing_fillers_do_not_matter(self):
        assert Stack.seq([BOT, BOT]) == BOTTOM_STACK
        assert Stack.seq([TOP], 'top') == TOP_STACK
        assert Stack.seq([TOP]) != BOTTOM_STACK

    def test_pop(self):
        head, rest = Stack.seq([numeral(0), TOP]).pop()
        assert head == numeral(0)
        assert rest == Stack.seq([TOP])
        assert TOP_STACK.pop() == (TOP, TOP_STACK)

    def test_push_keeps_the_tail(self):
        pushed = push(numeral(1), TOP_STACK)
        assert pushed.component(0) == numeral(1)
        assert pushed.component(5) == TOP

    def test_ideal_of_the_bottom_stack(self):
        assert BOTTOM_STACK.ideal_tokens() == [ctx.empty]
        assert TOP_STACK.ideal_tokens() is None

    def test_below(self):
        assert BOTTOM_STACK.below(Stack.seq([TOP]))
        assert not Stack.seq([TOP]).below(BOTTOM_STACK)
        assert BOTTOM_STACK.below(TOP_STACK)
        assert not TOP_STACK.below(BOTTOM_STACK)

    @given(st.sampled_from(STACKS), st.sampled_from(CLIQUES))
    @FEW
    def test_ideal_form_fires_the_same_terms(self, pi, t):
        assert outcome(t, pi) == outcome(t, pi.to_ideal())

    def test_prooflike_stacks(self):
        assert BOTTOM_STACK.is_prooflike()
        assert not TOP_STACK.is_prooflike()
        assert not Stack.seq([TOP]).is_prooflike()
        assert Stack.seq([numeral(0)]).is_prooflike()


class TestEvaluation:
    def test_top_and_bottom(self):
        assert outcome(TOP, BOTTOM_STACK) == Outcome.TOP
        assert outcome(BOT, TOP_STACK) == Outcome.BOT

    def test_witness(self):
        result = evaluate(Process(numeral(1), Stack.seq([BOT, TOP])), universe=U)
        assert result.top
        assert result.witness is ctx.nu(1)

    @pytest.mark.parametrize('n', range(4))
    def test_numerals_test_one_position(self, n):
        for length in range(4):
            for items in itertools.product(POOL, repeat=length):
                s = Stack.seq(items)
                assert evaluate(Process(numeral(n), s), universe=U).top == (s.component(n) == TOP)

    def test_application(self):
        assert apply(numeral(0), TOP) == TOP
        assert apply(numeral(0), BOT) == BOT
        assert apply(numeral(1), BOT) == numeral(0)
        assert apply(bar_I((0, 1)), TOP) == numeral(0)

    @given(st.sampled_from(CLIQUES), st.sampled_from(POOL), st.sampled_from(STACKS))
    @FEW
    def test_application_is_pushing(self, t, s, pi):
        assert outcome(apply(t, s), pi) == outcome(t, push(s, pi))

    def test_meet_of_numerals(self):
        meet = meet_terms(numeral(0), numeral(1))
        assert meet == bar_I((0, 1))
        for pi in STACKS:
            both = outcome(numeral(0), pi) == Outcome.TOP and outcome(numeral(1), pi) == Outcome.TOP
            assert (outcome(meet, pi) == Outcome.TOP) == both


class TestControl:
    @given(st.sampled_from(CLIQUES), st.sampled_from(STACKS), st.sampled_from(STACKS))
    @FEW
    def test_k_restores_its_stack(self, t, pi, rho):
        expected = outcome(t, pi)
        assert outcome(k_of(pi), push(t, rho)) == expected
        assert fire_by_tokens(k_of(pi), push(t, rho), U).outcome == expected

    @given(st.sampled_from(CLIQUES), st.sampled_from(STACKS))
    @FEW
    def test_cc_reifies_the_stack(self, t, pi):
        expected = outcome(t, push(k_of(pi), pi))
        assert outcome(cc(), push(t, pi)) == expected
        assert fire_by_tokens(cc(), push(t, pi), U).outcome == expected

    @given(st.sampled_from(CLIQUES), st.sampled_from(STACKS))
    @FEW
    def test_identity(self, t, pi):
        assert fire_by_tokens(identity(), push(t, pi), U).outcome == outcome(t, pi)
        assert frozenset(apply(identity(), t, U).tokens(U)) == t.token_set


class TestProoflike:
    def test_constants(self, small_universe):
        assert is_prooflike(TOP).no
        assert is_prooflike(BOT).yes
        assert all(is_prooflike(numeral(n)).yes for n in range(5))
        assert is_prooflike(identity(), small_universe).yes
        assert is_prooflike(cc(), small_universe).yes

    def test_every_cc_token_has_grade_one(self, small_universe):
        assert all(grade(alpha) == 1 for alpha in cc().tokens(small_universe))

    def test_refuter_fires_its_term(self):
        pi = prooflike_refuter(TOP)
        assert pi == BOTTOM_STACK
        assert prooflike_refuter(numeral(0)) is None

    @given(st.sampled_from(CLIQUES))
    @FEW
    def test_prooflike_terms_miss_prooflike_stacks(self, t):
        if is_prooflike(t).yes:
            assert not any(outcome(t, pi) == Outcome.TOP for pi in U.prooflike_stacks())
        else:
            pi = prooflike_refuter(t)
            assert pi.is_prooflike()
            assert outcome(t, pi) == Outcome.TOP

    @given(st.sampled_from(CLIQUES))
    @FEW
    def test_r_P(self, t):
        kept = r_P(t)
        assert kept.token_set <= t.token_set
        assert is_prooflike(kept).yes
        assert (kept == t) == is_prooflike(t).yes

    @given(st.sampled_from(CLIQUES), st.sampled_from(STACKS), st.integers(1, 3))
    @FEW
    def test_h_filters_levels(self, t, pi, n):
        assert outcome(h(n, t), pi) == outcome(t, h_stack(n, pi))
