import pytest
from hypothesis import assume, given, settings, strategies as st

from cohrealize.cliques import BOT, BOTTOM_STACK, TOP, Process, Stack, apply, evaluate, identity, is_prooflike, numeral, push
from cohrealize.errors import UnboundVariable
from cohrealize.parse_syntax import parse_term
from cohrealize.stable_maps import TraceEntry, check_stability, fun, interpret, por_obstruction, trace_of
from cohrealize.syntax import Var, app, lam
from cohrealize.token_core import is_clique
from cohrealize.types.token import get_context
from cohrealize.types.universe import Universe

ctx = get_context()
U = Universe(3, 2).warm()
SMALL = Universe(2, 2).warm()


class TestTraces:
    def test_trace_of_a_finite_term_rebuilds_it(self, small_universe):
        for t in small_universe.cliques():
            assert fun(trace_of(lambda a, t=t: apply(t, a, small_universe), small_universe)) == t

    @given(st.sampled_from(U.cliques()))
    @settings(deadline=None, max_examples=8)
    def test_trace_round_trip_at_the_default_bound(self, t):
        assert fun(trace_of(lambda a: apply(t, a, U), U)) == t

    def test_identity_trace_lies_in_the_identity(self, small_universe):
        traced = fun(trace_of(lambda a: a, small_universe))
        assert len(traced) == 4
        assert all(identity().contains(alpha) for alpha in traced.tokens())

    def test_entries_become_tokens(self):
        entry = TraceEntry(TOP, ctx.nu(0))
        assert entry.token() is ctx.make([(0, ctx.empty), (1, ctx.empty)])
        assert fun([TraceEntry(BOT, ctx.empty)]) == TOP

    @given(st.sampled_from(U.cliques()), st.sampled_from(SMALL.cliques()), st.sampled_from(SMALL.cliques()))
    @settings(deadline=None, max_examples=30)
    def test_application_is_stable(self, f, x, y):
        assume(is_clique(x.token_set | y.token_set))
        assert check_stability(f, x, y, U)


class TestInterpretation:
    def test_identity_abstraction(self):
        f = interpret(parse_term('(lam x x)'), u=U)
        assert evaluate(Process(f, push(numeral(0), Stack.seq([TOP]))), universe=U).top
        assert evaluate(Process(f, push(numeral(1), Stack.seq([TOP]))), universe=U).bot

    def test_projections(self):
        first = interpret(lam('x', 'y', Var('x')), u=U)
        second = interpret(lam('x', 'y', Var('y')), u=U)
        pi = push(TOP, push(BOT, BOTTOM_STACK))
        assert evaluate(Process(first, pi), universe=U).top
        assert evaluate(Process(second, pi), universe=U).bot

    def test_application_of_builtins(self):
        t = interpret(parse_term('(app id (num 2))'), u=U)
        assert evaluate(Process(t, Stack.seq([BOT, BOT], 'top')), universe=U).top
        assert evaluate(Process(t, Stack.seq([BOT, BOT, BOT])), universe=U).bot

    def test_open_terms_are_rejected(self):
        with pytest.raises(UnboundVariable):
            interpret(parse_term('(lam x y)'))

    def test_environment_binds_free_variables(self):
        assert interpret(Var('z'), {'z': numeral(4)}) == numeral(4)

    def test_purity(self):
        assert parse_term('(lam x (app x x))').pure
        assert not parse_term('(lam x top)').pure
        assert not app(Var('f'), parse_term('bot')).pure

    @pytest.mark.parametrize('text', ['(lam x x)', '(lam x y x)', '(lam x p (app p x))', '(lam f x (app f x))'])
    def test_pure_terms_are_prooflike(self, text, small_universe):
        assert not is_prooflike(interpret(parse_term(text), u=small_universe), small_universe).no


class TestParallelOr:
    def test_no_stable_parallel_or(self, small_universe):
        report = por_obstruction(small_universe)
        assert report.passed
        assert report.scanned == len(small_universe.cliques())

    def test_default_bound(self, universe):
        assert por_obstruction(universe).passed
