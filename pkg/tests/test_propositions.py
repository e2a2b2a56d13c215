import pytest
from hypothesis import given, settings, strategies as st

from cohrealize.cliques import BOT, BOTTOM_STACK, TOP, Stack, bar_I, cc, identity, numeral
from cohrealize.propositions import (
    BOT_PROP, EMPTY_PROP, TOP_PROP, U_PROP, Prop,
    biorth, check_exchange_equations, check_jU_constants, check_NK_realizers, check_realizer,
    eq_pred, exchange_term, forall_prop, implies, j_U, orthogonal, prop_from_json, sample_props,
)
from cohrealize.stable_maps import interpret
from cohrealize.syntax import Var, app, lam
from cohrealize.types.universe import Universe

U = Universe(3, 2).warm()
PROPS = sample_props(8, seed=3)


class TestConstants:
    def test_top_holds_everything(self, universe):
        assert TOP_PROP.contains(BOT, universe)
        assert TOP_PROP.basis(universe).terms == [BOT]

    def test_bottom_holds_only_top(self, universe):
        assert BOT_PROP.contains(TOP, universe)
        assert not BOT_PROP.contains(numeral(0), universe)
        assert BOT_PROP.basis(universe).terms == [TOP]
        assert U_PROP.falsity == BOT_PROP.falsity

    def test_empty_truth_value(self, universe):
        assert not EMPTY_PROP.contains(TOP, universe)
        assert EMPTY_PROP.basis(universe).terms == []

    def test_json_round_trip(self):
        p = Prop([Stack.seq([numeral(0), TOP])], label='A')
        again = prop_from_json(p.to_json())
        assert again.falsity == p.falsity
        assert again.label == 'A'


class TestEquality:
    def test_numeral_equality(self, universe):
        two = eq_pred('N_K', 2, 2)
        assert two.contains(numeral(2), universe)
        assert two.contains(TOP, universe)
        assert not two.contains(numeral(1), universe)
        assert not eq_pred('N_K', 1, 2).contains(numeral(1), universe)

    def test_basis_of_numeral_equality(self, universe):
        basis = eq_pred('N_K', 1, 1).basis(universe)
        assert basis.terms == [TOP, numeral(1)]
        assert basis.exact

    def test_primitive_equality(self, universe):
        assert eq_pred('N_E', 1, 1).contains(numeral(1), universe)
        assert eq_pred('N_E', 1, 1).contains(bar_I((0, 1)), universe) is False
        assert not eq_pred('N_E', 1, 1).contains(TOP, universe)
        assert not eq_pred('N_E', 0, 1).contains(TOP, universe)

    def test_leibniz_equality(self, universe):
        assert eq_pred('E', 3, 3).contains(BOT, universe)
        assert not eq_pred('E', 3, 4).contains(TOP, universe)

    def test_bad_kinds(self):
        with pytest.raises(ValueError):
            eq_pred('2_K', 0, 2)
        with pytest.raises(ValueError):
            eq_pred('Z', 0, 0)


class TestOrthogonality:
    def test_constants(self, universe):
        assert len(orthogonal([TOP], universe)) == len(universe.stacks())
        assert len(orthogonal([BOT], universe)) == 0

    def test_closure(self, universe):
        closed = biorth([numeral(0)], universe)
        assert closed.contains(numeral(0))
        assert closed.contains(TOP)
        assert not closed.contains(BOT)
        assert closed.bound == (3, 2)

    @given(st.sampled_from(U.component_pool()), st.sampled_from(U.component_pool()))
    @settings(deadline=None, max_examples=10)
    def test_galois_laws(self, s, t):
        smaller = orthogonal([s], U)
        larger = orthogonal([s, t], U)
        assert set(larger.stacks) <= set(smaller.stacks)
        closed = biorth([s], U)
        assert closed.contains(s)
        assert set(orthogonal(closed.members(), U).stacks) == set(smaller.stacks)

    @given(st.sampled_from(PROPS), st.sampled_from(PROPS), st.sampled_from(U.cliques()))
    @settings(deadline=None, max_examples=40)
    def test_forall_is_intersection(self, a, b, t):
        both = forall_prop([a, b])
        assert both.contains(t, U) == (a.contains(t, U) and b.contains(t, U))


class TestRealizers:
    def test_identity_realizes_every_implication_to_itself(self, universe):
        for a in [eq_pred('N_K', 1, 1), BOT_PROP] + PROPS[:3]:
            assert check_realizer(identity(), implies(a, a, universe), universe).ok

    def test_refutation_carries_the_stack(self, universe):
        verdict = check_realizer(numeral(0), BOT_PROP, universe)
        assert verdict.refutes
        assert verdict.counterexample == BOTTOM_STACK

    def test_double_negation_both_ways(self, universe):
        eta = interpret(lam('x', 'p', app(Var('p'), Var('x'))), u=universe)
        for a in sample_props(20, seed=0):
            closure = j_U(a, universe)
            assert check_realizer(eta, implies(a, closure, universe), universe).ok
            assert check_realizer(cc(), implies(closure, a, universe), universe).ok

    def test_numeral_equalities(self, universe):
        results = check_NK_realizers(universe)
        assert len(results) == 32
        assert all(v.ok for v in results.values())

    def test_exchange_term(self, small_universe):
        assert check_exchange_equations(exchange_term(), small_universe) == []

    def test_closure_constants(self, universe):
        assert all(failures == [] for failures in check_jU_constants(universe).values())
