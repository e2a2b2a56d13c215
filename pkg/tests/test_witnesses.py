import pytest

from cohrealize.cliques import BOTTOM_STACK, TOP, Process, apply, bar_I, evaluate, identity, is_prooflike, numeral
from cohrealize.errors import IllPosedInput
from cohrealize.witnesses import (
    TraceTree, countable_witness, infinity_term, infinity_witness, normalize_chain, sequence_stack,
)
from cohrealize.types.token import get_context


class TestInfinity:
    def test_values(self, universe):
        t = infinity_term()
        assert apply(t, TOP, universe) == TOP
        for indices in ((0,), (1,), (0, 1)):
            assert apply(t, bar_I(indices), universe) == numeral(0)
        assert is_prooflike(t).yes

    def test_report_passes(self, universe):
        _, report = infinity_witness(universe)
        assert report.failures() == []
        assert report.passed
        assert report.to_json()['passed'] is True


class TestCountable:
    def test_top_alone_is_refuted_by_a_prooflike_stack(self, universe):
        verdict, k, report = countable_witness([TOP], universe)
        assert verdict.refutes
        assert verdict.counterexample.is_prooflike()
        assert is_prooflike(k, universe).yes
        assert report.passed

    def test_descending_chain_gets_a_prooflike_member(self, universe):
        verdict, t, report = countable_witness([TOP, bar_I((0,)), bar_I((0, 1))], universe)
        assert verdict.ok
        assert is_prooflike(t).yes
        assert report.passed

    def test_chain_is_normalized_by_meets(self, universe):
        chain = normalize_chain([TOP, bar_I((0,)), bar_I((0, 1))])
        assert len(chain) == 3
        assert chain[0] == TOP
        for a, b in zip(chain, chain[1:]):
            for pi in universe.stacks():
                if evaluate(Process(b, pi), universe=universe).top:
                    assert evaluate(Process(a, pi), universe=universe).top

    def test_bad_chains(self, universe):
        with pytest.raises(IllPosedInput):
            countable_witness([], universe)
        with pytest.raises(IllPosedInput):
            countable_witness([identity()], universe)


class TestTraceTree:
    def test_single_level(self):
        tree = TraceTree([TOP])
        empty = get_context().empty
        assert tree.path(0, empty) == [empty]
        assert tree.surviving_leaf() == empty
        assert tree.frontier() == []

    def test_sequence_stack_holds_the_token(self):
        nu01 = get_context().make([(0, get_context().empty), (1, get_context().empty)])
        pi = sequence_stack(nu01)
        assert pi.contains(nu01) is True
        assert pi != BOTTOM_STACK
