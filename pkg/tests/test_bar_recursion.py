import json
import pytest

from cohrealize.bar_recursion import (
    BR_TYPE, D_TYPE, SIGMA, Arrow, FunctionalFamily, ProbeFunctional, SequenceFunctional, TermSequence,
    br, br_functional, br_prooflike_instances, broken_instance, check_modulus, check_probes,
    generated_instances, leastness_check, load_instance, nk_instance, pl_check, recheck,
)
from cohrealize.cliques import BOT, TOP, numeral
from cohrealize.errors import IllPosedInput, ParseError
from cohrealize.types.verdicts import Outcome


class TestBarRecursion:
    def test_constant_top_bars_the_root(self, universe):
        result = br(SequenceFunctional.constant(True), FunctionalFamily(), u=universe)
        assert result.top
        assert result.stage == 1
        assert result.table == {(): True}

    def test_constant_bottom(self, universe):
        result = br(SequenceFunctional.constant(False), FunctionalFamily(), u=universe)
        assert result.outcome == Outcome.BOT
        assert result.value is False

    def test_instance(self, universe):
        instance = nk_instance()
        result = br(instance.Y, instance.G, u=universe)
        assert result.top
        assert result.stage == 5
        assert set(result.table) == {(), (numeral(0),), (numeral(0), numeral(1))}
        assert recheck(result, instance.Y, instance.G) == []
        assert leastness_check(result, instance.Y, instance.G) == []
        assert result.is_monotone()

    def test_fuel_runs_out(self, universe):
        instance = nk_instance()
        result = br(instance.Y, instance.G, fuel=2, u=universe)
        assert result.outcome == Outcome.INCONCLUSIVE
        assert result.value is None

    def test_table_functional(self):
        Y = SequenceFunctional.from_table([[numeral(0), TOP]], 2)
        assert Y(TermSequence([numeral(0)], TOP))
        assert not Y(TermSequence([numeral(0)], BOT))
        with pytest.raises(IllPosedInput):
            SequenceFunctional.from_table([[TOP, TOP, TOP]], 2)
        with pytest.raises(IllPosedInput):
            ProbeFunctional.from_table([numeral(0)], [[1]])

    def test_modulus_and_probes(self, universe):
        instance = nk_instance()
        pool = universe.component_pool()
        assert check_modulus(instance.Y, pool, 30) == []
        for g in instance.G.prefix:
            assert check_probes(g, pool, 20) == []


class TestDoubleNegationShift:
    def test_instance_holds(self, universe):
        report = nk_instance().check(universe)
        assert report.top
        assert report.hypothesis_failures == []

    def test_broken_instance_is_refuted(self, universe):
        report = broken_instance().check(universe)
        assert report.verdict.refutes
        assert report.hypothesis_failures

    def test_generated_instances(self, universe):
        for instance in generated_instances(4, seed=1, u=universe):
            assert not instance.check(universe).verdict.refutes

    def test_load_instance(self, universe, tmp_path):
        path = tmp_path / 'instance.json'
        path.write_text(json.dumps(nk_instance().to_json()))
        instance = load_instance(str(path))
        assert instance.N == 2
        assert instance.check(universe).top

    def test_bad_instances(self, tmp_path):
        path = tmp_path / 'bad.json'
        path.write_text('{"N": 1,')
        with pytest.raises(ParseError):
            load_instance(str(path))
        path.write_text('{"N": 1, "B": []}')
        with pytest.raises(IllPosedInput):
            load_instance(str(path))


class TestProoflikeness:
    def test_base_types(self, universe):
        assert pl_check(False, SIGMA, universe)
        assert not pl_check(True, SIGMA, universe)
        assert pl_check(numeral(3), D_TYPE, universe)
        assert not pl_check(TOP, D_TYPE, universe)

    def test_arrow(self, universe):
        assert not pl_check(lambda x: True, Arrow(D_TYPE, SIGMA), universe)
        assert pl_check(lambda x: False, Arrow(D_TYPE, SIGMA), universe)

    def test_bar_recursion_is_prooflike(self, universe):
        assert br_prooflike_instances(universe) == []
        assert pl_check(br_functional(universe), BR_TYPE, universe)
