import pytest

from cohrealize.suite_runner import (
    CHECKS, DEFAULT_TERM_SIZE, FAIL, INCONCLUSIVE, PASS, SUITE_NAMES,
    CheckResult, Findings, SuiteCheck, SuiteContext, SuiteReport, checks_for, run_check, run_suite,
)
from cohrealize.types.verdicts import Outcome


def _result(id: str, status: str) -> CheckResult:
    return CheckResult(SuiteCheck(id, 'law', lambda ctx: Findings()), status, '', [], 0.0)


class TestRegistry:
    def test_every_suite_has_checks(self):
        for name in SUITE_NAMES:
            assert checks_for(name)
        assert len(checks_for('all')) == len(CHECKS)
        assert len({c.id for c in CHECKS}) == len(CHECKS)

    def test_checks_are_sorted(self):
        ids = [c.id for c in checks_for('all')]
        assert ids == sorted(ids)

    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            checks_for('nope')


class TestFindings:
    def test_compare(self):
        found = Findings()
        found.compare('same', Outcome.TOP, Outcome.TOP)
        found.compare('unknown', Outcome.TOP, Outcome.INCONCLUSIVE)
        found.compare('different', Outcome.TOP, Outcome.BOT)
        assert found.inconclusive == ['unknown']
        assert found.failures == ['different: Top vs Bot']

    def test_exceptions_become_failures(self, small_universe):
        boom = SuiteCheck('web.boom', 'never holds', lambda ctx: 1 // 0)
        result = run_check(boom, SuiteContext(small_universe))
        assert result.status == FAIL
        assert result.counterexamples[0].startswith('ZeroDivisionError')

    def test_inconclusive_status(self, small_universe):
        def run(ctx):
            found = Findings()
            found.inconclusive.append('out of fuel')
            return found
        result = run_check(SuiteCheck('web.fuel', 'law', run), SuiteContext(small_universe))
        assert result.status == INCONCLUSIVE
        assert result.counterexamples == ['out of fuel']


class TestReport:
    def test_exit_codes(self, small_universe):
        assert SuiteReport('web', small_universe, 0, [_result('a', PASS)]).exit_code == 0
        assert SuiteReport('web', small_universe, 0, [_result('a', PASS), _result('b', INCONCLUSIVE)]).exit_code == 3
        assert SuiteReport('web', small_universe, 0, [_result('a', INCONCLUSIVE), _result('b', FAIL)]).exit_code == 1

    def test_report_json(self, small_universe):
        report = SuiteReport('web', small_universe, 7, [_result('b', PASS), _result('a', FAIL)])
        data = report.to_json()
        assert [c['id'] for c in data['checks']] == ['a', 'b']
        assert data['universe'] == {'level': 2, 'width': 2, 'fuel': small_universe.fuel}
        assert data['seed'] == 7
        assert data['summary'] == {PASS: 1, FAIL: 1, INCONCLUSIVE: 0}


class TestSuites:
    def test_web_suite_on_the_small_universe(self, small_universe):
        report = run_suite('web', SuiteContext(small_universe, jobs=1))
        assert report.count(FAIL) == 0
        assert [r.id for r in report.results] == [c.id for c in checks_for('web')]
        enumerate_check = next(r for r in report.results if r.id == 'web.enumerate')
        assert enumerate_check.detail == '4 tokens at W(2,2)'

    def test_workers_do_not_change_the_report(self, small_universe):
        sequential = run_suite('web', SuiteContext(small_universe, seed=1, jobs=1))
        parallel = run_suite('web', SuiteContext(small_universe, seed=1, jobs=4))
        assert sequential.to_text() == parallel.to_text()

    def test_control_laws_hold_on_the_small_universe(self, small_universe):
        report = run_suite('control', SuiteContext(small_universe, jobs=1))
        failed = [(r.id, r.counterexamples) for r in report.results if r.status == FAIL]
        assert failed == []


class TestTermSize:
    def test_terms_default_to_three_tokens(self, universe):
        ctx = SuiteContext(universe)
        assert ctx.term_size == DEFAULT_TERM_SIZE == 3
        assert ctx.terms() == universe.cliques(3)
        assert max(len(t.tokens()) for t in ctx.terms()) == 3
        assert len(ctx.terms()) > len(universe.cliques())

    def test_term_size_is_configurable(self, small_universe):
        assert SuiteContext(small_universe, term_size=1).terms() == small_universe.cliques(1)
        assert SuiteContext(small_universe, term_size=0).term_size == 1
