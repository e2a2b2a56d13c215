import json
import pytest

from cohrealize.main import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestEval:
    def test_numeral_fires(self, capsys):
        code, out, _ = run(capsys, 'eval', '(num 2)', '(stack bot bot top)')
        assert code == 0
        assert 'Top' in out.splitlines()[0]

    def test_bottom_never_fires(self, capsys):
        code, out, _ = run(capsys, 'eval', 'bot', '(stack)', '--level=2')
        assert code == 0
        assert 'Bot' in out.splitlines()[0]

    def test_json(self, capsys):
        code, out, _ = run(capsys, 'eval', 'top', '(stack)', '--format', 'json')
        assert code == 0
        assert json.loads(out)['outcome'] == 'Top'

    def test_parse_errors_are_usage_errors(self, capsys):
        code, _, err = run(capsys, 'eval', '(num x)', '(stack)')
        assert code == 2
        assert 'offset 5' in err


class TestEnumerate:
    def test_level_one(self, capsys):
        code, out, _ = run(capsys, 'enumerate', 'tokens', '--level', '1', '--format', 'json')
        data = json.loads(out)
        assert code == 0
        assert data['count'] == 1
        assert data['items'] == ['[]']

    def test_level_zero_is_empty(self, capsys):
        code, out, _ = run(capsys, 'enumerate', 'tokens', '--level', '0', '--format', 'json')
        assert code == 0
        assert json.loads(out)['count'] == 0

    def test_small_web_as_text(self, capsys):
        code, out, _ = run(capsys, 'enumerate', 'tokens', '--level', '2', '--width', '2')
        assert code == 0
        assert out.splitlines()[-1] == 'count: 4'

    def test_level_zero_terms_are_refused(self, capsys):
        code, _, _ = run(capsys, 'enumerate', 'terms', '--level', '0')
        assert code == 2

    def test_report_file(self, capsys, tmp_path):
        path = tmp_path / 'tokens.json'
        code, _, _ = run(capsys, 'enumerate', 'tokens', '--level', '2', '--out', str(path))
        assert code == 0
        assert json.loads(path.read_text())['count'] == 4


class TestCommands:
    def test_web_suite(self, capsys):
        code, out, _ = run(capsys, 'suite', 'web', '--level', '2', '--width', '2', '--jobs', '1', '--format', 'json')
        assert code == 0
        data = json.loads(out)
        assert data['suite'] == 'web'
        assert data['summary']['fail'] == 0

    def test_prooflike(self, capsys):
        code, out, _ = run(capsys, 'prooflike', 'top', '--level', '2')
        assert code == 0
        assert 'No' in out

    def test_false_sentence(self, capsys):
        code, _, err = run(capsys, 'realize', '0 = 1')
        assert code == 1
        assert 'not realizable' in err

    def test_true_sentence(self, capsys):
        code, out, _ = run(capsys, 'realize', '1 + 1 = 2', '--format', 'json')
        assert code == 0
        assert json.loads(out)['verdict']['status'] == 'Realizes'

    def test_missing_instance_file(self, capsys, tmp_path):
        code, _, _ = run(capsys, 'br', str(tmp_path / 'missing.json'))
        assert code == 2


class TestUsage:
    def test_help(self, capsys):
        code, out, _ = run(capsys, '--help')
        assert code == 0
        assert 'commands:' in out

    def test_no_command(self, capsys):
        assert run(capsys)[0] == 2

    @pytest.mark.parametrize('argv', [
        ['frobnicate'],
        ['suite', 'nope'],
        ['eval', 'top'],
        ['eval', 'top', '(stack)', '--colour'],
        ['enumerate', 'tokens', '--level', 'x'],
        ['enumerate', 'tokens', '--format', 'xml'],
    ])
    def test_usage_errors(self, capsys, argv):
        assert run(capsys, *argv)[0] == 2

    def test_help_lists_every_flag(self, capsys):
        _, out, _ = run(capsys, 'help')
        for flag in ('--quiet', '--verbose', '--term-size', '--basis-limit', '--out'):
            assert flag in out


class TestBadInput:
    @pytest.mark.parametrize('argv', [
        ['eval', '(lit {"finite":[[[0,[[0,[]]]],[0,[[1,[]]]]]]})', '(stack)'],
        ['eval', '(app id (lit {"finite":[[]]}))', '(ideal [[0,[]]] [[0,[[0,[]]]]])'],
        ['eval', '(lit {"named":{"num":-1}})', '(stack)'],
        ['eval', '(k (ideal [[0,[[0,[]]]],[0,[[1,[]]]]]))', '(stack)'],
        ['eval', '(lit {"k":{"seq":[]}})', '(stack)'],
        ['prooflike', '(lit {"named":{"barI":[-1]}})'],
        ['suite', 'web', '--term-size', '0'],
    ])
    def test_reported_without_traceback(self, capsys, argv):
        code, _, err = run(capsys, *argv)
        assert code == 2
        assert 'error:' in err

    @pytest.mark.parametrize('instance', [
        {'N': 1, 'B': [{'falsity': [{'seq': []}]}], 'Y': {'modulus': 1}, 'G': []},
        {'N': 1, 'B': [{'falsity': 'none'}], 'Y': {'modulus': 1}, 'G': []},
        {'N': 0, 'B': [], 'Y': [], 'G': []},
        {'N': 0, 'B': [], 'Y': {'modulus': 'one'}, 'G': []},
        {'N': 0, 'B': [], 'Y': {'modulus': 1}, 'G': [{'probes': [], 'table': [['a']]}]},
    ])
    def test_malformed_instance_files(self, capsys, tmp_path, instance):
        path = tmp_path / 'instance.json'
        path.write_text(json.dumps(instance))
        code, _, err = run(capsys, 'br', str(path))
        assert code == 2
        assert 'error:' in err


class TestFuel:
    def test_inconclusive_eval_warns(self, capsys):
        code, out, _ = run(capsys, 'eval', 'id', '(stack top)', '--fuel', '0')
        assert code == 3
        assert 'Inconclusive' in out
        assert 'ran out of fuel' in out

    def test_json_stays_a_single_document(self, capsys):
        code, out, _ = run(capsys, 'eval', 'id', '(stack top)', '--fuel', '0', '--format', 'json')
        assert code == 3
        assert json.loads(out)['outcome'] == 'Inconclusive'

    def test_quiet(self, capsys):
        code, out, _ = run(capsys, 'eval', 'id', '(stack top)', '--fuel', '0', '-q')
        assert code == 3
        assert out == ''
