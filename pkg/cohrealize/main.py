#!/usr/bin/python3
import sys
from typing import List, Optional

from .utils.system import Color, Output, console, error, verbose, warning
from .util import canonical_json, token_string, write_text_to
from .errors import CliqueError, ConfigError, FalseSentence, IllPosedInput, ParseError, TokenError, UnboundVariable
from .realize_config import RealizeConfig
from .types.verdicts import Outcome, Prooflike, Verdict
from .cliques import Process, evaluate, is_prooflike
from .parse_syntax import parse_stack, parse_term
from .stable_maps import interpret
from .token_core import enumerate_tokens
from .arithmetic import arith_realize
from .bar_recursion import load_instance
from .suite_runner import SUITE_NAMES, SuiteContext, run_suite

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3


def print_title():
    console(f'========= cohrealize ==========')

def print_usage():
    console('cohrealize <command> [args...] [flags...]')
    console('  commands:')
    console('    eval TERM STACK    - run the process TERM ⋆ STACK: Top, Bot or Inconclusive')
    console('    suite NAME         - run a property suite: web cliques control props arith barrec all')
    console('    enumerate KIND     - list tokens, terms or prooflike terms of the bounded universe')
    console('    prooflike TERM     - decide whether TERM is proof-like')
    console('    realize SENTENCE   - build and check a realizer of a true bounded arithmetic sentence')
    console('    br FILE            - run a bar recursion instance file through the DNS check')
    console('    help               - shows this help list')
    console('  flags:')
    console('    --level N          - token level bound (default=3)')
    console('    --width N          - index and entry-set size bound (default=2)')
    console('    --fuel N           - step bound for every search (default=100000)')
    console('    --seed N           - seed for sampled properties (default=0)')
    console('    --format F         - text or json (default=text)')
    console('    --jobs N           - parallel suite workers (default=system.core.count)')
    console('    --basis-limit N    - cap on implication test bases (default=4096)')
    console('    --term-size N      - tokens per term checked by the suites (default=3)')
    console('    --out FILE         - also write the JSON report to FILE')
    console('    -v, --verbose      - per-check progress and timings')
    console('    -q, --quiet        - print nothing but errors')
    console('  examples:')
    console('    cohrealize eval "(num 2)" "(stack bot bot top)"     Top, 2̄ fires when s_2 = ⊤_D')
    console('    cohrealize suite web --level 2 --width 2          4 tokens, every web law checked')
    console('    cohrealize enumerate prooflike --format json      proof-like terms at W(3,2)')
    console('    cohrealize realize "forall x <= 3. x + 0 = x"      realizer and its verdict')


def _emit(config: RealizeConfig, data: dict, lines: List[str], color=None):
    """ JSON mode prints only the document, text mode prints the lines """
    text = canonical_json(data)
    if config.json:
        console(text)
    else:
        for line in lines:
            console(line, color=color)
    if config.out:
        write_text_to(config.out, text + '\n')
        verbose(f'report written to {config.out}')


def _args(config: RealizeConfig, count: int, usage: str) -> List[str]:
    if len(config.command_args) != count:
        raise ConfigError(f'usage: cohrealize {config.command} {usage}')
    return config.command_args


def _fuel_warning(config: RealizeConfig, what: str):
    if not config.json:
        warning(f'{what} ran out of fuel at --fuel {config.fuel}, a larger bound may decide it')


def cmd_eval(config: RealizeConfig) -> int:
    term_text, stack_text = _args(config, 2, 'TERM STACK')
    u = config.universe()
    t = interpret(parse_term(term_text, u), u=u)
    pi = parse_stack(stack_text, u)
    result = evaluate(Process(t, pi), universe=u)
    lines = [result.outcome]
    if result.witness is not None:
        lines.append(f'  witness: {token_string(result.witness)}')
    verbose(f'  {result.steps} steps')
    colors = {Outcome.TOP: Color.GREEN, Outcome.BOT: Color.DEFAULT, Outcome.INCONCLUSIVE: Color.YELLOW}
    _emit(config, result.to_json(), lines, colors[result.outcome])
    if result.inconclusive:
        _fuel_warning(config, 'the process')
    return EXIT_INCONCLUSIVE if result.inconclusive else EXIT_PASS


def cmd_suite(config: RealizeConfig) -> int:
    name = config.command_args[0] if config.command_args else 'all'
    if name not in SUITE_NAMES + ['all'] or len(config.command_args) > 1:
        raise ConfigError(f'usage: cohrealize suite {{{"|".join(SUITE_NAMES)}|all}}')
    ctx = SuiteContext(config.universe(), config.seed, config.basis_limit, config.jobs, config.term_size)
    verbose(f'running suite {name} with {ctx.jobs} workers')
    report = run_suite(name, ctx)
    if config.json:
        console(report.to_text())
    else:
        report.print_text()
        if report.exit_code == EXIT_INCONCLUSIVE:
            _fuel_warning(config, 'some checks')
    if config.out:
        write_text_to(config.out, report.to_text() + '\n')
    return report.exit_code


def cmd_enumerate(config: RealizeConfig) -> int:
    (kind,) = _args(config, 1, 'tokens|terms|prooflike')
    u = config.universe()
    if kind == 'tokens':
        items = [token_string(t) for t in enumerate_tokens(u)]
    elif kind in ('terms', 'prooflike'):
        terms = u.cliques()
        if kind == 'prooflike':
            terms = [t for t in terms if is_prooflike(t).yes]
        items = [canonical_json([a.to_json() for a in t.tokens()], indent=None) for t in terms]
    else:
        raise ConfigError(f'cannot enumerate {kind!r}, expected tokens, terms or prooflike')
    data = {'kind': kind, 'level': u.level, 'width': u.width, 'count': len(items), 'items': items}
    _emit(config, data, items + [f'count: {len(items)}'])
    return EXIT_PASS


def cmd_prooflike(config: RealizeConfig) -> int:
    (text,) = _args(config, 1, 'TERM')
    u = config.universe()
    verdict = is_prooflike(interpret(parse_term(text, u), u=u), u)
    color = {Prooflike.YES: Color.GREEN, Prooflike.NO: Color.RED}.get(verdict.status, Color.YELLOW)
    _emit(config, verdict.to_json(), [str(verdict)], color)
    if verdict.status == Prooflike.INCONCLUSIVE:
        _fuel_warning(config, 'the grade scan')
    return EXIT_INCONCLUSIVE if verdict.status == Prooflike.INCONCLUSIVE else EXIT_PASS


def _verdict_exit(verdict: Verdict) -> int:
    if verdict.ok:
        return EXIT_PASS
    return EXIT_FAIL if verdict.refutes else EXIT_INCONCLUSIVE


def cmd_realize(config: RealizeConfig) -> int:
    (text,) = _args(config, 1, 'SENTENCE')
    u = config.universe()
    try:
        t, verdict = arith_realize(text, u, config.basis_limit)
    except FalseSentence as e:
        error(f'not realizable: {e}')
        return EXIT_FAIL
    data = {'sentence': text, 'realizer': t.to_json(), 'verdict': verdict.to_json()}
    color = Color.GREEN if verdict.ok else Color.RED
    _emit(config, data, [f'realizer: {t}', f'verdict:  {verdict}'], color)
    return _verdict_exit(verdict)


def cmd_br(config: RealizeConfig) -> int:
    (path,) = _args(config, 1, 'FILE')
    u = config.universe()
    instance = load_instance(path)
    report = instance.check(u)
    lines = [f'{instance.name}: N = {instance.N}', f'  {report.result}' if report.result else '  br not run']
    lines += [f'  {f}' for f in report.hypothesis_failures + report.bar_failures + report.step_failures]
    lines.append(f'  verdict: {report.verdict}')
    _emit(config, report.to_json(), lines, Color.GREEN if report.top else Color.RED)
    return _verdict_exit(report.verdict)


COMMANDS = {
    'eval': cmd_eval,
    'suite': cmd_suite,
    'enumerate': cmd_enumerate,
    'prooflike': cmd_prooflike,
    'realize': cmd_realize,
    'br': cmd_br,
}


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        config = RealizeConfig(argv)
        Output.verbose = config.verbose and not config.json
        Output.quiet = config.quiet
        if config.help or config.command is None:
            print_title()
            print_usage()
            return EXIT_PASS if config.help else EXIT_USAGE
        config.validate()
        return COMMANDS[config.command](config)
    except (ConfigError, ParseError, UnboundVariable, IllPosedInput, TokenError, CliqueError) as e:
        error(f'error: {e}')
        return EXIT_USAGE
    except OSError as e:
        error(f'error: {e}')
        return EXIT_USAGE
    finally:
        Output.verbose = False
        Output.quiet = False


if __name__ == '__main__':
    sys.exit(main())
