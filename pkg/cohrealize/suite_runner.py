"""
Property suites over a bounded universe.

Every check is registered under a dotted id (`suite.name`) together with the law it
verifies. `run_suite` runs the checks of one suite (or all of them) on a thread pool
and assembles a report sorted by check id, so the JSON output is byte-stable.
"""
from __future__ import annotations
import itertools, random, time, concurrent.futures
from typing import Callable, List

from .antichains import AntichainRep, antichain_meet, random_families
from .arithmetic import FIXTURE_FALSE, FIXTURE_TRUE, arith_realize, check_function_realizer, realizer_prooflike
from .bar_recursion import (
    BR_TYPE, D_TYPE, SIGMA, Arrow, FunctionalFamily, SequenceFunctional,
    br, br_functional, br_prooflike_instances, broken_instance, check_modulus, check_probes,
    dns_check, generated_instances, leastness_check, nk_instance, pl_check, recheck,
)
from .cliques import (
    BOT, BOTTOM_STACK, TOP, FiniteTerm, Process, Stack,
    apply, bar_I, cc, evaluate, fire_by_tokens, h, h_stack, identity, is_prooflike, k_of,
    numeral, prooflike_refuter, push, r_P,
)
from .errors import FalseSentence
from .parse_syntax import parse_term
from .propositions import (
    BOT_PROP, TOP_PROP, biorth, check_exchange_equations, check_NK_realizers, check_jU_constants,
    check_realizer, exchange_term, forall_prop, implies, j_U, orthogonal, sample_props,
)
from .stable_maps import check_stability, fun, interpret, por_obstruction, trace_of
from .syntax import Var, app, lam
from .token_core import coherent, enumerate_tokens, grade, in_web, is_clique, level, rank
from .types.token import Token, get_context
from .types.universe import Universe
from .types.verdicts import Outcome
from .util import canonical_json, proper_subsets
from .utils.system import Color, console, verbose
from .witnesses import countable_witness, infinity_witness

PASS = 'pass'
FAIL = 'fail'
INCONCLUSIVE = 'inconclusive'
MAX_COUNTEREXAMPLES = 10
DEFAULT_TERM_SIZE = 3


class Findings(object):
    """ What a check found: failures refute the law, inconclusive entries ran out of fuel """
    def __init__(self, detail: str = ''):
        self.failures: List[str] = []
        self.inconclusive: List[str] = []
        self.detail = detail

    def fail(self, text: str):
        self.failures.append(text)

    def expect(self, condition: bool, text: str):
        if not condition:
            self.failures.append(text)

    def extend(self, failures: List[str], prefix: str = ''):
        self.failures.extend(prefix + f for f in failures)

    def compare(self, label: str, left: str, right: str):
        """ Two outcomes that must agree; an inconclusive side is not a failure """
        if Outcome.INCONCLUSIVE in (left, right):
            self.inconclusive.append(label)
        elif left != right:
            self.failures.append(f'{label}: {left} vs {right}')


class SuiteContext(object):
    def __init__(self, universe: Universe, seed: int = 0, basis_limit: int = 4096, jobs: int = 1,
                 term_size: int = DEFAULT_TERM_SIZE):
        self.universe = universe
        self.seed = seed
        self.basis_limit = basis_limit
        self.jobs = max(1, jobs or 1)
        self.term_size = max(1, term_size)

    def terms(self) -> List[FiniteTerm]:
        """ The finite terms the laws are checked on: cliques of at most term_size tokens """
        return self.universe.cliques(self.term_size)

    def rng(self, salt: str) -> random.Random:
        return random.Random(f'{self.seed}:{salt}')

    def lower(self) -> Universe:
        """ The universe one level down, where lazy terms are scanned """
        u = self.universe
        return Universe(max(1, u.level - 1), u.width, u.fuel, u.ctx)


class SuiteCheck(object):
    def __init__(self, id: str, law: str, run: Callable[[SuiteContext], Findings]):
        self.id = id
        self.law = law
        self.run = run

    @property
    def suite(self): return self.id.split('.')[0]


class CheckResult(object):
    def __init__(self, check: SuiteCheck, status: str, detail: str, counterexamples: List[str], seconds: float):
        self.id = check.id
        self.law = check.law
        self.status = status
        self.detail = detail
        self.counterexamples = counterexamples
        self.seconds = seconds

    def to_json(self) -> dict:
        return {'id': self.id, 'law': self.law, 'status': self.status,
                'detail': self.detail, 'counterexamples': self.counterexamples}


SUITE_NAMES = ['web', 'cliques', 'control', 'props', 'arith', 'barrec']
CHECKS: List[SuiteCheck] = []


def check(id: str, law: str):
    def register(run):
        CHECKS.append(SuiteCheck(id, law, run))
        return run
    return register


def checks_for(name: str) -> List[SuiteCheck]:
    if name == 'all':
        return sorted(CHECKS, key=lambda c: c.id)
    if name not in SUITE_NAMES:
        raise ValueError(f'unknown suite {name!r}, expected one of: {", ".join(SUITE_NAMES + ["all"])}')
    return sorted((c for c in CHECKS if c.suite == name), key=lambda c: c.id)


def _outcome(t, pi, u) -> str:
    return evaluate(Process(t, pi), universe=u).outcome


######################################################################################
# web


def _naive_in_web(alpha: Token, ctx) -> bool:
    """ Direct recursion on the definition, no tables: children at each index pairwise coherent """
    for _, child in alpha.entries:
        if not _naive_in_web(child, ctx):
            return False
    for i in set(i for i, _ in alpha.entries):
        children = [c for j, c in alpha.entries if j == i]
        for b, c in itertools.combinations(children, 2):
            if not _naive_coherent(b, c, ctx):
                return False
    return True


def _naive_coherent(a: Token, b: Token, ctx) -> bool:
    return a == b or not _naive_in_web(ctx.make(set(a.entries) | set(b.entries)), ctx)


@check('web.enumerate', 'W(l,w) lists web tokens in rank order, without repeats')
def web_enumerate(ctx: SuiteContext) -> Findings:
    u = ctx.universe
    tokens = enumerate_tokens(u)
    found = Findings(f'{len(tokens)} tokens at W({u.level},{u.width})')
    found.expect(len(set(tokens)) == len(tokens), 'duplicate tokens')
    ranks = [rank(t) for t in tokens]
    found.expect(ranks == sorted(ranks), 'tokens are not in rank order')
    for t in tokens:
        found.expect(in_web(t).in_web, f'{t} is not in the web')
        found.expect(level(t) <= u.level, f'{t} has level {level(t)} > {u.level}')
        found.expect(all(i < u.width for i, _ in t.entries), f'{t} uses an index ≥ {u.width}')
    return found


@check('web.subset_closure', 'subsets of web tokens are web tokens')
def web_subset_closure(ctx: SuiteContext) -> Findings:
    found = Findings()
    g = get_context()
    for t in ctx.universe.tokens():
        for entries in proper_subsets(t.entries):
            found.expect(in_web(g.make(entries)).in_web, f'{g.make(entries)} ⊂ {t} left the web')
    return found


@check('web.incoherence', 'α incoh β iff α∪β ∈ |D|, for α ≠ β')
def web_incoherence(ctx: SuiteContext) -> Findings:
    found = Findings()
    g = get_context()
    tokens = ctx.universe.tokens()
    pairs = 0
    for a, b in itertools.combinations(tokens, 2):
        pairs += 1
        united = _naive_in_web(g.make(set(a.entries) | set(b.entries)), g)
        found.expect(united == (not coherent(a, b)), f'{a}, {b}')
    found.detail = f'{pairs} pairs'
    return found


@check('web.coherence', 'α coh β iff (α∪β ∈ |D| implies α = β)')
def web_coherence(ctx: SuiteContext) -> Findings:
    found = Findings()
    g = get_context()
    tokens = ctx.universe.tokens()
    for a in tokens:
        for b in tokens:
            found.expect(coherent(a, b) == _naive_coherent(a, b, g), f'{a}, {b}')
    return found


@check('web.levels', 'W(l-1,w) ⊆ W(l,w) and W(l,w-1) ⊆ W(l,w)')
def web_levels(ctx: SuiteContext) -> Findings:
    u = ctx.universe
    found = Findings()
    mine = set(u.tokens())
    for smaller in (Universe(u.level - 1, u.width), Universe(u.level, u.width - 1)):
        missing = [t for t in smaller.tokens() if t not in mine]
        found.extend([str(t) for t in missing], f'in W({smaller.level},{smaller.width}) only: ')
    return found


@check('web.grades', 'grade is 0 or 1 and survives a JSON round trip')
def web_grades(ctx: SuiteContext) -> Findings:
    found = Findings()
    g = get_context()
    zeros = 0
    for t in ctx.universe.tokens():
        found.expect(grade(t) in (0, 1), f'{t} has grade {grade(t)}')
        again = g.from_json(t.to_json())
        found.expect(again is t and grade(again) == grade(t), f'{t} changed after a round trip')
        zeros += grade(t) == 0
    found.detail = f'{zeros} tokens of grade 0'
    return found


######################################################################################
# cliques


@check('cliques.numerals', 'n̄ ⋆ s̄ = ⊤ iff s_n = ⊤_D')
def cliques_numerals(ctx: SuiteContext) -> Findings:
    u = ctx.universe
    found = Findings()
    pool = u.component_pool()
    stacks = [Stack.seq(items) for length in range(4) for items in itertools.product(pool, repeat=length)]
    for n in range(4):
        for s in stacks:
            expected = Outcome.TOP if s.component(n) == TOP else Outcome.BOT
            found.compare(f'{n}̄ ⋆ {s}', _outcome(numeral(n), s, u), expected)
    found.detail = f'{4 * len(stacks)} processes'
    return found


@check('cliques.adjunction', '(ts) ⋆ π = t ⋆ s.π')
def cliques_adjunction(ctx: SuiteContext) -> Findings:
    u = ctx.universe
    found = Findings()
    for t in ctx.terms():
        for s in u.component_pool():
            ts = apply(t, s, u)
            for pi in u.stacks():
                found.compare(f'({t} {s}) ⋆ {pi}', _outcome(ts, pi, u), _outcome(t, push(s, pi), u))
    return found


@check('cliques.seq_ideal', 'a sequence stack and its ideal form fire the same terms')
def cliques_seq_ideal(ctx: SuiteContext) -> Findings:
    u = ctx.universe
    found = Findings()
    empty = get_context().empty
    for pi in u.stacks():
        ideal = pi.to_ideal()
        found.expect(ideal.contains(empty) is True, f'∅ ∉ {ideal}')
        for t in ctx.terms():
            found.compare(f'{t} ⋆ {pi}', _outcome(t, pi, u), _outcome(t, ideal, u))
    return found


@check('cliques.stability', 'application is stable: t(x ⊓ y) = tx ⊓ ty for compatible x, y')
def cliques_stability(ctx: SuiteContext) -> Findings:
    u = ctx.universe
    found = Findings()
    rng = ctx.rng('stability')
    cliques = ctx.terms()
    pool = u.component_pool()
    compatible = [(x, y) for x, y in itertools.combinations(pool, 2) if is_clique(x.token_set | y.token_set)]
    samples = 0
    for _ in range(200):
        f = rng.choice(cliques)
        x, y = rng.choice(compatible)
        samples += 1
        found.expect(check_stability(f, x, y, u), f'{f} on {x}, {y}')
    found.detail = f'{samples} samples'
    return found


@check('cliques.identity', 'i t = t')
def cliques_identity(ctx: SuiteContext) -> Findings:
    u = ctx.universe
    found = Findings()
    for t in ctx.terms():
        found.expect(frozenset(apply(identity(), t, u).tokens(u)) == t.token_set, f'i {t} ≠ {t}')
    return found


@check('cliques.prooflike', '⊤_D ∉ P while numerals, i, cc and Ī are in P')
def cliques_prooflike(ctx: SuiteContext) -> Findings:
    u = ctx.universe
    found = Findings()
    found.expect(is_prooflike(TOP).no, '⊤_D is proof-like')
    found.expect(is_prooflike(BOT).yes, '⊥_D is not proof-like')
    for n in range(4):
        found.expect(is_prooflike(numeral(n)).yes, f'{n}̄ is not proof-like')
    found.expect(is_prooflike(bar_I((0, 1))).yes, '{0,1}‾ is not proof-like')
    for name, t in (('i', identity()), ('cc', cc())):
        verdict = is_prooflike(t, u)
        if verdict.status == verdict.INCONCLUSIVE:
            found.inconclusive.append(name)
        found.expect(not verdict.no, f'{name} holds the grade-0 token {verdict.witness}')
    return found


@check('cliques.pitts', 'terms of P never fire on stacks of P^ω')
def cliques_pitts(ctx: SuiteContext) -> Findings:
    u = ctx.universe
    found = Findings()
    stacks = u.prooflike_stacks()
    for t in ctx.terms():
        if is_prooflike(t).yes:
            for pi in stacks:
                found.expect(not evaluate(Process(t, pi), universe=u).top, f'{t} fires on {pi}')
        else:
            pi = prooflike_refuter(t)
            found.expect(pi is not None and pi.is_prooflike(), f'{t} has no proof-like refuter')
            if pi is not None:
                found.expect(evaluate(Process(t, pi), universe=u).top, f'{t} does not fire on its refuter {pi}')
    found.detail = f'{len(stacks)} proof-like stacks'
    return found


@check('cliques.application', 'P is closed under application')
def cliques_application(ctx: SuiteContext) -> Findings:
    u = ctx.universe
    found = Findings()
    terms = [t for t in u.cliques() if is_prooflike(t).yes]
    args = [s for s in u.component_pool() if is_prooflike(s).yes]
    for t in terms:
        for s in args:
            ts = apply(t, s, u)
            found.expect(is_prooflike(ts).yes, f'{t} {s} left P')
    return found


@check('cliques.retractions', 'r_P keeps the grade-1 tokens and h_n t(s̄) = t(h_{n-1}(s_i))')
def cliques_retractions(ctx: SuiteContext) -> Findings:
    u = ctx.universe
    found = Findings()
    found.expect(r_P(TOP) == BOT, 'r_P(⊤_D) ≠ ⊥_D')
    for t in ctx.terms():
        kept = r_P(t)
        found.expect(kept.token_set <= t.token_set, f'r_P({t}) ⊄ {t}')
        found.expect(is_prooflike(kept).yes, f'r_P({t}) ∉ P')
        found.expect((kept == t) == is_prooflike(t).yes, f'r_P({t}) = {t} disagrees with t ∈ P')
        for n in range(1, u.level + 1):
            filtered = h(n, t)
            for pi in u.stacks():
                found.compare(f'h{n}({t}) ⋆ {pi}', _outcome(filtered, pi, u), _outcome(t, h_stack(n, pi), u))
    return found


######################################################################################
# control


@check('control.k_law', 'k_π ⋆ t.ρ = t ⋆ π')
def control_k_law(ctx: SuiteContext) -> Findings:
    u = ctx.universe
    found = Findings()
    stacks = u.stacks()
    for pi in stacks:
        k = k_of(pi)
        for t in ctx.terms():
            expected = _outcome(t, pi, u)
            for rho in (BOTTOM_STACK, stacks[-1]):
                label = f'k ⋆ {t}.{rho} with π = {pi}'
                found.compare(label, fire_by_tokens(k, push(t, rho), u).outcome, expected)
                found.compare(label, _outcome(k, push(t, rho), u), expected)
    return found


@check('control.cc_law', 'cc ⋆ t.π = t ⋆ k_π.π')
def control_cc_law(ctx: SuiteContext) -> Findings:
    u = ctx.universe
    found = Findings()
    for pi in u.stacks():
        reified = push(k_of(pi), pi)
        for t in ctx.terms():
            expected = _outcome(t, reified, u)
            found.compare(f'cc ⋆ {t}.{pi}', fire_by_tokens(cc(), push(t, pi), u).outcome, expected)
            found.compare(f'cc ⋆ {t}.{pi} (machine)', _outcome(cc(), push(t, pi), u), expected)
    return found


@check('control.identity_law', 'i ⋆ t.π = t ⋆ π')
def control_identity_law(ctx: SuiteContext) -> Findings:
    u = ctx.universe
    found = Findings()
    for pi in u.stacks():
        for t in ctx.terms():
            found.compare(f'i ⋆ {t}.{pi}', fire_by_tokens(identity(), push(t, pi), u).outcome, _outcome(t, pi, u))
    return found


@check('control.cc_grade', 'every enumerated cc token has grade 1')
def control_cc_grade(ctx: SuiteContext) -> Findings:
    u = ctx.universe
    found = Findings()
    tokens = cc().tokens(u)
    for alpha in tokens:
        found.expect(grade(alpha) == 1, f'{alpha} has grade 0')
    found.detail = f'{len(tokens)} cc tokens'
    return found


@check('control.por', 'no stable f has f⊤⊥ = ⊤_D = f⊥⊤ without f⊥⊥ = ⊤_D, and none of them is in P')
def control_por(ctx: SuiteContext) -> Findings:
    report = por_obstruction(ctx.universe)
    found = Findings(f'{report.scanned} terms scanned, premise holds for {len(report.premise_holds)}')
    found.extend([f'{f}: {reason}' for f, reason in report.counterexamples])
    return found


LAMBDA_FIXTURES = [
    '(lam x x)',
    '(lam x y x)',
    '(lam x y y)',
    '(lam x p (app p x))',
    '(lam f x (app f x))',
    '(lam f x (app f (app f x)))',
]


@check('control.lambda_prooflike', 'closed pure λ-terms are proof-like')
def control_lambda_prooflike(ctx: SuiteContext) -> Findings:
    lower = ctx.lower()
    found = Findings(f'{len(LAMBDA_FIXTURES)} fixtures at W({lower.level},{lower.width})')
    for text in LAMBDA_FIXTURES:
        verdict = is_prooflike(interpret(parse_term(text), u=lower), lower)
        if verdict.status == verdict.INCONCLUSIVE:
            found.inconclusive.append(text)
        found.expect(not verdict.no, f'{text} holds the grade-0 token {verdict.witness}')
    return found


@check('control.trace', 'fun(trace(t)) = t for finite t')
def control_trace(ctx: SuiteContext) -> Findings:
    u = ctx.universe
    found = Findings()
    rng = ctx.rng('trace')
    cliques = ctx.terms()
    sample = [cliques[0]] + rng.sample(cliques, min(20, len(cliques)))
    for t in sample:
        rebuilt = fun(trace_of(lambda a, t=t: apply(t, a, u), u))
        found.expect(rebuilt == t, f'fun(trace({t})) = {rebuilt}')
    found.detail = f'{len(sample)} terms'
    return found


######################################################################################
# props


@check('props.galois', 'S ⊆ S^⊥⊥, ⊥ is antitone and S^⊥⊥⊥ = S^⊥')
def props_galois(ctx: SuiteContext) -> Findings:
    u = ctx.universe
    found = Findings()
    rng = ctx.rng('galois')
    pool = u.component_pool()
    for _ in range(10):
        small = rng.sample(pool, min(2, len(pool)))
        large = small + [rng.choice(pool)]
        closed = biorth(small, u)
        for t in small:
            found.expect(closed.contains(t), f'{t} ∉ {{{", ".join(map(str, small))}}}^⊥⊥')
        found.expect(set(orthogonal(large, u).stacks) <= set(closed.orthogonal.stacks), 'orthogonal is not antitone')
        again = orthogonal(closed.members(), u)
        found.expect(set(again.stacks) == set(closed.orthogonal.stacks), 'S^⊥⊥⊥ ≠ S^⊥')
    found.expect(len(orthogonal([TOP], u).stacks) == len(u.stacks()), '⊤_D does not fire everywhere')
    found.expect(not orthogonal([BOT], u).stacks, '⊥_D fires somewhere')
    found.expect(BOT_PROP.basis(u).terms == [TOP], 'basis(⊥) ≠ {⊤_D}')
    found.expect(TOP_PROP.basis(u).terms == [BOT], 'basis(⊤) ≠ {⊥_D}')
    return found


@check('props.forall', '∀ is intersection')
def props_forall(ctx: SuiteContext) -> Findings:
    u = ctx.universe
    found = Findings()
    props = sample_props(6, ctx.seed)
    for a, b in zip(props[::2], props[1::2]):
        both = forall_prop([a, b])
        for t in ctx.terms():
            found.expect(both.contains(t, u) == (a.contains(t, u) and b.contains(t, u)), f'{t} in {a} ∩ {b}')
    return found


@check('props.double_negation', 'η ⊩ A → j_U(A) and cc ⊩ j_U(A) → A')
def props_double_negation(ctx: SuiteContext) -> Findings:
    u = ctx.universe
    eta = interpret(lam('x', 'p', app(Var('p'), Var('x'))), u=u)
    props = sample_props(20, ctx.seed)
    found = Findings(f'{len(props)} props')
    for a in props:
        closure = j_U(a, u, ctx.basis_limit)
        for name, t, prop in (('η', eta, implies(a, closure, u, ctx.basis_limit)),
                              ('cc', cc(), implies(closure, a, u, ctx.basis_limit))):
            verdict = check_realizer(t, prop, u)
            if verdict.status == verdict.INCONCLUSIVE:
                found.inconclusive.append(f'{name} for {a}')
            elif not verdict.ok:
                found.fail(f'{name} for {a}: {verdict}')
    return found


@check('props.nk', 'cc ⊩ j_U(n ∼_E m) → n ∼_K m and e ⊩ n ∼_K m → j_U(n ∼_E m)')
def props_nk(ctx: SuiteContext) -> Findings:
    u = ctx.universe
    found = Findings()
    for label, verdict in check_NK_realizers(u).items():
        if verdict.status == verdict.INCONCLUSIVE:
            found.inconclusive.append(label)
        elif not verdict.ok:
            found.fail(f'{label}: {verdict}')
    found.extend(check_exchange_equations(exchange_term(), u))
    return found


@check('props.jU', 'j_U(∅) = {⊤_D}, j_U(D) = {⊤_D} ∪ ↑0̄ and j_U(U) ∩ P = ∅')
def props_jU(ctx: SuiteContext) -> Findings:
    found = Findings()
    for label, failures in check_jU_constants(ctx.universe).items():
        found.extend(failures, f'{label}: ')
    return found


@check('props.antichains', 'meets of antichains are antichains of the up-set intersection, idempotent, commutative and associative')
def props_antichains(ctx: SuiteContext) -> Findings:
    u = ctx.universe
    pool = u.cliques()
    families = random_families(100, ctx.seed, pool)
    found = Findings(f'{len(families)} families')
    points = [t.token_set for t in pool]
    for index, family in enumerate(families):
        meet = antichain_meet(family)
        found.extend(meet.violations(), f'family {index}: ')
        for p in points:
            expected = all(a.upset_contains(p) for a in family)
            found.expect(meet.upset_contains(p) == expected, f'family {index}: {sorted(map(str, p))}')
        a = family[0]
        found.expect(antichain_meet([a, a]) == a, f'family {index}: not idempotent')
        if len(family) >= 2:
            b = family[1]
            found.expect(antichain_meet([a, b]) == antichain_meet([b, a]), f'family {index}: not commutative')
        if len(family) >= 3:
            b, c = family[1], family[2]
            found.expect(antichain_meet([antichain_meet([a, b]), c]) == antichain_meet([a, antichain_meet([b, c])]),
                         f'family {index}: not associative')
    found.expect(antichain_meet([]) == AntichainRep.everything(), 'the empty meet is not ↑{∅}')
    return found


@check('props.infinity', 't∞ ⊤_D = ⊤_D, t∞ Ī = 0̄ and t∞ realizes both conditions')
def props_infinity(ctx: SuiteContext) -> Findings:
    _, report = infinity_witness(ctx.universe)
    found = Findings(f'{len(report.checks)} checks')
    found.extend(report.failures())
    return found


@check('props.countable', 'a countable family yields a proof-like member or a proof-like refutation')
def props_countable(ctx: SuiteContext) -> Findings:
    u = ctx.universe
    found = Findings()
    refuted = countable_witness([TOP], u)
    found.expect(refuted.verdict.refutes, f'[⊤_D]: {refuted.verdict}')
    found.extend(refuted.report.failures(), '[⊤_D]: ')
    chain = [TOP, bar_I((0,)), bar_I((0, 1))]
    realized = countable_witness(chain, u)
    found.expect(realized.verdict.ok, f'chain: {realized.verdict}')
    found.extend(realized.report.failures(), 'chain: ')
    return found


######################################################################################
# arith


@check('arith.true', 'true bounded sentences get verified proof-like realizers')
def arith_true(ctx: SuiteContext) -> Findings:
    u = ctx.universe
    found = Findings(f'{len(FIXTURE_TRUE)} sentences')
    for text in FIXTURE_TRUE:
        t, verdict = arith_realize(text, u, ctx.basis_limit)
        if verdict.status == verdict.INCONCLUSIVE:
            found.inconclusive.append(text)
        elif not verdict.ok:
            found.fail(f'{text}: {verdict}')
        prooflike = realizer_prooflike(t, u)
        found.expect(not prooflike.no, f'{text}: realizer holds {prooflike.witness}')
    return found


@check('arith.false', 'false sentences are refused')
def arith_false(ctx: SuiteContext) -> Findings:
    found = Findings(f'{len(FIXTURE_FALSE)} sentences')
    for text in FIXTURE_FALSE:
        try:
            arith_realize(text, ctx.universe, ctx.basis_limit)
            found.fail(f'{text} was realized')
        except FalseSentence:
            pass
    return found


@check('arith.functions', 't_f n̄ = f(n)‾ for the function constants')
def arith_functions(ctx: SuiteContext) -> Findings:
    found = Findings('S, double, square up to 3')
    for name in ('S', 'double', 'square'):
        found.extend(check_function_realizer(name, 3, ctx.universe), f'{name}: ')
    return found


######################################################################################
# barrec


@check('barrec.constant', 'a constant ⊤ functional bars the root at stage 1')
def barrec_constant(ctx: SuiteContext) -> Findings:
    result = br(SequenceFunctional.constant(True), FunctionalFamily(), u=ctx.universe)
    found = Findings(str(result))
    found.expect(result.top, f'root is {result.outcome}')
    found.expect(result.stage == 1, f'root reached ⊤ at stage {result.stage}')
    return found


@check('barrec.instance', 'BR on the constructed instance is ⊤, a fixpoint, least and monotone')
def barrec_instance(ctx: SuiteContext) -> Findings:
    u = ctx.universe
    instance = nk_instance()
    result = br(instance.Y, instance.G, u=u)
    found = Findings(str(result))
    found.expect(result.top, f'root is {result.outcome}')
    found.extend(recheck(result, instance.Y, instance.G), 'fixpoint: ')
    found.extend(leastness_check(result, instance.Y, instance.G), 'leastness: ')
    found.expect(result.is_monotone(), 'stages are not monotone')
    report = dns_check(instance.B, instance.G, instance.Y, u)
    found.expect(report.top, f'DNS: {report.verdict}')
    return found


@check('barrec.modulus', 'values of Y and G depend on their modulus and probes only')
def barrec_modulus(ctx: SuiteContext) -> Findings:
    u = ctx.universe
    instance = nk_instance()
    pool = u.component_pool()
    found = Findings('100 samples')
    found.extend(check_modulus(instance.Y, pool, 100, ctx.seed), 'Y: ')
    for index, g in enumerate(instance.G.prefix):
        found.extend(check_probes(g, pool, 50, ctx.seed), f'G{index}: ')
    return found


@check('barrec.family', 'DNS holds on every generated instance')
def barrec_family(ctx: SuiteContext) -> Findings:
    u = ctx.universe
    instances = generated_instances(10, ctx.seed, u)
    found = Findings(f'{len(instances)} instances')
    for instance in instances:
        report = instance.check(u)
        if report.verdict.status == report.verdict.INCONCLUSIVE:
            found.inconclusive.append(instance.name)
        elif not report.top:
            found.fail(f'{instance.name}: {report.verdict}')
    return found


@check('barrec.broken', 'a family violating its hypothesis is refuted')
def barrec_broken(ctx: SuiteContext) -> Findings:
    instance = broken_instance()
    report = instance.check(ctx.universe)
    found = Findings(str(report.verdict))
    found.expect(report.verdict.refutes, f'{instance.name}: {report.verdict}')
    return found


@check('barrec.prooflike', 'BR and its PL-typed arguments are proof-like')
def barrec_prooflike(ctx: SuiteContext) -> Findings:
    u = ctx.universe
    found = Findings()
    found.extend(br_prooflike_instances(u))
    found.expect(pl_check(br_functional(u), BR_TYPE, u), 'BR is not proof-like at its type')
    found.expect(pl_check(False, SIGMA, u), '⊥ is not proof-like in Σ')
    found.expect(not pl_check(True, SIGMA, u), '⊤ is proof-like in Σ')
    found.expect(pl_check(numeral(3), D_TYPE, u), '3̄ is not proof-like in D')
    found.expect(not pl_check(lambda x: True, Arrow(D_TYPE, SIGMA), u), 'the constant ⊤ map is proof-like')
    return found


######################################################################################


class SuiteReport(object):
    def __init__(self, name: str, universe: Universe, seed: int, results: List[CheckResult]):
        self.name = name
        self.universe = universe
        self.seed = seed
        self.results = sorted(results, key=lambda r: r.id)

    def count(self, status: str) -> int:
        return sum(1 for r in self.results if r.status == status)

    @property
    def exit_code(self) -> int:
        if self.count(FAIL):
            return 1
        if self.count(INCONCLUSIVE):
            return 3
        return 0

    def to_json(self) -> dict:
        u = self.universe
        return {
            'suite': self.name,
            'universe': {'level': u.level, 'width': u.width, 'fuel': u.fuel},
            'seed': self.seed,
            'checks': [r.to_json() for r in self.results],
            'summary': {PASS: self.count(PASS), FAIL: self.count(FAIL), INCONCLUSIVE: self.count(INCONCLUSIVE)},
        }

    def to_text(self) -> str:
        return canonical_json(self.to_json())

    def print_text(self):
        colors = {PASS: Color.GREEN, FAIL: Color.RED, INCONCLUSIVE: Color.YELLOW}
        console(f'========= suite {self.name} at {self.universe} =========')
        for r in self.results:
            console(f'  {r.id: <28} {r.status: <12} {r.detail}', color=colors[r.status])
            verbose(f'      {r.law} ({r.seconds:.2f}s)')
            for example in r.counterexamples:
                console(f'      {example}', color=colors[r.status])
        console(f'  {self.count(PASS)} passed, {self.count(FAIL)} failed, {self.count(INCONCLUSIVE)} inconclusive')


def run_check(c: SuiteCheck, ctx: SuiteContext) -> CheckResult:
    verbose(f'  running {c.id}')
    start = time.time()
    try:
        found = c.run(ctx)
    except Exception as e:
        found = Findings()
        found.fail(f'{type(e).__name__}: {e}')
    seconds = time.time() - start
    if found.failures:
        status, examples = FAIL, found.failures
    elif found.inconclusive:
        status, examples = INCONCLUSIVE, found.inconclusive
    else:
        status, examples = PASS, []
    return CheckResult(c, status, found.detail, examples[:MAX_COUNTEREXAMPLES], seconds)


def run_suite(name: str, ctx: SuiteContext) -> SuiteReport:
    checks = checks_for(name)
    ctx.universe.warm()
    ctx.universe.component_pool()
    ctx.terms()
    if ctx.jobs == 1:
        results = [run_check(c, ctx) for c in checks]
    else:
        with concurrent.futures.ThreadPoolExecutor(max_workers=ctx.jobs) as e:
            futures = [e.submit(run_check, c, ctx) for c in checks]
            results = [f.result() for f in futures]
    return SuiteReport(name, ctx.universe, ctx.seed, results)
