"""
Two witness constructions checked against the bounded universe:

infinity_witness    the term t with t⊤_D = ⊤_D and tĪ = 0̄ for ∅ ≠ I ⊆ {0,1}, realizing
                    the two implications behind "Δ_K(2) has no atoms"
countable_witness   for A = {t_n}^⊥⊥ given by a finite chain, either a proof-like member
                    of A built from the frontier of the trace tree, or a proof-like stack
                    of A^⊥ refuting the premise
"""
from __future__ import annotations
from typing import Dict, List, Optional, Sequence, Tuple

from .cliques import (
    BOTTOM_STACK, TOP, FiniteTerm, Process, Stack, Term,
    apply, bar_I, default_universe, evaluate, is_prooflike, k_of, meet_terms, numeral, push,
)
from .errors import IllPosedInput
from .propositions import BOT_PROP, TOP_PROP, Prop, check_realizer, forall_prop, implies, orthogonal
from .stable_maps import TraceEntry, fun
from .token_core import grade, project
from .types.token import Token, get_context
from .types.universe import Universe
from .types.verdicts import Verdict


class WitnessReport(object):
    """ Named checks with their failures; an empty failure list is a pass """
    def __init__(self):
        self.checks: Dict[str, List[str]] = dict()

    def add(self, name: str, failures: List[str]):
        self.checks.setdefault(name, []).extend(failures)

    def expect(self, name: str, condition: bool, failure: str):
        self.add(name, [] if condition else [failure])

    @property
    def passed(self): return all(not failures for failures in self.checks.values())

    def failures(self) -> List[str]:
        return [f'{name}: {f}' for name, failures in self.checks.items() for f in failures]

    def to_json(self) -> dict:
        return {'passed': self.passed, 'checks': {name: failures for name, failures in self.checks.items()}}


######################################################################################


NONEMPTY_SUBSETS_01 = ((0,), (1,), (0, 1))


def infinity_term() -> FiniteTerm:
    """ The trace {({∅}, ∅)} ∪ {(Ī, ν₀) | ∅ ≠ I ⊆ {0,1}} """
    ctx = get_context()
    entries = [TraceEntry(TOP, ctx.empty)]
    entries += [TraceEntry(bar_I(indices), ctx.nu(0)) for indices in NONEMPTY_SUBSETS_01]
    result = fun(entries)
    result.name = 't∞'
    return result


def condition_props(u: Optional[Universe] = None) -> Tuple[Prop, Prop]:
    """ (|⊤,⊥→⊥| ∩ |⊥,⊤→⊥|, |⊥,⊥→⊥|) """
    u = u or default_universe()
    top_bot = implies(TOP_PROP, implies(BOT_PROP, BOT_PROP, u), u)
    bot_top = implies(BOT_PROP, implies(TOP_PROP, BOT_PROP, u), u)
    first = forall_prop([top_bot, bot_top], label='|⊤,⊥→⊥| ∩ |⊥,⊤→⊥|')
    second = implies(BOT_PROP, implies(BOT_PROP, BOT_PROP, u), u).with_label('|⊥,⊥→⊥|')
    return first, second


def infinity_witness(u: Optional[Universe] = None) -> Tuple[FiniteTerm, WitnessReport]:
    u = u or default_universe()
    t = infinity_term()
    report = WitnessReport()
    report.expect('t⊤_D = ⊤_D', apply(t, TOP, u) == TOP, f't⊤_D = {apply(t, TOP, u)}')
    for indices in NONEMPTY_SUBSETS_01:
        bar = bar_I(indices)
        value = apply(t, bar, u)
        report.expect(f't{bar} = 0̄', value == numeral(0), f't{bar} = {value}')
    prooflike = is_prooflike(t)
    report.expect('t ∈ P', prooflike.yes, f'not proof-like: {prooflike}')

    first, second = condition_props(u)
    empty = get_context().empty
    bars = [bar_I(indices) for indices in NONEMPTY_SUBSETS_01]
    first_failures, second_failures = [], []
    for c in u.cliques():
        if first.contains(c, u) != c.contains(empty):
            first_failures.append(str(c))
        if c == TOP:
            continue
        above_bar = any(b.issubset(c) is True for b in bars)
        if second.contains(c, u) != above_bar:
            second_failures.append(str(c))
    report.add('⊤_D ⊑ c iff c ∈ |⊤,⊥→⊥| ∩ |⊥,⊤→⊥|', first_failures)
    report.add('c ⊩ ⊥,⊥→⊥ iff c ∈ ↑{Ī}', second_failures)

    for label, prop in (('t ⊩ (|⊤,⊥→⊥| ∩ |⊥,⊤→⊥|), ⊤ → ⊥', implies(first, implies(TOP_PROP, BOT_PROP, u), u)),
                        ('t ⊩ (⊥,⊥→⊥), ⊥ → ⊥', implies(second, implies(BOT_PROP, BOT_PROP, u), u))):
        verdict = check_realizer(t, prop, u)
        report.expect(label, verdict.ok, str(verdict))
    return t, report


######################################################################################


def _prooflike_sequence(alpha: Token) -> bool:
    """ The finite sequence (α_n)_n lies in P^ω iff no child of α has grade 0 """
    return grade(alpha) == 0


def sequence_stack(alpha: Token) -> Stack:
    """ The least stack whose ideal holds α: s_n = α_n """
    width = max((i + 1 for i, _ in alpha.entries), default=0)
    return Stack.seq([FiniteTerm(project(alpha, n), check=False) for n in range(width)])


class TraceTree(object):
    """
    The tree ∪_n {n} × tr(t_n) of a normalized chain: every token at depth n+1 has
    the unique token of depth n below it as its parent.
    """
    def __init__(self, chain: Sequence[FiniteTerm]):
        self.levels: List[List[Token]] = [t.tokens() for t in chain]
        self.parent: Dict[Tuple[int, Token], Optional[Token]] = dict()
        for depth, tokens in enumerate(self.levels):
            for alpha in tokens:
                if depth == 0:
                    self.parent[(0, alpha)] = None
                    continue
                below = [beta for beta in self.levels[depth - 1] if set(beta.entries) <= set(alpha.entries)]
                if len(below) != 1:
                    raise IllPosedInput(f'{alpha} at depth {depth} has {len(below)} ancestors, the chain is not descending')
                self.parent[(depth, alpha)] = below[0]

    def path(self, depth: int, alpha: Token) -> List[Token]:
        result = [alpha]
        while depth > 0:
            alpha = self.parent[(depth, alpha)]
            depth -= 1
            result.append(alpha)
        return list(reversed(result))

    def frontier(self) -> List[Token]:
        """ Nodes leaving P^ω whose ancestors all stay inside """
        found = []
        for depth, tokens in enumerate(self.levels):
            for alpha in tokens:
                path = self.path(depth, alpha)
                if not _prooflike_sequence(alpha) and all(_prooflike_sequence(b) for b in path[:-1]):
                    found.append(alpha)
        return found

    def surviving_leaf(self) -> Optional[Token]:
        """ A node of the last depth whose whole path stays in P^ω """
        depth = len(self.levels) - 1
        for alpha in self.levels[depth]:
            if all(_prooflike_sequence(b) for b in self.path(depth, alpha)):
                return alpha
        return None


def normalize_chain(chain: Sequence[FiniteTerm]) -> List[FiniteTerm]:
    """ t'_0 = t_0, t'_{n+1} = t'_n ⊓ t_{n+1}, so firing sets decrease """
    result = [chain[0]]
    for t in chain[1:]:
        result.append(meet_terms(result[-1], t))
    return result


class CountableWitness(object):
    def __init__(self, verdict: Verdict, term: Optional[Term], report: WitnessReport):
        self.verdict = verdict
        self.term = term
        self.report = report

    def __iter__(self):
        return iter((self.verdict, self.term, self.report))

    def to_json(self) -> dict:
        data = {'verdict': self.verdict.to_json(), 'report': self.report.to_json()}
        if self.term is not None:
            data['term'] = self.term.to_json()
        return data


def countable_witness(chain: Sequence[FiniteTerm], u: Optional[Universe] = None) -> CountableWitness:
    """
    Refuted(π) when a path of the trace tree never leaves P^ω, π ∈ A^⊥ ∩ P^ω, and then
    k_π ∈ P ∩ ¬A is returned as the term. Otherwise Realizes with the frontier term in A ∩ P.
    """
    u = u or default_universe()
    if not chain:
        raise IllPosedInput('countable_witness needs a nonempty chain of terms')
    if not all(t.is_finite for t in chain):
        raise IllPosedInput('countable_witness works on finite terms only')
    normalized = normalize_chain(chain)
    tree = TraceTree(normalized)
    report = WitnessReport()

    leaf = tree.surviving_leaf()
    if leaf is not None:
        pi = sequence_stack(leaf)
        k = k_of(pi)
        report.expect('π ∈ P^ω', pi.is_prooflike(), f'{pi} is not proof-like')
        prooflike = is_prooflike(k, u)
        report.expect('k_π ∈ P', prooflike.yes, f'k_π: {prooflike}')
        not_firing = [str(t) for t in chain if not evaluate(Process(t, pi), universe=u).top]
        report.add('π ∈ A^⊥', not_firing)
        not_refuting = [str(t) for t in chain if not evaluate(Process(k, push(t, BOTTOM_STACK)), universe=u).top]
        report.add('k_π ⊩ ¬A', not_refuting)
        return CountableWitness(Verdict.refuted(pi, note='A^⊥ ∩ P^ω is not empty'), k, report)

    witness = FiniteTerm(tree.frontier(), name='t_A')
    prooflike = is_prooflike(witness)
    report.expect('t ∈ P', prooflike.yes, f'not proof-like: {prooflike}')
    stacks = orthogonal(chain, u)
    missed_minimal = [str(pi) for pi in stacks.minimal if not evaluate(Process(witness, pi), universe=u).top]
    report.add('t fires on min(A^⊥)', missed_minimal)
    missed = [str(pi) for pi in stacks.stacks if not evaluate(Process(witness, pi), universe=u).top]
    report.add('t fires on A^⊥', missed)
    verdict = Verdict.realizes(exact=False, tested=len(stacks.stacks)) if report.passed \
        else Verdict.refuted(witness, len(stacks.stacks), note='frontier term failed its checks')
    return CountableWitness(verdict, witness, report)
