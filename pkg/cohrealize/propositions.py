"""
Propositions of the classical realizability tripos over (D, P).

A Prop is given by falsity generators: |A| = ||A||^⊥ = {t | t ⋆ π ∈ ⊥⊥ for every generator π}.
Implication needs the minimal members of |A|; `basis` computes them exactly as
the minimal cliques hitting every generator ideal whenever those ideals are finite.
"""
from __future__ import annotations
import random
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .cliques import (
    BOT, BOTTOM_STACK, TOP, TOP_STACK, FiniteTerm, NumeralCaseTerm, Process, Stack, Term,
    apply, cc, default_universe, evaluate, fire_by_tokens, is_prooflike, numeral, push,
)
from .stable_maps import FunTerm
from .token_core import _coherent
from .types.token import Token, get_context
from .types.universe import Universe
from .types.verdicts import Outcome, Verdict
from .util import dedupe


DEFAULT_BASIS_LIMIT = 4096


class Basis(object):
    """ Minimal finite members of |A|; `exact` is False when the list is a truncation """
    def __init__(self, terms: List[FiniteTerm], exact: bool):
        self.terms = terms
        self.exact = exact

    def __iter__(self): return iter(self.terms)
    def __len__(self):  return len(self.terms)
    def __str__(self):  return '{' + ', '.join(map(str, self.terms)) + '}' + ('' if self.exact else ' (truncated)')


class Prop(object):
    """
    A biorthogonally closed predicate given by falsity generators.
    Non-closed predicates (like primitive equality on N) are given by an explicit
    finite `truth` basis instead; their members are the up-closure of that basis.
    """
    def __init__(self, falsity: Iterable[Stack] = (), label: Optional[str] = None,
                 truth: Optional[Iterable[FiniteTerm]] = None, exact: bool = True):
        self.falsity: Tuple[Stack, ...] = tuple(falsity)
        self.label = label
        self.truth: Optional[Tuple[FiniteTerm, ...]] = None if truth is None else tuple(truth)
        self.exact = exact
        self._bases: Dict[tuple, Basis] = dict()

    def with_label(self, label: str) -> Prop:
        return Prop(self.falsity, label, self.truth, self.exact)

    def contains(self, t: Term, u: Optional[Universe] = None) -> Optional[bool]:
        if self.truth is not None:
            result = False
            for b in self.truth:
                inside = b.issubset(t)
                if inside is True:
                    return True
                if inside is None:
                    result = None
            return result
        u = u or default_universe()
        result = True
        for pi in self.falsity:
            outcome = evaluate(Process(t, pi), universe=u).outcome
            if outcome == Outcome.BOT:
                return False
            if outcome == Outcome.INCONCLUSIVE:
                result = None
        return result

    def basis(self, u: Optional[Universe] = None, limit: int = DEFAULT_BASIS_LIMIT) -> Basis:
        u = u or default_universe()
        key = (u.key, u.fuel, limit)
        found = self._bases.get(key)
        if found is None:
            found = _compute_basis(self, u, limit)
            self._bases[key] = found
        return found

    def to_json(self) -> dict:
        data = {'falsity': [s.to_json() for s in self.falsity], 'label': self.label}
        if self.truth is not None:
            data['truth'] = [t.to_json() for t in self.truth]
        return data

    def __str__(self):  return self.label or f'Prop({len(self.falsity)} generators)'
    def __repr__(self): return f'Prop({self})'


TOP_PROP = Prop((), label='⊤')                                     # |⊤| = D
BOT_PROP = Prop((TOP_STACK, BOTTOM_STACK), label='⊥')               # |⊥| = {⊤_D}
U_PROP = BOT_PROP.with_label('U')                                   # U = {⊤_D}
EMPTY_PROP = Prop(BOT_PROP.falsity, label='∅', truth=())            # the empty truth value


def prop_from_json(data) -> Prop:
    from .parse_syntax import stack_from_json, term_from_json
    from .errors import ParseError
    if not isinstance(data, dict) or 'falsity' not in data:
        raise ParseError(f'prop must be an object with "falsity", got {data!r}')
    if not isinstance(data['falsity'], list):
        raise ParseError(f'prop falsity must be a list of stacks, got {data["falsity"]!r}')
    truth = data.get('truth')
    if truth is not None:
        if not isinstance(truth, list):
            raise ParseError(f'prop truth must be a list of terms, got {truth!r}')
        truth = [term_from_json(t) for t in truth]
    return Prop([stack_from_json(s) for s in data['falsity']], data.get('label'), truth)


######################################################################################


def _subsumed(stacks: Sequence[Stack]) -> List[Stack]:
    """ Drops generators whose ideal contains another generator's ideal """
    kept = []
    for i, s in enumerate(stacks):
        redundant = False
        for j, other in enumerate(stacks):
            if i == j or not other.below(s):
                continue
            if not s.below(other) or j < i:
                redundant = True
                break
        if not redundant:
            kept.append(s)
    return kept


def generator_ideals(falsity: Sequence[Stack], u: Universe) -> Tuple[List[FrozenSet[Token]], bool]:
    """ Token sets of the non-redundant generator ideals, smallest first """
    exact = True
    ideals = []
    for s in _subsumed(dedupe(falsity)):
        tokens = s.ideal_tokens()
        if tokens is None:
            exact = False
            tokens = [a for a in u.tokens() if s.contains(a) is True]
        ideals.append(frozenset(tokens))
    ideals = dedupe(ideals)
    ideals = [a for a in ideals if not any(b < a for b in ideals)]
    ideals.sort(key=lambda a: (len(a), sorted(t.key for t in a)))
    return ideals, exact


def minimal_hitting_cliques(ideals: List[FrozenSet[Token]], budget: int,
                            limit: int = DEFAULT_BASIS_LIMIT) -> Tuple[List[FrozenSet[Token]], bool]:
    """
    All minimal cliques meeting every ideal. ⊤_D = {∅} meets every ideal; the remaining
    minimal cliques avoid ∅ and are found by depth-first search with coherence pruning.
    Returns (cliques, truncated).
    """
    ctx = get_context()
    empty = ctx.empty
    if not ideals:
        return [frozenset()], False
    results = {frozenset((empty,))}
    choices = [sorted((t for t in ideal if t != empty), key=lambda t: t.key) for ideal in ideals]
    if any(not c for c in choices):
        return [frozenset((empty,))], False
    truncated = False
    nodes = 0
    found = set()

    def hits(chosen, i):
        ideal = ideals[i]
        return any(c in ideal for c in chosen)

    def search(i: int, chosen: List[Token]):
        nonlocal nodes, truncated
        nodes += 1
        if nodes > budget or len(found) >= limit:
            truncated = True
            return
        while i < len(ideals) and hits(chosen, i):
            i += 1
        if i == len(ideals):
            found.add(frozenset(chosen))
            return
        for token in choices[i]:
            if all(_coherent(token, c, ctx) for c in chosen):
                chosen.append(token)
                search(i + 1, chosen)
                chosen.pop()
                if truncated:
                    return

    search(0, [])
    for clique in found:
        if all(not all(any(c in ideal for c in clique if c != x) for ideal in ideals) for x in clique):
            results.add(clique)
    ordered = sorted(results, key=lambda c: (len(c), sorted(t.key for t in c)))
    return ordered, truncated


def _compute_basis(prop: Prop, u: Universe, limit: int) -> Basis:
    if prop.truth is not None:
        return Basis(list(prop.truth), True)
    ideals, exact = generator_ideals(prop.falsity, u)
    cliques, truncated = minimal_hitting_cliques(ideals, u.fuel, limit)
    terms = [FiniteTerm(c, check=False) for c in cliques]
    return Basis(terms, exact and prop.exact and not truncated)


def basis(prop: Prop, u: Optional[Universe] = None, limit: int = DEFAULT_BASIS_LIMIT) -> Basis:
    return prop.basis(u, limit)


######################################################################################


class StackSet(object):
    def __init__(self, stacks: List[Stack], minimal: List[Stack], inconclusive: List[Stack]):
        self.stacks = stacks
        self.minimal = minimal
        self.inconclusive = inconclusive

    def __len__(self): return len(self.stacks)
    def __iter__(self): return iter(self.stacks)


def orthogonal(terms: Iterable[Term], u: Optional[Universe] = None) -> StackSet:
    """ The stacks of the universe on which every term fires, with their minimal elements """
    u = u or default_universe()
    terms = list(terms)
    stacks, unknown = [], []
    for pi in u.stacks():
        outcomes = [evaluate(Process(t, pi), universe=u).outcome for t in terms]
        if all(o == Outcome.TOP for o in outcomes):
            stacks.append(pi)
        elif Outcome.INCONCLUSIVE in outcomes and Outcome.BOT not in outcomes:
            unknown.append(pi)
    minimal = [pi for pi in stacks if not any(rho != pi and rho.below(pi) for rho in stacks)]
    return StackSet(stacks, minimal, unknown)


def orthogonal_terms(stacks: Iterable[Stack], u: Optional[Universe] = None) -> List[FiniteTerm]:
    """ The terms of the universe firing on every given stack """
    u = u or default_universe()
    stacks = list(stacks)
    return [t for t in u.cliques() if all(evaluate(Process(t, pi), universe=u).top for pi in stacks)]


class Biorth(object):
    """ A^⊥⊥ at a universe bound; membership is tagged with the bound it was decided at """
    def __init__(self, terms: Iterable[Term], u: Universe):
        self.universe = u
        self.orthogonal = orthogonal(terms, u)

    @property
    def bound(self): return self.universe.key

    def contains(self, t: Term) -> bool:
        return all(evaluate(Process(t, pi), universe=self.universe).top for pi in self.orthogonal.stacks)

    def members(self) -> List[FiniteTerm]:
        return orthogonal_terms(self.orthogonal.stacks, self.universe)


def biorth(terms: Iterable[Term], u: Optional[Universe] = None) -> Biorth:
    return Biorth(terms, u or default_universe())


######################################################################################


def implies(a: Prop, b: Prop, u: Optional[Universe] = None, limit: int = DEFAULT_BASIS_LIMIT) -> Prop:
    """ A → B = {s.π | s ∈ |A|, π ∈ ||B||}^⊥, with s over the minimal members of |A| """
    u = u or default_universe()
    base = a.basis(u, limit)
    falsity = dedupe(push(s, pi) for s in base for pi in b.falsity)
    return Prop(falsity, label=f'({a} → {b})', exact=base.exact and b.exact)


def forall_prop(props: Iterable[Prop], label: Optional[str] = None) -> Prop:
    """ ∩ A_i = (∪ ||A_i||)^⊥ """
    props = list(props)
    falsity = dedupe(pi for p in props for pi in p.falsity)
    return Prop(falsity, label=label or '∀(' + ', '.join(map(str, props)) + ')',
                exact=all(p.exact for p in props))


def j_U(a: Prop, u: Optional[Universe] = None, limit: int = DEFAULT_BASIS_LIMIT) -> Prop:
    """ j_U(A) = (A → U) → U """
    result = implies(implies(a, U_PROP, u, limit), U_PROP, u, limit)
    result.label = f'j_U({a})'
    return result


def check_realizer(t: Term, a: Prop, u: Optional[Universe] = None) -> Verdict:
    """ t ⊩ A: t fires on every falsity generator of A. Refuted carries the failing stack. """
    u = u or default_universe()
    if a.truth is not None:
        found = a.contains(t, u)
        if found is None:
            return Verdict.inconclusive(len(a.truth))
        if found:
            return Verdict.realizes(True, len(a.truth))
        return Verdict.refuted(t, len(a.truth), note='not above any truth basis element')
    unknown = False
    for tested, pi in enumerate(a.falsity, 1):
        outcome = evaluate(Process(t, pi), universe=u).outcome
        if outcome == Outcome.BOT:
            return Verdict.refuted(pi, tested)
        if outcome == Outcome.INCONCLUSIVE:
            unknown = True
    if unknown:
        return Verdict.inconclusive(len(a.falsity), note='fuel exhausted on some generator')
    return Verdict.realizes(a.exact, len(a.falsity))


######################################################################################


def _top_at(n: int) -> Stack:
    """ The stack with ⊤_D at position n and ⊥_D elsewhere """
    return Stack.seq([BOT] * n + [TOP])


def eq_pred(kind: str, i, j) -> Prop:
    """
    Equality predicates:
      E      Leibniz equality of the effective tripos, D if i = j else the empty truth value
      U      equality of the U-tripos / Δ_K: {⊤_D} ∪ ↑{0̄ | i = j}
      N_K    {⊤_D} ∪ ↑{n̄ | n = m}, the falsity of n ∼ n is {s̄ | s_n = ⊤_D}
      2_K    N_K restricted to {0, 1}
      N_E    primitive equality on N: ↑n̄ when n = m, otherwise empty (not biorthogonally closed)
    """
    label = f'{i} ∼_{kind} {j}'
    if kind == 'E':
        return TOP_PROP.with_label(label) if i == j else EMPTY_PROP.with_label(label)
    if kind in ('U', 'Delta_K', 'Δ_K'):
        return Prop((_top_at(0),), label) if i == j else BOT_PROP.with_label(label)
    if kind in ('N_K', '2_K'):
        if kind == '2_K' and (i not in (0, 1) or j not in (0, 1)):
            raise ValueError(f'2_K compares 0 and 1 only, got {i} and {j}')
        return Prop((_top_at(i),), label) if i == j else BOT_PROP.with_label(label)
    if kind == 'N_E':
        return Prop(BOT_PROP.falsity, label, truth=(numeral(i),) if i == j else ())
    raise ValueError(f'unknown equality kind {kind!r}')


def exchange_term() -> NumeralCaseTerm:
    """ e with e⊤_D = ⊤_D and e n̄ d = d n̄, realizing ⟦n ∼_{N_K} m⟧ → j_U(⟦n ∼_{N_E} m⟧) """
    def branch(n: int) -> Term:
        return FunTerm(lambda d: apply(d, numeral(n)), name=f'λd.d {n}')
    return NumeralCaseTerm(branch, bound=None, name='e')


def check_exchange_equations(e: Term, u: Universe, numerals: int = 4) -> List[str]:
    """ Token-level check of e⊤_D = ⊤_D and e n̄ d ⋆ π = d ⋆ n̄.π; returns the failures """
    failures = []
    stacks = u.stacks()
    for pi in stacks:
        if not fire_by_tokens(e, push(TOP, pi), u).top:
            failures.append(f'e⊤_D does not fire on {pi}')
    for n in range(numerals):
        for d in u.cliques():
            for pi in stacks:
                left = fire_by_tokens(e, push(numeral(n), push(d, pi)), u).outcome
                right = evaluate(Process(d, push(numeral(n), pi)), universe=u).outcome
                if left != right:
                    failures.append(f'e {n}̄ {d} ⋆ {pi}: {left} but {d} {n}̄ ⋆ {pi}: {right}')
    return failures


def check_NK_realizers(u: Optional[Universe] = None, bound: int = 4) -> Dict[str, Verdict]:
    """
    Both directions of N_K ≅ i*N_E at the level of realizers, for n, m < bound:
    cc ⊩ j_U(n ∼_{N_E} m) → n ∼_{N_K} m and e ⊩ n ∼_{N_K} m → j_U(n ∼_{N_E} m).
    """
    u = u or default_universe()
    e = exchange_term()
    results = {}
    for n in range(bound):
        for m in range(bound):
            ne = eq_pred('N_E', n, m)
            nk = eq_pred('N_K', n, m)
            results[f'cc {n},{m}'] = check_realizer(cc(), implies(j_U(ne, u), nk, u), u)
            results[f'e {n},{m}'] = check_realizer(e, implies(nk, j_U(ne, u), u), u)
    return results


def check_jU_constants(u: Optional[Universe] = None) -> Dict[str, List[str]]:
    """
    j_U(∅) = {⊤_D}, j_U(D) = {⊤_D} ∪ ↑0̄ and j_U(U) ∩ P = ∅ over the universe's terms.
    Returns the failing terms per check, empty lists mean the check passed.
    """
    u = u or default_universe()
    nu0 = get_context().nu(0)
    empty_closure = j_U(EMPTY_PROP, u)
    full_closure = j_U(TOP_PROP, u)
    u_closure = j_U(U_PROP, u)
    report = {'j_U(∅) = {⊤_D}': [], 'j_U(D) = {⊤_D} ∪ ↑0̄': [], 'j_U(U) ∩ P = ∅': []}
    for t in u.cliques():
        if empty_closure.contains(t, u) != (t == TOP):
            report['j_U(∅) = {⊤_D}'].append(str(t))
        if full_closure.contains(t, u) != (t == TOP or t.contains(nu0)):
            report['j_U(D) = {⊤_D} ∪ ↑0̄'].append(str(t))
        if is_prooflike(t).yes and u_closure.contains(t, u):
            report['j_U(U) ∩ P = ∅'].append(str(t))
    for b in u_closure.basis(u):
        if is_prooflike(b).yes:
            report['j_U(U) ∩ P = ∅'].append(f'basis element {b}')
    return report


######################################################################################


def sample_props(count: int, seed: int = 0, components: Optional[List[FiniteTerm]] = None) -> List[Prop]:
    """
    Deterministic family of falsity-generated props: one or two generators, each an
    Empty-tail sequence of length ≤ 2 over small cliques.
    """
    rng = random.Random(seed)
    pool = components if components is not None else Universe(2, 2).cliques()
    props = []
    for index in range(count):
        generators = []
        for _ in range(rng.randint(1, 2)):
            length = rng.randint(0, 2)
            generators.append(Stack.seq([rng.choice(pool) for _ in range(length)]))
        props.append(Prop(generators, label=f'A{index}'))
    return props
