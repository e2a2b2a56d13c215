"""
Terms (cliques of |D|), stacks (ideals of |D| in sequence or generator form),
processes t ⋆ π and their evaluation, plus the named constants:
⊤_D, ⊥_D, numerals, Ī, identity, k_π, cc, the retractions r_P and h_n.
"""
from __future__ import annotations
import itertools
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import CliqueError
from .token_core import (
    cons_token, find_incoherent_pair, grade, hat, in_web, level, project, shift, union, _coherent,
)
from .types.token import Token, TokenContext, get_context
from .types.universe import Universe
from .types.verdicts import EvalResult, Outcome, Prooflike
from .util import BoundedCache, subsets

# token lists kept per lazy term, one per universe
MEMO_UNIVERSES = 8

_default_universe: Optional[Universe] = None

def default_universe() -> Universe:
    global _default_universe
    if _default_universe is None:
        _default_universe = Universe()
    return _default_universe


######################################################################################


class Term(object):
    """
    An element of D: a clique of web tokens.
    Finite terms hold their tokens, lazy terms decide membership and enumerate
    their tokens through a universe in a fixed order.
    """
    is_finite = False

    def __init__(self, name: Optional[str] = None):
        self.name = name

    def contains(self, alpha: Token) -> Optional[bool]:
        """ True/False when membership is decided, None when it could not be decided """
        raise RuntimeError(f'{type(self).__name__}.contains() not implemented')

    def tokens(self, u: Optional[Universe] = None) -> List[Token]:
        raise RuntimeError(f'{type(self).__name__}.tokens() not implemented')

    def reduce(self, stack: Stack, u: Universe) -> Optional[Tuple[Term, Stack]]:
        """ One machine step t ⋆ π → t' ⋆ π', or None if this term has no reduction rule """
        return None

    def to_json(self):
        return {'lazy': str(self)}

    def __str__(self):  return self.name or type(self).__name__
    def __repr__(self): return f'{type(self).__name__}({self})'


class FiniteTerm(Term):
    is_finite = True

    def __init__(self, tokens: Iterable[Token] = (), name: Optional[str] = None,
                 ctx: Optional[TokenContext] = None, check: bool = True, named=None):
        super(FiniteTerm, self).__init__(name)
        self.token_set: FrozenSet[Token] = frozenset(tokens)
        self.named = named
        if check:
            pair = find_incoherent_pair(self.token_set, ctx)
            if pair is not None:
                raise CliqueError(f'tokens {pair[0]} and {pair[1]} are not coherent', pair)
        self._sorted: Optional[List[Token]] = None

    def contains(self, alpha: Token) -> bool:
        return alpha in self.token_set

    def tokens(self, u: Optional[Universe] = None) -> List[Token]:
        if self._sorted is None:
            self._sorted = sorted(self.token_set, key=lambda t: t.key)
        return self._sorted

    def issubset(self, other: Term) -> Optional[bool]:
        result = True
        for alpha in self.token_set:
            found = other.contains(alpha)
            if found is False:
                return False
            if found is None:
                result = None
        return result

    def __len__(self):  return len(self.token_set)
    def __iter__(self): return iter(self.tokens())
    def __hash__(self): return hash(self.token_set)

    def __eq__(self, other):
        return isinstance(other, FiniteTerm) and self.token_set == other.token_set

    def __ne__(self, other): return not self.__eq__(other)

    def to_json(self):
        if self.named is not None:
            return {'named': self.named}
        return {'finite': [t.to_json() for t in self.tokens()]}

    def __str__(self):
        if self.name:
            return self.name
        return '{' + ', '.join(str(t) for t in self.tokens()) + '}'


class LazyTerm(Term):
    """
    An infinite (or not yet materialized) clique. Tokens produced through a universe
    are memoized per universe and checked for coherence against everything produced before.
    """
    def __init__(self, name: Optional[str] = None, ctx: Optional[TokenContext] = None):
        super(LazyTerm, self).__init__(name)
        self.ctx = get_context(ctx)
        self._memo = BoundedCache(MEMO_UNIVERSES)

    def generate(self, u: Universe) -> Iterator[Token]:
        raise RuntimeError(f'{type(self).__name__}.generate() not implemented')

    def iter_tokens(self, u: Universe) -> Iterator[Token]:
        found = self._memo.get(u.key)
        if found is not None:
            yield from found
            return
        seen = set()
        for token in self.generate(u):
            if token not in seen:
                seen.add(token)
                yield token

    def tokens(self, u: Optional[Universe] = None) -> List[Token]:
        u = u or default_universe()
        found = self._memo.get(u.key)
        if found is not None:
            return found
        produced: List[Token] = []
        seen = set()
        for token in self.generate(u):
            if token in seen:
                continue
            for other in produced:
                if not _coherent(token, other, self.ctx):
                    raise CliqueError(f'{self} produced incoherent tokens {other} and {token}', (other, token))
            seen.add(token)
            produced.append(token)
        self._memo.put(u.key, produced)
        return produced


class IdentityTerm(LazyTerm):
    """ i = {{α}.α | α ∈ |D|}, i ⋆ t.π → t ⋆ π """
    def __init__(self, ctx=None):
        super(IdentityTerm, self).__init__('id', ctx)

    def contains(self, alpha: Token) -> bool:
        head = project(alpha, 0)
        if len(head) != 1:
            return False
        return next(iter(head)) == shift(alpha, self.ctx)

    def generate(self, u: Universe) -> Iterator[Token]:
        for alpha in u.tokens():
            yield cons_token((alpha,), alpha, self.ctx)

    def reduce(self, stack: Stack, u: Universe):
        return stack.pop()

    def to_json(self): return {'named': 'id'}


class CcTerm(LazyTerm):
    """
    cc = {{{α̂₁..α̂_k}.α}.(α∪α₁∪..∪α_k) | α∪α₁∪..∪α_k ∈ |D|}, cc ⋆ t.π → t ⋆ k_π.π
    """
    def __init__(self, ctx=None):
        super(CcTerm, self).__init__('cc', ctx)

    def contains(self, tau: Token) -> bool:
        head = project(tau, 0)
        if len(head) != 1:
            return False
        sigma = next(iter(head))
        parts = [shift(sigma, self.ctx)]
        for inner in project(sigma, 0):
            if len(inner.entries) != 1 or inner.entries[0][0] != 0:
                return False
            parts.append(inner.entries[0][1])
        total = parts[0]
        for part in parts[1:]:
            total = union(total, part, self.ctx)
        return total == shift(tau, self.ctx) and in_web(total, self.ctx).in_web

    def generate(self, u: Universe) -> Iterator[Token]:
        ctx = self.ctx
        for beta in u.tokens():
            parts = [ctx.make(entries) for entries in subsets(beta.entries)]
            for alpha in parts:
                for k in range(0, u.width + 1):
                    for family in itertools.combinations(parts, k):
                        total = alpha
                        for part in family:
                            total = union(total, part, ctx)
                        if total != beta:
                            continue
                        inner = cons_token([hat(a, ctx) for a in family], alpha, ctx)
                        yield cons_token((inner,), beta, ctx)

    def reduce(self, stack: Stack, u: Universe):
        head, rest = stack.pop()
        return head, push(k_of(rest), rest)

    def to_json(self): return {'named': 'cc'}


class KTerm(LazyTerm):
    """ k_π = {α̂ | α ∈ π}, k_π ⋆ t.ρ → t ⋆ π """
    def __init__(self, stack: Stack, ctx=None):
        super(KTerm, self).__init__(f'k[{stack}]', ctx)
        self.stack = stack

    def contains(self, tau: Token) -> Optional[bool]:
        if len(tau.entries) != 1 or tau.entries[0][0] != 0:
            return False
        return self.stack.contains(tau.entries[0][1])

    def generate(self, u: Universe) -> Iterator[Token]:
        for alpha in u.tokens():
            if self.stack.contains(alpha) is True:
                yield hat(alpha, self.ctx)

    def reduce(self, stack: Stack, u: Universe):
        head, _ = stack.pop()
        return head, self.stack

    def __eq__(self, other): return isinstance(other, KTerm) and self.stack == other.stack
    def __hash__(self): return hash(('k', self.stack))

    def to_json(self): return {'k': self.stack.to_json()}


class ApplyTerm(LazyTerm):
    """ ts = {α | ∃a ⊆_fin s. a.α ∈ t}, (ts) ⋆ π → t ⋆ s.π """
    def __init__(self, fn: Term, arg: Term, universe: Optional[Universe] = None, ctx=None):
        super(ApplyTerm, self).__init__(f'({fn} {arg})', ctx)
        self.fn = fn
        self.arg = arg
        self.universe = universe

    def _argument_subsets(self) -> Tuple[Iterator[Tuple[Token, ...]], bool]:
        if self.arg.is_finite:
            return subsets(self.arg.tokens()), True
        u = self.universe or default_universe()
        return subsets(self.arg.tokens(u), u.width), False

    def contains(self, alpha: Token) -> Optional[bool]:
        candidates, exact = self._argument_subsets()
        unknown = not exact
        for a in candidates:
            found = self.fn.contains(cons_token(a, alpha, self.ctx))
            if found is True:
                return True
            if found is None:
                unknown = True
        return None if unknown else False

    def generate(self, u: Universe) -> Iterator[Token]:
        for tau in self.fn.tokens(u):
            head = project(tau, 0)
            if all(self.arg.contains(x) is True for x in head):
                yield shift(tau, self.ctx)

    def reduce(self, stack: Stack, u: Universe):
        return self.fn, push(self.arg, stack)

    def to_json(self): return {'apply': [self.fn.to_json(), self.arg.to_json()]}


class NumeralCaseTerm(LazyTerm):
    """
    Case analysis on numerals: tokens ν₀ and {ν_n}.β for β ∈ branch(n).
    So t⊤_D = ⊤_D, t n̄ = branch(n) and t s = ⊥_D when s holds neither ∅ nor a ν_n.
    `bound` limits n, None means every natural.
    """
    def __init__(self, branch: Callable[[int], Term], bound: Optional[int] = None,
                 name: Optional[str] = None, ctx=None):
        super(NumeralCaseTerm, self).__init__(name or 'case', ctx)
        self.branch_fn = branch
        self.bound = bound
        self._branches: Dict[int, Term] = dict()

    def branch(self, n: int) -> Term:
        found = self._branches.get(n)
        if found is None:
            found = self.branch_fn(n)
            self._branches[n] = found
        return found

    def _numeral_index(self, token: Token) -> Optional[int]:
        if len(token.entries) == 1 and token.entries[0][1].is_empty():
            n = token.entries[0][0]
            if self.bound is None or n <= self.bound:
                return n
        return None

    def contains(self, tau: Token) -> Optional[bool]:
        if tau == self.ctx.nu(0):
            return True
        head = project(tau, 0)
        if len(head) != 1:
            return False
        n = self._numeral_index(next(iter(head)))
        if n is None:
            return False
        return self.branch(n).contains(shift(tau, self.ctx))

    def generate(self, u: Universe) -> Iterator[Token]:
        yield self.ctx.nu(0)
        last = self.bound if self.bound is not None else u.width - 1
        for n in range(last + 1):
            for beta in self.branch(n).tokens(u):
                yield cons_token((self.ctx.nu(n),), beta, self.ctx)

    def reduce(self, stack: Stack, u: Universe):
        head, rest = stack.pop()
        has_top = head.contains(self.ctx.empty)
        if has_top is True:
            return TOP, rest
        if head.is_finite:
            for token in head.tokens():
                n = self._numeral_index(token)
                if n is not None:
                    return self.branch(n), rest
            return BOT, rest
        if has_top is None or self.bound is None:
            return None
        for n in range(self.bound + 1):
            found = head.contains(self.ctx.nu(n))
            if found is None:
                return None
            if found:
                return self.branch(n), rest
        return BOT, rest


class FilterTerm(LazyTerm):
    """ Tokens of a lazy term restricted by a token predicate """
    def __init__(self, base: Term, predicate: Callable[[Token], bool], name: str, ctx=None):
        super(FilterTerm, self).__init__(name, ctx)
        self.base = base
        self.predicate = predicate

    def contains(self, alpha: Token) -> Optional[bool]:
        if not self.predicate(alpha):
            return False
        return self.base.contains(alpha)

    def generate(self, u: Universe) -> Iterator[Token]:
        for alpha in self.base.tokens(u):
            if self.predicate(alpha):
                yield alpha


######################################################################################


EMPTY_TAIL = 'empty'
TOP_TAIL = 'top'


class Stack(object):
    """
    An element of Π_D, a downward closed ideal of |D| closed under finite unions.
    Two forms: SeqStack (components + tail) and IdealStack (generator tokens).
    """
    @staticmethod
    def seq(items: Sequence[Term] = (), tail: str = EMPTY_TAIL) -> SeqStack:
        return SeqStack(items, tail)

    @staticmethod
    def ideal(generators: Iterable[Token], ctx: Optional[TokenContext] = None) -> IdealStack:
        return IdealStack(generators, ctx)

    def as_seq(self) -> SeqStack: raise RuntimeError('as_seq() not implemented')
    def component(self, n: int) -> Term: return self.as_seq().component(n)
    def pop(self) -> Tuple[Term, Stack]: return self.as_seq().pop()
    def contains(self, alpha: Token) -> Optional[bool]: return self.as_seq().contains(alpha)
    def ideal_tokens(self) -> Optional[List[Token]]: return self.as_seq().ideal_tokens()
    def below(self, other: Stack) -> bool: return self.as_seq().below(other)
    def is_prooflike(self) -> bool: return self.as_seq().is_prooflike()

    def __eq__(self, other):
        return isinstance(other, Stack) and self.as_seq()._identity() == other.as_seq()._identity()

    def __ne__(self, other): return not self.__eq__(other)
    def __hash__(self): return hash(self.as_seq()._identity())
    def __repr__(self): return f'{type(self).__name__}({self})'


class SeqStack(Stack):
    """ I_s̄ = {α | ∀n. α_n ⊆ s_n}, s_n past the listed items is ⊥_D (Empty) or ⊤_D (Top) """
    def __init__(self, items: Sequence[Term] = (), tail: str = EMPTY_TAIL):
        if tail not in (EMPTY_TAIL, TOP_TAIL):
            raise ValueError(f'stack tail must be {EMPTY_TAIL!r} or {TOP_TAIL!r}, got {tail!r}')
        self.items: Tuple[Term, ...] = tuple(items)
        self.tail = tail
        self._ideal: Optional[List[Token]] = None
        self._normal = None

    def as_seq(self) -> SeqStack: return self

    def filler(self) -> FiniteTerm:
        return TOP if self.tail == TOP_TAIL else BOT

    def normal_items(self) -> Tuple[Term, ...]:
        """ Items with trailing tail fillers stripped """
        if self._normal is None:
            items = list(self.items)
            filler = self.filler()
            while items and items[-1].is_finite and items[-1] == filler:
                items.pop()
            self._normal = tuple(items)
        return self._normal

    def _identity(self):
        return (self.normal_items(), self.tail)

    def component(self, n: int) -> Term:
        return self.items[n] if n < len(self.items) else self.filler()

    def pop(self) -> Tuple[Term, SeqStack]:
        return self.component(0), SeqStack(self.items[1:], self.tail)

    def contains(self, alpha: Token) -> Optional[bool]:
        result = True
        for n, child in alpha.entries:
            found = self.component(n).contains(child)
            if found is False:
                return False
            if found is None:
                result = None
        return result

    def ideal_tokens(self) -> Optional[List[Token]]:
        """ The whole ideal when it is finite (finite components, Empty tail) """
        if self._ideal is not None:
            return self._ideal
        items = self.normal_items()
        if self.tail == TOP_TAIL or not all(t.is_finite for t in items):
            return None
        ctx = get_context()
        per_position = [[[(n, x) for x in sub] for sub in subsets(t.tokens())] for n, t in enumerate(items)]
        self._ideal = [ctx.make(itertools.chain.from_iterable(choice))
                       for choice in itertools.product(*per_position)]
        return self._ideal

    def below(self, other: Stack) -> bool:
        """ Ideal inclusion, componentwise ⊆ """
        other = other.as_seq()
        if self.tail == TOP_TAIL and other.tail == EMPTY_TAIL:
            return False
        for n in range(max(len(self.items), len(other.items))):
            mine, theirs = self.component(n), other.component(n)
            if mine is theirs:
                continue
            if not mine.is_finite or mine.issubset(theirs) is not True:
                return False
        return True

    def is_prooflike(self) -> bool:
        if self.tail != EMPTY_TAIL:
            return False
        return all(t.is_finite and is_prooflike(t).yes for t in self.items)

    def to_ideal(self) -> IdealStack:
        """ A finite Empty-tail sequence is the ideal generated by its single top token """
        if self.ideal_tokens() is None:
            raise ValueError(f'stack {self} has no finite generator')
        ctx = get_context()
        top = ctx.make((n, x) for n, t in enumerate(self.normal_items()) for x in t.tokens())
        return IdealStack((top,), ctx)

    def to_json(self):
        return {'seq': {'items': [t.to_json() for t in self.items], 'tail': self.tail}}

    def __len__(self): return len(self.items)

    def __str__(self):
        items = ' '.join(str(t) for t in self.items)
        tail = '⊤^ω' if self.tail == TOP_TAIL else '⊥^ω'
        return f'⟨{items} | {tail}⟩' if items else f'⟨{tail}⟩'


class IdealStack(Stack):
    """ The ideal generated by finitely many tokens, s_n = ∪_g g_n """
    def __init__(self, generators: Iterable[Token], ctx: Optional[TokenContext] = None):
        self.ctx = get_context(ctx)
        self.generators: Tuple[Token, ...] = tuple(sorted(set(generators), key=lambda t: t.key))
        self._seq: Optional[SeqStack] = None

    def as_seq(self) -> SeqStack:
        if self._seq is None:
            width = max((i + 1 for g in self.generators for i, _ in g.entries), default=0)
            items = []
            for n in range(width):
                parts = {x for g in self.generators for x in project(g, n)}
                pair = find_incoherent_pair(parts, self.ctx)
                if pair is not None:
                    raise CliqueError(f'generators do not span an ideal: position {n} holds {pair[0]} and {pair[1]}', pair)
                items.append(FiniteTerm(parts, ctx=self.ctx, check=False))
            self._seq = SeqStack(items, EMPTY_TAIL)
        return self._seq

    def to_json(self):
        return {'ideal': [g.to_json() for g in self.generators]}

    def __str__(self):
        return 'ideal{' + ', '.join(str(g) for g in self.generators) + '}'


class Process(object):
    """ t ⋆ π """
    def __init__(self, term: Term, stack: Stack):
        self.term = term
        self.stack = stack

    def __str__(self):  return f'{self.term} ⋆ {self.stack}'
    def __repr__(self): return f'Process({self})'


BOTTOM_STACK = SeqStack((), EMPTY_TAIL)   # ⊥_D^ω, ideal {∅}
TOP_STACK = SeqStack((), TOP_TAIL)        # ⊤_D^ω


######################################################################################


def is_clique(tokens: Iterable[Token], ctx: Optional[TokenContext] = None) -> bool:
    return find_incoherent_pair(tokens, ctx) is None


def cons(a: Iterable[Token], alpha: Token, ctx: Optional[TokenContext] = None) -> Token:
    """ The token a.α; a must be a clique """
    ctx = get_context(ctx)
    a = tuple(a)
    pair = find_incoherent_pair(a, ctx)
    if pair is not None:
        raise CliqueError(f'cons head is not a clique: {pair[0]} and {pair[1]}', pair)
    result = cons_token(a, alpha, ctx)
    assert in_web(result, ctx).in_web, f'cons({a}, {alpha}) left the web'
    return result


def push(t: Term, stack: Stack, ctx: Optional[TokenContext] = None) -> Stack:
    """ t.π = {a.α | a ⊆_fin t, α ∈ π} """
    if isinstance(stack, IdealStack) and t.is_finite:
        ctx = get_context(ctx)
        head = t.tokens()
        generators = set(stack.generators) | {ctx.empty}
        return IdealStack((cons_token(head, g, ctx) for g in generators), ctx)
    seq = stack.as_seq()
    return SeqStack((t,) + seq.items, seq.tail)


def apply(t: Term, s: Term, universe: Optional[Universe] = None, ctx: Optional[TokenContext] = None) -> Term:
    """ ts, computed eagerly when t is finite and s decides membership of t's heads """
    ctx = get_context(ctx)
    if t.is_finite:
        found = []
        for tau in t.tokens():
            inside = True
            for x in project(tau, 0):
                member = s.contains(x)
                if member is None:
                    return ApplyTerm(t, s, universe, ctx)
                if not member:
                    inside = False
                    break
            if inside:
                found.append(shift(tau, ctx))
        return FiniteTerm(found, ctx=ctx, check=False)
    return ApplyTerm(t, s, universe, ctx)


def _scan_finite(term: Term, stack: Stack, steps: int) -> EvalResult:
    unknown = False
    for alpha in term.tokens():
        found = stack.contains(alpha)
        if found is True:
            return EvalResult(Outcome.TOP, alpha, steps)
        if found is None:
            unknown = True
    return EvalResult(Outcome.INCONCLUSIVE if unknown else Outcome.BOT, None, steps)


def _search_lazy(term: Term, stack: Stack, u: Universe, budget: int, steps: int) -> EvalResult:
    ideal = stack.ideal_tokens()
    if ideal is not None:
        unknown = False
        for alpha in ideal:
            found = term.contains(alpha)
            if found is True:
                return EvalResult(Outcome.TOP, alpha, steps)
            if found is None:
                unknown = True
        return EvalResult(Outcome.INCONCLUSIVE if unknown else Outcome.BOT, None, steps)
    for scanned, alpha in enumerate(term.iter_tokens(u)):
        if scanned >= budget:
            break
        if stack.contains(alpha) is True:
            return EvalResult(Outcome.TOP, alpha, steps)
    return EvalResult(Outcome.INCONCLUSIVE, None, steps)


def evaluate(process: Process, fuel: Optional[int] = None, universe: Optional[Universe] = None) -> EvalResult:
    """
    Decides t ⋆ π ∈ ⊥⊥, i.e. t ∩ π ≠ ∅.
    Lazy heads are first reduced by their defining laws until a finite head is reached;
    a lazy head without a reduction rule is searched against the ideal or the universe.
    Top and Bot are definitive, Inconclusive means fuel ran out or the search was bounded.
    """
    u = universe or default_universe()
    fuel = u.fuel if fuel is None else fuel
    term, stack = process.term, process.stack
    steps = 0
    while not term.is_finite:
        if steps >= fuel:
            return EvalResult(Outcome.INCONCLUSIVE, None, steps)
        reduced = term.reduce(stack, u)
        if reduced is None:
            return _search_lazy(term, stack, u, fuel - steps, steps)
        term, stack = reduced
        steps += 1
    return _scan_finite(term, stack, steps)


def fire_by_tokens(term: Term, stack: Stack, universe: Optional[Universe] = None) -> EvalResult:
    """ Decides t ⋆ π from membership alone, never using reduction rules """
    u = universe or default_universe()
    if term.is_finite:
        return _scan_finite(term, stack, 0)
    return _search_lazy(term, stack, u, u.fuel, 0)


######################################################################################


def _finite(tokens, name=None, named=None, ctx=None) -> FiniteTerm:
    return FiniteTerm(tokens, name=name, ctx=ctx, check=False, named=named)


TOP = _finite((get_context().empty,), name='⊤', named='top')   # ⊤_D = {∅}
BOT = _finite((), name='⊥', named='bot')                        # ⊥_D = ∅


def numeral(n: int, ctx: Optional[TokenContext] = None) -> FiniteTerm:
    """ n̄ = {ν_n} """
    if n < 0:
        raise ValueError(f'numeral({n}) requires a natural number')
    return _finite((get_context(ctx).nu(n),), name=f'{n}̄', named={'num': n})


def bar_I(indices: Iterable[int], ctx: Optional[TokenContext] = None) -> FiniteTerm:
    """ Ī = {{(i,∅) | i ∈ I}}, fires on s̄ iff s_i = ⊤_D for all i ∈ I """
    ctx = get_context(ctx)
    indices = sorted(set(indices))
    if any(i < 0 for i in indices):
        raise ValueError(f'bar_I({indices}) requires natural numbers')
    if not indices:
        return TOP
    if len(indices) == 1:
        return numeral(indices[0], ctx)
    token = ctx.make((i, ctx.empty) for i in indices)
    return _finite((token,), name='{' + ','.join(map(str, indices)) + '}‾', named={'barI': indices})


_identity = IdentityTerm()
_cc = CcTerm()

def identity() -> IdentityTerm:
    return _identity


def cc() -> CcTerm:
    return _cc


def k_of(stack: Stack) -> KTerm:
    return KTerm(stack)


def is_prooflike(t: Term, u: Optional[Universe] = None) -> Prooflike:
    """ t ∈ P iff every token has grade 1; exact for finite terms, bounded for lazy ones """
    if t.is_finite:
        for alpha in t.tokens():
            if grade(alpha) == 0:
                return Prooflike(Prooflike.NO, alpha)
        return Prooflike(Prooflike.YES, scanned=len(t))
    u = u or default_universe()
    scanned = 0
    for alpha in t.iter_tokens(u):
        if scanned >= u.fuel:
            return Prooflike(Prooflike.INCONCLUSIVE, scanned=scanned)
        scanned += 1
        if grade(alpha) == 0:
            return Prooflike(Prooflike.NO, alpha, scanned=scanned)
    return Prooflike(Prooflike.YES, bounded=True, scanned=scanned)


def prooflike_refuter(t: FiniteTerm, ctx: Optional[TokenContext] = None) -> Optional[SeqStack]:
    """
    For a finite t holding a grade-0 token α, the proof-like stack ⟨α_0, α_1, ...⟩ fires t.
    Returns None when t ∈ P.
    """
    ctx = get_context(ctx)
    for alpha in t.tokens():
        if grade(alpha, ctx) == 0:
            width = max((i + 1 for i, _ in alpha.entries), default=0)
            return SeqStack([FiniteTerm(project(alpha, n), ctx=ctx, check=False) for n in range(width)])
    return None


def r_P(t: Term) -> Term:
    """ r_P(a) = {α ∈ a | |α| = 1} """
    if t.is_finite:
        return FiniteTerm((a for a in t.tokens() if grade(a) == 1), check=False)
    return FilterTerm(t, lambda a: grade(a) == 1, f'r_P({t})')


def h(n: int, t: Term) -> Term:
    """ h_n as the level filter {α ∈ t | level(α) ≤ n} """
    if t.is_finite:
        return FiniteTerm((a for a in t.tokens() if level(a) <= n), check=False)
    return FilterTerm(t, lambda a: level(a) <= n, f'h{n}({t})')


def h_stack(n: int, stack: Stack) -> SeqStack:
    """ The argument (h_{n-1}(s_i))_i that h_n passes on; a Top tail stays Top for n ≥ 1 """
    seq = stack.as_seq()
    if n <= 0:
        return BOTTOM_STACK
    items = [h(n - 1, t) for t in seq.items]
    tail = seq.tail if n >= 2 else EMPTY_TAIL
    return SeqStack(items, tail)


def meet_terms(t1: FiniteTerm, t2: FiniteTerm, ctx: Optional[TokenContext] = None) -> FiniteTerm:
    """ The largest term firing exactly where both t1 and t2 fire: minimal unions α∪β in |D| """
    ctx = get_context(ctx)
    unions = set()
    for a in t1.tokens():
        for b in t2.tokens():
            c = union(a, b, ctx)
            if in_web(c, ctx).in_web:
                unions.add(c)
    return FiniteTerm(minimal_tokens(unions), ctx=ctx)


def minimal_tokens(tokens: Iterable[Token]) -> List[Token]:
    """ Tokens with no proper entry-subset in the collection """
    tokens = list(tokens)
    entry_sets = [set(t.entries) for t in tokens]
    minimal = []
    for i, t in enumerate(tokens):
        if not any(j != i and entry_sets[j] < entry_sets[i] for j in range(len(tokens))):
            minimal.append(t)
    return sorted(minimal, key=lambda t: t.key)
