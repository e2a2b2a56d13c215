"""
Stable maps as traces: trace_of / fun, λ-abstraction through traces,
interpretation of the small term language, and the parallel-or obstruction.
"""
from __future__ import annotations
from typing import Callable, Dict, Iterator, List, Optional

from .cliques import (
    BOT, BOTTOM_STACK, TOP, FiniteTerm, LazyTerm, Process, Stack, Term,
    apply, bar_I, cc, default_universe, evaluate, identity, k_of, numeral,
)
from .errors import UnboundVariable
from .syntax import App, BarI, BotD, Cc, Id, KOf, Lam, Lit, Num, Syntax, TopD, Var
from .token_core import cons_token, grade, project, shift
from .types.token import Token
from .types.universe import Universe
from .util import BoundedCache, proper_subsets

# values kept per λ-abstraction
FUN_VALUES_LIMIT = 4096


class TraceEntry(object):
    """ A minimal pair (a, α): α ∈ f(a) and α ∉ f(b) for every b ⊊ a """
    __slots__ = ('argument', 'value')

    def __init__(self, argument: FiniteTerm, value: Token):
        self.argument = argument
        self.value = value

    def token(self) -> Token:
        return cons_token(self.argument.tokens(), self.value)

    def __eq__(self, other):
        return isinstance(other, TraceEntry) and self.argument == other.argument and self.value == other.value

    def __hash__(self): return hash((self.argument, self.value))
    def __str__(self):  return f'({self.argument}, {self.value})'
    def __repr__(self): return f'TraceEntry{self}'


class Trace(object):
    """
    Lazily computed trace of a stable map over the cliques of a universe.
    Entries whose minimality could not be decided are kept in `withheld`.
    """
    def __init__(self, function: Callable[[FiniteTerm], Term], u: Universe):
        self.function = function
        self.universe = u
        self.withheld: List[TraceEntry] = []
        self.truncated = False
        self._values: Dict[FiniteTerm, Term] = dict()
        self._entries: Optional[List[TraceEntry]] = None

    def value_at(self, a: FiniteTerm) -> Term:
        found = self._values.get(a)
        if found is None:
            found = self.function(a)
            self._values[a] = found
        return found

    def _is_minimal(self, a: FiniteTerm, alpha: Token) -> Optional[bool]:
        unknown = False
        for sub in proper_subsets(a.tokens()):
            found = self.value_at(FiniteTerm(sub, check=False)).contains(alpha)
            if found is True:
                return False
            if found is None:
                unknown = True
        return None if unknown else True

    def _generate(self) -> Iterator[TraceEntry]:
        u = self.universe
        self.withheld = []
        self.truncated = False
        probes = 0
        for a in u.cliques():
            value = self.value_at(a)
            for alpha in value.tokens(u):
                probes += 1
                if probes > u.fuel:
                    self.truncated = True
                    return
                minimal = self._is_minimal(a, alpha)
                if minimal is None:
                    self.withheld.append(TraceEntry(a, alpha))
                elif minimal:
                    yield TraceEntry(a, alpha)

    def __iter__(self) -> Iterator[TraceEntry]:
        if self._entries is not None:
            return iter(self._entries)
        return self._materialize()

    def _materialize(self) -> Iterator[TraceEntry]:
        entries = []
        for entry in self._generate():
            entries.append(entry)
            yield entry
        self._entries = entries

    def entries(self) -> List[TraceEntry]:
        if self._entries is None:
            for _ in self._materialize():
                pass
        return self._entries


def trace_of(function: Callable[[FiniteTerm], Term], u: Optional[Universe] = None) -> Trace:
    return Trace(function, u or default_universe())


def fun(entries) -> FiniteTerm:
    """ fun(f) = {a.α | (a,α) ∈ tr(f)}; raises CliqueError on an incoherent pair """
    if isinstance(entries, Trace):
        entries = entries.entries()
    return FiniteTerm(entry.token() for entry in entries)


class FunTerm(LazyTerm):
    """
    The denotation of a λ-abstraction: the stable map `function` given through its trace.
    (λx.b) ⋆ t.π → b[t/x] ⋆ π
    """
    def __init__(self, function: Callable[[Term], Term], name: Optional[str] = None,
                 universe: Optional[Universe] = None):
        super(FunTerm, self).__init__(name or 'fun')
        self.function = function
        self.universe = universe
        self._values = BoundedCache(FUN_VALUES_LIMIT)

    def apply_to(self, argument: Term) -> Term:
        found = self._values.get(argument)
        if found is None:
            found = self.function(argument)
            self._values.put(argument, found)
        return found

    def contains(self, gamma: Token) -> Optional[bool]:
        a = FiniteTerm(project(gamma, 0), check=False)
        alpha = shift(gamma)
        found = self.apply_to(a).contains(alpha)
        if found is not True:
            return found
        unknown = False
        for sub in proper_subsets(a.tokens()):
            smaller = self.apply_to(FiniteTerm(sub, check=False)).contains(alpha)
            if smaller is True:
                return False
            if smaller is None:
                unknown = True
        return None if unknown else True

    def generate(self, u: Universe) -> Iterator[Token]:
        for entry in trace_of(self.apply_to, u):
            yield entry.token()

    def reduce(self, stack: Stack, u: Universe):
        head, rest = stack.pop()
        return self.apply_to(head), rest


######################################################################################


def interpret(e: Syntax, env: Optional[Dict[str, Term]] = None, u: Optional[Universe] = None) -> Term:
    """ The denotation of closed syntax, environment-based; λ becomes a lazily traced FunTerm """
    env = dict(env or {})
    missing = e.free_vars() - env.keys()
    if missing:
        raise UnboundVariable(f'unbound variable(s) {", ".join(sorted(missing))} in {e}')
    return _interpret(e, env, u or default_universe())


def _interpret(e: Syntax, env: Dict[str, Term], u: Universe) -> Term:
    if isinstance(e, Var):
        return env[e.name]
    if isinstance(e, Lam):
        body, name = e.body, e.name
        return FunTerm(lambda a: _interpret(body, {**env, name: a}, u), name=str(e), universe=u)
    if isinstance(e, App):
        return apply(_interpret(e.fn, env, u), _interpret(e.arg, env, u), u)
    if isinstance(e, Cc):   return cc()
    if isinstance(e, Id):   return identity()
    if isinstance(e, Num):  return numeral(e.n)
    if isinstance(e, BarI): return bar_I(e.indices)
    if isinstance(e, TopD): return TOP
    if isinstance(e, BotD): return BOT
    if isinstance(e, KOf):  return k_of(e.stack)
    if isinstance(e, Lit):  return e.term
    raise TypeError(f'cannot interpret {type(e).__name__}: {e}')


def tokens_on(t: Term, u: Universe) -> frozenset:
    return frozenset(t.tokens(u))


def check_stability(f: Term, x: FiniteTerm, y: FiniteTerm, u: Universe) -> bool:
    """ f(x ⊓ y) = f(x) ⊓ f(y) for x, y with x ∪ y a clique, compared on the universe """
    meet = FiniteTerm(x.token_set & y.token_set, check=False)
    left = tokens_on(apply(f, meet, u), u)
    right = tokens_on(apply(f, x, u), u) & tokens_on(apply(f, y, u), u)
    return left == right


######################################################################################


class PorReport(object):
    def __init__(self, universe: Universe):
        self.universe = universe
        self.scanned = 0
        self.premise_holds: List[FiniteTerm] = []
        self.counterexamples: List[tuple] = []

    @property
    def passed(self): return not self.counterexamples

    def to_json(self) -> dict:
        return {
            'level': self.universe.level, 'width': self.universe.width,
            'scanned': self.scanned,
            'premise_holds': [f.to_json() for f in self.premise_holds],
            'counterexamples': [{'term': f.to_json(), 'reason': reason} for f, reason in self.counterexamples],
        }


def _is_top(t: Term, u: Universe) -> bool:
    return evaluate(Process(t, BOTTOM_STACK), universe=u).top


def por_obstruction(u: Optional[Universe] = None) -> PorReport:
    """
    Scans every finite term f of the universe. Whenever f⊤⊥ = ⊤_D = f⊥⊤, stability
    forces f⊥⊥ = ⊤_D and f ∉ P; any f violating this is a counterexample.
    """
    u = u or default_universe()
    report = PorReport(u)
    for f in u.cliques():
        report.scanned += 1
        if not (_is_top(apply(apply(f, TOP), BOT), u) and _is_top(apply(apply(f, BOT), TOP), u)):
            continue
        report.premise_holds.append(f)
        if not _is_top(apply(apply(f, BOT), BOT), u):
            report.counterexamples.append((f, 'f⊥⊥ is not ⊤_D'))
        elif all(grade(alpha) == 1 for alpha in f.tokens()):
            report.counterexamples.append((f, 'f is proof-like'))
    return report
