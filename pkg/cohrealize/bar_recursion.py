"""
Modified bar recursion BR(Y, G): the least Ψ : D* → Σ with

    Ψ(s) = Y(s * λn. G_{|s|}(λx. Ψ(s*x)))

computed by Kleene iteration over the tree of sequences the run actually queries.
Y and G are black-box procedures; Y declares a modulus (the prefix length it reads)
and each G_n declares the probe terms it may apply its argument to.

On top of br sit the Double Negation Shift harness (dns_check), which checks the
hypotheses on G and Y at the bound, runs br at ⟨⟩ and replays both bar-induction
obligations, and the proof-likeness judgment PL over types built from Σ and D.
"""
from __future__ import annotations
import itertools, json, random
from typing import Any, Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .cliques import BOT, TOP, FiniteTerm, Process, Term, default_universe, evaluate, is_prooflike, numeral
from .errors import IllPosedInput, ParseError
from .propositions import TOP_PROP, U_PROP, Prop, eq_pred, prop_from_json
from .types.universe import Universe
from .types.verdicts import Outcome, Verdict


Node = Tuple[FiniteTerm, ...]


def embed(value: bool) -> FiniteTerm:
    """ Σ → D: ⊤ ↦ ⊤_D, ⊥ ↦ ⊥_D """
    return TOP if value else BOT


class InfiniteSequence(object):
    """ An ω-sequence given by a finite prefix followed by a constant tail """
    def __init__(self, prefix: Sequence[Any] = (), tail: Any = None):
        self.prefix = tuple(prefix)
        self.tail = tail

    def component(self, n: int):
        return self.prefix[n] if n < len(self.prefix) else self.tail

    def __len__(self): return len(self.prefix)

    def __str__(self):
        return '⟨' + ' '.join(map(str, self.prefix)) + f' | {self.tail}^ω⟩'

    def __repr__(self): return f'{type(self).__name__}{self}'


class TermSequence(InfiniteSequence):
    def __init__(self, prefix: Sequence[Term] = (), tail: Term = BOT):
        super(TermSequence, self).__init__(prefix, tail)


class SequenceFunctional(object):
    """ Y : D^ω → Σ whose verdict depends on the first `modulus` components only """
    def __init__(self, procedure: Callable[[InfiniteSequence], bool], modulus: Optional[int], name: str = 'Y'):
        self.procedure = procedure
        self.modulus = modulus
        self.name = name
        self.table: Optional[List[List[FiniteTerm]]] = None

    def __call__(self, s: InfiniteSequence) -> bool:
        return bool(self.procedure(s))

    @staticmethod
    def constant(value: bool) -> SequenceFunctional:
        return SequenceFunctional(lambda s: value, 0, name=f'λs.{"⊤" if value else "⊥"}')

    @staticmethod
    def from_table(prefixes: Iterable[Sequence[FiniteTerm]], modulus: int) -> SequenceFunctional:
        """ ⊤ iff some listed prefix p has p_i ⊑ s_i for every i < |p| """
        prefixes = [list(p) for p in prefixes]
        for p in prefixes:
            if len(p) > modulus:
                raise IllPosedInput(f'prefix of length {len(p)} exceeds the modulus {modulus}')

        def procedure(s: InfiniteSequence) -> bool:
            return any(all(x.issubset(s.component(i)) is True for i, x in enumerate(p)) for p in prefixes)

        result = SequenceFunctional(procedure, modulus, name=f'Y[{len(prefixes)} prefixes]')
        result.table = prefixes
        return result

    def to_json(self) -> dict:
        if self.table is None:
            raise ValueError(f'{self.name} is not given by a table')
        return {'modulus': self.modulus, 'table': [[t.to_json() for t in p] for p in self.table]}

    def __str__(self): return self.name


class ProbeFunctional(object):
    """ G_n : (D → Σ) → Σ reading its argument on the declared probes only """
    def __init__(self, procedure: Callable[[Callable[[FiniteTerm], bool]], bool], probes: Sequence[FiniteTerm],
                 name: str = 'G'):
        self.procedure = procedure
        self.probes = list(probes)
        self.name = name
        self.index_sets: Optional[List[List[int]]] = None

    def __call__(self, f: Callable[[FiniteTerm], bool]) -> bool:
        return bool(self.procedure(f))

    @staticmethod
    def constant(value: bool) -> ProbeFunctional:
        return ProbeFunctional(lambda f: value, (), name=f'λf.{"⊤" if value else "⊥"}')

    @staticmethod
    def from_table(probes: Sequence[FiniteTerm], index_sets: Iterable[Sequence[int]]) -> ProbeFunctional:
        """ ⊤ iff for some listed index set I, f(probes[i]) = ⊤ for all i ∈ I """
        probes = list(probes)
        index_sets = [list(s) for s in index_sets]
        for s in index_sets:
            for i in s:
                if not 0 <= i < len(probes):
                    raise IllPosedInput(f'probe index {i} out of range, {len(probes)} probes declared')

        def procedure(f) -> bool:
            return any(all(f(probes[i]) for i in s) for s in index_sets)

        result = ProbeFunctional(procedure, probes, name='G[' + ', '.join(map(str, probes)) + ']')
        result.index_sets = index_sets
        return result

    def to_json(self) -> dict:
        if self.index_sets is None:
            raise ValueError(f'{self.name} is not given by a table')
        return {'probes': [t.to_json() for t in self.probes], 'table': self.index_sets}

    def __str__(self): return self.name


class FunctionalFamily(InfiniteSequence):
    """ G = (G_n)_n; indices past the listed members get `default` (constantly ⊥ unless given) """
    def __init__(self, members: Sequence[ProbeFunctional] = (), default: Optional[ProbeFunctional] = None):
        super(FunctionalFamily, self).__init__(members, default or ProbeFunctional.constant(False))


######################################################################################


class BRResult(object):
    """
    A br run: the memo table over queried sequences, the set of ⊤ nodes after every stage,
    and the stage at which the root first became ⊤ (or the last stage computed).
    """
    def __init__(self, outcome: str, root: Node, stage: int, table: Dict[Node, bool],
                 stages: List[FrozenSet[Node]], calls: int):
        self.outcome = outcome
        self.root = root
        self.stage = stage
        self.table = table
        self.stages = stages
        self.calls = calls

    @property
    def top(self): return self.outcome == Outcome.TOP

    @property
    def value(self) -> Optional[bool]:
        if self.outcome == Outcome.INCONCLUSIVE:
            return None
        return self.outcome == Outcome.TOP

    def is_monotone(self) -> bool:
        return all(a <= b for a, b in zip(self.stages, self.stages[1:]))

    def __str__(self):
        if self.outcome == Outcome.INCONCLUSIVE:
            return f'Inconclusive at stage {self.stage}'
        return f'{"⊤" if self.top else "⊥"} at stage {self.stage}'

    def to_json(self) -> dict:
        entries = sorted(self.table.items(), key=lambda e: (len(e[0]), [str(t) for t in e[0]]))
        return {
            'outcome': self.outcome, 'stage': self.stage, 'calls': self.calls,
            'nodes': len(self.table),
            'table': [{'sequence': [t.to_json() for t in node], 'value': value} for node, value in entries],
        }


def _family(G) -> InfiniteSequence:
    if isinstance(G, InfiniteSequence):
        return G
    return FunctionalFamily(list(G))


def _equation(node: Node, psi: Callable[[Node], bool], Y, G: InfiniteSequence,
              query: Optional[Callable[[Node], None]] = None) -> Tuple[bool, int]:
    """ Y(s * λn. G_{|s|}(λx. Ψ(s*x))), cut to Y(s * ⊥^ω) once |s| reaches Y's modulus """
    modulus = getattr(Y, 'modulus', None)
    if modulus is not None and len(node) >= modulus:
        return Y(TermSequence(node)), 1

    def argument(x: FiniteTerm) -> bool:
        child = node + (x,)
        if query is not None:
            query(child)
        return psi(child)

    value = G.component(len(node))(argument)
    return Y(TermSequence(node, embed(value))), 2


def br(Y, G, s: Sequence[FiniteTerm] = (), fuel: Optional[int] = None, u: Optional[Universe] = None) -> BRResult:
    """
    Ψ₀ = ⊥ everywhere, Ψ_{k+1}(s) = Y(s * λn. G_{|s|}(λx. Ψ_k(s*x))) on every node known so far;
    nodes are discovered when G queries them. Stops when a stage changes nothing and
    discovers nothing. `fuel` bounds the number of Y and G calls.
    """
    u = u or default_universe()
    fuel = u.fuel if fuel is None else fuel
    G = _family(G)
    root: Node = tuple(s)
    nodes: List[Node] = [root]
    known = {root}
    table: Dict[Node, bool] = dict()
    stages: List[FrozenSet[Node]] = []
    calls = 0
    stage = 0
    root_stage = None
    while True:
        stage += 1
        discovered: List[Node] = []

        def query(child: Node):
            if child not in known:
                known.add(child)
                discovered.append(child)

        new_table = dict()
        for node in nodes:
            if calls >= fuel:
                return BRResult(Outcome.INCONCLUSIVE, root, stage, table, stages, calls)
            value, used = _equation(node, lambda n: table.get(n, False), Y, G, query)
            calls += used
            new_table[node] = value
        stages.append(frozenset(n for n, v in new_table.items() if v))
        changed = new_table != table
        table = new_table
        if table[root] and root_stage is None:
            root_stage = stage
        nodes.extend(discovered)
        if not changed and not discovered:
            break
    outcome = Outcome.TOP if table[root] else Outcome.BOT
    return BRResult(outcome, root, root_stage or stage, table, stages, calls)


def recheck(result: BRResult, Y, G) -> List[str]:
    """ Memo entries that disagree with the equation re-evaluated on the final table """
    G = _family(G)
    failures = []
    for node, value in result.table.items():
        again, _ = _equation(node, lambda n: result.table.get(n, False), Y, G)
        if again != value:
            failures.append(f'Ψ({_fmt(node)}) = {value} but the equation gives {again}')
    return failures


def leastness_check(result: BRResult, Y, G) -> List[str]:
    """ Flipping a ⊥ entry to ⊤ must break the equation; returns the entries where it did not """
    G = _family(G)
    survivors = []
    for node, value in result.table.items():
        if value:
            continue
        flipped = dict(result.table)
        flipped[node] = True
        again, _ = _equation(node, lambda n: flipped.get(n, False), Y, G)
        if again:
            survivors.append(f'Ψ({_fmt(node)}) can be raised to ⊤')
    return survivors


def check_modulus(Y: SequenceFunctional, pool: Sequence[FiniteTerm], samples: int = 100, seed: int = 0) -> List[str]:
    """ Perturbing components at or past the modulus never changes Y's verdict (sampled) """
    rng = random.Random(seed)
    failures = []
    for _ in range(samples):
        prefix = [rng.choice(pool) for _ in range(Y.modulus or 0)]
        first = TermSequence(prefix + [rng.choice(pool) for _ in range(rng.randint(0, 2))], rng.choice((BOT, TOP)))
        second = TermSequence(prefix + [rng.choice(pool) for _ in range(rng.randint(0, 2))], rng.choice((BOT, TOP)))
        if Y(first) != Y(second):
            failures.append(f'{Y} separates {first} and {second}')
    return failures


def check_probes(G: ProbeFunctional, pool: Sequence[FiniteTerm], samples: int = 50, seed: int = 0) -> List[str]:
    """ Arguments agreeing on the declared probes get the same verdict (sampled) """
    rng = random.Random(seed)
    failures = []
    for _ in range(samples):
        on_probes = {p: rng.random() < 0.5 for p in G.probes}
        elsewhere = {x: rng.random() < 0.5 for x in pool}
        other = {x: not v for x, v in elsewhere.items()}
        first = G(lambda x: on_probes.get(x, elsewhere.get(x, False)))
        second = G(lambda x: on_probes.get(x, other.get(x, True)))
        if first != second:
            failures.append(f'{G} reads its argument outside its probes')
    return failures


def _fmt(node: Node) -> str:
    return '⟨' + ' '.join(map(str, node)) + '⟩'


######################################################################################


class DnsReport(object):
    def __init__(self, size: int):
        self.size = size
        self.hypothesis_failures: List[str] = []
        self.counterexample = None
        self.result: Optional[BRResult] = None
        self.bar_failures: List[str] = []
        self.step_failures: List[str] = []

    @property
    def verdict(self) -> Verdict:
        if self.hypothesis_failures:
            return Verdict.refuted(self.counterexample, note=self.hypothesis_failures[0])
        if self.result is None or self.result.outcome == Outcome.INCONCLUSIVE:
            return Verdict.inconclusive(note='fuel exhausted in br')
        if not self.result.top:
            return Verdict.refuted(self.result, note=f'Ψ(⟨⟩) is {self.result}')
        if self.bar_failures or self.step_failures:
            return Verdict.refuted((self.bar_failures + self.step_failures)[0], note='bar induction obligation failed')
        return Verdict.realizes(exact=False, tested=len(self.result.table))

    @property
    def top(self): return self.verdict.ok

    def to_json(self) -> dict:
        return {
            'N': self.size,
            'verdict': self.verdict.to_json(),
            'hypothesis_failures': self.hypothesis_failures,
            'br': self.result.to_json() if self.result is not None else None,
            'bar': self.bar_failures,
            'step': self.step_failures,
        }


def _prop_at(B: Sequence[Prop], n: int) -> Prop:
    return B[n] if n < len(B) else TOP_PROP


def negation_tests(prop: Prop, u: Universe) -> List[Tuple[str, Callable[[FiniteTerm], bool]]]:
    """ Functions D → Σ realizing ~B: λx. x ⋆ π for each falsity generator, and membership in B """
    tests = []
    for pi in prop.falsity:
        tests.append((f'λx. x ⋆ {pi}', lambda x, pi=pi: evaluate(Process(x, pi), universe=u).top))
    tests.append((f'λx. x ∈ {prop}', lambda x: prop.contains(x, u) is True))
    return tests


def _psi(result: BRResult, Y, G, node: Node, u: Universe) -> Optional[bool]:
    found = result.table.get(node)
    if found is not None:
        return found
    return br(Y, G, node, u=u).value


def dns_check(B: Sequence[Prop], G, Y: SequenceFunctional, u: Optional[Universe] = None) -> DnsReport:
    """
    For G ⊩ ∀n.~~B(n) and Y ⊩ ~∀n.B(n), checks Ψ(⟨⟩) = ⊤ for Ψ = BR(Y, G), with
    B(n) = ⊤ past the given family. Both hypotheses are tested at the bound first.
    """
    u = u or default_universe()
    G = _family(G)
    B = list(B)
    report = DnsReport(len(B))
    bases = [list(b.basis(u)) for b in B]

    for n, prop in enumerate(B):
        for label, test in negation_tests(prop, u):
            if not G.component(n)(test):
                report.hypothesis_failures.append(f'G_{n}({label}) = ⊥')
                report.counterexample = f'G_{n} on {label}'
                return report
    for combo in itertools.product(*bases):
        if not Y(TermSequence(combo)):
            report.hypothesis_failures.append(f'Y({_fmt(combo)} * ⊥^ω) = ⊥')
            report.counterexample = TermSequence(combo)
            return report

    result = br(Y, G, (), u=u)
    report.result = result
    if result.outcome == Outcome.INCONCLUSIVE:
        return report

    # every α ∈ S is barred at its modulus prefix
    modulus = Y.modulus or 0
    for combo in itertools.product(*bases):
        cut = tuple((list(combo) + [BOT] * modulus)[:modulus])
        if _psi(result, Y, G, cut, u) is not True:
            report.bar_failures.append(f'Ψ({_fmt(cut)}) is not ⊤')

    # ∀s ∈ S. (∀x ∈ B(|s|). Ψ(s*x)) → Ψ(s)
    for node, value in result.table.items():
        if not all(_prop_at(B, k).contains(x, u) is True for k, x in enumerate(node)):
            continue
        children = _prop_at(B, len(node)).basis(u)
        if all(_psi(result, Y, G, node + (x,), u) is True for x in children) and not value:
            report.step_failures.append(f'Ψ({_fmt(node)}) is ⊥ although every S-extension is ⊤')
    return report


######################################################################################


class DnsInstance(object):
    def __init__(self, B: Sequence[Prop], Y: SequenceFunctional, G: FunctionalFamily, name: str = 'instance'):
        self.B = list(B)
        self.Y = Y
        self.G = G
        self.name = name

    @property
    def N(self): return len(self.B)

    def check(self, u: Optional[Universe] = None) -> DnsReport:
        return dns_check(self.B, self.G, self.Y, u)

    def to_json(self) -> dict:
        return {'N': self.N, 'B': [b.to_json() for b in self.B], 'Y': self.Y.to_json(),
                'G': [g.to_json() for g in self.G.prefix]}


def instance_from_json(data) -> DnsInstance:
    from .parse_syntax import term_from_json
    if not isinstance(data, dict):
        raise IllPosedInput(f'instance must be a JSON object, got {type(data).__name__}')
    for field in ('N', 'B', 'Y', 'G'):
        if field not in data:
            raise IllPosedInput(f'instance is missing "{field}"')
    if not isinstance(data['B'], list) or not isinstance(data['G'], list):
        raise IllPosedInput('"B" and "G" must be lists')
    B = [prop_from_json(b) for b in data['B']]
    if data['N'] != len(B):
        raise IllPosedInput(f'N = {data["N"]} but {len(B)} props given')
    y = data['Y']
    if not isinstance(y, dict) or not isinstance(y.get('modulus'), int) or not isinstance(y.get('table', []), list):
        raise IllPosedInput(f'"Y" must be an object with an integer "modulus" and a "table", got {y!r}')
    if not all(isinstance(p, list) for p in y.get('table', [])):
        raise IllPosedInput('Y prefixes must be lists of terms')
    prefixes = [[term_from_json(t) for t in p] for p in y.get('table', [])]
    if not all(t.is_finite for p in prefixes for t in p):
        raise IllPosedInput('Y prefixes must be finite terms')
    Y = SequenceFunctional.from_table(prefixes, y['modulus'])
    members = []
    for g in data['G']:
        if not isinstance(g, dict) or not isinstance(g.get('probes', []), list):
            raise IllPosedInput(f'G members must be objects with a "probes" list, got {g!r}')
        table = g.get('table', [])
        if not isinstance(table, list) or not all(isinstance(s, list) and all(isinstance(i, int) for i in s) for s in table):
            raise IllPosedInput(f'G tables must be lists of probe index lists, got {table!r}')
        probes = [term_from_json(t) for t in g.get('probes', [])]
        members.append(ProbeFunctional.from_table(probes, table))
    return DnsInstance(B, Y, FunctionalFamily(members), name=data.get('name', 'instance'))


def load_instance(path) -> DnsInstance:
    with open(path, 'r', encoding='utf-8') as f:
        text = f.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f'{path}: invalid JSON: {e.msg}', e.pos)
    return instance_from_json(data)


def nk_instance() -> DnsInstance:
    """ N = 2, B(n) = n ∼_{N_K} n, Y fires when both slots fire, G_n probes n̄ """
    B = [eq_pred('N_K', 0, 0), eq_pred('N_K', 1, 1)]
    Y = SequenceFunctional.from_table([[TOP, TOP], [TOP, numeral(1)], [numeral(0), TOP], [numeral(0), numeral(1)]], 2)
    G = FunctionalFamily([ProbeFunctional.from_table([numeral(n)], [[0]]) for n in range(2)])
    return DnsInstance(B, Y, G, name='N_K pair')


def broken_instance() -> DnsInstance:
    """ nk_instance with G₀ answering ⊥ on every argument """
    good = nk_instance()
    G = FunctionalFamily([ProbeFunctional.from_table([numeral(0)], []), good.G.component(1)])
    return DnsInstance(good.B, good.Y, G, name='broken G')


def generated_instances(count: int = 10, seed: int = 0, u: Optional[Universe] = None) -> List[DnsInstance]:
    """
    Hypothesis-satisfying instances: B(n) drawn from N_K diagonals, U and ⊤, Y firing on
    every combination of basis elements, G_n probing one basis element of B(n).
    """
    u = u or default_universe()
    rng = random.Random(seed)
    choices = [lambda: eq_pred('N_K', 0, 0), lambda: eq_pred('N_K', 1, 1), lambda: U_PROP, lambda: TOP_PROP]
    instances = []
    for index in range(count):
        size = rng.randint(1, 2)
        B = [rng.choice(choices)() for _ in range(size)]
        bases = [list(b.basis(u)) for b in B]
        Y = SequenceFunctional.from_table(itertools.product(*bases), size)
        G = FunctionalFamily([ProbeFunctional.from_table([rng.choice(basis)], [[0]]) for basis in bases])
        instances.append(DnsInstance(B, Y, G, name=f'generated {index}'))
    return instances


######################################################################################


class PLType(object):
    """ A type over Σ and D with its proof-like values PL_X and a finite set of PL probes """
    def probes(self, u: Universe) -> List[Any]:
        raise RuntimeError(f'{type(self).__name__}.probes() not implemented')

    def check(self, x, u: Universe) -> bool:
        raise RuntimeError(f'{type(self).__name__}.check() not implemented')

    def __repr__(self): return str(self)


class SigmaType(PLType):
    """ PL_Σ = {⊥} """
    def probes(self, u): return [False]
    def check(self, x, u): return x is False
    def __str__(self): return 'Σ'


class DType(PLType):
    """ PL_D = P; probes are the proof-like cliques of W(2, 2) """
    def probes(self, u):
        return [t for t in Universe(2, 2, u.fuel, u.ctx).cliques() if is_prooflike(t).yes]

    def check(self, x, u):
        return is_prooflike(x, u).yes

    def __str__(self): return 'D'


class Arrow(PLType):
    """ PL_{X→Y} = {f | ∀x ∈ PL_X. f(x) ∈ PL_Y}, checked on the probes of X """
    def __init__(self, source: PLType, target: PLType):
        self.source = source
        self.target = target

    def check(self, f, u):
        return all(self.target.check(f(x), u) for x in self.source.probes(u))

    def probes(self, u):
        values = self.target.probes(u)
        if isinstance(self.source, Omega):
            found = [SequenceFunctional(lambda s, y=y: y, 0, name=f'λs.{y}') for y in values]
            if isinstance(self.source.item, DType) and isinstance(self.target, SigmaType):
                for pi in Universe(2, 2, u.fuel, u.ctx).prooflike_stacks():
                    found.append(SequenceFunctional(
                        lambda s, pi=pi: evaluate(Process(s.component(0), pi), universe=u).top, 1, name=f'λs.s₀⋆{pi}'))
            return found
        if isinstance(self.source, Arrow):
            found = [ProbeFunctional(lambda f, y=y: y, (), name=f'λf.{y}') for y in values]
            if isinstance(self.target, SigmaType) and isinstance(self.source.source, DType):
                found.extend(ProbeFunctional.from_table([p], [[0]]) for p in self.source.source.probes(u)[:2])
            return found
        found = [lambda x, y=y: y for y in values]
        if isinstance(self.source, DType) and isinstance(self.target, SigmaType):
            for pi in Universe(2, 2, u.fuel, u.ctx).prooflike_stacks():
                found.append(lambda x, pi=pi: evaluate(Process(x, pi), universe=u).top)
        return found

    def __str__(self): return f'({self.source} → {self.target})'


class Omega(PLType):
    """ PL_{X^ω} = PL_X^ω """
    def __init__(self, item: PLType):
        self.item = item

    def check(self, x, u):
        return all(self.item.check(x.component(n), u) for n in range(len(x) + 1))

    def probes(self, u):
        values = self.item.probes(u)
        if isinstance(self.item, Arrow) and isinstance(self.item.source, Arrow):
            make = lambda prefix, tail: FunctionalFamily(prefix, tail)
        elif isinstance(self.item, DType):
            make = TermSequence
        else:
            make = InfiniteSequence
        return [make((), v) for v in values] + [make((v,), values[0]) for v in values]

    def __str__(self): return f'{self.item}^ω'


class Star(PLType):
    """ PL_{X*} = PL_X*, lists up to length 2 as probes """
    def __init__(self, item: PLType):
        self.item = item

    def check(self, x, u):
        return all(self.item.check(v, u) for v in x)

    def probes(self, u):
        values = self.item.probes(u)
        return [()] + [(v,) for v in values] + [tuple(p) for p in itertools.product(values, repeat=2)]

    def __str__(self): return f'{self.item}*'


SIGMA = SigmaType()
D_TYPE = DType()

# (D^ω → Σ) and ((D → Σ) → Σ)^ω, the argument types of BR
Y_TYPE = Arrow(Omega(D_TYPE), SIGMA)
G_TYPE = Omega(Arrow(Arrow(D_TYPE, SIGMA), SIGMA))
BR_TYPE = Arrow(G_TYPE, Arrow(Y_TYPE, SIGMA))


def pl_check(x, kind: PLType, u: Optional[Universe] = None) -> bool:
    return kind.check(x, u or default_universe())


def br_functional(u: Optional[Universe] = None) -> Callable:
    """ λG. λY. BR(Y, G)(⟨⟩) with ⊤ ↦ True, ⊥ ↦ False and Inconclusive ↦ None """
    u = u or default_universe()
    return lambda G: (lambda Y: br(Y, G, (), u=u).value)


def br_prooflike_instances(u: Optional[Universe] = None) -> List[str]:
    """ Instances of the PL probes where BR does not answer ⊥ """
    u = u or default_universe()
    failures = []
    for G in G_TYPE.probes(u):
        for Y in Y_TYPE.probes(u):
            result = br(Y, G, (), u=u)
            if result.value is not False:
                failures.append(f'BR({Y}, {G})(⟨⟩) is {result}')
    return failures
