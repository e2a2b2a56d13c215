"""
Antichains of finite cliques under the Smyth order.

An AntichainRep stands for the up-set ↑min(C) of its minimal elements, a disjoint
union of cones. Two conditions make it a lattice element:
    (1) C ⊆ ↑min(C)
    (2) coherent (compatible) elements of min(C) are equal
Meets intersect the up-sets, ordered by ⊇ this is the lattice meet.
"""
from __future__ import annotations
import itertools, random
from typing import FrozenSet, Iterable, List, Optional, Sequence

from .cliques import FiniteTerm, Stack, Term
from .errors import AntichainError, IllPosedInput
from .token_core import _coherent
from .types.token import Token, TokenContext, get_context
from .types.universe import Universe


Point = FrozenSet[Token]


def compatible(x: Point, y: Point, ctx: Optional[TokenContext] = None) -> bool:
    """ x ∪ y is still a clique """
    ctx = get_context(ctx)
    return all(_coherent(a, b, ctx) for a in x for b in y)


def _order(points: Iterable[Point]) -> List[Point]:
    return sorted(points, key=lambda p: (len(p), sorted(t.key for t in p)))


def minimal_points(points: Iterable[Point]) -> List[Point]:
    points = set(points)
    return _order(p for p in points if not any(q < p for q in points))


class AntichainRep(object):
    def __init__(self, min_elems: Iterable[Iterable[Token]], ctx: Optional[TokenContext] = None, check: bool = True):
        self.ctx = get_context(ctx)
        self.min_elems: List[Point] = _order({frozenset(x) for x in min_elems})
        if check:
            violations = self.violations()
            if violations:
                raise IllPosedInput(f'not an antichain: {violations[0]}')

    @staticmethod
    def cone(x: Iterable[Token]) -> AntichainRep:
        return AntichainRep((x,))

    @staticmethod
    def everything() -> AntichainRep:
        """ ↑{∅}, the unit of the meet """
        return AntichainRep((frozenset(),))

    def upset_contains(self, x: Iterable[Token]) -> bool:
        x = frozenset(x)
        return any(m <= x for m in self.min_elems)

    def violations(self) -> List[str]:
        found = []
        for a, b in itertools.combinations(self.min_elems, 2):
            if a < b or b < a:
                found.append(f'{_fmt(a)} and {_fmt(b)} are comparable')
            elif compatible(a, b, self.ctx):
                found.append(f'{_fmt(a)} and {_fmt(b)} are compatible but different')
        return found

    def check_conditions(self, points: Iterable[Iterable[Token]]) -> List[str]:
        """
        Both lattice conditions over an explicit finite sample of the up-set:
        every sampled member must lie above a minimal element, and minimal elements
        must be pairwise incompatible.
        """
        found = []
        for p in points:
            if not self.upset_contains(p):
                found.append(f'{_fmt(frozenset(p))} lies above no minimal element')
        return found + self.violations()

    def terms(self) -> List[FiniteTerm]:
        return [FiniteTerm(m, check=False) for m in self.min_elems]

    def __eq__(self, other):
        return isinstance(other, AntichainRep) and self.min_elems == other.min_elems

    def __hash__(self): return hash(tuple(self.min_elems))
    def __len__(self):  return len(self.min_elems)
    def __str__(self):  return '↑{' + ', '.join(_fmt(m) for m in self.min_elems) + '}'
    def __repr__(self): return f'AntichainRep({self})'

    def to_json(self):
        return [[t.to_json() for t in sorted(m, key=lambda t: t.key)] for m in self.min_elems]


def _fmt(x: Point) -> str:
    return '{' + ', '.join(str(t) for t in sorted(x, key=lambda t: t.key)) + '}'


def smyth_leq(a: AntichainRep, b: AntichainRep) -> bool:
    """ a ≤_S b iff ↑a ⊇ ↑b, every minimal element of b dominates one of a """
    return all(a.upset_contains(y) for y in b.min_elems)


def _meet2(a: AntichainRep, b: AntichainRep, ctx: TokenContext) -> AntichainRep:
    unions = {x | y for x in a.min_elems for y in b.min_elems if compatible(x, y, ctx)}
    result = AntichainRep(minimal_points(unions), ctx, check=False)
    violations = result.violations()
    if violations:
        raise AntichainError(f'meet of {a} and {b} is not an antichain: {violations[0]}')
    return result


def antichain_meet(family: Iterable[AntichainRep], ctx: Optional[TokenContext] = None) -> AntichainRep:
    """ ↑m = ∩ ↑C_i; the minimal elements are the minimal compatible unions """
    ctx = get_context(ctx)
    result = AntichainRep.everything()
    for c in family:
        result = _meet2(result, c, ctx)
    return result


def minimize_orthogonal(t: Term, stacks: Sequence[Stack], u: Optional[Universe] = None) -> FiniteTerm:
    """
    For t firing on every stack of C, keeps only the tokens of t that lie in some
    stack of C. The result still fires on all of C and lies below t.
    """
    tokens = t.tokens() if t.is_finite else t.tokens(u)
    kept = [alpha for alpha in tokens if any(pi.contains(alpha) is True for pi in stacks)]
    return FiniteTerm(kept, check=False)


def random_antichain(pool: Sequence[FiniteTerm], rng: random.Random, size: int = 3) -> AntichainRep:
    """ Greedy antichain of up to `size` pairwise incompatible cliques drawn from pool """
    chosen: List[Point] = []
    for term in rng.sample(list(pool), len(pool)):
        x = term.token_set
        if all(not compatible(x, y) for y in chosen):
            chosen.append(x)
            if len(chosen) >= size:
                break
    return AntichainRep(chosen)


def random_families(count: int, seed: int, pool: Sequence[FiniteTerm], members: int = 3) -> List[List[AntichainRep]]:
    rng = random.Random(seed)
    return [[random_antichain(pool, rng, rng.randint(1, 3)) for _ in range(rng.randint(1, members))]
            for _ in range(count)]
