from __future__ import annotations
import itertools
from typing import Dict, List, Optional, TYPE_CHECKING

from .token import Token, TokenContext, get_context

if TYPE_CHECKING:
    from ..cliques import FiniteTerm, Stack


DEFAULT_LEVEL = 3
DEFAULT_WIDTH = 2
DEFAULT_FUEL = 100_000


class Universe:
    """
    Bounded enumeration parameters: W(level, width) is the finite sub-web of
    tokens of level ≤ level whose indices and entry-set sizes are < / ≤ width.
    `fuel` bounds every semidecidable search done against this universe.
    Token, term and stack tables are computed once and cached.
    """
    def __init__(self, level:int = DEFAULT_LEVEL, width:int = DEFAULT_WIDTH,
                 fuel:int = DEFAULT_FUEL, ctx: Optional[TokenContext] = None):
        if level < 0 or width < 0 or fuel < 0:
            raise ValueError(f'Universe bounds must be non-negative: level={level} width={width} fuel={fuel}')
        self.level = level
        self.width = width
        self.fuel = fuel
        self.ctx = get_context(ctx)
        self._tokens: Optional[List[Token]] = None
        self._positions: Optional[Dict[Token, int]] = None
        self._cliques: Dict[int, List[FiniteTerm]] = dict()
        self._stacks: Dict[int, List[Stack]] = dict()
        self._pool: Optional[List[FiniteTerm]] = None

    @property
    def key(self): return (self.level, self.width)

    def __str__(self):  return f'W({self.level},{self.width}) fuel={self.fuel}'
    def __repr__(self): return f'Universe({self.level}, {self.width}, fuel={self.fuel})'

    def with_fuel(self, fuel:int) -> Universe:
        return Universe(self.level, self.width, fuel, self.ctx)

    def tokens(self) -> List[Token]:
        if self._tokens is None:
            from ..token_core import enumerate_tokens
            self._tokens = enumerate_tokens(self, self.ctx)
            self._positions = {t: i for i, t in enumerate(self._tokens)}
        return self._tokens

    def position(self, token: Token) -> Optional[int]:
        self.tokens()
        return self._positions.get(token)

    def contains(self, token: Token) -> bool:
        return self.position(token) is not None

    def cliques(self, max_size: Optional[int] = None) -> List[FiniteTerm]:
        """ All cliques of W(u) with at most max_size tokens (default: width), by size then rank """
        from ..cliques import FiniteTerm
        from ..token_core import _coherent
        size = self.width if max_size is None else max_size
        found = self._cliques.get(size)
        if found is not None:
            return found
        tokens = self.tokens()
        n = len(tokens)
        adjacent = [[j for j in range(i + 1, n) if _coherent(tokens[i], tokens[j], self.ctx)] for i in range(n)]
        results = [()]
        def extend(chosen: tuple, candidates: List[int]):
            if len(chosen) == size:
                return
            for j in candidates:
                clique = chosen + (j,)
                results.append(clique)
                extend(clique, [k for k in adjacent[j] if k in candidates and k > j])
        extend((), list(range(n)))
        results.sort(key=lambda c: (len(c), c))
        terms = [FiniteTerm((tokens[i] for i in c), ctx=self.ctx, check=False) for c in results]
        self._cliques[size] = terms
        return terms

    def component_pool(self) -> List[FiniteTerm]:
        """ Stack components: cliques of W(level-1, width) with at most width tokens """
        if self._pool is None:
            if self.level <= 1:
                from ..cliques import BOT
                self._pool = [BOT]
            else:
                self._pool = Universe(self.level - 1, self.width, self.fuel, self.ctx).cliques()
        return self._pool

    def stacks(self, length: Optional[int] = None) -> List[Stack]:
        """
        Every Empty-tail sequence stack of the given length (default: width) over the component pool.
        A term made of W(u) tokens fires on a stack iff it fires on one of these.
        """
        from ..cliques import Stack
        length = self.width if length is None else length
        found = self._stacks.get(length)
        if found is None:
            pool = self.component_pool()
            found = [Stack.seq(items) for items in itertools.product(pool, repeat=length)]
            self._stacks[length] = found
        return found

    def prooflike_stacks(self, length: Optional[int] = None) -> List[Stack]:
        return [s for s in self.stacks(length) if s.is_prooflike()]

    def warm(self):
        """ Fill the caches before handing the universe to worker threads """
        self.tokens()
        self.cliques()
        self.stacks()
        return self
