from __future__ import annotations
import threading
from typing import Dict, Iterable, List, Optional, Tuple


class Token(object):
    """
    A hereditarily finite set of (index, child) pairs, an element of V = P_fin(ω×V).
    Entries are kept sorted by (index, child.key) so that `key` is canonical:
    two tokens are equal iff their keys are equal.
    Tokens are immutable; build them through a TokenContext so they get interned.
    """
    __slots__ = ('entries', 'key', '_hash')

    def __init__(self, entries: Tuple[Tuple[int, Token], ...], key: tuple):
        self.entries = entries
        self.key = key
        self._hash = hash(key)

    def __hash__(self): return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, Token) and self._hash == other._hash and self.key == other.key

    def __ne__(self, other): return not self.__eq__(other)
    def __lt__(self, other: Token): return self.key < other.key
    def __len__(self): return len(self.entries)
    def __bool__(self): return True
    def __iter__(self): return iter(self.entries)

    def is_empty(self) -> bool:
        return not self.entries

    def indices(self) -> List[int]:
        return sorted({i for i, _ in self.entries})

    def to_json(self) -> list:
        return [[i, child.to_json()] for i, child in self.entries]

    def __str__(self):
        if not self.entries:
            return '∅'
        return '{' + ','.join(f'({i},{child})' for i, child in self.entries) + '}'

    def __repr__(self): return f'Token{self}'


def _entry_order(entry):
    return (entry[0], entry[1].key)


class TokenContext:
    """
    Interning table plus memo tables for web membership, levels, grades,
    coherence and the token constructors.
    Reads are lock free, table growth is serialized by `lock`.
    """
    shared: Optional[TokenContext] = None

    def __init__(self):
        self.lock = threading.Lock()
        self.interned: Dict[tuple, Token] = dict()
        self.web: Dict[Token, object] = dict()      # Token -> WebVerdict
        self.levels: Dict[Token, int] = dict()
        self.grades: Dict[Token, int] = dict()
        self.coherence: Dict[Tuple[Token, Token], bool] = dict()
        self.conses: Dict[tuple, Token] = dict()
        self.empty = self.make(())

    @staticmethod
    def default() -> TokenContext:
        if TokenContext.shared is None:
            TokenContext.shared = TokenContext()
        return TokenContext.shared

    def make(self, entries: Iterable[Tuple[int, Token]]) -> Token:
        """ Canonicalizes and interns a token from (index, child) pairs """
        unique = sorted(set(entries), key=_entry_order)
        key = tuple((i, child.key) for i, child in unique)
        found = self.interned.get(key)
        if found is not None:
            return found
        with self.lock:
            found = self.interned.get(key)
            if found is None:
                found = Token(tuple(unique), key)
                self.interned[key] = found
            return found

    def remember(self, table: dict, key, value):
        with self.lock:
            table[key] = value
        return value

    def from_json(self, data) -> Token:
        if not isinstance(data, list):
            raise ValueError(f'token must be a JSON array, got {data!r}')
        pairs = []
        for pair in data:
            if not isinstance(pair, list) or len(pair) != 2 or not isinstance(pair[0], int) or pair[0] < 0:
                raise ValueError(f'token entry must be [index, token], got {pair!r}')
            pairs.append((pair[0], self.from_json(pair[1])))
        return self.make(pairs)

    def nu(self, n: int) -> Token:
        """ ν_n = {(n, ∅)} """
        return self.make(((n, self.empty),))

    def __len__(self): return len(self.interned)


def get_context(ctx: Optional[TokenContext] = None) -> TokenContext:
    return ctx if ctx is not None else TokenContext.default()
