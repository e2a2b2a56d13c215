import os, json, pathlib, itertools
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, TypeVar

T = TypeVar('T')


def subsets(items: Sequence[T], max_size: Optional[int] = None) -> Iterator[Tuple[T, ...]]:
    """ All subsets of items as tuples, smallest first """
    items = list(items)
    last = len(items) if max_size is None else min(max_size, len(items))
    for size in range(last + 1):
        yield from itertools.combinations(items, size)


def proper_subsets(items: Sequence[T]) -> Iterator[Tuple[T, ...]]:
    items = list(items)
    for size in range(len(items)):
        yield from itertools.combinations(items, size)


def dedupe(items: Iterable[T]) -> List[T]:
    """ Drops repeated items, keeping first occurrences in order """
    seen = set()
    unique = []
    for item in items:
        if item not in seen:
            seen.add(item)
            unique.append(item)
    return unique


def canonical_json(data, indent: Optional[int] = 2) -> str:
    """ Byte-stable JSON: sorted keys, no trailing spaces, unicode kept """
    return json.dumps(data, sort_keys=True, indent=indent, ensure_ascii=False,
                      separators=(',', ': ') if indent else (',', ':'))


def token_string(token) -> str:
    """ Compact JSON form of a token, e.g. "[[2,[]]]" """
    return json.dumps(token.to_json(), separators=(',', ':'))


def read_text_from(file_path: str) -> str:
    return pathlib.Path(file_path).read_text(encoding='utf-8')


def write_text_to(file: str, text: str):
    dirname = os.path.dirname(file)
    if dirname and not os.path.exists(dirname):
        os.makedirs(dirname, exist_ok=True)
    pathlib.Path(file).write_text(text, encoding='utf-8')


class BoundedCache(object):
    """ A dict that forgets its oldest entries past `limit` """
    def __init__(self, limit: int):
        self.limit = max(1, limit)
        self._items = dict()

    def get(self, key, default=None):
        return self._items.get(key, default)

    def put(self, key, value):
        self._items.pop(key, None)
        self._items[key] = value
        while len(self._items) > self.limit:
            self._items.pop(next(iter(self._items)), None)

    def clear(self):
        self._items.clear()

    def __len__(self): return len(self._items)
    def __contains__(self, key): return key in self._items
