from cohrealize.cliques import MEMO_UNIVERSES, IdentityTerm, numeral
from cohrealize.stable_maps import FUN_VALUES_LIMIT, FunTerm
from cohrealize.types.universe import Universe
from cohrealize.util import BoundedCache


class TestBoundedCache:
    def test_oldest_entries_go_first(self):
        cache = BoundedCache(2)
        cache.put('a', 1)
        cache.put('b', 2)
        cache.put('c', 3)
        assert len(cache) == 2
        assert 'a' not in cache
        assert cache.get('b') == 2 and cache.get('c') == 3

    def test_put_refreshes(self):
        cache = BoundedCache(2)
        cache.put('a', 1)
        cache.put('b', 2)
        cache.put('a', 10)
        cache.put('c', 3)
        assert cache.get('a') == 10
        assert 'b' not in cache

    def test_clear(self):
        cache = BoundedCache(3)
        cache.put('a', 1)
        cache.clear()
        assert len(cache) == 0
        assert cache.get('a', 'missing') == 'missing'


class TestTermCaches:
    def test_lazy_terms_keep_a_few_universes(self):
        term = IdentityTerm()
        universes = [Universe(level, width) for level in (1, 2) for width in range(1, 6)]
        for u in universes:
            assert len(term.tokens(u)) == len(u.tokens())
        assert len(term._memo) == MEMO_UNIVERSES
        assert term.tokens(universes[-1]) is term.tokens(universes[-1])

    def test_abstractions_keep_a_bounded_number_of_values(self):
        calls = []
        f = FunTerm(lambda a: calls.append(a) or a)
        for n in range(FUN_VALUES_LIMIT + 5):
            assert f.apply_to(numeral(n)) == numeral(n)
        assert len(f._values) == FUN_VALUES_LIMIT
        f.apply_to(numeral(FUN_VALUES_LIMIT + 4))
        assert len(calls) == FUN_VALUES_LIMIT + 5
