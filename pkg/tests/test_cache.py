import threading

import pytest

from harmony import sequences
from harmony.cache import SeqCache


def _counting_extend(calls):
    def extend(table, n):
        calls.append(n)
        for i in range(len(table), n + 1):
            table.append(i * i)
    return extend


def test_prefix_extends_once(cache):
    calls = []
    extend = _counting_extend(calls)
    assert cache.value(('squares', ()), 5, extend) == 25
    assert cache.value(('squares', ()), 3, extend) == 9
    assert calls == [5]
    assert cache.value(('squares', ()), 8, extend) == 64
    assert calls == [5, 8]


def test_contains_len_clear(cache):
    assert len(cache) == 0
    assert ('squares', ()) not in cache
    cache.value(('squares', ()), 2, _counting_extend([]))
    assert ('squares', ()) in cache
    assert len(cache) == 1
    cache.clear()
    assert len(cache) == 0


def test_cache_is_isolated():
    first, second = SeqCache(), SeqCache()
    sequences.harmonic(10, cache=first)
    assert ('harmonic', ()) in first
    assert ('harmonic', ()) not in second


def test_nested_extension(cache):
    assert sequences.harmonic_like(6, 3, cache=cache) == \
        sequences.harmonic_like(6, 3)
    for m in range(4):
        assert ('harmonic_like', (m,)) in cache


def test_concurrent_readers_agree(cache):
    results = []

    def work():
        results.append([sequences.harmonic_like(n, 2, cache=cache)
                        for n in range(40)])

    threads = [threading.Thread(target=work) for _ in range(8)]
    for thread in threads:
        thread.start()
    for thread in threads:
        thread.join()
    assert len(results) == 8
    assert all(result == results[0] for result in results)


def _no_extend(table, n):
    raise AssertionError('table should already be warm')


@pytest.mark.parametrize('key,evaluate', [
    (('harmonic', ()), lambda n, cache: sequences.harmonic(n, cache=cache)),
    (('stirling1', (3,)),
     lambda n, cache: sequences.stirling1(n, 3, cache=cache)),
    (('hyperharmonic', (2,)),
     lambda n, cache: sequences.hyperharmonic(n, 2, cache=cache)),
])
def test_warm_and_cold_values_agree(cache, key, evaluate):
    for n in range(31):
        evaluate(n, cache)
    warm = list(cache.prefix(key, 30, _no_extend)[:31])
    cache.clear()
    cold = [evaluate(n, cache) for n in reversed(range(31))][::-1]
    assert cold == warm
    assert [evaluate(n, SeqCache()) for n in range(31)] == warm
