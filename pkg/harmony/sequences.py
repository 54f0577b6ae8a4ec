"""Exact evaluation of the sequence families and their parameter specs.

Every evaluator takes an optional :py:class:`harmony.cache.SeqCache`; the
module-level :py:data:`DEFAULT_CACHE` is used otherwise. Values are
:py:class:`fractions.Fraction` (integers for Stirling, Fibonacci and Lucas).
"""

import logging
import math

import inflection

from harmony import abc, exception, properties
from harmony.cache import SeqCache
from harmony.exact_math import (ONE, ZERO, Rational, binomial,
                                central_binomial, gen_binomial, rsum)

logger = logging.getLogger(__name__)


DEFAULT_CACHE = SeqCache()

DEFAULT_BRUTEFORCE_CEILING = 200000


def _check_index(n, name='n'):
    if isinstance(n, bool) or not isinstance(n, int):
        raise exception.ValidationError(
            'Not a valid integer {}: {}'.format(name, n))
    if n < 0:
        raise exception.DomainError(
            'Negative {} not supported: {}'.format(name, n))
    return n


def _cache(cache):
    if cache is None:
        return DEFAULT_CACHE
    return cache


def harmonic(n, *, cache=None):
    """H_n = 1 + 1/2 + ... + 1/n, H_0 = 0."""
    _check_index(n)

    def extend(table, n):
        if not table:
            table.append(ZERO)
        for i in range(len(table), n + 1):
            table.append(table[-1] + Rational(1, i))

    return _cache(cache).value(('harmonic', ()), n, extend)


def harmonic_order(n, r, *, cache=None):
    """Generalized harmonic number H_n^(r) = sum of 1/k^r for k = 1..n."""
    _check_index(n)
    if _check_index(r, 'r') < 1:
        raise exception.DomainError('Order must be positive: {}'.format(r))

    def extend(table, n):
        if not table:
            table.append(ZERO)
        for i in range(len(table), n + 1):
            table.append(table[-1] + Rational(1, i ** r))

    return _cache(cache).value(('harmonic_order', (r,)), n, extend)


def odd_harmonic(n, *, cache=None):
    """O_n = 1 + 1/3 + ... + 1/(2n - 1), O_0 = 0."""
    _check_index(n)

    def extend(table, n):
        if not table:
            table.append(ZERO)
        for i in range(len(table), n + 1):
            table.append(table[-1] + Rational(1, 2 * i - 1))

    return _cache(cache).value(('odd_harmonic', ()), n, extend)


def harmonic_like(n, m, *, cache=None):
    """
    Multiple harmonic-like number H_n(m).

    Built row by row from H_n(m + 1) = sum_{j=1..n} H_{n-j}(m) / j with
    H_n(0) = 1 and H_0(m) = 0 for m >= 1.

    :param int n: Index
    :param int m: Order (number of parts)

    :returns: :py:class:`fractions.Fraction`
    """
    _check_index(n)
    _check_index(m, 'm')
    cache = _cache(cache)
    return cache.value(
        ('harmonic_like', (m,)), n,
        lambda t, top: _extend_harmonic_like(t, top, m, cache))


def _extend_harmonic_like(table, n, m, cache):
    if m == 0:
        table.extend(ONE for _ in range(len(table), n + 1))
        return
    prev = cache.prefix(
        ('harmonic_like', (m - 1,)), n,
        lambda t, top: _extend_harmonic_like(t, top, m - 1, cache))
    for i in range(len(table), n + 1):
        table.append(rsum(prev[i - j] / j for j in range(1, i + 1)))


def compositions(total, parts):
    """
    Lazily yield the ``parts``-tuples of positive integers whose sum is at
    most ``total``. There are C(total, parts) of them.
    """
    if parts == 0:
        yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def harmonic_like_bruteforce(n, m, *, ceiling=DEFAULT_BRUTEFORCE_CEILING):
    """
    H_n(m) as the literal sum of 1/(k_1...k_m) over all m-tuples of
    positive integers with k_1 + ... + k_m <= n. Independent of the
    recurrence used by :py:func:`harmonic_like`.

    :param int ceiling: Largest tuple count that will be enumerated

    :raises harmony.exception.FeasibilityError: when C(n, m) > ceiling
    """
    _check_index(n)
    if _check_index(m, 'm') < 1:
        raise exception.DomainError(
            'Brute force needs at least one part: m = {}'.format(m))
    count = binomial(n, m)
    if count > ceiling:
        raise exception.FeasibilityError(
            'Refusing to enumerate {} tuples for H_{}({}), ceiling is {}'
            .format(count, n, m, ceiling))
    logger.debug('Enumerating {} tuples for H_{}({})'.format(count, n, m))
    return rsum(Rational(1, math.prod(parts))
                for parts in compositions(n, m))


def stirling1(n, k, *, cache=None):
    """
    Signed Stirling number of the first kind s(n, k), from the triangle
    s(n + 1, k) = s(n, k - 1) - n s(n, k) with s(0, 0) = 1.
    """
    _check_index(n)
    _check_index(k, 'k')
    cache = _cache(cache)
    return cache.value(('stirling1', (k,)), n,
                       lambda t, top: _extend_stirling(t, top, k, cache))


def _extend_stirling(table, n, k, cache):
    if k == 0:
        for i in range(len(table), n + 1):
            table.append(1 if i == 0 else 0)
        return
    prev = cache.prefix(('stirling1', (k - 1,)), n,
                        lambda t, top: _extend_stirling(t, top, k - 1, cache))
    if not table:
        table.append(0)
    for i in range(len(table), n + 1):
        table.append(prev[i - 1] - (i - 1) * table[i - 1])


def hyperharmonic(n, p, *, cache=None):
    """
    Hyperharmonic number H_{n,p} = sum_{i=1..n} H_{i,p-1} with
    H_{n,0} = 1/n and H_{0,p} = 0.

    :raises harmony.exception.DomainError: for H_{0,0}, which is undefined
    """
    _check_index(n)
    _check_index(p, 'p')
    if n == 0 and p == 0:
        raise exception.DomainError('H_{0,0} is undefined')
    cache = _cache(cache)
    return cache.value(('hyperharmonic', (p,)), n,
                       lambda t, top: _extend_hyperharmonic(t, top, p, cache))


def _extend_hyperharmonic(table, n, p, cache):
    if p == 0:
        if not table:
            table.append(None)
        for i in range(len(table), n + 1):
            table.append(Rational(1, i))
        return
    prev = cache.prefix(
        ('hyperharmonic', (p - 1,)), n,
        lambda t, top: _extend_hyperharmonic(t, top, p - 1, cache))
    if not table:
        table.append(ZERO)
    for i in range(len(table), n + 1):
        table.append(table[i - 1] + prev[i])


def hyperharmonic_closed(n, p, *, cache=None):
    """Compact form H_{n,p} = C(n + p - 1, n) (H_{n+p-1} - H_{p-1}), p >= 1."""
    _check_index(n)
    if _check_index(p, 'p') < 1:
        raise exception.DomainError(
            'Compact form needs order >= 1: p = {}'.format(p))
    return binomial(n + p - 1, n) * (harmonic(n + p - 1, cache=cache) -
                                     harmonic(p - 1, cache=cache))


def hyperharmonic_half(r, p, *, cache=None):
    """
    Half-integer hyperharmonic number H_{r,p+1/2} through central binomials:
    2^(1-2r) C(2p,p)^-1 C(2(r+p), r+p) C(r+p, r) (O_{r+p} - O_p).
    """
    _check_index(r, 'r')
    _check_index(p, 'p')
    scale = Rational(2 * central_binomial(r + p) * binomial(r + p, r),
                     4 ** r * central_binomial(p))
    return scale * (odd_harmonic(r + p, cache=cache) -
                    odd_harmonic(p, cache=cache))


def hyperharmonic_half_binomial(r, p, *, cache=None):
    """
    H_{r,p+1/2} through the compact form at a half-integer order:
    C(r + p - 1/2, r) (H_{r+p-1/2} - H_{p-1/2}).
    """
    _check_index(r, 'r')
    _check_index(p, 'p')
    coefficient = gen_binomial(Rational(2 * (r + p) - 1, 2), r)
    return coefficient * (half_harmonic_offset(r + p, cache=cache) -
                          half_harmonic_offset(p, cache=cache))


def half_harmonic_offset(n, *, cache=None):
    """
    Normalized half-integer harmonic number H_{n-1/2} - H_{-1/2}.

    Defined for every integer n by the step H_x - H_{x-1} = 1/x at
    x = j - 1/2; for n >= 0 it equals 2 O_n. Negative n reach the values
    below H_{-1/2}, e.g. n = -1 gives H_{-3/2} - H_{-1/2} = 2.
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise exception.ValidationError('Not a valid integer n: {}'.format(n))
    if n < 0:
        return -rsum(Rational(2, 2 * j - 1) for j in range(n + 1, 1))

    def extend(table, n):
        if not table:
            table.append(ZERO)
        for j in range(len(table), n + 1):
            table.append(table[-1] + Rational(2, 2 * j - 1))

    return _cache(cache).value(('half_harmonic_offset', ()), n, extend)


def _linear_recurrence(first, second):
    def extend(table, n):
        if not table:
            table.extend((first, second))
        for i in range(len(table), n + 1):
            table.append(table[i - 1] + table[i - 2])
    return extend


def fibonacci(n, *, cache=None):
    _check_index(n)
    return _cache(cache).value(('fibonacci', ()), n, _linear_recurrence(0, 1))


def lucas(n, *, cache=None):
    _check_index(n)
    return _cache(cache).value(('lucas', ()), n, _linear_recurrence(2, 1))


# Sequence specs
class FamilyMeta(type):
    """
    Metaclass for sequence families. Derives the stable family name from the
    class name and replaces user defined
    :py:class:`harmony.properties.Parameter` with
    :py:class:`harmony.properties.ParameterDescriptor`.
    """

    def __new__(cls, name, bases, namespace, **kwargs):
        params = {}
        for base in bases:
            params.update(getattr(base, '__parameters__', {}))
        if not namespace.get('__family__', None):
            namespace['__family__'] = inflection.underscore(name)
        new_namespace = {}
        for k, v in namespace.items():
            if isinstance(v, abc.BaseParameter):
                params[k] = v
                v = v.__descriptor__(k, v)
            new_namespace[k] = v
        new_namespace['__parameters__'] = params
        return type.__new__(cls, name, bases, new_namespace)


class Family(metaclass=FamilyMeta):
    """
    Base class for sequence families. An instance binds the family's
    parameters and is the SeqSpec: calling it evaluates the sequence.

    :param harmony.cache.SeqCache cache: Memo tables (default shared cache)
    """

    def __init__(self, *, cache=None, **params):
        for key in params:
            if key not in self.__parameters__:
                raise exception.ValidationError(
                    'Unexpected parameter {} for family {}'.format(
                        key, self.__family__))
        for key, param in self.__parameters__.items():
            if key in params:
                setattr(self, key, params[key])
            elif param.required:
                raise exception.ValidationError(
                    'Missing parameter {} for family {}'.format(
                        key, self.__family__))
        self._cache = _cache(cache)

    @property
    def cache(self):
        return self._cache

    @property
    def params(self):
        return {key: getattr(self, key) for key in self.__parameters__}

    def evaluate(self, n):
        raise NotImplementedError

    def __call__(self, n):
        return self.evaluate(n)

    def table(self, n_max):
        """Rows ``(n, value)`` for ``n = 0..n_max``."""
        return [(n, self.evaluate(n)) for n in range(n_max + 1)]

    def __repr__(self):
        params = ', '.join('{}={}'.format(k, v)
                           for k, v in sorted(self.params.items()))
        return '<{}({})>'.format(self.__class__.__name__, params)


class Harmonic(Family):
    def evaluate(self, n):
        return harmonic(n, cache=self.cache)


class HarmonicOrder(Family):
    r = properties.Parameter(properties.PositiveInteger)

    def evaluate(self, n):
        return harmonic_order(n, self.r, cache=self.cache)


class OddHarmonic(Family):
    def evaluate(self, n):
        return odd_harmonic(n, cache=self.cache)


class HarmonicLike(Family):
    m = properties.Parameter(properties.NonNegativeInteger)

    def evaluate(self, n):
        return harmonic_like(n, self.m, cache=self.cache)


class Stirling1(Family):
    k = properties.Parameter(properties.NonNegativeInteger)

    def evaluate(self, n):
        return stirling1(n, self.k, cache=self.cache)


class Hyperharmonic(Family):
    p = properties.Parameter(properties.NonNegativeInteger)

    def evaluate(self, n):
        return hyperharmonic(n, self.p, cache=self.cache)


class HyperharmonicHalf(Family):
    """H_{n,p+1/2}; the sequence index plays the role of r."""

    p = properties.Parameter(properties.NonNegativeInteger)

    def evaluate(self, n):
        return hyperharmonic_half(n, self.p, cache=self.cache)


class Fibonacci(Family):
    def evaluate(self, n):
        return fibonacci(n, cache=self.cache)


class Lucas(Family):
    def evaluate(self, n):
        return lucas(n, cache=self.cache)


class HalfHarmonicOffset(Family):
    def evaluate(self, n):
        return half_harmonic_offset(n, cache=self.cache)


FAMILIES = {
    family.__family__: family
    for family in (Harmonic, HarmonicOrder, OddHarmonic, HarmonicLike,
                   Stirling1, Hyperharmonic, HyperharmonicHalf, Fibonacci,
                   Lucas, HalfHarmonicOffset)
}


def spec(family, *, cache=None, **params):
    """
    Build a sequence spec from its public family name.

    :param str family: One of :py:data:`FAMILIES`
    :param params: Exactly the parameters the family requires

    :returns: :py:class:`Family` instance
    """
    try:
        family_class = FAMILIES[family]
    except KeyError:
        raise exception.RegistryError(
            'Unknown sequence family: {}'.format(family))
    return family_class(cache=cache, **params)
