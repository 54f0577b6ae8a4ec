"""Truncated formal power series over the rationals.

Series are immutable. Binary operations between series of different
truncation orders truncate to the smaller order. All constructors take the
truncation order as their last argument.
"""

import functools
import logging
import math

from harmony import exception, sequences
from harmony.exact_math import (ONE, ZERO, Rational, binomial,
                                central_binomial, rsum)

logger = logging.getLogger(__name__)


class TruncatedSeries:
    """
    Coefficients ``0..order`` of a formal power series in ``z``.

    :param coeffs: Iterable of rationals (ints are accepted)
    """

    __slots__ = ('_coeffs',)

    def __init__(self, coeffs):
        coeffs = tuple(Rational(c) for c in coeffs)
        if not coeffs:
            raise exception.ValidationError(
                'A series needs at least the constant coefficient')
        self._coeffs = coeffs

    @property
    def order(self):
        return len(self._coeffs) - 1

    @property
    def coeffs(self):
        return self._coeffs

    def truncate(self, order):
        if order > self.order:
            raise exception.ValidationError(
                'Cannot raise truncation order {} to {}'.format(
                    self.order, order))
        return TruncatedSeries(self._coeffs[:order + 1])

    def __getitem__(self, n):
        return self._coeffs[n]

    def __len__(self):
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return '<TruncatedSeries(order={}, [{}])>'.format(
            self.order, ', '.join(str(c) for c in self._coeffs))

    def _common(self, other):
        order = min(self.order, other.order)
        return self._coeffs[:order + 1], other._coeffs[:order + 1]

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        left, right = self._common(other)
        return TruncatedSeries(x + y for x, y in zip(left, right))

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        left, right = self._common(other)
        return TruncatedSeries(x - y for x, y in zip(left, right))

    def __neg__(self):
        return TruncatedSeries(-c for c in self._coeffs)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            left, right = self._common(other)
            return TruncatedSeries(
                rsum(left[i] * right[n - i] for i in range(n + 1))
                for n in range(len(left)))
        if isinstance(other, (int, Rational)):
            return TruncatedSeries(c * other for c in self._coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, m):
        return power(self, m)


def zero(order):
    return TruncatedSeries([ZERO] * (order + 1))


def constant(c, order):
    return TruncatedSeries([c] + [ZERO] * order)


def variable(order):
    """The series ``z``."""
    if order == 0:
        return zero(0)
    return TruncatedSeries([ZERO, ONE] + [ZERO] * (order - 1))


def geometric(a, order):
    """1 / (1 - a z)"""
    a = Rational(a)
    return TruncatedSeries(a ** n for n in range(order + 1))


def neg_log_one_minus(a, order):
    """
    -ln(1 - a z) = sum over k >= 1 of a^k z^k / k.

    :param a: Rational multiplier of ``z``
    :param int order: Truncation order
    """
    a = Rational(a)
    return TruncatedSeries(
        [ZERO] + [a ** k / k for k in range(1, order + 1)])


def log_one_plus(order):
    """ln(1 + z), as the negation of -ln(1 - (-1) z)."""
    return -neg_log_one_minus(-1, order)


def polylog(r, order):
    """Li_r(z) = sum over k >= 1 of z^k / k^r."""
    return TruncatedSeries(
        [ZERO] + [Rational(1, k ** r) for k in range(1, order + 1)])


def power(f, m):
    """f^m by repeated Cauchy product; f^0 is the constant series 1."""
    if m < 0:
        raise exception.DomainError(
            'Negative series power {}, use inverse()'.format(m))
    result = constant(ONE, f.order)
    for _ in range(m):
        result = result * f
    return result


def inverse(f):
    """
    Multiplicative inverse, from g_0 = 1/f_0 and
    g_n = -(f_1 g_{n-1} + ... + f_n g_0) / f_0.

    :raises harmony.exception.DomainError: when f(0) = 0
    """
    head = f[0]
    if head == 0:
        raise exception.DomainError(
            'Series with zero constant term has no inverse')
    g = [ONE / head]
    for n in range(1, f.order + 1):
        g.append(-rsum(f[i] * g[n - i] for i in range(1, n + 1)) / head)
    return TruncatedSeries(g)


def sqrt(f):
    """
    Square root with g(0) = 1, from g_n = (f_n - sum_{i=1..n-1} g_i g_{n-i}) / 2.

    :raises harmony.exception.DomainError: when f(0) != 1
    """
    if f[0] != 1:
        raise exception.DomainError(
            'Series square root needs constant term 1, got {}'.format(f[0]))
    g = [ONE]
    for n in range(1, f.order + 1):
        g.append((f[n] - rsum(g[i] * g[n - i] for i in range(1, n))) / 2)
    return TruncatedSeries(g)


def scale(f, c):
    """f(c z)"""
    c = Rational(c)
    return TruncatedSeries(coeff * c ** n for n, coeff in enumerate(f))


def compose_mobius(f, a, b, order=None):
    """
    f(a z / (1 - b z)), using
    [z^n] (a z)^k / (1 - b z)^k = a^k C(n-1, n-k) b^(n-k) for k >= 1.

    :param TruncatedSeries f: Outer series
    :param a: Rational
    :param b: Rational
    :param int order: Truncation order, at most ``f.order``
    """
    a, b = Rational(a), Rational(b)
    if order is None or order > f.order:
        order = f.order
    coeffs = [f[0]]
    for n in range(1, order + 1):
        coeffs.append(rsum(f[k] * a ** k * binomial(n - 1, n - k) *
                           b ** (n - k) for k in range(1, n + 1)))
    return TruncatedSeries(coeffs)


# Generating functions of the sequence families
def gf_harmonic_like(m, order):
    """(-ln(1 - z))^m / (1 - z), whose coefficients are H_n(m)."""
    return power(neg_log_one_minus(1, order), m) * geometric(1, order)


def gf_stirling_column(k, order):
    """ln(1 + z)^k / k!, the exponential generating function of s(n, k)."""
    return power(log_one_plus(order), k) * Rational(1, math.factorial(k))


def gf_hyperharmonic(p, order):
    """
    -ln(1 - z) / (1 - z)^p, whose coefficients are H_{n,p}. For p = 0 the
    constant coefficient stands in for the undefined H_{0,0}.
    """
    return neg_log_one_minus(1, order) * power(geometric(1, order), p)


def gf_hyperharmonic_half(p, order):
    """-ln(1 - z) / (1 - z)^(p + 1/2), whose coefficients are H_{r,p+1/2}."""
    return gf_hyperharmonic(p, order) * inverse(sqrt(_one_minus(1, order)))


def gf_central_binomial(order):
    """1 / sqrt(1 - 4z) = sum of C(2n, n) z^n"""
    return inverse(sqrt(_one_minus(4, order)))


def gf_odd_central(order):
    """
    sqrt(1 - 4z) (-ln(1 - 4z)) / (2 (1 - 4z)), whose coefficients are
    C(2n, n) O_n.
    """
    return (sqrt(_one_minus(4, order)) * neg_log_one_minus(4, order) *
            geometric(4, order) * Rational(1, 2))


def gf_odd_harmonic(order):
    """(1 / (1 - z)) sum over k >= 1 of z^k / (2k - 1), coefficients O_n."""
    odd = TruncatedSeries(
        [ZERO] + [Rational(1, 2 * k - 1) for k in range(1, order + 1)])
    return odd * geometric(1, order)


def gf_harmonic_order(r, order):
    """Li_r(z) / (1 - z), coefficients H_n^(r)."""
    return polylog(r, order) * geometric(1, order)


def gf_binomial_sum(a, b, m, order):
    """
    Generating function of S_n(a, b, m) in n:
    H(a z / (1 - b z)) / (1 - b z) with H the generating function of H_n(m).
    """
    return geometric(b, order) * compose_mobius(
        cached(gf_harmonic_like, order, m), a, b, order)


def _one_minus(a, order):
    if order == 0:
        return constant(ONE, 0)
    return TruncatedSeries([ONE, -Rational(a)] + [ZERO] * (order - 1))


@functools.lru_cache(maxsize=256)
def _cached(builder, order, args):
    logger.debug('Building {}{} to order {}'.format(
        builder.__name__, args, order))
    return builder(*args, order)


def cached(builder, order, *args):
    """
    Memoized ``builder(*args, order)``. Orders are rounded up to a power of
    two (at least 16) so that nearby requests share one build.
    """
    bucket = 16
    while bucket < order:
        bucket *= 2
    return _cached(builder, bucket, args).truncate(order)


_FAMILY_SERIES = {
    'harmonic': lambda params, order: cached(gf_harmonic_like, order, 1),
    'harmonic_order': lambda params, order: cached(
        gf_harmonic_order, order, params['r']),
    'odd_harmonic': lambda params, order: cached(gf_odd_harmonic, order),
    'harmonic_like': lambda params, order: cached(
        gf_harmonic_like, order, params['m']),
    'stirling1': lambda params, order: cached(
        gf_stirling_column, order, params['k']),
    'hyperharmonic': lambda params, order: cached(
        gf_hyperharmonic, order, params['p']),
    'hyperharmonic_half': lambda params, order: cached(
        gf_hyperharmonic_half, order, params['p']),
}

_EXPONENTIAL = frozenset(['stirling1'])

# Not a sequence family: C(2n, n) O_n against its generating function
ODD_CENTRAL = 'odd_central'

GF_CHECK_FAMILIES = tuple(sorted(_FAMILY_SERIES)) + (ODD_CENTRAL,)


def family_series(family, order):
    """
    Generating function of a sequence spec.

    :param harmony.sequences.Family family: Sequence spec
    :param int order: Truncation order

    :returns: tuple ``(series, exponential)``; for exponential generating
        functions coefficient n must be multiplied by n!
    """
    name = family.__family__
    try:
        builder = _FAMILY_SERIES[name]
    except KeyError:
        raise exception.RegistryError(
            'No generating function check for family {}'.format(name))
    return builder(family.params, order), name in _EXPONENTIAL


def _compare(expected, series, first, order, exponential=False):
    rows = []
    for n in range(first, order + 1):
        value = expected(n)
        found = series[n] * math.factorial(n) if exponential else series[n]
        rows.append((n, value, found, value == found))
    return rows


def cross_check(family, order):
    """
    Compare a sequence spec with its generating function.

    :param family: :py:class:`harmony.sequences.Family` instance, or the
        name ``'odd_central'``
    :param int order: Highest index checked

    :returns: list of ``(n, recurrence_value, gf_value, equal)`` rows
    """
    if family == ODD_CENTRAL:
        return _compare(
            lambda n: central_binomial(n) * sequences.odd_harmonic(n),
            cached(gf_odd_central, order), 0, order)
    series, exponential = family_series(family, order)
    first = 0
    if family.__family__ == 'hyperharmonic' and family.p == 0:
        first = 1
    return _compare(family, series, first, order, exponential)
