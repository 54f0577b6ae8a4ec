"""Binomial sums S_n(a, b, m) and generic binomial transforms.

S_n(a, b, m) = sum_{k=0..n} C(n, k) a^k b^(n-k) H_k(m), evaluated by the
literal sum, by the closed form in Stirling numbers, by the m = 1, 2, 3
specializations, and by its generating function. 0^0 = 1 throughout.
"""

import collections
import logging

from harmony import exception, power_series, properties
from harmony.exact_math import Rational, binomial, factorial, rsum
from harmony.sequences import (harmonic, harmonic_like, harmonic_order,
                               stirling1)

logger = logging.getLogger(__name__)


# (a, b) pairs every closed form is checked against
FIXTURE_PAIRS = (
    (Rational(1), Rational(1)),
    (Rational(-1), Rational(1)),
    (Rational(2), Rational(1)),
    (Rational(1), Rational(2)),
    (Rational(1, 2), Rational(-1, 3)),
    (Rational(3), Rational(-2)),
    (Rational(0), Rational(1)),
    (Rational(1), Rational(0)),
)


class BinomialSumParams(
        collections.namedtuple('BinomialSumParams', ['a', 'b', 'm', 'n'])):
    """
    Arguments of S_n(a, b, m).

    :param a: Rational, may be zero
    :param b: Rational, may be zero
    :param int m: Order, m >= 0
    :param int n: Index, n >= 0
    """

    __slots__ = ()

    def __new__(cls, a, b, m, n):
        rational = properties.Rational()
        non_negative = properties.NonNegativeInteger()
        return super().__new__(cls,
                               rational.validate(a), rational.validate(b),
                               non_negative.validate(m),
                               non_negative.validate(n))


def binomial_sum_direct(p):
    a, b, m, n = p
    return rsum(binomial(n, k) * a ** k * b ** (n - k) * harmonic_like(k, m)
                for k in range(n + 1))


def binomial_sum_closed(p):
    """
    S_n(a, b, m) as

        sum_{j=0..m} sum_{k=0..n} C(m, j) H_k(j) (a + b)^k
            (m - j)! / (n - k)! (-1)^(n-k) b^(n-k) s(n - k, m - j)
    """
    a, b, m, n = p
    c = a + b
    total = Rational(0)
    for j in range(m + 1):
        for k in range(n + 1):
            s = stirling1(n - k, m - j)
            if s == 0:
                continue
            total += (binomial(m, j) * harmonic_like(k, j) * c ** k *
                      Rational(factorial(m - j), factorial(n - k)) *
                      (-b) ** (n - k) * s)
    return total


def _require_order(p, m):
    if p.m != m:
        raise exception.DomainError(
            'Specialization for m = {} called with m = {}'.format(m, p.m))


def binomial_sum_m1(p):
    """S_n(a, b, 1) = H_n (a+b)^n - sum_{k=0..n-1} (a+b)^k b^(n-k) / (n-k)"""
    _require_order(p, 1)
    a, b, _, n = p
    c = a + b
    return harmonic(n) * c ** n - rsum(c ** k * b ** (n - k) / (n - k)
                                       for k in range(n))


def binomial_sum_m2(p):
    """
    S_n(a, b, 2) =
    H_n(2) (a+b)^n + 2 sum_{k=1..n} (a+b)^(n-k) b^k (H_{k-1} - H_{n-k}) / k
    """
    _require_order(p, 2)
    a, b, _, n = p
    c = a + b
    correction = rsum(c ** (n - k) * b ** k *
                      (harmonic(k - 1) - harmonic(n - k)) / k
                      for k in range(1, n + 1))
    return harmonic_like(n, 2) * c ** n + 2 * correction


def binomial_sum_m3(p):
    """
    S_n(a, b, 3) = H_n(3) (a+b)^n - 3 sum_{k=1..n} (a+b)^(n-k) b^k T_k / k
    with T_k = H_{k-1}^2 - H_{k-1}^(2) - 2 H_{k-1} H_{n-k}
    + H_{n-k}^2 - H_{n-k}^(2).
    """
    _require_order(p, 3)
    a, b, _, n = p
    c = a + b

    def term(k):
        left, right = harmonic(k - 1), harmonic(n - k)
        return (left ** 2 - harmonic_order(k - 1, 2) - 2 * left * right +
                right ** 2 - harmonic_order(n - k, 2))

    correction = rsum(c ** (n - k) * b ** k * term(k) / k
                      for k in range(1, n + 1))
    return harmonic_like(n, 3) * c ** n - 3 * correction


def binomial_sum_gf(p):
    """Coefficient of z^n in H(a z / (1 - b z)) / (1 - b z)."""
    a, b, m, n = p
    return power_series.cached(power_series.gf_binomial_sum, n, a, b, m)[n]


SPECIALIZATIONS = {
    1: binomial_sum_m1,
    2: binomial_sum_m2,
    3: binomial_sum_m3,
}

ROUTES = {
    'direct': binomial_sum_direct,
    'closed': binomial_sum_closed,
    'gf': binomial_sum_gf,
}


def binomial_sum(p, route='direct'):
    """
    Evaluate S_n(a, b, m) by a named route.

    :param BinomialSumParams p: Arguments
    :param str route: One of :py:data:`ROUTES`
    """
    try:
        evaluate = ROUTES[route]
    except KeyError:
        raise exception.ValidationError(
            'Unknown route {}, expected one of {}'.format(
                route, ', '.join(sorted(ROUTES))))
    return evaluate(p)


def binomial_transform(seq, n, signed=True):
    """
    Forward binomial transform at index ``n``.

    :param seq: Callable mapping an index ``0..n`` to a rational
    :param int n: Index
    :param bool signed: ``sum C(n, k) (-1)^k seq(k)`` if true, else
        ``sum C(n, k) seq(k)``
    """
    if signed:
        return rsum(binomial(n, k) * (-1) ** k * seq(k) for k in range(n + 1))
    return rsum(binomial(n, k) * seq(k) for k in range(n + 1))


def inverse_binomial_transform(seq, n, signed=True):
    """
    Inverse of :py:func:`binomial_transform`. The signed transform is an
    involution; the unsigned one is undone by ``sum C(n, k) (-1)^(n-k)``.
    """
    if signed:
        return binomial_transform(seq, n, signed=True)
    return rsum(binomial(n, k) * (-1) ** (n - k) * seq(k)
                for k in range(n + 1))
