"""Summation-by-parts combinators.

Each combinator takes a sequence as a callable ``a(k)`` and returns the two
sides of its telescoping identity, evaluated exactly and independently.
"""

from harmony.exact_math import Rational, gen_binomial, rsum
from harmony.sequences import (fibonacci, harmonic, harmonic_like,
                               harmonic_order, hyperharmonic)


def telescope_harmonic_check(a, n):
    """
    sum_{k=1..n} H_k (a_{k+1} - a_k) = H_n a_{n+1} - sum_{k=1..n} a_k / k

    :param a: Sequence defined on ``1..n+1``
    :param int n: Upper summation bound

    :returns: tuple ``(lhs, rhs)``
    """
    lhs = rsum(harmonic(k) * (a(k + 1) - a(k)) for k in range(1, n + 1))
    rhs = harmonic(n) * a(n + 1) - rsum(Rational(a(k)) / k
                                        for k in range(1, n + 1))
    return lhs, rhs


def telescope_reciprocal_check(a, n):
    """
    sum_{k=1..n} (a_k - a_{k-1}) / k
    = sum_{k=1..n} a_k / (k (k+1)) - a_0 + a_n / (n+1)

    :param a: Sequence defined on ``0..n``
    """
    lhs = rsum(Rational(a(k) - a(k - 1)) / k for k in range(1, n + 1))
    rhs = (rsum(Rational(a(k), k * (k + 1)) for k in range(1, n + 1)) -
           a(0) + Rational(a(n)) / (n + 1))
    return lhs, rhs


def telescope_kollar_check(a, r, n):
    """
    sum_{k=0..n} (-1)^k C(r-1, k) (a_{k+1} - a_k)
    = (-1)^n C(r-1, n) a_{n+1} - sum_{k=0..n} (-1)^k C(r, k) a_k

    :param a: Sequence defined on ``0..n+1``
    :param r: Rational upper binomial argument
    """
    lhs = rsum((-1) ** k * gen_binomial(r - 1, k) * (a(k + 1) - a(k))
               for k in range(n + 1))
    rhs = ((-1) ** n * gen_binomial(r - 1, n) * a(n + 1) -
           rsum((-1) ** k * gen_binomial(r, k) * a(k) for k in range(n + 1)))
    return lhs, rhs


def telescope_linear_check(a, n):
    """
    sum_{k=1..n} k (a_k - a_{k-1}) = n a_n - sum_{k=1..n} a_{k-1}

    :param a: Sequence defined on ``0..n``
    """
    lhs = rsum(k * (a(k) - a(k - 1)) for k in range(1, n + 1))
    rhs = n * a(n) - rsum(a(k - 1) for k in range(1, n + 1))
    return lhs, rhs


# Sequences on k >= 0 the combinators are registered over
FIXTURE_SEQUENCES = {
    'constant': lambda k: Rational(1),
    'identity': lambda k: Rational(k),
    'harmonic': harmonic,
    'harmonic_order_2': lambda k: harmonic_order(k, 2),
    'harmonic_like_2': lambda k: harmonic_like(k, 2),
    'hyperharmonic_2': lambda k: hyperharmonic(k, 2),
    'fibonacci': fibonacci,
    'fibonacci_shifted': lambda k: fibonacci(k + 1),
    'alternating': lambda k: Rational((-1) ** k, k + 1),
}
