"""Binomial sums S_n(a, b, m) and their consequences"""

import math

from harmony import transforms
from harmony.exact_math import Rational, binomial, rsum
from harmony.grid import Choice, Grid, Range
from harmony.identities.base import Identity
from harmony.sequences import (fibonacci, harmonic, harmonic_like,
                               harmonic_order, lucas, stirling1)
from harmony.transforms import (FIXTURE_PAIRS, BinomialSumParams,
                                binomial_transform)


def _h2_correction(n, weight):
    """sum_{k=1..n} weight(k) (H_{k-1} - H_{n-k}) / k"""
    return rsum(weight(k) * (harmonic(k - 1) - harmonic(n - k)) / k
                for k in range(1, n + 1))


def _hk2(k):
    return harmonic_like(k, 2)


class Section2(Identity):
    __abstract__ = True
    __tags__ = ('section2',)


class MainId1(Section2):
    __anchor__ = ('S_n(a,b,m) = sum_j C(m,j) sum_k H_k(j) (a+b)^k '
                  '(m-j)!/(n-k)! (-1)^(n-k) b^(n-k) s(n-k,m-j)')
    grid = Grid(pair=Choice(FIXTURE_PAIRS), m=Range(0, 4), n=Range(0, 25))

    def lhs(self, pair, m, n):
        return transforms.binomial_sum_direct(BinomialSumParams(*pair, m, n))

    def rhs(self, pair, m, n):
        return transforms.binomial_sum_closed(BinomialSumParams(*pair, m, n))


class MainId1Gf(Section2):
    __anchor__ = 'sum S_n(a,b,m) z^n = H(az/(1-bz)) / (1-bz)'
    grid = Grid(pair=Choice(FIXTURE_PAIRS), m=Range(0, 4), n=Range(0, 20))

    def lhs(self, pair, m, n):
        return transforms.binomial_sum_direct(BinomialSumParams(*pair, m, n))

    def rhs(self, pair, m, n):
        return transforms.binomial_sum_gf(BinomialSumParams(*pair, m, n))


class RemarkM0(Section2):
    __anchor__ = 'S_n(a,b,0) = sum C(n,k) a^k b^(n-k) = (a+b)^n'
    grid = Grid(pair=Choice(FIXTURE_PAIRS), n=Range(0, 25))

    def lhs(self, pair, n):
        return transforms.binomial_sum_direct(BinomialSumParams(*pair, 0, n))

    def rhs(self, pair, n):
        a, b = pair
        return (a + b) ** n


class RemarkM1(Section2):
    __anchor__ = ('S_n(a,b,1) = H_n (a+b)^n - '
                  'sum_{k=0..n-1} (a+b)^k b^(n-k) / (n-k)')
    grid = Grid(pair=Choice(FIXTURE_PAIRS), n=Range(0, 25))

    def lhs(self, pair, n):
        return transforms.binomial_sum_direct(BinomialSumParams(*pair, 1, n))

    def rhs(self, pair, n):
        return transforms.binomial_sum_m1(BinomialSumParams(*pair, 1, n))


class CorId1(Section2):
    __anchor__ = 'sum C(n,k) (-1)^k H_k(m) = (-1)^n m!/n! s(n,m)'
    grid = Grid(n=Range(0, 20), m=Range(0, 5))

    def lhs(self, n, m):
        return binomial_transform(lambda k: harmonic_like(k, m), n)

    def rhs(self, n, m):
        return ((-1) ** n * Rational(math.factorial(m), math.factorial(n)) *
                stirling1(n, m))


class CorId2(Section2):
    __anchor__ = 'sum_{k=m..n} C(n,k) s(k,m)/k! = H_n(m) / m!'
    grid = Grid(n=Range(0, 30), m=Range(0, 5))

    def lhs(self, n, m):
        return binomial_transform(
            lambda k: Rational(stirling1(k, m), math.factorial(k)), n,
            signed=False)

    def rhs(self, n, m):
        return harmonic_like(n, m) / math.factorial(m)


class CorId3(Section2):
    __anchor__ = ('sum C(n,k) H_k(m) = sum_j C(m,j) sum_k H_k(j) '
                  '(-1)^(n-k) 2^k (m-j)!/(n-k)! s(n-k,m-j)')
    grid = Grid(n=Range(0, 20), m=Range(0, 4))

    def lhs(self, n, m):
        return binomial_transform(lambda k: harmonic_like(k, m), n,
                                  signed=False)

    def rhs(self, n, m):
        return rsum(binomial(m, j) * harmonic_like(k, j) * (-1) ** (n - k) *
                    2 ** k * Rational(math.factorial(m - j),
                                      math.factorial(n - k)) *
                    stirling1(n - k, m - j)
                    for j in range(m + 1) for k in range(n + 1))


class ClassicalHk(Section2):
    __id__ = 'classical_Hk'
    __anchor__ = 'sum C(n,k) H_k = 2^n (H_n - sum_{k=1..n} 1/(2^k k))'
    grid = Grid(n=Range(0, 30))

    def lhs(self, n):
        return binomial_transform(harmonic, n, signed=False)

    def rhs(self, n):
        return 2 ** n * (harmonic(n) - rsum(Rational(1, 2 ** k * k)
                                            for k in range(1, n + 1)))


class CorId4(Section2):
    __anchor__ = ('S_n(a,b,2) = H_n(2) (a+b)^n + '
                  '2 sum_{k=1..n} (a+b)^(n-k) b^k (H_{k-1} - H_{n-k}) / k')
    grid = Grid(pair=Choice(FIXTURE_PAIRS), n=Range(0, 25))

    def lhs(self, pair, n):
        return transforms.binomial_sum_direct(BinomialSumParams(*pair, 2, n))

    def rhs(self, pair, n):
        return transforms.binomial_sum_m2(BinomialSumParams(*pair, 2, n))


class ExHk22n(Section2):
    __id__ = 'ex_Hk2_2n'
    __anchor__ = ('sum C(n,k) H_k(2) = '
                  '2^n (H_n(2) + 2 sum (H_{k-1} - H_{n-k}) / (2^k k))')
    grid = Grid(n=Range(0, 25))

    def lhs(self, n):
        return binomial_transform(_hk2, n, signed=False)

    def rhs(self, n):
        return 2 ** n * (_hk2(n) + 2 * _h2_correction(
            n, lambda k: Rational(1, 2 ** k)))


class ExAltHk2(Section2):
    __id__ = 'ex_alt_Hk2'
    __anchor__ = 'sum C(n,k) (-1)^k H_k(2) = 2/n H_{n-1}'
    grid = Grid(n=Range(1, 30))

    def lhs(self, n):
        return binomial_transform(_hk2, n)

    def rhs(self, n):
        return Rational(2, n) * harmonic(n - 1)


class ExAltHk2sq(Section2):
    __id__ = 'ex_alt_Hk2sq'
    __anchor__ = 'sum C(n,k) (-1)^k H_k^(2) = - H_n / n'
    grid = Grid(n=Range(1, 30))

    def lhs(self, n):
        return binomial_transform(lambda k: harmonic_order(k, 2), n)

    def rhs(self, n):
        return -harmonic(n) / n


class ExAltHksq(Section2):
    __id__ = 'ex_alt_Hksq'
    __anchor__ = 'sum C(n,k) (-1)^k H_k^2 = H_n / n - 2 / n^2'
    grid = Grid(n=Range(1, 30))

    def lhs(self, n):
        return binomial_transform(lambda k: harmonic(k) ** 2, n)

    def rhs(self, n):
        return harmonic(n) / n - Rational(2, n * n)


class ExInvHkOverK(Section2):
    __id__ = 'ex_inv_HkOverK'
    __anchor__ = 'sum_{k=1..n} C(n,k) (-1)^(k+1) H_k / k = H_n^(2)'
    grid = Grid(n=Range(0, 30))

    def lhs(self, n):
        return rsum(binomial(n, k) * (-1) ** (k + 1) * harmonic(k) / k
                    for k in range(1, n + 1))

    def rhs(self, n):
        return harmonic_order(n, 2)


class Ex2kAlt(Section2):
    __id__ = 'ex_2k_alt'
    __anchor__ = ('sum C(n,k) 2^k (-1)^(n-k) H_k(2) = '
                  'H_n(2) + 2 sum (-1)^k (H_{k-1} - H_{n-k}) / k')
    grid = Grid(n=Range(0, 25))

    def lhs(self, n):
        return rsum(binomial(n, k) * 2 ** k * (-1) ** (n - k) * _hk2(k)
                    for k in range(n + 1))

    def rhs(self, n):
        return _hk2(n) + 2 * _h2_correction(n, lambda k: (-1) ** k)


class Ex3n(Section2):
    __id__ = 'ex_3n'
    __anchor__ = ('sum C(n,k) 2^k H_k(2) = '
                  '3^n (H_n(2) + 2 sum (H_{k-1} - H_{n-k}) / (3^k k))')
    grid = Grid(n=Range(0, 25))

    def lhs(self, n):
        return rsum(binomial(n, k) * 2 ** k * _hk2(k) for k in range(n + 1))

    def rhs(self, n):
        return 3 ** n * (_hk2(n) + 2 * _h2_correction(
            n, lambda k: Rational(1, 3 ** k)))


class FibHk2(Section2):
    __id__ = 'fib_Hk2'
    __anchor__ = ('sum C(n,k) F_k H_k(2) = H_n(2) F_{2n} + '
                  '2 sum F_{2(n-k)} (H_{k-1} - H_{n-k}) / k')
    grid = Grid(n=Range(0, 25))

    def lhs(self, n):
        return rsum(binomial(n, k) * fibonacci(k) * _hk2(k)
                    for k in range(n + 1))

    def rhs(self, n):
        return _hk2(n) * fibonacci(2 * n) + 2 * _h2_correction(
            n, lambda k: fibonacci(2 * (n - k)))


class LucasHk2(Section2):
    __id__ = 'lucas_Hk2'
    __anchor__ = ('sum C(n,k) L_k H_k(2) = H_n(2) L_{2n} + '
                  '2 sum L_{2(n-k)} (H_{k-1} - H_{n-k}) / k')
    grid = Grid(n=Range(0, 25))

    def lhs(self, n):
        return rsum(binomial(n, k) * lucas(k) * _hk2(k)
                    for k in range(n + 1))

    def rhs(self, n):
        return _hk2(n) * lucas(2 * n) + 2 * _h2_correction(
            n, lambda k: lucas(2 * (n - k)))


class FibAltHk2(Section2):
    __id__ = 'fib_alt_Hk2'
    __anchor__ = ('sum C(n,k) (-1)^(k+1) F_k H_k(2) = H_n(2) F_n + '
                  '2 sum F_{n-k} (H_{k-1} - H_{n-k}) / k')
    grid = Grid(n=Range(0, 25))

    def lhs(self, n):
        return rsum(binomial(n, k) * (-1) ** (k + 1) * fibonacci(k) * _hk2(k)
                    for k in range(n + 1))

    def rhs(self, n):
        return _hk2(n) * fibonacci(n) + 2 * _h2_correction(
            n, lambda k: fibonacci(n - k))


class LucasAltHk2(Section2):
    __id__ = 'lucas_alt_Hk2'
    __anchor__ = ('sum C(n,k) (-1)^k L_k H_k(2) = H_n(2) L_n + '
                  '2 sum L_{n-k} (H_{k-1} - H_{n-k}) / k')
    grid = Grid(n=Range(0, 25))

    def lhs(self, n):
        return rsum(binomial(n, k) * (-1) ** k * lucas(k) * _hk2(k)
                    for k in range(n + 1))

    def rhs(self, n):
        return _hk2(n) * lucas(n) + 2 * _h2_correction(
            n, lambda k: lucas(n - k))


class CorId5(Section2):
    __anchor__ = ('S_n(a,b,3) = H_n(3) (a+b)^n - 3 sum (a+b)^(n-k) b^k '
                  '(H_{k-1}^2 - H_{k-1}^(2) - 2 H_{k-1} H_{n-k} + H_{n-k}^2 '
                  '- H_{n-k}^(2)) / k')
    grid = Grid(pair=Choice(FIXTURE_PAIRS), n=Range(0, 20))

    def lhs(self, pair, n):
        return transforms.binomial_sum_direct(BinomialSumParams(*pair, 3, n))

    def rhs(self, pair, n):
        return transforms.binomial_sum_m3(BinomialSumParams(*pair, 3, n))
