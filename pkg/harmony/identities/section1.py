"""Multiple harmonic-like numbers and Stirling numbers of the first kind"""

import math

from harmony import power_series
from harmony.exact_math import Rational, rsum
from harmony.grid import Grid, Range
from harmony.identities.base import Identity
from harmony.sequences import (harmonic, harmonic_like,
                               harmonic_like_bruteforce, harmonic_order,
                               stirling1)


class Section1(Identity):
    __abstract__ = True
    __tags__ = ('section1',)


class HLikeBruteforce(Section1):
    __anchor__ = ('H_n(m) = sum over 1 <= k_1 + ... + k_m <= n of '
                  '1/(k_1 ... k_m)')
    grid = Grid(n=Range(0, 15), m=Range(1, 16),
                where=lambda b: b['n'] + b['m'] <= 16,
                where_text='n + m <= 16')

    def lhs(self, n, m):
        return harmonic_like(n, m)

    def rhs(self, n, m):
        return harmonic_like_bruteforce(n, m, ceiling=self.bruteforce_ceiling)


class HLikeGf(Section1):
    __anchor__ = 'sum H_n(m) z^n = (-ln(1-z))^m / (1-z)'
    grid = Grid(m=Range(0, 5), n=Range(0, 60))

    def lhs(self, m, n):
        return harmonic_like(n, m)

    def rhs(self, m, n):
        return power_series.cached(power_series.gf_harmonic_like, n, m)[n]


class HLikeM2(Section1):
    __anchor__ = 'H_n(2) = H_n^2 - H_n^(2)'
    grid = Grid(n=Range(0, 40))

    def lhs(self, n):
        return harmonic_like(n, 2)

    def rhs(self, n):
        return harmonic(n) ** 2 - harmonic_order(n, 2)


class HLikeM2Convolution(Section1):
    __anchor__ = 'H_n(2) = sum_{j=1..n} 2 H_{j-1} / j'
    grid = Grid(n=Range(0, 40))

    def lhs(self, n):
        return harmonic_like(n, 2)

    def rhs(self, n):
        return rsum(2 * harmonic(j - 1) / j for j in range(1, n + 1))


class HLikeM3(Section1):
    __anchor__ = 'H_n(3) = sum_{j=1..n} 1/j sum_{l=1..n-j} H_{n-j-l} / l'
    grid = Grid(n=Range(0, 30))

    def lhs(self, n):
        return harmonic_like(n, 3)

    def rhs(self, n):
        return rsum(Rational(1, j) * rsum(harmonic(n - j - l) / l
                                          for l in range(1, n - j + 1))
                    for j in range(1, n + 1))


class StirlingBelowDiagonal(Section1):
    __anchor__ = 's(n, k) = 0 for n < k'
    grid = Grid(n=Range(0, 20), k=Range(0, 20),
                where=lambda b: b['n'] < b['k'], where_text='n < k')

    def lhs(self, n, k):
        return stirling1(n, k)

    def rhs(self, n, k):
        return 0


class StirlingColumn0(Section1):
    __anchor__ = 's(0, 0) = 1 and s(n, 0) = 0 for n >= 1'
    grid = Grid(n=Range(0, 30))

    def lhs(self, n):
        return stirling1(n, 0)

    def rhs(self, n):
        return 1 if n == 0 else 0


class StirlingColumn1(Section1):
    __anchor__ = 's(n, 1) = (-1)^(n-1) (n-1)!'
    grid = Grid(n=Range(1, 30))

    def lhs(self, n):
        return stirling1(n, 1)

    def rhs(self, n):
        return (-1) ** (n - 1) * math.factorial(n - 1)


class StirlingColumn2(Section1):
    __anchor__ = 's(n, 2) = (-1)^n (n-1)! H_{n-1}'
    grid = Grid(n=Range(1, 30))

    def lhs(self, n):
        return stirling1(n, 2)

    def rhs(self, n):
        return (-1) ** n * math.factorial(n - 1) * harmonic(n - 1)


class StirlingColumn3(Section1):
    __anchor__ = ('s(n, 3) = 1/2 (-1)^(n-1) (n-1)! '
                  '(H_{n-1}^2 - H_{n-1}^(2))')
    grid = Grid(n=Range(1, 30))

    def lhs(self, n):
        return stirling1(n, 3)

    def rhs(self, n):
        return (Rational((-1) ** (n - 1) * math.factorial(n - 1), 2) *
                (harmonic(n - 1) ** 2 - harmonic_order(n - 1, 2)))


class StirlingGf(Section1):
    __anchor__ = 'sum_{n>=k} s(n, k) z^n / n! = ln^k(1+z) / k!'
    grid = Grid(k=Range(0, 6), n=Range(0, 40))

    def lhs(self, k, n):
        return stirling1(n, k)

    def rhs(self, k, n):
        series = power_series.cached(power_series.gf_stirling_column, n, k)
        return series[n] * math.factorial(n)
