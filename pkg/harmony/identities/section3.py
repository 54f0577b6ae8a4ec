"""Identities obtained by telescoping"""

import math

from harmony.exact_math import Rational, binomial, gen_binomial, rsum
from harmony.grid import Choice, Grid, Range
from harmony.identities import telescoping
from harmony.identities.base import Identity
from harmony.sequences import (fibonacci, harmonic, harmonic_like,
                               harmonic_order, stirling1)

KOLLAR_R = (Rational(3), Rational(1, 2), Rational(5, 2), Rational(-2, 3))


def _stirling_weight(j, m):
    """s(j, m) / j!"""
    return Rational(stirling1(j, m), math.factorial(j))


def _h2_closed(n):
    return harmonic(n) ** 2 - harmonic_order(n, 2)


def _h3_double_sum(n):
    """sum_{k=1..n} 1/k sum_{j=1..n-k} H_{n-k-j} / j"""
    return rsum(rsum(harmonic(n - k - j) / j for j in range(1, n - k + 1)) / k
                for k in range(1, n + 1))


class Section3(Identity):
    __abstract__ = True
    __tags__ = ('section3',)


class Warmup(Section3):
    """Summation by parts against H_k for one fixed sequence."""
    __abstract__ = True
    grid = Grid(n=Range(0, 40))

    @staticmethod
    def sequence(k):
        raise NotImplementedError

    def lhs(self, n):
        return self.sides({'n': n})[0]

    def rhs(self, n):
        return self.sides({'n': n})[1]

    def sides(self, binding):
        return telescoping.telescope_harmonic_check(self.sequence,
                                                    binding['n'])


class WarmupHkm1(Warmup):
    __id__ = 'warmup_Hkm1'
    __anchor__ = 'sum_{k=1..n} H_{k-1} / k = 1/2 (H_n^2 - H_n^(2))'

    @staticmethod
    def sequence(k):
        return harmonic(k - 1)

    def sides(self, binding):
        # H_k / k = H_{k-1} / k + 1 / k^2
        n = binding['n']
        by_parts, _ = super().sides(binding)
        return by_parts - harmonic_order(n, 2), _h2_closed(n) / 2


class WarmupSumHk(Warmup):
    __id__ = 'warmup_sumHk'
    __anchor__ = ('sum_{k=1..n} H_k = (n+1) H_n - n, '
                  'by parts with a_k = k')

    @staticmethod
    def sequence(k):
        return Rational(k)


class WarmupFib(Warmup):
    __anchor__ = ('sum_{k=1..n} H_k F_k = H_n F_{n+2} - '
                  'sum_{k=1..n} F_{k+1} / k, by parts with a_k = F_{k+1}')

    @staticmethod
    def sequence(k):
        return fibonacci(k + 1)


class ThmO107dby(Section3):
    __anchor__ = ('sum_{k=1..n} H_k sum_{j=m..k} C(k-1,j-1) s(j,m)/j! = '
                  '1/m! H_n(m) H_n - 1/m! sum_{k=1..n} H_{k-1}(m) / k')
    grid = Grid(m=Range(0, 4), n=Range(0, 20))

    def lhs(self, m, n):
        return rsum(harmonic(k) * rsum(binomial(k - 1, j - 1) *
                                       _stirling_weight(j, m)
                                       for j in range(m, k + 1))
                    for k in range(1, n + 1))

    def rhs(self, m, n):
        return (harmonic_like(n, m) * harmonic(n) -
                rsum(harmonic_like(k - 1, m) / k for k in range(1, n + 1))
                ) / math.factorial(m)


class ThmO107dbyM1(Section3):
    __anchor__ = 'sum_{k=1..n} H_k / k = 1/2 (H_n^2 + H_n^(2))'
    grid = Grid(n=Range(0, 40))

    def lhs(self, n):
        return rsum(harmonic(k) / k for k in range(1, n + 1))

    def rhs(self, n):
        return (harmonic(n) ** 2 + harmonic_order(n, 2)) / 2


class ThmO107dbyM2(Section3):
    __anchor__ = ('2 sum_{k=1..n} H_k sum_{j=1..k} (-1)^j C(k-1,j-1) '
                  'H_{j-1} / j = H_n^3 - H_n^(2) H_n - '
                  'sum_{k=1..n} (H_{k-1}^2 - H_{k-1}^(2)) / k')
    grid = Grid(n=Range(0, 30))

    def lhs(self, n):
        return 2 * rsum(harmonic(k) * rsum((-1) ** j * binomial(k - 1, j - 1) *
                                           harmonic(j - 1) / j
                                           for j in range(1, k + 1))
                        for k in range(1, n + 1))

    def rhs(self, n):
        h = harmonic(n)
        return (h ** 3 - harmonic_order(n, 2) * h -
                rsum(_h2_closed(k - 1) / k for k in range(1, n + 1)))


class ThmHnp1(Section3):
    __id__ = 'thm_Hnp1'
    __anchor__ = ('sum_{k=1..n} H_k sum_{j=m..n-k+1} C(n-k,j-1) s(j,m)/j! '
                  '= 1/m! H_{n+1}(m+1)')
    grid = Grid(m=Range(1, 4), n=Range(1, 20))

    def lhs(self, m, n):
        return rsum(harmonic(k) * rsum(binomial(n - k, j - 1) *
                                       _stirling_weight(j, m)
                                       for j in range(m, n - k + 2))
                    for k in range(1, n + 1))

    def rhs(self, m, n):
        return harmonic_like(n + 1, m + 1) / math.factorial(m)


class ThmHnp1M1(Section3):
    __id__ = 'thm_Hnp1_m1'
    __anchor__ = 'sum_{k=1..n} H_k / (n-k+1) = H_{n+1}^2 - H_{n+1}^(2)'
    grid = Grid(n=Range(1, 40))

    def lhs(self, n):
        return rsum(harmonic(k) / (n - k + 1) for k in range(1, n + 1))

    def rhs(self, n):
        return _h2_closed(n + 1)


class ThmHnp1M2(Section3):
    __id__ = 'thm_Hnp1_m2'
    __anchor__ = ('sum_{k=1..n} H_k sum_{j=2..n-k+1} C(n-k,j-1) (-1)^j '
                  'H_{j-1} / j = 1/2 sum_{k=1..n+1} 1/k '
                  'sum_{j=1..n+1-k} H_{n-k-j+1} / j')
    grid = Grid(n=Range(1, 25))

    def lhs(self, n):
        return rsum(harmonic(k) * rsum(binomial(n - k, j - 1) * (-1) ** j *
                                       harmonic(j - 1) / j
                                       for j in range(2, n - k + 2))
                    for k in range(1, n + 1))

    def rhs(self, n):
        return _h3_double_sum(n + 1) / 2


class HarHelper(Section3):
    __anchor__ = ('sum_{k=1..n} 1/(k(k+p)) = H_n^(2) for p = 0, '
                  '(H_n + H_p - H_{n+p}) / p for p >= 1')
    grid = Grid(p=Range(0, 8), n=Range(0, 30))

    def lhs(self, p, n):
        return rsum(Rational(1, k * (k + p)) for k in range(1, n + 1))

    def rhs(self, p, n):
        if p == 0:
            return harmonic_order(n, 2)
        return (harmonic(n) + harmonic(p) - harmonic(n + p)) / p


class HarExampleP0(Section3):
    __anchor__ = 'sum_{k=1..n} H_k / (k(k+1)) = H_n^(2) - H_n / (n+1)'
    grid = Grid(n=Range(0, 40))

    def lhs(self, n):
        return rsum(harmonic(k) / (k * (k + 1)) for k in range(1, n + 1))

    def rhs(self, n):
        return harmonic_order(n, 2) - harmonic(n) / (n + 1)


class HarExample(Section3):
    __anchor__ = ('sum_{k=1..n} H_{k+p} / (k(k+1)) = '
                  '(H_n + H_p - H_{n+p}) / p + H_p - H_{n+p} / (n+1), p >= 1')
    grid = Grid(p=Range(1, 8), n=Range(0, 30))

    def lhs(self, p, n):
        return rsum(harmonic(k + p) / (k * (k + 1)) for k in range(1, n + 1))

    def rhs(self, p, n):
        hp, hnp = harmonic(p), harmonic(n + p)
        return (harmonic(n) + hp - hnp) / p + hp - hnp / (n + 1)


class ThmKk1(Section3):
    __anchor__ = ('sum_{k=1..n} H_{n-k}(m) / (k(k+1)) = '
                  'H_n(m) + H_n(m+1) - H_{n+1}(m+1)')
    grid = Grid(m=Range(0, 4), n=Range(1, 25))

    def lhs(self, m, n):
        return rsum(harmonic_like(n - k, m) / (k * (k + 1))
                    for k in range(1, n + 1))

    def rhs(self, m, n):
        return (harmonic_like(n, m) + harmonic_like(n, m + 1) -
                harmonic_like(n + 1, m + 1))


class ThmKk1M1(Section3):
    __anchor__ = ('sum_{k=1..n} H_{n-k} / (k(k+1)) = '
                  'H_n + H_n^2 - H_n^(2) - H_{n+1}^2 + H_{n+1}^(2)')
    grid = Grid(n=Range(1, 40))

    def lhs(self, n):
        return rsum(harmonic(n - k) / (k * (k + 1)) for k in range(1, n + 1))

    def rhs(self, n):
        return harmonic(n) + _h2_closed(n) - _h2_closed(n + 1)


class ThmKk1M2(Section3):
    __anchor__ = ('sum_{k=1..n} (H_{n-k}^2 - H_{n-k}^(2)) / (k(k+1)) = '
                  'H_n^2 - H_n^(2) + sum_{k=1..n} 1/k sum_{j=1..n-k} '
                  'H_{n-k-j} / j - sum_{k=1..n+1} 1/k sum_{j=1..n+1-k} '
                  'H_{n+1-k-j} / j')
    grid = Grid(n=Range(1, 25))

    def lhs(self, n):
        return rsum(_h2_closed(n - k) / (k * (k + 1)) for k in range(1, n + 1))

    def rhs(self, n):
        return _h2_closed(n) + _h3_double_sum(n) - _h3_double_sum(n + 1)


class ThmKollar(Section3):
    __anchor__ = ('sum_{k=0..n} (-1)^k C(r-1,k) sum_{j=m..k+1} C(k,j-1) '
                  's(j,m)/j! = (-1)^n C(r-1,n) 1/m! H_{n+1}(m) - '
                  '1/m! sum_{k=0..n} (-1)^k C(r,k) H_k(m)')
    grid = Grid(r=Choice(KOLLAR_R), m=Range(1, 4), n=Range(1, 15))

    def lhs(self, r, m, n):
        return rsum((-1) ** k * gen_binomial(r - 1, k) *
                    rsum(binomial(k, j - 1) * _stirling_weight(j, m)
                         for j in range(m, k + 2))
                    for k in range(n + 1))

    def rhs(self, r, m, n):
        return ((-1) ** n * gen_binomial(r - 1, n) * harmonic_like(n + 1, m) -
                rsum((-1) ** k * gen_binomial(r, k) * harmonic_like(k, m)
                     for k in range(n + 1))) / math.factorial(m)


class ThmKollarM1(Section3):
    __anchor__ = ('sum_{k=0..n} (-1)^k / (k+1) C(r-1,k) = '
                  '(-1)^n C(r-1,n) H_{n+1} - sum_{k=0..n} (-1)^k C(r,k) H_k')
    grid = Grid(r=Choice(KOLLAR_R), n=Range(0, 20))

    def lhs(self, r, n):
        return rsum((-1) ** k * gen_binomial(r - 1, k) / (k + 1)
                    for k in range(n + 1))

    def rhs(self, r, n):
        return ((-1) ** n * gen_binomial(r - 1, n) * harmonic(n + 1) -
                rsum((-1) ** k * gen_binomial(r, k) * harmonic(k)
                     for k in range(n + 1)))


class ThmKollarM2(Section3):
    __anchor__ = ('sum_{k=0..n} (-1)^k C(r-1,k) sum_{j=2..k+1} (-1)^j '
                  'C(k,j-1) H_{j-1} / j = (-1)^n C(r-1,n) 1/2 '
                  '(H_{n+1}^2 - H_{n+1}^(2)) - 1/2 sum_{k=0..n} (-1)^k '
                  'C(r,k) (H_k^2 - H_k^(2))')
    grid = Grid(r=Choice(KOLLAR_R), n=Range(0, 20))

    def lhs(self, r, n):
        return rsum((-1) ** k * gen_binomial(r - 1, k) *
                    rsum((-1) ** j * binomial(k, j - 1) * harmonic(j - 1) / j
                         for j in range(2, k + 2))
                    for k in range(n + 1))

    def rhs(self, r, n):
        return ((-1) ** n * gen_binomial(r - 1, n) * _h2_closed(n + 1) -
                rsum((-1) ** k * gen_binomial(r, k) * _h2_closed(k)
                     for k in range(n + 1))) / 2


class LemmaJjbwp3m(Section3):
    __anchor__ = ('sum_{k=1..n} H_k (a_{k+1} - a_k) = '
                  'H_n a_{n+1} - sum_{k=1..n} a_k / k')
    grid = Grid(sequence=Choice(sorted(telescoping.FIXTURE_SEQUENCES)),
                n=Range(1, 25))

    def lhs(self, sequence, n):
        return self.sides(dict(sequence=sequence, n=n))[0]

    def rhs(self, sequence, n):
        return self.sides(dict(sequence=sequence, n=n))[1]

    def sides(self, binding):
        return telescoping.telescope_harmonic_check(
            telescoping.FIXTURE_SEQUENCES[binding['sequence']], binding['n'])


class LemmaYugnf7k(LemmaJjbwp3m):
    __anchor__ = ('sum_{k=1..n} (a_k - a_{k-1}) / k = '
                  'sum_{k=1..n} a_k / (k(k+1)) - a_0 + a_n / (n+1)')

    def sides(self, binding):
        return telescoping.telescope_reciprocal_check(
            telescoping.FIXTURE_SEQUENCES[binding['sequence']], binding['n'])


class LemmaU8veeoy(Section3):
    __anchor__ = ('sum_{k=0..n} (-1)^k C(r-1,k) (a_{k+1} - a_k) = '
                  '(-1)^n C(r-1,n) a_{n+1} - sum_{k=0..n} (-1)^k C(r,k) a_k')
    grid = Grid(r=Choice(KOLLAR_R),
                sequence=Choice(sorted(telescoping.FIXTURE_SEQUENCES)),
                n=Range(0, 15))

    def lhs(self, r, sequence, n):
        return self.sides(dict(r=r, sequence=sequence, n=n))[0]

    def rhs(self, r, sequence, n):
        return self.sides(dict(r=r, sequence=sequence, n=n))[1]

    def sides(self, binding):
        return telescoping.telescope_kollar_check(
            telescoping.FIXTURE_SEQUENCES[binding['sequence']], binding['r'],
            binding['n'])
