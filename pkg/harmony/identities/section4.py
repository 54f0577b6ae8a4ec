"""Hyperharmonic numbers, odd harmonic numbers and central binomials"""

from harmony import power_series
from harmony.exact_math import (Rational, binomial, central_binomial,
                                gen_binomial, rsum)
from harmony.grid import Choice, Grid, Range
from harmony.identities import telescoping
from harmony.identities.base import Identity
from harmony.sequences import (half_harmonic_offset, harmonic, harmonic_like,
                               harmonic_order, hyperharmonic,
                               hyperharmonic_closed, hyperharmonic_half,
                               hyperharmonic_half_binomial, odd_harmonic)


def _central_weight(k, p):
    """C(2(k+p), k+p) C(k+p, k)"""
    return central_binomial(k + p) * binomial(k + p, k)


def _h2_closed(n):
    return harmonic(n) ** 2 - harmonic_order(n, 2)


class Section4(Identity):
    __abstract__ = True
    __tags__ = ('section4',)


class HyperharmonicCompact(Section4):
    __anchor__ = 'H_{n,p+1} = C(n+p, n) (H_{n+p} - H_p)'
    grid = Grid(p=Range(1, 6), n=Range(0, 30))

    def lhs(self, p, n):
        return hyperharmonic(n, p)

    def rhs(self, p, n):
        return hyperharmonic_closed(n, p)


class HyperharmonicGf(Section4):
    __anchor__ = 'sum H_{n,p} z^n = -ln(1-z) / (1-z)^p'
    grid = Grid(p=Range(1, 6), n=Range(0, 40))

    def lhs(self, p, n):
        return hyperharmonic(n, p)

    def rhs(self, p, n):
        return power_series.cached(power_series.gf_hyperharmonic, n, p)[n]


class HyperharmonicStep(Section4):
    __anchor__ = 'H_{k,p+1} - H_{k-1,p+1} = H_{k,p}'
    grid = Grid(p=Range(0, 6), n=Range(1, 30))

    def lhs(self, p, n):
        return hyperharmonic(n, p + 1) - hyperharmonic(n - 1, p + 1)

    def rhs(self, p, n):
        return hyperharmonic(n, p)


class ThmHyphar(Section4):
    __anchor__ = ('sum_{k=0..n} C(k+p,k) H_{n-k}(m) (H_{k+p} - H_p) = '
                  'sum_{k=0..n} C(k+p,k) H_{n-k}(m+1)')
    grid = Grid(p=Range(0, 4), m=Range(0, 3), n=Range(0, 20))

    def lhs(self, p, m, n):
        return rsum(binomial(k + p, k) * harmonic_like(n - k, m) *
                    (harmonic(k + p) - harmonic(p)) for k in range(n + 1))

    def rhs(self, p, m, n):
        return rsum(binomial(k + p, k) * harmonic_like(n - k, m + 1)
                    for k in range(n + 1))


class ThmHypharM0(Section4):
    __anchor__ = ('sum_{k=0..n} C(k+p,k) (H_{k+p} - H_p) = '
                  'sum_{k=0..n} C(k+p,k) H_{n-k}')
    grid = Grid(p=Range(0, 6), n=Range(0, 30))

    def lhs(self, p, n):
        return rsum(binomial(k + p, k) * (harmonic(k + p) - harmonic(p))
                    for k in range(n + 1))

    def rhs(self, p, n):
        return rsum(binomial(k + p, k) * harmonic(n - k)
                    for k in range(n + 1))


class ThmHypharM1(Section4):
    __anchor__ = ('sum_{k=0..n} C(k+p,k) H_{n-k} (H_{k+p} - H_p) = '
                  'sum_{k=0..n} C(k+p,k) (H_{n-k}^2 - H_{n-k}^(2))')
    grid = Grid(p=Range(0, 6), n=Range(0, 30))

    def lhs(self, p, n):
        return rsum(binomial(k + p, k) * harmonic(n - k) *
                    (harmonic(k + p) - harmonic(p)) for k in range(n + 1))

    def rhs(self, p, n):
        return rsum(binomial(k + p, k) * _h2_closed(n - k)
                    for k in range(n + 1))


# Half-integer harmonic differences in normalized form: the value at index
# j stands for H_{j-1/2} - H_{-1/2}, so H_{1/2} is index 1 and H_{-3/2}
# index -1.
HALF_INTEGER_RELATIONS = {
    'H(n-1/2)-H(-1/2)': (
        lambda n: half_harmonic_offset(n),
        lambda n: 2 * odd_harmonic(n)),
    'H(n-1/2)-H(1/2)': (
        lambda n: half_harmonic_offset(n) - half_harmonic_offset(1),
        lambda n: 2 * (odd_harmonic(n) - 1)),
    'H(n+1/2)-H(-1/2)': (
        lambda n: half_harmonic_offset(n + 1),
        lambda n: 2 * odd_harmonic(n + 1)),
    'H(n+1/2)-H(1/2)': (
        lambda n: half_harmonic_offset(n + 1) - half_harmonic_offset(1),
        lambda n: 2 * (odd_harmonic(n + 1) - 1)),
    'H(n+1/2)-H(n-1/2)': (
        lambda n: half_harmonic_offset(n + 1) - half_harmonic_offset(n),
        lambda n: Rational(2, 2 * n + 1)),
    'H(n-1/2)-H(-3/2)': (
        lambda n: half_harmonic_offset(n) - half_harmonic_offset(-1),
        lambda n: 2 * (odd_harmonic(n) - 1)),
    'H(n+1/2)-H(-3/2)': (
        lambda n: half_harmonic_offset(n + 1) - half_harmonic_offset(-1),
        lambda n: 2 * (odd_harmonic(n + 1) - 1)),
}


class LemmaCzxfdu7(Section4):
    __anchor__ = ('H_{n-1/2} - H_{-1/2} = 2 O_n and six further '
                  'half-integer harmonic differences in terms of O_n')
    grid = Grid(relation=Choice(HALF_INTEGER_RELATIONS), n=Range(0, 30))

    def lhs(self, relation, n):
        return HALF_INTEGER_RELATIONS[relation][0](n)

    def rhs(self, relation, n):
        return HALF_INTEGER_RELATIONS[relation][1](n)


class HarmonicEvenSplit(Section4):
    __anchor__ = 'H_{2n} = 1/2 H_n + O_n'
    grid = Grid(n=Range(0, 40))

    def lhs(self, n):
        return harmonic(2 * n)

    def rhs(self, n):
        return harmonic(n) / 2 + odd_harmonic(n)


class HarmonicOddSplit(Section4):
    __anchor__ = 'H_{2n-1} = 1/2 H_{n-1} + O_n'
    grid = Grid(n=Range(1, 40))

    def lhs(self, n):
        return harmonic(2 * n - 1)

    def rhs(self, n):
        return harmonic(n - 1) / 2 + odd_harmonic(n)


class LemmaM2jjbl5(Section4):
    __anchor__ = ('H_{r,p+1/2} = 2^(1-2r) C(2p,p)^-1 C(2(r+p),r+p) '
                  'C(r+p,r) (O_{r+p} - O_p)')
    grid = Grid(r=Range(0, 15), p=Range(0, 15))

    def lhs(self, r, p):
        return hyperharmonic_half_binomial(r, p)

    def rhs(self, r, p):
        return hyperharmonic_half(r, p)


class HyperharmonicHalfGf(Section4):
    __anchor__ = 'sum H_{r,p+1/2} z^r = -ln(1-z) / (1-z)^(p+1/2)'
    grid = Grid(p=Range(0, 5), r=Range(0, 30))

    def lhs(self, p, r):
        return hyperharmonic_half(r, p)

    def rhs(self, p, r):
        return power_series.cached(power_series.gf_hyperharmonic_half,
                                   r, p)[r]


class J80dqx2(Section4):
    __anchor__ = ('C(r+p-1/2, r) = 2^(-2r) C(2p,p)^-1 C(2(r+p),r+p) '
                  'C(r+p,r)')
    grid = Grid(r=Range(0, 12), p=Range(0, 12))

    def lhs(self, r, p):
        return gen_binomial(Rational(2 * (r + p) - 1, 2), r)

    def rhs(self, r, p):
        return Rational(_central_weight(r, p), 4 ** r * central_binomial(p))


class ThmSuzj3to(Section4):
    __anchor__ = ('sum_{k=1..n} 2^(-2k) C(2(k+p),k+p) C(k+p,k) '
                  '(O_{k+p} - O_p) = 2^(-2n-1) (p+1)/(2p+1) '
                  'C(2(n+p+1),n+p+1) C(n+p+1,n) (O_{n+p+1} - O_{p+1})')
    grid = Grid(n=Range(0, 20), p=Range(0, 20))

    def lhs(self, n, p):
        return rsum(Rational(_central_weight(k, p), 4 ** k) *
                    (odd_harmonic(k + p) - odd_harmonic(p))
                    for k in range(1, n + 1))

    def rhs(self, n, p):
        return (Rational((p + 1) * _central_weight(n, p + 1),
                         2 * 4 ** n * (2 * p + 1)) *
                (odd_harmonic(n + p + 1) - odd_harmonic(p + 1)))


class Oklok93(Section4):
    __anchor__ = ('sum_{k=1..n} O_k / 2^(2k) C(2k,k) = '
                  '(n+1) / 2^(2n+1) C(2(n+1),n+1) (O_{n+1} - 1)')
    grid = Grid(n=Range(0, 30))

    def lhs(self, n):
        return rsum(Rational(central_binomial(k), 4 ** k) * odd_harmonic(k)
                    for k in range(1, n + 1))

    def rhs(self, n):
        return (Rational((n + 1) * central_binomial(n + 1), 2 * 4 ** n) *
                (odd_harmonic(n + 1) - 1))


class ThmOddId1(Section4):
    __anchor__ = ('sum_{k=0..n} C(2k,k) O_k H_{n-k}(m) / 4^k = '
                  '1/2 sum_{k=0..n} C(2k,k) H_{n-k}(m+1) / 4^k')
    grid = Grid(m=Range(0, 4), n=Range(0, 25))

    def lhs(self, m, n):
        return rsum(Rational(central_binomial(k), 4 ** k) * odd_harmonic(k) *
                    harmonic_like(n - k, m) for k in range(n + 1))

    def rhs(self, m, n):
        return rsum(Rational(central_binomial(k), 4 ** k) *
                    harmonic_like(n - k, m + 1) for k in range(n + 1)) / 2


class Zfc0q8z(Section4):
    __anchor__ = ('sum_{k=0..n} C(2k,k) O_k / 4^k = '
                  '1/2 sum_{k=0..n} C(2k,k) H_{n-k} / 4^k')
    grid = Grid(n=Range(0, 30))

    def lhs(self, n):
        return rsum(Rational(central_binomial(k), 4 ** k) * odd_harmonic(k)
                    for k in range(n + 1))

    def rhs(self, n):
        return rsum(Rational(central_binomial(k), 4 ** k) * harmonic(n - k)
                    for k in range(n + 1)) / 2


class OddId1M1(Section4):
    __anchor__ = ('sum_{k=0..n} C(2k,k) O_k H_{n-k} / 4^k = '
                  '1/2 sum_{k=0..n} C(2k,k) (H_{n-k}^2 - H_{n-k}^(2)) / 4^k')
    grid = Grid(n=Range(0, 30))

    def lhs(self, n):
        return rsum(Rational(central_binomial(k), 4 ** k) * odd_harmonic(k) *
                    harmonic(n - k) for k in range(n + 1))

    def rhs(self, n):
        return rsum(Rational(central_binomial(k), 4 ** k) * _h2_closed(n - k)
                    for k in range(n + 1)) / 2


class Tb6ik5l(Section4):
    __anchor__ = ('sum_{k=0..n} C(2k,k) H_{n-k} / 2^(2k) = '
                  '(n+1) / 2^(2n) C(2(n+1),n+1) (O_{n+1} - 1)')
    grid = Grid(n=Range(0, 30))

    def lhs(self, n):
        return rsum(Rational(central_binomial(k), 4 ** k) * harmonic(n - k)
                    for k in range(n + 1))

    def rhs(self, n):
        return (Rational((n + 1) * central_binomial(n + 1), 4 ** n) *
                (odd_harmonic(n + 1) - 1))


class ThmGeneralP(Section4):
    __anchor__ = ('sum_{k=0..n} 2^(-2k) C(2(k+p),k+p) C(k+p,k) H_{n-k}(m) '
                  '(O_{k+p} - O_p) = 1/2 sum_{k=0..n} 2^(-2k) '
                  'C(2(k+p),k+p) C(k+p,k) H_{n-k}(m+1)')
    grid = Grid(p=Range(0, 5), m=Range(0, 3), n=Range(0, 20))

    def lhs(self, p, m, n):
        return rsum(Rational(_central_weight(k, p), 4 ** k) *
                    harmonic_like(n - k, m) *
                    (odd_harmonic(k + p) - odd_harmonic(p))
                    for k in range(n + 1))

    def rhs(self, p, m, n):
        return rsum(Rational(_central_weight(k, p), 4 ** k) *
                    harmonic_like(n - k, m + 1) for k in range(n + 1)) / 2


class ThmGeneralPM0(Section4):
    __id__ = 'thm_general_p_m0'
    __anchor__ = ('sum_{k=0..n} 2^(-2k) C(2(k+p),k+p) C(k+p,k) H_{n-k} = '
                  '2^(-2n) (p+1)/(2p+1) C(2(n+p+1),n+p+1) C(n+p+1,n) '
                  '(O_{n+p+1} - O_{p+1})')
    grid = Grid(p=Range(0, 8), n=Range(0, 20))

    def lhs(self, p, n):
        return rsum(Rational(_central_weight(k, p), 4 ** k) * harmonic(n - k)
                    for k in range(n + 1))

    def rhs(self, p, n):
        return (Rational((p + 1) * _central_weight(n, p + 1),
                         4 ** n * (2 * p + 1)) *
                (odd_harmonic(n + p + 1) - odd_harmonic(p + 1)))


class LemmaQrsgpmt(Section4):
    __anchor__ = ('sum_{k=1..n} k (a_k - a_{k-1}) = '
                  'n a_n - sum_{k=1..n} a_{k-1}')
    grid = Grid(sequence=Choice(sorted(telescoping.FIXTURE_SEQUENCES)),
                n=Range(1, 25))

    def lhs(self, sequence, n):
        return self.sides(dict(sequence=sequence, n=n))[0]

    def rhs(self, sequence, n):
        return self.sides(dict(sequence=sequence, n=n))[1]

    def sides(self, binding):
        return telescoping.telescope_linear_check(
            telescoping.FIXTURE_SEQUENCES[binding['sequence']], binding['n'])


class ThmXld8bhi(Section4):
    __anchor__ = 'sum_{k=1..n} k H_{k,p} = n H_{n,p+1} - H_{n-1,p+2}'
    grid = Grid(p=Range(0, 6), n=Range(1, 25))

    def lhs(self, p, n):
        return rsum(k * hyperharmonic(k, p) for k in range(1, n + 1))

    def rhs(self, p, n):
        return n * hyperharmonic(n, p + 1) - hyperharmonic(n - 1, p + 2)


class ThmKWeightedHalf(Section4):
    __anchor__ = ('sum_{k=1..n} k / 2^(2k) C(2(k+p),k+p) C(k+p,k) '
                  '(O_{k+p} - O_p) = n / 2^(2n) C(2(p+1),p+1)^-1 C(2p,p) '
                  'C(2(n+p+1),n+p+1) C(n+p+1,n) (O_{n+p+1} - O_{p+1}) - '
                  '1 / 2^(2n-2) C(2(p+2),p+2)^-1 C(2p,p) C(2(n+p+1),n+p+1) '
                  'C(n+p+1,n-1) (O_{n+p+1} - O_{p+2})')
    grid = Grid(p=Range(0, 8), n=Range(0, 20))

    def lhs(self, p, n):
        return rsum(Rational(k * _central_weight(k, p), 4 ** k) *
                    (odd_harmonic(k + p) - odd_harmonic(p))
                    for k in range(1, n + 1))

    def rhs(self, p, n):
        top = n + p + 1
        first = (Rational(n * central_binomial(p),
                          4 ** n * central_binomial(p + 1)) *
                 central_binomial(top) * binomial(top, n) *
                 (odd_harmonic(top) - odd_harmonic(p + 1)))
        second = (Rational(4 * central_binomial(p),
                           4 ** n * central_binomial(p + 2)) *
                  central_binomial(top) * binomial(top, n - 1) *
                  (odd_harmonic(top) - odd_harmonic(p + 2)))
        return first - second


class KWeightedHalfP0(Section4):
    __anchor__ = ('sum_{k=1..n} k / 2^(2k) C(2k,k) O_k = '
                  'n(n+1) / 2^(2n+1) C(2(n+1),n+1) (O_{n+1} - 1) - '
                  'n(n+1) / (3 2^(2n)) C(2(n+1),n+1) (O_{n+1} - 4/3)')
    grid = Grid(n=Range(0, 30))

    def lhs(self, n):
        return rsum(Rational(k * central_binomial(k), 4 ** k) * odd_harmonic(k)
                    for k in range(1, n + 1))

    def rhs(self, n):
        weight = n * (n + 1) * central_binomial(n + 1)
        o = odd_harmonic(n + 1)
        return (Rational(weight, 2 * 4 ** n) * (o - 1) -
                Rational(weight, 3 * 4 ** n) * (o - Rational(4, 3)))


class ThmYycg1tg(Section4):
    __anchor__ = ('sum_{k=1..n} C(2k,k)^-1 C(2(k+p),k+p) C(k+p,k) '
                  '(O_{k+p} - O_k) = 1/4 C(2n,n)^-1 C(2(n+p+1),n+p+1) '
                  'C(n+p+1,n) (O_{n+p+1} - O_n) - 1/4 C(2(p+1),p+1) O_{p+1}')
    grid = Grid(p=Range(0, 8), n=Range(0, 20))

    def lhs(self, p, n):
        return rsum(Rational(_central_weight(k, p), central_binomial(k)) *
                    (odd_harmonic(k + p) - odd_harmonic(k))
                    for k in range(1, n + 1))

    def rhs(self, p, n):
        return (Rational(_central_weight(n, p + 1), 4 * central_binomial(n)) *
                (odd_harmonic(n + p + 1) - odd_harmonic(n)) -
                Rational(central_binomial(p + 1), 4) * odd_harmonic(p + 1))


class OddCentralGf(Section4):
    __anchor__ = ('sum C(2n,n) O_n z^n = '
                  '1/2 sqrt(1-4z) (-ln(1-4z)) / (1-4z)')
    grid = Grid(n=Range(0, 40))

    def lhs(self, n):
        return central_binomial(n) * odd_harmonic(n)

    def rhs(self, n):
        return power_series.cached(power_series.gf_odd_central, n)[n]


class CentralBinomialGf(Section4):
    __anchor__ = 'sum C(2n,n) z^n = 1 / sqrt(1-4z)'
    grid = Grid(n=Range(0, 40))

    def lhs(self, n):
        return central_binomial(n)

    def rhs(self, n):
        return power_series.cached(power_series.gf_central_binomial, n)[n]
