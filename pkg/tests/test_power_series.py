"""Test truncated power series and the generating functions built on them."""

import math

import pytest

from harmony import exception, power_series, sequences
from harmony.exact_math import Rational, binomial, central_binomial
from harmony.power_series import TruncatedSeries


def test_series_is_immutable_and_hashable():
    f = TruncatedSeries([1, 2, 3])
    assert f.order == 2
    assert f.coeffs == (1, 2, 3)
    assert hash(f) == hash(TruncatedSeries([Rational(1), 2, 3]))
    with pytest.raises(AttributeError):
        f.extra = 1


def test_empty_series():
    with pytest.raises(exception.ValidationError):
        TruncatedSeries([])


def test_truncate():
    f = power_series.geometric(2, 6)
    assert f.truncate(3) == TruncatedSeries([1, 2, 4, 8])
    with pytest.raises(exception.ValidationError):
        f.truncate(7)


def test_mixed_orders_truncate_to_smaller():
    f = power_series.geometric(1, 5)
    g = power_series.geometric(1, 3)
    assert (f + g).order == 3
    assert (f * g).order == 3
    assert (f - g) == power_series.zero(3)


def test_scalar_multiplication():
    f = TruncatedSeries([1, 1, 1])
    assert f * Rational(1, 2) == TruncatedSeries(
        [Rational(1, 2), Rational(1, 2), Rational(1, 2)])
    assert 3 * f == TruncatedSeries([3, 3, 3])
    assert -f == TruncatedSeries([-1, -1, -1])


def test_constructors():
    assert power_series.constant(5, 2) == TruncatedSeries([5, 0, 0])
    assert power_series.variable(3) == TruncatedSeries([0, 1, 0, 0])
    assert power_series.variable(0) == TruncatedSeries([0])
    assert power_series.polylog(2, 3) == TruncatedSeries(
        [0, 1, Rational(1, 4), Rational(1, 9)])


def test_neg_log_one_minus():
    assert list(power_series.neg_log_one_minus(4, 3)) == \
        [0, 4, 8, Rational(64, 3)]
    assert list(power_series.log_one_plus(3)) == \
        [0, 1, Rational(-1, 2), Rational(1, 3)]


def test_power():
    z1 = TruncatedSeries([1, 1, 0, 0, 0])
    assert z1 ** 3 == TruncatedSeries([1, 3, 3, 1, 0])
    assert power_series.power(z1, 0) == power_series.constant(1, 4)
    with pytest.raises(exception.DomainError):
        power_series.power(z1, -1)


def test_inverse():
    one_minus = TruncatedSeries([1, -1, 0, 0])
    assert power_series.inverse(one_minus) == power_series.geometric(1, 3)
    with pytest.raises(exception.DomainError):
        power_series.inverse(power_series.variable(3))


def test_inverse_round_trip(rng):
    for _ in range(20):
        coeffs = [Rational(rng.randint(1, 9))] + [
            Rational(rng.randint(-9, 9), rng.randint(1, 9))
            for _ in range(8)]
        f = TruncatedSeries(coeffs)
        assert f * power_series.inverse(f) == power_series.constant(1, 8)


def test_sqrt():
    one_minus_4z = TruncatedSeries([1, -4, 0, 0, 0])
    root = power_series.sqrt(one_minus_4z)
    assert root * root == one_minus_4z
    assert list(power_series.inverse(root)) == [1, 2, 6, 20, 70]
    with pytest.raises(exception.DomainError):
        power_series.sqrt(TruncatedSeries([4, 1]))


def test_scale():
    assert power_series.scale(power_series.geometric(1, 3), 2) == \
        power_series.geometric(2, 3)


def test_compose_mobius_identity():
    f = power_series.neg_log_one_minus(1, 8)
    assert power_series.compose_mobius(f, 1, 0) == f


def test_compose_mobius_of_variable():
    # z / (1 - b z)
    composed = power_series.compose_mobius(power_series.variable(5), 1, 3)
    assert list(composed) == [0, 1, 3, 9, 27, 81]


def test_gf_harmonic_like_first_order():
    assert list(power_series.gf_harmonic_like(1, 4)) == \
        [0, 1, Rational(3, 2), Rational(11, 6), Rational(25, 12)]


@pytest.mark.parametrize('m', range(6))
def test_gf_harmonic_like(m):
    series = power_series.gf_harmonic_like(m, 40)
    assert list(series) == [sequences.harmonic_like(n, m) for n in range(41)]


def test_gf_central_binomial():
    series = power_series.gf_central_binomial(20)
    assert list(series) == [central_binomial(n) for n in range(21)]


def test_gf_odd_central():
    series = power_series.gf_odd_central(30)
    assert series[2] == 8
    assert series[3] == Rational(92, 3)
    for n in range(31):
        assert series[n] == central_binomial(n) * sequences.odd_harmonic(n)


def test_gf_hyperharmonic_half():
    series = power_series.gf_hyperharmonic_half(2, 15)
    for r in range(16):
        assert series[r] == sequences.hyperharmonic_half(r, 2)


def test_cached_truncates():
    series = power_series.cached(power_series.gf_harmonic_like, 10, 2)
    assert series.order == 10
    assert power_series.cached(power_series.gf_harmonic_like, 10, 2) == series


@pytest.mark.parametrize('name,params', [
    ('harmonic', {}),
    ('harmonic_order', {'r': 3}),
    ('odd_harmonic', {}),
    ('harmonic_like', {'m': 3}),
    ('stirling1', {'k': 2}),
    ('hyperharmonic', {'p': 0}),
    ('hyperharmonic', {'p': 3}),
    ('hyperharmonic_half', {'p': 1}),
])
def test_cross_check(name, params):
    family = sequences.spec(name, **params)
    rows = power_series.cross_check(family, 25)
    assert rows
    assert all(equal for _, _, _, equal in rows)


def test_cross_check_row_count():
    rows = power_series.cross_check(sequences.spec('harmonic_like', m=3), 40)
    assert len(rows) == 41
    n, recurrence_value, gf_value, equal = rows[4]
    assert n == 4
    assert recurrence_value == gf_value == Rational(5, 2)
    assert equal is True


def test_cross_check_hyperharmonic_order_zero_skips_undefined():
    rows = power_series.cross_check(sequences.spec('hyperharmonic', p=0), 10)
    assert [row[0] for row in rows] == list(range(1, 11))


def test_cross_check_odd_central():
    rows = power_series.cross_check(power_series.ODD_CENTRAL, 30)
    assert len(rows) == 31
    assert all(row[-1] for row in rows)


def test_cross_check_unsupported_family():
    with pytest.raises(exception.RegistryError):
        power_series.cross_check(sequences.spec('fibonacci'), 10)
    assert 'fibonacci' not in power_series.GF_CHECK_FAMILIES


def _random_unit_series(rng, order):
    return TruncatedSeries([1] + [Rational(rng.randint(-9, 9),
                                           rng.randint(1, 9))
                                  for _ in range(order)])


def test_sqrt_squares_back(rng):
    for _ in range(10):
        f = _random_unit_series(rng, 16)
        root = power_series.sqrt(f)
        assert root[0] == 1
        assert root * root == f


def test_inverse_is_an_involution(rng):
    for _ in range(10):
        f = _random_unit_series(rng, 20)
        assert power_series.inverse(power_series.inverse(f)) == f


def test_compose_mobius_nests(rng):
    # a z / (1 - b z) after a' z / (1 - b' z) is a a' z / (1 - (b' + a' b) z)
    f = _random_unit_series(rng, 12)
    for _ in range(2):
        a, b = Rational(rng.randint(1, 5), rng.randint(1, 4)), \
            Rational(rng.randint(-5, 5), rng.randint(1, 4))
        a2, b2 = Rational(rng.randint(-5, 5), rng.randint(1, 4)), \
            Rational(rng.randint(-5, 5), rng.randint(1, 4))
        nested = power_series.compose_mobius(
            power_series.compose_mobius(f, a, b), a2, b2)
        assert nested == power_series.compose_mobius(f, a * a2, b2 + a2 * b)


def test_compose_mobius_of_geometric():
    # 1 / (1 - 2z / (1 - 3z)) = (1 - 3z) / (1 - 5z)
    composed = power_series.compose_mobius(power_series.geometric(1, 12), 2, 3)
    assert composed[0] == 1
    for n in range(1, 13):
        assert composed[n] == 5 ** n - 3 * 5 ** (n - 1)


def test_compose_mobius_binomial_sum_oracle():
    order = 12
    h = power_series.gf_harmonic_like(1, order)
    s = power_series.geometric(3, order) * \
        power_series.compose_mobius(h, 2, 3)
    for n in range(order + 1):
        assert s[n] == sum(binomial(n, k) * 2 ** k * 3 ** (n - k) *
                           sequences.harmonic(k) for k in range(n + 1))


@pytest.mark.parametrize('k', range(7))
def test_gf_stirling_column(k):
    series = power_series.gf_stirling_column(k, 40)
    for n in range(41):
        assert series[n] * math.factorial(n) == sequences.stirling1(n, k)
