"""Exact integer and rational arithmetic used by every other module.

Scalars are :py:class:`fractions.Fraction` instances, which are kept in
canonical form (positive denominator, reduced, zero as ``0/1``) after every
operation. The helpers below add explicit domain errors and the binomial
conventions used throughout the package.
"""

import decimal
import fractions
import logging
import math

from harmony import exception

logger = logging.getLogger(__name__)


Rational = fractions.Fraction

ZERO = Rational(0)
ONE = Rational(1)
HALF = Rational(1, 2)


def rational(numerator, denominator=1):
    """
    Build a canonical rational.

    :param numerator: int, Rational or a string such as ``'-3/4'``
    :param denominator: int or Rational, must be non-zero

    :returns: :py:class:`Rational`
    """
    if denominator == 0:
        raise exception.DomainError(
            'Zero denominator: {}/{}'.format(numerator, denominator))
    try:
        if denominator == 1:
            return Rational(numerator)
        return Rational(numerator, denominator)
    except ZeroDivisionError as e:
        raise exception.DomainError(
            'Zero denominator: {}'.format(numerator)) from e
    except (ValueError, TypeError) as e:
        raise exception.ValidationError(
            'Not a valid rational: {}/{}'.format(numerator, denominator)) from e


def add(x, y):
    return Rational(x) + Rational(y)


def subtract(x, y):
    return Rational(x) - Rational(y)


def multiply(x, y):
    return Rational(x) * Rational(y)


def negate(x):
    return -Rational(x)


def divide(x, y):
    """Exact quotient; division by zero raises :py:class:`DomainError`."""
    if y == 0:
        raise exception.DomainError('Division by zero: {} / 0'.format(x))
    return Rational(x) / Rational(y)


def power(x, exponent):
    """
    Integer power with 0^0 = 1.

    :param x: base
    :param int exponent: any integer; negative exponents need ``x != 0``
    """
    if not isinstance(exponent, int):
        raise exception.ValidationError(
            'Not an integer exponent: {}'.format(exponent))
    if exponent < 0 and x == 0:
        raise exception.DomainError(
            'Zero raised to negative power {}'.format(exponent))
    return Rational(x) ** exponent


def rsum(terms):
    """Exact sum of rational terms; the empty sum is 0."""
    total = ZERO
    for term in terms:
        total += term
    return total


def factorial(n):
    if n < 0:
        raise exception.DomainError('Factorial of negative {}'.format(n))
    return math.factorial(n)


def binomial(n, k):
    """
    Binomial coefficient C(n, k) for integers.

    Returns 0 for k < 0 and for 0 <= n < k, which is the summation
    convention used by every identity in the registry.
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k)
    # C(n, k) = (-1)^k C(k - n - 1, k) for negative n
    return (-1) ** k * math.comb(k - n - 1, k)


def falling_factorial(x, k):
    result = ONE
    x = Rational(x)
    for i in range(k):
        result *= x - i
    return result


def gen_binomial(x, k):
    """
    Generalized binomial coefficient x(x-1)...(x-k+1)/k! for rational x.

    :param x: Rational (or int) upper argument
    :param int k: non-negative lower argument

    :returns: :py:class:`Rational`
    """
    if k < 0:
        return ZERO
    return falling_factorial(x, k) / math.factorial(k)


def central_binomial(n):
    return math.comb(2 * n, n)


def to_string(x):
    """Serialize as ``p/q`` with the sign on the numerator, or ``p``."""
    return str(Rational(x))


def parse(text):
    """Inverse of :py:func:`to_string`."""
    try:
        return Rational(text)
    except ZeroDivisionError as e:
        raise exception.DomainError(
            'Zero denominator: {}'.format(text)) from e
    except (ValueError, TypeError) as e:
        raise exception.ValidationError(
            'Not a valid rational: {}'.format(text)) from e


def to_decimal(x, digits):
    """Approximate decimal rendering with ``digits`` significant digits."""
    x = Rational(x)
    with decimal.localcontext() as ctx:
        ctx.prec = digits
        value = decimal.Decimal(x.numerator) / decimal.Decimal(x.denominator)
    return str(value)
