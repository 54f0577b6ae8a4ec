"""Test parameter data types and descriptors."""

import pytest

from harmony import exception, properties, sequences
from harmony.exact_math import Rational


def test_set_change_parameter():
    family = sequences.HarmonicLike(m=1)
    assert family.m == 1
    family.m = 3
    assert family.m == 3
    assert family(4) == sequences.harmonic_like(4, 3)


def test_validation():
    family = sequences.Stirling1(k=2)
    with pytest.raises(exception.ValidationError):
        family.k = 'hello'
    with pytest.raises(exception.ValidationError):
        family.k = -2


def test_setattr_validation():
    family = sequences.Hyperharmonic(p=1)
    setattr(family, 'p', 4)
    assert family.p == 4
    with pytest.raises(exception.ValidationError):
        setattr(family, 'p', 1.5)


def test_parameter_default():
    param = properties.Parameter(properties.Integer, default=3)
    assert not param.required
    assert param.default == 3
    assert isinstance(param.data_type, properties.Integer)


# Data types
def test_integer():
    int_ = properties.Integer()
    assert int_.validate(3) == 3
    assert int_.validate('-12') == -12
    assert int_.validate(Rational(6, 3)) == 2
    with pytest.raises(exception.ValidationError):
        int_.validate('hello')
    with pytest.raises(exception.ValidationError):
        int_.validate(True)
    with pytest.raises(exception.ValidationError):
        int_.validate(2.5)
    with pytest.raises(exception.ValidationError):
        int_.validate(Rational(1, 2))
    assert int_.to_text(5) == '5'
    assert int_.to_json(5) == 5
    assert int_.from_text('5') == 5


def test_non_negative_and_positive_integer():
    assert properties.NonNegativeInteger().validate(0) == 0
    with pytest.raises(exception.ValidationError):
        properties.NonNegativeInteger().validate(-1)
    assert properties.PositiveInteger().validate(1) == 1
    with pytest.raises(exception.ValidationError):
        properties.PositiveInteger().validate(0)


def test_rational():
    rational = properties.Rational()
    assert rational.validate('-3/4') == Rational(-3, 4)
    assert rational.validate(2) == 2
    with pytest.raises(exception.ValidationError):
        rational.validate(0.5)
    with pytest.raises(exception.ValidationError):
        rational.validate('a/b')
    with pytest.raises(exception.DomainError):
        rational.validate('1/0')
    assert rational.to_text(Rational(10, -4)) == '-5/2'
    assert rational.to_json(Rational(1, 3)) == '1/3'
    assert rational.from_text('7/2') == Rational(7, 2)


def test_bound_value():
    rational = properties.Rational('2/6')
    assert rational.to_text() == '1/3'
    with pytest.raises(exception.ValidationError):
        properties.Integer('x')


def test_boolean():
    flag = properties.Boolean()
    assert flag.to_text(True) == 'true'
    assert flag.to_text(False) == 'false'
    assert flag.to_json(False) is False
    assert flag.from_text('true') is True
    with pytest.raises(exception.ValidationError):
        flag.from_text('yes')
    with pytest.raises(exception.ValidationError):
        flag.validate(1)


def test_string():
    text = properties.String()
    assert text.validate(1) == '1'
    assert text.to_text('0.333') == '0.333'
    assert text.to_json('0.333') == '0.333'
