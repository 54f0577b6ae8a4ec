import pytest

from harmony import exception
from harmony.exact_math import Rational
from harmony.grid import Choice, Grid, Range


def test_range():
    axis = Range(1, 4)
    assert list(axis.values()) == [1, 2, 3, 4]
    assert list(axis.values(2)) == [1, 2]
    assert axis.describe('n') == 'n=1..4'
    with pytest.raises(exception.ValidationError):
        Range(3, 2)


def test_choice():
    axis = Choice([(Rational(1, 2), Rational(-1, 3)), (1, 1)])
    assert axis.values(100) == ((Rational(1, 2), Rational(-1, 3)), (1, 1))
    assert axis.describe('pair') == 'pair in {(1/2, -1/3), (1, 1)}'
    with pytest.raises(exception.ValidationError):
        Choice([])


def test_bindings_in_declared_order():
    grid = Grid(m=Range(0, 1), n=Range(0, 2))
    assert list(grid.bindings()) == [
        {'m': 0, 'n': 0}, {'m': 0, 'n': 1}, {'m': 0, 'n': 2},
        {'m': 1, 'n': 0}, {'m': 1, 'n': 1}, {'m': 1, 'n': 2},
    ]
    assert grid.names == ('m', 'n')


def test_overrides():
    grid = Grid(n=Range(0, 20), m=Range(0, 5))
    assert grid.cardinality() == 126
    assert grid.cardinality({'n_max': 10, 'm_max': 3}) == 44
    assert grid.cardinality({'p_max': 3}) == 126


def test_where():
    grid = Grid(n=Range(0, 15), m=Range(1, 16),
                where=lambda b: b['n'] + b['m'] <= 16,
                where_text='n + m <= 16')
    assert grid.cardinality() == 136
    assert grid.describe() == 'n=0..15, m=1..16; n + m <= 16'


def test_grid_needs_an_axis():
    with pytest.raises(exception.ValidationError):
        Grid()
