"""Parameter grids that identities are verified over"""

import itertools
import logging

from harmony import exception

logger = logging.getLogger(__name__)


class Range:
    """
    Closed integer range ``low..high``. The upper bound may be overridden at
    verification time with the ``<axis>_max`` key.
    """

    def __init__(self, low, high):
        if high < low:
            raise exception.ValidationError(
                'Empty range {}..{}'.format(low, high))
        self._low = low
        self._high = high

    @property
    def low(self):
        return self._low

    @property
    def high(self):
        return self._high

    def values(self, high=None):
        if high is None:
            high = self._high
        return range(self._low, high + 1)

    def describe(self, name):
        return '{}={}..{}'.format(name, self._low, self._high)


class Choice:
    """
    Finite set of values, e.g. rational parameters or (a, b) pairs.

    :param values: Values in iteration order
    """

    def __init__(self, values):
        self._values = tuple(values)
        if not self._values:
            raise exception.ValidationError('Empty choice')

    def values(self, high=None):
        return self._values

    def describe(self, name):
        return '{} in {{{}}}'.format(
            name, ', '.join(_describe_value(v) for v in self._values))


def _describe_value(value):
    if isinstance(value, tuple):
        return '({})'.format(', '.join(str(v) for v in value))
    return str(value)


class Grid:
    """
    Cartesian product of named axes, optionally filtered. Bindings are
    generated in lexicographic order of the axes as declared.

    :param str where_text: Human readable form of ``where``
    :param where: Predicate on a binding dict; bindings failing it are
        excluded from the grid
    :param axes: Axis name to :py:class:`Range` or :py:class:`Choice`
    """

    def __init__(self, *, where=None, where_text=None, **axes):
        if not axes:
            raise exception.ValidationError('A grid needs at least one axis')
        self._axes = axes
        self._where = where
        self._where_text = where_text

    @property
    def names(self):
        return tuple(self._axes)

    def bindings(self, overrides=None):
        """
        Yield bindings as dicts.

        :param dict overrides: Optional upper bounds such as ``{'n_max': 10}``;
            keys for axes the grid does not have are ignored
        """
        overrides = overrides or {}
        names = self.names
        axes = [self._axes[name].values(overrides.get(name + '_max'))
                for name in names]
        for values in itertools.product(*axes):
            binding = dict(zip(names, values))
            if self._where is None or self._where(binding):
                yield binding

    def cardinality(self, overrides=None):
        return sum(1 for _ in self.bindings(overrides))

    def describe(self):
        text = ', '.join(axis.describe(name)
                         for name, axis in self._axes.items())
        if self._where_text:
            text = '{}; {}'.format(text, self._where_text)
        return text

    def __repr__(self):
        return '<Grid({})>'.format(self.describe())
