"""Classes to handle sequence parameters and data type definitions"""

import logging

from harmony import abc, exact_math, exception

logger = logging.getLogger(__name__)


class ParameterDescriptor:
    """
    Descriptor that validates user parameter input and gets/sets parameters
    as instance attributes. Not instantiated by user.
    """

    def __init__(self, name, param):
        self._param_name = name
        self._name = '_' + name
        self._data_type = param.data_type
        self._default = param.default

    def __get__(self, obj, objtype):
        if obj is None:
            return objtype.__parameters__[self._param_name]
        return getattr(obj, self._name, self._default)

    def __set__(self, obj, val):
        val = self._data_type.validate(val)
        setattr(obj, self._name, val)


class Parameter(abc.BaseParameter):
    """
    API class used to declare sequence parameters. Replaced with
    :py:class:`ParameterDescriptor` by :py:class:`harmony.sequences.FamilyMeta`.

    :param harmony.abc.DataType data_type: Str or class of data type
    :param default: Default value for this parameter. Parameters without a
        default are required.
    """

    __descriptor__ = ParameterDescriptor

    def __init__(self, data_type, *, default=None):
        if isinstance(data_type, type):
            data_type = data_type()
        self._data_type = data_type
        self._default = default

    @property
    def data_type(self):
        return self._data_type

    @property
    def default(self):
        return self._default

    @property
    def required(self):
        return self._default is None


# Data types
class Integer(abc.DataType):
    """Arbitrary precision integer datatype"""

    def validate(self, val):
        if val is not None:
            if isinstance(val, bool):
                raise exception.ValidationError(
                    'Not a valid integer: {}'.format(val))
            try:
                result = int(val)
            except (ValueError, TypeError) as e:
                raise exception.ValidationError(
                    'Not a valid integer: {}'.format(val)) from e
            if not isinstance(val, str) and result != val:
                raise exception.ValidationError(
                    'Not a valid integer: {}'.format(val))
            return result

    def to_text(self, val=None):
        return super().to_text(val=val)

    def to_json(self, val=None):
        if val is None:
            val = self._val
        return int(val)

    def from_text(self, text):
        return super().from_text(text)


class NonNegativeInteger(Integer):
    """Integer >= 0, e.g. the order m of H_n(m)"""

    def validate(self, val):
        val = super().validate(val)
        if val is not None and val < 0:
            raise exception.ValidationError(
                'Not a non-negative integer: {}'.format(val))
        return val


class PositiveInteger(Integer):
    """Integer >= 1, e.g. the order r of H_n^(r)"""

    def validate(self, val):
        val = super().validate(val)
        if val is not None and val < 1:
            raise exception.ValidationError(
                'Not a positive integer: {}'.format(val))
        return val


class Rational(abc.DataType):
    """Exact rational datatype, text form ``p/q``"""

    def validate(self, val):
        if val is not None:
            if isinstance(val, (bool, float)):
                raise exception.ValidationError(
                    'Not an exact rational: {}'.format(val))
            return exact_math.parse(val)

    def to_text(self, val=None):
        if val is None:
            val = self._val
        return exact_math.to_string(val)

    def from_text(self, text):
        return super().from_text(text)


class Boolean(abc.DataType):
    """Flag datatype, text form ``true``/``false``"""

    def validate(self, val):
        if val is not None:
            if not isinstance(val, bool):
                raise exception.ValidationError(
                    'Not a valid boolean: {}'.format(val))
            return val

    def to_text(self, val=None):
        if val is None:
            val = self._val
        return 'true' if val else 'false'

    def to_json(self, val=None):
        if val is None:
            val = self._val
        return bool(val)

    def from_text(self, text):
        if text not in ('true', 'false'):
            raise exception.ValidationError(
                'Not a valid boolean: {}'.format(text))
        return text == 'true'


class String(abc.DataType):
    """Free text, e.g. approximate decimal renderings"""

    def validate(self, val):
        if val is not None:
            try:
                return str(val)
            except Exception as e:
                raise exception.ValidationError(
                    'Invalid string {}'.format(val)) from e

    def to_text(self, val=None):
        return super().to_text(val=val)

    def from_text(self, text):
        return super().from_text(text)
