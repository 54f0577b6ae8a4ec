import abc
import logging

logger = logging.getLogger(__name__)


class DataType(abc.ABC):
    """
    Abstract base class for Harmony parameter data types. All custom data
    types should inherit from :py:class:`DataType`.
    """

    def __init__(self, val=None):
        if val is not None:
            val = self.validate(val)
        self._val = val

    @abc.abstractmethod
    def validate(self, val):
        """Validate parameter value"""
        return val

    @abc.abstractmethod
    def to_text(self, val=None):
        """
        Convert parameter value to its CSV/JSON text form. If no value
        passed, try to use default bound value
        """
        if val is None:
            val = self._val
        return str(val)

    def to_json(self, val=None):
        """JSON value; text form unless the type has a native JSON value"""
        return self.to_text(val=val)

    @abc.abstractmethod
    def from_text(self, text):
        """Convert command line text to a validated Python value"""
        return self.validate(text)


class BaseParameter:
    """Abstract base class that implements the parameter interface"""

    @property
    def data_type(self):
        raise NotImplementedError
