"""Identity classes: a pair of independent evaluators over a parameter grid"""

import logging

import inflection

from harmony import exception, sequences

logger = logging.getLogger(__name__)


class IdentityMeta(type):
    """
    Metaclass for identities. Derives the stable identity id from the class
    name unless ``__id__`` is set, and checks that concrete identities
    declare a grid and an anchor.
    """

    def __new__(cls, name, bases, namespace, **kwargs):
        if not namespace.get('__id__', None):
            namespace['__id__'] = inflection.underscore(name)
        if not namespace.get('__title__', None):
            namespace['__title__'] = inflection.humanize(namespace['__id__'])
        namespace.setdefault('__abstract__', False)
        result = type.__new__(cls, name, bases, namespace)
        if not result.__abstract__:
            if result.grid is None:
                raise exception.ValidationError(
                    'Identity {} declares no grid'.format(result.__id__))
            if not result.__anchor__:
                raise exception.ValidationError(
                    'Identity {} declares no anchor'.format(result.__id__))
        return result


class Identity(metaclass=IdentityMeta):
    """
    Base class for registered identities. Subclasses set ``__anchor__``
    (the statement being checked), ``__tags__`` and ``grid``, and implement
    :py:meth:`lhs` and :py:meth:`rhs` as keyword functions of a binding.

    :param dict config: Application configuration
    """

    __abstract__ = True
    __anchor__ = ''
    __tags__ = ()
    grid = None

    def __init__(self, *, config=None):
        if config is None:
            config = {}
        self._config = config

    @property
    def config(self):
        return self._config

    @property
    def bruteforce_ceiling(self):
        return self._config.get('bruteforce_ceiling',
                                sequences.DEFAULT_BRUTEFORCE_CEILING)

    def lhs(self, **binding):
        raise NotImplementedError

    def rhs(self, **binding):
        raise NotImplementedError

    def sides(self, binding):
        """Both sides at one grid point, each evaluated on its own."""
        return self.lhs(**binding), self.rhs(**binding)

    @classmethod
    def catalog_entry(cls):
        return {
            'id': cls.__id__,
            'title': cls.__title__,
            'tags': list(cls.__tags__),
            'anchor': cls.__anchor__,
            'grid': cls.grid.describe(),
        }

    def __repr__(self):
        return '<{}({})>'.format(self.__class__.__name__, self.__id__)
