"""Harmony application class: identity registry, configuration, verification"""

import asyncio
import importlib
import json
import logging
import os

import yaml

from harmony import exception, identities, session

logger = logging.getLogger(__name__)


OUTPUT_DIR_ENV = 'HARMONY_OUTPUT_DIR'


def my_import(name):
    """Resolve a dotted path such as ``'concurrent.futures.ThreadPoolExecutor'``"""
    names = name.rsplit('.', maxsplit=1)
    if len(names) != 2:
        raise exception.ConfigError(
            'Not a valid absolute python path to a class: {}'.format(name))
    module_name, class_name = names
    try:
        module = importlib.import_module(module_name)
    except ImportError as e:
        raise exception.ConfigError(
            'Error processing config: cannot import {}'.format(
                module_name)) from e
    try:
        return getattr(module, class_name)
    except AttributeError as e:
        raise exception.ConfigError(
            'Error processing config: {} has no {}'.format(
                module_name, class_name)) from e


class Harmony:
    """
    Registry of identities plus the configuration used to verify them.
    Used as a factory to create
    :py:class:`VerificationSession<harmony.session.VerificationSession>`
    objects.

    :param config: Config parameters overriding :py:attr:`DEFAULT_CONFIG`
    """

    DEFAULT_CONFIG = {
        'bruteforce_ceiling': 200000,
        'workers': 4,
        'executor': 'concurrent.futures.ThreadPoolExecutor',
        'output_dir': None,
    }

    def __init__(self, **config):
        self._identities = {}
        self._config = self._process_config_imports(dict(self.DEFAULT_CONFIG))
        self._update_config(config)

    @classmethod
    def with_builtins(cls, **config):
        """Application with every built-in identity registered."""
        app = cls(**config)
        app.register_builtins()
        return app

    @property
    def config(self):
        return self._config

    @property
    def identities(self):
        """Registered identity classes by id"""
        return self._identities

    @property
    def output_dir(self):
        return self._config['output_dir'] or os.environ.get(OUTPUT_DIR_ENV)

    def register(self, *identity_classes):
        """
        Register identity classes.

        :param harmony.identities.Identity identity_classes: Concrete
            identity classes
        """
        for identity_class in identity_classes:
            if identity_class.__abstract__:
                raise exception.RegistryError(
                    'Cannot register abstract identity {}'.format(
                        identity_class.__name__))
            identity_id = identity_class.__id__
            current = self._identities.get(identity_id)
            if current is not None and current is not identity_class:
                raise exception.RegistryError(
                    'Duplicate identity id: {}'.format(identity_id))
            self._identities[identity_id] = identity_class
            logger.debug('Registered identity {}'.format(identity_id))

    def register_from_module(self, module, *, package=None):
        if isinstance(module, str):
            module = importlib.import_module(module, package)
        found = []
        for item_name in dir(module):
            item = getattr(module, item_name)
            if isinstance(item, identities.IdentityMeta) and \
                    not item.__abstract__:
                found.append(item)
        self.register(*found)

    def register_builtins(self):
        for module in identities.BUILTIN_MODULES:
            self.register_from_module(module)

    def identity(self, identity_id):
        """
        Get a configured identity instance.

        :raises harmony.exception.RegistryError: for an unknown id
        """
        try:
            identity_class = self._identities[identity_id]
        except KeyError:
            raise exception.RegistryError(
                'Unknown identity: {}'.format(identity_id))
        return identity_class(config=self._config)

    def select(self, tag=None):
        """Registered identity classes carrying ``tag`` (all if None), by id."""
        return [self._identities[identity_id]
                for identity_id in sorted(self._identities)
                if tag is None or tag in self._identities[identity_id].__tags__]

    def registry_catalog(self, tag=None):
        """
        Stable listing of the registry.

        :returns: list of dicts with ``id``, ``title``, ``tags``, ``anchor``
            and ``grid``, sorted by id
        """
        return [identity_class.catalog_entry()
                for identity_class in self.select(tag)]

    def verify_identity(self, identity_id, overrides=None):
        """
        Check one identity on its grid, in the calling thread.

        :param str identity_id: Registered id
        :param dict overrides: Optional upper bounds such as ``{'n_max': 10}``

        :returns: :py:class:`VerificationReport<harmony.session.VerificationReport>`
        """
        return session.check_identity(self.identity(identity_id), overrides)

    def session(self):
        """
        Create a verification session.

        :returns: :py:class:`VerificationSession<harmony.session.VerificationSession>`
        """
        return session.VerificationSession(self)

    def verify_all(self, tag=None, overrides=None):
        """Synchronous entry point for
        :py:meth:`VerificationSession.verify_all<harmony.session.VerificationSession.verify_all>`."""

        async def run():
            async with self.session() as verification:
                return await verification.verify_all(tag, overrides)

        return asyncio.run(run())

    # Configuration
    def config_from_file(self, filename):
        """
        Load configuration from file, by extension.

        :param str filename: Path to a ``.yml``, ``.yaml`` or ``.json`` file
        """
        if filename.endswith('.yml') or filename.endswith('.yaml'):
            self.config_from_yaml(filename)
        elif filename.endswith('.json'):
            self.config_from_json(filename)
        else:
            raise exception.ConfigError(
                'Unknown config file format: {}'.format(filename))

    def config_from_yaml(self, filename):
        config = self._read_config(filename, yaml.safe_load)
        self._update_config(config)

    def config_from_json(self, filename):
        """
        Load configuration from JSON file.

        :param str filename: Path to the configuration file.
        """
        config = self._read_config(filename, json.load)
        self._update_config(config)

    def config_from_module(self, module):
        if isinstance(module, str):
            module = importlib.import_module(module)
        config = dict()
        for item in dir(module):
            if not item.startswith('_') and \
                    item.lower() in self.DEFAULT_CONFIG:
                config[item.lower()] = getattr(module, item)
        self._update_config(config)

    def _read_config(self, filename, load):
        try:
            with open(filename, 'r') as f:
                config = load(f)
        except (OSError, ValueError, yaml.YAMLError) as e:
            raise exception.ConfigError(
                'Cannot read config file {}: {}'.format(filename, e)) from e
        if not isinstance(config, dict):
            raise exception.ConfigError(
                'Config file {} must hold a mapping'.format(filename))
        logger.info('Loaded config from {}'.format(filename))
        return config

    def _update_config(self, config):
        unknown = set(config) - set(self.DEFAULT_CONFIG)
        if unknown:
            raise exception.ConfigError('Unknown config keys: {}'.format(
                ', '.join(sorted(unknown))))
        self._config.update(self._process_config_imports(dict(config)))

    def _process_config_imports(self, config):
        executor = config.get('executor', '')
        if isinstance(executor, str) and executor:
            config['executor'] = my_import(executor)
        return config
