"""Verification of registered identities and the reports it produces"""

import asyncio
import collections
import logging
import time

from harmony import exception
from harmony.exact_math import Rational, to_string

logger = logging.getLogger(__name__)


Failure = collections.namedtuple('Failure', ['binding', 'lhs', 'rhs'])


def render_value(value):
    """Text form of a binding value: ints stay ints, rationals become
    ``p/q`` strings and tuples become lists."""
    if isinstance(value, tuple):
        return [render_value(v) for v in value]
    if isinstance(value, int) and not isinstance(value, bool):
        return value
    if isinstance(value, Rational):
        return to_string(value)
    return str(value)


class VerificationReport:
    """
    Outcome of checking one identity over its grid.

    :param str identity: Identity id
    :param str anchor: Statement that was checked
    :param int cases: Number of grid points evaluated
    :param Failure first_failure: First binding (in grid order) where the
        sides differ, or ``None``
    :param float elapsed: Wall time in seconds
    """

    def __init__(self, identity, anchor, cases, first_failure, elapsed):
        self._identity = identity
        self._anchor = anchor
        self._cases = cases
        self._first_failure = first_failure
        self._elapsed = elapsed

    @property
    def identity(self):
        return self._identity

    @property
    def anchor(self):
        return self._anchor

    @property
    def cases(self):
        return self._cases

    @property
    def first_failure(self):
        return self._first_failure

    @property
    def passed(self):
        return self._first_failure is None

    @property
    def elapsed(self):
        return self._elapsed

    @property
    def elapsed_ms(self):
        return round(self._elapsed * 1000, 3)

    def to_dict(self):
        """Report as a JSON-ready dict, rationals rendered exactly."""
        failure = None
        if self._first_failure is not None:
            binding, lhs, rhs = self._first_failure
            failure = {
                'binding': {k: render_value(v) for k, v in binding.items()},
                'lhs': to_string(lhs),
                'rhs': to_string(rhs),
            }
        return {
            'identity': self._identity,
            'anchor': self._anchor,
            'cases': self._cases,
            'passed': self.passed,
            'first_failure': failure,
            'elapsed_ms': self.elapsed_ms,
        }

    def __repr__(self):
        return '<VerificationReport({}, cases={}, passed={})>'.format(
            self._identity, self._cases, self.passed)


def check_identity(identity, overrides=None):
    """
    Evaluate both sides of an identity on every point of its grid.

    :param harmony.identities.Identity identity: Identity instance
    :param dict overrides: Optional grid upper bounds, e.g. ``{'n_max': 10}``

    :returns: :py:class:`VerificationReport`
    :raises harmony.exception.VerificationError: when an evaluator raises
    """
    start = time.perf_counter()
    cases = 0
    failure = None
    for binding in identity.grid.bindings(overrides):
        cases += 1
        try:
            lhs, rhs = identity.sides(binding)
        except (ArithmeticError, LookupError, ValueError, TypeError,
                exception.ValidationError,
                exception.FeasibilityError) as e:
            raise exception.VerificationError(
                'Identity {} failed to evaluate at {}: {}'.format(
                    identity.__id__, binding, e)) from e
        if failure is None and lhs != rhs:
            failure = Failure(binding, lhs, rhs)
            logger.warning('Identity {} fails at {}: {} != {}'.format(
                identity.__id__, binding, lhs, rhs))
    elapsed = time.perf_counter() - start
    report = VerificationReport(identity.__id__, identity.__anchor__, cases,
                                failure, elapsed)
    logger.info('Verified {}: {} cases, passed={}, {} ms'.format(
        report.identity, cases, report.passed, report.elapsed_ms))
    return report


class VerificationSession:
    """
    Runs identities concurrently on the executor named in the app config.
    Don't instantiate directly, use
    :py:meth:`Harmony.session<harmony.app.Harmony.session>`.

    :param harmony.app.Harmony app:
    """

    def __init__(self, app):
        self._app = app
        self._executor = None

    @property
    def app(self):
        return self._app

    async def __aenter__(self):
        return self

    async def __aexit__(self, exc_type, exc, tb):
        self.close()

    def close(self):
        if self._executor is not None:
            self._executor.shutdown(wait=True)
            self._executor = None

    def _get_executor(self):
        if self._executor is None:
            executor_class = self._app.config['executor']
            workers = self._app.config['workers']
            logger.debug('Starting {} with {} workers'.format(
                executor_class.__name__, workers))
            self._executor = executor_class(max_workers=workers)
        return self._executor

    async def verify(self, identity_id, overrides=None):
        """Check one identity by id."""
        identity = self._app.identity(identity_id)
        loop = asyncio.get_running_loop()
        return await loop.run_in_executor(
            self._get_executor(), check_identity, identity, overrides)

    async def verify_all(self, tag=None, overrides=None):
        """
        Check every registered identity, optionally only those with ``tag``.

        :returns: list of :py:class:`VerificationReport` sorted by id
        """
        identities = self._app.select(tag)
        logger.info('Verifying {} identities (tag={})'.format(
            len(identities), tag))
        if not identities:
            return []
        loop = asyncio.get_running_loop()
        executor = self._get_executor()
        reports = await asyncio.gather(*[
            loop.run_in_executor(executor, check_identity,
                                 self._app.identity(identity_class.__id__),
                                 overrides)
            for identity_class in identities])
        reports = sorted(reports, key=lambda report: report.identity)
        failed = [report.identity for report in reports if not report.passed]
        logger.info('Verified {} identities, {} failed'.format(
            len(reports), len(failed)))
        return reports
