"""Memo tables for sequence evaluation"""

import logging
import threading

logger = logging.getLogger(__name__)


class SeqCache:
    """
    Per-(family, params) memo tables mapping index to value.

    Tables only ever grow by appending, so a reader that finds index ``n``
    below the current length needs no lock. Writers are serialized with a
    re-entrant lock because extending one table may extend another (row
    ``m`` of H_n(m) is built from row ``m - 1``).
    """

    def __init__(self):
        self._tables = {}
        self._lock = threading.RLock()

    def prefix(self, key, n, extend):
        """
        Get the table for ``key`` holding at least indices ``0..n``.

        :param tuple key: ``(family, params)`` key
        :param int n: Highest index needed
        :param extend: Callable ``extend(table, n)`` appending values until
            ``len(table) > n``

        :returns: list, only valid for reading
        """
        table = self._tables.get(key)
        if table is not None and len(table) > n:
            return table
        with self._lock:
            table = self._tables.setdefault(key, [])
            if len(table) <= n:
                start = len(table)
                extend(table, n)
                logger.debug('Extended {} from {} to {} entries'.format(
                    key, start, len(table)))
            return table

    def value(self, key, n, extend):
        return self.prefix(key, n, extend)[n]

    def clear(self):
        with self._lock:
            self._tables.clear()

    def __contains__(self, key):
        return key in self._tables

    def __len__(self):
        return len(self._tables)
