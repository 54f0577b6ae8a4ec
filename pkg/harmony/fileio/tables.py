"""CSV and JSON rendering of sequence tables and check rows"""

import csv
import io
import json
import logging

from harmony import exception, properties

logger = logging.getLogger(__name__)


FORMATS = ('csv', 'json')

INDEX = properties.Integer()
RATIONAL = properties.Rational()
FLAG = properties.Boolean()
TEXT = properties.String()

SEQUENCE_COLUMNS = (('n', INDEX), ('value', RATIONAL))

GF_CHECK_COLUMNS = (('n', INDEX), ('recurrence_value', RATIONAL),
                    ('gf_value', RATIONAL), ('equal', FLAG))


def with_decimal(columns):
    """Columns plus an approximate ``decimal`` column."""
    return tuple(columns) + (('decimal', TEXT),)


def _check_format(fmt):
    if fmt not in FORMATS:
        raise exception.ValidationError(
            'Unknown output format {}, expected one of {}'.format(
                fmt, ', '.join(FORMATS)))


def dumps(rows, columns, fmt='csv'):
    """
    Render rows as CSV (with a header) or as a JSON array of objects.

    :param rows: Iterable of tuples, one value per column
    :param columns: Sequence of ``(name, data_type)`` pairs
    :param str fmt: ``'csv'`` or ``'json'``

    :returns: str, newline terminated
    """
    _check_format(fmt)
    names = [name for name, _ in columns]
    if fmt == 'json':
        records = [
            {name: data_type.to_json(value)
             for (name, data_type), value in zip(columns, row)}
            for row in rows]
        return json.dumps(records, indent=2) + '\n'
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(names)
    for row in rows:
        writer.writerow([data_type.to_text(value)
                         for (_, data_type), value in zip(columns, row)])
    return out.getvalue()

