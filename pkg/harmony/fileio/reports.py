"""Verification report rendering"""

import csv
import io
import json
import logging

from harmony import exception

logger = logging.getLogger(__name__)


REPORT_CSV_HEADER = ('identity', 'cases', 'passed', 'binding', 'lhs', 'rhs',
                     'elapsed_ms')


def dumps(reports, fmt='json'):
    """
    Render verification reports.

    JSON is an array of report objects. CSV has one row per report; the
    failure columns are empty for passing identities and the binding is a
    compact JSON object.

    :param reports: Iterable of
        :py:class:`VerificationReport<harmony.session.VerificationReport>`
    :param str fmt: ``'json'`` or ``'csv'``
    """
    records = [report.to_dict() for report in reports]
    if fmt == 'json':
        return json.dumps(records, indent=2) + '\n'
    if fmt != 'csv':
        raise exception.ValidationError(
            'Unknown output format {}'.format(fmt))
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(REPORT_CSV_HEADER)
    for record in records:
        failure = record['first_failure'] or {}
        binding = failure.get('binding')
        writer.writerow([
            record['identity'],
            record['cases'],
            'true' if record['passed'] else 'false',
            json.dumps(binding, sort_keys=True) if binding else '',
            failure.get('lhs', ''),
            failure.get('rhs', ''),
            record['elapsed_ms'],
        ])
    return out.getvalue()


CATALOG_CSV_HEADER = ('id', 'title', 'tags', 'anchor', 'grid')


def dumps_catalog(entries, fmt='json'):
    """Render :py:meth:`Harmony.registry_catalog<harmony.app.Harmony.registry_catalog>`
    entries; CSV joins tags with spaces."""
    if fmt == 'json':
        return json.dumps(list(entries), indent=2) + '\n'
    if fmt != 'csv':
        raise exception.ValidationError(
            'Unknown output format {}'.format(fmt))
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(CATALOG_CSV_HEADER)
    for entry in entries:
        writer.writerow([entry['id'], entry['title'], ' '.join(entry['tags']),
                         entry['anchor'], entry['grid']])
    return out.getvalue()

