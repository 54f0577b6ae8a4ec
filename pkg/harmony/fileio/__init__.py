from harmony.fileio import reports, tables
from harmony.fileio.tables import (FORMATS, GF_CHECK_COLUMNS, SEQUENCE_COLUMNS,
                                   dumps, with_decimal)
