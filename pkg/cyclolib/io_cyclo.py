"""Input/output functions."""

import argparse
import csv
import json
import os
import sys
import warnings

import numpy as np
from astropy.table import MaskedColumn, Table

from cyclolib import utils
from cyclolib.errors import CheckpointError, CheckpointParseError, CycloWarning

FORMATS = ('text', 'csv', 'structured')

REPORT_HEADINGS = ['p', 'q', 'rho', 'r', 'height', 'bound', 'rule']

# One JSON object per line, keys in this order
CHECKPOINT_FIELDS = ('p', 'q', 'rho', 'r', 'status', 'value', 'bound', 'bound_rule')

PENDING = 'pending'
PRUNED = 'pruned'
COMPUTED = 'computed'
EXHAUSTED = 'exhausted'

# Only finished tasks are checkpointed
FINISHED_STATUSES = (PRUNED, COMPUTED, EXHAUSTED)

CHECKPOINT_DIR_ENV = 'CYCLO_CHECKPOINT_DIR'


def default_checkpoint_path(p, q_max):
    """Checkpoint file under $CYCLO_CHECKPOINT_DIR, or None when it is unset."""
    directory = os.environ.get(CHECKPOINT_DIR_ENV)
    if not directory:
        return None
    return os.path.join(directory, 'search_p{}_q{}.jsonl'.format(p, q_max))


def read_checkpoint(path):
    """Read finished-task records from a checkpoint.

    Returns a list of (line number, record) and the number of bytes holding
    complete lines. A missing or empty file is a fresh start. A final line
    without its newline was cut off mid-write; it is dropped with a warning.
    """
    try:
        with open(path, 'rb') as fh:
            data = fh.read()
    except FileNotFoundError:
        return [], None
    except OSError as err:
        raise CheckpointError('could not read checkpoint {}: {}'.format(path, err))

    keep_bytes = data.rfind(b'\n') + 1
    tail = data[keep_bytes:]

    try:
        lines = data[:keep_bytes].decode('utf-8').split('\n')[:-1]
    except UnicodeDecodeError as err:
        raise CheckpointParseError(path, 1, 'not UTF-8 text ({})'.format(err))

    records = []
    for number, line in enumerate(lines, 1):
        if not line.strip():
            continue
        records.append((number, _parse_record(path, number, line)))

    if tail:
        warnings.warn('{}: ignoring incomplete final line {}'.format(path, len(lines) + 1), CycloWarning)

    return records, keep_bytes


def _parse_record(path, number, line):
    try:
        record = json.loads(line)
    except ValueError as err:
        raise CheckpointParseError(path, number, 'invalid JSON ({})'.format(err))

    if not isinstance(record, dict) or set(record) != set(CHECKPOINT_FIELDS):
        raise CheckpointParseError(path, number, 'expected fields {}'.format(', '.join(CHECKPOINT_FIELDS)))

    for field in ('p', 'q', 'rho'):
        if not _is_int(record[field]):
            raise CheckpointParseError(path, number, '{} must be an integer'.format(field))

    status = record['status']
    if status not in FINISHED_STATUSES:
        raise CheckpointParseError(path, number, 'status must be one of {}, got {!r}'.format(
            ', '.join(FINISHED_STATUSES), status))

    if record['r'] is not None and not _is_int(record['r']):
        raise CheckpointParseError(path, number, 'r must be an integer or null')

    if status in (PRUNED, COMPUTED):
        for field in ('r', 'value', 'bound'):
            if not _is_int(record[field]):
                raise CheckpointParseError(path, number, '{} must be an integer when {}'.format(field, status))
        if not isinstance(record['bound_rule'], str):
            raise CheckpointParseError(path, number, 'bound_rule must be a string when {}'.format(status))

    return record


def _is_int(value):
    return isinstance(value, int) and not isinstance(value, bool)


class CheckpointWriter:
    """Append-only checkpoint; each record is written and flushed as one line."""

    def __init__(self, path, keep_bytes=None):
        self.path = path
        try:
            self._fh = open(path, 'a', encoding='utf-8')
            # Drop a partial line left by an interrupted run
            if keep_bytes is not None:
                self._fh.truncate(keep_bytes)
        except OSError as err:
            raise CheckpointError('could not open checkpoint {}: {}'.format(path, err))

    def append(self, record):
        line = json.dumps({f: record[f] for f in CHECKPOINT_FIELDS}, separators=(',', ':')) + '\n'
        try:
            self._fh.write(line)
            self._fh.flush()
        except OSError as err:
            raise CheckpointError('could not write checkpoint {}: {}'.format(self.path, err))

    def close(self):
        self._fh.close()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()


def _cell(value):
    return '' if value is None else str(value)


def write_rows(headings, rows, fmt, stream=None, meta=None):
    """Write a table of integers and labels as text, csv or ECSV."""
    stream = stream or sys.stdout

    if fmt == 'csv':
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(headings)
        writer.writerows([[_cell(v) for v in row] for row in rows])

    elif fmt == 'structured':
        table = Table()
        for k, heading in enumerate(headings):
            column = [row[k] for row in rows]
            mask = [v is None for v in column]
            if all(isinstance(v, (int, np.integer)) for v in column if v is not None):
                data = np.array([0 if v is None else v for v in column], dtype=np.int64)
            else:
                data = np.array(['' if v is None else str(v) for v in column], dtype=str)
            table[heading] = MaskedColumn(data, mask=mask) if any(mask) else data
        if meta:
            table.meta.update(meta)
        table.write(stream, format='ascii.ecsv')

    else:
        for row in rows:
            print(' '.join('-' if v is None else str(v) for v in row), file=stream)


def report_rows(report):
    """Rows of a search report: height is empty unless computed, r unless resolved."""
    return [[t.p, t.q, t.rho, t.r, t.height, t.bound, t.bound_rule] for t in report.records]


def write_report(report, fmt, stream=None):
    """Write a search report; csv and structured output carry no run-dependent data."""
    stream = stream or sys.stdout

    meta = {
        'p': report.p,
        'q_max': report.q_max,
        'max_height': report.max_height,
        'witnesses': [list(w) for w in report.witnesses],
    }
    write_rows(REPORT_HEADINGS, report_rows(report), fmt, stream, meta)

    if fmt == 'text':
        print('# max height {} from {} computed, {} pruned, {} exhausted'.format(
            report.max_height,
            len(report.with_status(COMPUTED)),
            len(report.with_status(PRUNED)),
            len(report.with_status(EXHAUSTED))), file=stream)
        for w in report.witnesses:
            print('# witness {} {} {}'.format(*w), file=stream)


def make_parser():
    """Create an argument parser for the cyclo command."""
    parser = CycloParser(prog='cyclo', description='Coefficients and heights of cyclotomic polynomials')
    parser.add_argument('--verbosity', type=int, help='Verbosity level (0-2)', choices=range(0, 3), default=0)

    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    phi = commands.add_parser('phi', help='Dense coefficients of Phi_N')
    phi.add_argument('n', type=utils.validate_positive, help='Index N')
    _add_format(phi)

    height = commands.add_parser('height', help='Height A(N)')
    height.add_argument('n', type=utils.validate_positive, help='Index N')
    height.add_argument('--oracle', action='store_true', help='Expand Phi_N densely instead of the fast scan')

    ternary = commands.add_parser('ternary', help='Coefficients or height of Phi_pqr')
    _add_triple(ternary)
    mode = ternary.add_mutually_exclusive_group()
    mode.add_argument('--coeff', type=int, metavar='I', help='Print the single coefficient c_I')
    mode.add_argument('--vector', action='store_true', help='Print all coefficients')
    mode.add_argument('--swap-qr', action='store_true', help='Print the suffix-sum bound with q and r exchanged')
    _add_format(ternary)

    chi = commands.add_parser('chi', help='Evaluate chi_N(I) for the pair (P, Q)')
    chi.add_argument('p', type=utils.validate_odd_prime, help='Smaller prime P')
    chi.add_argument('q', type=utils.validate_odd_prime, help='Larger prime Q')
    chi.add_argument('n', type=int, help='Index N')
    chi.add_argument('i', type=int, help='Argument I')

    bounds = commands.add_parser('bounds', help='Bound certificate for A(pqr)')
    _add_triple(bounds)
    _add_format(bounds)

    for name, text in (('search', 'Sweep residue classes for a lower bound of M(P)'),
                       ('verify', 'Sweep and check the Beiter and corrected Beiter conjectures')):
        sub = commands.add_parser(name, help=text)
        sub.add_argument('p', type=utils.validate_odd_prime, help='Smallest prime P')
        sub.add_argument('--qmax', type=utils.validate_positive, default=None,
                         help='Largest q (default 100, or the next prime above P if larger)')
        sub.add_argument('--cap', type=utils.validate_positive, default=None,
                         help='Largest representative prime tried per class (default 1e8)')
        sub.add_argument('--jobs', type=utils.validate_positive, default=1, help='Worker processes')
        sub.add_argument('--checkpoint', type=str, default=None,
                         help='Checkpoint file (default: under ${})'.format(CHECKPOINT_DIR_ENV))
        sub.add_argument('--no-prune', action='store_true', help='Compute every class')
        sub.add_argument('--out', type=str, default=None, help='Write the report here instead of stdout')
        _add_format(sub)

    return parser


def _add_triple(parser):
    parser.add_argument('p', type=utils.validate_odd_prime, help='Smallest prime P')
    parser.add_argument('q', type=utils.validate_odd_prime, help='Middle prime Q')
    parser.add_argument('r', type=utils.validate_odd_prime, help='Largest prime R')


def _add_format(parser):
    parser.add_argument('--format', choices=FORMATS, default='text', help='Output format')


class CycloParser(argparse.ArgumentParser):
    """Argument parser that exits with status 1 on usage errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, '{}: error: {}\n'.format(self.prog, message))
