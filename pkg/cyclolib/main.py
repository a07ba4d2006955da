"""High level processes for cyclolib."""

import sys
import warnings

from cyclolib import io_cyclo
from cyclolib.bounds import bound_certificate
from cyclolib.chi_map import ChiContext, chi
from cyclolib.dense_oracle import height_oracle, phi_dense, reduce_radical
from cyclolib.errors import CycloError, CycloWarning, OutputError, ValidationError
from cyclolib.ntheory import DEFAULT_CAP, next_prime, odd_prime_factors
from cyclolib.search import DEFAULT_QMAX, SearchOptions, search_mp, verify_conjectures
from cyclolib.ternary import (height_fast, partial_sum_upper, ternary_coeff, ternary_vector,
                              triple_params)
from cyclolib.utils import time_function


def setup(args=None):
    """Parse command line arguments."""
    p = io_cyclo.make_parser().parse_args(args)

    if p.command in ('search', 'verify'):
        if p.qmax is None:
            p.qmax = max(DEFAULT_QMAX, next_prime(p.p))
        if p.cap is None:
            p.cap = DEFAULT_CAP
        if p.checkpoint is None:
            p.checkpoint = io_cyclo.default_checkpoint_path(p.p, p.qmax)

    return p


def compute_height(n, oracle=False, verbosity=0):
    """A(n), using the suffix-sum scan whenever n has exactly three odd primes."""
    core, order = reduce_radical(n)

    if verbosity:
        print('A({}) = A({}), order {}'.format(n, core, order), file=sys.stderr)

    if oracle:
        return time_function(height_oracle, (core,), verbosity, 'expand Phi_{}'.format(core))

    # Phi_1, Phi_p and Phi_pq are flat
    if order <= 2:
        return 1

    if order == 3:
        t = triple_params(*odd_prime_factors(core))
        return time_function(height_fast, (t,), verbosity, 'scan Phi_{}'.format(core))

    warnings.warn('Phi_{} has order {}; expanding it densely, which may be slow'.format(core, order),
                  CycloWarning)
    return time_function(height_oracle, (core,), verbosity, 'expand Phi_{}'.format(core))


def _coefficient_rows(vector, fmt):
    if fmt == 'text':
        return [[c] for c in vector.tolist()]
    return [[k, c] for k, c in enumerate(vector.tolist())]


def run_phi(p):
    vector = phi_dense(p.n)
    io_cyclo.write_rows(['exponent', 'coefficient'], _coefficient_rows(vector, p.format), p.format)


def run_height(p):
    print(compute_height(p.n, p.oracle, p.verbosity))


def run_ternary(p):
    t = triple_params(p.p, p.q, p.r)

    if p.coeff is not None:
        print(ternary_coeff(t, p.coeff))
    elif p.vector:
        vector = time_function(ternary_vector, (t,), p.verbosity, 'build Phi_{}'.format(t.pq * t.r))
        io_cyclo.write_rows(['exponent', 'coefficient'], _coefficient_rows(vector, p.format), p.format)
    elif p.swap_qr:
        print(partial_sum_upper(t, swap_qr=True))
    else:
        print(time_function(height_fast, (t,), p.verbosity, 'scan Phi_{}'.format(t.pq * t.r)))


def run_chi(p):
    print(chi(ChiContext(p.p, p.q), p.n, p.i))


def run_bounds(p):
    cert = bound_certificate(triple_params(p.p, p.q, p.r))

    rows = [[e.rule, e.value, 'yes' if e.applicable else 'no', 'best' if e.rule == cert.best_rule else '-']
            for e in cert.entries]
    rows.append(['beiter_ref', cert.beiter_ref, 'reference', '-'])
    rows.append(['corrected_ref', cert.corrected_ref, 'reference', '-'])

    io_cyclo.write_rows(['rule', 'value', 'applicable', 'best'], rows, p.format)


def _search(p):
    options = SearchOptions(cap=p.cap, prune=not p.no_prune, workers=p.jobs,
                            checkpoint_path=p.checkpoint, verbosity=p.verbosity)

    if p.verbosity and options.checkpoint_path:
        print('Checkpointing to {}'.format(options.checkpoint_path), file=sys.stderr)

    report = time_function(search_mp, (p.p, p.qmax, options), p.verbosity, 'sweep p = {}'.format(p.p))

    if p.out:
        try:
            with open(p.out, 'w', newline='') as fh:
                io_cyclo.write_report(report, p.format, fh)
        except OSError as err:
            raise OutputError('could not write {}: {}'.format(p.out, err))

    return report


def run_search(p):
    report = _search(p)
    if not p.out:
        io_cyclo.write_report(report, p.format)


def verdict_rows(verdict):
    """Rows of (item, value) summarising a conjecture check."""
    rows = [
        ['max_height', verdict.max_height],
        ['beiter_line', verdict.beiter_line],
        ['corrected_line', verdict.corrected_line],
        ['beiter_holds', 'yes' if verdict.beiter_holds else 'no'],
        ['corrected_holds', 'yes' if verdict.corrected_holds else 'no'],
    ]
    rows.extend(['beiter_violation', '{} {} {}'.format(*v)] for v in verdict.beiter_violations)
    rows.extend(['corrected_violation', '{} {} {}'.format(*v)] for v in verdict.corrected_violations)
    return rows


def run_verify(p):
    verdict = verify_conjectures(_search(p))
    io_cyclo.write_rows(['item', 'value'], verdict_rows(verdict), p.format)


COMMANDS = {
    'phi': run_phi,
    'height': run_height,
    'ternary': run_ternary,
    'chi': run_chi,
    'bounds': run_bounds,
    'search': run_search,
    'verify': run_verify,
}


def run_cli(args=None):
    """Run one subcommand and return its exit code."""
    try:
        p = setup(args)
    except SystemExit as exit_:
        return exit_.code or 0

    try:
        COMMANDS[p.command](p)
    except ValidationError as err:
        print('error: {}'.format(err), file=sys.stderr)
        return 1
    except CycloError as err:
        print('error: {}'.format(err), file=sys.stderr)
        return 2

    return 0


def main():
    sys.exit(run_cli())
