"""Sweep the residue classes of r modulo pq for large ternary heights.

A(pqr) only depends on r through the class {r, -r} mod pq (for prime r > q),
so one representative prime per class covers every ternary polynomial with
the given p and q. Each q is one batch; classes inside a batch may run in
any order or in parallel, and pruning only looks at the maximum of the
batches already finished, which keeps the report independent of scheduling.
"""

import dataclasses
import sys
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from math import gcd
from typing import Optional

from tqdm import tqdm

from cyclolib import io_cyclo
from cyclolib.binary_cyclotomic import binary_params
from cyclolib.bounds import beiter_line, bound_certificate, corrected_line
from cyclolib.errors import BudgetExhaustedError, CheckpointParseError, ValidationError
from cyclolib.io_cyclo import COMPUTED, EXHAUSTED, PENDING, PRUNED
from cyclolib.ntheory import DEFAULT_CAP, is_prime, odd_primes_between, smallest_prime_in_class
from cyclolib.ternary import height_fast, triple_params

DEFAULT_QMAX = 100


@dataclass(frozen=True)
class SearchTask:
    p: int
    q: int
    rho: int
    r: Optional[int] = None
    status: str = PENDING
    # Height when computed, pruning bound when pruned
    value: Optional[int] = None
    bound: Optional[int] = None
    bound_rule: Optional[str] = None

    @property
    def key(self):
        return self.q, self.rho

    @property
    def height(self):
        return self.value if self.status == COMPUTED else None

    @property
    def triple(self):
        return self.p, self.q, self.r

    def to_record(self):
        return {f: getattr(self, f) for f in io_cyclo.CHECKPOINT_FIELDS}


@dataclass(frozen=True)
class SearchOptions:
    cap: int = DEFAULT_CAP
    prune: bool = True
    workers: int = 1
    checkpoint_path: Optional[str] = None
    verbosity: int = 0


@dataclass(frozen=True)
class SearchReport:
    p: int
    q_max: int
    records: tuple
    max_height: int
    witnesses: tuple
    beiter_violations: tuple
    corrected_violations: tuple

    def with_status(self, status):
        return [t for t in self.records if t.status == status]


@dataclass(frozen=True)
class ConjectureVerdict:
    p: int
    max_height: int
    beiter_line: int
    corrected_line: int
    beiter_violations: tuple
    corrected_violations: tuple

    @property
    def beiter_holds(self):
        return not self.beiter_violations

    @property
    def corrected_holds(self):
        return not self.corrected_violations


def enumerate_classes(p, q):
    """Canonical residues rho <= pq / 2 coprime to pq; rho stands for {rho, pq - rho}."""
    binary_params(p, q)
    pq = p * q
    return [rho for rho in range(1, pq // 2 + 1) if gcd(rho, pq) == 1]


def pick_representative(p, q, rho, cap=DEFAULT_CAP):
    """Smallest prime r > q with r = +-rho (mod pq)."""
    pq = p * q

    found = []
    for residue in (rho, pq - rho):
        try:
            found.append(smallest_prime_in_class(residue, pq, q, cap))
        except BudgetExhaustedError:
            pass

    if not found:
        raise BudgetExhaustedError('no prime = +-{} (mod {}) in ({}, {}]; raise the cap'.format(rho, pq, q, cap))

    return min(found)


def run_task(task, snapshot, prune, cap):
    """Finish one class: find its prime, certify a bound, and compute the height unless pruned."""
    try:
        r = pick_representative(task.p, task.q, task.rho, cap)
    except BudgetExhaustedError:
        return dataclasses.replace(task, status=EXHAUSTED)

    t = triple_params(task.p, task.q, r)
    cert = bound_certificate(t)

    # A class whose bound is already reached cannot raise the maximum
    if prune and snapshot and cert.best <= snapshot:
        return dataclasses.replace(task, r=r, status=PRUNED, value=cert.best,
                                   bound=cert.best, bound_rule=cert.best_rule)

    return dataclasses.replace(task, r=r, status=COMPUTED, value=height_fast(t),
                               bound=cert.best, bound_rule=cert.best_rule)


def _run_task_args(args):
    return run_task(*args)


def _run_batch(tasks, snapshot, options, executor):
    if executor is None:
        for task in tasks:
            yield run_task(task, snapshot, options.prune, options.cap)
        return

    futures = [executor.submit(_run_task_args, (task, snapshot, options.prune, options.cap))
               for task in tasks]
    for future in as_completed(futures):
        yield future.result()


def restore_checkpoint(path, p):
    """Finished tasks recorded in a checkpoint, keyed by (q, rho), and the byte length to keep."""
    records, keep_bytes = io_cyclo.read_checkpoint(path)

    done = {}
    for line_number, record in records:
        try:
            task = SearchTask(**record)
        except TypeError as err:
            raise CheckpointParseError(path, line_number, str(err))
        if task.p != p:
            raise CheckpointParseError(path, line_number,
                                       'record belongs to p={}, not p={}'.format(task.p, p))
        done[task.key] = task

    return done, keep_bytes


def _violations(records, line):
    return tuple(t.triple for t in records if t.status == COMPUTED and t.value > line)


def build_report(p, q_max, records):
    """Assemble a report from finished tasks in canonical (q, rho) order."""
    records = tuple(sorted(records, key=lambda t: t.key))
    heights = [t.value for t in records if t.status == COMPUTED]
    max_height = max(heights, default=0)

    witnesses = tuple(t.triple for t in records if t.status == COMPUTED and t.value == max_height)

    return SearchReport(p, q_max, records, max_height, witnesses,
                        _violations(records, beiter_line(p)),
                        _violations(records, corrected_line(p)))


def search_mp(p, q_max=DEFAULT_QMAX, options=SearchOptions()):
    """Lower bound for M(p) from every class of r for each prime q in (p, q_max]."""
    if p < 3 or not is_prime(p):
        raise ValidationError('{} is not an odd prime'.format(p))
    if q_max <= p:
        raise ValidationError('q_max must exceed p = {}, got {}'.format(p, q_max))

    qs = odd_primes_between(p, q_max)

    done, keep_bytes = {}, None
    if options.checkpoint_path:
        done, keep_bytes = restore_checkpoint(options.checkpoint_path, p)

    if options.verbosity:
        print('Sweeping p = {}: {} values of q, {} tasks restored'.format(p, len(qs), len(done)),
              file=sys.stderr)

    writer = io_cyclo.CheckpointWriter(options.checkpoint_path, keep_bytes) if options.checkpoint_path else None
    executor = ProcessPoolExecutor(max_workers=options.workers) if options.workers > 1 else None

    records = []
    snapshot = 0
    total = sum((p - 1) * (q - 1) // 2 for q in qs)

    try:
        with tqdm(total=total, desc='p={}'.format(p), disable=not options.verbosity) as bar:
            for q in qs:
                batch = [SearchTask(p, q, rho) for rho in enumerate_classes(p, q)]

                finished = [done[t.key] for t in batch if t.key in done]
                bar.update(len(finished))

                todo = [t for t in batch if t.key not in done]
                for task in _run_batch(todo, snapshot, options, executor):
                    if writer is not None:
                        writer.append(task.to_record())
                    finished.append(task)
                    bar.update(1)

                records.extend(finished)
                snapshot = max([snapshot] + [t.value for t in finished if t.status == COMPUTED])
    finally:
        if executor is not None:
            executor.shutdown()
        if writer is not None:
            writer.close()

    return build_report(p, q_max, records)


def verify_conjectures(report):
    """Check every computed height against the two conjectured lines."""
    p = report.p
    records = report.records

    return ConjectureVerdict(
        p=p,
        max_height=max((t.value for t in records if t.status == COMPUTED), default=0),
        beiter_line=beiter_line(p),
        corrected_line=corrected_line(p),
        beiter_violations=_violations(records, beiter_line(p)),
        corrected_violations=_violations(records, corrected_line(p)),
    )
