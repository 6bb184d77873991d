"""
Exhaustive searches over switching classes.

Both searches stream the representatives of one order in counter order
and look for a graph that is not separable while every subgraph of
order n-1 (and, for the two-deletion claim, n-2) is. Counter ranges are
scanned in blocks; inside a block contiguous chunks are handed to a
``multiprocessing.Pool`` and merged back in counter order, so the
report does not depend on the number of workers.
"""
import os
import time
from multiprocessing import Pool

import switchsep as ss
from switchsep.cfgs import get_cfg_defaults
from switchsep.enumeration.representatives import (
    check_representative_order, free_pairs, num_representatives,
    representative_rows, switching_class_representatives)
from switchsep.graph.graph import Graph, compress_rows
from switchsep.graph.graph6 import encode_graph6
from switchsep.separability.decider import separable_rows
from switchsep.separability.oracle import brute_force_separable
from switchsep.utils.errors import CheckpointError

TWO_DELETIONS = 'theorem1'
ONE_DELETION = 'conjecture'
SEARCH_KINDS = (TWO_DELETIONS, ONE_DELETION)

# chunks handed out per worker and block
_CHUNKS_PER_WORKER = 4


class SearchReport(object):
    """
    Result of an exhaustive search.

    Args:
        kind (str): 'theorem1' or 'conjecture'.
        order (int): order of the scanned graphs.
        worker_count (int): number of worker processes.

    Attributes:
        classes_scanned (int): representatives examined so far.
        total_classes (int): number of switching classes of this order.
        nonseparable_count (int): non-separable representatives seen.
        counterexamples (list): (counter, graph6) pairs in counter order.
        wall_time (float): seconds spent in this run.
        dump_lines (int): graph6 lines in the dump file, or None when no
            dump is written.
    """

    def __init__(self, kind, order, worker_count=1):
        self.kind = kind
        self.order = order
        self.worker_count = worker_count
        self.classes_scanned = 0
        self.total_classes = num_representatives(order)
        self.nonseparable_count = 0
        self.counterexamples = []
        self.wall_time = 0.0
        self.dump_lines = None

    @property
    def complete(self):
        return self.classes_scanned == self.total_classes

    @property
    def holds(self):
        """
        bool: True iff the whole order was scanned without finding a
        counterexample.
        """
        return self.complete and not self.counterexamples

    def merge(self, scanned, nonseparable, found):
        self.classes_scanned += scanned
        self.nonseparable_count += nonseparable
        self.counterexamples.extend(found)
        self.counterexamples.sort(key=lambda item: item[0])

    def to_dict(self, include_timing=True):
        out = {
            'kind': self.kind,
            'order': self.order,
            'classes_scanned': self.classes_scanned,
            'total_classes': self.total_classes,
            'nonseparable_count': self.nonseparable_count,
            'counterexamples': [g6 for _, g6 in self.counterexamples],
            'holds': self.holds,
        }
        if include_timing:
            out['wall_time'] = self.wall_time
            out['worker_count'] = self.worker_count
        return out

    def __repr__(self):
        return ('SearchReport(kind=%r, order=%d, scanned=%d/%d, '
                'nonseparable=%d, counterexamples=%d)'
                % (self.kind, self.order, self.classes_scanned,
                   self.total_classes, self.nonseparable_count,
                   len(self.counterexamples)))


def _deletions_separable(rows, order, depth):
    everyone = list(range(order))
    for v in everyone:
        keep = everyone[:v] + everyone[v + 1:]
        if not separable_rows(compress_rows(rows, keep), order - 1):
            return False
    if depth < 2:
        return True
    for v in everyone:
        for w in range(v + 1, order):
            keep = [x for x in everyone if x != v and x != w]
            if not separable_rows(compress_rows(rows, keep), order - 2):
                return False
    return True


def scan_range(task):
    """
    Scan one contiguous counter range.

    Args:
        task (tuple): (kind, order, start, stop, collect). With
            ``collect`` set every non-separable representative is
            returned in graph6.

    Returns:
        tuple: (scanned, nonseparable, found, dumped) where found lists
        the (counter, graph6) pairs of the counterexamples in the range.
    """
    kind, order, start, stop, collect = task
    depth = 2 if kind == TWO_DELETIONS else 1
    pairs = free_pairs(order)
    nonseparable = 0
    found = []
    dumped = []
    for counter in range(start, stop):
        rows = representative_rows(order, counter, pairs)
        if separable_rows(rows, order):
            continue
        nonseparable += 1
        g6 = None
        if collect:
            g6 = encode_graph6(Graph._from_rows(order, rows))
            dumped.append(g6)
        if _deletions_separable(rows, order, depth):
            if g6 is None:
                g6 = encode_graph6(Graph._from_rows(order, rows))
            found.append((counter, g6))
    return stop - start, nonseparable, found, dumped


def split_range(kind, order, start, stop, parts, collect=False):
    """
    Split [start, stop) into at most ``parts`` contiguous tasks.
    """
    size = max(1, -(-(stop - start) // parts))
    return [(kind, order, lo, min(lo + size, stop), collect)
            for lo in range(start, stop, size)]


def write_checkpoint(path, report, next_counter):
    """
    Write the search state as ``key value`` lines, atomically.

    Args:
        path (str): checkpoint file.
        report (SearchReport): the partial report.
        next_counter (int): first counter not yet scanned.
    """
    lines = ['kind %s' % report.kind,
             'order %d' % report.order,
             'next_counter %d' % next_counter,
             'nonseparable_count %d' % report.nonseparable_count]
    if report.dump_lines is not None:
        lines.append('dump_lines %d' % report.dump_lines)
    lines.extend('counterexample %d %s' % item
                 for item in report.counterexamples)
    _replace_file(path, lines)


def _replace_file(path, lines):
    tmp = path + '.tmp'
    with open(tmp, 'w') as f:
        f.write(''.join(line + '\n' for line in lines))
    os.replace(tmp, path)


def truncate_dump(path, lines):
    """
    Cut a graph6 dump back to its first ``lines`` lines, atomically.

    Lines appended after the last checkpoint are dropped, so a resumed
    search does not write them twice.
    """
    kept = []
    if os.path.exists(path):
        with open(path, 'r') as f:
            for line in f:
                if len(kept) == lines:
                    break
                kept.append(line.rstrip('\n'))
    if len(kept) < lines:
        raise CheckpointError('%s holds %d lines, the checkpoint expects %d'
                              % (path, len(kept), lines))
    _replace_file(path, kept)


def read_checkpoint(path, kind, order, worker_count=1):
    """
    Load a checkpoint written by ``write_checkpoint``.

    Args:
        path (str): checkpoint file.
        kind (str): the search being resumed.
        order (int): the order being resumed.
        worker_count (int): worker count of the new run.

    Returns:
        tuple: (next_counter, report).
    """
    fields = {}
    found = []
    with open(path, 'r') as f:
        for lineno, line in enumerate(f, 1):
            tokens = line.split()
            if not tokens:
                continue
            if tokens[0] == 'counterexample' and len(tokens) == 3:
                try:
                    found.append((int(tokens[1]), tokens[2]))
                except ValueError:
                    raise CheckpointError('%s:%d: bad counter %r'
                                          % (path, lineno, tokens[1]))
            elif len(tokens) == 2:
                fields[tokens[0]] = tokens[1]
            else:
                raise CheckpointError('%s:%d: cannot parse %r'
                                      % (path, lineno, line.strip()))
    for key in ('kind', 'order', 'next_counter', 'nonseparable_count'):
        if key not in fields:
            raise CheckpointError('%s: missing %r' % (path, key))
    try:
        saved_order = int(fields['order'])
        next_counter = int(fields['next_counter'])
        nonseparable = int(fields['nonseparable_count'])
    except ValueError as e:
        raise CheckpointError('%s: %s' % (path, e))
    if fields['kind'] != kind or saved_order != order:
        raise CheckpointError('%s holds a %s search of order %d, not a %s '
                              'search of order %d'
                              % (path, fields['kind'], saved_order,
                                 kind, order))
    if not 0 <= next_counter <= num_representatives(order):
        raise CheckpointError('%s: next_counter %d out of range'
                              % (path, next_counter))
    report = SearchReport(kind, order, worker_count)
    report.merge(next_counter, nonseparable, found)
    if 'dump_lines' in fields:
        try:
            report.dump_lines = int(fields['dump_lines'])
        except ValueError as e:
            raise CheckpointError('%s: %s' % (path, e))
    return next_counter, report


def _resolve_jobs(jobs, cfgs):
    if jobs is None:
        jobs = cfgs.SEARCH.JOBS
    if not isinstance(jobs, int) or jobs < 1:
        raise ValueError('jobs must be a positive integer, got %r' % (jobs,))
    return jobs


def run_search(kind, order, jobs=None, checkpoint_path=None, dump_path=None,
               cfgs=None):
    """
    Scan every switching class of the given order.

    Args:
        kind (str): 'theorem1' (one and two deletions) or
            'conjecture' (one deletion).
        order (int): order of the graphs.
        jobs (int): worker processes, defaults to ``cfgs.SEARCH.JOBS``.
        checkpoint_path (str): if given, the state is saved there after
            each block and an existing file is resumed from.
        dump_path (str): if given, every non-separable representative
            is written there in graph6, one per line, in counter order.
        cfgs (YACS CfgNode): configuration.

    Returns:
        SearchReport: the merged report.
    """
    if kind not in SEARCH_KINDS:
        raise ValueError('Unknown search kind %r' % (kind,))
    if cfgs is None:
        cfgs = get_cfg_defaults()
    check_representative_order(order, cfgs)
    jobs = _resolve_jobs(jobs, cfgs)
    total = num_representatives(order)
    interval = cfgs.SEARCH.CHECKPOINT_INTERVAL

    start = 0
    report = SearchReport(kind, order, jobs)
    if checkpoint_path is not None and os.path.exists(checkpoint_path):
        start, report = read_checkpoint(checkpoint_path, kind, order, jobs)
        ss.log_info('Resuming the %s search of order %d at %d/%d'
                    % (kind, order, start, total))
    if dump_path is not None:
        if start == 0:
            open(dump_path, 'w').close()
            report.dump_lines = 0
        elif report.dump_lines is None:
            raise CheckpointError('%s was written by a search without a '
                                  'dump' % checkpoint_path)
        else:
            truncate_dump(dump_path, report.dump_lines)
    else:
        report.dump_lines = None

    began = time.time()
    pool = Pool(processes=jobs) if jobs > 1 else None
    try:
        while start < total:
            stop = min(start + interval, total)
            tasks = split_range(kind, order, start, stop,
                                jobs * _CHUNKS_PER_WORKER,
                                collect=dump_path is not None)
            if pool is None:
                parts = [scan_range(task) for task in tasks]
            else:
                parts = pool.map(scan_range, tasks)
            for scanned, nonseparable, found, dumped in parts:
                report.merge(scanned, nonseparable, found)
                if dumped:
                    with open(dump_path, 'a') as f:
                        f.write('\n'.join(dumped) + '\n')
                    report.dump_lines += len(dumped)
            start = stop
            if checkpoint_path is not None:
                write_checkpoint(checkpoint_path, report, start)
            elapsed = time.time() - began
            ss.log_info('[%s order %d] %d/%d classes (%.1f%%), '
                        '%d non-separable, %d counterexamples, %.1fs'
                        % (kind, order, report.classes_scanned, total,
                           100.0 * report.classes_scanned / total,
                           report.nonseparable_count,
                           len(report.counterexamples), elapsed))
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    report.wall_time = time.time() - began
    return report


def verify_theorem1(order, jobs=None, checkpoint_path=None, dump_path=None,
                    cfgs=None):
    """
    Check that no graph of the given order is non-separable while all
    its subgraphs of orders n-1 and n-2 are separable.

    Args:
        order (int): 6 to 9.
        jobs (int): worker processes.
        checkpoint_path (str): optional checkpoint file.
        dump_path (str): optional graph6 dump of the non-separable
            representatives.
        cfgs (YACS CfgNode): configuration.

    Returns:
        SearchReport: ``report.holds`` is the verdict.
    """
    if not isinstance(order, int) or order < 6 or order > 9:
        raise ValueError('The two-deletion search runs for orders 6..9, '
                         'got %r' % (order,))
    report = run_search(TWO_DELETIONS, order, jobs, checkpoint_path,
                        dump_path, cfgs)
    if report.counterexamples:
        ss.log_warn('Order %d: %d graphs defeat the two-deletion claim'
                    % (order, len(report.counterexamples)))
    return report


def search_conjecture(order, jobs=None, checkpoint_path=None, dump_path=None,
                      cfgs=None):
    """
    Look for a non-separable graph of even order whose vertex-deleted
    subgraphs are all separable.

    Args:
        order (int): 6 or 8, or 10 (very long).
        jobs (int): worker processes.
        checkpoint_path (str): optional checkpoint file.
        dump_path (str): optional graph6 dump of the non-separable
            representatives.
        cfgs (YACS CfgNode): configuration.

    Returns:
        SearchReport: ``report.counterexamples`` lists what was found.
    """
    if isinstance(order, int) and order % 2 == 1:
        raise ValueError('Odd orders already have such graphs: '
                         'circulant_gn(%d) is one' % order)
    if order not in (6, 8, 10):
        raise ValueError('The one-deletion search runs for orders 6, 8 '
                         'and 10, got %r' % (order,))
    if order == 10:
        ss.log_warn('Order 10 has 2^36 switching classes, this search '
                    'takes a very long time; use a checkpoint')
    return run_search(ONE_DELETION, order, jobs, checkpoint_path, dump_path,
                      cfgs)


def oracle_nonseparable_count(order, cfgs=None):
    """
    Count the non-separable representatives of an order with the
    brute-force oracle, for cross-checking the fast decider.
    """
    count = 0
    for g in switching_class_representatives(order, cfgs=cfgs):
        if brute_force_separable(g, cfgs) is None:
            count += 1
    return count
