"""
Permutable reducibility: Q(x) = R(S(x_B), x_rest) for an argument
subset B, and the largest arity of an irreducible retract.
"""
import itertools

import numpy as np

import switchsep as ss
from switchsep.quasigroup.table import (QuasigroupTable, RetractSpec,
                                        check_scale, is_latin, retract)
from switchsep.utils.common import lexicographic_subsets


class Decomposition(object):
    """
    A repetition-free composition Q(x) = R(S(x_B), x_rest).

    Args:
        positions (tuple): B, the 1-based argument positions fed to S.
        inner (QuasigroupTable): S, of arity len(B).
        outer (QuasigroupTable): R; its first argument is the value of S,
            the others are the remaining positions in increasing order.
    """

    def __init__(self, positions, inner, outer):
        self.positions = tuple(positions)
        self.inner = inner
        self.outer = outer

    @property
    def arity(self):
        return self.inner.arity + self.outer.arity - 1

    def compose(self):
        """
        Rebuild the composed table.

        Returns:
            QuasigroupTable: the quasigroup R(S(x_B), x_rest).
        """
        q = self.inner.order
        rest = self.outer.arity - 1
        flat = self.outer.values.reshape(q, q ** rest)
        block = flat[self.inner.values.ravel()]
        values = block.reshape((q,) * self.arity)
        values = np.moveaxis(values, list(range(len(self.positions))),
                             [b - 1 for b in self.positions])
        return QuasigroupTable(q, self.arity, values, check=False)

    def to_dict(self):
        return {'positions': list(self.positions),
                'inner': self.inner.to_dict(),
                'outer': self.outer.to_dict()}

    def __repr__(self):
        return 'Decomposition(positions=%r, inner=%r, outer=%r)' % (
            self.positions, self.inner, self.outer)


def _split(qg, positions):
    q = qg.order
    size = len(positions)
    moved = np.moveaxis(qg.values, [b - 1 for b in positions],
                        list(range(size)))
    rows = moved.reshape(q ** size, q ** (qg.arity - size))
    residuals, first, labels = np.unique(rows, axis=0, return_index=True,
                                         return_inverse=True)
    if residuals.shape[0] != q:
        return None
    labels = np.asarray(labels).ravel()
    # number the groups by first occurrence
    rank = np.empty(q, dtype=np.int64)
    rank[np.argsort(first)] = np.arange(q)
    inner = rank[labels].reshape((q,) * size)
    outer = np.empty((q, rows.shape[1]), dtype=np.int64)
    outer[rank] = residuals
    outer = outer.reshape((q,) * (qg.arity - size + 1))
    if not (is_latin(inner, q) and is_latin(outer, q)):
        raise RuntimeError('Decomposition of %r along %r has a non-Latin '
                           'part' % (qg, positions))
    return Decomposition(positions,
                         QuasigroupTable(q, size, inner, check=False),
                         QuasigroupTable(q, qg.arity - size + 1, outer,
                                         check=False))


def is_reducible(qg, cfgs=None):
    """
    Look for a decomposition Q(x) = R(S(x_B), x_rest) with
    2 <= |B| <= n - 1, trying B in lexicographic order.

    For each B the inner tuples are grouped by the function of the
    remaining arguments they induce; Q reduces along B iff there are
    exactly q groups.

    Args:
        qg (QuasigroupTable): quasigroup of arity >= 3.
        cfgs (YACS CfgNode): configuration for the scale guard.

    Returns:
        Decomposition: the first decomposition found, or None.
    """
    n = qg.arity
    if n < 3:
        raise ValueError('Reducibility needs arity >= 3, got %d' % n)
    check_scale(qg.order, n, cfgs)
    for positions in lexicographic_subsets(range(1, n + 1), min_size=2,
                                           max_size=n - 1):
        found = _split(qg, positions)
        if found is None:
            continue
        if found.compose() != qg:
            raise RuntimeError('Decomposition of %r along %r does not '
                               'reproduce the table' % (qg, positions))
        return found
    return None


def kappa(qg, cfgs=None):
    """
    The largest arity of an irreducible proper retract. Binary retracts
    count as irreducible, so the result is at least 2.

    Args:
        qg (QuasigroupTable): quasigroup of arity >= 3.
        cfgs (YACS CfgNode): configuration for the scale guard.

    Returns:
        int: kappa(Q), between 2 and n - 1.
    """
    n = qg.arity
    if n < 3:
        raise ValueError('kappa needs arity >= 3, got %d' % n)
    check_scale(qg.order, n, cfgs)
    for k in range(n - 1, 2, -1):
        for positions in itertools.combinations(range(n + 1), n - k):
            for symbols in itertools.product(range(qg.order),
                                             repeat=n - k):
                spec = RetractSpec(dict(zip(positions, symbols)))
                if is_reducible(retract(qg, spec), cfgs) is None:
                    ss.log_debug('Irreducible %d-ary retract %r' % (k, spec))
                    return k
    return 2
