"""
Finite n-ary quasigroups stored as numpy arrays of shape (q,) * n,
axis i - 1 holding argument x_i. The predicate view of a table Q is
the (n+1)-ary relation x_0 = Q(x_1, ..., x_n); predicate position 0 is
the value.
"""
import json

import numpy as np

from switchsep.cfgs import get_cfg_defaults
from switchsep.utils.errors import ScaleLimitError


def check_scale(order, arity, cfgs=None):
    """
    Refuse tables with ``order ** arity`` cells at or above
    ``QUASIGROUP.MAX_TABLE_CELLS``.
    """
    if cfgs is None:
        cfgs = get_cfg_defaults()
    cells = order ** arity
    if cells >= cfgs.QUASIGROUP.MAX_TABLE_CELLS:
        raise ScaleLimitError('A table of order %d and arity %d has %d '
                              'cells, the limit is below %d'
                              % (order, arity, cells,
                                 cfgs.QUASIGROUP.MAX_TABLE_CELLS))


def is_latin(values, order=None):
    """
    Check the Latin property in every argument.

    Args:
        values (np.ndarray): table of shape (q,) * n.
        order (int): expected q, defaults to the first dimension.

    Returns:
        bool: True iff fixing all arguments but one always gives a
        bijection from that argument to the value.
    """
    values = np.asarray(values)
    if values.ndim == 0:
        raise ValueError('A table needs at least one argument')
    if order is None:
        order = values.shape[0]
    if any(dim != order for dim in values.shape):
        raise ValueError('Table shape %s is not (%d,) * %d'
                         % (values.shape, order, values.ndim))
    if values.min() < 0 or values.max() >= order:
        return False
    for axis in range(values.ndim):
        # each line along the axis must hold every symbol once
        expected = np.arange(order).reshape(
            [order if a == axis else 1 for a in range(values.ndim)])
        if not np.array_equal(np.sort(values, axis=axis),
                              np.broadcast_to(expected, values.shape)):
            return False
    return True


class QuasigroupTable(object):
    """
    An n-ary quasigroup of order q.

    Args:
        order (int): number of symbols, 0..order-1.
        arity (int): number of arguments.
        values (array-like): flat row-major table of ``order ** arity``
            symbols, or an array of shape (order,) * arity.
        check (bool): verify the Latin property.

    Attributes:
        order (int): number of symbols.
        arity (int): number of arguments.
        values (np.ndarray): read-only table of shape (order,) * arity.
    """

    def __init__(self, order, arity, values, check=True):
        if not isinstance(order, int) or order < 1:
            raise ValueError('Order must be a positive integer, got %r'
                             % (order,))
        if not isinstance(arity, int) or arity < 1:
            raise ValueError('Arity must be a positive integer, got %r'
                             % (arity,))
        values = np.array(values, dtype=np.int64)
        if values.size != order ** arity:
            raise ValueError('Order %d and arity %d need %d values, got %d'
                             % (order, arity, order ** arity, values.size))
        values = values.reshape((order,) * arity)
        if check and not is_latin(values, order):
            raise ValueError('Table is not Latin')
        values.setflags(write=False)
        self.order = order
        self.arity = arity
        self.values = values

    def __call__(self, *args):
        if len(args) != self.arity:
            raise ValueError('Expected %d arguments, got %d'
                             % (self.arity, len(args)))
        return int(self.values[tuple(args)])

    def characteristic(self):
        """
        np.ndarray: bool array of shape (q,) * (n + 1), True at
        (x_0, x_1, ..., x_n) iff x_0 = Q(x_1, ..., x_n).
        """
        char = np.zeros((self.order,) * (self.arity + 1), dtype=bool)
        args = np.indices(self.values.shape)
        char[(self.values,) + tuple(args)] = True
        return char

    def permute(self, permutation):
        """
        Reorder the arguments: argument i of the result is argument
        ``permutation[i]`` of this table (0-based).
        """
        if sorted(permutation) != list(range(self.arity)):
            raise ValueError('Not a permutation of 0..%d: %r'
                             % (self.arity - 1, permutation))
        return QuasigroupTable(self.order, self.arity,
                               np.transpose(self.values, permutation),
                               check=False)

    def to_dict(self):
        return {'order': self.order,
                'arity': self.arity,
                'values': [int(v) for v in self.values.ravel()]}

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(int(data['order']), int(data['arity']),
                       data['values'])
        except KeyError as e:
            raise ValueError('Table description lacks %s' % e)

    @classmethod
    def load(cls, path):
        """
        Read a table from a JSON file ``{order, arity, values}``.
        """
        with open(path, 'r') as f:
            return cls.from_dict(json.load(f))

    def save(self, path):
        with open(path, 'w') as f:
            json.dump(self.to_dict(), f)

    def __eq__(self, other):
        if not isinstance(other, QuasigroupTable):
            return NotImplemented
        return (self.order == other.order and self.arity == other.arity and
                np.array_equal(self.values, other.values))

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.order, self.arity, self.values.tobytes()))

    def __repr__(self):
        return 'QuasigroupTable(order=%d, arity=%d)' % (self.order,
                                                        self.arity)


def iterated_group(order, arity, cfgs=None):
    """
    The n-ary quasigroup x_1 + ... + x_n mod order.
    """
    check_scale(order, arity, cfgs)
    values = np.indices((order,) * arity).sum(axis=0) % order
    return QuasigroupTable(order, arity, values, check=False)


class RetractSpec(object):
    """
    Which predicate positions to fix, and to what.

    Args:
        fixed (dict): predicate position (0..n) -> symbol.

    Attributes:
        fixed (dict): the fixed positions.
    """

    def __init__(self, fixed):
        self.fixed = dict((int(k), int(v)) for k, v in fixed.items())
        if not self.fixed:
            raise ValueError('A retract fixes at least one position')

    def output_position(self, arity):
        """
        int: the least unfixed predicate position.
        """
        for pos in range(arity + 1):
            if pos not in self.fixed:
                return pos
        raise ValueError('Every predicate position is fixed')

    def validate(self, qg):
        n = qg.arity
        for pos, value in self.fixed.items():
            if pos < 0 or pos > n:
                raise ValueError('Predicate position %d outside 0..%d'
                                 % (pos, n))
            if value < 0 or value >= qg.order:
                raise ValueError('Symbol %d outside 0..%d'
                                 % (value, qg.order - 1))
        if n - len(self.fixed) < 2:
            raise ValueError('Retract of arity %d fixing %d positions has '
                             'arity below 2' % (n, len(self.fixed)))

    def __repr__(self):
        return 'RetractSpec(fixed=%r)' % (self.fixed,)


def retract(qg, spec):
    """
    Fix some predicate positions and read the rest as a quasigroup.

    Args:
        qg (QuasigroupTable): the quasigroup.
        spec (RetractSpec): the fixed positions; the output is the least
            unfixed position and the arguments are the other unfixed
            positions in increasing order.

    Returns:
        QuasigroupTable: the retract, of arity n - len(spec.fixed).
    """
    spec.validate(qg)
    index = tuple(spec.fixed.get(pos, slice(None))
                  for pos in range(qg.arity + 1))
    relation = qg.characteristic()[index]
    if not np.all(relation.sum(axis=0) == 1):
        raise RuntimeError('Predicate slice is not functional; the input '
                           'table is not Latin')
    values = relation.argmax(axis=0)
    return QuasigroupTable(qg.order, relation.ndim - 1, values, check=False)
