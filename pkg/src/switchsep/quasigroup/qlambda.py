"""
Quasigroups of order 4 built from extended Boolean functions, and
order extension by a direct product with an iterated group.

Symbols of order 4 encode pairs [x, y] as e = 2x + y.
"""
import numpy as np

from switchsep.quasigroup.table import QuasigroupTable, check_scale


def q_lambda(f, cfgs=None):
    """
    The n-ary quasigroup of order 4 defined by an extended Boolean
    function lambda of arity n + 1:
    Q([x_1, y_1], ..., [x_n, y_n]) = [x_0, y_0] with
    x_0 = x_1 + ... + x_n and y_0 = lambda(x_0, ..., x_n) + y_1 + ... + y_n.

    Args:
        f (ExtendedBooleanFunction): lambda, arity at least 3.
        cfgs (YACS CfgNode): configuration for the scale guard.

    Returns:
        QuasigroupTable: order 4, arity ``f.arity - 1``.
    """
    if f.arity < 3:
        raise ValueError('q_lambda needs a function of arity >= 3, got %d'
                         % f.arity)
    n = f.arity - 1
    check_scale(4, n, cfgs)
    symbols = np.indices((4,) * n)
    xs = symbols >> 1
    ys = symbols & 1
    x0 = xs.sum(axis=0) % 2
    point = x0.copy()
    for k in range(1, n + 1):
        point |= xs[k - 1] << k
    y0 = (f.full_values()[point] + ys.sum(axis=0)) % 2
    return QuasigroupTable(4, n, 2 * x0 + y0, check=False)


def direct_product(qg, k, cfgs=None):
    """
    Direct product with the iterated group x_1 + ... + x_n mod k.

    Args:
        qg (QuasigroupTable): the quasigroup of order q.
        k (int): group order, at least 2.
        cfgs (YACS CfgNode): configuration for the scale guard.

    Returns:
        QuasigroupTable: order q * k; symbol a * k + b is the pair (a, b).
    """
    if not isinstance(k, int) or k < 2:
        raise ValueError('Group order must be an integer >= 2, got %r'
                         % (k,))
    order = qg.order * k
    check_scale(order, qg.arity, cfgs)
    symbols = np.indices((order,) * qg.arity)
    outer = qg.values[tuple(symbols // k)]
    inner = (symbols % k).sum(axis=0) % k
    return QuasigroupTable(order, qg.arity, outer * k + inner, check=False)
