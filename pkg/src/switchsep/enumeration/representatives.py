"""
One labelled representative per switching class: the unique graph of
the class in which vertex 0 is isolated. Such graphs are indexed by an
integer counter whose bit p is the edge indicator of the p-th pair of
``free_pairs(order)``.
"""
from switchsep.cfgs import get_cfg_defaults
from switchsep.graph.graph import Graph, VertexSet


def free_pairs(order):
    """
    Vertex pairs among 1..order-1 in lexicographic order.

    Args:
        order (int): number of vertices.

    Returns:
        list: pairs (i, j) with 1 <= i < j < order.
    """
    return [(i, j) for i in range(1, order) for j in range(i + 1, order)]


def num_representatives(order):
    """
    Number of switching classes of labelled graphs of the given order,
    2 ** ((order-1)(order-2)/2).
    """
    return 1 << ((order - 1) * (order - 2) // 2)


def check_representative_order(order, cfgs=None):
    if cfgs is None:
        cfgs = get_cfg_defaults()
    upper = cfgs.SEARCH.MAX_REPRESENTATIVE_ORDER
    if not isinstance(order, int) or order < 4 or order > upper:
        raise ValueError('Switching class representatives are streamed '
                         'for orders 4..%d, got %r' % (upper, order))


def representative_rows(order, counter, pairs=None):
    """
    Adjacency rows of the representative with the given counter.

    Args:
        order (int): number of vertices.
        counter (int): index in 0..num_representatives(order)-1.
        pairs (list): ``free_pairs(order)``, passed in by hot loops.

    Returns:
        list: adjacency rows.
    """
    if pairs is None:
        pairs = free_pairs(order)
    rows = [0] * order
    p = 0
    while counter:
        if counter & 1:
            i, j = pairs[p]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        counter >>= 1
        p += 1
    return rows


def representative(order, counter):
    """
    Args:
        order (int): number of vertices.
        counter (int): index in 0..num_representatives(order)-1.

    Returns:
        Graph: the representative with vertex 0 isolated.
    """
    if counter < 0 or counter >= num_representatives(order):
        raise ValueError('Counter %d out of range for order %d'
                         % (counter, order))
    return Graph._from_rows(order, representative_rows(order, counter))


def counter_of(g):
    """
    Inverse of ``representative``.

    Args:
        g (Graph): a graph with vertex 0 isolated.

    Returns:
        int: its counter.
    """
    if g.order < 1 or g.rows[0]:
        raise ValueError('Only graphs with vertex 0 isolated are '
                         'representatives')
    counter = 0
    for p, (i, j) in enumerate(free_pairs(g.order)):
        if g.rows[i] >> j & 1:
            counter |= 1 << p
    return counter


def class_representative(g):
    """
    The representative of the switching class of g (switch by N(0)).

    Args:
        g (Graph): a graph of order >= 1.

    Returns:
        Graph: the switching of g with vertex 0 isolated.
    """
    if g.order < 1:
        raise ValueError('The empty graph has no representative')
    return g.switch(VertexSet.from_mask(g.order, g.rows[0]))


def switching_class_representatives(order, start=0, stop=None, cfgs=None):
    """
    Stream the representatives in counter order.

    Args:
        order (int): number of vertices, 4..MAX_REPRESENTATIVE_ORDER.
        start (int): first counter.
        stop (int): end of the counter range (exclusive), defaults to
            the number of classes.
        cfgs (YACS CfgNode): configuration.

    Yields:
        Graph: the next representative.
    """
    check_representative_order(order, cfgs)
    total = num_representatives(order)
    if stop is None:
        stop = total
    if not 0 <= start <= stop <= total:
        raise ValueError('Counter range [%d, %d) not inside [0, %d)'
                         % (start, stop, total))
    pairs = free_pairs(order)
    for counter in range(start, stop):
        yield Graph._from_rows(order,
                               representative_rows(order, counter, pairs))
