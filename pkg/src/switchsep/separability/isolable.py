"""
Isolable vertex sets.

A set W with 2 <= |W| <= n-2 is isolable when some switching of the
graph has no edge between W and its complement. Equivalently, for all
distinct a, b in W and c, d outside W, the number of edges among
{a,c}, {a,d}, {b,c}, {b,d} is even.
"""
from switchsep.graph.graph import VertexSet, vertex_mask
from switchsep.utils.common import bits_of, full_mask, lowest_bit, popcount
from switchsep.utils.errors import PreconditionError


def check_part(order, w_mask):
    """
    Validate the size bounds of a candidate isolable set.

    Args:
        order (int): order of the graph.
        w_mask (int): the set as a bit mask.
    """
    if order < 4:
        raise ValueError('Isolable sets are defined for graphs of '
                         'order >= 4, got order %d' % order)
    size = popcount(w_mask)
    if size < 2 or size > order - 2:
        raise ValueError('An isolable set needs 2 <= |W| <= %d, '
                         'got |W| = %d' % (order - 2, size))


def isolable_mask(rows, order, w_mask):
    """
    Neighbourhood-difference test on raw rows (no argument checks).

    The parity of N(a,b;c,d) is the xor of the indicator of
    N(a) xor N(b) at c and at d. All these parities vanish iff
    (N(a) xor N(b)) restricted to the complement of W is empty or
    the whole complement, and it suffices to take a fixed a.

    Args:
        rows (sequence): adjacency rows.
        order (int): order of the graph.
        w_mask (int): the set W.

    Returns:
        bool: whether W is isolable.
    """
    rest = full_mask(order) & ~w_mask
    base = rows[lowest_bit(w_mask)]
    for b in bits_of(w_mask):
        diff = (base ^ rows[b]) & rest
        if diff and diff != rest:
            return False
    return True


def is_isolable(g, w):
    """
    Decide whether a vertex set is isolable.

    Args:
        g (Graph): the graph, order >= 4.
        w (VertexSet or iterable): the set W, 2 <= |W| <= order-2.

    Returns:
        bool: True iff some switching of g has no edge between W and
        the other vertices.
    """
    w_mask = vertex_mask(w, g.order)
    check_part(g.order, w_mask)
    return isolable_mask(g.rows, g.order, w_mask)


def has_cross_edges(rows, order, w_mask):
    rest = full_mask(order) & ~w_mask
    return any(rows[a] & rest for a in bits_of(w_mask))


def isolating_switching(g, w):
    """
    Build a switching set U that disconnects an isolable set W from
    the rest of the graph.

    If there is no cross edge, U is empty. Otherwise take the least
    nonadjacent pair a in W, c outside W and return W0 | V0 with
    W0 the members of W adjacent to c and V0 the non-members adjacent
    to a. When every cross pair is an edge, U = W.

    Args:
        g (Graph): the graph.
        w (VertexSet or iterable): an isolable set.

    Returns:
        VertexSet: the switching set U.
    """
    w_mask = vertex_mask(w, g.order)
    check_part(g.order, w_mask)
    rows = g.rows
    if not isolable_mask(rows, g.order, w_mask):
        raise PreconditionError('Vertex set %s is not isolable'
                                % bits_of(w_mask))
    if not has_cross_edges(rows, g.order, w_mask):
        return VertexSet(g.order)
    rest = full_mask(g.order) & ~w_mask
    for a in bits_of(w_mask):
        non_adjacent = rest & ~rows[a]
        if non_adjacent:
            c = lowest_bit(non_adjacent)
            break
    else:
        return VertexSet.from_mask(g.order, w_mask)
    w0 = rows[c] & w_mask
    v0 = rows[a] & rest
    return VertexSet.from_mask(g.order, w0 | v0)
