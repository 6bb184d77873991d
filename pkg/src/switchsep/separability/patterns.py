import itertools

from switchsep.utils.common import bits_of, full_mask, popcount


def find_twins(g):
    """
    All pairs of twin vertices: every third vertex is adjacent to both
    of them or to neither.

    Args:
        g (Graph): the graph.

    Returns:
        list: pairs (v, w) with v < w in lexicographic order.
    """
    twins = []
    for v, w in itertools.combinations(range(g.order), 2):
        others = full_mask(g.order) & ~((1 << v) | (1 << w))
        if not (g.rows[v] ^ g.rows[w]) & others:
            twins.append((v, w))
    return twins


def _induced_path(g, quad):
    mask = sum(1 << x for x in quad)
    degrees = dict((x, popcount(g.rows[x] & mask)) for x in quad)
    # [1, 1, 2, 2] on four vertices forces an induced path
    if sorted(degrees.values()) != [1, 1, 2, 2]:
        return None
    path = [min(x for x in quad if degrees[x] == 1)]
    while len(path) < 4:
        nxt = [x for x in bits_of(g.rows[path[-1]] & mask) if x not in path]
        path.append(nxt[0])
    return tuple(path)


def find_forbidden_pattern(g, o):
    """
    Look for four vertices inducing a path a-b-c-d next to an isolated
    vertex o. A graph containing such a 5-vertex pattern is not
    separable when o is isolated.

    Args:
        g (Graph): the graph, order >= 5.
        o (int): an isolated vertex of g.

    Returns:
        tuple or None: the path (a, b, c, d), or None.
    """
    if g.order < 5:
        raise ValueError('The forbidden pattern needs order >= 5, got '
                         'order %d' % g.order)
    if o < 0 or o >= g.order:
        raise ValueError('Vertex %d out of range for a graph of order %d'
                         % (o, g.order))
    if g.rows[o]:
        raise ValueError('Vertex %d is not isolated' % o)
    others = [v for v in range(g.order) if v != o]
    for quad in itertools.combinations(others, 4):
        path = _induced_path(g, quad)
        if path is not None:
            return path
    return None


def has_forbidden_pattern(g, o):
    """
    Args:
        g (Graph): the graph, order >= 5.
        o (int): an isolated vertex of g.

    Returns:
        bool: whether some four vertices induce a path on 3 edges.
    """
    return find_forbidden_pattern(g, o) is not None
