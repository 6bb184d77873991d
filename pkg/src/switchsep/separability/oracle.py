"""
Brute-force oracles used to cross-check the fast decision procedures.
"""
import itertools

from switchsep.cfgs import get_cfg_defaults
from switchsep.graph.graph import VertexSet, switch_rows, vertex_mask
from switchsep.separability.decider import make_witness
from switchsep.separability.isolable import check_part, has_cross_edges
from switchsep.utils.common import (bits_of, full_mask, lexicographic_subsets,
                                    mask_of)
from switchsep.utils.errors import ScaleLimitError


def isolable_by_definition(g, w):
    """
    Isolability by the quadruple definition: every N(a,b;c,d) with
    a, b in W and c, d outside W is even.

    Args:
        g (Graph): the graph.
        w (VertexSet or iterable): the set W.

    Returns:
        bool: whether W is isolable.
    """
    w_mask = vertex_mask(w, g.order)
    check_part(g.order, w_mask)
    inside = bits_of(w_mask)
    outside = bits_of(full_mask(g.order) & ~w_mask)
    for a, b in itertools.combinations(inside, 2):
        for c, d in itertools.combinations(outside, 2):
            if g.cross_parity(a, b, c, d) % 2:
                return False
    return True


def isolable_by_switching_scan(g, w):
    """
    Search all switchings for one that disconnects W.

    Only switching sets avoiding vertex 0 are scanned, since U and
    its complement give the same graph.

    Args:
        g (Graph): the graph.
        w (VertexSet or iterable): the set W.

    Returns:
        VertexSet or None: the first separating switching set in
        increasing mask order, or None.
    """
    w_mask = vertex_mask(w, g.order)
    check_part(g.order, w_mask)
    for k in range(1 << (g.order - 1)):
        u_mask = k << 1
        rows = switch_rows(g.rows, g.order, u_mask)
        if not has_cross_edges(rows, g.order, w_mask):
            return VertexSet.from_mask(g.order, u_mask)
    return None


def _check_oracle_order(g, cfgs):
    if g.order < 4:
        raise ValueError('Switching separability is defined for graphs '
                         'of order >= 4, got order %d' % g.order)
    limit = cfgs.SEPARABILITY.BRUTE_FORCE_MAX_ORDER
    if g.order > limit:
        raise ScaleLimitError('The brute-force oracle is limited to order '
                              '<= %d, got order %d' % (limit, g.order))


def isolable_sets(g, cfgs=None):
    """
    All isolable sets containing vertex 0, by the quadruple definition.

    Args:
        g (Graph): the graph.
        cfgs (YACS CfgNode): configuration (order limit).

    Returns:
        list: VertexSet objects in lexicographic order.
    """
    if cfgs is None:
        cfgs = get_cfg_defaults()
    _check_oracle_order(g, cfgs)
    found = []
    for subset in lexicographic_subsets(range(g.order), first=0,
                                        min_size=2, max_size=g.order - 2):
        if isolable_by_definition(g, subset):
            found.append(VertexSet(g.order, subset))
    return found


def brute_force_separable(g, cfgs=None):
    """
    Separability by scanning every candidate part containing vertex 0
    in lexicographic order and testing the quadruple definition.

    Args:
        g (Graph): the graph, 4 <= order <= BRUTE_FORCE_MAX_ORDER.
        cfgs (YACS CfgNode): configuration (order limit).

    Returns:
        SeparationWitness or None: witness for the first isolable set,
        or None.
    """
    if cfgs is None:
        cfgs = get_cfg_defaults()
    _check_oracle_order(g, cfgs)
    for subset in lexicographic_subsets(range(g.order), first=0,
                                        min_size=2, max_size=g.order - 2):
        if isolable_by_definition(g, subset):
            return make_witness(g, mask_of(subset))
    return None
