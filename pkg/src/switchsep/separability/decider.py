import switchsep as ss
from switchsep.graph.graph import VertexSet, switch_rows, vertex_mask
from switchsep.separability.isolable import (check_part, has_cross_edges,
                                             isolating_switching)
from switchsep.utils.common import bits_of, full_mask, lowest_bit, popcount


class SeparationWitness(object):
    """
    Certificate of switching separability: an isolable part W and a
    switching set U such that the U-switching has no edge between W
    and the other vertices.

    Args:
        part (VertexSet): the isolable set W.
        switching_set (VertexSet): the separating switching set U.

    Attributes:
        part (VertexSet): the isolable set W.
        switching_set (VertexSet): the separating switching set U.
    """

    def __init__(self, part, switching_set):
        if part.order != switching_set.order:
            raise ValueError('Part and switching set belong to graphs of '
                             'different orders (%d, %d)'
                             % (part.order, switching_set.order))
        self.part = part
        self.switching_set = switching_set

    def validate(self, g):
        """
        Check the witness against a graph.

        Args:
            g (Graph): the graph the witness claims to separate.

        Returns:
            bool: True iff the size bounds hold and the switching has
            no edge leaving the part.
        """
        if self.part.order != g.order:
            return False
        size = len(self.part)
        if size < 2 or size > g.order - 2:
            return False
        rows = switch_rows(g.rows, g.order, self.switching_set.mask)
        return not has_cross_edges(rows, g.order, self.part.mask)

    def to_dict(self):
        return {'part': self.part.to_list(),
                'switching_set': self.switching_set.to_list()}

    def __eq__(self, other):
        if not isinstance(other, SeparationWitness):
            return NotImplemented
        return (self.part == other.part and
                self.switching_set == other.switching_set)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.part, self.switching_set))

    def __repr__(self):
        return 'SeparationWitness(part=%s, switching_set=%s)' % (
            self.part.to_list(), self.switching_set.to_list())


def _set_key(mask):
    return popcount(mask), bits_of(mask)


def smaller_side(order, mask):
    """
    Of a vertex set and its complement, pick the smaller one
    (ties: the lexicographically least sorted list).
    """
    other = full_mask(order) & ~mask
    return min(mask, other, key=_set_key)


def make_witness(g, part_mask):
    """
    Build a normalized, validated witness for an isolable part.

    Args:
        g (Graph): the graph.
        part_mask (int): an isolable set.

    Returns:
        SeparationWitness: the witness; the switching set is the smaller
        of U and its complement.
    """
    u = isolating_switching(g, VertexSet.from_mask(g.order, part_mask))
    u_mask = smaller_side(g.order, u.mask)
    witness = SeparationWitness(VertexSet.from_mask(g.order, part_mask),
                                VertexSet.from_mask(g.order, u_mask))
    if not witness.validate(g):
        raise RuntimeError('Constructed witness %r does not separate %r'
                           % (witness, g))
    return witness


def closed_sets(rows, order, first_only=False, pivot=0):
    """
    Find the complements of isolable sets containing the pivot vertex.

    Switching by N(pivot) isolates the pivot without changing
    separability. In that graph a set W containing the pivot is isolable
    iff C = V - W satisfies N(c) xor N(d) being inside C for all c, d in
    C. Such sets are closed under intersection, so every pair {c, d}
    has a least closed superset; W is isolable iff |C| <= order - 2.

    Args:
        rows (sequence): adjacency rows.
        order (int): order of the graph, at least 4.
        first_only (bool): stop at the first closed set found.
        pivot (int): the vertex switched to isolation.

    Returns:
        list: distinct closed sets C (bit masks) with 2 <= |C| <= order-2,
        in order of discovery.
    """
    h = switch_rows(rows, order, rows[pivot])
    others = full_mask(order) & ~(1 << pivot)
    free = [v for v in range(order) if v != pivot]
    found = []
    seen = set()
    for k, c in enumerate(free):
        base = h[c]
        for d in free[k + 1:]:
            closure = (1 << c) | (1 << d)
            pending = 1 << d
            while pending and closure != others:
                x = lowest_bit(pending)
                pending &= pending - 1
                new = (base ^ h[x]) & ~closure
                closure |= new
                pending |= new
            if closure != others and closure not in seen:
                seen.add(closure)
                found.append(closure)
                if first_only:
                    return found
    return found


def separable_rows(rows, order):
    """
    Fast yes/no separability on raw adjacency rows (order >= 4).
    """
    return bool(closed_sets(rows, order, first_only=True))


def least_isolable_set(rows, order):
    """
    The least isolable set by (size, sorted list), or None.

    A least-size isolable set S is the least closed superset of any pair
    inside it once a vertex outside S is the pivot, so the pair closures
    over every pivot contain it.

    Args:
        rows (sequence): adjacency rows.
        order (int): order of the graph, at least 4.

    Returns:
        int: bit mask of the set, or None if the graph is not separable.
    """
    best = None
    for pivot in range(order):
        candidates = closed_sets(rows, order, pivot=pivot)
        if not candidates:
            # separability does not depend on the pivot
            return None
        local = min(candidates, key=_set_key)
        if best is None or _set_key(local) < _set_key(best):
            best = local
    return best


def is_separable(g):
    """
    Decide switching separability and return a witness.

    The part is the least isolable set by (size, sorted list), which is
    never larger than its complement.

    Args:
        g (Graph): the graph, order >= 4.

    Returns:
        SeparationWitness or None: a validated witness, or None if the
        graph is not separable.
    """
    if g.order < 4:
        raise ValueError('Switching separability is defined for graphs '
                         'of order >= 4, got order %d' % g.order)
    part = least_isolable_set(g.rows, g.order)
    if part is None:
        ss.log_debug('No isolable set in a graph of order %d' % g.order)
        return None
    return make_witness(g, part)


def witness_for_part(g, w):
    """
    Witness for a given isolable set (no normalization of the part).

    Args:
        g (Graph): the graph.
        w (VertexSet or iterable): an isolable set.

    Returns:
        SeparationWitness: the witness.
    """
    w_mask = vertex_mask(w, g.order)
    check_part(g.order, w_mask)
    return make_witness(g, w_mask)
