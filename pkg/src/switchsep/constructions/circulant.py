"""
The circulant graphs G_n (n odd, n >= 5): vertex i is adjacent to
i +- j (mod n) for j = 1..floor(n/4). G_n is not separable, while every
vertex-deleted subgraph is.
"""
import math

import switchsep as ss
from switchsep.graph.graph import Graph, VertexSet
from switchsep.graph.graph6 import encode_graph6
from switchsep.separability.decider import SeparationWitness, is_separable
from switchsep.separability.isolable import is_isolable


class CirculantSpec(object):
    """
    Parameters of G_n.

    Args:
        n (int): odd order, at least 5.

    Attributes:
        n (int): order.
        m (int): jump parameter floor((n+1)/4), coprime to n.
        width (int): connection range floor(n/4).
    """

    def __init__(self, n):
        if not isinstance(n, int) or isinstance(n, bool):
            raise TypeError('n must be an integer, got %r' % (n,))
        if n < 5 or n % 2 == 0:
            raise ValueError('G_n is defined for odd n >= 5, got n = %d' % n)
        self.n = n
        self.m = (n + 1) // 4
        self.width = n // 4
        if math.gcd(self.m, n) != 1:
            raise RuntimeError('m = %d is not coprime to n = %d'
                               % (self.m, n))

    def __repr__(self):
        return 'CirculantSpec(n=%d, m=%d, width=%d)' % (self.n, self.m,
                                                        self.width)


def circulant_gn(n):
    """
    Build G_n.

    Args:
        n (int): odd order, at least 5.

    Returns:
        Graph: the circulant graph, regular of degree 2*floor(n/4).
    """
    spec = CirculantSpec(n)
    edges = [(i, (i + j) % n) for i in range(n)
             for j in range(1, spec.width + 1)]
    return Graph.from_edges(n, edges)


def jump_sequence(n):
    """
    The sequence v_0, v_m, v_2m, ... of G_n's vertices.

    Args:
        n (int): odd order, at least 5.

    Returns:
        list: the n vertex labels i*m mod n.
    """
    spec = CirculantSpec(n)
    return [(i * spec.m) % n for i in range(n)]


def _relabel_after_deletion(removed, x):
    return x - sum(1 for r in removed if r < x)


def _original_label(removed, y):
    for r in sorted(removed):
        if r <= y:
            y += 1
    return y


def deletion_switching(n, v):
    """
    The separating switching for G_n with vertex v deleted: v+m plus
    every vertex adjacent to v-m.

    Args:
        n (int): odd order, at least 5.
        v (int): the deleted vertex.

    Returns:
        tuple: (graph, pair, switching_set) where graph is G_n - v
        relabelled order-preservingly, pair is the VertexSet
        {v+m, v-m} and switching_set the VertexSet U, both in the
        labels of the deleted graph.
    """
    spec = CirculantSpec(n)
    if v < 0 or v >= n:
        raise ValueError('Vertex %d out of range for n = %d' % (v, n))
    sub = circulant_gn(n).delete_vertices([v])
    plus = _relabel_after_deletion([v], (v + spec.m) % n)
    minus = _relabel_after_deletion([v], (v - spec.m) % n)
    u_mask = (1 << plus) | sub.neighborhood(minus)
    return (sub, VertexSet(n - 1, [plus, minus]),
            VertexSet.from_mask(n - 1, u_mask))


class GnReport(object):
    """
    Outcome of checking G_n: non-separability, separability of every
    vertex-deleted subgraph with the explicit pair {v+m, v-m}, and
    non-separability after deleting v_i and v_{i+m}.

    Args:
        spec (CirculantSpec): parameters of G_n.

    Attributes:
        spec (CirculantSpec): parameters of G_n.
        gn_separable (bool): separability of G_n itself.
        deletions (list): one dict per deleted vertex.
        pair_deletions (list): one dict per deleted pair {v_i, v_{i+m}}.
        pair_deletions_skipped (str): reason the pair deletions were not
            checked, or None.
        graph6 (str): G_n in graph6.
    """

    def __init__(self, spec):
        self.spec = spec
        self.gn_separable = None
        self.deletions = []
        self.pair_deletions = []
        self.pair_deletions_skipped = None
        self.graph6 = None

    @property
    def holds(self):
        """
        bool: True iff every checked assertion came out as predicted.
        """
        if self.gn_separable is not False:
            return False
        for entry in self.deletions:
            if not (entry['separable'] and entry['pair_isolable'] and
                    entry['pair_switching_valid']):
                return False
        return not any(entry['separable'] for entry in self.pair_deletions)

    def to_dict(self):
        return {
            'n': self.spec.n,
            'm': self.spec.m,
            'width': self.spec.width,
            'graph6': self.graph6,
            'gn_separable': self.gn_separable,
            'deletions': self.deletions,
            'pair_deletions': self.pair_deletions,
            'pair_deletions_skipped': self.pair_deletions_skipped,
            'holds': self.holds,
        }


def verify_gn(n):
    """
    Check the claims about G_n.

    Args:
        n (int): odd order, at least 5.

    Returns:
        GnReport: the report; ``report.holds`` summarizes it.
    """
    spec = CirculantSpec(n)
    report = GnReport(spec)
    gn = circulant_gn(n)
    report.graph6 = encode_graph6(gn)
    report.gn_separable = is_separable(gn) is not None
    ss.log_debug('G_%d separable: %s' % (n, report.gn_separable))

    for v in range(n):
        sub, pair, u = deletion_switching(n, v)
        witness = is_separable(sub)
        report.deletions.append({
            'vertex': v,
            'separable': witness is not None,
            'witness': None if witness is None else {
                'part': [_original_label([v], y) for y in witness.part],
                'switching_set': [_original_label([v], y)
                                  for y in witness.switching_set]},
            'pair': [_original_label([v], y) for y in pair],
            'pair_isolable': is_isolable(sub, pair),
            'pair_switching_valid': SeparationWitness(pair, u).validate(sub),
        })

    if n - 2 < 4:
        report.pair_deletions_skipped = ('skipped: below order bound '
                                         '(order %d < 4)' % (n - 2))
    else:
        for i in range(n):
            removed = [i, (i + spec.m) % n]
            sub = gn.delete_vertices(removed)
            report.pair_deletions.append({
                'removed': removed,
                'separable': is_separable(sub) is not None,
            })
    if not report.holds:
        ss.log_warn('The G_%d checks did not all hold' % n)
    return report
