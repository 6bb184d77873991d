import itertools

import numpy as np

from switchsep.utils.common import bits_of, full_mask, mask_of, popcount


def vertex_mask(vertices, order):
    """
    Convert a vertex collection into a bit mask, checking the range.

    Args:
        vertices (VertexSet or iterable): vertices of a graph of
            the given order.
        order (int): order of the carrier graph.

    Returns:
        int: bit mask of the vertices.
    """
    if isinstance(vertices, VertexSet):
        if vertices.order != order:
            raise ValueError('Vertex set of order %d used with a graph of '
                             'order %d' % (vertices.order, order))
        return vertices.mask
    mask = 0
    for v in vertices:
        if not isinstance(v, (int, np.integer)) or isinstance(v, bool):
            raise TypeError('Vertices must be integers, got %r' % (v,))
        if v < 0 or v >= order:
            raise ValueError('Vertex %d out of range for a graph '
                             'of order %d' % (v, order))
        mask |= 1 << int(v)
    return mask


class VertexSet(object):
    """
    A set of vertices of a graph with vertices 0..order-1,
    stored as a bit vector.

    Args:
        order (int): order of the carrier graph.
        members (iterable): the vertices.

    Attributes:
        order (int): order of the carrier graph.
        mask (int): bit vector of the members.
    """

    __slots__ = ('order', 'mask')

    def __init__(self, order, members=()):
        if order < 0:
            raise ValueError('Order must be non-negative, got %d' % order)
        self.order = order
        self.mask = vertex_mask(members, order)

    @classmethod
    def from_mask(cls, order, mask):
        """
        Build a vertex set from a bit mask.

        Args:
            order (int): order of the carrier graph.
            mask (int): bit vector of the members.

        Returns:
            VertexSet: the vertex set.
        """
        if mask < 0 or mask >> order:
            raise ValueError('Mask %s does not fit a graph of '
                             'order %d' % (bin(mask), order))
        vs = cls.__new__(cls)
        vs.order = order
        vs.mask = mask
        return vs

    def complement(self):
        return VertexSet.from_mask(self.order,
                                   full_mask(self.order) & ~self.mask)

    def to_list(self):
        return bits_of(self.mask)

    def __iter__(self):
        return iter(bits_of(self.mask))

    def __len__(self):
        return popcount(self.mask)

    def __contains__(self, v):
        return 0 <= v < self.order and bool(self.mask >> v & 1)

    def __eq__(self, other):
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.order == other.order and self.mask == other.mask

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.order, self.mask))

    def __repr__(self):
        return 'VertexSet(%d, %s)' % (self.order, self.to_list())


class TwoGraph(object):
    """
    The two-graph of a switching class: the 3-subsets of vertices
    inducing an odd number of edges.

    Args:
        order (int): number of vertices.
        odd_triples (iterable): 3-element vertex collections.

    Attributes:
        order (int): number of vertices.
        odd_triples (frozenset): sorted vertex triples.
    """

    def __init__(self, order, odd_triples):
        triples = set()
        for t in odd_triples:
            t = tuple(sorted(t))
            if len(t) != 3 or len(set(t)) != 3:
                raise ValueError('A two-graph triple needs 3 distinct '
                                 'vertices, got %r' % (t,))
            if t[0] < 0 or t[2] >= order:
                raise ValueError('Triple %r out of range for order '
                                 '%d' % (t, order))
            triples.add(t)
        self.order = order
        self.odd_triples = frozenset(triples)

    def __len__(self):
        return len(self.odd_triples)

    def __contains__(self, triple):
        return tuple(sorted(triple)) in self.odd_triples

    def __eq__(self, other):
        if not isinstance(other, TwoGraph):
            return NotImplemented
        return (self.order == other.order and
                self.odd_triples == other.odd_triples)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.order, self.odd_triples))

    def __repr__(self):
        return 'TwoGraph(%d, %s)' % (self.order, sorted(self.odd_triples))


class Graph(object):
    """
    A simple undirected graph on the vertices 0..order-1.

    The graph is immutable: every operation returns a new graph.
    Row ``v`` of the adjacency is an integer whose bit ``u`` is set
    iff ``{u, v}`` is an edge.

    Args:
        order (int): number of vertices.
        rows (iterable): adjacency rows as bit masks. If None,
            the graph is edgeless.

    Attributes:
        order (int): number of vertices.
        rows (tuple): adjacency rows.
    """

    __slots__ = ('order', 'rows')

    def __init__(self, order, rows=None):
        if not isinstance(order, (int, np.integer)) or order < 0:
            raise ValueError('Order must be a non-negative integer, '
                             'got %r' % (order,))
        order = int(order)
        if rows is None:
            rows = (0,) * order
        rows = tuple(int(r) for r in rows)
        if len(rows) != order:
            raise ValueError('Expected %d adjacency rows, '
                             'got %d' % (order, len(rows)))
        full = full_mask(order)
        for v, row in enumerate(rows):
            if row < 0 or row & ~full:
                raise ValueError('Row %d has bits beyond the order %d'
                                 % (v, order))
            if row >> v & 1:
                raise ValueError('Vertex %d has a loop' % v)
            for u in bits_of(row):
                if not rows[u] >> v & 1:
                    raise ValueError('Adjacency is not symmetric at '
                                     '{%d, %d}' % (u, v))
        self.order = order
        self.rows = rows

    @classmethod
    def _from_rows(cls, order, rows):
        # rows already known to be a valid adjacency
        g = cls.__new__(cls)
        g.order = order
        g.rows = tuple(rows)
        return g

    @classmethod
    def from_edges(cls, order, edges):
        """
        Build a graph from an edge collection.

        Args:
            order (int): number of vertices.
            edges (iterable): pairs (u, v) of distinct vertices;
                repeated edges are merged.

        Returns:
            Graph: the graph.
        """
        rows = [0] * order
        for edge in edges:
            u, v = edge
            if u == v:
                raise ValueError('Loop at vertex %d' % u)
            for x in (u, v):
                if x < 0 or x >= order:
                    raise ValueError('Vertex %d out of range for a graph '
                                     'of order %d' % (x, order))
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._from_rows(order, rows)

    @classmethod
    def empty(cls, order):
        return cls(order)

    @classmethod
    def complete(cls, order):
        full = full_mask(order)
        return cls._from_rows(order, [full ^ (1 << v) for v in range(order)])

    @classmethod
    def from_adjacency_matrix(cls, matrix):
        """
        Build a graph from a symmetric 0/1 matrix with zero diagonal.

        Args:
            matrix (np.ndarray): adjacency matrix (shape: :math:`[n, n]`).

        Returns:
            Graph: the graph.
        """
        matrix = np.asarray(matrix)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError('Adjacency matrix must be square, got shape '
                             '%s' % (matrix.shape,))
        rows = [mask_of(np.flatnonzero(matrix[v])) for v in
                range(matrix.shape[0])]
        return cls(matrix.shape[0], rows)

    def vertex_set(self, members=()):
        return VertexSet(self.order, members)

    def has_edge(self, u, v):
        return bool(self.rows[u] >> v & 1)

    def neighborhood(self, v):
        """
        Return the neighbourhood of a vertex as a bit mask.
        """
        return self.rows[v]

    def neighbors(self, v):
        return bits_of(self.rows[v])

    def degree(self, v):
        return popcount(self.rows[v])

    def is_isolated(self, v):
        return self.rows[v] == 0

    def edges(self):
        """
        Return the edges as sorted pairs in lexicographic order.

        Returns:
            list: pairs (u, v) with u < v.
        """
        return [(u, v) for u in range(self.order)
                for v in bits_of(self.rows[u] >> (u + 1) << (u + 1))]

    def num_edges(self):
        return sum(popcount(r) for r in self.rows) // 2

    def adjacency_matrix(self):
        """
        Returns:
            np.ndarray: 0/1 adjacency matrix
            (shape: :math:`[order, order]`).
        """
        mat = np.zeros((self.order, self.order), dtype=np.uint8)
        for u, v in self.edges():
            mat[u, v] = mat[v, u] = 1
        return mat

    def switch(self, switching_set):
        """
        Seidel switching: toggle every pair with exactly one end in
        the switching set.

        Args:
            switching_set (VertexSet or iterable): the set U.

        Returns:
            Graph: the U-switching of the graph.
        """
        u_mask = vertex_mask(switching_set, self.order)
        return Graph._from_rows(self.order,
                                switch_rows(self.rows, self.order, u_mask))

    def cross_parity(self, a, b, c, d):
        """
        Number of edges among {a,c}, {a,d}, {b,c}, {b,d}.

        Args:
            a (int): first vertex of the first pair.
            b (int): second vertex of the first pair.
            c (int): first vertex of the second pair.
            d (int): second vertex of the second pair.

        Returns:
            int: a value in 0..4.
        """
        quad = (a, b, c, d)
        for x in quad:
            if x < 0 or x >= self.order:
                raise ValueError('Vertex %d out of range for a graph '
                                 'of order %d' % (x, self.order))
        if len(set(quad)) != 4:
            raise ValueError('cross_parity needs 4 distinct vertices, '
                             'got %r' % (quad,))
        pair = (1 << c) | (1 << d)
        return popcount(self.rows[a] & pair) + popcount(self.rows[b] & pair)

    def induced_subgraph(self, vertices):
        """
        Subgraph induced by a nonempty vertex set. Kept vertices are
        relabelled 0..k-1 in increasing order of their old labels.

        Args:
            vertices (VertexSet or iterable): vertices to keep.

        Returns:
            Graph: the induced subgraph.
        """
        keep = bits_of(vertex_mask(vertices, self.order))
        if not keep:
            raise ValueError('Induced subgraph needs a nonempty '
                             'vertex set')
        return Graph._from_rows(len(keep),
                                compress_rows(self.rows, keep))

    def delete_vertices(self, vertices):
        """
        Remove vertices (the induced subgraph on the rest).

        Args:
            vertices (VertexSet or iterable): vertices to delete.

        Returns:
            Graph: the remaining graph, relabelled order-preservingly.
        """
        gone = vertex_mask(vertices, self.order)
        return self.induced_subgraph(
            VertexSet.from_mask(self.order, full_mask(self.order) & ~gone))

    def complement(self):
        full = full_mask(self.order)
        return Graph._from_rows(self.order,
                                [full ^ row ^ (1 << v)
                                 for v, row in enumerate(self.rows)])

    def relabel(self, permutation):
        """
        Rename vertex ``v`` to ``permutation[v]``.

        Args:
            permutation (list): a permutation of 0..order-1.

        Returns:
            Graph: the relabelled graph.
        """
        permutation = [int(p) for p in permutation]
        if sorted(permutation) != list(range(self.order)):
            raise ValueError('Not a permutation of 0..%d: %r'
                             % (self.order - 1, permutation))
        return Graph.from_edges(self.order,
                                [(permutation[u], permutation[v])
                                 for u, v in self.edges()])

    def two_graph(self):
        """
        The two-graph of the switching class of this graph.

        Returns:
            TwoGraph: all vertex triples inducing 1 or 3 edges.
        """
        if self.order < 3:
            raise ValueError('Two-graphs need order >= 3, got %d'
                             % self.order)
        triples = []
        for i, j, k in itertools.combinations(range(self.order), 3):
            edges = ((self.rows[i] >> j & 1) + (self.rows[i] >> k & 1) +
                     (self.rows[j] >> k & 1))
            if edges & 1:
                triples.append((i, j, k))
        return TwoGraph(self.order, triples)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and self.rows == other.rows

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.order, self.rows))

    def __repr__(self):
        return 'Graph(order=%d, edges=%s)' % (self.order, self.edges())


def switch_rows(rows, order, u_mask):
    """
    Switch raw adjacency rows by a vertex mask.

    Args:
        rows (sequence): adjacency rows.
        order (int): number of vertices.
        u_mask (int): the switching set as a bit mask.

    Returns:
        list: the switched rows.
    """
    other = full_mask(order) & ~u_mask
    return [row ^ (other if u_mask >> v & 1 else u_mask)
            for v, row in enumerate(rows)]


def compress_rows(rows, keep):
    """
    Restrict adjacency rows to the sorted vertex list ``keep`` and
    relabel them 0..len(keep)-1.
    """
    out = []
    for v in keep:
        row = rows[v]
        new_row = 0
        for idx, u in enumerate(keep):
            if row >> u & 1:
                new_row |= 1 << idx
        out.append(new_row)
    return out


def is_switching_equivalent(g, h):
    """
    Decide whether ``h`` is a switching of ``g``.

    The only candidates for U are N_g(0) xor N_h(0) and its complement,
    and both give the same graph.

    Args:
        g (Graph): first graph.
        h (Graph): second graph.

    Returns:
        VertexSet or None: a switching set U with g switched by U
        equal to h, or None.
    """
    if g.order != h.order:
        return None
    if g.order == 0:
        return VertexSet(0)
    u_mask = g.rows[0] ^ h.rows[0]
    if g.switch(VertexSet.from_mask(g.order, u_mask)) == h:
        return VertexSet.from_mask(g.order, u_mask)
    return None
