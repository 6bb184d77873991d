"""
Extended Boolean functions and their link to graphs.

An extended Boolean function of arity n is defined on the n-bit points
of even weight. It is stored as the table of its restriction to the
first n-1 arguments, the last argument being the parity of the others.
Quadratic polynomials map to graphs (one edge per quadratic monomial),
and two quadratic polynomials give the same function iff their graphs
are switchings of each other.
"""
import numpy as np

from switchsep.boolean.polynomial import Gf2Polynomial
from switchsep.graph.graph import Graph
from switchsep.utils.common import bits_of, full_mask, lexicographic_subsets


def _parity(values, nbits):
    par = np.zeros_like(values)
    for k in range(nbits):
        par ^= (values >> k) & 1
    return par


def _even_completion(n):
    # full n-bit point of every (n-1)-bit table index
    idx = np.arange(1 << (n - 1), dtype=np.int64)
    return idx | (_parity(idx, n - 1) << (n - 1))


class ExtendedBooleanFunction(object):
    """
    Args:
        arity (int): number of arguments, at least 2.
        table (array-like): 2**(arity-1) values in {0, 1}, index bit i
            is argument i.

    Attributes:
        arity (int): number of arguments.
        table (np.ndarray): read-only uint8 table.
    """

    def __init__(self, arity, table):
        if not isinstance(arity, int) or arity < 2:
            raise ValueError('Extended Boolean functions need arity >= 2, '
                             'got %r' % (arity,))
        table = np.array(table, dtype=np.int64).ravel()
        if table.shape[0] != 1 << (arity - 1):
            raise ValueError('Table of arity %d needs %d entries, got %d'
                             % (arity, 1 << (arity - 1), table.shape[0]))
        if np.any((table != 0) & (table != 1)):
            raise ValueError('Table entries must be 0 or 1')
        self.arity = arity
        self.table = table.astype(np.uint8)
        self.table.setflags(write=False)

    @classmethod
    def from_hex(cls, arity, text):
        """
        Args:
            arity (int): number of arguments.
            text (str): hex digits, table index 0 in the least
                significant bit.
        """
        try:
            value = int(text, 16)
        except ValueError:
            raise ValueError('Not a hex string: %r' % (text,))
        size = 1 << (arity - 1)
        if value >> size:
            raise ValueError('Hex value has bits beyond the %d table entries'
                             % size)
        return cls(arity, [(value >> b) & 1 for b in range(size)])

    def to_hex(self):
        value = 0
        for b in np.flatnonzero(self.table):
            value |= 1 << int(b)
        width = max(1, ((1 << (self.arity - 1)) + 3) // 4)
        return '%0*x' % (width, value)

    def value(self, point):
        """
        Args:
            point (int): n-bit mask of even weight.

        Returns:
            int: the function value.
        """
        if point < 0 or point >> self.arity:
            raise ValueError('Point %d has more than %d bits'
                             % (point, self.arity))
        if bin(point).count('1') % 2:
            raise ValueError('Point %d has odd weight' % point)
        return int(self.table[point & full_mask(self.arity - 1)])

    def full_values(self):
        """
        np.ndarray: values indexed by n-bit point; odd-weight points
        hold 0.
        """
        out = np.zeros(1 << self.arity, dtype=np.uint8)
        out[_even_completion(self.arity)] = self.table
        return out

    def restrict(self, i):
        """
        Fix argument i to 0.

        Args:
            i (int): argument index.

        Returns:
            ExtendedBooleanFunction: function of arity ``arity - 1``.
        """
        n = self.arity
        if n < 3:
            raise ValueError('Cannot restrict a function of arity %d' % n)
        if i < 0 or i >= n:
            raise ValueError('Argument %d outside 0..%d' % (i, n - 1))
        points = _even_completion(n - 1)
        low = full_mask(i)
        old = (points & low) | ((points >> i) << (i + 1))
        return ExtendedBooleanFunction(n - 1, self.full_values()[old])

    def anf(self):
        """
        Gf2Polynomial: algebraic normal form of the stored table, a
        polynomial in the first n-1 arguments.
        """
        return Gf2Polynomial.from_truth_table(self.table)

    def degree(self):
        return self.anf().degree()

    def __eq__(self, other):
        if not isinstance(other, ExtendedBooleanFunction):
            return NotImplemented
        return (self.arity == other.arity and
                np.array_equal(self.table, other.table))

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.arity, self.table.tobytes()))

    def __repr__(self):
        return 'ExtendedBooleanFunction(arity=%d, table=%s)' % (
            self.arity, self.to_hex())


def polynomial_to_graph(p):
    """
    The graph of a quadratic polynomial: {i, j} is an edge iff x_i*x_j
    is a monomial.

    Args:
        p (Gf2Polynomial): polynomial of degree at most 2.

    Returns:
        Graph: graph of order ``p.arity``.
    """
    if p.degree() > 2:
        raise ValueError('Only polynomials of degree <= 2 have a graph, '
                         'got degree %d' % p.degree())
    edges = [bits_of(m) for m in p.monomials if bin(m).count('1') == 2]
    return Graph.from_edges(p.arity, edges)


def graph_to_polynomial(g, linear=None):
    """
    The quadratic polynomial of a graph.

    Args:
        g (Graph): the graph.
        linear (Gf2Polynomial): affine part of the same arity, zero by
            default.

    Returns:
        Gf2Polynomial: sum of x_i*x_j over the edges plus ``linear``.
    """
    if linear is None:
        linear = Gf2Polynomial.zero(g.order)
    if linear.arity != g.order:
        raise ValueError('Linear part has arity %d, graph has order %d'
                         % (linear.arity, g.order))
    if linear.degree() > 1:
        raise ValueError('Linear part has degree %d' % linear.degree())
    quadratic = Gf2Polynomial(g.order, [(1 << u) | (1 << v)
                                        for u, v in g.edges()])
    return quadratic + linear


def canonical_decomposition(r, n=None):
    """
    Write r = q + (x0 + ... + x{n-1}) * l with q and l free of the last
    variable. The pair is unique.

    Args:
        r (Gf2Polynomial): polynomial of arity n.
        n (int): arity, defaults to ``r.arity``.

    Returns:
        tuple: (q, l), polynomials of arity n-1.
    """
    if n is None:
        n = r.arity
    if r.arity != n:
        raise ValueError('Polynomial has arity %d, expected %d'
                         % (r.arity, n))
    if n < 1:
        raise ValueError('Arity must be at least 1')
    last = 1 << (n - 1)
    q = set()
    l = set()
    for m in r.monomials:
        if not m & last:
            q ^= {m}
            continue
        # x_{n-1} = sigma + x_0 + ... + x_{n-2}
        base = m ^ last
        l ^= {base}
        for i in range(n - 1):
            q ^= {base | (1 << i)}
    return Gf2Polynomial(n - 1, q), Gf2Polynomial(n - 1, l)


def ebf_from_polynomial(p):
    """
    The extended Boolean function a polynomial defines on the even-weight
    points.

    Args:
        p (Gf2Polynomial): polynomial of arity n >= 2.

    Returns:
        ExtendedBooleanFunction: the function.
    """
    if p.arity < 2:
        raise ValueError('Need arity >= 2, got %d' % p.arity)
    return ExtendedBooleanFunction(
        p.arity, p.truth_table()[_even_completion(p.arity)])


def _assignments(positions):
    # every submask of the given bit positions with its parity
    masks = np.zeros(1, dtype=np.int64)
    parity = np.zeros(1, dtype=np.int64)
    for pos in positions:
        masks = np.concatenate([masks, masks | (1 << pos)])
        parity = np.concatenate([parity, parity ^ 1])
    return masks, parity


def _is_additive(values, y_positions, z_positions):
    ys, y_par = _assignments(y_positions)
    zs, z_par = _assignments(z_positions)
    for block in (0, 1):
        rows = ys[y_par == block]
        cols = zs[z_par == block]
        m = values[rows[:, None] | cols[None, :]]
        if np.any(m ^ m[:, :1] ^ m[:1, :] ^ m[0, 0]):
            return False
    return True


def ebf_is_separable(f):
    """
    Look for a split of the arguments into Y and Z, both of size at
    least 2, with f(y, z) = a(y) + b(z) on the even-weight points.

    Bipartitions are tried with argument 0 in Y, in lexicographic order
    of Y.

    Args:
        f (ExtendedBooleanFunction): function of arity >= 4.

    Returns:
        tuple: (Y, Z) as sorted tuples, or None.
    """
    n = f.arity
    if n < 4:
        raise ValueError('Separability needs arity >= 4, got %d' % n)
    values = f.full_values()
    everyone = list(range(n))
    for y in lexicographic_subsets(everyone, first=0, min_size=2,
                                   max_size=n - 2):
        z = tuple(v for v in everyone if v not in y)
        if _is_additive(values, y, z):
            return tuple(y), z
    return None


def is_quadratic_ebf(f):
    """
    Decide whether f is represented by a polynomial of degree <= 2.

    The ANF q of the stored table is the polynomial every representative
    reduces to, so f is quadratic iff q is.

    Args:
        f (ExtendedBooleanFunction): the function.

    Returns:
        tuple: (bool, q) with q the Gf2Polynomial in n-1 variables.
    """
    q = f.anf()
    return q.degree() <= 2, q
