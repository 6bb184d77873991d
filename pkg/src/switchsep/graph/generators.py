import numpy as np

from switchsep.graph.graph import Graph, VertexSet


def make_rng(seed=None):
    """
    Args:
        seed (int or np.random.Generator): seed or an existing generator.

    Returns:
        np.random.Generator: a random generator.
    """
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_graph(order, p=0.5, rng=None):
    """
    Sample an Erdos-Renyi graph G(order, p).

    Args:
        order (int): number of vertices.
        p (float): edge probability.
        rng (int or np.random.Generator): randomness source.

    Returns:
        Graph: the sampled graph.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError('Edge probability must lie in [0, 1], got %f' % p)
    rng = make_rng(rng)
    upper = np.triu(rng.random((order, order)) < p, k=1)
    return Graph.from_adjacency_matrix((upper | upper.T).astype(np.uint8))


def random_vertex_set(order, rng=None):
    """
    Sample a uniformly random subset of 0..order-1.
    """
    rng = make_rng(rng)
    return VertexSet(order, np.flatnonzero(rng.random(order) < 0.5))


def random_permutation(order, rng=None):
    rng = make_rng(rng)
    return [int(v) for v in rng.permutation(order)]
