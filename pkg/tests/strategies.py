from hypothesis import strategies as st

from switchsep.graph import Graph, VertexSet


@st.composite
def graphs(draw, min_order=0, max_order=10):
    order = draw(st.integers(min_value=min_order, max_value=max_order))
    pairs = [(u, v) for u in range(order) for v in range(u + 1, order)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs),
                           max_size=len(pairs)))
    return Graph.from_edges(order, [e for e, keep in zip(pairs, chosen)
                                    if keep])


@st.composite
def vertex_sets(draw, order):
    members = draw(st.lists(st.integers(min_value=0, max_value=order - 1),
                            unique=True)) if order else []
    return VertexSet(order, members)


@st.composite
def graphs_with_set(draw, min_order=1, max_order=10):
    g = draw(graphs(min_order=min_order, max_order=max_order))
    return g, draw(vertex_sets(g.order))
