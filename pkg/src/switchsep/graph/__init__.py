from switchsep.graph.generators import (random_graph, random_permutation,
                                        random_vertex_set)
from switchsep.graph.graph import (Graph, TwoGraph, VertexSet,
                                   is_switching_equivalent, vertex_mask)
from switchsep.graph.graph6 import (decode_graph6, encode_graph6,
                                    format_edge_list, from_networkx,
                                    parse_edge_list, to_networkx)
