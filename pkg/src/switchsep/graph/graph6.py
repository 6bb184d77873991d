"""
graph6 and edge-list codecs.

The graph6 bytes are produced and read by networkx. This module strips
the optional ``>>graph6<<`` header, checks the input so that a malformed
string is reported with the byte offset where it goes wrong, and converts
between networkx graphs and :class:`Graph`.
"""
import re

import networkx as nx

from switchsep.graph.graph import Graph
from switchsep.utils.errors import EdgeListParseError, Graph6ParseError

GRAPH6_HEADER = '>>graph6<<'
_ORDER_DIRECTIVE = re.compile(r'^#\s*order\s+(\d+)\s*$')


def strip_graph6_header(text):
    """
    Remove the optional ``>>graph6<<`` header and the trailing newline.

    Returns:
        tuple: (data, base) where base is the offset of data in text.
    """
    data = text.rstrip('\r\n')
    if data.startswith(GRAPH6_HEADER):
        return data[len(GRAPH6_HEADER):], len(GRAPH6_HEADER)
    return data, 0


def to_networkx(g):
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(range(g.order))
    nx_graph.add_edges_from(g.edges())
    return nx_graph


def from_networkx(nx_graph):
    """
    Convert a networkx graph on nodes 0..n-1 to a :class:`Graph`.
    """
    order = nx_graph.number_of_nodes()
    if sorted(nx_graph.nodes()) != list(range(order)):
        raise ValueError('Nodes must be labelled 0..%d' % (order - 1))
    return Graph.from_edges(order, nx_graph.edges())


def encode_graph6(g):
    """
    Encode a graph as a graph6 string (without header or newline).

    Args:
        g (Graph): the graph.

    Returns:
        str: the graph6 encoding.
    """
    data = nx.to_graph6_bytes(to_networkx(g), header=False)
    return data.decode('ascii').strip()


def _size_header(data):
    # (order, length of the size header), or the offset of a truncation
    values = [ord(c) - 63 for c in data[:8]]
    if values[0] < 63:
        return values[0], 1, None
    width = 6 if len(values) > 1 and values[1] == 63 else 3
    skip = 2 if width == 6 else 1
    digits = values[skip:skip + width]
    if len(digits) < width:
        return None, None, len(data)
    n = 0
    for d in digits:
        n = (n << 6) | d
    return n, skip + width, None


def _locate_error(data):
    n, pos, truncated = _size_header(data)
    if truncated is not None:
        return 'Truncated size header', truncated
    expected = (n * (n - 1) // 2 + 5) // 6
    body = len(data) - pos
    return ('Expected %d bytes of adjacency data for order %d, found %d'
            % (expected, n, body), pos + min(body, expected))


def decode_graph6(text):
    """
    Decode a graph6 string.

    An optional ``>>graph6<<`` header and a trailing newline are
    accepted. Padding bits in the last byte must be zero.

    Args:
        text (str or bytes): the encoded graph.

    Returns:
        Graph: the decoded graph.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode('ascii')
        except UnicodeDecodeError as e:
            raise Graph6ParseError('Non-ASCII byte', e.start)
    data, base = strip_graph6_header(text)
    if not data:
        raise Graph6ParseError('Empty graph6 string', base)
    for k, c in enumerate(data):
        if not 63 <= ord(c) <= 126:
            raise Graph6ParseError('Byte %r outside the printable range '
                                   '63..126' % c, base + k)
    try:
        nx_graph = nx.from_graph6_bytes(data.encode('ascii'))
    except (nx.NetworkXError, ValueError, IndexError):
        msg, offset = _locate_error(data)
        raise Graph6ParseError(msg, base + offset)
    n = nx_graph.number_of_nodes()
    nbits = n * (n - 1) // 2
    if nbits % 6 and (ord(data[-1]) - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6ParseError('Nonzero padding bits', base + len(data) - 1)
    return from_networkx(nx_graph)


def parse_edge_list(text, order=None):
    """
    Parse an edge list: one ``u v`` pair of 0-based vertices per line.

    Blank lines and ``#`` comments are ignored, except the directive
    ``# order N`` which fixes the order (needed for isolated vertices).

    Args:
        text (str): the edge-list text.
        order (int): order of the graph. If None, it is taken from the
            ``# order`` directive, or else the largest vertex plus one.

    Returns:
        Graph: the graph.
    """
    edges = []
    directive = None
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith('#'):
            match = _ORDER_DIRECTIVE.match(stripped)
            if match:
                directive = int(match.group(1))
            continue
        tokens = stripped.split()
        if len(tokens) != 2:
            raise EdgeListParseError('Expected two vertices, got %r'
                                     % stripped, lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListParseError('Vertices must be integers, got %r'
                                     % stripped, lineno)
        if u < 0 or v < 0:
            raise EdgeListParseError('Negative vertex in %r' % stripped,
                                     lineno)
        if u == v:
            raise EdgeListParseError('Loop at vertex %d' % u, lineno)
        edges.append((u, v, lineno))
    if order is None:
        order = directive
    if order is None:
        order = max([max(u, v) for u, v, _ in edges] or [-1]) + 1
    for u, v, lineno in edges:
        if max(u, v) >= order:
            raise EdgeListParseError('Vertex %d out of range for order %d'
                                     % (max(u, v), order), lineno)
    return Graph.from_edges(order, [(u, v) for u, v, _ in edges])


def format_edge_list(g):
    """
    Format a graph as edge-list text with an ``# order`` directive.

    Args:
        g (Graph): the graph.

    Returns:
        str: the text, newline terminated.
    """
    lines = ['# order %d' % g.order]
    lines.extend('%d %d' % e for e in g.edges())
    return '\n'.join(lines) + '\n'
