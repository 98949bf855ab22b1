import io
from pathlib import Path

import numpy as np
import networkx as nx

from .exceptions import EdgeListParseError, GraphInvalid, GraphReadError, GraphSizeError
from trilist.logger import get_logger


logger = get_logger(__name__)

# below this many vertex pairs gen_gnm samples pair indices without replacement
DENSE_SAMPLING_LIMIT = 4000000

LABEL_MIN, LABEL_MAX = -2 ** 63, 2 ** 63 - 1


class NormalizeReport:
    """ Counts of what normalize() removed from the raw input.

    Args:
        raw_pairs (int): The number of pairs that were read.
        loops_dropped (int): The number of pairs (u, u).
        duplicates_merged (int): The number of pairs that repeat an edge already seen,
            in either direction.
    """
    def __init__(self, raw_pairs, loops_dropped, duplicates_merged):
        self.raw_pairs = raw_pairs
        self.loops_dropped = loops_dropped
        self.duplicates_merged = duplicates_merged

    def to_dict(self):
        """ Return a dictionary of the report. """
        return {
            'raw_pairs': self.raw_pairs,
            'loops_dropped': self.loops_dropped,
            'duplicates_merged': self.duplicates_merged
        }

    def __repr__(self):
        return '<NormalizeReport pairs={} loops={} duplicates={}>'.format(
            self.raw_pairs, self.loops_dropped, self.duplicates_merged)


class Graph:
    """ An immutable undirected simple graph in compressed sorted-adjacency form.

    Vertices are dense ids in [0, n). The neighbors of vertex u are
    indices[indptr[u]:indptr[u + 1]], strictly increasing. Every edge is stored in
    both directions, hence len(indices) == 2m. The original label of each vertex is
    kept in labels, so that results can be reported in the input's vocabulary.

    Args:
        indptr (ndarray): Offsets into indices, length n + 1.
        indices (ndarray): Concatenated neighbor lists.
        labels (ndarray): Original label of every dense id. Defaults to the ids.
        report (NormalizeReport): What was dropped while building the graph, if known.
    """
    def __init__(self, indptr, indices, *, labels=None, report=None):
        self._indptr = np.asarray(indptr, dtype=np.int64)
        self._indices = np.asarray(indices, dtype=np.int64)
        n = len(self._indptr) - 1
        self._labels = np.arange(n, dtype=np.int64) if labels is None \
            else np.asarray(labels, dtype=np.int64)
        if len(self._labels) != n:
            raise GraphInvalid('Expected {} labels, got {}'.format(n, len(self._labels)))
        self._report = report

        self._id_map = None
        self._adjacency = None

        for arr in (self._indptr, self._indices, self._labels):
            arr.setflags(write=False)

    @classmethod
    def from_edges(cls, n, edges, *, labels=None, report=None):
        """ Build a graph over the dense ids [0, n) from a list of undirected edges.

        Vertices without edges are kept, which is how isolated vertices enter a graph.

        Args:
            n (int): The number of vertices.
            edges: Anything numpy can turn into a (k, 2) integer array.
            labels: The original labels of the dense ids.
            report (NormalizeReport): Attached to the graph unchanged.

        Raises:
            GraphInvalid: If an edge is a loop, repeats another edge or leaves [0, n).
        """
        pairs = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        if len(pairs) and (pairs.min() < 0 or pairs.max() >= n):
            raise GraphInvalid('Edge endpoints must lie in [0, {})'.format(n))
        lo = np.minimum(pairs[:, 0], pairs[:, 1])
        hi = np.maximum(pairs[:, 0], pairs[:, 1])
        if np.any(lo == hi):
            raise GraphInvalid('Simple graphs have no self-loops')
        if len(np.unique(lo * max(n, 1) + hi)) != len(pairs):
            raise GraphInvalid('Simple graphs have no repeated edges')

        indptr, indices = _compress(n, lo, hi)
        return cls(indptr, indices, labels=labels, report=report)

    @property
    def n(self):
        """ Return the number of vertices. """
        return len(self._indptr) - 1

    @property
    def m(self):
        """ Return the number of edges. """
        return len(self._indices) // 2

    @property
    def indptr(self):
        return self._indptr

    @property
    def indices(self):
        return self._indices

    @property
    def labels(self):
        """ Return the original label of every dense id. """
        return self._labels

    @property
    def report(self):
        """ Return the NormalizeReport of the graph, None if it was built directly. """
        return self._report

    @property
    def id_map(self):
        """ Return the dictionary mapping original labels to dense ids. """
        if self._id_map is None:
            self._id_map = {int(label): u for u, label in enumerate(self._labels)}
        return self._id_map

    @property
    def degrees(self):
        """ Return the degree of every vertex as an int64 array. """
        return np.diff(self._indptr)

    def degree(self, u):
        return int(self._indptr[u + 1] - self._indptr[u])

    def neighbors(self, u):
        """ Return the sorted neighbors of vertex u (read-only view). """
        return self._indices[self._indptr[u]:self._indptr[u + 1]]

    def adjacency_lists(self):
        """ Return the neighbor lists as Python lists, for vertex-by-vertex loops. """
        if self._adjacency is None:
            flat = self._indices.tolist()
            bounds = self._indptr.tolist()
            self._adjacency = [flat[bounds[u]:bounds[u + 1]] for u in range(self.n)]
        return self._adjacency

    def edges(self):
        """ Return every edge once as a (m, 2) array of dense ids with u < v. """
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees)
        mask = src < self._indices
        return np.column_stack((src[mask], self._indices[mask]))

    def to_networkx(self):
        """ Return the graph as a networkx Graph over the dense ids. """
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.n))
        nx_graph.add_edges_from(self.edges().tolist())
        return nx_graph

    def validate(self):
        """ Check the structural invariants of a simple undirected graph.

        Raises:
            GraphInvalid: If a neighbor list is unsorted, contains the vertex itself or
                the adjacency is not symmetric.
        """
        if self._indptr[0] != 0 or np.any(np.diff(self._indptr) < 0) or \
                self._indptr[-1] != len(self._indices):
            raise GraphInvalid('Offsets are not a valid compressed layout')
        if len(self._indices) % 2:
            raise GraphInvalid('The sum of degrees must be even')

        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees)
        if np.any(src == self._indices):
            raise GraphInvalid('Self-loop found')

        same_row = src[1:] == src[:-1]
        if np.any(self._indices[1:][same_row] <= self._indices[:-1][same_row]):
            raise GraphInvalid('Neighbor lists must be strictly increasing')

        forward = np.sort(src * max(self.n, 1) + self._indices)
        backward = np.sort(self._indices * max(self.n, 1) + src)
        if not np.array_equal(forward, backward):
            raise GraphInvalid('Adjacency is not symmetric')

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return np.array_equal(self._indptr, other._indptr) and \
            np.array_equal(self._indices, other._indices) and \
            np.array_equal(self._labels, other._labels)

    def __hash__(self):
        return hash((self.n, self.m, self._indices.tobytes()))

    def __repr__(self):
        return '<Graph n={} m={}>'.format(self.n, self.m)


def _compress(n, lo, hi):
    """ Build symmetric sorted compressed adjacency arrays from one copy of each edge. """
    src = np.concatenate((lo, hi))
    dst = np.concatenate((hi, lo))
    order = np.lexsort((dst, src))
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    return indptr, dst[order]


def normalize(raw_edges):
    """ Turn raw label pairs into a simple undirected graph.

    Loops are dropped, an edge given several times or in both directions is kept
    once, and the remaining labels are densely re-indexed in ascending label order.
    A label that only appears in loops disappears with them.

    Args:
        raw_edges: An iterable of (label, label) pairs of integers.

    Returns:
        Graph: The normalized graph. Its report attribute holds the drop counts.

    Raises:
        EdgeListParseError: If a pair does not consist of two integers. The line
            number is the 1-based position of the pair.
    """
    pairs = _as_pair_array(raw_edges)

    loops = pairs[:, 0] == pairs[:, 1]
    kept = pairs[~loops]
    labels, inverse = np.unique(kept, return_inverse=True)
    inverse = inverse.reshape(-1, 2)

    n = len(labels)
    lo = np.minimum(inverse[:, 0], inverse[:, 1])
    hi = np.maximum(inverse[:, 0], inverse[:, 1])
    codes = np.unique(lo * max(n, 1) + hi)

    report = NormalizeReport(raw_pairs=len(pairs),
                             loops_dropped=int(loops.sum()),
                             duplicates_merged=len(kept) - len(codes))

    indptr, indices = _compress(n, codes // max(n, 1), codes % max(n, 1))
    graph = Graph(indptr, indices, labels=labels, report=report)
    logger.info('Normalized {} pairs into n={} m={} ({} loops dropped, {} duplicates merged)'
                .format(report.raw_pairs, graph.n, graph.m,
                        report.loops_dropped, report.duplicates_merged))
    return graph


def _is_label(value):
    return isinstance(value, (int, np.integer)) and not isinstance(value, bool) and \
        LABEL_MIN <= value <= LABEL_MAX


def _as_pair_array(raw_edges):
    """ Convert raw pairs to an int64 (k, 2) array, locating the first malformed pair.

    Every pair must hold exactly two integers within the int64 range. Floats, strings
    and rows of another length are rejected rather than coerced or re-paired.
    """
    if isinstance(raw_edges, np.ndarray):
        if raw_edges.size == 0:
            return np.empty((0, 2), dtype=np.int64)
        if raw_edges.dtype.kind not in 'iu' or raw_edges.ndim != 2 or raw_edges.shape[1] != 2:
            raise EdgeListParseError(0, 'array of dtype {} and shape {}'.format(
                raw_edges.dtype, raw_edges.shape))
        if raw_edges.dtype.kind == 'u':
            too_large = raw_edges.astype(np.uint64).max(axis=1) > np.uint64(LABEL_MAX)
            if np.any(too_large):
                position = int(np.argmax(too_large)) + 1
                raise EdgeListParseError(position, str(raw_edges[position - 1].tolist()))
        return raw_edges.astype(np.int64)

    raw_edges = list(raw_edges)
    for position, pair in enumerate(raw_edges, start=1):
        try:
            u, v = pair
        except (TypeError, ValueError):
            raise EdgeListParseError(position, repr(pair))
        if not (_is_label(u) and _is_label(v)):
            raise EdgeListParseError(position, repr(pair))
    return np.array(raw_edges, dtype=np.int64).reshape(-1, 2)


def load_edgelist(source):
    """ Read a whitespace separated edge list and normalize it.

    Every non-empty line that does not start with '#' holds two decimal labels
    separated by any run of spaces or tabs. Labels must fit in a signed 64 bit
    integer. Further columns (weights, timestamps) are ignored. CRLF and LF
    line endings are equivalent.

    Args:
        source: A path or an open binary or text stream.

    Returns:
        Graph: The normalized graph.

    Raises:
        GraphReadError: If the source cannot be opened or read.
        EdgeListParseError: If a line is malformed, with its 1-based line number.
    """
    if isinstance(source, (str, Path)):
        try:
            with open(str(source), 'rb') as stream:
                return load_edgelist(stream)
        except OSError as err:
            raise GraphReadError('Cannot read the edge list {}: {}'.format(source, err))

    try:
        content = source.read()
    except OSError as err:
        raise GraphReadError('Cannot read the edge list: {}'.format(err))

    if isinstance(content, bytes):
        lines = io.BytesIO(content)
    else:
        lines = io.StringIO(content)

    first, second = [], []
    for line_number, raw_line in enumerate(lines, start=1):
        if isinstance(raw_line, bytes):
            try:
                raw_line = raw_line.decode('ascii')
            except UnicodeDecodeError:
                raise EdgeListParseError(line_number, repr(raw_line))

        line = raw_line.strip()
        if not line or line.startswith('#'):
            continue

        tokens = line.split()
        if len(tokens) < 2 or not (_is_decimal(tokens[0]) and _is_decimal(tokens[1])):
            raise EdgeListParseError(line_number, line)
        u, v = int(tokens[0]), int(tokens[1])
        if u > LABEL_MAX or v > LABEL_MAX:
            raise EdgeListParseError(line_number, line)
        first.append(u)
        second.append(v)

    return normalize(np.column_stack((np.array(first, dtype=np.int64),
                                      np.array(second, dtype=np.int64))))


def _is_decimal(token):
    return token.isascii() and token.isdigit()


def write_edgelist(graph, stream, *, labels=True):
    """ Write the edges of a graph, one 'u v' line per edge.

    Args:
        graph (Graph): The graph to write.
        stream: A text stream.
        labels (bool): Write original labels instead of dense ids.
    """
    edges = graph.edges()
    if labels:
        edges = graph.labels[edges] if len(edges) else edges
    for u, v in edges.tolist():
        stream.write('{} {}\n'.format(u, v))


def gen_gnm(n, m, seed):
    """ Draw a uniform random simple graph with exactly n vertices and m edges.

    The same (n, m, seed) always yields the same graph.

    Args:
        n (int): The number of vertices.
        m (int): The number of edges.
        seed (int): The seed of the numpy random generator.

    Returns:
        Graph: The generated graph with labels equal to the dense ids.

    Raises:
        GraphSizeError: If m exceeds n(n-1)/2 or a size is negative.
    """
    total = n * (n - 1) // 2
    if n < 0 or m < 0:
        raise GraphSizeError('Vertex and edge counts must be non-negative')
    if m > total:
        raise GraphSizeError('A simple graph on {} vertices has at most {} edges, {} requested'
                             .format(n, total, m))

    rng = np.random.default_rng(seed)
    if total <= DENSE_SAMPLING_LIMIT:
        picks = rng.choice(total, size=m, replace=False)
        rows, cols = np.triu_indices(n, k=1)
        lo, hi = rows[picks].astype(np.int64), cols[picks].astype(np.int64)
    else:
        chosen = np.empty(0, dtype=np.int64)
        while len(chosen) < m:
            draw = rng.integers(0, n, size=(int((m - len(chosen)) * 1.1) + 16, 2))
            draw = draw[draw[:, 0] != draw[:, 1]]
            codes = np.minimum(draw[:, 0], draw[:, 1]) * n + np.maximum(draw[:, 0], draw[:, 1])
            merged = np.concatenate((chosen, codes))
            _, first = np.unique(merged, return_index=True)
            chosen = merged[np.sort(first)]
        chosen = chosen[:m]
        lo, hi = chosen // n, chosen % n

    indptr, indices = _compress(n, lo, hi)
    return Graph(indptr, indices)
