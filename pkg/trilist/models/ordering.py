from pathlib import Path

import numpy as np

from .exceptions import FormatParseError, OrderingInvalid, OrderingMismatch


class Ordering:
    """ A bijective assignment of ranks 1..n to the vertices 0..n-1.

    The ordering induces the orientation of every edge from its lower ranked endpoint
    to its higher ranked one.

    Args:
        rank (ndarray): rank[u] is the position of vertex u, in [1, n].
        name (str): A short name for reports, e.g. the method that produced it.
    """
    def __init__(self, rank, *, name=None):
        self._rank = np.array(rank, dtype=np.int64)
        n = len(self._rank)
        if n and (self._rank.min() != 1 or self._rank.max() != n or
                  len(np.unique(self._rank)) != n):
            raise OrderingInvalid('Ranks must be a permutation of 1..{}'.format(n))

        self._inverse = np.empty(n, dtype=np.int64)
        self._inverse[self._rank - 1] = np.arange(n, dtype=np.int64)
        self._rank.setflags(write=False)
        self._inverse.setflags(write=False)
        self.name = name

    @classmethod
    def from_sequence(cls, vertices, *, name=None):
        """ Create the ordering that ranks the given vertices in the given order.

        Args:
            vertices: Every dense id exactly once, first ranked first.
            name (str): The name of the ordering.
        """
        vertices = np.asarray(vertices, dtype=np.int64)
        n = len(vertices)
        if n and (vertices.min() != 0 or vertices.max() != n - 1 or
                  len(np.unique(vertices)) != n):
            raise OrderingInvalid('The sequence must list each of the {} vertices once'.format(n))
        rank = np.empty(n, dtype=np.int64)
        rank[vertices] = np.arange(1, n + 1, dtype=np.int64)
        return cls(rank, name=name)

    @property
    def n(self):
        return len(self._rank)

    @property
    def rank(self):
        """ Return the rank of every vertex, 1-based. """
        return self._rank

    @property
    def inverse(self):
        """ Return the vertices by increasing rank: inverse[rank[u] - 1] == u. """
        return self._inverse

    def sequence(self):
        """ Return the vertices by increasing rank as a Python list. """
        return self._inverse.tolist()

    def check_graph(self, graph):
        """ Make sure the ordering ranks exactly the vertices of the graph.

        Raises:
            OrderingMismatch: If the sizes differ.
        """
        if self.n != graph.n:
            raise OrderingMismatch('The ordering ranks {} vertices but the graph has {}'
                                   .format(self.n, graph.n))

    def __eq__(self, other):
        if not isinstance(other, Ordering):
            return NotImplemented
        return np.array_equal(self._rank, other._rank)

    def __hash__(self):
        return hash(self._rank.tobytes())

    def __len__(self):
        return self.n

    def __repr__(self):
        return '<Ordering {}n={}>'.format('{} '.format(self.name) if self.name else '', self.n)


def write_ordering(ordering, graph, stream):
    """ Write an ordering as 'original_label rank' lines, one per vertex by rank.

    Args:
        ordering (Ordering): The ordering to write.
        graph (Graph): The graph providing the original labels.
        stream: A text stream.
    """
    ordering.check_graph(graph)
    labels = graph.labels.tolist()
    for position, u in enumerate(ordering.sequence(), start=1):
        stream.write('{} {}\n'.format(labels[u], position))


def read_ordering(source, graph, *, name=None):
    """ Read an ordering file written by write_ordering.

    Args:
        source: A path or an open text stream.
        graph (Graph): The graph whose labels the file refers to.
        name (str): The name given to the ordering.

    Returns:
        Ordering: The ordering over the dense ids of the graph.

    Raises:
        FormatParseError: If a line is not 'label rank'.
        OrderingMismatch: If a label is unknown or a vertex has no rank.
        OrderingInvalid: If a vertex is ranked twice or the ranks are not 1..n.
    """
    if isinstance(source, (str, Path)):
        with open(str(source), 'r') as stream:
            return read_ordering(stream, graph, name=name or Path(str(source)).stem)

    id_map = graph.id_map
    rank = np.zeros(graph.n, dtype=np.int64)
    seen = np.zeros(graph.n, dtype=bool)
    for line_number, line in enumerate(source, start=1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        tokens = line.split()
        try:
            label, position = int(tokens[0]), int(tokens[1])
        except (IndexError, ValueError):
            raise FormatParseError('Ordering', line_number, 'expected "label rank", got {!r}'
                                   .format(line))
        if label not in id_map:
            raise OrderingMismatch('Line {}: label {} is not a vertex of the graph'
                                   .format(line_number, label))
        if not 1 <= position <= graph.n:
            raise OrderingInvalid('Line {}: rank {} is outside 1..{}'.format(
                line_number, position, graph.n))
        u = id_map[label]
        if seen[u]:
            raise OrderingInvalid('Line {}: label {} is ranked twice'.format(line_number, label))
        seen[u] = True
        rank[u] = position

    if not seen.all():
        raise OrderingMismatch('{} vertices of the graph have no rank'
                               .format(int((~seen).sum())))
    return Ordering(rank, name=name)
