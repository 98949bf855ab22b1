import numpy as np
import networkx as nx

from .exceptions import GraphInvalid


class OrientedView:
    """ The acyclic orientation of a graph under an ordering.

    Every edge {u, v} is directed from the lower ranked endpoint to the higher ranked
    one. The successors N_u^+ and predecessors N_u^- of every vertex are stored in
    compressed arrays, each list sorted by ascending rank, which is the traversal order
    of the listing loops.

    Instances are immutable and may be shared between threads.

    Args:
        graph (Graph): The undirected graph.
        ordering (Ordering): The ordering inducing the orientation.
    """
    def __init__(self, graph, ordering):
        ordering.check_graph(graph)
        self._graph = graph
        self._ordering = ordering

        rank = ordering.rank
        src = np.repeat(np.arange(graph.n, dtype=np.int64), graph.degrees)
        dst = graph.indices
        forward = rank[src] < rank[dst]

        self._out_indptr, self._out_indices = _compress_by_rank(
            graph.n, src[forward], dst[forward], rank)
        self._in_indptr, self._in_indices = _compress_by_rank(
            graph.n, src[~forward], dst[~forward], rank)

        self._successors = None
        self._predecessors = None

    @property
    def graph(self):
        return self._graph

    @property
    def ordering(self):
        return self._ordering

    @property
    def n(self):
        return self._graph.n

    @property
    def m(self):
        return self._graph.m

    @property
    def out_degree(self):
        """ Return d_u^+ for every vertex. """
        return np.diff(self._out_indptr)

    @property
    def in_degree(self):
        """ Return d_u^- for every vertex. """
        return np.diff(self._in_indptr)

    def successors(self, u):
        """ Return N_u^+ sorted by rank. """
        return self._out_indices[self._out_indptr[u]:self._out_indptr[u + 1]]

    def predecessors(self, u):
        """ Return N_u^- sorted by rank. """
        return self._in_indices[self._in_indptr[u]:self._in_indptr[u + 1]]

    def successor_lists(self):
        """ Return every N_u^+ as a Python list, indexed by vertex. """
        if self._successors is None:
            self._successors = _split(self._out_indptr, self._out_indices)
        return self._successors

    def predecessor_lists(self):
        """ Return every N_u^- as a Python list, indexed by vertex. """
        if self._predecessors is None:
            self._predecessors = _split(self._in_indptr, self._in_indices)
        return self._predecessors

    def seeds(self):
        """ Return the vertices by increasing rank, the order the listing loops visit them. """
        return self._ordering.sequence()

    def arcs(self):
        """ Return every oriented edge (u, v), rank(u) < rank(v), as a (m, 2) array. """
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.out_degree)
        return np.column_stack((src, self._out_indices))

    def to_networkx(self):
        """ Return the orientation as a networkx DiGraph over the dense ids. """
        dag = nx.DiGraph()
        dag.add_nodes_from(range(self.n))
        dag.add_edges_from(self.arcs().tolist())
        return dag

    def validate(self):
        """ Check the degree identities and the acyclicity of the orientation.

        Raises:
            GraphInvalid: If any invariant of the oriented view does not hold.
        """
        degrees = self._graph.degrees
        out_degree, in_degree = self.out_degree, self.in_degree
        if not np.array_equal(out_degree + in_degree, degrees):
            raise GraphInvalid('In- and out-degrees do not add up to the degrees')
        if int(out_degree.sum()) != self.m or int(in_degree.sum()) != self.m:
            raise GraphInvalid('Every edge must be oriented exactly once')

        rank = self._ordering.rank
        arcs = self.arcs()
        if len(arcs) and np.any(rank[arcs[:, 0]] >= rank[arcs[:, 1]]):
            raise GraphInvalid('An edge points from a higher to a lower rank')
        for u in range(self.n):
            if np.any(np.diff(rank[self.successors(u)]) <= 0):
                raise GraphInvalid('Successors of {} are not sorted by rank'.format(u))
        if not nx.is_directed_acyclic_graph(self.to_networkx()):
            raise GraphInvalid('The oriented graph contains a cycle')

    def __repr__(self):
        return '<OrientedView n={} m={} ordering={}>'.format(
            self.n, self.m, self._ordering.name)


def _compress_by_rank(n, src, dst, rank):
    """ Group the arcs by source and sort each group by the rank of the target. """
    order = np.lexsort((rank[dst], src))
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    return indptr, dst[order]


def _split(indptr, indices):
    flat = indices.tolist()
    bounds = indptr.tolist()
    return [flat[bounds[u]:bounds[u + 1]] for u in range(len(bounds) - 1)]


def orient(graph, ordering):
    """ Orient every edge of graph from lower to higher rank.

    Args:
        graph (Graph): The undirected graph.
        ordering (Ordering): A valid ordering of the vertices of graph.

    Returns:
        OrientedView: The acyclic orientation.

    Raises:
        OrderingMismatch: If the ordering does not rank the vertices of the graph.
    """
    return OrientedView(graph, ordering)
