import numpy as np

from .oriented import OrientedView


class CostReport:
    """ The costs an ordering induces on the two listing algorithms.

    All values are exact integer operation counts.

    Args:
        c_pp (int): Sum over vertices of (d_u^+)^2, the inner work of A++.
        c_pm (int): Sum over vertices of d_u^+ d_u^-, the inner work of A+-.
        c_mm (int): Sum over vertices of (d_u^-)^2.
        sum_deg_sq (int): Sum over vertices of d_u^2, independent of the ordering.
        n (int): The number of vertices.
        m (int): The number of edges.
    """
    FIELDS = ('n', 'm', 'c_pp', 'c_pm', 'c_mm', 'sum_deg_sq')

    def __init__(self, c_pp, c_pm, c_mm, sum_deg_sq, *, n=None, m=None):
        self.c_pp = c_pp
        self.c_pm = c_pm
        self.c_mm = c_mm
        self.sum_deg_sq = sum_deg_sq
        self.n = n
        self.m = m

    def check_identity(self):
        """ Return whether c_pp + 2 c_pm + c_mm equals the sum of squared degrees. """
        return self.c_pp + 2 * self.c_pm + self.c_mm == self.sum_deg_sq

    def cost(self, algorithm):
        """ Return the cost matching a listing algorithm ('app' or 'apm'). """
        return {'app': self.c_pp, 'apm': self.c_pm}[algorithm]

    def to_dict(self):
        return {field: getattr(self, field) for field in self.FIELDS}

    def __eq__(self, other):
        if not isinstance(other, CostReport):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __repr__(self):
        return '<CostReport c_pp={} c_pm={} c_mm={} sum_deg_sq={}>'.format(
            self.c_pp, self.c_pm, self.c_mm, self.sum_deg_sq)


def cost_report(graph, ordering):
    """ Compute the costs induced by an ordering.

    Args:
        graph (Graph): The undirected graph.
        ordering (Ordering): A valid ordering of its vertices.

    Returns:
        CostReport: The exact aggregates.

    Raises:
        OrderingMismatch: If the ordering does not rank the vertices of the graph.
    """
    ordering.check_graph(graph)
    rank = ordering.rank
    src = np.repeat(np.arange(graph.n, dtype=np.int64), graph.degrees)
    out_degree = np.bincount(src[rank[src] < rank[graph.indices]], minlength=graph.n)
    return _report_from_degrees(out_degree.astype(np.int64), graph.degrees, graph.m)


def cost_report_of_view(view):
    """ Compute the costs from an already oriented graph. """
    if not isinstance(view, OrientedView):
        raise TypeError('Expected an OrientedView')
    return _report_from_degrees(view.out_degree, view.graph.degrees, view.m)


def _report_from_degrees(out_degree, degrees, m):
    in_degree = degrees - out_degree
    return CostReport(c_pp=int(np.dot(out_degree, out_degree)),
                      c_pm=int(np.dot(out_degree, in_degree)),
                      c_mm=int(np.dot(in_degree, in_degree)),
                      sum_deg_sq=int(np.dot(degrees, degrees)),
                      n=len(degrees), m=m)


def cost_pm_by_edges(graph, ordering):
    """ Accumulate C+- over the oriented edges instead of over the vertices.

    Every oriented edge (u, v) contributes d_v^+, and summing over the predecessors of
    v gives d_v^- d_v^+. This is an independent second entry for cost_report.

    Returns:
        int: The C+- cost of the ordering.
    """
    rank = ordering.rank.tolist()
    adjacency = graph.adjacency_lists()
    out_degree = [sum(1 for v in adjacency[u] if rank[v] > rank[u]) for u in range(graph.n)]
    return sum(out_degree[v] for u in range(graph.n) for v in adjacency[u] if rank[u] < rank[v])
