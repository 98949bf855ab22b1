import numpy as np

from trilist.models.ordering import Ordering


class CoreDecomposition:
    """ The result of the minimum-degree peeling of a graph.

    Args:
        ordering (Ordering): Vertices ranked by removal time.
        coreness (list): The core number of every vertex.
        peel_degrees (list): The degree of every vertex at the moment it was removed.
    """
    def __init__(self, ordering, coreness, peel_degrees):
        self.ordering = ordering
        self.coreness = coreness
        self.peel_degrees = peel_degrees

    @property
    def degeneracy(self):
        """ Return the core value c(G), the largest peeling degree. """
        return max(self.peel_degrees, default=0)


def identity_order(graph):
    """ Rank the vertices in the order of their dense ids: rank(u) = u + 1. """
    return Ordering(np.arange(1, graph.n + 1, dtype=np.int64), name='identity')


def random_order(graph, seed=0):
    """ Rank the vertices by a uniform random permutation, reproducible for a seed. """
    rng = np.random.default_rng(seed)
    return Ordering(rng.permutation(graph.n) + 1, name='random')


def sort_by_degree(degrees, *, descending=False):
    """ Return the vertices sorted by degree, ties broken by ascending id.

    The sort is stable on the vertex ids, so the result only depends on the degree
    sequence; chunks of the sequence could be sorted independently and merged.
    """
    keys = -np.asarray(degrees) if descending else np.asarray(degrees)
    return np.argsort(keys, kind='stable')


def degree_order(graph):
    """ Rank the vertices by non-decreasing degree, ties broken by id. """
    return Ordering.from_sequence(sort_by_degree(graph.degrees), name='degree')


def core_decomposition(graph):
    """ Peel the graph by repeatedly removing a vertex of minimum current degree.

    Uses the bucket queue of Batagelj and Zaversnik: vertices are kept sorted by
    current degree in one array with the start of every degree bucket recorded, so
    decreasing the degree of a neighbor is a swap to the front of its bucket. The whole
    peeling takes O(n + m).

    Args:
        graph (Graph): The graph to peel.

    Returns:
        CoreDecomposition: The removal ordering, coreness and peeling degrees.
    """
    n = graph.n
    adjacency = graph.adjacency_lists()
    degree = graph.degrees.tolist()
    max_degree = max(degree, default=0)

    bucket_size = [0] * (max_degree + 1)
    for d in degree:
        bucket_size[d] += 1
    bucket_start = [0] * (max_degree + 1)
    start = 0
    for d in range(max_degree + 1):
        bucket_start[d] = start
        start += bucket_size[d]

    position = [0] * n
    vertices = [0] * n
    fill = list(bucket_start)
    for u in range(n):
        position[u] = fill[degree[u]]
        vertices[position[u]] = u
        fill[degree[u]] += 1

    peel_degrees = [0] * n
    for i in range(n):
        v = vertices[i]
        peel_degrees[v] = degree[v]
        for u in adjacency[v]:
            if degree[u] > degree[v]:
                du, pu = degree[u], position[u]
                pw = bucket_start[du]
                w = vertices[pw]
                if u != w:
                    position[u], position[w] = pw, pu
                    vertices[pu], vertices[pw] = w, u
                bucket_start[du] += 1
                degree[u] -= 1

    return CoreDecomposition(Ordering.from_sequence(vertices, name='core'),
                             coreness=degree, peel_degrees=peel_degrees)


def core_order(graph):
    """ Rank the vertices by removal time in the minimum-degree peeling. """
    return core_decomposition(graph).ordering
