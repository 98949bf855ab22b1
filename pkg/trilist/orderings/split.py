import numpy as np

from trilist.models.ordering import Ordering
from .baseline import sort_by_degree


def split_order(graph):
    """ Spread the vertices alternately to the front and the back of the ordering.

    Let delta be the non-increasing degree ordering (ties by id). The vertex at
    position 2i + 1 of delta gets rank i + 1, the vertex at position 2i gets rank
    n + 1 - i. The highest degree vertices thus land at either end of the ordering,
    with few predecessors or few successors. Linear in n once the degrees are sorted.
    """
    n = graph.n
    delta = np.empty(n, dtype=np.int64)
    delta[sort_by_degree(graph.degrees, descending=True)] = np.arange(1, n + 1)

    half = delta // 2
    rank = np.where(delta % 2 == 1, half + 1, n + 1 - half)
    return Ordering(rank, name='split')
