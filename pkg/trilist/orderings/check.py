from trilist.models.ordering import Ordering
from .baseline import sort_by_degree


def check_order(graph):
    """ Place every vertex at the front or the back of the ordering, whichever is cheaper.

    Vertices are taken by non-increasing degree (ties by id). When u is considered,
    its neighbors split into N_b (already placed at the front), N_e (already placed at
    the back) and N_? (not placed yet). Placing u right after the front block makes
    N_? its successors, for a C+- contribution C_b = |N_b| (|N_e| + |N_?|); placing it
    right before the back block costs C_e = (|N_b| + |N_?|) |N_e|. The front is chosen
    only when C_b < C_e. The block sizes of every vertex are updated once per edge.

    Args:
        graph (Graph): The graph to order.

    Returns:
        Ordering: The resulting ordering.
    """
    n = graph.n
    adjacency = graph.adjacency_lists()
    degree = graph.degrees.tolist()

    placed_front = [0] * n
    placed_back = [0] * n
    rank = [0] * n
    front = back = 0

    for u in sort_by_degree(degree, descending=True).tolist():
        n_b, n_e = placed_front[u], placed_back[u]
        n_open = degree[u] - n_b - n_e
        if n_b * (n_e + n_open) < (n_b + n_open) * n_e:
            front += 1
            rank[u] = front
            for v in adjacency[u]:
                placed_front[v] += 1
        else:
            rank[u] = n - back
            back += 1
            for v in adjacency[u]:
                placed_back[v] += 1

    return Ordering(rank, name='check')
