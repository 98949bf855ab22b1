from itertools import permutations

from trilist.models.ordering import Ordering
from trilist.models.exceptions import GuardExceeded
from trilist.logger import get_logger


logger = get_logger(__name__)

BRUTE_TRIANGLES_GUARD = 500
EXHAUSTIVE_GUARD = 11

COST_KINDS = ('pm', 'pp')


def brute_triangles(graph, *, limit=BRUTE_TRIANGLES_GUARD):
    """ Enumerate the triangles of a graph naively, as the reference for the listing code.

    Every edge u < v is intersected with the neighbors of both endpoints larger than v,
    using plain Python sets and no ordering at all.

    Args:
        graph (Graph): The graph.
        limit (int): The largest number of vertices accepted.

    Returns:
        list: The triangles as sorted triples of dense ids, in ascending order.

    Raises:
        GuardExceeded: If the graph has more than limit vertices.
    """
    if graph.n > limit:
        raise GuardExceeded('Vertex count for brute force triangles', graph.n, limit)
    adjacency = [set(neighbors) for neighbors in graph.adjacency_lists()]
    triangles = []
    for u, v in graph.edges().tolist():
        for w in adjacency[u] & adjacency[v]:
            if w > v:
                triangles.append((u, v, w))
    return sorted(triangles)


def _masks(graph):
    return [sum(1 << v for v in neighbors) for neighbors in graph.adjacency_lists()]


def _popcount(x):
    return bin(x).count('1')


def _check_weights(graph, cost_kind, weights):
    if cost_kind not in COST_KINDS:
        raise ValueError('Unknown cost kind {!r}, expected one of {}'.format(
            cost_kind, ', '.join(COST_KINDS)))
    if weights is None:
        return [0] * graph.n
    weights = [int(w) for w in weights]
    if len(weights) != graph.n:
        raise ValueError('Expected {} weights, got {}'.format(graph.n, len(weights)))
    if any(w < 0 for w in weights):
        raise ValueError('Vertex weights must be non-negative')
    if cost_kind == 'pm' and any(weights):
        raise ValueError('Vertex weights only apply to the pp cost')
    return weights


def _placement_cost(cost_kind, degree, before, weight):
    """ Return what a vertex contributes once `before` of its neighbors precede it. """
    after = degree - before
    if cost_kind == 'pm':
        return before * after
    return (after + weight) * (after + weight)


def sequence_cost(graph, sequence, cost_kind='pm', weights=None):
    """ Return the cost of the order listing the given vertices first to last.

    Args:
        graph (Graph): The graph.
        sequence (list): Every vertex exactly once.
        cost_kind (str): 'pm' for the sum of out times in degree, 'pp' for the sum of
            squared out degree, each raised by the vertex weight when weights are given.
        weights (list): Optional non-negative vertex weights, only valid with 'pp'.
    """
    weights = _check_weights(graph, cost_kind, weights)
    masks = _masks(graph)
    degrees = graph.degrees.tolist()
    placed = total = 0
    for u in sequence:
        total += _placement_cost(cost_kind, degrees[u], _popcount(masks[u] & placed),
                                 weights[u])
        placed |= 1 << u
    return total


def min_cost_exhaustive(graph, cost_kind='pm', weights=None, *, limit=EXHAUSTIVE_GUARD,
                        prune=True):
    """ Find an ordering of minimum cost by searching all orderings.

    The search places vertices one at a time from the front. Once a vertex is placed,
    its predecessors are exactly its placed neighbors, so its contribution to the cost
    is final and the cost of a prefix only grows. A branch is cut when its prefix cost
    reaches the best complete cost found so far, or when the same set of vertices has
    already been placed at no higher cost, because the cost of the remaining vertices
    only depends on which vertices precede them.

    Vertices are tried in ascending id and only strictly better orders replace the
    incumbent, so the witness is deterministic.

    Args:
        graph (Graph): The graph, with at most limit vertices.
        cost_kind (str): 'pm' or 'pp'.
        weights (list): Optional vertex weights for the weighted 'pp' cost.
        limit (int): The largest number of vertices accepted.
        prune (bool): Disable to walk every permutation, for checking the pruned search.

    Returns:
        tuple: The minimum cost and an Ordering achieving it.

    Raises:
        GuardExceeded: If the graph has more than limit vertices.
    """
    n = graph.n
    if n > limit:
        raise GuardExceeded('Vertex count for exhaustive ordering search', n, limit)
    weights = _check_weights(graph, cost_kind, weights)
    masks = _masks(graph)
    degrees = graph.degrees.tolist()

    if not prune:
        best, witness = None, ()
        for sequence in permutations(range(n)):
            cost = sequence_cost(graph, sequence, cost_kind, weights)
            if best is None or cost < best:
                best, witness = cost, sequence
        return best or 0, Ordering.from_sequence(list(witness), name='exhaustive')

    full = (1 << n) - 1
    seen = {}
    prefix = []
    best = [None, []]

    def search(placed, cost):
        if best[0] is not None and cost >= best[0]:
            return
        if placed == full:
            best[0], best[1] = cost, list(prefix)
            return
        if seen.get(placed, cost + 1) <= cost:
            return
        seen[placed] = cost
        for u in range(n):
            if placed >> u & 1:
                continue
            before = _popcount(masks[u] & placed)
            prefix.append(u)
            search(placed | 1 << u,
                   cost + _placement_cost(cost_kind, degrees[u], before, weights[u]))
            prefix.pop()

    search(0, 0)
    logger.debug('Exhaustive {} search over {} vertices visited {} vertex sets'.format(
        cost_kind, n, len(seen)))
    return best[0], Ordering.from_sequence(best[1], name='exhaustive')
