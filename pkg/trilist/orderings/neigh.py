from trilist.models.cost import cost_report
from trilist.models.ordering import Ordering
from trilist.logger import get_logger
from .split import split_order


logger = get_logger(__name__)

DEFAULT_EPS = 0.01
DEFAULT_MAX_SWEEPS = 50

# own(d, p): cost of the moved vertex itself when p of its d neighbors precede it
# flip(a, b): change of a neighbor's cost when the moved vertex passes from after it to
#             before it, a and b being the neighbor's out/in degrees without the moved vertex
OBJECTIVES = {
    'pm': (lambda d, p: p * (d - p), lambda a, b: b - a),
    'pp': (lambda d, p: (d - p) * (d - p), lambda a, b: 2 * a + 1),
}


class NeighState:
    """ An ordering under single-vertex relocations, with degrees and cost kept current.

    The order is a doubly linked list over the vertices, so moving a vertex is O(1).
    Every vertex also carries a float key increasing along the list, which is enough to
    sort a neighborhood by current position. Inserting between two keys uses their
    midpoint; keys are reset to 1..n when the gap is exhausted and at every sweep end.

    Args:
        graph (Graph): The graph to order.
        ordering (Ordering): The starting ordering.
        objective (str): 'pm' to minimize C+-, 'pp' to minimize C++.
    """
    def __init__(self, graph, ordering, *, objective='pm'):
        ordering.check_graph(graph)
        if objective not in OBJECTIVES:
            raise ValueError('Unknown objective {!r}'.format(objective))
        self._graph = graph
        self._objective = objective
        self._own, self._flip = OBJECTIVES[objective]

        n = graph.n
        self._adjacency = graph.adjacency_lists()
        self._head, self._tail = n, n + 1
        self._next = [0] * (n + 2)
        self._prev = [0] * (n + 2)
        self._key = [0.0] * n
        self._link(ordering.sequence())

        report = cost_report(graph, ordering)
        rank = ordering.rank.tolist()
        self.out_degree = [sum(1 for v in self._adjacency[u] if rank[v] > rank[u])
                           for u in range(n)]
        self.in_degree = [len(self._adjacency[u]) - self.out_degree[u] for u in range(n)]
        self.cost = report.c_pm if objective == 'pm' else report.c_pp
        self.relocations = 0

    @property
    def objective(self):
        return self._objective

    def _link(self, sequence):
        """ Rebuild the list and reset the keys to 1..n along the sequence. """
        previous = self._head
        for position, u in enumerate(sequence, start=1):
            self._next[previous] = u
            self._prev[u] = previous
            self._key[u] = float(position)
            previous = u
        self._next[previous] = self._tail
        self._prev[self._tail] = previous

    def sequence(self):
        """ Return the vertices in their current order. """
        result = []
        u = self._next[self._head]
        while u != self._tail:
            result.append(u)
            u = self._next[u]
        return result

    def renumber(self):
        """ Reset the keys to 1..n along the current order. """
        self._link(self.sequence())

    def ordering(self, *, name='neigh'):
        """ Return the current order as an Ordering. """
        return Ordering.from_sequence(self.sequence(), name=name)

    def recompute(self):
        """ Return the objective of the current order computed from scratch. """
        report = cost_report(self._graph, self.ordering())
        return report.c_pm if self._objective == 'pm' else report.c_pp

    def best_position(self, u):
        """ Evaluate every position of u relative to its neighbors.

        Position p means u directly after its p-th neighbor in the current order, p = 0
        meaning before all of them. The cost of position p differs from a constant by
        own(d, p) plus the flips of the first p neighbors, obtained by prefix sums.

        Returns:
            tuple: (neighbors sorted by position, current p, best p, cost change).
                The current position wins ties, then the smallest p.
        """
        key = self._key
        out_degree, in_degree = self.out_degree, self.in_degree
        ku = key[u]
        neighbors = sorted(self._adjacency[u], key=key.__getitem__)
        d = len(neighbors)

        current = 0
        flips = [0] * (d + 1)
        total = 0
        for i, v in enumerate(neighbors, start=1):
            if key[v] < ku:
                current = i
                total += self._flip(out_degree[v] - 1, in_degree[v])
            else:
                total += self._flip(out_degree[v], in_degree[v] - 1)
            flips[i] = total

        own = self._own
        best_p = current
        best = current_cost = own(d, current) + flips[current]
        for p in range(d + 1):
            candidate = own(d, p) + flips[p]
            if candidate < best:
                best, best_p = candidate, p
        return neighbors, current, best_p, best - current_cost

    def relocate(self, u):
        """ Move u to its best position among its neighbors if that lowers the cost.

        Returns:
            int: The change of the cost, zero or negative.
        """
        neighbors, current, target, delta = self.best_position(u)
        if target == current:
            return 0

        nxt, prv, key = self._next, self._prev, self._key
        nxt[prv[u]] = nxt[u]
        prv[nxt[u]] = prv[u]

        if target == 0:
            after = prv[neighbors[0]]
        else:
            after = neighbors[target - 1]
        before = nxt[after]
        nxt[after] = u
        prv[u] = after
        nxt[u] = before
        prv[before] = u

        low = key[after] if after != self._head else None
        high = key[before] if before != self._tail else None
        if low is None:
            key[u] = high - 1.0
        elif high is None:
            key[u] = low + 1.0
        else:
            key[u] = (low + high) / 2.0
            if not low < key[u] < high:
                self.renumber()

        d = len(neighbors)
        self.out_degree[u] = d - target
        self.in_degree[u] = target
        if target < current:
            for v in neighbors[target:current]:
                self.out_degree[v] -= 1
                self.in_degree[v] += 1
        else:
            for v in neighbors[current:target]:
                self.out_degree[v] += 1
                self.in_degree[v] -= 1

        self.cost += delta
        self.relocations += 1
        return delta

    def sweep(self, callback=None):
        """ Try to relocate every vertex once, by ascending id.

        Args:
            callback (callable): Called as callback(state, u, delta) after every move.

        Returns:
            int: The cost after the sweep.
        """
        for u in range(self._graph.n):
            delta = self.relocate(u)
            if delta and callback is not None:
                callback(self, u, delta)
        self.renumber()
        return self.cost


class NeighResult:
    """ The outcome of a neighborhood optimization run.

    Args:
        ordering (Ordering): The final ordering.
        history (list): The cost before the first sweep followed by the cost after
            every sweep.
        relocations (int): The number of vertex moves performed.
    """
    def __init__(self, ordering, history, relocations):
        self.ordering = ordering
        self.history = history
        self.relocations = relocations

    @property
    def initial_cost(self):
        return self.history[0]

    @property
    def final_cost(self):
        return self.history[-1]

    @property
    def sweeps(self):
        return len(self.history) - 1


def neigh_run(graph, initial=None, *, eps=DEFAULT_EPS, max_sweeps=DEFAULT_MAX_SWEEPS,
              objective='pm', callback=None):
    """ Improve an ordering by greedy relocations of single vertices among their neighbors.

    Sweeps over all vertices are repeated while a sweep lowers the cost by at least
    the fraction eps of the cost before it, and at most max_sweeps times.

    Args:
        graph (Graph): The graph to order.
        initial (Ordering): The starting ordering, split_order(graph) when omitted.
        eps (float): The relative improvement below which the sweeps stop.
        max_sweeps (int): Hard cap on the number of sweeps.
        objective (str): 'pm' (C+-, the default) or 'pp' (C++).
        callback (callable): Called as callback(state, u, delta) after every move.

    Returns:
        NeighResult: The final ordering with the cost history.
    """
    if eps < 0:
        raise ValueError('eps must be non-negative')
    if initial is None:
        initial = split_order(graph)

    state = NeighState(graph, initial, objective=objective)
    history = [state.cost]
    while len(history) <= max_sweeps:
        before = state.cost
        after = state.sweep(callback)
        history.append(after)
        logger.debug('Sweep {}: cost {} -> {} ({} relocations so far)'.format(
            len(history) - 1, before, after, state.relocations))
        if not after < (1.0 - eps) * before:
            break
    else:
        logger.warning('Neighborhood optimization stopped at the cap of {} sweeps'
                       .format(max_sweeps))

    return NeighResult(state.ordering(), history, state.relocations)


def neigh_order(graph, initial=None, eps=DEFAULT_EPS, max_sweeps=DEFAULT_MAX_SWEEPS, *,
                objective='pm', callback=None):
    """ Return the ordering produced by neigh_run. """
    return neigh_run(graph, initial, eps=eps, max_sweeps=max_sweeps,
                     objective=objective, callback=callback).ordering
