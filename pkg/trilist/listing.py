from time import perf_counter
from concurrent.futures import ThreadPoolExecutor

from .models.oriented import OrientedView, orient
from .models.sink import CountingSink
from .models.exceptions import AlgorithmUnknown
from .logger import get_logger


logger = get_logger(__name__)

# chunks handed to each lane in parallel mode, for load balancing
CHUNKS_PER_LANE = 4


class ListingStats:
    """ The operation counts and duration of one listing run.

    Args:
        algorithm (str): 'app' or 'apm'.
        triangle_count (int): The number of triangles emitted.
        inner_ops (int): Iterations of the innermost loop.
        mark_ops (int): Set and reset operations on the boolean table.
        wall_time (float): Duration of the listing in seconds.
        threads (int): The number of lanes that ran the outer loop.
    """
    def __init__(self, algorithm, triangle_count=0, inner_ops=0, mark_ops=0,
                 wall_time=0.0, threads=1):
        self.algorithm = algorithm
        self.triangle_count = triangle_count
        self.inner_ops = inner_ops
        self.mark_ops = mark_ops
        self.wall_time = wall_time
        self.threads = threads

    @property
    def wall_ms(self):
        return self.wall_time * 1000.0

    def merge(self, other):
        """ Add the counters of another lane to this one. """
        self.triangle_count += other.triangle_count
        self.inner_ops += other.inner_ops
        self.mark_ops += other.mark_ops

    def to_dict(self):
        return {
            'algorithm': self.algorithm,
            'triangle_count': self.triangle_count,
            'inner_ops': self.inner_ops,
            'mark_ops': self.mark_ops,
            'wall_time': self.wall_time,
            'threads': self.threads
        }

    def __repr__(self):
        return '<ListingStats {} triangles={} inner_ops={} mark_ops={}>'.format(
            self.algorithm, self.triangle_count, self.inner_ops, self.mark_ops)


def _app_lane(view, seeds, sink):
    """ Run the outer loop of A++ over the seed vertices w. """
    successors = view.successor_lists()
    predecessors = view.predecessor_lists()
    table = bytearray(view.n)
    emit = sink.emit
    found = inner = marks = 0

    for w in seeds:
        pred_w = predecessors[w]
        for v in pred_w:
            table[v] = 1
        for u in pred_w:
            succ_u = successors[u]
            inner += len(succ_u)
            for v in succ_u:
                if table[v]:
                    found += 1
                    emit(u, v, w)
        for v in pred_w:
            table[v] = 0
        marks += 2 * len(pred_w)

    return ListingStats('app', found, inner, marks)


def _apm_lane(view, seeds, sink):
    """ Run the outer loop of A+- over the seed vertices u. """
    successors = view.successor_lists()
    table = bytearray(view.n)
    emit = sink.emit
    found = inner = marks = 0

    for u in seeds:
        succ_u = successors[u]
        for w in succ_u:
            table[w] = 1
        for v in succ_u:
            succ_v = successors[v]
            inner += len(succ_v)
            for w in succ_v:
                if table[w]:
                    found += 1
                    emit(u, v, w)
        for w in succ_u:
            table[w] = 0
        marks += 2 * len(succ_u)

    return ListingStats('apm', found, inner, marks)


LANES = {
    'app': _app_lane,
    'apm': _apm_lane,
}


def _run(algorithm, graph, ordering, sink, threads):
    if algorithm not in LANES:
        raise AlgorithmUnknown('Unknown listing algorithm {!r}, expected one of {}'.format(
            algorithm, ', '.join(sorted(LANES))))
    view = graph if isinstance(graph, OrientedView) else orient(graph, ordering)
    sink = sink if sink is not None else CountingSink()
    lane = LANES[algorithm]

    # build the shared Python lists before timing or forking lanes
    view.successor_lists()
    if algorithm == 'app':
        view.predecessor_lists()

    seeds = view.seeds()
    start = perf_counter()
    if threads <= 1:
        stats = lane(view, seeds, sink)
    else:
        stats = ListingStats(algorithm)
        size = max(1, -(-len(seeds) // (threads * CHUNKS_PER_LANE)))
        chunks = [seeds[i:i + size] for i in range(0, len(seeds), size)]
        forks = [sink.fork() for _ in chunks]
        with ThreadPoolExecutor(max_workers=threads) as executor:
            results = list(executor.map(lambda args: lane(view, *args), zip(chunks, forks)))
        for lane_stats, fork in zip(results, forks):
            stats.merge(lane_stats)
            sink.merge(fork)
    stats.wall_time = perf_counter() - start
    stats.threads = max(1, threads)
    sink.close()

    logger.debug('Listed {} triangles with {} in {:.3f} ms ({} inner operations)'.format(
        stats.triangle_count, algorithm, stats.wall_ms, stats.inner_ops))
    return stats


def list_app(graph, ordering=None, sink=None, *, threads=1):
    """ List every triangle once with algorithm A++.

    For every seed w, in rank order, its predecessors are marked in a boolean table;
    then for every predecessor u of w, the successors v of u that are marked close the
    triangle (u, v, w). The table is reset after each seed. The innermost loop runs
    exactly C++ times.

    Args:
        graph: A Graph together with ordering, or an OrientedView.
        ordering (Ordering): The ordering orienting the edges, unless graph is a view.
        sink (TriangleSink): Receives the triangles. Counts only when omitted.
        threads (int): Number of lanes for the outer loop.

    Returns:
        ListingStats: The operation counts of the run.
    """
    return _run('app', graph, ordering, sink, threads)


def list_apm(graph, ordering=None, sink=None, *, threads=1):
    """ List every triangle once with algorithm A+-.

    For every seed u, in rank order, its successors are marked in a boolean table;
    then for every successor v of u, the successors w of v that are marked close the
    triangle (u, v, w). The table is reset after each seed. The innermost loop runs
    exactly C+- times.

    Args:
        graph: A Graph together with ordering, or an OrientedView.
        ordering (Ordering): The ordering orienting the edges, unless graph is a view.
        sink (TriangleSink): Receives the triangles. Counts only when omitted.
        threads (int): Number of lanes for the outer loop.

    Returns:
        ListingStats: The operation counts of the run.
    """
    return _run('apm', graph, ordering, sink, threads)


def list_triangles(graph, ordering=None, *, algorithm='apm', sink=None, threads=1):
    """ List the triangles with the algorithm given by name ('app' or 'apm'). """
    return _run(algorithm, graph, ordering, sink, threads)
