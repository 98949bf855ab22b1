import csv
from pathlib import Path
from time import perf_counter

import numpy as np

from .models.graph import Graph, load_edgelist
from .models.ordering import Ordering
from .models.cost import cost_report
from .orderings import compute_ordering
from .listing import list_triangles
from .logger import get_logger


logger = get_logger(__name__)

CSV_HEADER = ['dataset', 'algo', 'ordering', 'mode', 'threads', 'n', 'm', 'c_pp', 'c_pm',
              'inner_ops', 'triangles', 'load_ms', 'order_ms', 'list_ms']

MODES = ('mere', 'full')


class BenchRecord:
    """ The costs, counts and phase durations of one load-order-list pipeline run.

    Durations are kept in seconds and written in milliseconds.

    Args:
        dataset (str): The name of the graph.
        algorithm (str): 'app' or 'apm'.
        ordering (str): The name of the ordering.
        mode (str): 'mere' when only the listing counts, 'full' when loading and
            ordering count as well.
        threads (int): The number of listing lanes.
        n (int): The number of vertices.
        m (int): The number of edges.
        c_pp (int): The C++ cost of the ordering.
        c_pm (int): The C+- cost of the ordering.
        inner_ops (int): Iterations of the innermost listing loop.
        triangles (int): The number of triangles listed.
        load_time (float): Seconds spent reading and normalizing the graph.
        order_time (float): Seconds spent computing the ordering.
        list_time (float): Seconds spent listing.
    """
    def __init__(self, dataset, algorithm, ordering, mode, threads, n, m, c_pp, c_pm,
                 inner_ops, triangles, load_time, order_time, list_time):
        self.dataset = dataset
        self.algorithm = algorithm
        self.ordering = ordering
        self.mode = mode
        self.threads = threads
        self.n = n
        self.m = m
        self.c_pp = c_pp
        self.c_pm = c_pm
        self.inner_ops = inner_ops
        self.triangles = triangles
        self.load_time = load_time
        self.order_time = order_time
        self.list_time = list_time

    @property
    def full_time(self):
        return self.load_time + self.order_time + self.list_time

    @property
    def elapsed(self):
        """ Return the duration that counts for the mode of the run. """
        return self.full_time if self.mode == 'full' else self.list_time

    @property
    def matching_cost(self):
        """ Return the cost that bounds the work of the algorithm that was run. """
        return self.c_pp if self.algorithm == 'app' else self.c_pm

    def is_consistent(self):
        """ Return whether the innermost loop ran exactly as often as the cost predicts. """
        return self.inner_ops == self.matching_cost

    def to_row(self, float_format='{:.3f}'):
        """ Return the record as a dictionary keyed by CSV_HEADER. """
        return {
            'dataset': self.dataset,
            'algo': self.algorithm,
            'ordering': self.ordering,
            'mode': self.mode,
            'threads': self.threads,
            'n': self.n,
            'm': self.m,
            'c_pp': self.c_pp,
            'c_pm': self.c_pm,
            'inner_ops': self.inner_ops,
            'triangles': self.triangles,
            'load_ms': float_format.format(self.load_time * 1000.0),
            'order_ms': float_format.format(self.order_time * 1000.0),
            'list_ms': float_format.format(self.list_time * 1000.0),
        }

    @classmethod
    def from_row(cls, row):
        """ Create a record from a dictionary read with csv.DictReader. """
        ints = {key: int(row[key]) for key in ('threads', 'n', 'm', 'c_pp', 'c_pm',
                                               'inner_ops', 'triangles')}
        return cls(row['dataset'], row['algo'], row['ordering'], row['mode'],
                   load_time=float(row['load_ms']) / 1000.0,
                   order_time=float(row['order_ms']) / 1000.0,
                   list_time=float(row['list_ms']) / 1000.0,
                   **ints)

    def __repr__(self):
        return '<BenchRecord {}-{}-{} on {} triangles={} inner_ops={}>'.format(
            self.mode, self.ordering, self.algorithm, self.dataset, self.triangles,
            self.inner_ops)


def _dataset_name(source):
    if isinstance(source, (str, Path)):
        return Path(str(source)).stem
    return getattr(source, 'name', None) or 'graph'


def _load(source):
    """ Return the graph of a source and the seconds spent loading it. """
    if isinstance(source, Graph):
        return source, 0.0
    start = perf_counter()
    graph = load_edgelist(source)
    return graph, perf_counter() - start


def run_pipeline(source, ordering='degree', algorithm='apm', *, mode='mere', threads=1,
                 sink=None, dataset=None, params=None, load_time=None):
    """ Load a graph, order it, and list its triangles, timing each phase separately.

    Every phase is timed by its own clock, so the listing duration never includes
    loading or ordering; the mode only decides which durations count in the end.

    Args:
        source: A path, a stream or an already loaded Graph.
        ordering: The name of an ordering method, or an Ordering.
        algorithm (str): 'app' or 'apm'.
        mode (str): 'mere' or 'full'.
        threads (int): The number of listing lanes.
        sink (TriangleSink): Receives the triangles, counted only when omitted.
        dataset (str): The name reported for the graph.
        params (dict): Keyword arguments for compute_ordering.
        load_time (float): Seconds to report for loading when source is a Graph.

    Returns:
        tuple: The BenchRecord and the Ordering used.
    """
    if mode not in MODES:
        raise ValueError('Unknown mode {!r}, expected one of {}'.format(mode, ', '.join(MODES)))
    graph, measured = _load(source)
    if load_time is None:
        load_time = measured

    if isinstance(ordering, Ordering):
        ordering.check_graph(graph)
        order, order_time = ordering, 0.0
    else:
        start = perf_counter()
        order = compute_ordering(graph, ordering, **(params or {}))
        order_time = perf_counter() - start

    costs = cost_report(graph, order)
    stats = list_triangles(graph, order, algorithm=algorithm, sink=sink, threads=threads)

    record = BenchRecord(dataset or _dataset_name(source), algorithm, order.name or 'file',
                         mode, stats.threads, graph.n, graph.m, costs.c_pp, costs.c_pm,
                         stats.inner_ops, stats.triangle_count,
                         load_time, order_time, stats.wall_time)
    logger.debug('{}: load {:.3f} ms, order {:.3f} ms, list {:.3f} ms'.format(
        record, load_time * 1000.0, order_time * 1000.0, stats.wall_ms))
    return record, order


def run_bench(source, orderings, algorithms, repeats=3, *, mode='mere', threads=1,
              dataset=None, params=None):
    """ Run the pipeline for every ordering, algorithm and repeat.

    In mere mode the graph is loaded once and its loading time reported on every row.
    In full mode every row loads the graph again. All samples are returned, nothing is
    averaged.

    Returns:
        list: One BenchRecord per (ordering, algorithm, repeat), in that nesting order.
    """
    dataset = dataset or _dataset_name(source)
    graph, load_time = (None, None) if mode == 'full' else _load(source)

    records = []
    for method in orderings:
        for algorithm in algorithms:
            for _ in range(repeats):
                record, _ = run_pipeline(source if graph is None else graph, method, algorithm,
                                         mode=mode, threads=threads, dataset=dataset,
                                         params=params, load_time=load_time)
                records.append(record)
    logger.info('Benchmarked {} on {} orderings x {} algorithms x {} repeats'.format(
        dataset, len(orderings), len(algorithms), repeats))
    return records


def write_records(records, stream, *, header=True, float_format='{:.3f}'):
    """ Write records as CSV rows with the columns of CSV_HEADER. """
    writer = csv.DictWriter(stream, fieldnames=CSV_HEADER, lineterminator='\n')
    if header:
        writer.writeheader()
    for record in records:
        writer.writerow(record.to_row(float_format))


def read_records(stream):
    """ Read the records of a CSV written by write_records. """
    return [BenchRecord.from_row(row) for row in csv.DictReader(stream)]


def cost_time_correlation(records):
    """ Relate the listing time of the records to the cost matching their algorithm.

    Returns:
        tuple: The Pearson correlation and the slope of the least squares line of
            list_time (ms) against cost, or None when the costs do not vary.
    """
    if len(records) < 2:
        return None
    costs = np.array([r.matching_cost for r in records], dtype=np.float64)
    times = np.array([r.list_time * 1000.0 for r in records], dtype=np.float64)
    if np.ptp(costs) == 0 or np.ptp(times) == 0:
        return None
    correlation = float(np.corrcoef(costs, times)[0, 1])
    slope = float(np.polyfit(costs, times, 1)[0])
    logger.info('Cost/time correlation over {} runs: r={:.3f}, slope={:.3g} ms per operation'
                .format(len(records), correlation, slope))
    return correlation, slope
