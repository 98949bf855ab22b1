from .graph import Graph, NormalizeReport, normalize, load_edgelist, write_edgelist, gen_gnm
from .ordering import Ordering, read_ordering, write_ordering
from .oriented import OrientedView, orient
from .cost import CostReport, cost_report, cost_pm_by_edges
from .sink import TriangleSink, CountingSink, CollectingSink, TriangleWriter


__all__ = [
    'Graph', 'NormalizeReport', 'normalize', 'load_edgelist', 'write_edgelist', 'gen_gnm',
    'Ordering', 'read_ordering', 'write_ordering',
    'OrientedView', 'orient',
    'CostReport', 'cost_report', 'cost_pm_by_edges',
    'TriangleSink', 'CountingSink', 'CollectingSink', 'TriangleWriter',
]
