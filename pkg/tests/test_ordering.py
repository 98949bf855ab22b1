import io

import numpy as np
import pytest

from trilist.models import Ordering, orient, read_ordering, write_ordering, load_edgelist
from trilist.models.exceptions import (FormatParseError, GraphInvalid, OrderingInvalid,
                                       OrderingMismatch)


def test_rank_and_inverse_agree():
    ordering = Ordering([3, 1, 2])
    assert ordering.inverse.tolist() == [1, 2, 0]
    assert ordering.sequence() == [1, 2, 0]
    for u in range(3):
        assert ordering.inverse[ordering.rank[u] - 1] == u


def test_from_sequence():
    ordering = Ordering.from_sequence([2, 0, 1], name='manual')
    assert ordering.rank.tolist() == [2, 3, 1]
    assert ordering.name == 'manual'
    assert ordering == Ordering([2, 3, 1])


@pytest.mark.parametrize('rank', [[1, 1, 2], [0, 1, 2], [1, 2, 4]])
def test_rank_must_be_a_permutation(rank):
    with pytest.raises(OrderingInvalid):
        Ordering(rank)


def test_sequence_must_list_every_vertex():
    with pytest.raises(OrderingInvalid):
        Ordering.from_sequence([0, 0, 1])


def test_empty_ordering():
    ordering = Ordering([])
    assert ordering.n == 0
    assert ordering.sequence() == []


def test_ordering_is_read_only():
    ordering = Ordering([2, 1])
    with pytest.raises(ValueError):
        ordering.rank[0] = 1


def test_check_graph_size(k4):
    with pytest.raises(OrderingMismatch):
        Ordering([1, 2, 3]).check_graph(k4)


def test_orientation_follows_rank(k4):
    view = orient(k4, Ordering.from_sequence([2, 0, 3, 1]))
    assert view.successors(2).tolist() == [0, 3, 1]
    assert view.predecessors(1).tolist() == [2, 0, 3]
    assert view.out_degree.tolist() == [2, 0, 3, 1]
    assert (view.out_degree + view.in_degree).tolist() == k4.degrees.tolist()
    view.validate()


def test_orientation_is_acyclic(gnm):
    rank = np.random.default_rng(5).permutation(gnm.n) + 1
    view = orient(gnm, Ordering(rank))
    view.validate()
    assert int(view.out_degree.sum()) == gnm.m
    assert len(view.arcs()) == gnm.m


def test_orientation_validate_detects_mismatch(path):
    view = orient(path, Ordering([1, 2, 3]))
    view._out_indices = view._out_indices[::-1].copy()
    with pytest.raises(GraphInvalid):
        view.validate()


def test_ordering_file_round_trip(graph_file):
    graph = load_edgelist(graph_file)
    ordering = Ordering.from_sequence([4, 2, 0, 1, 3])
    stream = io.StringIO()
    write_ordering(ordering, graph, stream)
    assert stream.getvalue().splitlines()[0] == '50 1'

    stream.seek(0)
    assert read_ordering(stream, graph) == ordering


def test_read_ordering_from_path(tmp_path, graph_file):
    graph = load_edgelist(graph_file)
    path = tmp_path / 'small.check.order'
    path.write_text('# by hand\n10 5\n20 4\n30 3\n40 2\n50 1\n')
    ordering = read_ordering(path, graph)
    assert ordering.name == 'small.check'
    assert ordering.sequence() == [4, 3, 2, 1, 0]


@pytest.mark.parametrize('content, error', [
    ('10 1\n20\n', FormatParseError),
    ('10 1\n20 2\n30 3\n40 4\n99 5\n', OrderingMismatch),
    ('10 1\n20 2\n30 3\n40 4\n', OrderingMismatch),
    ('10 1\n10 2\n20 3\n30 4\n40 5\n', OrderingInvalid),
    ('10 1\n20 2\n30 3\n40 4\n50 7\n', OrderingInvalid),
    ('10 0\n10 1\n20 2\n30 3\n40 4\n50 5\n', OrderingInvalid),
    ('10 -1\n20 2\n30 3\n40 4\n50 5\n', OrderingInvalid),
])
def test_read_ordering_errors(graph_file, content, error):
    graph = load_edgelist(graph_file)
    with pytest.raises(error):
        read_ordering(io.StringIO(content), graph)


def test_read_ordering_rejects_zero_rank_before_the_duplicate(graph_file):
    graph = load_edgelist(graph_file)
    with pytest.raises(OrderingInvalid) as err:
        read_ordering(io.StringIO('10 1\n20 0\n20 2\n30 3\n40 4\n50 5\n'), graph)
    assert 'Line 2' in str(err.value)
