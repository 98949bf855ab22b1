from pathlib import Path

import pytest

from trilist.models import Graph, gen_gnm


DATA_DIR = Path(__file__).parent / 'fixtures'


@pytest.fixture
def data_dir():
    yield DATA_DIR


@pytest.fixture
def triangle():
    yield Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])


@pytest.fixture
def k4():
    yield Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def star():
    yield Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)])


@pytest.fixture
def path():
    yield Graph.from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def cycle5():
    yield Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])


@pytest.fixture
def empty():
    yield Graph.from_edges(0, [])


@pytest.fixture
def gnm():
    yield gen_gnm(40, 200, seed=7)


@pytest.fixture
def graph_file(tmp_path):
    path = tmp_path / 'small.txt'
    path.write_text('# a small graph\n10 20\n20 30\n10 30\n30 40\n40 50\n')
    yield path
