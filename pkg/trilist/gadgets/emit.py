from pathlib import Path

from trilist.models.graph import Graph, load_edgelist, write_edgelist
from trilist.models.exceptions import FormatParseError
from .labeled import LabeledGadget
from .weighted import WeightedGraph


def write_gadget(gadget, graph_stream, sidecar_stream):
    """ Write a gadget as an edge list plus a sidecar file of vertex roles and weights.

    The sidecar starts with '# kind <kind>' and one '# <name> <value>' line per
    constant, followed by one 'label role weight' line per vertex in id order.

    Args:
        gadget (LabeledGadget): The gadget to write.
        graph_stream: Text stream receiving the edge list, with original labels.
        sidecar_stream: Text stream receiving the sidecar.
    """
    write_edgelist(gadget.graph, graph_stream)
    sidecar_stream.write('# kind {}\n'.format(gadget.kind))
    for name, value in gadget.constants.items():
        sidecar_stream.write('# {} {}\n'.format(name, value))
    for label, role, weight in zip(gadget.graph.labels.tolist(), gadget.roles, gadget.weights):
        sidecar_stream.write('{} {} {}\n'.format(label, role, weight))


def _read_text(source):
    if isinstance(source, (str, Path)):
        with open(str(source), 'r') as stream:
            return stream.read().splitlines()
    return source.read().splitlines()


def read_gadget(graph_source, sidecar_source):
    """ Read a gadget written by write_gadget.

    Vertices get the ids of their sidecar lines, so isolated vertices survive the
    round trip although the edge list does not mention them.

    Raises:
        FormatParseError: If a sidecar line is malformed or an edge names a label that
            the sidecar does not list.
    """
    kind = None
    constants = {}
    labels, roles, weights = [], [], []
    for line_number, line in enumerate(_read_text(sidecar_source), start=1):
        tokens = line.split()
        if not tokens:
            continue
        if tokens[0] == '#':
            if len(tokens) != 3:
                continue
            if tokens[1] == 'kind':
                kind = tokens[2]
            else:
                try:
                    constants[tokens[1]] = int(tokens[2])
                except ValueError:
                    constants[tokens[1]] = tokens[2]
            continue
        if len(tokens) != 3:
            raise FormatParseError('Sidecar', line_number, 'expected "label role weight"')
        try:
            labels.append(int(tokens[0]))
            weights.append(int(tokens[2]))
        except ValueError:
            raise FormatParseError('Sidecar', line_number, 'label and weight must be integers')
        roles.append(tokens[1])

    index = {label: u for u, label in enumerate(labels)}
    loaded = load_edgelist(graph_source)
    edges = []
    for u, v in loaded.labels[loaded.edges()].tolist():
        if u not in index or v not in index:
            raise FormatParseError('Sidecar', 0, 'edge {} {} names an unlisted vertex'.format(u, v))
        edges.append((index[u], index[v]))

    graph = Graph.from_edges(len(labels), edges, labels=labels)
    return LabeledGadget(kind or 'unknown', WeightedGraph(graph, weights), roles, constants)


def read_weighted(graph_source, weights_source):
    """ Read a weighted graph from an edge list and a file of 'label weight' lines.

    The vertices are the labels of both files, ranked by ascending label, so a vertex
    can be given a weight without having an edge. Unlisted vertices weigh zero.

    Raises:
        FormatParseError: If a weight line is malformed or repeats a label.
    """
    given = {}
    for line_number, line in enumerate(_read_text(weights_source), start=1):
        tokens = line.split()
        if not tokens or tokens[0].startswith('#'):
            continue
        try:
            label, weight = (int(t) for t in tokens)
        except ValueError:
            raise FormatParseError('Weights', line_number, 'expected "label weight"')
        if label in given:
            raise FormatParseError('Weights', line_number, 'label {} repeated'.format(label))
        given[label] = weight

    loaded = load_edgelist(graph_source)
    labels = sorted(set(loaded.labels.tolist()) | set(given))
    index = {label: u for u, label in enumerate(labels)}
    edges = [(index[u], index[v]) for u, v in loaded.labels[loaded.edges()].tolist()]
    graph = Graph.from_edges(len(labels), edges, labels=labels)
    return WeightedGraph(graph, [given.get(label, 0) for label in labels])


def write_weights(wg, stream):
    for label, weight in zip(wg.graph.labels.tolist(), wg.weights):
        stream.write('{} {}\n'.format(label, weight))
