from trilist.models.exceptions import GadgetInvalid
from .weighted import WeightedGraph


class LabeledGadget:
    """ A constructed graph whose vertices carry the role they play in the construction.

    Args:
        kind (str): The name of the construction, e.g. 'nae' or 'ld'.
        weighted (WeightedGraph): The graph and its vertex weights.
        roles (list): A distinct role name for every vertex, e.g. 'X_1' or 'K_0'.
        constants (dict): Values that come with the construction, such as the cost
            threshold an optimal ordering is compared against.

    Raises:
        GadgetInvalid: If the roles do not name every vertex exactly once.
    """
    def __init__(self, kind, weighted, roles, constants=None):
        if not isinstance(weighted, WeightedGraph):
            weighted = WeightedGraph(weighted)
        self.kind = kind
        self.weighted = weighted
        self.roles = tuple(roles)
        self.constants = dict(constants or {})

        if len(self.roles) != weighted.n:
            raise GadgetInvalid('Expected {} roles, got {}'.format(weighted.n, len(self.roles)))
        self._vertex = {role: u for u, role in enumerate(self.roles)}
        if len(self._vertex) != len(self.roles):
            raise GadgetInvalid('The roles of a gadget must be distinct')

    @property
    def graph(self):
        return self.weighted.graph

    @property
    def weights(self):
        return self.weighted.weights

    def vertex(self, role):
        """ Return the dense id of the vertex playing the given role.

        Raises:
            KeyError: If no vertex has this role.
        """
        return self._vertex[role]

    def vertices(self, family):
        """ Return the ids of the vertices whose role starts with family + '_'. """
        prefix = family + '_'
        return [u for u, role in enumerate(self.roles) if role.startswith(prefix)]

    def __getitem__(self, name):
        return self.constants[name]

    def __repr__(self):
        return '<LabeledGadget {} n={} m={} {}>'.format(
            self.kind, self.graph.n, self.graph.m, self.constants)
