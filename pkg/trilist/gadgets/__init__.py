from .weighted import (WeightedGraph, CostMultiset, weighted_cost, elimination_costs,
                       multiset_costs)
from .labeled import LabeledGadget
from .nae import nae_graph, nae_witness_order, nae_assignment_from_order
from .ld import ld_gadget, ld_reference_cost, ld_reference_order, ld_unit_weight_cost
from .setcover import setcover_graph, setcover_witness_order, admissible_d
from .reduction import weighted_to_weightless, weighted_to_weightless_gadget, join_by_edge
from .emit import write_gadget, read_gadget, read_weighted, write_weights
from .verify import (Verdict, verify_nae, verify_ld, verify_setcover, verify_weight2plain,
                     verify_linear_cost)


__all__ = [
    'WeightedGraph', 'CostMultiset', 'weighted_cost', 'elimination_costs', 'multiset_costs',
    'LabeledGadget',
    'nae_graph', 'nae_witness_order', 'nae_assignment_from_order',
    'ld_gadget', 'ld_reference_cost', 'ld_reference_order', 'ld_unit_weight_cost',
    'setcover_graph', 'setcover_witness_order', 'admissible_d',
    'weighted_to_weightless', 'weighted_to_weightless_gadget', 'join_by_edge',
    'write_gadget', 'read_gadget', 'read_weighted', 'write_weights',
    'Verdict', 'verify_nae', 'verify_ld', 'verify_setcover', 'verify_weight2plain',
    'verify_linear_cost',
]
