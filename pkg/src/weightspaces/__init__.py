"""Exact weight spaces of graphs.

``wcw_space`` computes WCW(G), the vertex weightings under which all maximal
independent sets of a claw-free graph weigh the same; ``evs_space`` computes
EVS(G), the edge weightings under which all maximal matchings weigh the same.
The ``oracle`` module recomputes both by exhaustive enumeration.
"""

from .evs import (
    SymDiffWitness, cycle_sym_diff_witness, evs_space, is_equimatchable, is_w_equimatchable,
    p4_paths_between, path_sym_diff_check,
)
from .graph import (
    Graph, GraphError, LineGraphMap, distance_layer, enumerate_c4, enumerate_p3, find_claw,
    is_maximal_independent, is_maximal_matching, line_graph, nonadjacent_pairs, parse_graph,
)
from .linalg import Restriction, WeightSpace, contains, nullspace, subspace_equal
from .matching import extend_to_maximal, max_weight_matching
from .mwis import max_weight_independent_set
from .oracle import HereditarySystem, maximal_feasible_sets, oracle_evs, oracle_wcw, whs_witness
from .wcw import (
    BipartiteCore, ClawError, GeneratingVerdict, compute_m1_m2, enumerate_bipartite_cores,
    is_generating, is_w_well_covered, is_well_covered, wcw_space,
)

__version__ = "0.1.0"
