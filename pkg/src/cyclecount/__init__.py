"""Cycle counting in cubic hamiltonian graphs represented as a hamiltonian
cycle plus a chord perfect matching, with an exhaustive extremal search
over the whole class."""

from .cycle_engine import (
    BirPartition,
    CountLedger,
    alpha_even_odd,
    bir,
    closed_form_alpha,
    closed_form_c,
    count_cycles,
    count_cycles_bir,
    count_cycles_through_edge,
    count_ledger,
    cycles_from_subset,
    fibonacci,
)
from .extremal_search import (
    SearchReport,
    enumerate_class,
    find_extremal,
    iter_matchings,
    table1,
    verify_conjecture,
)
from .graph_core import (
    CapExceeded,
    ChordedCycleGraph,
    GraphError,
    SimpleGraph,
    SuppressionError,
    are_isomorphic,
    build_chorded,
    canonical_form,
    delete_and_suppress,
    graph6_decode,
    graph6_encode,
    is_cycle_edge_set,
    is_three_connected,
    random_chorded,
    simple_graph,
    to_simple,
)
from .h2n_family import H2nGraph, construct_h2n, intersection_graph, verify_reduction
from .oracle import (
    AhrensBoundViolation,
    CycleList,
    count_all_cycles,
    count_cycles_through_edge_brute,
    cyclomatic_number,
    enumerate_all_cycles,
)
from .spoke_analysis import (
    ClaimVerdict,
    SparseSpokeSet,
    arc_characterization,
    check_claim_3_1,
    check_claim_3_2,
    consecutive_in_set,
    count_below_theorem3_bound,
    find_sparse_spoke_set,
    spokes_intersect,
    theorem3_bound,
    theorem3_bound_exact,
)

__version__ = "0.1.0"
