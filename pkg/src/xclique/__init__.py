"""Exhaustive small-graph laboratory for clique maxima under order,
circumference and minimum-degree constraints."""

from .graphs import (
    Graph,
    are_isomorphic,
    canonical_label,
    complement,
    complete,
    cycle,
    delete_edge,
    disjoint_union,
    empty,
    encode_graph6,
    join,
    min_degree,
    parse_graph6,
    path_graph,
)
from .invariants import (
    CliqueProfile,
    PathWitness,
    chvatal_hamiltonian,
    circumference,
    count_cliques,
    detour_order,
    dirac_lower_bound,
    is_graphical,
    is_hamiltonian,
    is_traceable,
    is_two_connected,
    kopylov_bound,
    path_witness,
)
from .extremal import (
    build_F,
    build_Fprime,
    build_G,
    build_Gprime,
    build_Gq,
    erdos_h,
    f_s,
    g_s,
    g_sq,
    h_s_bound,
    lambda_s,
    phi_piecewise,
    phi_s,
    psi,
)
from .disintegration import circumference_closure, core, core_with_seed
from .search import (
    SearchFilter,
    VerificationReport,
    all_classes,
    enumerate_graphs,
    ingest_graph6,
    max_cliques_over_class,
    verify_theorem,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
