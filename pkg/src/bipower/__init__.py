"""bipower: bipartite graph powers, exact hole search, and hole pullback."""

from .chordality import (
    chordality,
    chordality_oracle,
    exists_hole_longer_than,
    is_chordal_bipartite,
    is_k_chordal,
    largest_hole,
)
from .exceptions import (
    BagCollisionError,
    ClaimViolationError,
    EmptyBagError,
    EvenExponentError,
    GraphTooLargeError,
    HoleNotInducedError,
    HoleTooShortError,
    InvalidExponentError,
    NotBipartiteError,
    ParseError,
    PathTooLongError,
    UnreachableError,
)
from .expansion import BagExpansion, expand, preserves_k_chordality_check, project_hole
from .fuzz import FuzzReport, TrialConfig, format_report, mix_seed, run_property
from .generators import (
    gen_complete_bipartite,
    gen_even_cycle,
    gen_path,
    gen_random_bipartite,
    gen_random_graph,
    gen_random_tree,
)
from .graphs import (
    UNREACHABLE,
    Bipartition,
    Graph,
    bfs_distances,
    bipartition,
    distance_matrix,
    induced_subgraph,
    is_induced_cycle,
    shortest_path,
)
from .io import read_edge_list, write_dot, write_edge_list
from .powers import bipartite_power, graph_power
from .witness import (
    CLAIM_CHECK_NAMES,
    PathSystem,
    WitnessReport,
    before,
    build_path_system,
    clock_dist,
    edge_level,
    farthest_neighbor_before,
    find_cycle,
    max_edge_level,
    path_system_dot,
    pullback_hole,
    verify_claims,
)

__version__ = "0.1.0"
