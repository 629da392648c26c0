"""Identifying, separating, dominating and locating-dominating codes in
finite graphs: verification at any radius, exact brute-force minimization,
generators and structural classification of the extremal families, and
constructive degree-based upper bounds."""

from .bound import (
    BoundReport,
    ball_size_limit,
    code_from_independent_set,
    conjecture_scan,
    constructive_upper_bound,
    greedy_independent_set,
    regular_constructive_bound,
    removable_vertex_in_ball,
)
from .classify import ClassificationResult, classify_extremal, recognize_band_graph
from .codes import (
    BipartiteMembershipGraph,
    CodeCertificate,
    check_code,
    is_discriminating,
    is_dominating,
    is_identifying,
    is_locating_dominating,
    is_separating,
    membership_graph,
    separates,
)
from .families import (
    FamilySpec,
    band5_square_root,
    band_graph,
    complete_minus_matching,
    join_family,
    join_family_plus_universal,
    make_family,
    parse_family_spec,
    star_graph,
)
from .graph import (
    Graph,
    PreconditionError,
    TwinsError,
    ball_symmetric_difference,
    canonical_form,
    closed_ball,
    complement,
    delete_vertex,
    distances_from,
    enumerate_graphs,
    find_isomorphism,
    format_edge_list,
    induced_subgraph,
    is_connected,
    is_isomorphic,
    is_twin_free,
    join,
    parse_edge_list,
    power,
    twin_pairs,
)
from .solve import (
    SolveReport,
    enumerate_minimum_separating_sets,
    extend_code,
    forced_vertices,
    min_dominating,
    min_identifying_code,
    min_locating_dominating,
    min_separating_set,
    solve_minimum,
)

__version__ = "0.1.0"
