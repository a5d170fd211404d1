"""Expansion lower bounds for random regular graphs.

Four pieces: floating-point rate functions and root-found bounds
(``bounds``), exact big-rational first-moment machinery (``exact``), the
pairing-model sampler and exhaustive boundary scans (``pairing``), and the
pinned reference tables (``reference``).  The ``isobound`` console script
in ``cli`` fronts all of them.
"""

from .bounds import (
    SCAN_NEGATIVITY_LIMIT,
    BoundQuery,
    BracketError,
    DomainError,
    ExponentPoint,
    InvalidPointError,
    RootResult,
    ScanReport,
    binary_entropy,
    diameter_upper_bound,
    edge_asymptote,
    edge_bound,
    edge_bound_theorem_form,
    edge_exponent,
    edge_gap_coefficient,
    edge_negativity_scan,
    find_edge_profile_zero,
    find_edge_theorem_zero,
    find_half_occupancy_zero,
    find_profile_zero,
    max_exponent_unit_x,
    max_min_exponent,
    profile_exponent,
    profile_mode,
    profile_s,
    profile_x,
    solve_stationary_x,
    spectral_vertex_bound,
    stationary_s,
    vertex_bound,
    vertex_bound_half,
    vertex_exponent,
    vertex_half_asymptote,
    vertex_negativity_scan,
)
from .exact import (
    ExactExpectation,
    boundary_coefficient,
    boundary_coefficient_row,
    coefficient_asymptotics_check,
    coefficient_upper_bound_check,
    expected_edge_count,
    expected_vertex_count,
    exponent_convergence_check,
    log_fraction,
    matchings_count,
)
from .pairing import (
    BoundarySummary,
    CapExceededError,
    IsoperimetricResult,
    MonteCarloEstimate,
    Multigraph,
    Pairing,
    boundary_summary,
    count_subsets_with_signature,
    enumerate_pairings,
    is_connected,
    min_isoperimetric_exhaustive,
    monte_carlo_expectation,
    project,
    sample_pairing,
    sample_simple_pairing,
    signature_means_by_enumeration,
)
from .reference import load_reference, load_reference_path

__version__ = "0.1.0"
