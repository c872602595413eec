"""Exact analysis of infinite win-lose games through finite truncations."""

from .core import (
    FiniteGame,
    GameOracle,
    MixedStrategy,
    SetFamily,
    constant,
    diagonal,
    dualize,
    family_by_name,
    family_game,
    identity_matrix,
    initial_segments,
    lng,
    min_size_family,
    oracle_by_name,
    oracle_from_game,
    parity_initial_segments,
    pi_mix,
    reduced_col_truncation,
    reduced_truncation,
    staircase_matrix,
    subgame,
    tail_game,
    truncate,
    two_copies,
)
from .errors import (
    CoverFailure,
    DomainError,
    FoolingFailure,
    GapInfeasible,
    InfeasibleError,
    MinimaxLabError,
    ResourceLimitError,
    UnboundedError,
    UnsupportedCapabilityError,
)
from .solver import SolveResult, best_pure_response, solve, value, verify
from .structure import (
    Chain,
    StaircaseWitness,
    beaten_family,
    chain_to_staircase,
    dimensions,
    littlestone_dimension,
    longest_chain,
    row_col_profile,
    staircase_exact,
    staircase_greedy,
    threshold_dimension,
    vc_dimension,
)
from .truncation import (
    cover_columns,
    extract_violating_core,
    gap_report,
    value_grid,
)

__version__ = "0.1.0"
