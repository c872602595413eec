from .density import DensityReport, density_report
from .hypergraph import (
    FractionalSolution,
    Hypergraph,
    cover_to_strategy,
    game_of_hypergraph,
    nu_star,
    separation_witness,
    strategy_to_cover,
    tail_hypergraph,
    tau_star,
    triangle,
)
from .series import (
    EnforcingSolution,
    Series,
    Violation,
    blend,
    check_premise,
    enforcing_constant_lower,
    enforcing_solution,
    fooling_series,
    harmonic,
    zero,
)
