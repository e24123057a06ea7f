"""Exact toolkit for cooperative games with externalities: cores,
fractional cores, balanced firm sets, and the topology of induced covers."""

from .balance import (
    BalancedFamily,
    balanced_subsets,
    balancing_weights,
    convex_balancing_weights,
    convexify,
    minimal_balanced_families,
    same_balanced_subsets,
)
from .exact_linear import LinearSystem, maximize, solve_feasibility
from .frac_core import (
    FractionalCoreWitness,
    core_solve,
    embed_coalitional,
    fractional_core_solve,
    is_balanced_game,
    verify_fractional_core_point,
)
from .game_model import (
    CoalitionalNTUGame,
    ComprehensiveSet,
    FirmSystem,
    GeneralizedGame,
    HalfSpace,
    Primitive,
    TUGame,
    coalition_cylinder,
    comprehensive_hull,
    contains,
    in_induced_cover,
    point_orthant,
    tau,
    validate_game,
)
from .tu_solver import check_core_point, core_nonempty, is_balanced_tu

__version__ = "0.1.0"

__all__ = [
    "BalancedFamily",
    "CoalitionalNTUGame",
    "ComprehensiveSet",
    "FirmSystem",
    "FractionalCoreWitness",
    "GeneralizedGame",
    "HalfSpace",
    "LinearSystem",
    "Primitive",
    "TUGame",
    "balanced_subsets",
    "balancing_weights",
    "check_core_point",
    "coalition_cylinder",
    "comprehensive_hull",
    "contains",
    "convex_balancing_weights",
    "convexify",
    "core_nonempty",
    "core_solve",
    "embed_coalitional",
    "fractional_core_solve",
    "in_induced_cover",
    "is_balanced_game",
    "is_balanced_tu",
    "maximize",
    "minimal_balanced_families",
    "point_orthant",
    "same_balanced_subsets",
    "solve_feasibility",
    "tau",
    "validate_game",
    "verify_fractional_core_point",
]
