"""Renyi entropies and N-dependent Shannon entropy bounds/extrapolations.

Given only the order-2 and order-3 Renyi entropies of an N-point
distribution, :mod:`renyix.bounds` gives rigorous lower and upper bounds on
its Shannon entropy and :mod:`renyix.extrapolate` gives heuristic point
estimates.
"""

from .bounds import (
    BoundResult,
    check_dominance,
    ht_general_bounds,
    ht_simple_upper,
    monotonicity_bound,
    renyi_bounds_from_H2,
    renyi_bounds_from_H3,
    shannon_bounds_from_H2,
    shannon_bounds_from_H3,
)
from .entropy import (
    PurityStats,
    entropy_triple,
    purity_stats,
    renyi,
    renyi_profile,
    shannon,
    structural_entropy,
    tsallis,
)
from .extrapolate import (
    Estimate,
    all_estimates,
    estimate_023,
    estimate_star,
    estimate_star_prime,
    lower_extrap_H2_H3,
    lower_extrap_Hd,
    upper_extrap_Hup,
    upper_interp_H0_H2,
)
from .interp import (
    InterpDist,
    interp_renyi,
    interp_vector,
    invert_a_from_H2_bottom,
    invert_a_from_H2_top,
    invert_a_from_H3_bottom,
    invert_a_from_H3_top,
    select_arc,
    solve_cubic_in_unit_interval,
)
from .probvec import ProbVec, RenyiOrder, flat_k, make_prob_vec
from .sampling import (
    DeviationStats,
    RngHandle,
    deviation_study,
    sample_fisher_rao,
    sample_fisher_rao_batch,
    star_outside_bounds_fraction,
)

__version__ = "0.1.0"

__all__ = [
    "all_estimates",
    "BoundResult",
    "check_dominance",
    "deviation_study",
    "DeviationStats",
    "entropy_triple",
    "Estimate",
    "estimate_023",
    "estimate_star",
    "estimate_star_prime",
    "flat_k",
    "ht_general_bounds",
    "ht_simple_upper",
    "interp_renyi",
    "interp_vector",
    "InterpDist",
    "invert_a_from_H2_bottom",
    "invert_a_from_H2_top",
    "invert_a_from_H3_bottom",
    "invert_a_from_H3_top",
    "lower_extrap_H2_H3",
    "lower_extrap_Hd",
    "make_prob_vec",
    "monotonicity_bound",
    "ProbVec",
    "purity_stats",
    "PurityStats",
    "renyi",
    "renyi_bounds_from_H2",
    "renyi_bounds_from_H3",
    "renyi_profile",
    "RenyiOrder",
    "RngHandle",
    "sample_fisher_rao",
    "sample_fisher_rao_batch",
    "select_arc",
    "shannon",
    "shannon_bounds_from_H2",
    "shannon_bounds_from_H3",
    "solve_cubic_in_unit_interval",
    "star_outside_bounds_fraction",
    "structural_entropy",
    "tsallis",
    "upper_extrap_Hup",
    "upper_interp_H0_H2",
]
