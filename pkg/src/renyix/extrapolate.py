"""Heuristic estimates of the Shannon entropy from H0, H2, H3 (and N).

None of these numbers is a bound. Linear inter/extrapolation in the order
q would be justified if H_q were convex in q, and it is not in general;
every :class:`Estimate` therefore carries ``rigor="heuristic"`` and there is
no way to construct one with any other flag.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import FrozenSet, Optional

from .bounds import shannon_bounds_from_H2, shannon_bounds_from_H3
from .entropy import entropy_triple
from .errors import DisorderedError

ORDER_TOL = 1e-12


@dataclass(frozen=True)
class Estimate:
    value: float
    source: str
    ingredients: FrozenSet[str]
    rigor: str = field(default="heuristic", init=False)

    def __float__(self) -> float:
        return self.value


def _est(value, source, *ingredients) -> Estimate:
    return Estimate(float(value), source, frozenset(ingredients))


def _ordered(*pairs):
    for (name_hi, hi), (name_lo, lo) in zip(pairs, pairs[1:]):
        if lo > hi + ORDER_TOL:
            raise DisorderedError(f"need {name_hi} >= {name_lo}, got {hi!r} < {lo!r}")


def upper_interp_H0_H2(H0: float, H2: float) -> Estimate:
    """Midpoint ``(H0 + H2)/2``.

    Subtracting H2 gives the matching structural-entropy figure, see
    :func:`structural_from_H0_H2`.
    """
    _ordered(("H0", H0), ("H2", H2))
    return _est(0.5 * (H0 + H2), "H0-H2-midpoint", "H0", "H2")


def structural_from_H0_H2(H0: float, H2: float) -> Estimate:
    """Structural-entropy counterpart ``(H0 - H2)/2`` of the H0/H2 midpoint."""
    return _est(upper_interp_H0_H2(H0, H2).value - H2, "H0-H2-structural", "H0", "H2")


def lower_extrap_H2_H3(H2: float, H3: float) -> Estimate:
    """Straight line through (2, H2) and (3, H3) evaluated at q = 1."""
    _ordered(("H2", H2), ("H3", H3))
    return _est(2.0 * H2 - H3, "H2-H3-line", "H2", "H3")


def estimate_023(H0: float, H2: float, H3: float) -> Estimate:
    """``(H0 + 5 H2 - 2 H3) / 4``, the mean of the two line estimates."""
    _ordered(("H0", H0), ("H2", H2), ("H3", H3))
    return _est((H0 + 5.0 * H2 - 2.0 * H3) / 4.0, "H0-H2-H3-mean", "H0", "H2", "H3")


def _uppers(H2, H3, N):
    return shannon_bounds_from_H2(H2, N)[1].value, shannon_bounds_from_H3(H3, N)[1].value


def _lowers(H2, H3, N):
    return shannon_bounds_from_H2(H2, N)[0].value, shannon_bounds_from_H3(H3, N)[0].value


def upper_extrap_Hup(H2: float, H3: float, N: int) -> Estimate:
    """Extrapolate the two top-arc upper bounds: ``2*U(H2) - U(H3)``."""
    _ordered(("H2", H2), ("H3", H3))
    u2, u3 = _uppers(H2, H3, N)
    return _est(2.0 * u2 - u3, "upper-bound-line", "H2", "H3", "N")


def lower_extrap_Hd(H2: float, H3: float, N: int) -> Estimate:
    """Extrapolate the two cascade lower bounds: ``2*L(H2) - L(H3)``.

    Can exceed the true Shannon entropy, even when both bounds use the
    same arc.
    """
    _ordered(("H2", H2), ("H3", H3))
    l2, l3 = _lowers(H2, H3, N)
    return _est(2.0 * l2 - l3, "lower-bound-line", "H2", "H3", "N")


def estimate_star_prime(H2: float, H3: float, N: int) -> Estimate:
    """``U(H2) + H2 - (U(H3) + H3)/2``, the mean of the two line estimates."""
    _ordered(("H2", H2), ("H3", H3))
    u2, u3 = _uppers(H2, H3, N)
    return _est(u2 + H2 - 0.5 * (u3 + H3), "mean-of-lines", "H2", "H3", "N")


def estimate_star(H2: float, H3: float, N: int, H0: Optional[float] = None) -> Estimate:
    """Combined estimate ``H_u/2 + max(2 H2 - H3, L(H2))/2``.

    ``H_u`` is the upper-bound line value, replaced by the minimum of that and
    the H0/H2 midpoint when ``H0`` is given. A tie in the max resolves to the
    H2/H3 line.
    """
    h_u = upper_extrap_Hup(H2, H3, N).value
    ingredients = ["H2", "H3", "N"]
    if H0 is not None:
        h_u = min(upper_interp_H0_H2(H0, H2).value, h_u)
        ingredients.append("H0")
    d23 = lower_extrap_H2_H3(H2, H3).value
    l2 = shannon_bounds_from_H2(H2, N)[0].value
    lower = d23 if d23 >= l2 else l2
    return _est(0.5 * h_u + 0.5 * lower, "combined", *ingredients)


def all_estimates(H2: float, H3: float, N: int, H0: Optional[float] = None) -> dict:
    """Every estimator this module offers, keyed by name."""
    out = {
        "H_d23": lower_extrap_H2_H3(H2, H3),
        "H_up": upper_extrap_Hup(H2, H3, N),
        "H_d": lower_extrap_Hd(H2, H3, N),
        "H_star_prime": estimate_star_prime(H2, H3, N),
        "H_star": estimate_star(H2, H3, N, H0),
    }
    if H0 is not None:
        out["H_u0"] = upper_interp_H0_H2(H0, H2)
        out["S_str_u0"] = structural_from_H0_H2(H0, H2)
        out["H_023"] = estimate_023(H0, H2, H3)
    return out


def estimates_for_vector(p, N: Optional[int] = None) -> dict:
    """Convenience wrapper: compute (H0, H2, H3) of ``p`` and run every estimator."""
    H0, H2, H3 = entropy_triple(p)
    n = len(p) if N is None else N
    return all_estimates(H2, H3, n, H0)
