"""Rigorous N-dependent bounds on Renyi/Shannon entropy from one known order.

Given H_s of an unknown N-point distribution, every attainable H_q lies
between the value on the cascade ``Q_{k-1,k}`` and the value on the arc
``Q_{1,N}`` carrying the same H_s. Closed forms are used for s = 2 and
s = 3 (the common case for Shannon entropy); any other pair of orders is
handled by monotone bisection along the two families.
"""

from __future__ import annotations

import math
import warnings
from functools import lru_cache
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .errors import (
    DominanceWarning,
    EqualOrdersError,
    OrderOutsideValidityError,
    OutOfRangeError,
)
from .interp import (
    family_renyi,
    family_renyi_scalar,
    invert_a_from_H2_bottom,
    invert_a_from_H2_top,
    invert_a_from_H3_bottom,
    invert_a_from_H3_top,
    select_arc,
)
from .probvec import RenyiOrder

NOISE_TOL = 1e-9
BISECT_ITER = 48


@dataclass(frozen=True)
class BoundResult:
    """A bound on an entropy value, in nats.

    ``rigor`` is ``"rigorous"`` for everything produced in this module;
    ``source`` names the construction that produced the number.
    """

    value: float
    side: str
    rigor: str
    source: str

    def __float__(self) -> float:
        return self.value


def _rigorous(value, side, source) -> BoundResult:
    return BoundResult(float(value), side, "rigorous", source)


def clamp_entropy(H: float, N: int, what: str = "H") -> float:
    """Snap measurement noise of at most ``1e-9`` back into [0, ln N]."""
    H = float(H)
    top = math.log(N)
    if H > top:
        if H - top > NOISE_TOL:
            raise OutOfRangeError(f"{what}={H!r} exceeds ln N = {top!r}")
        return top
    if H < 0:
        if H < -NOISE_TOL:
            raise OutOfRangeError(f"{what}={H!r} is negative")
        return 0.0
    return H


def monotonicity_bound(H_s: float, q: float, s: float) -> BoundResult:
    """Bound H_q by H_s using only that H_q is non-increasing in q."""
    q, s = RenyiOrder.of(q).value, RenyiOrder.of(s).value
    if q == s:
        raise EqualOrdersError("orders must differ")
    if s > q:
        return _rigorous(H_s, "lower", "monotonicity")
    return _rigorous(H_s, "upper", "monotonicity")


def ht_simple_upper(H2: float, N: int) -> BoundResult:
    """``H1 <= ln N + 1/N - exp(-H2)``; simple but loose."""
    H2 = clamp_entropy(H2, N, "H2")
    return _rigorous(math.log(N) + 1.0 / N - math.exp(-H2), "upper", "simple-H2-upper")


def _pair(lower, upper, tag):
    lower = min(float(lower), float(upper))
    return (_rigorous(lower, "lower", f"{tag}-lower-cascade"),
            _rigorous(upper, "upper", f"{tag}-top-arc"))


def _trivial(tag):
    return _pair(0.0, 0.0, tag)


def _closed_form_bounds(H, N, q, tag, top_inv, bottom_inv):
    if N == 1:
        return _trivial(tag)
    a_top = top_inv(H, N)
    k = select_arc(H, N)
    a_bot = bottom_inv(H, k)
    upper = family_renyi_scalar(1, N, a_top, q)
    lower = family_renyi_scalar(k - 1, k, a_bot, q)
    return _pair(lower, upper, tag)


@lru_cache(maxsize=8192)
def shannon_bounds_from_H2(H2: float, N: int) -> Tuple[BoundResult, BoundResult]:
    """(lower, upper) bounds on Shannon entropy given H2 and N."""
    H2 = clamp_entropy(H2, N, "H2")
    return _closed_form_bounds(H2, N, 1.0, "H2", invert_a_from_H2_top, invert_a_from_H2_bottom)


@lru_cache(maxsize=8192)
def shannon_bounds_from_H3(H3: float, N: int) -> Tuple[BoundResult, BoundResult]:
    """(lower, upper) bounds on Shannon entropy given H3 and N."""
    H3 = clamp_entropy(H3, N, "H3")
    return _closed_form_bounds(H3, N, 1.0, "H3", invert_a_from_H3_top, invert_a_from_H3_bottom)


def renyi_bounds_from_H2(H2: float, N: int, q: float) -> Tuple[BoundResult, BoundResult]:
    """(lower, upper) bounds on H_q for ``0 < q < 2`` given H2 and N."""
    if not (0 < q < 2):
        raise OrderOutsideValidityError(f"bounds from H2 hold for 0 < q < 2, got q={q!r}")
    H2 = clamp_entropy(H2, N, "H2")
    return _closed_form_bounds(H2, N, q, "H2", invert_a_from_H2_top, invert_a_from_H2_bottom)


def renyi_bounds_from_H3(H3: float, N: int, q: float) -> Tuple[BoundResult, BoundResult]:
    """(lower, upper) bounds on H_q for ``0 < q < 3`` given H3 and N."""
    if not (0 < q < 3):
        raise OrderOutsideValidityError(f"bounds from H3 hold for 0 < q < 3, got q={q!r}")
    H3 = clamp_entropy(H3, N, "H3")
    return _closed_form_bounds(H3, N, q, "H3", invert_a_from_H3_top, invert_a_from_H3_bottom)


def invert_family(k, l, target, s, iters: int = BISECT_ITER) -> np.ndarray:
    """Solve ``H_s(Q_{k,l}(a)) = target`` for a by bisection (vectorized).

    H_s is decreasing in a along every family, from ``ln l`` at a = 0 to
    ``ln k`` at a = 1.
    """
    k, l, target = np.broadcast_arrays(*(np.asarray(v, dtype=np.float64) for v in (k, l, target)))
    lo = np.zeros(target.shape)
    hi = np.ones(target.shape)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        above = family_renyi(k, l, mid, s) > target
        lo = np.where(above, mid, lo)
        hi = np.where(above, hi, mid)
    a = 0.5 * (lo + hi)
    a = np.where(target >= np.log(l), 0.0, a)
    a = np.where(target <= np.log(k), 1.0, a)
    return a


def family_bounds(H_s, s: float, q: float, N: int):
    """Vectorized (lower, upper) bounds on H_q from H_s via bisection.

    Returns two arrays. Used by :func:`ht_general_bounds` and the region
    tests of the entropy-plane figure.
    """
    s_val, q_val = RenyiOrder.of(s).value, RenyiOrder.of(q).value
    if s_val == q_val:
        raise EqualOrdersError("orders must differ")
    H_s = np.atleast_1d(np.asarray(H_s, dtype=np.float64))
    top = math.log(N)
    if np.any(H_s > top + NOISE_TOL) or np.any(H_s < -NOISE_TOL):
        raise OutOfRangeError(f"entropy outside [0, ln {N}]")
    H_s = np.clip(H_s, 0.0, top)
    if N == 1:
        z = np.zeros_like(H_s)
        return z, z.copy()
    k = np.array([select_arc(h, N) for h in H_s], dtype=np.float64)
    a_top = invert_family(1, N, H_s, s)
    a_bot = invert_family(k - 1, k, H_s, s)
    on_top = family_renyi(1, N, a_top, q)
    on_cascade = family_renyi(k - 1, k, a_bot, q)
    if q_val < s_val:
        return np.minimum(on_cascade, on_top), on_top
    return on_top, np.maximum(on_top, on_cascade)


def ht_general_bounds(H_s: float, s: float, q: float, N: int) -> Tuple[BoundResult, BoundResult]:
    """(lower, upper) bounds on H_q given H_s for arbitrary orders ``s != q``.

    For ``q < s`` the arc Q_{1,N} gives the upper bound and the cascade the
    lower one; for ``q > s`` the roles swap.
    """
    if RenyiOrder.of(s).value <= 0 or RenyiOrder.of(q).value <= 0:
        raise OutOfRangeError("orders must be positive")
    lower, upper = family_bounds([H_s], s, q, N)
    q_val, s_val = RenyiOrder.of(q).value, RenyiOrder.of(s).value
    tag = f"s={s_val:g}"
    if q_val < s_val:
        return (_rigorous(lower[0], "lower", f"{tag}-lower-cascade"),
                _rigorous(upper[0], "upper", f"{tag}-top-arc"))
    return (_rigorous(lower[0], "lower", f"{tag}-top-arc"),
            _rigorous(upper[0], "upper", f"{tag}-lower-cascade"))


def check_dominance(H2: float, H3: float, N: int, tol: float = 1e-9) -> bool:
    """Monitor whether the H2-based Shannon bounds are at least as tight as the H3 ones.

    This is expected but not proven; a failure emits :class:`DominanceWarning`
    instead of raising. Returns True when the ordering holds.
    """
    l2, u2 = shannon_bounds_from_H2(H2, N)
    l3, u3 = shannon_bounds_from_H3(H3, N)
    ok = u2.value <= u3.value + tol and l2.value >= l3.value - tol
    if not ok:
        warnings.warn(
            f"H3 bound tighter than H2 bound (N={N}, H2={H2!r}, H3={H3!r}): "
            f"upper {u2.value!r} vs {u3.value!r}, lower {l2.value!r} vs {l3.value!r}",
            DominanceWarning, stacklevel=2)
    return ok
