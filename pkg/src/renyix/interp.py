"""Two-level interpolating distributions and their inversions.

The family ``Q_{k,l}(a) = a*Q_k + (1-a)*Q_l`` has ``k`` components equal to
``a/k + (1-a)/l`` and ``l-k`` components equal to ``(1-a)/l``. The arc
``Q_{1,N}`` traces the upper edge of the attainable (H_s, H_q) region and
the cascade ``Q_{k-1,k}`` the lower edge. Given a measured H2 or H3 the
routines here recover the mixing weight ``a`` on either edge.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    BadInterpError,
    MultipleRootsError,
    NoRootInUnitIntervalError,
    OutOfRangeError,
)
from .probvec import ProbVec, RenyiOrder

ARC_TIE_TOL = 1e-12
RANGE_TOL = 1e-12
CLAMP_TOL = 1e-9
SCAN_STEP = 1e-3

_SCAN = np.linspace(0.0, 1.0, int(round(1.0 / SCAN_STEP)) + 1)


@dataclass(frozen=True)
class InterpDist:
    k: int
    l: int
    a: float

    def __post_init__(self):
        if not (1 <= self.k < self.l):
            raise BadInterpError(f"need 1 <= k < l, got k={self.k}, l={self.l}")
        if not (-1e-12 <= self.a <= 1 + 1e-12):
            raise BadInterpError(f"a must lie in [0, 1], got {self.a!r}")
        object.__setattr__(self, "a", min(1.0, max(0.0, float(self.a))))

    @property
    def N(self) -> int:
        return self.l


def family_levels(k, l, a):
    """The two component values (high, low) of Q_{k,l}(a)."""
    return a / k + (1.0 - a) / l, (1.0 - a) / l


def interp_vector(d: InterpDist) -> ProbVec:
    hi, lo = family_levels(d.k, d.l, d.a)
    x = np.full(d.l, lo)
    x[: d.k] = hi
    return ProbVec(x)


def family_renyi(k, l, a, q) -> np.ndarray:
    """Vectorized H_q of Q_{k,l}(a); ``k``, ``l`` and ``a`` broadcast.

    Endpoints are exact: ``a == 0`` gives ``ln l`` and ``a == 1`` gives ``ln k``.
    """
    order = RenyiOrder.of(q)
    k, l, a = np.broadcast_arrays(*(np.asarray(v, dtype=np.float64) for v in (k, l, a)))
    hi, lo = family_levels(k, l, a)
    nlo = l - k
    pos = lo > 0
    safe_lo = np.where(pos, lo, 1.0)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        if order.kind == "zero":
            h = np.log(k + nlo * pos)
        elif order.kind == "infinity":
            h = -np.log(hi)
        else:
            lhi, llo = np.log(hi), np.log(safe_lo)
            if order.kind == "one":
                h = -(k * hi * lhi + np.where(pos, nlo * lo * llo, 0.0))
            else:
                qv = order.value
                if abs(qv - 1.0) < 0.25:
                    s = k * hi * np.expm1((qv - 1.0) * lhi)
                    s = s + np.where(pos, nlo * lo * np.expm1((qv - 1.0) * llo), 0.0)
                    h = np.log1p(s) / (1.0 - qv)
                else:
                    m = qv * lhi
                    rest = np.where(pos, nlo * np.exp(qv * (llo - lhi)), 0.0)
                    h = (m + np.log(k + rest)) / (1.0 - qv)
    h = np.where(a == 0.0, np.log(l), h)
    h = np.where(a == 1.0, np.log(k), h)
    return np.maximum(h, 0.0)


def family_renyi_scalar(k: int, l: int, a: float, q) -> float:
    """Scalar counterpart of :func:`family_renyi` using plain floats."""
    if a == 0.0:
        return math.log(l)
    if a == 1.0:
        return math.log(k)
    order = RenyiOrder.of(q)
    hi, lo = family_levels(k, l, a)
    nlo = l - k
    if order.kind == "zero":
        return math.log(k + (nlo if lo > 0 else 0))
    if order.kind == "infinity":
        return -math.log(hi)
    lhi = math.log(hi)
    llo = math.log(lo) if lo > 0 else 0.0
    if order.kind == "one":
        h = -(k * hi * lhi + (nlo * lo * llo if lo > 0 else 0.0))
    else:
        qv = order.value
        if abs(qv - 1.0) < 0.25:
            s = k * hi * math.expm1((qv - 1.0) * lhi)
            if lo > 0:
                s += nlo * lo * math.expm1((qv - 1.0) * llo)
            h = math.log1p(s) / (1.0 - qv)
        else:
            rest = nlo * math.exp(qv * (llo - lhi)) if lo > 0 else 0.0
            h = (qv * lhi + math.log(k + rest)) / (1.0 - qv)
    return max(0.0, h)


def interp_renyi(d: InterpDist, q) -> float:
    """H_q of the interpolating distribution from its two levels."""
    return family_renyi_scalar(d.k, d.l, d.a, q)


def select_arc(H_s: float, N: int) -> int:
    """Index k >= 2 of the lower arc Q_{k-1,k} with ln(k-1) <= H_s <= ln k.

    At a lattice value ``H_s == ln m`` the smaller index ``m`` is returned.
    """
    if H_s < -RANGE_TOL or H_s > math.log(N) + RANGE_TOL:
        raise OutOfRangeError(f"entropy {H_s!r} outside [0, ln {N}]")
    k = max(2, int(math.ceil(math.exp(max(H_s, 0.0)))))
    while k > 2 and H_s <= math.log(k - 1) + ARC_TIE_TOL:
        k -= 1
    while H_s > math.log(k) + ARC_TIE_TOL:
        k += 1
    return min(k, max(N, 2))


def _check_range(H: float, lo: float, hi: float, what: str) -> None:
    if not (lo - RANGE_TOL <= H <= hi + RANGE_TOL):
        raise OutOfRangeError(f"{what}={H!r} outside [{lo!r}, {hi!r}]")


def _sqrt_unit(a_sq: float) -> float:
    if a_sq < -CLAMP_TOL or a_sq > 1 + CLAMP_TOL:
        raise OutOfRangeError(f"mixing weight squared {a_sq!r} outside [0, 1]")
    return min(1.0, math.sqrt(max(0.0, a_sq)))


def invert_a_from_H2_top(H2: float, N: int) -> float:
    """Weight a of Q_{1,N}(a) whose order-2 entropy equals ``H2``."""
    _check_range(H2, 0.0, math.log(N), "H2")
    if N == 1:
        return 1.0
    # N*exp(-H2) - 1 written via expm1 so that H2 == ln N gives exactly 0
    return _sqrt_unit(math.expm1(math.log(N) - H2) / (N - 1))


def invert_a_from_H2_bottom(H2: float, k: int) -> float:
    """Weight a of Q_{k-1,k}(a) whose order-2 entropy equals ``H2``."""
    if k < 2:
        raise OutOfRangeError(f"arc index must be >= 2, got {k}")
    _check_range(H2, math.log(k - 1), math.log(k), "H2")
    return _sqrt_unit((k - 1) * math.expm1(math.log(k) - H2))


def invert_a_from_H3_top(H3: float, N: int) -> float:
    """Weight a of Q_{1,N}(a) whose order-3 entropy equals ``H3``.

    For N >= 3 this is the largest root in [0, 1] of
    ``a^3 + 3a^2/(N-2) - (N^2 exp(-2 H3) - 1)/((N-1)(N-2))``. The cubic is
    singular at N = 2, where the two-point closed form is used instead.
    """
    _check_range(H3, 0.0, math.log(N), "H3")
    if N == 1:
        return 1.0
    if N == 2:
        return _h3_two_point(H3)
    # rounding can put H3 a hair above ln N, which would remove the root at 0
    excess = math.expm1(2.0 * max(0.0, math.log(N) - H3))
    c2 = 3.0 / (N - 2)
    c0 = -excess / ((N - 1) * (N - 2))
    return solve_cubic_in_unit_interval(c2, 0.0, c0, "largest")


def _h3_two_point(H3: float) -> float:
    return _sqrt_unit(math.expm1(2.0 * (math.log(2.0) - H3)) / 3.0)


def invert_a_from_H3_bottom(H3: float, k: int) -> float:
    """Weight a of Q_{k-1,k}(a) whose order-3 entropy equals ``H3``."""
    if k < 2:
        raise OutOfRangeError(f"arc index must be >= 2, got {k}")
    _check_range(H3, math.log(k - 1), math.log(k), "H3")
    if k == 2:
        return _h3_two_point(H3)
    c2 = 3.0 * (k - 1) / (2 - k)
    c0 = ((k - 1) ** 2 / (2 - k)) * -math.expm1(2.0 * max(0.0, math.log(k) - H3))
    return solve_cubic_in_unit_interval(c2, 0.0, c0, "unique")


def _cubic(c2, c1, c0, x):
    return ((x + c2) * x + c1) * x + c0


def solve_cubic_in_unit_interval(c2: float, c1: float, c0: float,
                                 selector: str = "largest") -> float:
    """Root in [0, 1] of the monic cubic ``a^3 + c2 a^2 + c1 a + c0``.

    Roots are located by a sign scan at spacing ``1e-3`` and then polished
    by Newton steps safeguarded by the sign bracket. ``selector="largest"``
    returns the largest root; ``"unique"`` raises if more than one is found.
    Roots lying outside [0, 1] by at most ``1e-9`` are clamped onto it.
    """
    if selector not in ("largest", "unique"):
        raise ValueError(f"unknown selector {selector!r}")
    w = _cubic(c2, c1, c0, _SCAN)
    sgn = np.sign(w)
    exact = [(float(_SCAN[i]), float(_SCAN[i])) for i in np.flatnonzero(sgn == 0)]
    change = np.flatnonzero(sgn[:-1] * sgn[1:] < 0)
    brackets = exact + [(float(_SCAN[i]), float(_SCAN[i + 1])) for i in change]
    if not brackets:
        for lo, hi in ((-CLAMP_TOL, 0.0), (1.0, 1.0 + CLAMP_TOL)):
            if _cubic(c2, c1, c0, lo) * _cubic(c2, c1, c0, hi) <= 0:
                brackets.append((lo, hi))
    if not brackets:
        raise NoRootInUnitIntervalError(
            f"cubic a^3 + {c2!r} a^2 + {c1!r} a + {c0!r} has no root in [0, 1]")
    if selector == "unique" and len(brackets) > 1:
        raise MultipleRootsError(f"{len(brackets)} roots of the cubic in [0, 1]")
    lo, hi = max(brackets)
    root = lo if lo == hi else _polish(c2, c1, c0, lo, hi)
    return min(1.0, max(0.0, root))


def _polish(c2, c1, c0, lo, hi, max_iter=200):
    flo = _cubic(c2, c1, c0, lo)
    if flo == 0.0:
        return lo
    if _cubic(c2, c1, c0, hi) == 0.0:
        return hi
    neg, pos = (lo, hi) if flo < 0 else (hi, lo)
    x = 0.5 * (lo + hi)
    for _ in range(max_iter):
        f = _cubic(c2, c1, c0, x)
        if f == 0.0:
            return x
        if f < 0:
            neg = x
        else:
            pos = x
        if abs(pos - neg) <= 1e-14 and abs(f) <= 1e-13:
            return x
        df = (3.0 * x + 2.0 * c2) * x + c1
        step = f / df if df != 0.0 else math.inf
        xn = x - step
        left, right = min(neg, pos), max(neg, pos)
        if not (left < xn < right):
            xn = 0.5 * (left + right)
        elif abs(step) < 5e-15:
            # Newton has converged from one side; pin the other side.
            for probe in (xn - 5e-15, xn + 5e-15):
                fp = _cubic(c2, c1, c0, probe)
                if fp < 0:
                    neg = max(neg, probe) if neg < pos else min(neg, probe)
                elif fp > 0:
                    pos = min(pos, probe) if neg < pos else max(pos, probe)
            if abs(pos - neg) <= 1e-14:
                return xn
        if xn == x:
            return x
        x = xn
    return x
