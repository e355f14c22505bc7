"""Entropy functionals of a known probability vector.

All values are in nats. Functions accept a :class:`~renyix.probvec.ProbVec`
or anything array-like (validated strictly on the way in).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

import numpy as np

from .errors import UnsortedGridError
from .probvec import ProbVec, RenyiOrder, make_prob_vec

OrderLike = Union[float, RenyiOrder]

# Below this distance from q = 1 the sum of powers is formed as
# 1 + sum x*expm1((q-1) ln x) to keep the 1/(1-q) prefactor accurate.
_NEAR_ONE = 0.25


def _components(p) -> np.ndarray:
    if isinstance(p, ProbVec):
        return p.components
    return make_prob_vec(p).components


def renyi_levels(levels, weights, q: OrderLike, support_eps: float = 0.0) -> float:
    """Renyi entropy of a distribution given as distinct levels with multiplicities.

    ``levels[i]`` occurs ``weights[i]`` times. The levels are renormalized so
    that ``sum(weights * levels) == 1`` before evaluation.
    """
    order = RenyiOrder.of(q)
    x = np.asarray(levels, dtype=np.float64)
    w = np.asarray(weights, dtype=np.float64)
    if order.kind == "zero":
        return math.log(float(w[x > support_eps].sum()))
    keep = x > 0
    x, w = x[keep], w[keep]
    total = float(np.dot(w, x))
    x = x / total
    if order.kind == "infinity":
        return -math.log(float(x.max()))
    lx = np.log(x)
    if order.kind == "one":
        return max(0.0, -float(np.dot(w * x, lx)))
    qv = order.value
    if abs(qv - 1.0) < _NEAR_ONE:
        excess = float(np.dot(w * x, np.expm1((qv - 1.0) * lx)))
        h = math.log1p(excess) / (1.0 - qv)
    else:
        t = qv * lx
        m = float(t.max())
        h = (m + math.log(float(np.dot(w, np.exp(t - m))))) / (1.0 - qv)
    return max(0.0, h)


def shannon(p) -> float:
    """Shannon entropy ``-sum x ln x`` with ``0 ln 0 = 0``."""
    x = _components(p)
    return renyi_levels(x, np.ones_like(x), 1.0)


def renyi(p, q: OrderLike, support_eps: float = 0.0) -> float:
    """Renyi entropy of order ``q``.

    Parameters
    ----------
    p : ProbVec or array-like
    q : float or RenyiOrder
        Order in ``[0, inf]``. Orders within ``1e-9`` of one use the Shannon
        formula; ``q = 0`` counts components above ``support_eps``;
        ``q = inf`` gives ``-ln max x``.
    support_eps : float
        Positivity threshold for ``q = 0`` only.
    """
    x = _components(p)
    return renyi_levels(x, np.ones_like(x), q, support_eps=support_eps)


def renyi_rows(X: np.ndarray, q: OrderLike) -> np.ndarray:
    """Row-wise Renyi entropies of a stack of probability vectors."""
    order = RenyiOrder.of(q)
    X = np.asarray(X, dtype=np.float64)
    X = X / X.sum(axis=1, keepdims=True)
    if order.kind == "zero":
        return np.log(np.count_nonzero(X > 0, axis=1).astype(float))
    if order.kind == "infinity":
        return -np.log(X.max(axis=1))
    with np.errstate(divide="ignore", invalid="ignore"):
        lx = np.where(X > 0, np.log(np.where(X > 0, X, 1.0)), -np.inf)
        if order.kind == "one":
            h = -np.sum(np.where(X > 0, X * lx, 0.0), axis=1)
        else:
            qv = order.value
            if abs(qv - 1.0) < _NEAR_ONE:
                terms = np.where(X > 0, X * np.expm1((qv - 1.0) * np.where(X > 0, lx, 0.0)), 0.0)
                h = np.log1p(terms.sum(axis=1)) / (1.0 - qv)
            else:
                t = qv * lx
                m = t.max(axis=1, keepdims=True)
                s = np.sum(np.where(X > 0, np.exp(t - m), 0.0), axis=1)
                h = (m[:, 0] + np.log(s)) / (1.0 - qv)
    return np.maximum(h, 0.0)


@dataclass(frozen=True)
class PurityStats:
    """Purity-family summaries of a distribution.

    ``coincidence_index`` is ``sum x**2`` (also called purity),
    ``participation_ratio`` its inverse, ``linear_entropy`` is ``1 - r``.
    """

    coincidence_index: float
    participation_ratio: float
    linear_entropy: float


def purity_stats(p) -> PurityStats:
    x = _components(p)
    r = float(np.dot(x, x))
    return PurityStats(r, 1.0 / r, 1.0 - r)


def structural_entropy(p) -> float:
    """Difference H1 - H2; non-negative up to rounding."""
    return shannon(p) - renyi(p, 2.0)


def tsallis(p, q: OrderLike) -> float:
    """Havrda-Charvat/Tsallis entropy ``(sum x**q - 1) / (1 - q)``.

    At ``q = 1`` this is the Shannon entropy; at ``q = 2`` it equals the
    linear entropy.
    """
    order = RenyiOrder.of(q)
    x = _components(p)
    if order.kind == "one":
        return shannon(x)
    if order.kind == "infinity":
        return 0.0
    if order.kind == "zero":
        return float(np.count_nonzero(x)) - 1.0
    qv = order.value
    xp = x[x > 0]
    return float((np.sum(xp ** qv) - 1.0) / (1.0 - qv))


def renyi_profile(p, q_grid: Sequence[OrderLike]) -> List[Tuple[float, float]]:
    """Renyi entropies over a strictly increasing grid of orders."""
    orders = [RenyiOrder.of(q) for q in q_grid]
    values = [o.value for o in orders]
    if any(b <= a for a, b in zip(values, values[1:])):
        raise UnsortedGridError("q_grid must be strictly increasing")
    x = _components(p)
    w = np.ones_like(x)
    return [(o.value, renyi_levels(x, w, o)) for o in orders]


def entropy_triple(p) -> Tuple[float, float, float]:
    """(H0, H2, H3) of a vector; the inputs consumed by the extrapolators."""
    x = _components(p)
    w = np.ones_like(x)
    return renyi_levels(x, w, 0.0), renyi_levels(x, w, 2.0), renyi_levels(x, w, 3.0)
