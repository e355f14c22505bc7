"""Validated discrete probability vectors and entropy orders."""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Union

import numpy as np

from .errors import (
    BadKError,
    NegativeComponentError,
    NegativeOrderError,
    NotNormalizedError,
    ZeroSumError,
)

NORM_TOL = 1e-12
NEG_TOL = 1e-14
Q_ONE_EPS = 1e-9


class ProbVec:
    """Immutable N-point probability distribution.

    Components keep the order they were given in. The underlying array is
    read-only, so instances can be shared freely.
    """

    __slots__ = ("_x",)

    def __init__(self, components: np.ndarray):
        x = np.array(components, dtype=np.float64)
        x.setflags(write=False)
        object.__setattr__(self, "_x", x)

    def __setattr__(self, name, value):
        raise AttributeError("ProbVec is immutable")

    @property
    def components(self) -> np.ndarray:
        return self._x

    @property
    def N(self) -> int:
        return self._x.size

    def __len__(self) -> int:
        return self._x.size

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self._x
        return self._x.astype(dtype)

    def __iter__(self):
        return iter(self._x.tolist())

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProbVec):
            return NotImplemented
        return np.array_equal(self._x, other._x)

    def __hash__(self) -> int:
        return hash(self._x.tobytes())

    def __repr__(self) -> str:
        return f"ProbVec(N={self.N}, {np.array2string(self._x, precision=6)})"

    def to_json(self) -> str:
        """Serialize with 17 significant digits (exact float round-trip)."""
        return "[" + ", ".join(f"{v:.17g}" for v in self._x) + "]"


def make_prob_vec(values: Iterable[float], normalize_mode: str = "strict") -> ProbVec:
    """Build a :class:`ProbVec` from raw numbers.

    Parameters
    ----------
    values : iterable of float
        Candidate probabilities.
    normalize_mode : {"strict", "renormalize"}
        ``strict`` requires the entries to sum to one within ``NORM_TOL``.
        ``renormalize`` clamps entries in ``[-NEG_TOL, 0)`` to zero and
        divides by the sum.

    Raises
    ------
    NegativeComponentError
        An entry is below ``-NEG_TOL``.
    NotNormalizedError
        Strict mode and the sum is off by more than ``NORM_TOL``.
    ZeroSumError
        Renormalize mode and the sum is not positive.
    """
    x = np.asarray(list(values) if not isinstance(values, np.ndarray) else values,
                   dtype=np.float64).ravel()
    if x.size == 0:
        raise NotNormalizedError("probability vector must be nonempty")
    if not np.all(np.isfinite(x)):
        raise NotNormalizedError("probability vector has non-finite entries")
    if np.any(x < -NEG_TOL):
        i = int(np.argmin(x))
        raise NegativeComponentError(f"component {i} is negative: {x[i]!r}")
    if normalize_mode == "strict":
        if np.any(x < 0):
            i = int(np.argmin(x))
            raise NegativeComponentError(f"component {i} is negative: {x[i]!r}")
        total = math.fsum(x)
        if abs(total - 1.0) > NORM_TOL:
            raise NotNormalizedError(f"components sum to {total!r}, not 1")
        return ProbVec(x)
    if normalize_mode == "renormalize":
        x = np.where(x < 0, 0.0, x)
        total = math.fsum(x)
        if total <= 0:
            raise ZeroSumError("components sum to zero")
        return ProbVec(x / total)
    raise ValueError(f"unknown normalize_mode {normalize_mode!r}")


def flat_k(k: int, N: int) -> ProbVec:
    """The flat distribution Q_k = (1/k, ..., 1/k, 0, ..., 0) of length N."""
    if not (1 <= k <= N):
        raise BadKError(f"need 1 <= k <= N, got k={k}, N={N}")
    x = np.zeros(N)
    x[:k] = 1.0 / k
    return ProbVec(x)


def load_prob_vec(path: Union[str, Path], normalize_mode: str = "strict") -> ProbVec:
    """Read a vector from a JSON array or a whitespace/comma separated text file."""
    text = Path(path).read_text()
    return parse_prob_vec(text, normalize_mode)


def parse_prob_vec(text: str, normalize_mode: str = "strict") -> ProbVec:
    stripped = text.strip()
    if stripped.startswith("["):
        values = json.loads(stripped)
    else:
        values = [float(tok) for tok in re.split(r"[\s,]+", stripped) if tok]
    return make_prob_vec(values, normalize_mode)


@dataclass(frozen=True)
class RenyiOrder:
    """Entropy order q with an exact tag for 0, 1 (Shannon) and infinity."""

    value: float
    kind: str

    @classmethod
    def of(cls, q: Union[float, "RenyiOrder"]) -> "RenyiOrder":
        if isinstance(q, RenyiOrder):
            return q
        q = float(q)
        if math.isnan(q) or q < 0:
            raise NegativeOrderError(f"order must be >= 0, got {q!r}")
        if math.isinf(q):
            return cls(math.inf, "infinity")
        if q == 0:
            return cls(0.0, "zero")
        if abs(q - 1.0) <= Q_ONE_EPS:
            return cls(q, "one")
        return cls(q, "general")

    def __float__(self) -> float:
        return self.value


INF = RenyiOrder(math.inf, "infinity")
SHANNON = RenyiOrder(1.0, "one")
