"""Fisher-Rao random probability vectors and Monte Carlo error studies."""

from __future__ import annotations

import io
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .bounds import shannon_bounds_from_H2, shannon_bounds_from_H3
from .entropy import renyi_rows
from .errors import BadBinsError
from .extrapolate import estimate_star, lower_extrap_H2_H3, lower_extrap_Hd
from .probvec import ProbVec

BLOCK_SIZE = 1024


@dataclass(frozen=True)
class RngHandle:
    """Seed plus a named generator; the sample stream depends on nothing else.

    Sample ``i`` of a batch is drawn from substream ``i // BLOCK_SIZE``, which
    is derived from ``(seed, block)`` alone. Results are therefore
    independent of how the blocks are distributed over threads.
    """

    seed: int
    algorithm: str = "PCG64"
    version: int = 1

    def __post_init__(self):
        if not (0 <= int(self.seed) < 2**64):
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")
        if self.algorithm != "PCG64" or self.version != 1:
            raise ValueError(f"unsupported generator {self.algorithm} v{self.version}")

    def generator(self, block: int = 0) -> np.random.Generator:
        ss = np.random.SeedSequence(int(self.seed), spawn_key=(int(block),))
        return np.random.Generator(np.random.PCG64(ss))


def _num_threads() -> int:
    try:
        return max(1, int(os.environ.get("ENTROPY_NUM_THREADS", "1")))
    except ValueError:
        return 1


def _sphere_squares(gen: np.random.Generator, count: int, N: int) -> np.ndarray:
    g = gen.standard_normal((count, N))
    g *= g
    return g / g.sum(axis=1, keepdims=True)


def sample_fisher_rao(N: int, rng: Union[RngHandle, np.random.Generator]) -> ProbVec:
    """One vector ``x_i = t_i**2`` with ``t`` uniform on the unit sphere in R^N.

    ``t`` is a normalized vector of independent standard normals. Passing an
    :class:`RngHandle` always returns the first sample of its stream; pass a
    ``numpy.random.Generator`` to draw successive samples.
    """
    gen = rng.generator(0) if isinstance(rng, RngHandle) else rng
    return ProbVec(_sphere_squares(gen, 1, N)[0])


def sample_fisher_rao_batch(N: int, count: int, rng: RngHandle) -> np.ndarray:
    """``count`` Fisher-Rao vectors as rows of an array, reproducible from the seed."""
    nblocks = -(-count // BLOCK_SIZE)

    def block(b):
        n = min(BLOCK_SIZE, count - b * BLOCK_SIZE)
        return _sphere_squares(rng.generator(b), n, N)

    threads = min(_num_threads(), max(nblocks, 1))
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            parts = list(pool.map(block, range(nblocks)))
    else:
        parts = [block(b) for b in range(nblocks)]
    if not parts:
        return np.empty((0, N))
    return np.concatenate(parts, axis=0)


@dataclass(frozen=True)
class ChannelStats:
    counts: np.ndarray
    density: np.ndarray
    mean: float
    std: float
    mean_abs: float


@dataclass(frozen=True)
class DeviationStats:
    """Histograms of estimator errors over a random sample.

    ``delta1`` is the combined estimate minus the true Shannon entropy,
    ``delta2`` the H2/H3 straight-line value minus it. ``delta_hd``
    (optional) uses the extrapolated cascade lower bounds instead.
    Densities integrate to one over ``bin_edges``.
    """

    N: int
    sample_count: int
    bin_edges: np.ndarray
    delta1: ChannelStats
    delta2: ChannelStats
    delta_hd: Optional[ChannelStats] = None

    def channels(self):
        out = {"delta1": self.delta1, "delta2": self.delta2}
        if self.delta_hd is not None:
            out["delta_hd"] = self.delta_hd
        return out

    def to_csv(self) -> str:
        names = list(self.channels())
        buf = io.StringIO()
        buf.write(",".join(["bin_left", "bin_right"] + [f"density_{n}" for n in names]) + "\n")
        chans = list(self.channels().values())
        for i in range(len(self.bin_edges) - 1):
            row = [self.bin_edges[i], self.bin_edges[i + 1]] + [c.density[i] for c in chans]
            buf.write(",".join(f"{v:.12g}" for v in row) + "\n")
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {
            "kind": "deviation_study",
            "N": self.N,
            "sample_count": self.sample_count,
            "bin_edges": [float(v) for v in self.bin_edges],
            "channels": {
                name: {
                    "counts": [int(v) for v in c.counts],
                    "density": [float(v) for v in c.density],
                    "mean": c.mean,
                    "std": c.std,
                    "mean_abs": c.mean_abs,
                }
                for name, c in self.channels().items()
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)


def _channel(values, edges, count) -> ChannelStats:
    counts, _ = np.histogram(values, bins=edges)
    density = counts / (count * np.diff(edges))
    return ChannelStats(counts, density, float(np.mean(values)), float(np.std(values)),
                        float(np.mean(np.abs(values))))


def estimator_errors(X: np.ndarray, N: int):
    """Per-row (delta1, delta2, delta_hd) for a stack of probability vectors."""
    H1 = renyi_rows(X, 1.0)
    H2 = renyi_rows(X, 2.0)
    H3 = renyi_rows(X, 3.0)
    d1 = np.empty(len(X))
    d2 = np.empty(len(X))
    dh = np.empty(len(X))
    for i, (h2, h3) in enumerate(zip(H2.tolist(), H3.tolist())):
        d1[i] = estimate_star(h2, h3, N).value
        d2[i] = lower_extrap_H2_H3(h2, h3).value
        dh[i] = lower_extrap_Hd(h2, h3, N).value
    return d1 - H1, d2 - H1, dh - H1


def deviation_study(N: int, count: int, rng: RngHandle, bins: int = 60,
                    include_hd: bool = False) -> DeviationStats:
    """Histogram the errors of the combined and line estimates on random vectors.

    Bins are shared by all channels and span the symmetric range
    ``[-max|delta|, max|delta|]``.
    """
    if bins < 2:
        raise BadBinsError(f"need at least 2 bins, got {bins}")
    if count < 1:
        raise BadBinsError(f"need at least one sample, got {count}")
    X = sample_fisher_rao_batch(N, count, rng)
    d1, d2, dh = estimator_errors(X, N)
    used = [d1, d2] + ([dh] if include_hd else [])
    span = max(float(np.max(np.abs(d))) for d in used)
    if span == 0.0:
        span = 1e-12
    edges = np.linspace(-span, span, bins + 1)
    return DeviationStats(
        N=N,
        sample_count=count,
        bin_edges=edges,
        delta1=_channel(d1, edges, count),
        delta2=_channel(d2, edges, count),
        delta_hd=_channel(dh, edges, count) if include_hd else None,
    )


def star_outside_bounds_fraction(X: np.ndarray, N: int) -> float:
    """Fraction of rows whose combined estimate leaves [H3 lower bound, H2 upper bound].

    The combined estimate is not guaranteed to respect the rigorous bounds;
    this is a monitoring statistic, not a check.
    """
    if len(X) == 0:
        return 0.0
    H2 = renyi_rows(X, 2.0)
    H3 = renyi_rows(X, 3.0)
    outside = 0
    for h2, h3 in zip(H2.tolist(), H3.tolist()):
        star = estimate_star(h2, h3, N).value
        lo = shannon_bounds_from_H3(h3, N)[0].value
        hi = shannon_bounds_from_H2(h2, N)[1].value
        outside += not (lo - 1e-12 <= star <= hi + 1e-12)
    return outside / len(X)
