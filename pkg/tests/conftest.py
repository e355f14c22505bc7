import math

import mpmath as mp
import numpy as np
import pytest

WORKED = (0.5, 0.25, 0.25)


def mp_renyi(x, q, dps=50):
    """High-precision oracle for H_q, straight from the defining sums."""
    with mp.workdps(dps):
        xs = [mp.mpf(float(v)) for v in x if v > 0]
        total = mp.fsum(xs)
        xs = [v / total for v in xs]
        if q == 0:
            return float(mp.log(len(xs)))
        if q == 1:
            return float(-mp.fsum(v * mp.log(v) for v in xs))
        if q == math.inf:
            return float(-mp.log(max(xs)))
        q = mp.mpf(q)
        return float(mp.log(mp.fsum(v ** q for v in xs)) / (1 - q))


def bisect_oracle(f, lo, hi, tol=1e-13, dps=40):
    """Plain sign bisection in extended precision."""
    with mp.workdps(dps):
        lo, hi = mp.mpf(lo), mp.mpf(hi)
        flo = f(lo)
        while hi - lo > tol:
            mid = (lo + hi) / 2
            fm = f(mid)
            if fm == 0:
                return float(mid)
            if (fm < 0) == (flo < 0):
                lo, flo = mid, fm
            else:
                hi = mid
        return float((lo + hi) / 2)


def fisher_rao(rng, N, count):
    g = rng.standard_normal((count, N)) ** 2
    return g / g.sum(axis=1, keepdims=True)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
