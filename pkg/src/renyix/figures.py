"""Machine-readable datasets for the four standard plots.

1. Iso-entropy contours of H_q on the N = 3 simplex.
2. The attainable region in the (H_s, H_q) plane and its boundary arcs.
3. A Renyi profile H_q of one vector with the H2/H3 bound curves and the
   straight-line extrapolations.
4. Histograms of estimator errors (see :mod:`renyix.sampling`).

Each dataset renders to CSV text and to a JSON document that validates
against the schema shipped in ``renyix/schemas``.
"""

from __future__ import annotations

import io
import json
import math
from dataclasses import dataclass
from importlib import resources
from typing import Dict, List, Optional, Sequence

import numpy as np
from skimage import measure

from .bounds import family_bounds, shannon_bounds_from_H2, shannon_bounds_from_H3
from .entropy import renyi_levels, renyi_rows
from .errors import DegenerateOrdersError, LevelOutOfRangeError, OutOfRangeError
from .extrapolate import estimate_star, lower_extrap_H2_H3, upper_extrap_Hup
from .interp import family_renyi, invert_a_from_H2_bottom, invert_a_from_H2_top, \
    invert_a_from_H3_bottom, invert_a_from_H3_top, select_arc
from .probvec import ProbVec, RenyiOrder
from .sampling import RngHandle, deviation_study, sample_fisher_rao

FIG1_GRID = 512
FIG3_N = 15
FIG3_SEED = 20050217
FIG3_Q_GRID = tuple(np.round(np.arange(0, 161) * 0.05, 10))
CSV_DIGITS = 12


def _fmt(v) -> str:
    return f"{v:.{CSV_DIGITS}g}"


@dataclass(frozen=True)
class Polyline:
    points: np.ndarray
    label: str

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=np.float64).reshape(-1, 2)
        if len(pts) < 2:
            raise ValueError("a polyline needs at least two points")
        if not np.all(np.isfinite(pts)):
            raise ValueError("polyline coordinates must be finite")
        object.__setattr__(self, "points", pts)

    def to_dict(self) -> dict:
        return {"label": self.label, "points": self.points.tolist()}


# -- iso-entropy contours -------------------------------------------------

def simplex_grid(grid: int):
    """Sample H_q on the triangle x1 + x2 <= 1 (x3 = 1 - x1 - x2)."""
    t = np.linspace(0.0, 1.0, grid)
    x1, x2 = np.meshgrid(t, t, indexing="ij")
    x3 = 1.0 - x1 - x2
    inside = x3 >= -1e-12
    x3 = np.clip(x3, 0.0, None)
    return x1, x2, x3, inside


def iso_entropy_contours(q, levels: Sequence[float], grid: int = FIG1_GRID) -> List[Polyline]:
    """Level sets of H_q over the N = 3 simplex, in (x1, x2) coordinates.

    Contours come from marching squares on a ``grid x grid`` sampling of the
    unit square, masked to the triangle.
    """
    if grid < 32:
        raise ValueError(f"grid must be at least 32, got {grid}")
    top = math.log(3.0)
    for lv in levels:
        if not (0.0 < lv < top):
            raise LevelOutOfRangeError(f"level {lv!r} outside (0, ln 3)")
    x1, x2, x3, inside = simplex_grid(grid)
    X = np.stack([x1[inside], x2[inside], x3[inside]], axis=1)
    H = np.full(x1.shape, -1.0)
    H[inside] = renyi_rows(X, q)
    step = 1.0 / (grid - 1)
    out = []
    for lv in levels:
        for j, c in enumerate(measure.find_contours(H, lv, mask=inside)):
            if len(c) < 2:
                continue
            out.append(Polyline(c * step, f"level={lv:.12g}#{j}"))
    return out


# -- entropy plane ----------------------------------------------------------

@dataclass(frozen=True)
class PlaneBoundary:
    """Boundary of the attainable (H_s, H_q) region for N-point vectors.

    Points are ``(H_s, H_q)``. :meth:`contains` tests membership against
    the exact arcs, not against the sampled polylines.
    """

    q: float
    s: float
    N: int
    upper_arc: Polyline
    lower_cascade: List[Polyline]
    lattice_points: np.ndarray
    monotonicity_line: Polyline
    simple_upper: Optional[Polyline] = None

    def contains(self, hs, hq, tol: float = 1e-9) -> np.ndarray:
        lower, upper = family_bounds(hs, self.s, self.q, self.N)
        hq = np.atleast_1d(np.asarray(hq, dtype=np.float64))
        return (hq >= lower - tol) & (hq <= upper + tol)

    def curves(self) -> Dict[str, Polyline]:
        out = {"upper_arc": self.upper_arc}
        for i, arc in enumerate(self.lower_cascade, start=1):
            out[f"cascade_{i}_{i + 1}"] = arc
        out["monotonicity"] = self.monotonicity_line
        if self.simple_upper is not None:
            out["simple_upper"] = self.simple_upper
        return out

    def to_dict(self) -> dict:
        return {
            "kind": "entropy_plane_boundary",
            "q": self.q,
            "s": self.s,
            "N": self.N,
            "upper_arc": self.upper_arc.to_dict(),
            "lower_cascade": [c.to_dict() for c in self.lower_cascade],
            "lattice_points": self.lattice_points.tolist(),
            "monotonicity_line": self.monotonicity_line.to_dict(),
            "simple_upper": None if self.simple_upper is None else self.simple_upper.to_dict(),
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write("curve,index,H_s,H_q\n")
        for name, line in self.curves().items():
            for i, (x, y) in enumerate(line.points):
                buf.write(f"{name},{i},{_fmt(x)},{_fmt(y)}\n")
        return buf.getvalue()


def _arc(k, l, a, s, q, label) -> Polyline:
    return Polyline(np.column_stack([family_renyi(k, l, a, s), family_renyi(k, l, a, q)]), label)


def entropy_plane_boundary(q: float, s: float, N: int, samples_per_arc: int = 201) -> PlaneBoundary:
    """Sample the boundary of the set of (H_s, H_q) pairs of N-point vectors.

    The top arc follows ``Q_{1,N}(a)``; the bottom is the cascade of
    ``Q_{k,k+1}(a)`` for ``k = 1..N-1``, joined at the points (ln k, ln k).
    """
    q_val, s_val = RenyiOrder.of(q).value, RenyiOrder.of(s).value
    if q_val == s_val:
        raise DegenerateOrdersError("orders q and s must differ")
    if N < 2:
        raise OutOfRangeError(f"need N >= 2, got {N}")
    if samples_per_arc < 2:
        raise ValueError("need at least two samples per arc")
    a = np.linspace(0.0, 1.0, samples_per_arc)
    upper = _arc(1, N, a, s, q, f"Q(1,{N})")
    cascade = [_arc(k, k + 1, a, s, q, f"Q({k},{k + 1})") for k in range(1, N)]
    lattice = np.log(np.arange(1, N + 1, dtype=np.float64))
    lattice = np.column_stack([lattice, lattice])
    xs = np.linspace(0.0, math.log(N), samples_per_arc)
    mono = Polyline(np.column_stack([xs, xs]), "monotonicity")
    simple = None
    if s_val == 2.0 and q_val == 1.0:
        simple = Polyline(np.column_stack([xs, math.log(N) + 1.0 / N - np.exp(-xs)]), "simple_upper")
    return PlaneBoundary(q_val, s_val, N, upper, cascade, lattice, mono, simple)


# -- profile with bounds ------------------------------------------------------

@dataclass(frozen=True)
class ProfileDataset:
    """One vector's Renyi profile with bound curves and extrapolation lines.

    ``columns`` maps a curve name to values on ``q_grid``. The bound curves
    are H_q along the two boundary families carrying the measured H2 (or
    H3); below the conditioning order the top family is the upper curve,
    above it the roles swap.
    """

    vector: np.ndarray
    q_grid: np.ndarray
    columns: Dict[str, np.ndarray]
    markers: Dict[str, float]

    def to_dict(self) -> dict:
        return {
            "kind": "renyi_profile_with_bounds",
            "N": int(len(self.vector)),
            "vector": [float(v) for v in self.vector],
            "q": [float(v) for v in self.q_grid],
            "columns": {k: [float(v) for v in col] for k, col in self.columns.items()},
            "markers": dict(self.markers),
        }

    def to_csv(self) -> str:
        names = list(self.columns)
        buf = io.StringIO()
        buf.write(",".join(["q"] + names) + "\n")
        for i, qv in enumerate(self.q_grid):
            buf.write(",".join(_fmt(v) for v in [qv] + [self.columns[n][i] for n in names]) + "\n")
        return buf.getvalue()


def default_profile_vector() -> ProbVec:
    return sample_fisher_rao(FIG3_N, RngHandle(FIG3_SEED))


def profile_with_bounds(p, q_grid: Optional[Sequence[float]] = None) -> ProfileDataset:
    x = p.components if isinstance(p, ProbVec) else np.asarray(p, dtype=np.float64)
    N = len(x)
    qs = np.asarray(FIG3_Q_GRID if q_grid is None else q_grid, dtype=np.float64)
    w = np.ones_like(x)
    H1, H2, H3 = (renyi_levels(x, w, o) for o in (1.0, 2.0, 3.0))
    cols = {"H_q": np.array([renyi_levels(x, w, qv) for qv in qs])}

    def family_cols(H, tag, top_inv, bot_inv):
        if N == 1:
            z = np.zeros_like(qs)
            cols[f"{tag}_top"], cols[f"{tag}_cascade"] = z, z.copy()
            return
        a_top = top_inv(H, N)
        k = select_arc(H, N)
        a_bot = bot_inv(H, k)
        cols[f"{tag}_top"] = np.array([family_renyi(1, N, a_top, qv) for qv in qs], dtype=float)
        cols[f"{tag}_cascade"] = np.array([family_renyi(k - 1, k, a_bot, qv) for qv in qs], dtype=float)

    family_cols(H2, "H2", invert_a_from_H2_top, invert_a_from_H2_bottom)
    family_cols(H3, "H3", invert_a_from_H3_top, invert_a_from_H3_bottom)
    u2 = shannon_bounds_from_H2(H2, N)[1].value
    u3 = shannon_bounds_from_H3(H3, N)[1].value
    cols["line_lower"] = H2 + (H3 - H2) * (qs - 2.0)
    cols["line_upper"] = u2 + (u3 - u2) * (qs - 2.0)
    markers = {
        "H1": H1,
        "H2": H2,
        "H3": H3,
        "H_star": estimate_star(H2, H3, N).value,
        "H_d23": lower_extrap_H2_H3(H2, H3).value,
        "H_up": upper_extrap_Hup(H2, H3, N).value,
    }
    return ProfileDataset(x.copy(), qs, cols, markers)


# -- serialization -----------------------------------------------------------

def contours_to_dict(q, lines: List[Polyline], grid: int) -> dict:
    return {
        "kind": "iso_entropy_contours",
        "q": float(RenyiOrder.of(q).value),
        "grid": grid,
        "contours": [line.to_dict() for line in lines],
    }


def contours_to_csv(lines: List[Polyline]) -> str:
    buf = io.StringIO()
    buf.write("contour,label,index,x1,x2\n")
    for c, line in enumerate(lines):
        for i, (x, y) in enumerate(line.points):
            buf.write(f"{c},{line.label},{i},{_fmt(x)},{_fmt(y)}\n")
    return buf.getvalue()


_SCHEMA_FILES = {
    "iso_entropy_contours": "contours.schema.json",
    "entropy_plane_boundary": "plane.schema.json",
    "renyi_profile_with_bounds": "profile.schema.json",
    "deviation_study": "deviation.schema.json",
}


def load_schema(kind: str) -> dict:
    text = resources.files("renyix").joinpath("schemas").joinpath(_SCHEMA_FILES[kind]).read_text()
    return json.loads(text)


def validate_payload(obj: dict) -> None:
    """Raise ``jsonschema.ValidationError`` if ``obj`` does not match its schema."""
    import jsonschema

    jsonschema.validate(obj, load_schema(obj["kind"]))


def figure_dataset(fig_id: int, **params):
    """Build figure ``fig_id`` (1-4); returns ``(csv_text, json_dict)``."""
    if fig_id == 1:
        q = params.get("q", 1.0)
        grid = int(params.get("grid", FIG1_GRID))
        levels = params.get("levels") or [0.3, 0.6, 0.9, 1.05]
        lines = iso_entropy_contours(q, levels, grid)
        return contours_to_csv(lines), contours_to_dict(q, lines, grid)
    if fig_id == 2:
        b = entropy_plane_boundary(params.get("q", 1.0), params.get("s", 2.0),
                                   int(params.get("N", 3)), int(params.get("samples", 201)))
        return b.to_csv(), b.to_dict()
    if fig_id == 3:
        vec = params.get("vector")
        if vec is None:
            seed = int(params.get("seed", FIG3_SEED))
            vec = sample_fisher_rao(int(params.get("N", FIG3_N)), RngHandle(seed))
        d = profile_with_bounds(vec, params.get("q_grid"))
        return d.to_csv(), d.to_dict()
    if fig_id == 4:
        stats = deviation_study(int(params.get("N", 10)), int(params.get("count", 10_000)),
                                RngHandle(int(params.get("seed", 0))), int(params.get("bins", 60)),
                                include_hd=bool(params.get("include_hd", False)))
        return stats.to_csv(), stats.to_dict()
    raise ValueError(f"unknown figure id {fig_id!r}")


def gnuplot_script(fig_id: int, csv_name: str) -> str:
    """Minimal gnuplot commands for plotting a figure CSV."""
    head = "set datafile separator ','\nset key autotitle columnhead\n"
    if fig_id == 1:
        return head + f"set size ratio -1\nplot '{csv_name}' using 4:5 with dots\n"
    if fig_id == 2:
        return head + "set xlabel 'H_s'\nset ylabel 'H_q'\n" + \
            f"plot '{csv_name}' using 3:4 with dots\n"
    if fig_id == 3:
        return head + "set xlabel 'q'\n" + \
            f"plot for [i=2:9] '{csv_name}' using 1:i with lines\n"
    return head + "set style data histeps\n" + \
        f"plot '{csv_name}' using (($1+$2)/2):3, '' using (($1+$2)/2):4\n"
