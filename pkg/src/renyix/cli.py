"""Command line front end.

Subcommands print JSON to stdout. ``sample`` and ``figure`` additionally
write a CSV and a JSON file side by side into ``--out``. Exit status is 0 on
success, 2 for invalid input and 1 for anything else.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import bounds as B
from . import extrapolate as X
from .entropy import purity_stats, renyi, shannon, structural_entropy, tsallis
from .errors import EntropyInputError
from .figures import figure_dataset, gnuplot_script, validate_payload
from .probvec import load_prob_vec, parse_prob_vec
from .sampling import RngHandle, deviation_study


class _InputError(Exception):
    pass


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """Argument parser that reports usage errors as exceptions."""

    def error(self, message):
        raise _UsageError(message)


def _bound_dict(b: B.BoundResult) -> dict:
    return {"value": b.value, "side": b.side, "rigor": b.rigor, "source": b.source}


def _estimate_dict(e: X.Estimate) -> dict:
    return {"value": e.value, "rigor": e.rigor, "source": e.source,
            "ingredients": sorted(e.ingredients)}


def cmd_entropy(args) -> dict:
    mode = "renormalize" if args.renormalize else "strict"
    if args.file:
        p = load_prob_vec(args.file, mode)
    elif args.values:
        p = parse_prob_vec(args.values, mode)
    else:
        raise _InputError("give a vector with --values or --file")
    ps = purity_stats(p)
    return {
        "N": p.N,
        "shannon": shannon(p),
        "renyi": {"0": renyi(p, 0.0), "2": renyi(p, 2.0), "3": renyi(p, 3.0),
                  "inf": renyi(p, math.inf)},
        "purity": {"coincidence_index": ps.coincidence_index,
                   "participation_ratio": ps.participation_ratio,
                   "linear_entropy": ps.linear_entropy},
        "structural_entropy": structural_entropy(p),
        "tsallis_2": tsallis(p, 2.0),
    }


def cmd_bounds(args) -> dict:
    if args.h2 is None and args.h3 is None:
        raise _InputError("give --h2 and/or --h3")
    out = {"N": args.n}
    if args.h2 is not None:
        lo, up = B.shannon_bounds_from_H2(args.h2, args.n)
        out["from_H2"] = {"lower": _bound_dict(lo), "upper": _bound_dict(up),
                          "simple_upper": _bound_dict(B.ht_simple_upper(args.h2, args.n))}
    if args.h3 is not None:
        lo, up = B.shannon_bounds_from_H3(args.h3, args.n)
        out["from_H3"] = {"lower": _bound_dict(lo), "upper": _bound_dict(up)}
    return out


def cmd_extrapolate(args) -> dict:
    est = X.all_estimates(args.h2, args.h3, args.n, args.h0)
    return {
        "N": args.n,
        "H_star": est["H_star"].value,
        "rigor": "heuristic",
        "estimates": {k: _estimate_dict(v) for k, v in est.items()},
    }


def _write_pair(out_dir: Path, stem: str, csv_text: str, payload: dict) -> dict:
    validate_payload(payload)
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / f"{stem}.csv"
    json_path = out_dir / f"{stem}.json"
    csv_path.write_text(csv_text)
    json_path.write_text(json.dumps(payload, indent=1) + "\n")
    return {"csv": str(csv_path), "json": str(json_path)}


def cmd_sample(args) -> dict:
    stats = deviation_study(args.n, args.count, RngHandle(args.seed), args.bins,
                            include_hd=args.include_hd)
    stem = args.prefix or f"deviation_N{args.n}_seed{args.seed}"
    files = _write_pair(Path(args.out), stem, stats.to_csv(), stats.to_dict())
    summary = {name: {"mean": c.mean, "std": c.std} for name, c in stats.channels().items()}
    return {"files": files, "summary": summary}


def cmd_figure(args) -> dict:
    params = {k: v for k, v in {
        "q": args.q, "s": args.s, "N": args.n, "grid": args.grid, "levels": args.levels,
        "samples": args.samples, "seed": args.seed, "count": args.count, "bins": args.bins,
        "include_hd": args.include_hd,
    }.items() if v is not None}
    if args.file:
        params["vector"] = load_prob_vec(args.file)
    csv_text, payload = figure_dataset(args.id, **params)
    stem = args.prefix or f"figure{args.id}"
    files = _write_pair(Path(args.out), stem, csv_text, payload)
    if args.gnuplot:
        gp = Path(args.out) / f"{stem}.gp"
        gp.write_text(gnuplot_script(args.id, f"{stem}.csv"))
        files["gnuplot"] = str(gp)
    return {"files": files}


def _levels(text: str):
    return [float(v) for v in text.split(",") if v.strip()]


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="renyix", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("entropy", help="entropies and purity of a probability vector")
    p.add_argument("--values", help="comma/space separated probabilities or a JSON array")
    p.add_argument("--file", help="file holding a JSON array or whitespace separated values")
    p.add_argument("--renormalize", action="store_true", help="divide by the sum instead of requiring 1")
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("bounds", help="rigorous Shannon entropy bounds from H2/H3")
    p.add_argument("--h2", type=float)
    p.add_argument("--h3", type=float)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("extrapolate", help="heuristic Shannon entropy estimates")
    p.add_argument("--h2", type=float, required=True)
    p.add_argument("--h3", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h0", type=float)
    p.set_defaults(func=cmd_extrapolate)

    p = sub.add_parser("sample", help="Monte Carlo deviation histograms")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bins", type=int, default=60)
    p.add_argument("--include-hd", action="store_true")
    p.add_argument("--out", default=".")
    p.add_argument("--prefix")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("figure", help="figure datasets (CSV + JSON)")
    p.add_argument("--id", type=int, choices=[1, 2, 3, 4], required=True)
    p.add_argument("--q", type=float)
    p.add_argument("--s", type=float)
    p.add_argument("--n", type=int)
    p.add_argument("--grid", type=int)
    p.add_argument("--levels", type=_levels)
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--count", type=int)
    p.add_argument("--bins", type=int)
    p.add_argument("--include-hd", action="store_true", default=None)
    p.add_argument("--file", help="vector for figure 3")
    p.add_argument("--gnuplot", action="store_true")
    p.add_argument("--out", default=".")
    p.add_argument("--prefix")
    p.set_defaults(func=cmd_figure)
    return ap


def _fail(code: int, kind: str, message: str) -> int:
    print(json.dumps({"error": kind, "message": message}), file=sys.stderr)
    return code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    except _UsageError as exc:
        return _fail(2, "UsageError", str(exc))
    try:
        result = args.func(args)
    except (EntropyInputError, _InputError, ValueError, OSError) as exc:
        return _fail(2, type(exc).__name__, str(exc))
    except Exception as exc:  # noqa: BLE001
        return _fail(1, type(exc).__name__, str(exc))
    print(json.dumps(result, indent=1))
    return 0


if __name__ == "__main__":
    sys.exit(main())
