"""
Plot-ready datasets
===================

Writes CSV and JSON for four plots: iso-entropy lines on the 3-simplex,
the attainable (H_s, H_q) region, a Renyi profile with its bounds and the
error histograms. Each JSON payload validates against a bundled schema.
"""

import sys
from pathlib import Path

from renyix.figures import figure_dataset, gnuplot_script, validate_payload

out = Path(sys.argv[1] if len(sys.argv) > 1 else "figure_data")
out.mkdir(parents=True, exist_ok=True)

params = {
    1: dict(q=0.25, levels=[0.6, 0.9, 1.05]),
    2: dict(q=1.0, s=2.0, N=5),
    3: dict(),
    4: dict(N=10, count=10_000, seed=42),
}
for fig, kw in params.items():
    csv, payload = figure_dataset(fig, **kw)
    validate_payload(payload)
    (out / f"figure{fig}.csv").write_text(csv)
    (out / f"figure{fig}.gp").write_text(gnuplot_script(fig, f"figure{fig}.csv"))
    print(f"figure {fig}: {len(csv.splitlines()) - 1} rows -> {out}/figure{fig}.csv")
