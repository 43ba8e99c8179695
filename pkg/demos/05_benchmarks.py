"""Reproduce the Monte-Carlo benchmark CSVs for four equilibrium cells.

Writes runs/eq_R_W.csv for each cell; the plots package renders them:
    cd plots && npm run build && node dist/cli.js --csv ../runs/eq_75_70.csv \
        --out ../figs/eq_75_70.png
"""

import os

from multiski import ExperimentConfig, run_experiment, write_csv
from multiski.experiments import default_output_dir

CELLS = [(75, 19), (75, 70), (125, 15), (125, 75)]
SIGMAS = [float(s) for s in range(0, 251, 25)]

out_dir = default_output_dir()
for r, w in CELLS:
    cfg = ExperimentConfig.make(
        r, w, ["0.2", 1], SIGMAS, samples_per_cell=1000, master_seed=42
    )
    rows = run_experiment(cfg)
    path = os.path.join(out_dir, f"eq_{r}_{w}.csv")
    write_csv(rows, path)
    print(f"wrote {path}")
    for lam in ("0.2", "1"):
        series = [row for row in rows if f"{float(row.lam):g}" == lam]
        lo = min(row.avg_ratio for row in series)
        hi = max(row.avg_ratio for row in series)
        print(f"  lambda={lam}: average ratio spans [{lo:.4f}, {hi:.4f}]")
