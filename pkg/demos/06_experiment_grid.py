"""A miniature experiment grid: cached cells, markdown table, alpha sweep."""
import tempfile
from pathlib import Path

from csilab.experiments import (
    reduced_plan, ensure_dataset, run_cell, run_table2, run_table3,
    run_alpha_sweep, format_grid_markdown, PUBLISHED_NMSE_DB,
)
from csilab.training import TrainConfig

# a toy plan: tiny splits and few epochs so the whole grid runs in minutes.
# reduced_plan() / paper_plan() are the real protocols.
plan = reduced_plan(
    archs=("csinet", "acnet"),
    crs=(16, 32),
    counts={"train": 200, "val": 50, "test": 50},
    train_cfg=TrainConfig(epochs=5, batch_size=50),
)

work = Path(tempfile.mkdtemp())
data_root = work / "data"
results = work / "results"

# each (arch, CR, alpha) cell is trained once and cached under its resolved
# configuration; a second call is a cache hit
dataset = ensure_dataset(data_root, plan, plan.alpha)
cell = run_cell("acnet", 32, plan.alpha, dataset, plan, results / "cells")
print("one cell:", {k: cell[k] for k in ("arch", "cr", "nmse_db", "rho")})
cell2 = run_cell("acnet", 32, plan.alpha, dataset, plan, results / "cells")
assert cell2 == cell

# the full grid plus CSV/JSON/markdown artifacts
grid, failures = run_table2(plan, data_root, results)
assert not failures
print(format_grid_markdown(grid, plan.crs))
print("artifacts:", sorted(p.name for p in results.iterdir()))

# measured improvement percentages of acnet over each available baseline
pct = run_table3(grid, results)
for (base, cr), v in sorted(pct.items()):
    print(f"acnet vs {base} at CR={cr}: {v:+.1f}%")

# reference values the full protocol targets
print("published NMSE (dB) grid:", PUBLISHED_NMSE_DB)

# alpha sweep: retrain per alpha, collect NMSE, plot the curve
sweep = run_alpha_sweep(plan, alphas=(0.1, 0.9), data_root=data_root,
                        results_dir=results, cr=32)
print("sweep rows:", sweep)
print("sweep artifacts:", sorted(p.name for p in results.iterdir()))
