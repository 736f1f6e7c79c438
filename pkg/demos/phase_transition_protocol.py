#!/usr/bin/env python3
"""Run the phase-transition experiment and write its CSV.

Protocol: k = 3, n in {100, 200, 300, 400}, ratio L/n from 0.70 to 1.14
in steps of 0.01, 1000 random formulas per point, seed 7.  The curves
sharpen as n grows and cross proportion 0.5 a little below ratio 0.92.

Writes results/acceptance_sweep.csv (the file plotkit renders) unless
--quick is given, which runs a two-minute-saving reduced protocol and
writes results/quick_sweep.csv instead.
"""

import argparse
import pathlib
import time

from xorsat import sweep

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("--quick", action="store_true", help="smaller grid and sample count")
parser.add_argument("--threads", type=int, default=None, help="worker threads")
args = parser.parse_args()

if args.quick:
    cfg = sweep.SweepConfig(
        k=3, n_values=(100, 200), ratio_start=0.80, ratio_end=1.04,
        ratio_step=0.02, samples_per_point=200, seed=7,
    )
    out_name = "quick_sweep.csv"
else:
    cfg = sweep.SweepConfig(
        k=3, n_values=(100, 200, 300, 400), ratio_start=0.70, ratio_end=1.14,
        ratio_step=0.01, samples_per_point=1000, seed=7,
    )
    out_name = "acceptance_sweep.csv"

print(f"sweeping {len(cfg.points())} points, {cfg.samples_per_point} samples each ...")
start = time.perf_counter()
points = sweep.run_sweep(cfg, threads=args.threads)
print(f"done in {time.perf_counter() - start:.1f}s")

out_dir = pathlib.Path(__file__).resolve().parent.parent / "results"
out_dir.mkdir(exist_ok=True)
out_path = out_dir / out_name
with open(out_path, "w") as fp:
    sweep.write_csv(points, cfg.k, fp)
print(f"wrote {out_path}")

print()
print(f"{'n':>4}  {'p(first)':>8}  {'p(last)':>8}  {'0.5-crossing':>12}")
per_n = {}
for p in points:
    per_n.setdefault(p.n, []).append(p)
for n, pts in sorted(per_n.items()):
    pts.sort(key=lambda p: p.ratio)
    crossing = sweep.estimate_crossing(pts)
    print(f"{n:>4}  {pts[0].proportion:>8.3f}  {pts[-1].proportion:>8.3f}  {crossing:>12.4f}")
