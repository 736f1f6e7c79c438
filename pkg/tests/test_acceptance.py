"""Acceptance suite: one test per release criterion, at its stated tolerance.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS/FAIL
line per criterion.  The Monte Carlo criteria share one full-protocol
sweep (k=3, n in {100, 200, 300, 400}, ratios 0.70..1.14 step 0.01,
1000 samples per point, seed 7) executed once per thread count; expect
a few minutes total.
"""

import math
import time

import numpy as np
import pytest

from xorsat import bounds, gf2, oracle, sweep, witness
from xorsat.gf2 import BitMatrix

ACCEPTANCE_SEED = 7

PROTOCOL = sweep.SweepConfig(
    k=3,
    n_values=(100, 200, 300, 400),
    ratio_start=0.70,
    ratio_end=1.14,
    ratio_step=0.01,
    samples_per_point=1000,
    seed=ACCEPTANCE_SEED,
)


def report(name: str, ok: bool, detail: str = "") -> None:
    line = f"[ACCEPTANCE] {name}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f"  ({detail})"
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def protocol_runs():
    csvs = {}
    points = {}
    for threads in (1, 8):
        pts = sweep.run_sweep(PROTOCOL, threads=threads)
        csvs[threads] = sweep.format_csv(pts, PROTOCOL.k)
        points[threads] = pts
    return csvs, points


def test_lower_bound_constants():
    reference = {3: 0.88949, 4: 0.96714, 5: 0.98916, 6: 0.99622}
    start = time.perf_counter()
    got = {k: bounds.theta(k)[0] for k in (3, 4, 5, 6)}
    elapsed = time.perf_counter() - start
    ok = all(abs(got[k] - reference[k]) <= 5e-5 for k in reference) and elapsed < 1.0
    detail = ", ".join(f"theta({k})={got[k]:.5f}" for k in sorted(got)) + f", {elapsed:.3f}s"
    report("lower-bound constants theta_k", ok, detail)


def test_upper_bound_roots():
    reference = {3: 0.9278, 4: 0.9721, 5: 0.9914, 6: 0.9971}
    tolerance = {3: 1e-4, 4: 1e-3, 5: 1e-3, 6: 1e-3}
    start = time.perf_counter()
    got = {k: bounds.beta_upper(k) for k in (3, 4, 5, 6)}
    elapsed = time.perf_counter() - start
    ok = all(abs(got[k] - reference[k]) <= tolerance[k] for k in reference) and elapsed < 1.0
    detail = ", ".join(f"beta({k})={got[k]:.5f}" for k in sorted(got)) + f", {elapsed:.3f}s"
    report("upper-bound roots beta_k", ok, detail)


def test_sat_probability_identity_exact():
    start = time.perf_counter()
    checked = 0
    for n in (3, 4, 5):
        for L in range(4):
            truth_table = oracle.exact_sat_probability(n, L, 3).value
            rank_sum = oracle.sat_probability_via_rank(n, L, 3)
            inverse_y = oracle.expected_inverse_y(n, L, 3)
            assert truth_table == rank_sum == inverse_y, (n, L)
            checked += 1
    elapsed = time.perf_counter() - start
    ok = checked == 12 and elapsed < 30.0
    report("exact SAT-probability identity", ok, f"{checked} instances, {elapsed:.2f}s")


def test_expected_y_formula():
    worst = 0.0
    for n in (3, 4, 5, 6):
        for L in range(5):
            exact = oracle.exact_expected_y(n, L, 3)
            analytic = bounds.expected_y(n, L, 3)
            rel = abs(analytic - float(exact)) / float(exact)
            worst = max(worst, rel)
    exact_one = all(bounds.expected_y(n, 0, 3) == 1.0 for n in (3, 6, 50, 200))
    ok = worst <= 1e-10 and exact_one
    report("expected-Y formula vs enumeration", ok, f"worst rel err {worst:.2e}")


def test_omega_against_subset_parity_oracle():
    start = time.perf_counter()
    checked = 0
    for n in range(1, 13):
        for k in (3, 4, 5):
            for m in range(n + 1):
                assert bounds.omega(n, m, k) == oracle.omega_bruteforce(n, m, k), (n, m, k)
                checked += 1
    elapsed = time.perf_counter() - start
    ok = elapsed < 10.0
    report("omega equals subset-parity count", ok, f"{checked} triples, {elapsed:.2f}s")


def test_witness_soundness_fuzz():
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(ACCEPTANCE_SEED)))
    violations = 0
    trials = 10_000
    for _ in range(trials):
        n = int(rng.integers(3, 201))
        ratio = rng.uniform(0.5, 1.2)
        L = max(1, round(ratio * n))
        u = rng.random((L, n))
        cols = np.argpartition(u, 2, axis=1)[:, :3]
        m = BitMatrix.from_row_supports(n, [sorted(row) for row in cols.tolist()])
        counts = witness.count_tuv(m)
        if gf2.rank(m) > counts.rank_bound:
            violations += 1
    report("witness rank bound soundness", violations == 0,
           f"{trials} matrices, {violations} violations")


def test_jensen_direction():
    instances = [(n, L) for n in (3, 4, 5) for L in range(4)]
    instances += [(6, L) for L in range(5)]
    worst_margin = math.inf
    for n, L in instances:
        p_sat = oracle.exact_sat_probability(n, L, 3).value
        e_y = oracle.exact_expected_y(n, L, 3)
        assert p_sat >= 1 / e_y, (n, L)  # exact rational comparison
        margin = float(p_sat) - 1.0 / bounds.expected_y(n, L, 3)
        worst_margin = min(worst_margin, margin)
    ok = worst_margin >= -1e-12
    report("Jensen direction P(SAT) >= 1/E(Y)", ok, f"worst margin {worst_margin:.2e}")


def test_phase_transition_protocol(protocol_runs):
    _, points = protocol_runs
    per_n = {}
    for p in points[1]:
        per_n.setdefault(p.n, []).append(p)
    tails_ok, crossings, max_slopes = True, {}, {}
    for n, pts in sorted(per_n.items()):
        pts.sort(key=lambda p: p.ratio)
        tails_ok &= pts[0].proportion >= 0.95 and pts[-1].proportion <= 0.05
        crossings[n] = sweep.estimate_crossing(pts)
        max_slopes[n] = max(
            abs(b.proportion - a.proportion) for a, b in zip(pts, pts[1:])
        )
    crossings_ok = all(0.88 <= c <= 0.96 for c in crossings.values())
    slopes = [max_slopes[n] for n in (100, 200, 300, 400)]
    steepening_ok = all(b >= a for a, b in zip(slopes, slopes[1:]))
    detail = (
        "crossings " + ", ".join(f"n={n}: {c:.4f}" for n, c in sorted(crossings.items()))
        + "; max slopes " + ", ".join(f"{s:.3f}" for s in slopes)
    )
    report("phase-transition reproduction", tails_ok and crossings_ok and steepening_ok, detail)


def test_sweep_thread_determinism(protocol_runs):
    csvs, _ = protocol_runs
    identical = csvs[1].encode() == csvs[8].encode()
    report("sweep byte-identical across thread counts", identical,
           f"{len(csvs[1].splitlines()) - 1} rows")


def test_rank_performance_floor():
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(1000)))
    m = BitMatrix.from_dense(rng.integers(0, 2, size=(1000, 1000), dtype=np.uint8))
    start = time.perf_counter()
    r = gf2.rank(m)
    elapsed = time.perf_counter() - start
    ok = elapsed < 1.0 and 0 <= r <= 1000
    report("1000x1000 rank under one second", ok, f"rank={r}, {elapsed:.3f}s")
