import io

import pytest

from xorsat import model, sweep
from xorsat.model import ModelDomainError
from xorsat.sweep import (
    NoCrossingError,
    SweepConfig,
    SweepPoint,
    estimate_crossing,
    format_csv,
    point_stream,
    read_csv,
    run_point,
    run_sweep,
    trial_generator,
    wilson_interval,
)


def _point(ratio, proportion, n=100):
    L = round(ratio * n)
    return SweepPoint(
        n=n, L=L, ratio=ratio, sat_count=int(proportion * 100), samples=100,
        proportion=proportion, ci_low=max(0.0, proportion - 0.1),
        ci_high=min(1.0, proportion + 0.1),
    )


class TestConfig:
    def test_ratio_grid_includes_endpoint_within_half_step(self):
        cfg = SweepConfig(k=3, n_values=(10,), ratio_start=0.7, ratio_end=0.9,
                          ratio_step=0.1, samples_per_point=1, seed=0)
        assert [round(r, 4) for r in cfg.ratios()] == [0.7, 0.8, 0.9]

    def test_ratio_grid_float_accumulation(self):
        cfg = SweepConfig(k=3, n_values=(10,), ratio_start=0.70, ratio_end=1.14,
                          ratio_step=0.01, samples_per_point=1, seed=0)
        rs = cfg.ratios()
        assert len(rs) == 45
        assert rs[0] == pytest.approx(0.70)
        assert rs[-1] == pytest.approx(1.14)

    def test_points_order_and_rounding(self):
        cfg = SweepConfig(k=3, n_values=(10, 20), ratio_start=0.7, ratio_end=0.8,
                          ratio_step=0.1, samples_per_point=1, seed=0)
        pts = cfg.points()
        assert [(n, L) for n, _, L in pts] == [(10, 7), (10, 8), (20, 14), (20, 16)]
        assert [r for _, r, _ in pts] == pytest.approx([0.7, 0.8, 0.7, 0.8])

    def test_json_roundtrip(self):
        cfg = SweepConfig(k=3, n_values=(50, 100), ratio_start=0.7, ratio_end=1.1,
                          ratio_step=0.05, samples_per_point=20, seed=99)
        assert SweepConfig.from_json(cfg.to_json()) == cfg

    def test_validation(self):
        with pytest.raises(ModelDomainError):
            SweepConfig(k=2, n_values=(10,), ratio_start=0.5, ratio_end=1.0,
                        ratio_step=0.1, samples_per_point=1, seed=0)
        with pytest.raises(ValueError):
            SweepConfig(k=3, n_values=(10,), ratio_start=1.0, ratio_end=0.5,
                        ratio_step=0.1, samples_per_point=1, seed=0)
        with pytest.raises(ValueError):
            SweepConfig(k=3, n_values=(10,), ratio_start=0.5, ratio_end=1.0,
                        ratio_step=0.0, samples_per_point=1, seed=0)


class TestWilson:
    def test_brackets_proportion(self):
        for sat, samples in [(0, 10), (10, 10), (5, 10), (999, 1000), (1, 1000)]:
            lo, hi = wilson_interval(sat, samples)
            assert 0.0 <= lo <= sat / samples <= hi <= 1.0

    def test_tightens_with_samples(self):
        lo1, hi1 = wilson_interval(50, 100)
        lo2, hi2 = wilson_interval(500, 1000)
        assert hi2 - lo2 < hi1 - lo1


class TestRunPoint:
    def test_L_zero_always_sat(self):
        pt = run_point(10, 0, 3, samples=25, stream=point_stream(1, 0))
        assert pt.proportion == 1.0
        assert pt.sat_count == 25

    def test_matches_library_path_trial_by_trial(self):
        # the compiled trial must equal sample_formula + is_satisfiable
        # on the identical stream
        stream = point_stream(seed=123, point_index=4)
        pt = run_point(20, 18, 3, samples=40, stream=stream)
        expected = sum(
            model.is_satisfiable(model.sample_formula(20, 18, 3, trial_generator(stream, t)))
            for t in range(40)
        )
        assert pt.sat_count == expected

    def test_word_boundary_n(self):
        for n in (63, 64, 65):
            stream = point_stream(seed=n, point_index=0)
            pt = run_point(n, n - 2, 3, samples=25, stream=stream)
            expected = sum(
                model.is_satisfiable(model.sample_formula(n, n - 2, 3, trial_generator(stream, t)))
                for t in range(25)
            )
            assert pt.sat_count == expected

    def test_k4_supported(self):
        stream = point_stream(seed=5, point_index=0)
        pt = run_point(12, 10, 4, samples=30, stream=stream)
        expected = sum(
            model.is_satisfiable(model.sample_formula(12, 10, 4, trial_generator(stream, t)))
            for t in range(30)
        )
        assert pt.sat_count == expected

    def test_domain_errors_propagate(self):
        with pytest.raises(ModelDomainError):
            run_point(2, 1, 3, samples=5, stream=point_stream(0, 0))


class TestRunSweep:
    def test_single_point_reduces_to_run_point(self):
        cfg = SweepConfig(k=3, n_values=(15,), ratio_start=0.8, ratio_end=0.8,
                          ratio_step=0.1, samples_per_point=30, seed=11)
        pts = run_sweep(cfg, threads=1)
        direct = run_point(15, 12, 3, samples=30, stream=point_stream(11, 0), ratio=0.8)
        assert pts == [direct]

    def test_thread_count_invariance(self):
        cfg = SweepConfig(k=3, n_values=(30, 40), ratio_start=0.7, ratio_end=1.1,
                          ratio_step=0.2, samples_per_point=60, seed=42)
        csv1 = format_csv(run_sweep(cfg, threads=1), cfg.k)
        csv8 = format_csv(run_sweep(cfg, threads=8), cfg.k)
        assert csv1 == csv8

    def test_bounds_consistency_with_analytics(self):
        # well below the lower-bound constant the curve is near 1, well
        # above the upper-bound root it is near 0 (n >= 200)
        lo_pt = run_point(200, round(0.83 * 200), 3, samples=400,
                          stream=point_stream(1234, 0), threads=2)
        hi_pt = run_point(200, round(0.98 * 200), 3, samples=400,
                          stream=point_stream(1234, 1), threads=2)
        assert lo_pt.ci_low > 0.9
        assert hi_pt.ci_high < 0.1


class TestEstimateCrossing:
    def test_symmetric_interpolation(self):
        pts = [_point(0.9, 0.8), _point(1.0, 0.2)]
        assert estimate_crossing(pts) == pytest.approx(0.95)

    def test_exact_hit(self):
        assert estimate_crossing([_point(0.9, 0.5)]) == pytest.approx(0.9)

    def test_no_crossing(self):
        with pytest.raises(NoCrossingError):
            estimate_crossing([_point(0.9, 0.9), _point(1.0, 0.8)])
        with pytest.raises(NoCrossingError):
            estimate_crossing([_point(0.9, 0.2)])

    def test_invariant_under_padding(self):
        core = [_point(0.9, 0.8), _point(1.0, 0.2)]
        padded = [_point(0.7, 1.0), _point(0.8, 0.95)] + core + [_point(1.1, 0.05)]
        assert estimate_crossing(padded) == estimate_crossing(core)

    def test_requires_sorted_ratios(self):
        with pytest.raises(ValueError):
            estimate_crossing([_point(1.0, 0.8), _point(0.9, 0.2)])


class TestCsv:
    def test_schema_and_roundtrip(self):
        cfg = SweepConfig(k=3, n_values=(12,), ratio_start=0.7, ratio_end=0.9,
                          ratio_step=0.1, samples_per_point=10, seed=3)
        pts = run_sweep(cfg, threads=1)
        text = format_csv(pts, cfg.k)
        header = text.splitlines()[0]
        assert header == "k,n,L,ratio,samples,sat_count,proportion,ci_low,ci_high"
        k, parsed = read_csv(io.StringIO(text))
        assert k == 3
        assert [(p.n, p.L, p.sat_count) for p in parsed] == [
            (p.n, p.L, p.sat_count) for p in pts
        ]

    def test_ratio_formatted_to_4_decimals(self):
        text = format_csv([_point(0.9178, 0.5)], 3)
        assert ",0.9178," in text.splitlines()[1]

    def test_read_rejects_bad_header(self):
        with pytest.raises(ValueError, match="bad CSV header"):
            read_csv(io.StringIO("a,b,c\n1,2,3\n"))
