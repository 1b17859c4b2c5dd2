"""Exploration experiments: LHS, sweeps, frontier fit, sensitivity grids, CSV."""

import math

import numpy as np
import pytest

from owagen import (
    DecisionPoint,
    DomainError,
    InsufficientDataError,
    SweepRecord,
    epsilon_sweep,
    fit_frontier,
    latin_hypercube,
    run_sweep,
    sensitivity_grid,
)
from owagen.explore import (
    grid_csv_name,
    write_epsilon_curve_csv,
    write_grid_csv,
    write_sweep_csv,
)


class TestLatinHypercube:
    def test_one_sample_per_stratum(self):
        points = latin_hypercube(4, seed=11)
        for coords in (sorted(p.alpha for p in points), sorted(p.delta for p in points)):
            for k, value in enumerate(coords):
                assert k / 4 <= value < (k + 1) / 4

    def test_stratification_holds_at_scale(self):
        points = latin_hypercube(500, seed=3)
        alphas = sorted(p.alpha for p in points)
        for k, value in enumerate(alphas):
            assert k / 500 <= value < (k + 1) / 500

    def test_deterministic_given_seed(self):
        assert latin_hypercube(50, seed=7) == latin_hypercube(50, seed=7)

    def test_different_seeds_differ(self):
        assert latin_hypercube(50, seed=7) != latin_hypercube(50, seed=8)

    def test_marginal_mean_near_half(self):
        points = latin_hypercube(10000, seed=1)
        mean_alpha = sum(p.alpha for p in points) / len(points)
        mean_delta = sum(p.delta for p in points) / len(points)
        assert 0.49 <= mean_alpha <= 0.51
        assert 0.49 <= mean_delta <= 0.51

    def test_rejects_zero_samples(self):
        with pytest.raises(DomainError):
            latin_hypercube(0, seed=1)


@pytest.fixture(scope="module")
def small_sample():
    return latin_hypercube(150, seed=5)


class TestSweep:
    def test_records_consistent_with_epsilon(self, small_sample):
        records = run_sweep(small_sample, epsilon=1e-8)
        for rec in records:
            assert rec.accepted == (rec.distance < 1e-8)

    def test_huge_epsilon_rejects_nothing(self, small_sample):
        curve = epsilon_sweep(small_sample, [10.0])
        assert curve == [(10.0, 0.0)]

    def test_curve_non_increasing(self, small_sample):
        eps = np.logspace(-12, -1, 20).tolist()
        curve = epsilon_sweep(small_sample, eps)
        fractions = [frac for _, frac in curve]
        assert all(b <= a for a, b in zip(fractions, fractions[1:]))

    def test_epsilons_must_be_sorted_and_positive(self, small_sample):
        with pytest.raises(DomainError):
            epsilon_sweep(small_sample, [1e-3, 1e-6])
        with pytest.raises(DomainError):
            epsilon_sweep(small_sample, [-1e-3, 1e-2])


class TestSweepInvariants:
    def test_accepted_region_mirror_symmetric(self, ci_sweep):
        # mirrored alpha-bins hold the same share of accepted points,
        # within 5% of the accepted total
        _, records, _ = ci_sweep
        accepted = [r for r in records if r.accepted]
        for n_bins in (8, 10):
            counts = [0] * n_bins
            for rec in accepted:
                counts[min(int(rec.point.alpha * n_bins), n_bins - 1)] += 1
            for k in range(n_bins // 2):
                gap = abs(counts[k] - counts[n_bins - 1 - k])
                assert gap < 0.05 * len(accepted), (n_bins, k, counts)

    def test_worker_pool_reproduces_sequential_results(self, monkeypatch):
        points = latin_hypercube(150, seed=55)
        sequential = [r.distance for r in run_sweep(points)]
        monkeypatch.setenv("OWAGEN_THREADS", "2")
        parallel = [r.distance for r in run_sweep(points, workers=4)]
        assert parallel == sequential

    def test_thread_cap_from_environment(self, monkeypatch):
        from owagen.explore import _resolve_workers

        monkeypatch.delenv("OWAGEN_THREADS", raising=False)
        assert _resolve_workers(None) == 1
        assert _resolve_workers(3) == 3
        monkeypatch.setenv("OWAGEN_THREADS", "2")
        assert _resolve_workers(None) == 2
        assert _resolve_workers(8) == 2
        assert _resolve_workers(1) == 1


class TestFrontierFit:
    def test_exact_parabola_recovered(self):
        records = [
            SweepRecord(point=DecisionPoint(a, 4 * a * (1 - a)), distance=0.0, accepted=True)
            for a in np.linspace(0.02, 0.98, 49)
        ]
        fit = fit_frontier(records)
        assert fit.a == pytest.approx(-4.0, abs=1e-9)
        assert fit.b == pytest.approx(4.0, abs=1e-9)
        assert fit.c == pytest.approx(0.0, abs=1e-9)
        assert fit.rmse < 1e-12

    def test_insufficient_bins(self):
        records = [
            SweepRecord(point=DecisionPoint(0.5, 0.5), distance=0.0, accepted=True),
            SweepRecord(point=DecisionPoint(0.52, 0.6), distance=0.0, accepted=True),
        ]
        with pytest.raises(InsufficientDataError):
            fit_frontier(records)

    def test_rejected_points_do_not_shape_frontier(self):
        accepted = [
            SweepRecord(point=DecisionPoint(a, 4 * a * (1 - a)), distance=0.0, accepted=True)
            for a in np.linspace(0.05, 0.95, 30)
        ]
        noise = [
            SweepRecord(point=DecisionPoint(a, 1.0), distance=0.5, accepted=False)
            for a in np.linspace(0.05, 0.95, 30)
        ]
        fit = fit_frontier(accepted + noise)
        assert fit.a == pytest.approx(-4.0, abs=1e-9)


class TestSensitivityGrid:
    def test_lattice_shape_and_masking(self):
        grid = sensitivity_grid(5, "orness", resolution=12)
        assert grid.values.shape == (12, 12)
        assert grid.feasible.shape == (12, 12)
        # cells far above the parabola are infeasible and NaN
        i = int(np.argmin(np.abs(grid.alphas - 0.1)))
        j = int(np.argmin(np.abs(grid.deltas - 0.9)))
        assert not grid.feasible[i, j]
        assert math.isnan(grid.values[i, j])

    def test_values_in_unit_interval(self):
        grid = sensitivity_grid(5, "tradeoff", resolution=12)
        vals = grid.values[grid.feasible]
        assert np.all(vals >= -1e-12) and np.all(vals <= 1 + 1e-12)

    def test_dispersion_near_one_at_apex(self):
        grid = sensitivity_grid(4, "dispersion", resolution=11)
        i = int(np.argmin(np.abs(grid.alphas - 0.5)))
        j = int(np.argmax(grid.deltas * grid.feasible[i]))
        assert grid.values[i, j] == pytest.approx(1.0, abs=1e-2)

    def test_mirror_symmetry_small(self):
        res = 11
        for metric in ("orness", "dispersion", "tradeoff"):
            grid = sensitivity_grid(3, metric, resolution=res)
            for i in range(res):
                mi = res - 1 - i
                for j in range(res):
                    if not grid.feasible[i, j]:
                        assert not grid.feasible[mi, j]
                        continue
                    got = grid.values[i, j]
                    mirror = grid.values[mi, j]
                    if metric == "orness":
                        assert got + mirror == pytest.approx(1.0, abs=1e-6)
                    else:
                        assert got == pytest.approx(mirror, abs=1e-6)

    def test_dispersion_grows_with_n_at_fixed_point(self):
        g5 = sensitivity_grid(5, "dispersion", resolution=10)
        g10 = sensitivity_grid(10, "dispersion", resolution=10)
        i = int(np.argmin(np.abs(g5.alphas - 0.5)))
        j = int(np.argmin(np.abs(g5.deltas - 0.6)))
        assert g5.feasible[i, j] and g10.feasible[i, j]
        assert g10.values[i, j] > g5.values[i, j]

    def test_parameter_validation(self):
        with pytest.raises(DomainError):
            sensitivity_grid(1, "orness", resolution=12)
        with pytest.raises(DomainError):
            sensitivity_grid(5, "orness", resolution=5)
        with pytest.raises(DomainError):
            sensitivity_grid(5, "entropy", resolution=12)


class TestCsvOutput:
    def test_sweep_csv_layout(self, tmp_path):
        records = [
            SweepRecord(point=DecisionPoint(0.25, 0.5), distance=1e-12, accepted=True),
            SweepRecord(point=DecisionPoint(0.1, 0.9), distance=0.12, accepted=False),
        ]
        path = tmp_path / "sweep.csv"
        write_sweep_csv(records, path)
        lines = path.read_text().splitlines()
        assert lines[0] == "alpha,delta,distance,accepted"
        assert lines[1] == "0.25,0.5,1e-12,true"
        assert lines[2] == "0.1,0.9,0.12,false"

    def test_epsilon_curve_csv_layout(self, tmp_path):
        path = tmp_path / "epsilon_curve.csv"
        write_epsilon_curve_csv([(1e-8, 0.33), (1e-3, 0.33)], path)
        lines = path.read_text().splitlines()
        assert lines[0] == "epsilon,rejected_fraction"
        assert lines[1] == "1e-08,0.33"

    def test_grid_csv_layout(self, tmp_path):
        grid = sensitivity_grid(3, "orness", resolution=10)
        path = tmp_path / grid_csv_name("orness", 3)
        write_grid_csv(grid, path)
        lines = path.read_text().splitlines()
        assert lines[0] == "alpha,delta,value,feasible"
        assert len(lines) == 1 + 10 * 10
        # infeasible rows carry nan + false
        assert any(line.endswith(",nan,false") for line in lines[1:])

    def test_csv_deterministic(self, tmp_path):
        points = latin_hypercube(40, seed=9)
        records = run_sweep(points)
        p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
        write_sweep_csv(records, p1)
        write_sweep_csv(records, p2)
        assert p1.read_bytes() == p2.read_bytes()
