import math
import os

import pytest

from aoi_tradeoff.distributions import ArrivalProcess, Deterministic, Exponential, Pareto
from aoi_tradeoff.experiments import (
    CSV_COLUMNS,
    SimSettings,
    Source,
    analytic_point,
    evaluate_point,
    simulated_point,
)
from aoi_tradeoff.simcore import PolicyConfig

ARRIVAL = ArrivalProcess.poisson(0.5)
SETTINGS = SimSettings(horizon=2e4, warmup=2e3, reps=2, n_paths=20000)

def test_lcfsp_analytic_point():
    point = analytic_point(ARRIVAL, Exponential(0.8), PolicyConfig.lcfsp(), SETTINGS)
    assert point.source is Source.ANALYTIC
    assert point.avg_age == pytest.approx(3.25)
    assert point.avg_delay == pytest.approx(10 / 3)
    assert point.delay_var == pytest.approx(1.5625)
    assert point.seed is None
    assert point.status == "ok"

def test_unstable_and_non_poisson():
    unstable = analytic_point(ArrivalProcess.poisson(0.9), Exponential(0.8), PolicyConfig.lcfsp(), SETTINGS)
    assert unstable.avg_delay == math.inf
    assert unstable.status == "unstable"
    assert math.isfinite(unstable.avg_age)

    periodic = analytic_point(ArrivalProcess.periodic(0.5), Exponential(0.8), PolicyConfig.lcfsp(), SETTINGS)
    assert periodic.avg_delay is None
    assert periodic.avg_age == pytest.approx(2.25, rel=1e-8)

def test_infinite_server_analytic_point():
    point = analytic_point(ARRIVAL, Deterministic(0.8), PolicyConfig.infinite_server(), SETTINGS)
    assert point.avg_age == pytest.approx(3.25)
    assert point.avg_delay == 1.25
    assert point.delay_var == 0.0
    assert point.age_stderr == 0.0

def test_fcfs_has_no_formula():
    assert analytic_point(ARRIVAL, Exponential(0.8), PolicyConfig.fcfs_single(), SETTINGS) is None
    points = evaluate_point(ARRIVAL, Exponential(0.8), PolicyConfig.fcfs_single(), SETTINGS, simulate=False)
    assert len(points) == 1
    assert points[0].source is Source.SIMULATED
    assert points[0].horizon == 2e4

def test_evaluate_both():
    points = evaluate_point(ARRIVAL, Exponential(0.8), PolicyConfig.lcfsp(), SETTINGS, simulate=True)
    assert [point.source for point in points] == [Source.ANALYTIC, Source.SIMULATED]
    assert points[1].seed == 0
    assert points[1].avg_age == pytest.approx(3.25, rel=0.1)

def test_unstable_fcfs_simulation():
    point = simulated_point(ArrivalProcess.poisson(1.0), Exponential(0.8), PolicyConfig.fcfs_single(), SETTINGS)
    assert point.status == "unstable"

def test_heavy_tail_simulation_is_checked():
    fcfs = simulated_point(ARRIVAL, Pareto(0.8, 1.5), PolicyConfig.fcfs_single(), SETTINGS)
    assert fcfs.status == "non-convergent"
    lcfsp = simulated_point(ARRIVAL, Pareto(0.8, 1.1), PolicyConfig.lcfsp(), SETTINGS)
    assert lcfsp.status == "non-convergent"

def test_light_tail_simulation_is_ok():
    assert simulated_point(ARRIVAL, Exponential(0.8), PolicyConfig.lcfsp(), SETTINGS).status == "ok"

def test_n_jobs_defaults_to_the_cpu_count():
    assert SimSettings().n_jobs == (os.cpu_count() or 1)
    assert SimSettings(n_jobs=1).n_jobs == 1

def test_failed_point_is_kept():
    points = evaluate_point(
        ArrivalProcess.poisson(1.0), Deterministic(1e-3), PolicyConfig.lcfsp(), SETTINGS, simulate=False
    )
    assert len(points) == 1
    assert points[0].status.startswith("error: DegeneratePreemptionError")
    assert points[0].avg_age is None

def test_row_and_objective():
    point = analytic_point(ARRIVAL, Exponential(0.8), PolicyConfig.lcfsp(), SETTINGS)
    row = point.to_row()
    assert list(row) == CSV_COLUMNS
    assert row["policy"] == "lcfsp"
    assert row["lambda"] == 0.5
    assert row["mu"] == 0.8
    assert row["dist_param"] is None
    assert row["source"] == "analytic"
    assert point.objective(0) == point.avg_delay
    assert point.objective(2.0) == pytest.approx(10 / 3 + 6.5)
    assert point.with_status("unstable").status == "unstable"
