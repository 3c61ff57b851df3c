from dataclasses import replace

import pytest

from aoi_tradeoff.distributions import ArrivalProcess, Exponential
from aoi_tradeoff.exceptions import ReplicationError
from aoi_tradeoff.simcore import (
    ConvergenceReport,
    PolicyConfig,
    SimResult,
    aggregate,
    convergence_check,
    run,
    run_replications,
)
from aoi_tradeoff.utils import replication_seeds

ARRIVAL = ArrivalProcess.poisson(0.5)
SERVICE = Exponential(0.8)

def test_single_replication_reruns_alone():
    single = run_replications(ARRIVAL, SERVICE, PolicyConfig.lcfsp(), 1e4, n_reps=1, base_seed=5)
    alone = run(ARRIVAL, SERVICE, PolicyConfig.lcfsp(), 1e4, seed=replication_seeds(5, 1)[0])
    assert single == replace(alone, seed=5)
    assert single.seed == 5
    assert aggregate([single]) is single

def test_processes_match_sequential():
    sequential = run_replications(ARRIVAL, SERVICE, PolicyConfig.lcfsp(), 1e4, n_reps=3, n_jobs=1)
    parallel = run_replications(ARRIVAL, SERVICE, PolicyConfig.lcfsp(), 1e4, n_reps=3, n_jobs=2)
    assert sequential == parallel

def test_aggregate():
    results = [run(ARRIVAL, SERVICE, PolicyConfig.fcfs_single(), 1e4, seed=seed) for seed in range(3)]
    merged = aggregate(results)
    assert merged.avg_age == pytest.approx(sum(result.avg_age for result in results) / 3)
    assert merged.n_delivered == sum(result.n_delivered for result in results)
    assert merged.n_reps == 3
    assert merged.age_stderr > 0
    assert merged.avg_delay == pytest.approx(
        sum(result.avg_delay * result.n_delivered for result in results) / merged.n_delivered
    )
    with pytest.raises(ValueError):
        aggregate([])

def test_replication_error_carries_seed():
    with pytest.raises(ReplicationError) as error:
        run_replications(ARRIVAL, SERVICE, PolicyConfig.lcfsp(), 1e4, n_reps=2, base_seed=9, max_events=5)
    assert error.value.seed == replication_seeds(9, 2)[0]

def test_neighbouring_base_seeds_share_no_replication():
    first = set(replication_seeds(0, 8))
    second = set(replication_seeds(1, 8))
    assert len(first) == 8
    assert not first & second
    assert replication_seeds(0, 8) == replication_seeds(0, 8)
    assert replication_seeds(0, 4) == replication_seeds(0, 8)[:4]

def test_neighbouring_base_seeds_give_independent_estimates():
    first = run_replications(ARRIVAL, SERVICE, PolicyConfig.lcfsp(), 1e4, n_reps=2, base_seed=0)
    second = run_replications(ARRIVAL, SERVICE, PolicyConfig.lcfsp(), 1e4, n_reps=2, base_seed=1)
    assert first.avg_age != second.avg_age

def _result(avg_delay, delay_var):
    return SimResult(
        avg_age=1.0, avg_delay=avg_delay, delay_var=delay_var, n_delivered=1, n_informative=1,
        age_stderr=0.0, delay_stderr=0.0, horizon=1.0, seed=0, warmup=0.0, n_generated=1,
        n_completed=1, n_in_system=0, age_area=1.0, n_events=2,
    )

def test_convergence_report():
    steady = ConvergenceReport([1.0, 2.0, 4.0], [_result(2.0, 1.0), _result(2.02, 1.01), _result(2.01, 1.0)])
    assert steady.converged
    assert steady.status == "ok"

    drifting = ConvergenceReport([1.0, 2.0, 4.0], [_result(2.0, 1.0), _result(2.02, 3.0), _result(2.01, 9.0)])
    assert drifting.delay_var_moves[0] == pytest.approx(2 / 3)
    assert drifting.status == "non-convergent"

    missing = ConvergenceReport([1.0, 2.0], [_result(None, None), _result(2.0, 1.0)])
    assert not missing.converged

def test_convergence_check_horizons():
    report = convergence_check(ARRIVAL, SERVICE, PolicyConfig.lcfsp(), 1e4, seed=1)
    assert report.horizons == [1e4, 2e4, 4e4]
    assert [result.horizon for result in report.results] == report.horizons
    assert all(result.warmup == 1e3 for result in report.results)

def test_sim_result_round_trip():
    result = run(ARRIVAL, SERVICE, PolicyConfig.lcfsp(), 1e3, seed=0)
    assert SimResult.from_dict(result.to_dict()) == result
