import math

import pytest

from aoi_tradeoff.analytic import a_min
from aoi_tradeoff.distributions import ArrivalProcess, Deterministic, Exponential, Pareto, Weibull
from aoi_tradeoff.exceptions import EventBudgetExceededError, InadmissibleParameterError
from aoi_tradeoff.simcore import PolicyConfig, Preemption, Simulator, run, run_replications
from .utils import ScriptedSampler

ARRIVAL = ArrivalProcess.poisson(0.5)
POLICIES = [
    PolicyConfig.lcfsp(),
    PolicyConfig.lcfsp(Preemption.RESTART),
    PolicyConfig.fcfs_single(),
    PolicyConfig.fcfs_pool(3),
    PolicyConfig.infinite_server(),
]

def test_mm1_lcfsp():
    result = run_replications(ARRIVAL, Exponential(0.8), PolicyConfig.lcfsp(), 1e5, n_reps=4, base_seed=0)
    assert result.avg_age == pytest.approx(3.25, rel=0.03)
    assert result.avg_delay == pytest.approx(10 / 3, rel=0.05)
    assert result.n_reps == 4
    assert result.age_stderr > 0

def test_mm1_fcfs():
    result = run_replications(ARRIVAL, Exponential(0.8), PolicyConfig.fcfs_single(), 1e5, n_reps=4, base_seed=0)
    assert result.avg_delay == pytest.approx(10 / 3, rel=0.05)
    # (1/mu)(1 + 1/rho + rho^2/(1 - rho))
    assert result.avg_age == pytest.approx(1.25 * (1 + 1.6 + 0.625 ** 2 / 0.375), rel=0.05)

@pytest.mark.parametrize("policy", POLICIES, ids=str)
def test_same_seed_same_result(policy):
    first = run(ARRIVAL, Exponential(0.8), policy, 2e4, seed=7)
    second = run(ARRIVAL, Exponential(0.8), policy, 2e4, seed=7)
    assert first == second
    assert first != run(ARRIVAL, Exponential(0.8), policy, 2e4, seed=8)

@pytest.mark.parametrize("policy", POLICIES, ids=str)
def test_packet_conservation(policy):
    result = run(ARRIVAL, Pareto(0.8, 1.5), policy, 2e4, seed=1)
    assert result.n_generated == result.n_completed + result.n_in_system
    assert result.n_delivered <= result.n_completed
    assert result.n_informative <= result.n_delivered
    assert result.avg_age >= 0
    assert result.age_stderr == 0.0

def test_informative_fraction():
    # a packet is informative exactly when it finishes before the next generation
    service = Exponential(0.8)
    result = run(ARRIVAL, service, PolicyConfig.lcfsp(), 1e5, seed=2)
    assert result.informative_fraction == pytest.approx(service.laplace(0.5), abs=0.01)

def test_fcfs_delivers_in_order():
    result = run(ARRIVAL, Exponential(0.8), PolicyConfig.fcfs_single(), 2e4, seed=3)
    assert result.n_informative == result.n_delivered

def test_infinite_server_delay_is_service_time():
    result = run(ARRIVAL, Deterministic(0.8), PolicyConfig.infinite_server(), 2e4, seed=4)
    assert result.avg_delay == 1.25
    assert result.delay_var == 0.0

def test_common_random_numbers():
    # the same seed feeds the same service times to every policy, so with
    # arrivals much rarer than services the systems behave alike
    arrival = ArrivalProcess.poisson(0.01)
    lcfsp = run(arrival, Deterministic(1e4), PolicyConfig.lcfsp(), 1e5, seed=5)
    fcfs = run(arrival, Deterministic(1e4), PolicyConfig.fcfs_single(), 1e5, seed=5)
    assert lcfsp.avg_age == pytest.approx(fcfs.avg_age, rel=1e-9)
    assert lcfsp.n_generated == fcfs.n_generated

def test_overtaking_packet():
    # packet 0 is generated at 1 with service 3, packet 1 at 1.5 with service 1
    def scripted():
        return ScriptedSampler([1.0, 0.5, 100.0], [3.0, 1.0])

    infinite = Simulator(
        ARRIVAL, Exponential(0.8), PolicyConfig.infinite_server(), 10.0,
        warmup=0.0, sampler=scripted(), record_trace=True
    )
    result = infinite.run()
    assert result.n_completed == 2
    assert result.n_informative == 1
    assert result.avg_delay == pytest.approx(2.0)
    assert infinite.trace == [(0.0, 0.0), (2.5, 2.5), (2.5, 1.0), (10.0, 8.5)]
    assert result.age_area == pytest.approx(38.75)

    resume = run(ARRIVAL, Exponential(0.8), PolicyConfig.lcfsp(), 10.0, warmup=0.0, sampler=scripted())
    assert resume.n_informative == 1
    # the displaced packet finishes at 5.0 after its remaining 2.5
    assert resume.avg_delay == pytest.approx((1.0 + 4.0) / 2)
    assert resume.age_area == pytest.approx(38.75)

    restart = run(
        ARRIVAL, Exponential(0.8), PolicyConfig.lcfsp(Preemption.RESTART), 10.0, warmup=0.0, sampler=scripted()
    )
    assert restart.avg_delay == pytest.approx((1.0 + 4.5) / 2)

def test_warmup_excludes_deliveries():
    sampler = ScriptedSampler([1.0, 0.5, 100.0], [3.0, 1.0])
    result = run(ARRIVAL, Exponential(0.8), PolicyConfig.infinite_server(), 10.0, warmup=3.0, sampler=sampler)
    assert result.n_completed == 2
    assert result.n_delivered == 1
    assert result.avg_delay == pytest.approx(3.0)
    # age 1.5 at t=3 growing to 8.5 at t=10
    assert result.avg_age == pytest.approx((1.5 + 8.5) / 2)

def test_event_budget():
    with pytest.raises(EventBudgetExceededError) as error:
        run(ARRIVAL, Exponential(0.8), PolicyConfig.lcfsp(), 1e4, max_events=10)
    assert error.value.n_events == 11

def test_invalid_horizon():
    with pytest.raises(InadmissibleParameterError):
        run(ARRIVAL, Exponential(0.8), PolicyConfig.lcfsp(), -1.0)
    with pytest.raises(InadmissibleParameterError):
        run(ARRIVAL, Exponential(0.8), PolicyConfig.lcfsp(), 10.0, warmup=10.0)

@pytest.mark.parametrize("service", [Exponential(0.8), Pareto(0.8, 1.5)], ids=repr)
def test_infinite_server_has_the_lowest_age(service):
    infinite = run_replications(ARRIVAL, service, PolicyConfig.infinite_server(), 5e4, n_reps=4, base_seed=2)
    for policy in POLICIES[:-1]:
        other = run_replications(ARRIVAL, service, policy, 5e4, n_reps=4, base_seed=2)
        assert infinite.avg_age <= other.avg_age + 3 * math.hypot(infinite.age_stderr, other.age_stderr)

@pytest.mark.parametrize("policy", [PolicyConfig.lcfsp(), PolicyConfig.fcfs_single()], ids=str)
def test_delay_variance_floor(policy):
    service = Exponential(0.8)
    result = run_replications(ARRIVAL, service, policy, 5e4, n_reps=4, base_seed=3)
    assert result.delay_var >= service.variance()

@pytest.mark.parametrize("policy", POLICIES, ids=str)
def test_age_is_above_the_minimum(policy):
    result = run_replications(ARRIVAL, Weibull(0.8, 0.5), policy, 5e4, n_reps=4, base_seed=4)
    assert result.avg_age >= a_min(ARRIVAL) - 3 * result.age_stderr
