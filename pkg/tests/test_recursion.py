import pytest

from aoi_tradeoff.analytic import lcfsp_age
from aoi_tradeoff.distributions import ArrivalProcess, Deterministic, Exponential, Pareto
from aoi_tradeoff.simcore import PolicyConfig, recursion_age, run

ARRIVAL = ArrivalProcess.poisson(0.5)

@pytest.mark.parametrize("service", [Exponential(0.8), Deterministic(0.8), Pareto(0.8, 1.5)], ids=repr)
def test_recursion_matches_formula(service):
    assert recursion_age(ARRIVAL, service, n_packets=400000, seed=0) == pytest.approx(
        lcfsp_age(ARRIVAL, service), rel=0.02
    )

def test_periodic_generation():
    # every packet finishes before the next one: the age is 1/(2 lambda) + 1/mu
    age = recursion_age(ArrivalProcess.periodic(0.5), Deterministic(2.0), n_packets=1000)
    assert age == pytest.approx(1.0 + 0.5, rel=1e-3)

def test_deterministic_in_seed():
    assert recursion_age(ARRIVAL, Exponential(0.8), n_packets=1000, seed=3) == \
        recursion_age(ARRIVAL, Exponential(0.8), n_packets=1000, seed=3)
    with pytest.raises(ValueError):
        recursion_age(ARRIVAL, Exponential(0.8), n_packets=0)

@pytest.mark.parametrize("service", [Exponential(0.8), Pareto(0.8, 1.5)], ids=repr)
@pytest.mark.parametrize("seed", [0, 1])
def test_recursion_matches_event_simulation(service, seed):
    # 2e5 time units at rate 0.5 draw about as many packets as the recursion
    simulated = run(ARRIVAL, service, PolicyConfig.lcfsp(), 2e5, warmup=0.0, seed=seed)
    assert recursion_age(ARRIVAL, service, n_packets=100000, seed=seed) == pytest.approx(simulated.avg_age, rel=0.01)
