import math

import pytest

from aoi_tradeoff.analytic import a_min, lcfsp_age, lcfsp_age_alternate
from aoi_tradeoff.distributions import ArrivalProcess, Deterministic, Exponential, LogNormal, Pareto, Weibull
from aoi_tradeoff.exceptions import DegeneratePreemptionError

ARRIVAL = ArrivalProcess.poisson(0.5)

def test_minimum_age():
    assert a_min(ARRIVAL) == pytest.approx(2.0)
    assert a_min(ArrivalProcess.periodic(0.5)) == pytest.approx(1.0)
    assert a_min(ArrivalProcess(Pareto(0.5, 1.5))) == math.inf

def test_mm1():
    assert lcfsp_age(ARRIVAL, Exponential(0.8)) == pytest.approx(3.25, rel=1e-12)

def test_md1():
    assert lcfsp_age(ARRIVAL, Deterministic(0.8)) == pytest.approx(2 * math.exp(0.625), rel=1e-12)

def test_dm1():
    # with periodic generation every 2 and exponential service the age is 1/(2 lambda) + 1/mu
    assert lcfsp_age(ArrivalProcess.periodic(0.5), Exponential(0.8)) == pytest.approx(2.25, rel=1e-8)

def test_alternate_form_disagrees():
    assert lcfsp_age_alternate(ARRIVAL, Exponential(0.8)) == pytest.approx(2.03125, rel=1e-12)

@pytest.mark.parametrize("service", [
    Exponential(0.8),
    Pareto(0.8, 1.5),
    LogNormal(0.8, 1.0),
    Weibull(0.8, 0.5),
    Deterministic(0.8),
], ids=repr)
def test_quadrature_matches_laplace(service):
    assert lcfsp_age(ARRIVAL, service, method="quadrature") == pytest.approx(
        lcfsp_age(ARRIVAL, service), rel=1e-6
    )

@pytest.mark.parametrize("service", [
    Pareto(0.8, 1.001),
    LogNormal(0.8, 50.0),
    Weibull(0.8, 0.05),
], ids=repr)
def test_heavy_tail_limit(service):
    age = lcfsp_age(ARRIVAL, service)
    assert age >= a_min(ARRIVAL)
    assert abs(age - 2.0) < 0.1

@pytest.mark.parametrize("family, shapes", [
    ("pareto", [Pareto(0.8, alpha) for alpha in (3.0, 1.5, 1.1, 1.01)]),
    ("lognormal", [LogNormal(0.8, sigma) for sigma in (0.5, 1.0, 2.0, 4.0)]),
    ("weibull", [Weibull(0.8, kappa) for kappa in (1.0, 0.5, 0.2, 0.1)]),
])
def test_heavier_tails_are_fresher(family, shapes):
    ages = [lcfsp_age(ARRIVAL, service) for service in shapes]
    assert all(later < earlier for earlier, later in zip(ages[:-1], ages[1:]))
    # the point mass with the same mean is the worst case
    worst = lcfsp_age(ARRIVAL, Deterministic(0.8))
    assert all(age <= worst for age in ages)

def test_degenerate_preemption():
    with pytest.raises(DegeneratePreemptionError) as error:
        lcfsp_age(ArrivalProcess.poisson(1.0), Deterministic(1e-3))
    assert error.value.probability == 0.0

def test_unknown_method():
    with pytest.raises(ValueError):
        lcfsp_age(ARRIVAL, Exponential(0.8), method="simpson")
