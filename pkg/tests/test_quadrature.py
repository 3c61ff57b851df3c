import math
import pytest
from aoi_tradeoff.exceptions import QuadratureError
from aoi_tradeoff.utils import integrate
from aoi_tradeoff.utils.quadrature import ACCEPTED_ERROR

def test_finite_interval():
    assert integrate(lambda x: x * x, 0.0, 3.0) == pytest.approx(9.0, rel=1e-12)

def test_infinite_interval():
    assert integrate(lambda x: math.exp(-x), 0.0, math.inf) == pytest.approx(1.0, rel=1e-10)
    assert integrate(lambda x: math.exp(-x * x), -math.inf, math.inf) == pytest.approx(math.sqrt(math.pi), rel=1e-10)

def test_breakpoints_on_a_jump():
    step = lambda x: 1.0 if x < 1.0 else 0.0
    assert integrate(step, 0.0, 5.0, points=(1.0,)) == pytest.approx(1.0, abs=1e-12)
    # points outside the interval are ignored
    assert integrate(step, 0.0, 5.0, points=(1.0, -3.0, 10.0, math.inf)) == pytest.approx(1.0, abs=1e-12)

def test_divergent_integral_raises():
    with pytest.raises(QuadratureError) as error:
        integrate(lambda x: 1.0 / x, 0.0, 1.0)
    assert error.value.abserr > ACCEPTED_ERROR * max(1.0, abs(error.value.value))
