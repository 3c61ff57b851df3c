import math
from typing import Callable, Iterable, Optional

import numpy as np
from scipy.special import gammainc, gammaln

from ..exceptions import InadmissibleParameterError
from ..utils import integrate
from .distribution_template import DistributionTemplate, LOG_LARGEST_SAMPLE, saturated_exp

# Below this shape the scale beta = [mu Gamma(1 + 1/kappa)]^-1 stops being
# comfortably representable.
MINIMUM_KAPPA = 0.05


class Weibull(DistributionTemplate):
    """Weibull law F(s) = 1 - exp(-(s/beta)^kappa) with
    beta = [mu Gamma(1 + 1/kappa)]^-1; heavier tail as kappa decreases."""
    KIND = "weibull"
    SHAPE_NAME = "kappa"

    def _check_shape(self, shape: Optional[float]) -> float:
        kappa = self._require_number(shape)
        if kappa < MINIMUM_KAPPA:
            raise InadmissibleParameterError(
                "The Weibull `shape` kappa must satisfy kappa >= {}, got {}.".format(MINIMUM_KAPPA, kappa),
                "shape",
                shape,
            )
        return kappa

    @property
    def kappa(self) -> float:
        return self.shape

    @property
    def log_beta(self) -> float:
        return -math.log(self.mu) - float(gammaln(1.0 + 1.0 / self.kappa))

    @property
    def beta(self) -> float:
        return math.exp(self.log_beta)

    def _scaled_power(self, x: float) -> float:
        """(x / beta)^kappa."""
        exponent = self.kappa * (math.log(x) - self.log_beta)
        if exponent > LOG_LARGEST_SAMPLE:
            return math.inf
        return math.exp(exponent)

    def sample_many(self, rng: np.random.Generator, size: int) -> np.ndarray:
        # beta * E^(1/kappa) with E standard exponential, i.e. inverse CDF
        exponentials = np.maximum(rng.standard_exponential(size), np.finfo(float).tiny)
        return saturated_exp(self.log_beta + np.log(exponentials) / self.kappa)

    def cdf(self, x: float) -> float:
        if x <= 0:
            return 0.0
        return -math.expm1(-self._scaled_power(x))

    def tail(self, x: float) -> float:
        if x <= 0:
            return 1.0
        return math.exp(-self._scaled_power(x))

    def truncated_mean(self, x: float) -> float:
        # (1/mu) P(1 + 1/kappa, (x/beta)^kappa) with P the regularized lower incomplete gamma
        if x <= 0:
            return 0.0
        return float(gammainc(1.0 + 1.0 / self.kappa, self._scaled_power(x))) / self.mu

    def second_moment(self) -> float:
        log_second_moment = 2.0 * self.log_beta + float(gammaln(1.0 + 2.0 / self.kappa))
        if log_second_moment > LOG_LARGEST_SAMPLE:
            return math.inf
        return math.exp(log_second_moment)

    def quantile(self, p: float) -> float:
        return math.exp(min(self.log_beta + math.log(-math.log1p(-p)) / self.kappa, LOG_LARGEST_SAMPLE))

    def expect(self, function: Callable[[float], float], points: Iterable[float] = ()) -> float:
        # y = (s / beta)^kappa is standard exponential
        log_beta, kappa = self.log_beta, self.kappa

        def integrand(y: float) -> float:
            weight = math.exp(-y)
            if weight == 0.0 or y == 0.0:
                return 0.0 if weight == 0.0 else weight * function(0.0)
            return weight * function(math.exp(min(log_beta + math.log(y) / kappa, LOG_LARGEST_SAMPLE)))

        breaks = [1.0, 1.0 / kappa] + [
            self._scaled_power(point)
            for point in points
            if point > 0
        ]
        return integrate(integrand, 0.0, math.inf, points=breaks)

    @staticmethod
    def tail_lightness(shape: Optional[float]) -> float:
        return shape
