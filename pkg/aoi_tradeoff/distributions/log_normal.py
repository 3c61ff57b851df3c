import math
from typing import Callable, Iterable, Optional

import numpy as np
from scipy.special import ndtr, ndtri

from ..exceptions import InadmissibleParameterError
from ..utils import integrate
from .distribution_template import DistributionTemplate, LOG_LARGEST_SAMPLE, saturated_exp

_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)


class LogNormal(DistributionTemplate):
    """S = exp(-log(mu) - sigma^2/2 + sigma N) with N standard normal.

    Everything is evaluated in log space: at sigma = 50 the location is about
    -1250 and the probabilities involved sit 25 standard deviations out."""
    KIND = "lognormal"
    SHAPE_NAME = "sigma"

    def _check_shape(self, shape: Optional[float]) -> float:
        sigma = self._require_number(shape)
        if sigma <= 0:
            raise InadmissibleParameterError(
                "The log-normal `shape` sigma must be positive, got {}.".format(sigma),
                "shape",
                shape,
            )
        return sigma

    @property
    def sigma(self) -> float:
        return self.shape

    @property
    def location(self) -> float:
        return -math.log(self.mu) - self.sigma ** 2 / 2.0

    def _standardize(self, x: float) -> float:
        return math.log(x * self.mu) / self.sigma + self.sigma / 2.0

    def sample_many(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return saturated_exp(self.location + self.sigma * rng.standard_normal(size))

    def cdf(self, x: float) -> float:
        if x <= 0:
            return 0.0
        return float(ndtr(self._standardize(x)))

    def tail(self, x: float) -> float:
        if x <= 0:
            return 1.0
        return float(ndtr(-self._standardize(x)))

    def truncated_mean(self, x: float) -> float:
        if x <= 0:
            return 0.0
        return float(ndtr(math.log(x * self.mu) / self.sigma - self.sigma / 2.0)) / self.mu

    def upper_truncated_mean(self, x: float) -> float:
        if x <= 0:
            return self.mean()
        return float(ndtr(-math.log(x * self.mu) / self.sigma + self.sigma / 2.0)) / self.mu

    def second_moment(self) -> float:
        log_second_moment = self.sigma ** 2 - 2.0 * math.log(self.mu)
        if log_second_moment > LOG_LARGEST_SAMPLE:
            return math.inf
        return math.exp(log_second_moment)

    def quantile(self, p: float) -> float:
        return math.exp(min(self.location + self.sigma * float(ndtri(p)), LOG_LARGEST_SAMPLE))

    def expect(self, function: Callable[[float], float], points: Iterable[float] = ()) -> float:
        location, sigma = self.location, self.sigma

        def integrand(z: float) -> float:
            density = _INV_SQRT_2PI * math.exp(-0.5 * z * z)
            if density == 0.0:
                return 0.0
            return density * function(math.exp(min(location + sigma * z, LOG_LARGEST_SAMPLE)))

        # the bulk of the density and the bulk of the mean sit at z=0 and z=sigma
        breaks = [0.0, sigma] + [
            (math.log(point) - location) / sigma
            for point in points
            if point > 0
        ]
        return integrate(integrand, -math.inf, math.inf, points=breaks)

    @staticmethod
    def tail_lightness(shape: Optional[float]) -> float:
        return -shape
