import math
from typing import Callable, Dict, Iterable, Optional

import numpy as np
from dict_hash import Hashable, sha256

from ..exceptions import InadmissibleParameterError

# Samples are saturated into the positive representable range: the heavy
# tailed laws at extreme shapes produce values whose logarithm lies far
# outside it (log-normal with sigma=50 spans about +-25 sigma in log space).
SMALLEST_SAMPLE = np.finfo(float).tiny
LARGEST_SAMPLE = np.finfo(float).max
LOG_SMALLEST_SAMPLE = math.log(SMALLEST_SAMPLE)
LOG_LARGEST_SAMPLE = math.log(LARGEST_SAMPLE)


def saturated_exp(log_values: np.ndarray) -> np.ndarray:
    """exp() of log-space samples clipped into [tiny, max]."""
    return np.exp(np.clip(log_values, LOG_SMALLEST_SAMPLE, LOG_LARGEST_SAMPLE))


class DistributionTemplate(Hashable):
    """Template of a parametric law with mean exactly 1/mu.

    Every kind implements sampling, the CDF and a direct form of the tail, the
    truncated mean E[S 1{S <= x}], the second moment, the quantile function
    and `expect`, the adaptive quadrature of E[h(S)] in the variable that
    makes the kind's support easiest to integrate. The Laplace transform
    falls back on `expect` unless the kind has a closed form.

    Instances are immutable and can be shared between threads.
    """
    KIND = None
    SHAPE_NAME = None
    IS_CONTINUOUS = True

    def __init__(self, mu: float, shape: Optional[float] = None):
        if isinstance(mu, bool) or not isinstance(mu, (int, float)) or not math.isfinite(mu) or mu <= 0:
            raise InadmissibleParameterError(
                "The rate `mu` must be a positive finite number, got {}.".format(mu),
                "mu",
                mu,
            )
        self._mu = float(mu)
        self._shape = self._check_shape(shape)

    def _check_shape(self, shape: Optional[float]) -> Optional[float]:
        """Validate the shape parameter, returning the stored value."""
        if shape is not None:
            raise InadmissibleParameterError(
                "The {} law has no shape parameter, but `shape`={} was given.".format(self.KIND, shape),
                "shape",
                shape,
            )
        return None

    @staticmethod
    def _require_number(shape: Optional[float]) -> float:
        if shape is None or isinstance(shape, bool) or not isinstance(shape, (int, float)) or not math.isfinite(shape):
            raise InadmissibleParameterError(
                "The `shape` must be a finite number, got {}.".format(shape),
                "shape",
                shape,
            )
        return float(shape)

    @property
    def mu(self) -> float:
        return self._mu

    @property
    def shape(self) -> Optional[float]:
        return self._shape

    @property
    def kind(self) -> str:
        return self.KIND

    @property
    def is_continuous(self) -> bool:
        return self.IS_CONTINUOUS

    def mean(self) -> float:
        return 1.0 / self._mu

    def sample(self, rng: np.random.Generator) -> float:
        """One draw from the law."""
        return float(self.sample_many(rng, 1)[0])

    def sample_many(self, rng: np.random.Generator, size: int) -> np.ndarray:
        raise NotImplementedError(
            "This distribution function has to be implemented by its subclass."
        )

    def cdf(self, x: float) -> float:
        raise NotImplementedError(
            "This distribution function has to be implemented by its subclass."
        )

    def tail(self, x: float) -> float:
        """P(S > x), evaluated directly rather than as 1 - cdf(x)."""
        raise NotImplementedError(
            "This distribution function has to be implemented by its subclass."
        )

    def truncated_mean(self, x: float) -> float:
        """E[S 1{S <= x}]."""
        raise NotImplementedError(
            "This distribution function has to be implemented by its subclass."
        )

    def upper_truncated_mean(self, x: float) -> float:
        """E[S 1{S > x}]."""
        return max(self.mean() - self.truncated_mean(x), 0.0)

    def second_moment(self) -> float:
        """E[S^2], `math.inf` when it diverges."""
        raise NotImplementedError(
            "This distribution function has to be implemented by its subclass."
        )

    def variance(self) -> float:
        second_moment = self.second_moment()
        if math.isinf(second_moment):
            return math.inf
        return max(second_moment - self.mean() ** 2, 0.0)

    def quantile(self, p: float) -> float:
        raise NotImplementedError(
            "This distribution function has to be implemented by its subclass."
        )

    def expect(self, function: Callable[[float], float], points: Iterable[float] = ()) -> float:
        """E[function(S)] by adaptive quadrature; `points` are values of S
        where `function` changes abruptly."""
        raise NotImplementedError(
            "This distribution function has to be implemented by its subclass."
        )

    def laplace(self, s: float) -> float:
        """E[exp(-s S)]."""
        if s == 0:
            return 1.0
        return self.expect(lambda value: math.exp(-s * value), points=(1.0 / s,))

    def laplace_complement(self, s: float) -> float:
        """E[1 - exp(-s S)], free of the cancellation of 1 - laplace(s)."""
        if s == 0:
            return 0.0
        return self.expect(lambda value: -math.expm1(-s * value), points=(1.0 / s,))

    @staticmethod
    def tail_lightness(shape: Optional[float]) -> float:
        """Ordering key of the shape parameter: larger means lighter tail."""
        return 0.0

    def to_config(self) -> Dict[str, object]:
        config = {"kind": self.KIND, "mu": self._mu}
        if self._shape is not None:
            config["shape"] = self._shape
        return config

    def consistent_hash(self, use_approximation: bool = False) -> str:
        return sha256(self.to_config(), use_approximation=use_approximation)

    def describe(self) -> str:
        if self._shape is None:
            return "{}(mu={})".format(self.KIND, self._mu)
        return "{}({}={}, mu={})".format(self.KIND, self.SHAPE_NAME, self._shape, self._mu)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DistributionTemplate) and self.to_config() == other.to_config()

    def __hash__(self) -> int:
        return hash((self.KIND, self._mu, self._shape))

    def __repr__(self) -> str:
        return self.describe()
