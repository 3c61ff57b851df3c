import math
from typing import Iterable

import numpy as np


class RunningStats:
    """Numerically stable one-pass mean and variance (Welford), with the
    pairwise merge of Chan et al. so partial accumulators built on different
    replications or Monte Carlo chunks can be combined in any grouping."""

    __slots__ = ("count", "mean", "m2")

    def __init__(self, count: int = 0, mean: float = 0.0, m2: float = 0.0):
        self.count = count
        self.mean = mean
        self.m2 = m2

    @classmethod
    def from_array(cls, values: np.ndarray) -> "RunningStats":
        values = np.asarray(values, dtype=float)
        if values.size == 0:
            return cls()
        mean = float(values.mean())
        return cls(int(values.size), mean, float(np.sum((values - mean) ** 2)))

    @classmethod
    def from_moments(cls, count: int, mean: float, variance: float) -> "RunningStats":
        """Rebuild an accumulator from a sample mean and an (ddof=1) variance."""
        if count == 0:
            return cls()
        return cls(count, mean, variance * max(count - 1, 0))

    def push(self, value: float):
        self.count += 1
        delta = value - self.mean
        self.mean += delta / self.count
        self.m2 += delta * (value - self.mean)

    def extend(self, values: Iterable[float]):
        for value in values:
            self.push(value)

    def merge(self, other: "RunningStats") -> "RunningStats":
        """Return a new accumulator holding both samples."""
        if other.count == 0:
            return RunningStats(self.count, self.mean, self.m2)
        if self.count == 0:
            return RunningStats(other.count, other.mean, other.m2)
        count = self.count + other.count
        delta = other.mean - self.mean
        mean = self.mean + delta * other.count / count
        m2 = self.m2 + other.m2 + delta * delta * self.count * other.count / count
        return RunningStats(count, mean, m2)

    @property
    def variance(self) -> float:
        if self.count < 2:
            return 0.0
        return self.m2 / (self.count - 1)

    @property
    def std_error(self) -> float:
        if self.count < 2:
            return 0.0
        return math.sqrt(self.variance / self.count)

    def __repr__(self) -> str:
        return "RunningStats(count={}, mean={}, variance={})".format(
            self.count, self.mean, self.variance
        )
