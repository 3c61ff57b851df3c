from dataclasses import dataclass, replace
from enum import Enum
from typing import Dict, Optional

from ..distributions import ArrivalProcess, DistributionTemplate
from ..simcore import PolicyConfig

CSV_COLUMNS = [
    "policy",
    "dist_kind",
    "dist_param",
    "lambda",
    "mu",
    "avg_age",
    "age_stderr",
    "avg_delay",
    "delay_stderr",
    "delay_var",
    "source",
    "seed",
    "horizon",
    "status",
]

OK = "ok"
NON_CONVERGENT = "non-convergent"
UNSTABLE = "unstable"


class Source(Enum):
    ANALYTIC = "analytic"
    SIMULATED = "simulated"


@dataclass(frozen=True)
class TradeoffPoint:
    """One (average age, delay, delay variance) point of a policy and a
    service law.

    Divergent values are `math.inf`, unavailable ones None. For analytic
    points of the single server the delay variance is the service time
    variance, a lower bound. `status` is "ok", "non-convergent", "unstable"
    or the error that prevented the evaluation.
    """
    policy: PolicyConfig
    dist: DistributionTemplate
    arrival: ArrivalProcess
    avg_age: Optional[float]
    avg_delay: Optional[float]
    delay_var: Optional[float]
    source: Source
    age_stderr: Optional[float] = None
    delay_stderr: Optional[float] = None
    seed: Optional[int] = None
    horizon: Optional[float] = None
    status: str = OK

    def with_status(self, status: str) -> "TradeoffPoint":
        return replace(self, status=status)

    def objective(self, nu: float) -> Optional[float]:
        """avg_delay + nu * avg_age, None when either is missing."""
        if self.avg_delay is None or self.avg_age is None:
            return None
        if nu == 0:
            return self.avg_delay
        return self.avg_delay + nu * self.avg_age

    def to_row(self) -> Dict[str, object]:
        return {
            "policy": self.policy.label,
            "dist_kind": self.dist.kind,
            "dist_param": self.dist.shape,
            "lambda": self.arrival.rate,
            "mu": self.dist.mu,
            "avg_age": self.avg_age,
            "age_stderr": self.age_stderr,
            "avg_delay": self.avg_delay,
            "delay_stderr": self.delay_stderr,
            "delay_var": self.delay_var,
            "source": self.source.value,
            "seed": self.seed,
            "horizon": self.horizon,
            "status": self.status,
        }
