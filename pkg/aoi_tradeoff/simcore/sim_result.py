from dataclasses import asdict, dataclass
from typing import Dict, Optional

from ..utils import RunningStats


@dataclass(frozen=True)
class SimResult:
    """Estimates of one simulation, or of replications merged by `run_replications`.

    Delays are those of the packets received in [warmup, horizon]; packets
    still in the system at the horizon are censored. The standard errors are
    taken across replications and are 0 for a single run. `avg_delay` and
    `delay_var` are None when no packet was received after warmup.
    """
    avg_age: float
    avg_delay: Optional[float]
    delay_var: Optional[float]
    n_delivered: int
    n_informative: int
    age_stderr: float
    delay_stderr: float
    horizon: float
    seed: int
    warmup: float
    n_generated: int
    n_completed: int
    n_in_system: int
    age_area: float
    n_events: int
    n_reps: int = 1

    @property
    def informative_fraction(self) -> Optional[float]:
        if self.n_delivered == 0:
            return None
        return self.n_informative / self.n_delivered

    def delay_stats(self) -> RunningStats:
        """The pooled delay accumulator behind `avg_delay` and `delay_var`."""
        if self.n_delivered == 0:
            return RunningStats()
        return RunningStats.from_moments(self.n_delivered, self.avg_delay, self.delay_var)

    def to_dict(self) -> Dict[str, object]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "SimResult":
        return cls(**data)
