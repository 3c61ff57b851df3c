import os
from dataclasses import asdict, dataclass, field
from typing import Dict, Optional

from ..analytic import DEFAULT_N_PATHS


def default_n_jobs() -> int:
    """Every available CPU."""
    return os.cpu_count() or 1


@dataclass(frozen=True)
class SimSettings:
    """How simulated and Monte Carlo values are estimated.

    The defaults keep the standard error of the M/M/1 average age under 1%
    at lambda = 0.5, mu = 0.8.

    Arguments
    ---------
    horizon: float = 2e6,
        Simulated time of each replication.
    warmup: float = 2e5,
        Initial time excluded from the statistics.
    reps: int = 8,
        Replications per point, with seeds spawned from `seed`.
    seed: int = 0,
        Base seed. Sweeps, curves and searches derive one seed per point
        from it with `point_seed`.
    n_paths: int = 10**6,
        Monte Carlo paths of the infinite server min-term.
    n_jobs: int = number of CPUs,
        Worker processes for the replications, threads for the min-term.
        The results do not depend on it.
    simulate: bool = True,
        Whether sweeps add simulated points next to the analytic ones.
    use_cache: bool = False,
        Whether simulated replications are memoised on disk.
    cache_dir: Optional[str] = None,
        The cache directory, by default `AOI_CACHE_DIR` or "./cache".
    convergence_horizon: Optional[float] = None,
        First horizon of the doubling check run on points whose service has
        no finite second moment, by default a quarter of `horizon`.
    """
    horizon: float = 2e6
    warmup: float = 2e5
    reps: int = 8
    seed: int = 0
    n_paths: int = DEFAULT_N_PATHS
    n_jobs: int = field(default_factory=default_n_jobs)
    simulate: bool = True
    use_cache: bool = False
    cache_dir: Optional[str] = None
    convergence_horizon: Optional[float] = None

    @property
    def first_convergence_horizon(self) -> float:
        if self.convergence_horizon is not None:
            return self.convergence_horizon
        return self.horizon / 4.0

    def to_dict(self) -> Dict[str, object]:
        return asdict(self)
