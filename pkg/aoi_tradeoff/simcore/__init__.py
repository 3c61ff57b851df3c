from .age_integrator import AgeIntegrator
from .disciplines import (
    DisciplineTemplate,
    FcfsPoolDiscipline,
    InfiniteServerDiscipline,
    LcfspDiscipline,
    make_discipline,
)
from .packet import Packet
from .policy import PolicyConfig, PolicyKind, Preemption
from .recursion import recursion_age
from .replications import (
    CONVERGENCE_TOLERANCE,
    ConvergenceReport,
    aggregate,
    convergence_check,
    run_replications,
)
from .sampler import StreamSampler
from .sim_result import SimResult
from .simulator import (
    MAX_EVENTS,
    Simulator,
    age_trace,
    downsample,
    run,
    trace_area,
    write_age_trace,
)

__all__ = [
    "AgeIntegrator",
    "DisciplineTemplate",
    "FcfsPoolDiscipline",
    "InfiniteServerDiscipline",
    "LcfspDiscipline",
    "make_discipline",
    "Packet",
    "PolicyConfig",
    "PolicyKind",
    "Preemption",
    "recursion_age",
    "CONVERGENCE_TOLERANCE",
    "ConvergenceReport",
    "aggregate",
    "convergence_check",
    "run_replications",
    "StreamSampler",
    "SimResult",
    "MAX_EVENTS",
    "Simulator",
    "age_trace",
    "downsample",
    "run",
    "trace_area",
    "write_age_trace",
]
