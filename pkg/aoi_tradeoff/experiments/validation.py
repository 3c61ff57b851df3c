import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional

from ..analytic import (
    a_min,
    fcfs_mg1_delay,
    gginf_age,
    lcfsp_age,
    lcfsp_age_alternate,
    lcfsp_resume_delay,
    mg1_lcfsp_delay,
)
from ..distributions import ArrivalProcess, DistributionTemplate, Exponential
from ..exceptions import AoiTradeoffException
from ..simcore import PolicyConfig, PolicyKind, Preemption
from .points import simulate_replications
from .sim_settings import SimSettings

logger = logging.getLogger(__name__)

RELATIVE_TOLERANCE = 0.01
STDERR_MULTIPLIER = 3.0


@dataclass(frozen=True)
class ValidationRow:
    """An analytic value against its simulated estimate.

    A row passes when |analytic - simulated| <= max(3 stderr, 1% of the
    analytic value). A lower bound row passes when the simulated value is
    not below the analytic one by more than the tolerance. Informational
    rows are reported and never fail.
    """
    quantity: str
    analytic: Optional[float]
    simulated: Optional[float]
    stderr: float = 0.0
    informational: bool = False
    note: str = ""
    lower_bound: bool = False

    @property
    def tolerance(self) -> float:
        if self.analytic is None or not math.isfinite(self.analytic):
            return math.inf
        return max(STDERR_MULTIPLIER * self.stderr, RELATIVE_TOLERANCE * abs(self.analytic))

    @property
    def passed(self) -> Optional[bool]:
        if self.informational:
            return None
        if self.analytic is None or self.simulated is None:
            return False
        if not math.isfinite(self.analytic):
            return False
        if self.lower_bound:
            return self.simulated >= self.analytic - self.tolerance
        return abs(self.analytic - self.simulated) <= self.tolerance


@dataclass
class ValidationReport:
    arrival: ArrivalProcess
    service: DistributionTemplate
    policy: PolicyConfig
    settings: SimSettings
    rows: List[ValidationRow] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows if not row.informational)

    def to_text(self) -> str:
        """Plain text rendering, one line per row."""
        def number(value: Optional[float]) -> str:
            return "-" if value is None else "{:.6g}".format(value)

        lines = [
            "Validation of {} with {} and {}".format(self.policy.label, self.arrival, self.service),
            "horizon {}, warmup {}, {} replications, seed {}".format(
                self.settings.horizon, self.settings.warmup, self.settings.reps, self.settings.seed
            ),
            "",
            "{:<28} {:>14} {:>14} {:>12} {:>12}  {}".format(
                "quantity", "analytic", "simulated", "stderr", "tolerance", "result"
            ),
        ]
        for row in self.rows:
            result = "info" if row.informational else ("pass" if row.passed else "FAIL")
            line = "{:<28} {:>14} {:>14} {:>12} {:>12}  {}".format(
                row.quantity,
                number(row.analytic),
                number(row.simulated),
                number(row.stderr),
                number(row.tolerance) if not row.informational else "-",
                result,
            )
            if row.note:
                line += "  ({})".format(row.note)
            lines.append(line)
        lines.append("")
        lines.append("PASSED" if self.passed else "FAILED")
        return "\n".join(lines) + "\n"


def _try(function, *args):
    try:
        return function(*args), ""
    except AoiTradeoffException as error:
        return None, "{}: {}".format(error.__class__.__name__, error)


def validate(
    arrival: ArrivalProcess,
    service: DistributionTemplate,
    policy: PolicyConfig,
    settings: SimSettings = SimSettings(),
) -> ValidationReport:
    """Compare every formula that applies to the configuration with a
    simulation of it.

    Failures of the formulas or of the comparison are report content, not
    exceptions. The competing M/G/1 age expression E[S] / P(S < X) is
    reported as an informational row next to the age formula.
    """
    report = ValidationReport(arrival, service, policy, settings)
    result = simulate_replications(arrival, service, policy, settings)
    rows = report.rows

    bound = a_min(arrival)
    rows.append(ValidationRow(
        "minimum age bound",
        bound,
        result.avg_age,
        result.age_stderr,
        informational=not math.isfinite(bound),
        note="the simulated age must not be below it",
        lower_bound=True,
    ))

    if policy.kind is PolicyKind.LCFSP_SINGLE:
        age, note = _try(lcfsp_age, arrival, service)
        rows.append(ValidationRow("average age", age, result.avg_age, result.age_stderr, note=note))
        alternate, note = _try(lcfsp_age_alternate, arrival, service)
        rows.append(ValidationRow(
            "average age, E[S]/P(S<X)",
            alternate,
            result.avg_age,
            result.age_stderr,
            informational=True,
            note=note or "competing closed form",
        ))
        if arrival.is_poisson:
            delay, note = _try(mg1_lcfsp_delay, arrival, service)
            exponential = isinstance(service, Exponential)
            rows.append(ValidationRow(
                "average delay, P-K",
                delay,
                result.avg_delay,
                result.delay_stderr,
                informational=not exponential,
                note=note or ("" if exponential else "matches the simulation only for exponential service"),
            ))
            if policy.preemption is Preemption.RESUME:
                delay, note = _try(lcfsp_resume_delay, arrival, service)
                rows.append(ValidationRow(
                    "average delay, busy period",
                    delay,
                    result.avg_delay,
                    result.delay_stderr,
                    informational=math.isinf(service.second_moment()),
                    note=note,
                ))
    elif policy.kind is PolicyKind.INFINITE_SERVER:
        age, estimate = gginf_age(arrival, service, n_paths=settings.n_paths, seed=settings.seed, n_jobs=settings.n_jobs)
        rows.append(ValidationRow(
            "average age",
            age,
            result.avg_age,
            math.hypot(result.age_stderr, estimate.std_error),
        ))
        rows.append(ValidationRow("average delay", service.mean(), result.avg_delay, result.delay_stderr))
        rows.append(ValidationRow("delay variance", service.variance(), result.delay_var))
    elif policy.n_servers == 1 and arrival.is_poisson:
        delay, note = _try(fcfs_mg1_delay, arrival, service)
        rows.append(ValidationRow("average delay, P-K", delay, result.avg_delay, result.delay_stderr, note=note))
    else:
        rows.append(ValidationRow(
            "average delay",
            None,
            result.avg_delay,
            result.delay_stderr,
            informational=True,
            note="no closed form for this policy",
        ))

    logger.info("Validation of %s with %s: %s", policy.label, service, "passed" if report.passed else "failed")
    return report
