from typing import Dict, List, Optional

from ..exceptions import InadmissibleParameterError
from .deterministic import Deterministic
from .distribution_template import DistributionTemplate
from .exponential import Exponential
from .log_normal import LogNormal
from .pareto import Pareto
from .weibull import Weibull

DISTRIBUTIONS = {
    distribution.KIND: distribution
    for distribution in [
        Deterministic,
        Exponential,
        Pareto,
        LogNormal,
        Weibull,
    ]
}

# Kinds whose tail gets heavier along a shape sequence.
HEAVY_TAILED_KINDS = [Pareto.KIND, LogNormal.KIND, Weibull.KIND]

_ALIASES = {
    "log_normal": LogNormal.KIND,
    "log-normal": LogNormal.KIND,
    "lognorm": LogNormal.KIND,
    "exp": Exponential.KIND,
    "det": Deterministic.KIND,
    "constant": Deterministic.KIND,
}


def supported_kinds() -> List[str]:
    return list(DISTRIBUTIONS)


def normalize_kind(kind: str) -> str:
    """Return the canonical name of the given kind, raising on unknown ones."""
    if not isinstance(kind, str):
        raise InadmissibleParameterError(
            "The distribution `kind` must be a string, got {}.".format(kind),
            "kind",
            kind,
        )
    canonical = _ALIASES.get(kind.lower(), kind.lower())
    if canonical not in DISTRIBUTIONS:
        raise InadmissibleParameterError(
            "Unknown distribution `kind` {}, the supported ones are {}.".format(
                kind, ", ".join(DISTRIBUTIONS)
            ),
            "kind",
            kind,
        )
    return canonical


def distribution_class(kind: str):
    return DISTRIBUTIONS[normalize_kind(kind)]


def make_distribution(kind: str, mu: float, shape: Optional[float] = None) -> DistributionTemplate:
    """Build the distribution of the given kind with mean 1/mu.

    Arguments
    ---------
    kind: str,
        One of deterministic, exponential, pareto, lognormal, weibull.
    mu: float,
        The rate, the mean of the law is 1/mu.
    shape: Optional[float] = None,
        Alpha for Pareto, sigma for log-normal, kappa for Weibull; must be
        omitted for the deterministic and exponential kinds.

    Raises
    ------
    InadmissibleParameterError,
        When the kind is unknown or the parameters are outside of the
        admissible region of the kind.
    """
    return distribution_class(kind)(mu, shape)


def distribution_from_config(config: Dict[str, object]) -> DistributionTemplate:
    """Build a distribution from a `{kind, mu, shape?}` mapping."""
    if not isinstance(config, dict):
        raise InadmissibleParameterError(
            "A distribution must be described by a mapping, got {}.".format(config),
            "kind",
            config,
        )
    unknown = set(config) - {"kind", "mu", "shape"}
    if unknown:
        field = sorted(unknown)[0]
        raise InadmissibleParameterError(
            "Unknown distribution key `{}`.".format(field),
            field,
            config[field],
        )
    if "kind" not in config:
        raise InadmissibleParameterError("Missing distribution `kind`.", "kind", None)
    if "mu" not in config:
        raise InadmissibleParameterError("Missing distribution rate `mu`.", "mu", None)
    return make_distribution(config["kind"], config["mu"], config.get("shape"))


def tail_lightness(kind: str, shape: Optional[float]) -> float:
    """Ordering key over the shapes of one kind: larger is lighter tailed."""
    return distribution_class(kind).tail_lightness(shape)
