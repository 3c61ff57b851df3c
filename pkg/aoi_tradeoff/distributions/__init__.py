from .arrival_process import ArrivalProcess
from .deterministic import Deterministic
from .distribution_template import DistributionTemplate
from .exponential import Exponential
from .log_normal import LogNormal
from .pareto import Pareto
from .service_distribution import (
    DISTRIBUTIONS,
    HEAVY_TAILED_KINDS,
    distribution_from_config,
    make_distribution,
    normalize_kind,
    supported_kinds,
    tail_lightness,
)
from .weibull import MINIMUM_KAPPA, Weibull

__all__ = [
    "ArrivalProcess",
    "Deterministic",
    "DistributionTemplate",
    "Exponential",
    "LogNormal",
    "Pareto",
    "Weibull",
    "DISTRIBUTIONS",
    "HEAVY_TAILED_KINDS",
    "MINIMUM_KAPPA",
    "distribution_from_config",
    "make_distribution",
    "normalize_kind",
    "supported_kinds",
    "tail_lightness",
]
