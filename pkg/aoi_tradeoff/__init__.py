"""Age of information against packet delay in update systems.

Closed forms and estimators of the average age and delay of LCFS with
preemption, FCFS and infinite server systems, a discrete event simulator
to check them, and the sweeps that trace how heavier service tails trade
delay for freshness.
"""
import logging

from .__version__ import __version__
from .analytic import a_min, fcfs_mg1_delay, gginf_age, lcfsp_age, mg1_lcfsp_delay
from .cache import Cache
from .distributions import ArrivalProcess, make_distribution
from .experiments import SimSettings, TradeoffPoint, tradeoff_sweep, validate
from .simcore import PolicyConfig, Simulator, age_trace, run, run_replications

logging.getLogger(__name__).addHandler(logging.NullHandler())

__all__ = [
    "__version__",
    "a_min",
    "fcfs_mg1_delay",
    "gginf_age",
    "lcfsp_age",
    "mg1_lcfsp_delay",
    "Cache",
    "ArrivalProcess",
    "make_distribution",
    "SimSettings",
    "TradeoffPoint",
    "tradeoff_sweep",
    "validate",
    "PolicyConfig",
    "Simulator",
    "age_trace",
    "run",
    "run_replications",
]
