from .discipline_template import DisciplineTemplate
from .fcfs_pool_discipline import FcfsPoolDiscipline
from .infinite_server_discipline import InfiniteServerDiscipline
from .lcfsp_discipline import LcfspDiscipline
from ..policy import PolicyConfig

DISCIPLINES = [
    LcfspDiscipline,
    FcfsPoolDiscipline,
    InfiniteServerDiscipline,
]


def make_discipline(policy: PolicyConfig) -> DisciplineTemplate:
    """Return a fresh discipline state for the given policy."""
    for discipline in DISCIPLINES:
        if discipline.supports(policy):
            return discipline(policy)
    raise ValueError("There is no discipline implementing the policy {}.".format(policy))
