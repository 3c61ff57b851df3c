from .discipline import DISCIPLINES, make_discipline
from .discipline_template import DisciplineTemplate
from .fcfs_pool_discipline import FcfsPoolDiscipline
from .infinite_server_discipline import InfiniteServerDiscipline
from .lcfsp_discipline import LcfspDiscipline

__all__ = [
    "DISCIPLINES",
    "make_discipline",
    "DisciplineTemplate",
    "FcfsPoolDiscipline",
    "InfiniteServerDiscipline",
    "LcfspDiscipline",
]
