from .logger import log_levels, setup_logger
from .parse_duration import parse_duration
from .quadrature import integrate
from .running_stats import RunningStats
from .seeds import replication_seeds, point_seed, chunk_streams

__all__ = [
    "log_levels",
    "setup_logger",
    "parse_duration",
    "integrate",
    "RunningStats",
    "replication_seeds",
    "point_seed",
    "chunk_streams",
]
