from .scripted_sampler import ScriptedSampler
from .standard_cache_test import standard_cache_test

__all__ = [
    "ScriptedSampler",
    "standard_cache_test",
]
