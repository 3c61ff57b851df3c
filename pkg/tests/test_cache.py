import json
import os

import pytest

from aoi_tradeoff.cache import Cache, resolve_cache_dir
from aoi_tradeoff.distributions import ArrivalProcess, Exponential, Pareto
from aoi_tradeoff.experiments import cached_replications
from aoi_tradeoff.simcore import PolicyConfig, run_replications
from .utils import standard_cache_test

def make_cached(cache_dir, calls, **kwargs):
    @Cache(cache_dir=str(cache_dir), **kwargs)
    def cached_function(a, b=2, n_jobs=1):
        calls.append(a)
        return [a, b]
    return cached_function

def test_load_store(tmp_path):
    calls = []
    result_1, result_2 = standard_cache_test(make_cached(tmp_path, calls), calls)
    assert result_1 == result_2 == [1, 2]

def test_compressed_extension(tmp_path):
    calls = []
    cached_function = make_cached(tmp_path, calls, cache_path="{cache_dir}/{function_name}/{_hash}.json.gz")
    standard_cache_test(cached_function, calls)
    assert Cache.compute_path(cached_function, 1).endswith(".json.gz")
    assert os.path.isfile(Cache.compute_path(cached_function, 1))

def test_defaults_enter_the_hash(tmp_path):
    calls = []
    cached_function = make_cached(tmp_path, calls)
    assert Cache.compute_path(cached_function, 1) == Cache.compute_path(cached_function, 1, b=2)
    assert Cache.compute_path(cached_function, 1) != Cache.compute_path(cached_function, 1, b=3)

def test_ignore_args(tmp_path):
    calls = []
    cached_function = make_cached(tmp_path, calls, args_to_ignore=("n_jobs",))
    standard_cache_test(cached_function, calls, args=((1,), (1,), (2,)), kwargs=({"n_jobs": 1}, {"n_jobs": 8}, {}))

def test_enable_cache_arg_name(tmp_path):
    calls = []
    cached_function = make_cached(tmp_path, calls, enable_cache_arg_name="use_cache")
    cached_function(1)
    cached_function(1)
    assert len(calls) == 1
    cached_function(1, use_cache=False)
    assert len(calls) == 2
    cached_function(1, use_cache=True)
    assert len(calls) == 2

def test_structured_path(tmp_path):
    calls = []
    cached_function = make_cached(tmp_path, calls, cache_path="{cache_dir}/{a}/{b}.json")
    cached_function(3, b=4)
    assert os.path.isfile(os.path.join(str(tmp_path), "3", "4.json"))

def test_metadata(tmp_path):
    calls = []
    cached_function = make_cached(tmp_path, calls)
    cached_function(1)
    with open(Cache.compute_path(cached_function, 1) + ".metadata") as f:
        metadata = json.load(f)
    assert metadata["function_name"] == "cached_function"
    assert metadata["parameters"] == {"a": 1, "b": 2, "n_jobs": 1}
    assert "time_delta_human" in metadata
    assert "file_dump_size_human" in metadata

def test_expired_cache(tmp_path):
    calls = []
    cached_function = make_cached(tmp_path, calls, validity_duration="1d")
    cached_function(1)
    metadata_path = Cache.compute_path(cached_function, 1) + ".metadata"
    with open(metadata_path) as f:
        metadata = json.load(f)
    metadata["creation_time"] = 0
    with open(metadata_path, "w") as f:
        json.dump(metadata, f)
    cached_function(1)
    assert len(calls) == 2

def test_unsupported_extension():
    with pytest.raises(ValueError):
        Cache(cache_path="{cache_dir}/{_hash}.pkl")

def test_compute_path_requires_decorator():
    with pytest.raises(ValueError):
        Cache.compute_path(lambda a: a, 1)

def test_cache_dir_from_environment(monkeypatch):
    monkeypatch.setenv("AOI_CACHE_DIR", "/tmp/aoi")
    assert resolve_cache_dir() == "/tmp/aoi"
    assert resolve_cache_dir("./here") == "./here"
    monkeypatch.delenv("AOI_CACHE_DIR")
    assert resolve_cache_dir() == "./cache"

def test_domain_objects_are_hashed(tmp_path):
    calls = []

    @Cache(cache_dir=str(tmp_path))
    def mean_of(service):
        calls.append(service)
        return service.mean()

    standard_cache_test(mean_of, calls, args=((Pareto(0.8, 1.5),), (Pareto(0.8, 1.5),), (Pareto(0.8, 1.6),)))

def test_cached_replications(tmp_path):
    arrival, service, policy = ArrivalProcess.poisson(0.5), Exponential(0.8), PolicyConfig.lcfsp()
    arguments = (arrival, service, policy, 1e4, 1e3, 2, 0)
    first = cached_replications(*arguments, cache_root=str(tmp_path), use_cache=True)
    path = Cache.compute_path(cached_replications, *arguments, cache_root=str(tmp_path))
    assert os.path.isfile(path)
    assert path.startswith(str(tmp_path))
    second = cached_replications(*arguments, cache_root=str(tmp_path), n_jobs=2, use_cache=True)
    assert first == second == run_replications(arrival, service, policy, 1e4, warmup=1e3, n_reps=2)

def test_source_code_enters_the_hash(tmp_path):
    calls = []
    plain = make_cached(tmp_path, calls)
    with_source = make_cached(tmp_path, calls, use_source_code=True)
    assert Cache.compute_path(plain, 1) != Cache.compute_path(with_source, 1)
    standard_cache_test(with_source, calls)

    @Cache(cache_dir=str(tmp_path), use_source_code=True)
    def cached_function(a, b=2, n_jobs=1):
        calls.append(a)
        return [b, a]

    assert Cache.compute_path(cached_function, 1) != Cache.compute_path(with_source, 1)
    assert cached_function(1) == [2, 1]

def test_approximated_hash(tmp_path):
    calls = []

    @Cache(cache_dir=str(tmp_path), use_approximated_hash=True)
    def mean_of(service):
        calls.append(service)
        return service.mean()

    standard_cache_test(mean_of, calls, args=((Pareto(0.8, 1.5),), (Pareto(0.8, 1.5),), (Pareto(0.8, 1.6),)))
    assert Cache.compute_path(mean_of, Pareto(0.8, 1.5)) != Cache.compute_path(mean_of, Pareto(0.8, 1.6))
