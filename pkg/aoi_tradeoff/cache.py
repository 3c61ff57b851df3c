import os
import json
import inspect
from time import time
from functools import wraps
from datetime import datetime
from typing import Callable, Dict, Optional, Tuple, Union

import humanize
import compress_json

# The python hash is not consistent between runs, so the arguments are hashed
# with dict_hash; domain objects implement its Hashable interface.
from dict_hash import sha256

from .utils import parse_duration, setup_logger
from .utils.logger import DEFAULT_LOG_FORMAT

DEFAULT_CACHE_DIR = "./cache"
SUPPORTED_EXTENSIONS = (".json", ".json.gz", ".json.bz", ".json.lzma")


def resolve_cache_dir(cache_dir: Optional[str] = None) -> str:
    """The given directory, else the `AOI_CACHE_DIR` environment variable,
    else "./cache"."""
    return cache_dir or os.environ.get("AOI_CACHE_DIR", DEFAULT_CACHE_DIR)


def _identity(value):
    return value


class Cache:
    def __init__(
        self,
        cache_path: str = "{cache_dir}/{function_name}/{_hash}.json",
        args_to_ignore: Tuple[str] = (),
        cache_dir: Optional[str] = None,
        validity_duration: Union[int, str, None] = -1,
        use_source_code: bool = False,
        use_approximated_hash: bool = False,
        log_level: str = "critical",
        log_format: str = DEFAULT_LOG_FORMAT,
        encode: Callable = _identity,
        decode: Callable = _identity,
        enable_cache_arg_name: Optional[str] = None,
    ):
        """
        Cache the JSON serializable results of a function.

        Example:
        ```
        from aoi_tradeoff.cache import Cache
        @Cache(encode=SimResult.to_dict, decode=SimResult.from_dict)
        def simulate(arrival, service, policy, horizon, seed):
            ...
        ```

        Arguments
        ---------
        cache_path: str = "{cache_dir}/{function_name}/{_hash}.json",
            Where to save the caches. It's a string format and the available
            variables are `cache_dir`, `function_name`, `_hash`, the hash of
            the arguments (excluded the ignored ones), and any argument
            passed to the function. The extension chooses the compression:
            `.json .json.gz .json.bz .json.lzma`.
        args_to_ignore: Tuple[str] = (),
            Which arguments to ignore when computing the hash.
        cache_dir: str = None,
            The folder where to save the caches. If not specified it reads the
            environment variable `AOI_CACHE_DIR`, and if even this is empty
            it defaults to "./cache".
        validity_duration: Union[int, str, None] = -1,
            If not negative nor None, a cache older than this is recomputed.
            The value is in seconds or a string of `\\d+[smhdw]` tokens such
            as `12h` or `1d12h`.
        use_source_code: bool = False,
            Whether the source code of the function enters the hash, so that
            editing the function invalidates its caches.
        use_approximated_hash: bool = False,
            Forwarded to dict_hash: hash only part of big arguments.
        log_level: str = "critical",
            The level of the logger `aoi_tradeoff.cache.<function name>`.
        log_format: str,
            Formatting of the stderr handler of that logger.
        encode: Callable = identity,
            Converts the result into a JSON serializable object.
        decode: Callable = identity,
            Inverse of `encode`, applied to loaded caches.
        enable_cache_arg_name: Optional[str] = None,
            Name of a boolean keyword argument that enables or disables the
            cache for one call. It is captured, not passed to the function,
            and never enters the hash. Caching is on when it is not passed.
        """
        if not any(cache_path.endswith(extension) for extension in SUPPORTED_EXTENSIONS):
            raise ValueError((
                "There is no serializer that can support the path '{}'. "
                "The available extensions are '{}'."
            ).format(cache_path, SUPPORTED_EXTENSIONS))
        self.cache_path = cache_path
        self.args_to_ignore = list(args_to_ignore)
        self.cache_dir = resolve_cache_dir(cache_dir)
        self.validity_duration = parse_duration(validity_duration)
        self.use_source_code = use_source_code
        self.use_approximated_hash = use_approximated_hash
        self.log_level = log_level
        self.log_format = log_format
        self.encode = encode
        self.decode = decode
        self.enable_cache_arg_name = enable_cache_arg_name

    @staticmethod
    def compute_path(function: Callable, *args, **kwargs) -> str:
        """Return the path the cache of `function` called with the given
        arguments would have."""
        if not hasattr(function, "__cacher_instance"):
            raise ValueError("You cannot compute the path of a function which is not decorated with the Cache decorator.")
        instance = getattr(function, "__cacher_instance")
        return instance._get_formatted_path(instance._get_params(args, kwargs))

    def _get_params(self, args, kwargs) -> Dict[str, object]:
        """Every argument by name, defaults included, without the ignored ones."""
        bound = self.signature.bind(*args, **kwargs)
        bound.apply_defaults()
        params = dict(bound.arguments)
        for arg in self.args_to_ignore:
            params.pop(arg, None)
        return params

    def _get_formatted_path(self, params: Dict[str, object]) -> str:
        format_args = {
            **params,
            "function_name": self.function_info["function_name"],
            "cache_dir": self.cache_dir,
        }
        if "{_hash}" in self.cache_path:
            data = {"params": params, "function_info": self.function_info}
            format_args["_hash"] = sha256(data, use_approximation=self.use_approximated_hash)
        path = self.cache_path.format(**format_args)
        self.logger.debug("Calculated path %s", path)
        return path

    def _get_metadata_path(self, path: str) -> str:
        return path + ".metadata"

    def _is_cache_enabled(self, kwargs) -> Tuple[bool, dict]:
        if self.enable_cache_arg_name is None or self.enable_cache_arg_name not in kwargs:
            return True, kwargs
        kwargs = dict(kwargs)
        return bool(kwargs.pop(self.enable_cache_arg_name)), kwargs

    def _load(self, path: str):
        if not os.path.isfile(path):
            self.logger.info("The cache at path '%s' does not exists.", path)
            return None

        metadata_path = self._get_metadata_path(path)
        if os.path.isfile(metadata_path):
            with open(metadata_path, "r") as f:
                metadata = json.load(f)
        else:
            self.logger.info("The metadata file at '%s' do not exists.", metadata_path)
            metadata = {}

        if self.validity_duration is not None:
            elapsed_time = time() - metadata.get("creation_time", float("-inf"))
            if elapsed_time > self.validity_duration:
                self.logger.info("The cache at '%s' expired.", path)
                try:
                    os.remove(path)
                except OSError:
                    pass
                return None

        self.logger.info("Loading cache from %s", path)
        return self.decode(compress_json.load(path))

    def _dump(self, params: Dict[str, object], result, path: str, start_time: float, end_time: float):
        self.logger.info("Saving the cache at %s", path)
        dirname = os.path.dirname(path)
        if dirname != "":
            os.makedirs(dirname, exist_ok=True)
        dump_start_time = time()
        compress_json.dump(self.encode(result), path)
        dump_end_time = time()

        metadata = {
            "creation_time": start_time,
            "creation_time_human": datetime.fromtimestamp(start_time).strftime("%Y-%m-%d %H:%M:%S"),
            "time_delta": end_time - start_time,
            "time_delta_human": humanize.precisedelta(end_time - start_time),
            "file_dump_time": dump_end_time - dump_start_time,
            "file_dump_time_human": humanize.precisedelta(dump_end_time - dump_start_time),
            "file_dump_size": os.path.getsize(path),
            "file_dump_size_human": humanize.naturalsize(os.path.getsize(path)),
            "function_name": self.function_info["function_name"],
            "args_to_ignore": self.args_to_ignore,
            "parameters": {
                key: value.to_config() if hasattr(value, "to_config") else value
                for key, value in params.items()
                if _is_json_serializable(value) or hasattr(value, "to_config")
            },
        }

        metadata_path = self._get_metadata_path(path)
        self.logger.info("Saving the cache meta-data at %s", metadata_path)
        with open(metadata_path, "w") as f:
            json.dump(metadata, f, indent=4)

    def decorate(self, function: Callable) -> Callable:
        self.signature = inspect.signature(function)
        self.function_info = {
            "function_name": function.__name__,
            "args_to_ignore": self.args_to_ignore,
        }
        if self.use_source_code:
            self.function_info["source"] = "".join(inspect.getsourcelines(function)[0])

        @wraps(function)
        def wrapped(*args, **kwargs):
            cache_enabled, kwargs = self._is_cache_enabled(kwargs)
            if not cache_enabled:
                self.logger.info("The cache is disabled")
                return function(*args, **kwargs)

            params = self._get_params(args, kwargs)
            path = self._get_formatted_path(params)

            result = self._load(path)
            if result is not None:
                return result

            self.logger.info("Computing the result of %s", self.function_info["function_name"])
            start_time = time()
            result = function(*args, **kwargs)
            end_time = time()

            self._dump(params, result, path, start_time, end_time)
            return result

        setattr(wrapped, "__cached_function", function)
        setattr(wrapped, "__cacher_instance", self)
        return wrapped

    def __call__(self, function: Callable) -> Callable:
        self.logger = setup_logger(
            __name__ + "." + function.__name__,
            self.log_level,
            self.log_format,
        )
        return self.decorate(function)


def _is_json_serializable(value) -> bool:
    try:
        json.dumps(value)
        return True
    except (TypeError, ValueError):
        return False
