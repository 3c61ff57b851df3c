import re
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Union

from dict_hash import Hashable, sha256

from ..exceptions import ConfigError


class PolicyKind(Enum):
    LCFSP_SINGLE = "lcfsp"
    FCFS_POOL = "fcfs_pool"
    INFINITE_SERVER = "infinite"


class Preemption(Enum):
    """What a packet displaced by a newer arrival keeps of its service."""
    RESUME = "resume"
    RESTART = "restart"


_FCFS_POOL_PATTERN = re.compile(r"^fcfs_pool[:_](\d+)$")


@dataclass(frozen=True)
class PolicyConfig(Hashable):
    """Scheduling and routing discipline of the simulated system.

    FCFS with a single server is the pool with `n_servers` = 1.
    """
    kind: PolicyKind
    n_servers: int = 1
    preemption: Preemption = Preemption.RESUME

    def __post_init__(self):
        if not isinstance(self.n_servers, int) or isinstance(self.n_servers, bool) or self.n_servers < 1:
            raise ConfigError(
                "The FCFS pool needs a positive integer number of `servers`, got {}.".format(self.n_servers),
                "servers",
            )
        if self.kind is not PolicyKind.LCFSP_SINGLE and self.preemption is not Preemption.RESUME:
            raise ConfigError(
                "The `preemption` mode applies only to the lcfsp policy.",
                "preemption",
            )
        if self.kind is not PolicyKind.FCFS_POOL and self.n_servers != 1:
            raise ConfigError(
                "Only the fcfs_pool policy takes a number of `servers`.",
                "servers",
            )

    @classmethod
    def lcfsp(cls, preemption: Preemption = Preemption.RESUME) -> "PolicyConfig":
        return cls(PolicyKind.LCFSP_SINGLE, 1, preemption)

    @classmethod
    def fcfs_single(cls) -> "PolicyConfig":
        return cls(PolicyKind.FCFS_POOL, 1)

    @classmethod
    def fcfs_pool(cls, n_servers: int) -> "PolicyConfig":
        return cls(PolicyKind.FCFS_POOL, n_servers)

    @classmethod
    def infinite_server(cls) -> "PolicyConfig":
        return cls(PolicyKind.INFINITE_SERVER)

    @classmethod
    def parse(cls, value: Union[str, Dict[str, object], "PolicyConfig"]) -> "PolicyConfig":
        """Build a policy from its label or from a `{kind, servers?, preemption?}` mapping.

        The labels are lcfsp, lcfsp_restart, fcfs, fcfs_pool:M (or
        fcfs_pool_M) and infinite.
        """
        if isinstance(value, PolicyConfig):
            return value
        if isinstance(value, str):
            label = value.strip().lower()
            if label == "lcfsp":
                return cls.lcfsp()
            if label == "lcfsp_restart":
                return cls.lcfsp(Preemption.RESTART)
            if label == "fcfs":
                return cls.fcfs_single()
            if label in ("infinite", "infinite_server"):
                return cls.infinite_server()
            match = _FCFS_POOL_PATTERN.match(label)
            if match:
                return cls.fcfs_pool(int(match.group(1)))
            raise ConfigError(
                (
                    "Unknown policy '{}', the supported ones are lcfsp, "
                    "lcfsp_restart, fcfs, fcfs_pool:M and infinite."
                ).format(value),
                "kind",
            )
        if isinstance(value, dict):
            unknown = set(value) - {"kind", "servers", "preemption"}
            if unknown:
                raise ConfigError("Unknown policy key `{}`.".format(sorted(unknown)[0]), sorted(unknown)[0])
            if "kind" not in value:
                raise ConfigError("Missing policy `kind`.", "kind")
            if isinstance(value["kind"], str) and value["kind"].strip().lower() == PolicyKind.FCFS_POOL.value:
                policy = cls.fcfs_single()
            else:
                policy = cls.parse(value["kind"])
            preemption = value.get("preemption", policy.preemption.value)
            try:
                preemption = Preemption(preemption)
            except ValueError:
                raise ConfigError(
                    "Unknown `preemption` '{}', use resume or restart.".format(preemption),
                    "preemption",
                )
            return cls(policy.kind, value.get("servers", policy.n_servers), preemption)
        raise ConfigError("A policy must be a label or a mapping, got {}.".format(value), "kind")

    @property
    def is_fcfs(self) -> bool:
        return self.kind is PolicyKind.FCFS_POOL

    @property
    def label(self) -> str:
        if self.kind is PolicyKind.LCFSP_SINGLE:
            return "lcfsp" if self.preemption is Preemption.RESUME else "lcfsp_restart"
        if self.kind is PolicyKind.FCFS_POOL:
            return "fcfs" if self.n_servers == 1 else "fcfs_pool_{}".format(self.n_servers)
        return "infinite"

    def to_config(self) -> Dict[str, object]:
        config = {"kind": self.kind.value}
        if self.kind is PolicyKind.FCFS_POOL:
            config["servers"] = self.n_servers
        if self.kind is PolicyKind.LCFSP_SINGLE:
            config["preemption"] = self.preemption.value
        return config

    def consistent_hash(self, use_approximation: bool = False) -> str:
        return sha256(self.to_config(), use_approximation=use_approximation)

    def __str__(self) -> str:
        return self.label
