from typing import Dict, Optional

import numpy as np
from dict_hash import Hashable, sha256

from ..exceptions import InadmissibleParameterError
from .deterministic import Deterministic
from .distribution_template import DistributionTemplate
from .exponential import Exponential
from .service_distribution import make_distribution


class ArrivalProcess(Hashable):
    """Renewal process of update generations.

    The inter-generation time X follows `law`, any of the service laws reused
    with rate lambda in place of mu, so the mean inter-generation time is
    1/lambda.
    """

    def __init__(self, law: DistributionTemplate):
        if not isinstance(law, DistributionTemplate):
            raise InadmissibleParameterError(
                "The inter-generation law must be a distribution, got {}.".format(law),
                "kind",
                law,
            )
        self._law = law

    @classmethod
    def poisson(cls, rate: float) -> "ArrivalProcess":
        return cls(Exponential(rate))

    @classmethod
    def periodic(cls, rate: float) -> "ArrivalProcess":
        return cls(Deterministic(rate))

    @classmethod
    def from_config(cls, config: Dict[str, object]) -> "ArrivalProcess":
        """Build the process from `{kind, lambda, shape?}`.

        `poisson` is an alias of the exponential kind and `periodic` of the
        deterministic one.
        """
        if not isinstance(config, dict):
            raise InadmissibleParameterError(
                "An arrival process must be described by a mapping, got {}.".format(config),
                "kind",
                config,
            )
        unknown = set(config) - {"kind", "lambda", "shape"}
        if unknown:
            field = sorted(unknown)[0]
            raise InadmissibleParameterError(
                "Unknown arrival key `{}`.".format(field),
                field,
                config[field],
            )
        if "kind" not in config:
            raise InadmissibleParameterError("Missing arrival `kind`.", "kind", None)
        if "lambda" not in config:
            raise InadmissibleParameterError("Missing arrival rate `lambda`.", "lambda", None)
        kind = config["kind"]
        if isinstance(kind, str) and kind.lower() == "poisson":
            kind = Exponential.KIND
        elif isinstance(kind, str) and kind.lower() == "periodic":
            kind = Deterministic.KIND
        try:
            return cls(make_distribution(kind, config["lambda"], config.get("shape")))
        except InadmissibleParameterError as error:
            if error.field == "mu":
                raise InadmissibleParameterError(
                    "The arrival rate `lambda` must be a positive finite number, got {}.".format(config["lambda"]),
                    "lambda",
                    config["lambda"],
                ) from error
            raise

    @property
    def law(self) -> DistributionTemplate:
        return self._law

    @property
    def rate(self) -> float:
        """lambda."""
        return self._law.mu

    @property
    def is_poisson(self) -> bool:
        return isinstance(self._law, Exponential)

    @property
    def is_periodic(self) -> bool:
        return isinstance(self._law, Deterministic)

    @property
    def shape(self) -> Optional[float]:
        return self._law.shape

    def mean(self) -> float:
        return self._law.mean()

    def second_moment(self) -> float:
        return self._law.second_moment()

    def sample(self, rng: np.random.Generator) -> float:
        return self._law.sample(rng)

    def sample_many(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return self._law.sample_many(rng, size)

    def to_config(self) -> Dict[str, object]:
        if self.is_poisson:
            return {"kind": "poisson", "lambda": self.rate}
        if self.is_periodic:
            return {"kind": "periodic", "lambda": self.rate}
        config = {"kind": self._law.kind, "lambda": self.rate}
        if self.shape is not None:
            config["shape"] = self.shape
        return config

    def consistent_hash(self, use_approximation: bool = False) -> str:
        return sha256(self.to_config(), use_approximation=use_approximation)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ArrivalProcess) and self._law == other._law

    def __hash__(self) -> int:
        return hash(("arrival", self._law))

    def __repr__(self) -> str:
        if self.is_poisson:
            return "Poisson(lambda={})".format(self.rate)
        if self.is_periodic:
            return "Periodic(lambda={})".format(self.rate)
        return "Renewal({})".format(self._law.describe().replace("mu=", "lambda="))
