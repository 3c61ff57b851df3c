import argparse
import math
import os
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import compress_json

from ..distributions import (
    ArrivalProcess,
    DistributionTemplate,
    distribution_from_config,
    make_distribution,
    normalize_kind,
)
from ..exceptions import ConfigError, InadmissibleParameterError
from ..experiments import SimSettings, SweepSpec
from ..simcore import PolicyConfig, PolicyKind
from ..utils import log_levels

COMMANDS = ("analytic", "sim", "sweep", "curves", "scalarize", "validate")
# Commands that evaluate one service law rather than a family.
SINGLE_SERVICE_COMMANDS = ("analytic", "sim", "validate")
# Commands whose delay results need a stable system.
STABILITY_COMMANDS = ("analytic", "sim", "sweep", "scalarize", "validate")

TOP_LEVEL_KEYS = {
    "command", "arrival", "service", "family", "grid", "families", "mu",
    "policy", "policies", "lambdas", "nu", "sim", "out", "log_level",
}
SIM_KEYS = set(SimSettings.__dataclass_fields__)


@dataclass
class ExperimentConfig:
    """Fully resolved experiment: every default is materialised, and
    `to_dict` gives back a configuration that `parse_config` accepts."""
    command: str
    arrival: ArrivalProcess
    service: Optional[DistributionTemplate]
    families: List[Tuple[str, List[Optional[float]]]]
    mu: Optional[float]
    policies: List[PolicyConfig]
    lambdas: List[float]
    nu: Optional[float]
    settings: SimSettings
    out: str
    log_level: str = "critical"

    @property
    def policy(self) -> PolicyConfig:
        return self.policies[0]

    def sweep_specs(self) -> List[SweepSpec]:
        return [
            SweepSpec(self.arrival, kind, grid, self.policies, self.mu, self.settings)
            for kind, grid in self.families
        ]

    def to_dict(self) -> Dict[str, object]:
        config = {
            "command": self.command,
            "arrival": self.arrival.to_config(),
            "policies": [policy.to_config() for policy in self.policies],
            "sim": self.settings.to_dict(),
            "out": self.out,
            "log_level": self.log_level,
        }
        if self.service is not None:
            config["service"] = self.service.to_config()
        if self.families:
            config["families"] = [{"kind": kind, "grid": list(grid)} for kind, grid in self.families]
            config["mu"] = self.mu
        if self.lambdas:
            config["lambdas"] = list(self.lambdas)
        if self.nu is not None:
            config["nu"] = self.nu
        return config


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aoi-tradeoff",
        description=(
            "Age of information against packet delay: formulas, simulation "
            "and parameter sweeps of update systems."
        ),
    )
    parser.add_argument("--config", help="JSON configuration, optionally .json.gz/.json.bz/.json.lzma.")
    parser.add_argument("--command", choices=COMMANDS, help="Overrides the command of the configuration.")
    parser.add_argument("--seed", type=int, help="Base seed of the replications.")
    parser.add_argument("--horizon", type=float, help="Simulated time of each replication.")
    parser.add_argument("--warmup", type=float, help="Initial time excluded from the statistics.")
    parser.add_argument("--reps", type=int, help="Number of replications.")
    parser.add_argument("--n-jobs", dest="n_jobs", type=int, help="Worker processes for the replications.")
    parser.add_argument("--out", help="Output path, by default in $AOI_OUTPUT_DIR.")
    parser.add_argument(
        "--log-level",
        dest="log_level",
        choices=sorted(log_levels),
        help="Level of the package logger, critical by default.",
    )
    return parser


def _number(value, field_name: str, positive: bool = True, integer: bool = False):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError("The field `{}` must be a number, got {!r}.".format(field_name, value), field_name)
    if integer and not float(value).is_integer():
        raise ConfigError("The field `{}` must be an integer, got {!r}.".format(field_name, value), field_name)
    if not math.isfinite(value) or (positive and value <= 0):
        raise ConfigError(
            "The field `{}` must be a {}finite number, got {!r}.".format(
                field_name, "positive " if positive else "", value
            ),
            field_name,
        )
    return int(value) if integer else float(value)


def _prefixed(error: InadmissibleParameterError, prefix: str) -> ConfigError:
    qualified = error.with_prefix(prefix)
    return ConfigError(str(qualified), qualified.field)


def _parse_arrival(data: dict) -> ArrivalProcess:
    if "arrival" not in data:
        raise ConfigError("Missing the `arrival` process.", "arrival")
    try:
        return ArrivalProcess.from_config(data["arrival"])
    except InadmissibleParameterError as error:
        raise _prefixed(error, "arrival") from error


def _parse_service(data: dict) -> DistributionTemplate:
    if "service" not in data:
        raise ConfigError("Missing the `service` distribution.", "service")
    try:
        return distribution_from_config(data["service"])
    except InadmissibleParameterError as error:
        raise _prefixed(error, "service") from error


def _parse_families(data: dict) -> List[Tuple[str, List[Optional[float]]]]:
    if "families" in data:
        if "family" in data or "grid" in data:
            raise ConfigError("Use either `families` or `family` with `grid`, not both.", "families")
        entries = data["families"]
        if not isinstance(entries, list) or not entries:
            raise ConfigError("The field `families` must be a nonempty list.", "families")
    elif "family" in data:
        entries = [{"kind": data["family"], "grid": data.get("grid", [None])}]
    else:
        raise ConfigError("Missing the service `families` (or `family` and `grid`).", "families")

    if "mu" not in data:
        raise ConfigError("Missing the service rate `mu` of the families.", "mu")
    mu = _number(data["mu"], "mu")

    families = []
    for index, entry in enumerate(entries):
        prefix = "families[{}]".format(index)
        if not isinstance(entry, dict):
            raise ConfigError("The field `{}` must be a mapping.".format(prefix), prefix)
        unknown = set(entry) - {"kind", "grid"}
        if unknown:
            name = "{}.{}".format(prefix, sorted(unknown)[0])
            raise ConfigError("Unknown key `{}`.".format(name), name)
        try:
            kind = normalize_kind(entry.get("kind"))
        except InadmissibleParameterError as error:
            raise _prefixed(error, prefix) from error
        grid = entry.get("grid", [None])
        if not isinstance(grid, list) or not grid:
            raise ConfigError("The field `{}.grid` must be a nonempty list.".format(prefix), prefix + ".grid")
        for position, shape in enumerate(grid):
            try:
                make_distribution(kind, mu, shape)
            except InadmissibleParameterError as error:
                qualified = "{}.grid[{}]".format(prefix, position)
                raise ConfigError(
                    str(error).replace("`{}`".format(error.field), "`{}`".format(qualified)),
                    qualified,
                ) from error
        families.append((kind, [None if shape is None else float(shape) for shape in grid]))
    return families


def _parse_policies(data: dict) -> List[PolicyConfig]:
    if "policies" in data and "policy" in data:
        raise ConfigError("Use either `policy` or `policies`, not both.", "policies")
    if "policies" in data:
        raw, name = data["policies"], "policies"
        if not isinstance(raw, list) or not raw:
            raise ConfigError("The field `policies` must be a nonempty list.", "policies")
    else:
        raw, name = [data.get("policy", "lcfsp")], "policy"
    policies = []
    for index, value in enumerate(raw):
        prefix = name if name == "policy" else "policies[{}]".format(index)
        try:
            policies.append(PolicyConfig.parse(value))
        except ConfigError as error:
            raise ConfigError(
                str(error).replace("`{}`".format(error.field), "`{}.{}`".format(prefix, error.field)),
                "{}.{}".format(prefix, error.field),
            ) from error
    return policies


def _parse_settings(section, overrides: Dict[str, object]) -> SimSettings:
    if section is None:
        section = {}
    if not isinstance(section, dict):
        raise ConfigError("The field `sim` must be a mapping.", "sim")
    section = dict(section)
    unknown = set(section) - SIM_KEYS
    if unknown:
        name = "sim.{}".format(sorted(unknown)[0])
        raise ConfigError("Unknown key `{}`.".format(name), name)
    section.update({key: value for key, value in overrides.items() if value is not None})

    defaults = SimSettings()
    horizon = _number(section.get("horizon", defaults.horizon), "sim.horizon")
    if "warmup" in section:
        warmup = _number(section["warmup"], "sim.warmup", positive=False)
    else:
        warmup = 0.1 * horizon
    if not 0 <= warmup < horizon:
        raise ConfigError(
            "The field `sim.warmup` must satisfy 0 <= warmup < horizon = {}, got {}.".format(horizon, warmup),
            "sim.warmup",
        )
    convergence_horizon = section.get("convergence_horizon")
    if convergence_horizon is not None:
        convergence_horizon = _number(convergence_horizon, "sim.convergence_horizon")
    for flag in ("simulate", "use_cache"):
        if not isinstance(section.get(flag, False), bool):
            raise ConfigError("The field `sim.{}` must be a boolean.".format(flag), "sim." + flag)
    cache_dir = section.get("cache_dir")
    if cache_dir is not None and not isinstance(cache_dir, str):
        raise ConfigError("The field `sim.cache_dir` must be a string.", "sim.cache_dir")

    return SimSettings(
        horizon=horizon,
        warmup=warmup,
        reps=_number(section.get("reps", defaults.reps), "sim.reps", integer=True),
        seed=_number(section.get("seed", defaults.seed), "sim.seed", positive=False, integer=True),
        n_paths=_number(section.get("n_paths", defaults.n_paths), "sim.n_paths", integer=True),
        n_jobs=_number(section.get("n_jobs", defaults.n_jobs), "sim.n_jobs", integer=True),
        simulate=section.get("simulate", defaults.simulate),
        use_cache=section.get("use_cache", defaults.use_cache),
        cache_dir=cache_dir,
        convergence_horizon=convergence_horizon,
    )


def _check_stability(config: ExperimentConfig):
    rate, name = config.arrival.rate, "arrival.lambda"
    mu = config.service.mu if config.service is not None else config.mu
    for policy in config.policies:
        if policy.kind is PolicyKind.INFINITE_SERVER:
            continue
        capacity = policy.n_servers * mu
        if rate >= capacity:
            raise ConfigError(
                (
                    "The field `{}` = {} makes the {} system unstable: it must be below "
                    "{} for the {} command."
                ).format(name, rate, policy.label, capacity, config.command),
                name,
            )


def default_output_path(command: str) -> str:
    extension = "txt" if command == "validate" else "csv"
    return os.path.join(os.environ.get("AOI_OUTPUT_DIR", "."), "{}.{}".format(command, extension))


def parse_config(
    args: Optional[argparse.Namespace] = None,
    data: Optional[Dict[str, object]] = None,
) -> ExperimentConfig:
    """Resolve a configuration from a JSON file and/or flags.

    Arguments
    ---------
    args: Optional[argparse.Namespace] = None,
        The parsed flags; `--config` names the JSON file, the other flags
        override the values read from it.
    data: Optional[Dict[str, object]] = None,
        An already loaded configuration, used instead of `--config`.

    Raises
    ------
    ConfigError,
        Naming the offending field: unknown keys, wrong types, inadmissible
        parameters such as a Pareto shape alpha <= 1 (`service.shape`) or an
        unstable system for the commands that report delays.
    """
    if args is None:
        args = build_parser().parse_args([])
    if data is None:
        data = {}
        if args.config is not None:
            try:
                data = compress_json.load(args.config)
            except (OSError, ValueError) as error:
                raise ConfigError("Could not read the configuration '{}': {}".format(args.config, error), "config") from error
    if not isinstance(data, dict):
        raise ConfigError("The configuration must be a JSON object.", None)

    unknown = set(data) - TOP_LEVEL_KEYS
    if unknown:
        name = sorted(unknown)[0]
        raise ConfigError("Unknown key `{}`.".format(name), name)

    command = args.command or data.get("command")
    if command is None:
        raise ConfigError("Missing the `command`, one of {}.".format(", ".join(COMMANDS)), "command")
    if command not in COMMANDS:
        raise ConfigError(
            "Unknown `command` '{}', the available ones are {}.".format(command, ", ".join(COMMANDS)),
            "command",
        )

    log_level = args.log_level or data.get("log_level", "critical")
    if not isinstance(log_level, str) or log_level.lower() not in log_levels:
        raise ConfigError("Unknown `log_level` '{}'.".format(log_level), "log_level")

    settings = _parse_settings(data.get("sim"), {
        "seed": args.seed,
        "horizon": args.horizon,
        "warmup": args.warmup,
        "reps": args.reps,
        "n_jobs": args.n_jobs,
    })

    policies = _parse_policies(data)
    if command in ("curves", "scalarize", "validate") and len(policies) != 1:
        raise ConfigError("The {} command takes a single `policy`.".format(command), "policies")

    if command == "curves":
        arrival = ArrivalProcess.poisson(1.0)
        if "arrival" in data:
            arrival = _parse_arrival(data)
            if not arrival.is_poisson:
                raise ConfigError("The curves command sweeps Poisson generation rates.", "arrival.kind")
    else:
        arrival = _parse_arrival(data)

    service, families, mu = None, [], None
    if command in SINGLE_SERVICE_COMMANDS:
        service = _parse_service(data)
    else:
        families = _parse_families(data)
        mu = _number(data["mu"], "mu")

    lambdas = []
    if command == "curves":
        lambdas = data.get("lambdas")
        if not isinstance(lambdas, list) or not lambdas:
            raise ConfigError("The curves command needs a nonempty list of `lambdas`.", "lambdas")
        lambdas = [_number(rate, "lambdas") for rate in lambdas]
        if policies[0].is_fcfs and any(rate >= policies[0].n_servers * mu for rate in lambdas):
            raise ConfigError(
                "Every rate of `lambdas` must be below M mu = {} for the {} policy.".format(
                    policies[0].n_servers * mu, policies[0].label
                ),
                "lambdas",
            )

    nu = None
    if command == "scalarize":
        if "nu" not in data:
            raise ConfigError("The scalarize command needs the weight `nu`.", "nu")
        nu = _number(data["nu"], "nu", positive=False)
        if nu < 0:
            raise ConfigError("The weight `nu` must be nonnegative, got {}.".format(nu), "nu")
        if len(families) != 1:
            raise ConfigError("The scalarize command takes a single family.", "families")

    if command == "analytic" and any(policy.is_fcfs for policy in policies):
        raise ConfigError(
            "The analytic command has no age formula for the FCFS policies; use the sim command.",
            "policies",
        )

    out = args.out or data.get("out") or default_output_path(command)
    if not isinstance(out, str):
        raise ConfigError("The field `out` must be a path.", "out")

    config = ExperimentConfig(
        command=command,
        arrival=arrival,
        service=service,
        families=families,
        mu=mu,
        policies=policies,
        lambdas=lambdas,
        nu=nu,
        settings=settings,
        out=out,
        log_level=log_level.lower(),
    )
    if command in STABILITY_COMMANDS:
        _check_stability(config)
    if command == "sweep":
        try:
            config.sweep_specs()
        except ConfigError as error:
            raise ConfigError(str(error).replace("`grid`", "`families.grid`"), "families.grid") from error
    return config
