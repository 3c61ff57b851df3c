import logging
import sys
from time import time
from typing import List, Optional

import pandas as pd

from ..exceptions import AoiTradeoffException, ConfigError
from ..experiments import (
    age_vs_rate_curves,
    evaluate_point,
    scalarized_search,
    simulated_point,
    tradeoff_sweeps,
    validate,
)
from ..utils import setup_logger
from .config import ExperimentConfig, build_parser, parse_config
from .emit import emit_csv, emit_table, write_metadata, write_report

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_RUNTIME = 3
EXIT_VALIDATION_FAILED = 4

logger = logging.getLogger(__name__)


def run_command(config: ExperimentConfig) -> int:
    """Run the configured command, write its output and return the exit code."""
    settings = config.settings
    if config.command == "analytic":
        points = []
        for policy in config.policies:
            points.extend(evaluate_point(config.arrival, config.service, policy, settings, simulate=False))
        emit_csv(points, config.out)
    elif config.command == "sim":
        points = [
            simulated_point(config.arrival, config.service, policy, settings)
            for policy in config.policies
        ]
        emit_csv(points, config.out)
    elif config.command == "sweep":
        emit_csv(tradeoff_sweeps(config.sweep_specs()), config.out)
    elif config.command == "curves":
        frames = [
            age_vs_rate_curves(kind, grid, config.lambdas, config.mu, config.policy, settings)
            for kind, grid in config.families
        ]
        emit_table(pd.concat(frames, ignore_index=True), config.out)
    elif config.command == "scalarize":
        (kind, grid), = config.families
        best = scalarized_search(config.arrival, kind, config.nu, config.policy, grid, config.mu, settings)
        emit_csv([best], config.out)
    else:
        report = validate(config.arrival, config.service, config.policy, settings)
        write_report(report.to_text(), config.out)
        if not report.passed:
            return EXIT_VALIDATION_FAILED
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point of `aoi-tradeoff`.

    Exit codes: 0 success, 2 invalid configuration, 3 runtime failure,
    4 validation failed.
    """
    args = build_parser().parse_args(argv)
    try:
        config = parse_config(args)
    except ConfigError as error:
        print("Invalid configuration: {}".format(error), file=sys.stderr)
        return EXIT_CONFIG

    setup_logger("aoi_tradeoff", config.log_level)
    logger.info("Running %s, output at %s", config.command, config.out)

    start_time = time()
    try:
        code = run_command(config)
        write_metadata(config.out, config.to_dict(), start_time, time())
    except (AoiTradeoffException, OSError) as error:
        logger.exception("The %s command failed", config.command)
        print("Error: {}".format(error), file=sys.stderr)
        return EXIT_RUNTIME
    return code
