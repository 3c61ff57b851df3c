"""Command line runner: `aoi-tradeoff --config experiment.json`."""
from .config import COMMANDS, ExperimentConfig, build_parser, default_output_path, parse_config
from .emit import emit_csv, emit_table, points_frame, write_metadata, write_report
from .commands import EXIT_CONFIG, EXIT_OK, EXIT_RUNTIME, EXIT_VALIDATION_FAILED, main, run_command

__all__ = [
    "COMMANDS",
    "ExperimentConfig",
    "build_parser",
    "default_output_path",
    "parse_config",
    "emit_csv",
    "emit_table",
    "points_frame",
    "write_metadata",
    "write_report",
    "EXIT_CONFIG",
    "EXIT_OK",
    "EXIT_RUNTIME",
    "EXIT_VALIDATION_FAILED",
    "main",
    "run_command",
]
