import json
import os
from datetime import datetime
from typing import Dict, Sequence, Union

import humanize
import pandas as pd

from ..__version__ import __version__
from ..experiments import CSV_COLUMNS, TradeoffPoint


def _ensure_parent(path: str):
    dirname = os.path.dirname(path)
    if dirname != "":
        os.makedirs(dirname, exist_ok=True)


def _with_path(error: OSError, path: str) -> OSError:
    return OSError("Could not write '{}': {}".format(path, error))


def points_frame(points: Sequence[Union[TradeoffPoint, Dict[str, object]]]) -> pd.DataFrame:
    """Table of the points with the CSV columns; the seed stays an integer
    column with empty cells for analytic rows."""
    rows = [point.to_row() if isinstance(point, TradeoffPoint) else point for point in points]
    df = pd.DataFrame(rows, columns=CSV_COLUMNS)
    df["seed"] = df["seed"].astype("Int64")
    return df


def emit_table(df: pd.DataFrame, path: str) -> str:
    """Write `df` as a comma separated file, floats in full precision,
    infinities as `inf` and missing values as empty cells."""
    try:
        _ensure_parent(path)
        df.to_csv(path, index=False, na_rep="", lineterminator="\n")
    except OSError as error:
        raise _with_path(error, path) from error
    return path


def emit_csv(points: Sequence[Union[TradeoffPoint, Dict[str, object]]], path: str) -> str:
    """Write the points to `path`; no points give a file with just the header."""
    return emit_table(points_frame(points), path)


def write_report(text: str, path: str) -> str:
    try:
        _ensure_parent(path)
        with open(path, "w") as f:
            f.write(text)
    except OSError as error:
        raise _with_path(error, path) from error
    return path


def write_metadata(path: str, config: Dict[str, object], start_time: float, end_time: float) -> str:
    """Write `<path>.metadata` next to an output: the resolved configuration,
    the package version and how long the run took."""
    metadata_path = path + ".metadata"
    metadata = {
        "creation_time": start_time,
        "creation_time_human": datetime.fromtimestamp(start_time).strftime("%Y-%m-%d %H:%M:%S"),
        "time_delta": end_time - start_time,
        "time_delta_human": humanize.precisedelta(end_time - start_time),
        "file_dump_size": os.path.getsize(path),
        "file_dump_size_human": humanize.naturalsize(os.path.getsize(path)),
        "version": __version__,
        "config": config,
    }
    try:
        with open(metadata_path, "w") as f:
            json.dump(metadata, f, indent=4)
    except OSError as error:
        raise _with_path(error, metadata_path) from error
    return metadata_path
