# coding: utf-8
#
# Copyright (c) 2026 RAMANUJAN Authors (see AUTHORS.md).
#
# SPDX-License-Identifier: BSD-3-Clause.

"""Provide input and output functions for ramanujan."""

import hashlib
import json
import logging
import sys
from importlib import resources
from pathlib import Path
from typing import Union

if sys.version_info[1] < 11:
    import tomli as tomllib
else:
    import tomllib

import pandas as pd

try:
    import yaml
except ImportError as e:
    yaml = e

from .model import Report, Settings

logger = logging.getLogger("ramanujan")

DATA_FILE = "connections.toml"
"""Name of the packaged connection data file"""


def read_settings(config_file: Union[str, Path], *, format=None) -> Settings:
    """Load a ramanujan settings file.

    Parameters
    ----------
    config_file : str or Path
        filename or full path to a TOML, JSON or YAML settings file
    format : str, optional
        force a format (``"toml"``, ``"json"`` or ``"yaml"``) instead of
        using the file suffix

    Returns
    -------
    Settings
        the numeric defaults for every subcommand

    Raises
    ------
    TypeError
        if the file contains an unknown setting
    RuntimeError
        if YAML was requested but no YAML package is installed
    """
    if isinstance(config_file, str):
        config_file = Path(config_file)
    logger.info(f'Reading settings from "{config_file.name}"')
    suffix = config_file.suffix.lower()
    if suffix == ".json" or format == "json":
        with open(config_file, "r") as fin:
            data = json.load(fin)
    elif suffix in [".yaml", ".yml"] or format == "yaml":
        if isinstance(yaml, ImportError):
            raise RuntimeError("YAML settings need the optional pyyaml package") from yaml
        with open(config_file, "r") as fin:
            data = yaml.safe_load(fin)
    else:
        with open(config_file, "rb") as fin:
            data = tomllib.load(fin)
    if "settings" in data and isinstance(data["settings"], dict):
        data = data["settings"]
    logger.debug("Read settings file")
    return Settings.from_dict(data)


def write_report(report: Report, filename: Union[Path, str] = None, **kwargs) -> str:
    """Validate and serialise a report as JSON.

    Keys are sorted and indented by two spaces, so that identical reports
    give identical bytes.

    Parameters
    ----------
    report : Report
        the report to write
    filename : str or Path, optional
        where to write; when omitted only the text is returned

    Keyword Arguments
    -----------------
    kwargs : additional keyword arguments
        See :meth:`json.dumps` for valid keyword arguments

    Returns
    -------
    str
        the JSON text
    """
    report.validate()
    kwargs.setdefault("indent", 2)
    kwargs.setdefault("sort_keys", True)
    text = json.dumps(report.to_dict(), **kwargs)
    if filename is not None:
        with open(filename, "w") as f:
            f.write(text + "\n")
        logger.info(f'Report written to "{Path(filename).name}"')
    return text


def read_report(filename: Union[Path, str]) -> Report:
    """Read a report written by :func:`write_report`."""
    with open(filename, "r") as f:
        d = json.load(f)
    report = Report.from_dict(d)
    report.validate()
    return report


def write_trajectory_csv(samples, filename: Union[Path, str]):
    """Write flow samples to a CSV file.

    Parameters
    ----------
    samples : pandas.DataFrame
        the trajectory table, one row per accepted step
    filename : str or Path
        the file to write
    """
    if not isinstance(samples, pd.DataFrame):
        samples = pd.DataFrame(samples)
    with open(filename, "w") as f:
        samples.to_csv(f, lineterminator="\n", index=False)
    logger.info(f'Trajectory written to "{Path(filename).name}"')


def _data_path():
    return resources.files("ramanujan").joinpath("data", DATA_FILE)


def load_chart_data() -> dict:
    """Read the packaged connection, morphism and vector-field data."""
    with _data_path().open("rb") as fin:
        data = tomllib.load(fin)
    logger.debug(f"Loaded {len(data.get('charts', {}))} charts from {DATA_FILE}")
    return data


def data_file_hash() -> str:
    """SHA-256 of the packaged data file, reported in every report."""
    return hashlib.sha256(_data_path().read_bytes()).hexdigest()
