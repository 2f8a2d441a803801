# coding: utf-8
#
# Copyright (c) 2026 RAMANUJAN Authors (see AUTHORS.md).
#
# SPDX-License-Identifier: BSD-3-Clause.

"""The core python classes for run settings and verification reports."""

import logging
from dataclasses import asdict, dataclass, field
from enum import IntEnum
from typing import Any, Dict, List

logger = logging.getLogger("ramanujan")

SCHEMA_VERSION = 1
"""Version of the JSON report layout"""


def _rename_with_underscore(orig: dict, new: dict):
    """Rename all keys in a dictionary with underscores instead of spaces or dashes"""
    for k, v in orig.items():
        k = k.lower().replace("-", "_").replace(" ", "_")
        new[k] = v


def _rename_with_dash(orig: dict, new: dict):
    """Rename all keys in a dictionary with dashes instead of underscores"""
    for k, v in orig.items():
        k = k.lower().replace("_", "-")
        new[k] = v


class Chart(IntEnum):
    """The built-in affine charts of the universal elliptic curve."""

    WEIERSTRASS = 1
    """Coordinates (g2, g3), curve y^2 = 4x^3 - g2 x - g3, frame (dx/y, x dx/y)"""
    E = 2
    """Coordinates (e2, e4, e6), the Eisenstein normalization"""
    B = 3
    """Coordinates (b2, b4, b6), frame (dx/2y, x dx/2y)"""

    @classmethod
    def coerce(cls, value) -> "Chart":
        """Convert a name (any case, e.g. ``"b"``) or integer to a chart."""
        if isinstance(value, cls):
            return value
        if isinstance(value, int):
            return cls(value)
        if isinstance(value, str):
            return cls[value.strip().upper().replace("-", "_")]
        raise TypeError(f"chart cannot be of type {type(value)}")


class Group(IntEnum):
    """Matrix groups acting on symplectic bases, largest first."""

    SP = 1
    """The symplectic group Sp_2g"""
    P = 2
    """The Siegel parabolic subgroup (lower-left block zero)"""
    L = 3
    """The Levi subgroup diag(A, (A^T)^-1)"""


class CheckStatus(IntEnum):
    """Outcome of a single check."""

    FAIL = 0
    """The check was asserted and did not hold"""
    PASS = 1
    """The check was asserted and holds"""
    INFO = 2
    """Reported only; never fails a run"""


@dataclass
class Check:
    """One named check in a report."""

    name: str
    status: CheckStatus
    detail: Dict[str, Any] = field(default_factory=dict)

    def __setattr__(self, name, value):
        if name == "status" and not isinstance(value, CheckStatus):
            if isinstance(value, bool):
                value = CheckStatus.PASS if value else CheckStatus.FAIL
            elif isinstance(value, int):
                value = CheckStatus(value)
            elif isinstance(value, str):
                value = CheckStatus[value.upper()]
            else:
                raise TypeError(f"status cannot be of type {type(value)}")
        super().__setattr__(name, value)

    @property
    def passed(self) -> bool:
        return self.status != CheckStatus.FAIL

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status.name.lower(), "detail": self.detail}

    @classmethod
    def from_dict(cls, opts: dict) -> "Check":
        return cls(opts["name"], opts["status"], dict(opts.get("detail", {})))


@dataclass
class Report:
    """A machine-readable verification report for one subcommand."""

    subcommand: str
    inputs: Dict[str, Any] = field(default_factory=dict)
    checks: List[Check] = field(default_factory=list)
    versions: Dict[str, str] = field(default_factory=dict)
    schema_version: int = SCHEMA_VERSION

    def add(self, name: str, status, **detail) -> Check:
        """Append a new check and return it."""
        check = Check(name, status, detail)
        self.checks.append(check)
        if not check.passed:
            logger.warning(f"Check failed: {name}")
        else:
            logger.debug(f"Check {check.status.name.lower()}: {name}")
        return check

    def extend(self, other: "Report", prefix: str = None):
        """Append the checks of another report, optionally prefixing names."""
        for check in other.checks:
            name = check.name if prefix is None else f"{prefix}/{check.name}"
            self.checks.append(Check(name, check.status, check.detail))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def counts(self) -> Dict[str, int]:
        ret = {s.name.lower(): 0 for s in CheckStatus}
        for c in self.checks:
            ret[c.status.name.lower()] += 1
        return ret

    def validate(self):
        """Check the report against the schema.

        Raises
        ------
        ValueError
            if a field has the wrong type or a check is malformed
        """
        if self.schema_version != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema {self.schema_version}")
        if not isinstance(self.subcommand, str) or not self.subcommand:
            raise ValueError("report needs a subcommand name")
        for name in ("inputs", "versions"):
            if not isinstance(getattr(self, name), dict):
                raise ValueError(f"report {name} must be a mapping")
        names = set()
        for check in self.checks:
            if not isinstance(check, Check):
                raise ValueError(f"malformed check {check!r}")
            if not isinstance(check.detail, dict):
                raise ValueError(f"detail of {check.name} must be a mapping")
            if check.name in names:
                raise ValueError(f"duplicate check name {check.name}")
            names.add(check.name)

    def to_dict(self) -> dict:
        return {
            "schema-version": self.schema_version,
            "subcommand": self.subcommand,
            "passed": self.passed,
            "counts": self.counts,
            "inputs": dict(self.inputs),
            "checks": [c.to_dict() for c in self.checks],
            "versions": dict(self.versions),
        }

    @classmethod
    def from_dict(cls, opts: dict) -> "Report":
        new_opts = dict()
        _rename_with_underscore(opts, new_opts)
        return cls(
            subcommand=new_opts["subcommand"],
            inputs=dict(new_opts.get("inputs", {})),
            checks=[Check.from_dict(c) for c in new_opts.get("checks", [])],
            versions=dict(new_opts.get("versions", {})),
            schema_version=new_opts.get("schema_version", SCHEMA_VERSION),
        )


@dataclass
class Settings:
    """Default numeric options for the command line program.

    Settings files use dashed keys (``torsor-trials``); they are converted to
    attribute names on load.
    """

    order: int = 200
    """Truncation order for q-series verification"""
    g: int = 4
    """Largest g for the formal and symplectic checks"""
    trials: int = 500
    """Random trials for completion and dual-basis properties"""
    torsor_trials: int = 200
    """Random trials for parabolic torsor properties"""
    formal_trials: int = 100
    """Random invertible matrices per g in the formal checks"""
    tol: float = 1e-10
    """Local error tolerance of the flow integrator"""
    q0: float = 0.01
    """Start of the flow comparison"""
    q1: float = 0.02
    """End of the flow comparison"""
    series_order: int = 64
    """Series order used as the flow oracle"""
    seed: int = 1729
    """Seed for all randomized checks"""

    def __setattr__(self, name, value):
        if isinstance(value, str) and value.strip() == "":
            value = None
        if value is not None and name in ("tol", "q0", "q1"):
            value = float(value)
        elif value is not None and name in (
            "order",
            "g",
            "trials",
            "torsor_trials",
            "formal_trials",
            "series_order",
            "seed",
        ):
            value = int(value)
        super().__setattr__(name, value)

    @classmethod
    def from_dict(cls, opts: dict) -> "Settings":
        """Create settings from a dictionary with dashed or underscored keys.

        Raises
        ------
        TypeError
            if a key is not a known setting
        """
        new_opts = dict()
        _rename_with_underscore(opts, new_opts)
        return cls(**new_opts)

    def to_dict(self) -> dict:
        ret = dict()
        _rename_with_dash(asdict(self), ret)
        return ret

    def default_map(self) -> Dict[str, Dict[str, Any]]:
        """The click ``default_map`` for every subcommand."""
        flow = {"tol": self.tol, "q0": self.q0, "q1": self.q1, "series_order": self.series_order}
        symp = {"g": min(self.g, 6), "trials": self.trials, "torsor_trials": self.torsor_trials, "seed": self.seed}
        formal = {"g": self.g, "trials": self.formal_trials, "seed": self.seed}
        return {
            "verify-qseries": {"order": self.order},
            "symplectic-selftest": symp,
            "formal-check": formal,
            "flow": flow,
            "all": {
                "order": self.order,
                "g": self.g,
                "trials": self.trials,
                "torsor_trials": self.torsor_trials,
                "formal_trials": self.formal_trials,
                "seed": self.seed,
                **flow,
            },
        }
