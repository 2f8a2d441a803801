# coding: utf-8
#
# Copyright (c) 2026 RAMANUJAN Authors (see AUTHORS.md).
#
# SPDX-License-Identifier: BSD-3-Clause.

"""Numerical flows of the Ramanujan vector fields in complex coordinates.

Time is ``tau = log q``, so that ``d/dtau`` is ``theta = q d/dq`` and the
Eisenstein curve ``q -> (E2, E4, E6)(q)`` is an integral curve of the
``E``-chart field. (Another common convention is ``q = exp(2t)``; it is not
used here.)

An integration over ``[tau, tau + dtau]`` is carried out in the real
parameter ``s`` in ``[0, 1]`` with ``dP/ds = dtau * v(P)``, so complex time
steps pose no special difficulty. The stepper is the embedded Cash-Karp 5(4)
pair, advancing with the fifth-order solution and controlling the error per
unit of ``s``.
"""

import cmath
import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Sequence, Tuple

import numpy as np
import pandas as pd
import sympy

from .exact import MultiPoly
from .gaussmanin import builtin_chart
from .model import Chart
from .qseries import chazy_triple, eisenstein, evaluate
from .vectorfields import PolyVectorField, ramanujan_field

logger = logging.getLogger("ramanujan")

SINGULARITY_THRESHOLD = 1e-12
"""Smallest allowed ``|delta|`` along a trajectory"""

# extended butcher table, rows 0-4 give the stages and row 5 the solution
BT = {
    0: [1 / 5],
    1: [3 / 40, 9 / 40],
    2: [3 / 10, -9 / 10, 6 / 5],
    3: [-11 / 54, 5 / 2, -70 / 27, 35 / 27],
    4: [1631 / 55296, 175 / 512, 575 / 13824, 44275 / 110592, 253 / 4096],
    5: [37 / 378, 0, 250 / 621, 125 / 594, 0, 512 / 1771],
}

# fifth minus fourth order weights, for the local error estimate
TR = [-277 / 64512, 0, 6925 / 370944, -6925 / 202752, -277 / 14336, 277 / 7084]


class SingularityError(RuntimeError):
    """The trajectory came too close to the discriminant locus."""


class StepLimitError(RuntimeError):
    """The integrator needed more than the allowed number of steps."""


@dataclass
class FlowState:
    """A point on a chart at a complex time ``tau = log q``."""

    chart: Chart
    point: Tuple[complex, ...]
    time: complex = 0j

    def __post_init__(self):
        self.chart = Chart.coerce(self.chart)
        self.point = tuple(complex(x) for x in self.point)
        self.time = complex(self.time)

    @property
    def q(self) -> complex:
        return cmath.exp(self.time)


@dataclass
class FlowResult:
    """The final state of an integration with its trajectory."""

    state: FlowState
    steps: int = 0
    rejected: int = 0
    samples: pd.DataFrame = field(default_factory=pd.DataFrame)


def _lambdify(coordinates: Sequence[str], exprs):
    symbols = sympy.symbols(list(coordinates))
    return sympy.lambdify(symbols, exprs, "numpy")


def numeric_field(v: PolyVectorField):
    """A function ``point -> numpy array`` evaluating ``v`` in complex doubles."""
    fn = _lambdify(v.coordinates, [c.to_sympy() for c in v.coeffs])

    def evaluate_field(point) -> np.ndarray:
        return np.array(fn(*point), dtype=complex)

    return evaluate_field


def numeric_delta(coordinates: Sequence[str], delta: MultiPoly):
    """A function ``point -> complex`` evaluating ``delta``."""
    fn = _lambdify(coordinates, delta.to_sympy())
    return lambda point: complex(fn(*point))


def _samples_frame(coordinates, rows) -> pd.DataFrame:
    columns = ["step", "time.real", "time.imag"]
    for c in coordinates:
        columns += [f"{c}.real", f"{c}.imag"]
    return pd.DataFrame(rows, columns=columns)


def _sample_row(step: int, time: complex, point: np.ndarray) -> list:
    row = [step, time.real, time.imag]
    for x in point:
        row += [x.real, x.imag]
    return row


def solve_flow(
    v: PolyVectorField,
    start: FlowState,
    dtau: complex,
    tol: float = 1e-10,
    *,
    delta: MultiPoly = None,
    max_steps: int = 100000,
    first_step: float = 0.05,
) -> FlowResult:
    """Integrate ``dP/dtau = v(P)`` from ``start`` over the time ``dtau``.

    Parameters
    ----------
    v : PolyVectorField
        the vector field
    start : FlowState
        initial point and time
    dtau : complex
        the time to flow for
    tol : float, optional
        local error tolerance per unit step, by default 1e-10
    delta : MultiPoly, optional
        the discriminant guarded along the path, by default the built-in
        delta of ``start.chart``
    max_steps : int, optional
        maximum number of accepted plus rejected steps
    first_step : float, optional
        initial step as a fraction of the whole interval

    Returns
    -------
    FlowResult
        the final state, step counts and the trajectory samples

    Raises
    ------
    SingularityError
        if ``|delta| < 1e-12`` at the start or the step size collapses near
        the discriminant
    StepLimitError
        if more than ``max_steps`` steps are needed
    """
    dtau = complex(dtau)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if delta is None:
        delta = builtin_chart(start.chart).delta
    f = numeric_field(v)
    disc = numeric_delta(v.coordinates, delta)
    y = np.array(start.point, dtype=complex)
    if len(y) != len(v.coordinates):
        raise ValueError(f"start point has {len(y)} coordinates, field needs {len(v.coordinates)}")
    if abs(disc(y)) < SINGULARITY_THRESHOLD:
        raise SingularityError(f"start point is on the discriminant locus (|delta| = {abs(disc(y))})")

    rows = [_sample_row(0, start.time, y)]
    if dtau == 0:
        return FlowResult(start, 0, 0, _samples_frame(v.coordinates, rows))

    def rhs(point):
        return dtau * f(point)

    s, h = 0.0, min(first_step, 1.0)
    steps = rejected = 0
    while s < 1.0:
        if steps + rejected >= max_steps:
            raise StepLimitError(f"more than {max_steps} steps needed for dtau = {dtau}")
        h = min(h, 1.0 - s)
        k = [rhs(y)]
        near_singular = False
        for i in range(5):
            stage = y + h * sum(b * kj for b, kj in zip(BT[i], k))
            if abs(disc(stage)) < SINGULARITY_THRESHOLD:
                near_singular = True
                break
            k.append(rhs(stage))
        if near_singular:
            rejected += 1
            h /= 2
            logger.warning(f"Step rejected near the discriminant at s = {s:.6g}")
            if h < 1e-12:
                raise SingularityError(f"step size collapsed near the discriminant at s = {s}")
            continue
        y_new = y + h * sum(b * kj for b, kj in zip(BT[5], k))
        err = float(np.max(np.abs(h * sum(t * kj for t, kj in zip(TR, k)))))
        if not np.all(np.isfinite(y_new)):
            err = math.inf
        if err <= tol * h:
            s += h
            y = y_new
            steps += 1
            rows.append(_sample_row(steps, start.time + s * dtau, y))
            if abs(disc(y)) < SINGULARITY_THRESHOLD:
                raise SingularityError(f"trajectory reached the discriminant at s = {s}")
        else:
            rejected += 1
        if err == 0:
            factor = 5.0
        elif math.isinf(err):
            factor = 0.2
        else:
            factor = min(5.0, max(0.2, 0.9 * (tol * h / err) ** 0.25))
        h *= factor
    end = FlowState(start.chart, tuple(y), start.time + dtau)
    logger.debug(f"Flow over dtau = {dtau}: {steps} steps, {rejected} rejected")
    return FlowResult(end, steps, rejected, _samples_frame(v.coordinates, rows))


def integrate(
    v: PolyVectorField, start: FlowState, dtau: complex, tol: float = 1e-10, **kwargs
) -> FlowState:
    """The end state of :func:`solve_flow`."""
    return solve_flow(v, start, dtau, tol, **kwargs).state


def residual_along(v: PolyVectorField, samples: Sequence[FlowState]) -> float:
    """Largest deviation between a centred difference along samples and ``v``.

    For every interior sample the derivative of the point with respect to
    ``tau`` is estimated from its two neighbours and compared with the
    field there.

    Raises
    ------
    ValueError
        if fewer than three samples are given
    """
    if len(samples) < 3:
        raise ValueError("at least three samples are needed")
    f = numeric_field(v)
    worst = 0.0
    for prev, here, nxt in zip(samples, samples[1:], samples[2:]):
        derivative = (np.array(nxt.point) - np.array(prev.point)) / (nxt.time - prev.time)
        worst = max(worst, float(np.max(np.abs(derivative - f(here.point)))))
    return worst


@lru_cache(maxsize=None)
def _oracle_series(chart: Chart, order: int):
    if chart == Chart.E:
        return tuple(eisenstein(w, order) for w in (2, 4, 6))
    if chart == Chart.B:
        return tuple(chazy_triple(order))
    raise ValueError(f"no series curve on the {chart.name.lower()} chart")


def series_point(chart, q: complex, order: int = 64) -> Tuple[complex, ...]:
    """The point of the Eisenstein curve at ``q`` on the ``E`` or ``B`` chart.

    The ``B`` chart uses ``(E2, theta E2 / 2, theta^2 E2 / 6)``.
    """
    return tuple(evaluate(s, q).value for s in _oracle_series(Chart.coerce(chart), order))


def e_from_b(point: Sequence[complex]) -> Tuple[complex, complex, complex]:
    """Map a ``(b2, b4, b6)`` point to ``(e2, e4, e6)``."""
    b2, b4, b6 = (complex(x) for x in point)
    return (b2, b2**2 - 24 * b4, b2**3 - 36 * b2 * b4 + 216 * b6)


def _pair(z: complex) -> list:
    return [z.real, z.imag]


def compare_with_series(
    chart, q0: float = 0.01, q1: float = 0.02, tol: float = 1e-10, order: int = 64
) -> Dict[str, object]:
    """Flow the Ramanujan field from the series point at ``q0`` to ``q1``.

    Returns
    -------
    dict
        ``endpoint`` and ``oracle`` as ``[re, im]`` pairs, ``max_abs_err``,
        ``steps``, ``rejected`` and the :class:`FlowResult` under ``result``

    Raises
    ------
    ValueError
        if ``q0`` or ``q1`` is not inside the unit disc or is zero
    """
    chart = Chart.coerce(chart)
    for q in (q0, q1):
        if q == 0 or abs(q) >= 1:
            raise ValueError(f"q = {q} must be nonzero and inside the unit disc")
    v = ramanujan_field(chart)
    start = FlowState(chart, series_point(chart, q0, order), cmath.log(q0))
    result = solve_flow(v, start, cmath.log(q1) - cmath.log(q0), tol)
    oracle = series_point(chart, q1, order)
    err = max(abs(a - b) for a, b in zip(result.state.point, oracle))
    logger.info(f"Flow on {chart.name.lower()} chart: max error {err:.3e} in {result.steps} steps")
    return {
        "endpoint": [_pair(z) for z in result.state.point],
        "oracle": [_pair(z) for z in oracle],
        "max_abs_err": err,
        "steps": result.steps,
        "rejected": result.rejected,
        "result": result,
    }
