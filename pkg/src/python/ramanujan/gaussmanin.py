# coding: utf-8
#
# Copyright (c) 2026 RAMANUJAN Authors (see AUTHORS.md).
#
# SPDX-License-Identifier: BSD-3-Clause.

"""Gauss-Manin connections on explicit charts of the universal elliptic curve.

A :class:`ConnectionChart` stores one ``2g x 2g`` matrix of rational functions
per coordinate. The frame convention is fixed: for a frame row
``b = (omega_1 .. omega_g, eta_1 .. eta_g)``,

    nabla_{d/dc} b = b . Omega^(c),   i.e.  nabla_{d/dc} b_j = sum_i b_i Omega^(c)_ij

A :class:`ChartMorphism` ``f`` from a source chart to a target chart carries a
frame change ``P`` that expresses the pulled-back target frame in the source
frame, ``f^*(target frame) = (source frame) . P``. Pulling a connection back
then gives

    Omega'_s = P (sum_c d f_c / d s . f^*Omega^(c)) P^-1 - (d P / d s) P^-1
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import TYPE_CHECKING, Dict, List, Mapping, Sequence, Tuple

from .exact import MultiPoly, RatFunc, RatMatrix, clear_delta, is_delta_unit, partial
from .io import load_chart_data
from .model import Chart

if TYPE_CHECKING:  # pragma: no cover
    from .vectorfields import PolyVectorField

logger = logging.getLogger("ramanujan")


@dataclass(frozen=True)
class AffineChart:
    """An affine chart: ordered coordinates with the discriminant inverted.

    Parameters
    ----------
    name : str
        chart name
    coordinates : sequence of str
        ordered coordinate names
    delta : MultiPoly
        the inverted polynomial
    weights : sequence of int, optional
        weights of the coordinates under the scaling action
    """

    name: str
    coordinates: Tuple[str, ...]
    delta: MultiPoly
    weights: Tuple[int, ...] = None

    def __post_init__(self):
        object.__setattr__(self, "coordinates", tuple(self.coordinates))
        if len(set(self.coordinates)) != len(self.coordinates):
            raise ValueError(f"duplicate coordinates in {self.coordinates}")
        if self.delta.is_zero():
            raise ValueError("delta cannot be the zero polynomial")
        extra = set(self.delta.used_variables()) - set(self.coordinates)
        if extra:
            raise ValueError(f"delta uses unknown variables {sorted(extra)}")
        if self.weights is not None:
            object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
            if len(self.weights) != len(self.coordinates):
                raise ValueError("one weight is needed per coordinate")


@dataclass(frozen=True, eq=False)
class ConnectionChart:
    """A connection in a fixed frame over an affine chart.

    Raises
    ------
    ValueError
        if a matrix is missing, has the wrong shape, or has an entry whose
        denominator does not divide a power of ``delta``
    """

    name: str
    coordinates: Tuple[str, ...]
    delta: MultiPoly
    frame_labels: Tuple[str, ...]
    omega_matrices: Dict[str, RatMatrix]
    weights: Tuple[int, ...] = None
    frame_weights: Tuple[int, ...] = None
    anomalies: Tuple[str, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "coordinates", tuple(self.coordinates))
        object.__setattr__(self, "frame_labels", tuple(self.frame_labels))
        if set(self.omega_matrices) != set(self.coordinates):
            raise ValueError(
                f"connection matrices given for {sorted(self.omega_matrices)}, "
                f"chart coordinates are {list(self.coordinates)}"
            )
        n = len(self.frame_labels)
        if n == 0 or len(self.frame_labels) % 2:
            raise ValueError("the frame needs 2g labels")
        for c, m in self.omega_matrices.items():
            if m.shape != (n, n):
                raise ValueError(f"matrix for {c} has shape {m.shape}, expected {(n, n)}")
            for row in m.rows:
                for entry in row:
                    try:
                        clear_delta(entry, self.delta)
                    except ValueError:
                        raise ValueError(
                            f"entry {entry} of the {c} matrix is not regular off delta"
                        )

    @property
    def g(self) -> int:
        return len(self.frame_labels) // 2

    @property
    def affine(self) -> AffineChart:
        """The underlying affine chart."""
        return AffineChart(self.name, self.coordinates, self.delta, self.weights)

    def omega(self, coordinate: str) -> RatMatrix:
        """The matrix of the connection along ``d/d coordinate``."""
        return self.omega_matrices[coordinate]

    def __eq__(self, other):
        if not isinstance(other, ConnectionChart):
            return NotImplemented
        return (
            self.coordinates == other.coordinates
            and self.g == other.g
            and all(self.omega(c) == other.omega(c) for c in self.coordinates)
        )

    __hash__ = None


@dataclass(frozen=True, eq=False)
class ChartMorphism:
    """A morphism of charts with a frame change.

    Parameters
    ----------
    source, target : AffineChart
        the charts; the morphism goes from ``source`` to ``target``
    coordinate_map : mapping
        target coordinate to a rational function of the source coordinates
    frame_change : RatMatrix
        ``P`` with ``f^*(target frame) = (source frame) . P``

    Raises
    ------
    ValueError
        if the map does not cover the target coordinates, uses unknown
        variables, or does not send the target delta to a unit
    """

    source: AffineChart
    target: AffineChart
    coordinate_map: Dict[str, RatFunc]
    frame_change: RatMatrix
    name: str = None

    def __post_init__(self):
        cmap = {c: RatFunc._coerce_any(v) for c, v in self.coordinate_map.items()}
        object.__setattr__(self, "coordinate_map", cmap)
        if set(cmap) != set(self.target.coordinates):
            raise ValueError(
                f"coordinate map covers {sorted(cmap)}, "
                f"target coordinates are {list(self.target.coordinates)}"
            )
        allowed = set(self.source.coordinates)
        for c, value in cmap.items():
            used = set(value.numerator.used_variables()) | set(
                value.denominator.used_variables()
            )
            if not used <= allowed:
                raise ValueError(f"image of {c} uses {sorted(used - allowed)}")
        n, m = self.frame_change.shape
        if n != m or n % 2:
            raise ValueError(f"frame change must be 2g x 2g, got {self.frame_change.shape}")
        image = self.target.delta.substitute(cmap)
        if not is_delta_unit(image, self.source.delta):
            raise ValueError(
                f"the target delta does not pull back to a unit on {self.source.name}"
            )
        if self.name is None:
            object.__setattr__(self, "name", f"{self.source.name}_to_{self.target.name}")


def _coordinate_of(differential: str, coordinates: Sequence[str]) -> str:
    name = differential[1:] if differential.startswith("d") else differential
    if name not in coordinates:
        raise ValueError(f"unknown differential {differential!r}")
    return name


def _raw_chart(which) -> dict:
    which = Chart.coerce(which)
    return load_chart_data()["charts"][which.name.lower()]


def printed_chart(which) -> Dict[str, List[Tuple[str, str]]]:
    """The published connection entries, as ``(differential, numerator)`` pairs.

    The numerators are text over ``Delta`` exactly as published; entry
    ``"22"`` is given as the reference ``"-11"``.
    """
    omega = _raw_chart(which)["omega"]
    return {
        key: (value if isinstance(value, str) else [tuple(pair) for pair in value])
        for key, value in omega.items()
    }


def printed_anomalies(which) -> List[Dict[str, str]]:
    """Differentials listed more than once in a published entry.

    For every entry with a repeated differential, the coordinates missing from
    that entry are reported as well, since they are the likely intended slots.
    """
    raw = _raw_chart(which)
    coordinates = tuple(raw["coordinates"])
    found = []
    for key, value in printed_chart(which).items():
        if isinstance(value, str):
            continue
        listed = [_coordinate_of(d, coordinates) for d, _ in value]
        repeated = sorted({c for c in listed if listed.count(c) > 1})
        for c in repeated:
            found.append({"entry": key, "kind": "duplicated", "differential": f"d{c}"})
        if repeated:
            for c in coordinates:
                if c not in listed:
                    found.append({"entry": key, "kind": "missing", "differential": f"d{c}"})
    return found


def _chart_from_data(name: str, raw: dict, anomalies=()) -> ConnectionChart:
    coordinates = tuple(raw["coordinates"])
    delta = MultiPoly.from_text(raw["delta"], coordinates)
    names = coordinates + ("Delta",)
    entries = dict()
    for key in ("11", "12", "21"):
        sums = {c: RatFunc(0) for c in coordinates}
        for differential, text in raw["omega"][key]:
            c = _coordinate_of(differential, coordinates)
            value = RatFunc.from_text(text, names).substitute({"Delta": RatFunc(delta)})
            sums[c] = sums[c] + value
        entries[key] = sums
    if raw["omega"].get("22", "-11") != "-11":
        raise ValueError("only Omega_22 = -Omega_11 is supported in chart data")
    entries["22"] = {c: -v for c, v in entries["11"].items()}
    inverse_delta = RatFunc(1, delta)
    matrices = {
        c: RatMatrix(
            [
                [entries["11"][c], entries["12"][c]],
                [entries["21"][c], entries["22"][c]],
            ]
        ).scale(inverse_delta)
        for c in coordinates
    }
    return ConnectionChart(
        name=name,
        coordinates=coordinates,
        delta=delta,
        frame_labels=tuple(raw["frame"]),
        omega_matrices=matrices,
        weights=tuple(raw["weights"]) if "weights" in raw else None,
        frame_weights=tuple(raw["frame-weights"]) if "frame-weights" in raw else None,
        anomalies=tuple(anomalies),
    )


@lru_cache(maxsize=None)
def builtin_chart(which) -> ConnectionChart:
    """The published connection on one of the built-in charts.

    Repeated differentials in the published entries are summed and listed in
    :attr:`ConnectionChart.anomalies`.

    Parameters
    ----------
    which : Chart or str
        ``WEIERSTRASS``, ``E`` or ``B``
    """
    which = Chart.coerce(which)
    anomalies = [
        f"{a['kind']} {a['differential']} in Omega_{a['entry']}"
        for a in printed_anomalies(which)
    ]
    for text in anomalies:
        logger.warning(f"Published {which.name.lower()} chart: {text}")
    return _chart_from_data(which.name.lower(), _raw_chart(which), anomalies)


def _affine(which) -> AffineChart:
    return builtin_chart(which).affine


def builtin_morphism(name: str) -> ChartMorphism:
    """One of the packaged chart morphisms.

    Parameters
    ----------
    name : str
        ``"e_to_weierstrass"`` or ``"b_to_e"``

    Raises
    ------
    KeyError
        if there is no such morphism
    """
    raw = load_chart_data()["morphisms"][name]
    source = _affine(raw["source"])
    target = _affine(raw["target"])
    cmap = {
        c: RatFunc.from_text(text, source.coordinates)
        for c, text in raw["coordinate-map"].items()
    }
    frame_change = RatMatrix(
        [[RatFunc.from_text(t, source.coordinates) for t in row] for row in raw["frame-change"]]
    )
    return ChartMorphism(source, target, cmap, frame_change, name=name)


def identity_morphism(chart, size: int = 2) -> ChartMorphism:
    """The identity morphism of a chart with the identity frame change."""
    if isinstance(chart, ConnectionChart):
        size = 2 * chart.g
        chart = chart.affine
    cmap = {c: RatFunc.variable(c) for c in chart.coordinates}
    return ChartMorphism(chart, chart, cmap, RatMatrix.identity(size), name=f"id_{chart.name}")


def compose_morphisms(outer: ChartMorphism, inner: ChartMorphism) -> ChartMorphism:
    """The composition ``outer . inner`` (first ``inner``, then ``outer``).

    Raises
    ------
    ValueError
        if the target of ``inner`` is not the source of ``outer``
    """
    if inner.target.coordinates != outer.source.coordinates:
        raise ValueError(
            f"cannot compose {outer.name} after {inner.name}: charts do not match"
        )
    cmap = {c: v.substitute(inner.coordinate_map) for c, v in outer.coordinate_map.items()}
    frame_change = inner.frame_change @ outer.frame_change.substitute(inner.coordinate_map)
    return ChartMorphism(
        inner.source,
        outer.target,
        cmap,
        frame_change,
        name=f"{inner.source.name}_to_{outer.target.name}",
    )


def pullback_connection(
    conn: ConnectionChart, m: ChartMorphism, frame_labels: Sequence[str] = None
) -> ConnectionChart:
    """Pull a connection back along a chart morphism with frame change.

    Parameters
    ----------
    conn : ConnectionChart
        a connection on the target chart of ``m``
    m : ChartMorphism
        the morphism
    frame_labels : sequence of str, optional
        labels of the new frame, by default those of ``conn``

    Returns
    -------
    ConnectionChart
        the connection on the source chart in the source frame

    Raises
    ------
    ValueError
        if the charts do not match or the frame change is not invertible
    """
    if conn.coordinates != m.target.coordinates:
        raise ValueError(
            f"morphism {m.name} targets {m.target.coordinates}, "
            f"connection lives on {conn.coordinates}"
        )
    n = 2 * conn.g
    P = m.frame_change
    if P.shape != (n, n):
        raise ValueError(f"frame change has shape {P.shape}, expected {(n, n)}")
    try:
        P_inv = P.inverse()
    except ValueError:
        raise ValueError(f"frame change of {m.name} is not invertible")
    pulled = {c: conn.omega(c).substitute(m.coordinate_map) for c in conn.coordinates}
    matrices = dict()
    for s in m.source.coordinates:
        acc = RatMatrix.zeros(n)
        for c in conn.coordinates:
            df = partial(m.coordinate_map[c], s)
            if not df.is_zero():
                acc = acc + pulled[c].scale(df)
        matrices[s] = P @ acc @ P_inv - P.diff(s) @ P_inv
    logger.debug(f"Pulled back {conn.name} along {m.name}")
    return ConnectionChart(
        name=m.source.name,
        coordinates=m.source.coordinates,
        delta=m.source.delta,
        frame_labels=tuple(frame_labels) if frame_labels else conn.frame_labels,
        omega_matrices=matrices,
        weights=m.source.weights,
        frame_weights=conn.frame_weights,
    )


@lru_cache(maxsize=None)
def derived_chart(which) -> ConnectionChart:
    """The connection on a built-in chart obtained from the Weierstrass chart.

    The ``E`` chart is the pullback along ``e_to_weierstrass``; the ``B`` chart
    is the pullback of that along ``b_to_e``. The Weierstrass chart is
    returned as published.
    """
    which = Chart.coerce(which)
    if which == Chart.WEIERSTRASS:
        return builtin_chart(which)
    if which == Chart.E:
        return pullback_connection(
            builtin_chart(Chart.WEIERSTRASS), builtin_morphism("e_to_weierstrass")
        )
    labels = _raw_chart(Chart.B)["frame"]
    return pullback_connection(derived_chart(Chart.E), builtin_morphism("b_to_e"), labels)


def standard_form(g: int) -> RatMatrix:
    """The Gram matrix ``J = [[0, I], [-I, 0]]`` of the frame pairing."""
    return RatMatrix(
        [
            [
                1 if j == i + g else (-1 if i == j + g else 0)
                for j in range(2 * g)
            ]
            for i in range(2 * g)
        ]
    )


def phi_matrix(g: int, i: int, j: int) -> RatMatrix:
    """The symmetric g x g matrix phi_ij (1-based): E_ii, or E_ij + E_ji for i != j."""
    if not (1 <= i <= g and 1 <= j <= g):
        raise ValueError(f"indices ({i}, {j}) out of range for g = {g}")
    return RatMatrix(
        [
            [1 if {a + 1, b + 1} == {i, j} else 0 for b in range(g)]
            for a in range(g)
        ]
    )


def check_symplectic_compatibility(conn: ConnectionChart) -> Dict[str, bool]:
    """Whether ``Omega^T J + J Omega = 0`` along every coordinate.

    For g = 1 this says ``Omega_22 = -Omega_11``.
    """
    J = standard_form(conn.g)
    result = dict()
    for c in conn.coordinates:
        omega = conn.omega(c)
        result[c] = (omega.T @ J + J @ omega).is_zero()
    return result


def contract(conn: ConnectionChart, v: "PolyVectorField") -> RatMatrix:
    """The matrix ``sum_c v_c Omega^(c)`` of ``nabla_v`` in the chart frame.

    Raises
    ------
    ValueError
        if ``v`` lives on other coordinates
    """
    if tuple(v.coordinates) != conn.coordinates:
        raise ValueError(
            f"vector field on {tuple(v.coordinates)} cannot be contracted "
            f"with a connection on {conn.coordinates}"
        )
    n = 2 * conn.g
    acc = RatMatrix.zeros(n)
    for c, coeff in zip(conn.coordinates, v.coeffs):
        if not coeff.is_zero():
            acc = acc + conn.omega(c).scale(coeff)
    return acc


def kodaira_spencer(conn: ConnectionChart, v: "PolyVectorField") -> RatMatrix:
    """The g x g matrix ``K_ik = <omega_k, nabla_v omega_i>``.

    Raises
    ------
    ValueError
        if the chart is not symplectically compatible, the field lives on
        another chart, or ``K`` is not symmetric
    """
    compatible = check_symplectic_compatibility(conn)
    if not all(compatible.values()):
        bad = [c for c, ok in compatible.items() if not ok]
        raise ValueError(f"chart {conn.name} is not symplectically compatible along {bad}")
    M = contract(conn, v)
    g = conn.g
    K = RatMatrix([[M[g + k, i] for k in range(g)] for i in range(g)])
    if K != K.T:
        raise ValueError(f"asymmetric Kodaira-Spencer matrix on {conn.name}")
    return K


def check_curvature(conn: ConnectionChart) -> Dict[Tuple[str, str], bool]:
    """Whether the curvature vanishes on every pair of coordinates.

    The curvature of the pair ``(c, d)`` in the row convention is
    ``d_c Omega^(d) - d_d Omega^(c) + Omega^(c) Omega^(d) - Omega^(d) Omega^(c)``.
    A curved chart is logged as a warning.
    """
    result = dict()
    for c, d in combinations(conn.coordinates, 2):
        oc, od = conn.omega(c), conn.omega(d)
        R = od.diff(c) - oc.diff(d) + oc @ od - od @ oc
        result[(c, d)] = R.is_zero()
        if not result[(c, d)]:
            logger.warning(f"Connection on {conn.name} is curved along ({c}, {d})")
    return result


def _weighted_degree(p: MultiPoly, weights: Mapping[str, int]):
    degrees = {
        sum(weights.get(v, 0) * e for v, e in zip(p.variables, exps)) for exps in p.terms
    }
    if len(degrees) != 1:
        return None
    return degrees.pop()


def check_homogeneity(
    conn: ConnectionChart, weights: Sequence[int] = None, frame_weights: Sequence[int] = None
) -> Dict[str, bool]:
    """Whether the connection is homogeneous under the scaling action.

    The entry ``(i, j)`` of ``Omega^(c)`` must have weighted degree
    ``s_j - s_i - w(c)``, where ``w`` are the coordinate weights and ``s`` the
    frame weights (``(0, 2)`` for ``(omega, eta)``). Zero entries always pass.

    Raises
    ------
    ValueError
        if the chart carries no weights and none are given
    """
    weights = conn.weights if weights is None else tuple(weights)
    frame_weights = conn.frame_weights if frame_weights is None else tuple(frame_weights)
    if weights is None or frame_weights is None:
        raise ValueError(f"no scaling weights known for chart {conn.name}")
    w = dict(zip(conn.coordinates, weights))
    result = dict()
    for c in conn.coordinates:
        ok = True
        omega = conn.omega(c)
        for i, row in enumerate(omega.rows):
            for j, entry in enumerate(row):
                if entry.is_zero():
                    continue
                dn = _weighted_degree(entry.numerator, w)
                dd = _weighted_degree(entry.denominator, w)
                expected = frame_weights[j] - frame_weights[i] - w[c]
                if dn is None or dd is None or dn - dd != expected:
                    ok = False
        result[c] = ok
    return result


def diff_charts(printed: ConnectionChart, derived: ConnectionChart) -> List[Dict[str, object]]:
    """Entry-by-entry comparison of two connections on the same coordinates.

    Each row gives the coordinate, the entry label, both numerators over the
    printed chart's ``delta`` in canonical text, and whether they agree.

    Raises
    ------
    ValueError
        if the charts use different coordinates or frame sizes
    """
    if printed.coordinates != derived.coordinates or printed.g != derived.g:
        raise ValueError("only charts on the same coordinates can be compared")
    n = 2 * printed.g
    delta = RatFunc(printed.delta)
    rows = []
    for c in printed.coordinates:
        for i in range(n):
            for j in range(n):
                a = printed.omega(c)[i, j]
                b = derived.omega(c)[i, j]
                rows.append(
                    {
                        "coordinate": c,
                        "entry": f"{i + 1}{j + 1}",
                        "printed": (a * delta).to_text(),
                        "derived": (b * delta).to_text(),
                        "equal": a == b,
                    }
                )
    mismatches = sum(not r["equal"] for r in rows)
    if mismatches:
        logger.info(f"{mismatches} entries of {printed.name} differ from the derived chart")
    return rows
