# coding: utf-8
#
# Copyright (c) 2026 RAMANUJAN Authors (see AUTHORS.md).
#
# SPDX-License-Identifier: BSD-3-Clause.

"""Rational vector fields on affine charts and the Ramanujan vector fields.

A :class:`PolyVectorField` is a list of components ``v = sum_c v_c d/dc``.
Fields are pushed forward along :class:`ChartIsomorphism` objects, which
always carry an explicit inverse; no inverse is ever computed by
elimination.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .exact import RatFunc, RatMatrix, partial
from .gaussmanin import ConnectionChart, check_symplectic_compatibility, phi_matrix
from .io import load_chart_data
from .model import Chart

logger = logging.getLogger("ramanujan")


@dataclass(frozen=True, eq=False)
class PolyVectorField:
    """A vector field with rational-function components.

    Parameters
    ----------
    coordinates : sequence of str
        the chart coordinates
    coeffs : sequence
        one component per coordinate, the coefficient of ``d/dc``
    name : str, optional
        a label used in reports

    Raises
    ------
    ValueError
        if the number of components does not match the coordinates
    """

    coordinates: Tuple[str, ...]
    coeffs: Tuple[RatFunc, ...]
    name: str = None

    def __post_init__(self):
        object.__setattr__(self, "coordinates", tuple(self.coordinates))
        object.__setattr__(self, "coeffs", tuple(RatFunc._coerce_any(c) for c in self.coeffs))
        if len(self.coeffs) != len(self.coordinates):
            raise ValueError(
                f"{len(self.coeffs)} components given for {len(self.coordinates)} coordinates"
            )

    @classmethod
    def from_mapping(
        cls, coordinates: Sequence[str], components: Mapping[str, object], name: str = None
    ) -> "PolyVectorField":
        """Build a field from ``{coordinate: component}``; text is parsed.

        Missing coordinates get a zero component.
        """
        coordinates = tuple(coordinates)
        unknown = set(components) - set(coordinates)
        if unknown:
            raise ValueError(f"components given for unknown coordinates {sorted(unknown)}")
        coeffs = []
        for c in coordinates:
            value = components.get(c, 0)
            if isinstance(value, str):
                value = RatFunc.from_text(value, coordinates)
            coeffs.append(value)
        return cls(coordinates, coeffs, name)

    @classmethod
    def zero(cls, coordinates: Sequence[str]) -> "PolyVectorField":
        return cls(coordinates, [0] * len(tuple(coordinates)))

    def component(self, coordinate: str) -> RatFunc:
        return self.coeffs[self.coordinates.index(coordinate)]

    def apply(self, f) -> RatFunc:
        """The derivative ``v(f) = sum_c v_c df/dc`` of a rational function."""
        acc = RatFunc(0)
        for c, coeff in zip(self.coordinates, self.coeffs):
            if not coeff.is_zero():
                acc = acc + coeff * partial(f, c)
        return acc

    def _check(self, other: "PolyVectorField"):
        if self.coordinates != other.coordinates:
            raise ValueError(
                f"fields live on different charts: {self.coordinates} and {other.coordinates}"
            )

    def __add__(self, other: "PolyVectorField") -> "PolyVectorField":
        self._check(other)
        return PolyVectorField(
            self.coordinates, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __neg__(self) -> "PolyVectorField":
        return PolyVectorField(self.coordinates, [-a for a in self.coeffs], self.name)

    def __sub__(self, other: "PolyVectorField") -> "PolyVectorField":
        return self + (-other)

    def scale(self, f) -> "PolyVectorField":
        """Multiply every component by the function ``f``."""
        f = RatFunc._coerce_any(f)
        return PolyVectorField(self.coordinates, [f * a for a in self.coeffs])

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.coeffs)

    def is_polynomial(self) -> bool:
        return all(a.is_polynomial() for a in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, PolyVectorField):
            return NotImplemented
        return self.coordinates == other.coordinates and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    __hash__ = None

    def to_dict(self) -> Dict[str, str]:
        """Canonical text of each component."""
        return {c: a.to_text() for c, a in zip(self.coordinates, self.coeffs)}

    def __repr__(self):
        return f"PolyVectorField({self.to_dict()})"


def coordinate_field(coordinates: Sequence[str], name: str) -> PolyVectorField:
    """The coordinate vector field ``d/d name``."""
    coordinates = tuple(coordinates)
    if name not in coordinates:
        raise ValueError(f"unknown coordinate {name!r}")
    return PolyVectorField(
        coordinates, [1 if c == name else 0 for c in coordinates], name=f"d/d{name}"
    )


def ramanujan_field(chart) -> PolyVectorField:
    """The published Ramanujan vector field on the ``B`` or ``E`` chart.

    Raises
    ------
    ValueError
        for the Weierstrass chart, which carries no such field
    """
    chart = Chart.coerce(chart)
    fields = load_chart_data()["fields"]
    key = chart.name.lower()
    if key not in fields:
        raise ValueError(f"no published vector field on the {key} chart")
    raw = fields[key]
    coordinates = tuple(load_chart_data()["charts"][raw["chart"]]["coordinates"])
    return PolyVectorField.from_mapping(coordinates, raw["components"], name=f"v_{key}")


def lie_bracket(v: PolyVectorField, w: PolyVectorField) -> PolyVectorField:
    """The bracket ``[v, w]_c = v(w_c) - w(v_c)``.

    Raises
    ------
    ValueError
        if the fields live on different charts
    """
    v._check(w)
    return PolyVectorField(
        v.coordinates, [v.apply(wc) - w.apply(vc) for vc, wc in zip(v.coeffs, w.coeffs)]
    )


def verify_commutation(fields: Iterable[PolyVectorField]) -> bool:
    """Whether all pairwise brackets of the fields vanish."""
    fields = list(fields)
    for v, w in combinations(fields, 2):
        if not lie_bracket(v, w).is_zero():
            logger.info(f"Fields {v.name} and {w.name} do not commute")
            return False
    return True


@dataclass(frozen=True, eq=False)
class ChartIsomorphism:
    """An isomorphism of affine charts with an explicit inverse.

    Parameters
    ----------
    source, target : sequence of str
        coordinate names of the two charts (they may coincide)
    forward : mapping
        target coordinate to a rational function of the source coordinates
    inverse : mapping
        source coordinate to a rational function of the target coordinates
    parameters : sequence of str, optional
        extra variables, such as a formal scaling parameter, left untouched
    name : str, optional

    Raises
    ------
    ValueError
        if the two substitutions do not compose to the identity both ways
    """

    source: Tuple[str, ...]
    target: Tuple[str, ...]
    forward: Dict[str, RatFunc]
    inverse: Dict[str, RatFunc]
    parameters: Tuple[str, ...] = ()
    name: str = None

    def __post_init__(self):
        object.__setattr__(self, "source", tuple(self.source))
        object.__setattr__(self, "target", tuple(self.target))
        object.__setattr__(self, "parameters", tuple(self.parameters))
        forward = {c: RatFunc._coerce_any(v) for c, v in self.forward.items()}
        inverse = {c: RatFunc._coerce_any(v) for c, v in self.inverse.items()}
        object.__setattr__(self, "forward", forward)
        object.__setattr__(self, "inverse", inverse)
        if set(forward) != set(self.target):
            raise ValueError("the forward map must give every target coordinate")
        if set(inverse) != set(self.source):
            raise ValueError("the inverse map must give every source coordinate")
        for s in self.source:
            if inverse[s].substitute(forward) != RatFunc.variable(s):
                raise ValueError(f"not an isomorphism: inverse after forward moves {s}")
        for t in self.target:
            if forward[t].substitute(inverse) != RatFunc.variable(t):
                raise ValueError(f"not an isomorphism: forward after inverse moves {t}")


def identity_isomorphism(coordinates: Sequence[str]) -> ChartIsomorphism:
    coordinates = tuple(coordinates)
    ident = {c: RatFunc.variable(c) for c in coordinates}
    return ChartIsomorphism(coordinates, coordinates, ident, dict(ident), name="identity")


def compose_isomorphisms(second: ChartIsomorphism, first: ChartIsomorphism) -> ChartIsomorphism:
    """The isomorphism ``second . first`` (first ``first``, then ``second``).

    Raises
    ------
    ValueError
        if ``first`` does not land on the source of ``second``
    """
    if first.target != second.source:
        raise ValueError("cannot compose isomorphisms between different charts")
    forward = {t: v.substitute(first.forward) for t, v in second.forward.items()}
    inverse = {s: v.substitute(second.inverse) for s, v in first.inverse.items()}
    return ChartIsomorphism(
        first.source,
        second.target,
        forward,
        inverse,
        parameters=tuple(dict.fromkeys(first.parameters + second.parameters)),
        name=f"{second.name} o {first.name}",
    )


def b_to_e_isomorphism() -> ChartIsomorphism:
    """The coordinate change from ``(b2, b4, b6)`` to ``(e2, e4, e6)``."""
    data = load_chart_data()
    raw = data["morphisms"]["b_to_e"]
    source = tuple(data["charts"][raw["source"]]["coordinates"])
    target = tuple(data["charts"][raw["target"]]["coordinates"])
    forward = {t: RatFunc.from_text(x, source) for t, x in raw["coordinate-map"].items()}
    inverse = {s: RatFunc.from_text(x, target) for s, x in raw["inverse"].items()}
    return ChartIsomorphism(source, target, forward, inverse, name="b_to_e")


def scaling_isomorphism(
    coordinates: Sequence[str], weights: Sequence[int], parameter: str = "u"
) -> ChartIsomorphism:
    """The scaling ``c -> u**w(c) c`` with a formal invertible parameter ``u``."""
    coordinates = tuple(coordinates)
    if parameter in coordinates:
        raise ValueError(f"parameter {parameter!r} clashes with a coordinate")
    if len(weights) != len(coordinates):
        raise ValueError("one weight is needed per coordinate")
    u = RatFunc.variable(parameter)
    forward = {c: (u**w) * RatFunc.variable(c) for c, w in zip(coordinates, weights)}
    inverse = {c: RatFunc.variable(c) / (u**w) for c, w in zip(coordinates, weights)}
    return ChartIsomorphism(
        coordinates, coordinates, forward, inverse, parameters=(parameter,), name="scaling"
    )


def pushforward(v: PolyVectorField, iso: ChartIsomorphism) -> PolyVectorField:
    """Chain-rule pushforward ``(iso_* v)_t = v(forward_t)`` read in target coordinates.

    Raises
    ------
    ValueError
        if ``v`` does not live on the source chart of ``iso``
    """
    if v.coordinates != iso.source:
        raise ValueError(f"field on {v.coordinates} cannot be pushed along {iso.name}")
    coeffs = [v.apply(iso.forward[t]).substitute(iso.inverse) for t in iso.target]
    return PolyVectorField(iso.target, coeffs, name=v.name)


def _power_of(r: RatFunc, parameter: str):
    """Return ``k`` if ``r == parameter**k``, else None."""
    parts = []
    for p in (r.numerator, r.denominator):
        terms = p.terms
        if len(terms) != 1:
            return None
        exps, coeff = next(iter(terms.items()))
        if coeff != 1:
            return None
        powers = dict(zip(p.variables, exps))
        if any(e for name, e in powers.items() if name != parameter):
            return None
        parts.append(powers.get(parameter, 0))
    return parts[0] - parts[1]


def scaling_exponent(v: PolyVectorField, weights: Sequence[int], parameter: str = "u"):
    """The exponent ``k`` with ``(s_u)_* v = u**k v``, or None if there is none."""
    pushed = pushforward(v, scaling_isomorphism(v.coordinates, weights, parameter))
    ratio = None
    for a, b in zip(pushed.coeffs, v.coeffs):
        if b.is_zero():
            if not a.is_zero():
                return None
            continue
        r = a / b
        if ratio is None:
            ratio = r
        elif r != ratio:
            return None
    if ratio is None:
        return None
    return _power_of(ratio, parameter)


def solve_higher_ramanujan(conn: ConnectionChart) -> Dict[Tuple[int, int], PolyVectorField]:
    """Derive the higher Ramanujan vector fields from a connection.

    For every ``1 <= i <= j <= g`` this solves for the unique field ``v_ij``
    with ``nabla_{v_ij} eta_k = 0`` for all ``k`` and whose contraction sends
    each ``omega_k`` into the ``eta`` part with the pattern of ``phi_ij``
    (so ``nabla omega_i = eta_j`` and ``nabla omega_j = eta_i``). Every entry
    of the ``2g x 2g`` contraction matrix gives one linear equation in the
    components; the system is solved exactly over the chart's function field.

    Returns
    -------
    dict
        ``(i, j)`` (1-based) to the solved field

    Raises
    ------
    ValueError
        if the chart does not have ``2g**2 + g`` coordinates, is not
        symplectically compatible, or gives a singular system
    """
    g = conn.g
    n = len(conn.coordinates)
    if n != 2 * g * g + g:
        raise ValueError(
            f"chart {conn.name} has {n} coordinates, the moduli space needs {2 * g * g + g}"
        )
    if not all(check_symplectic_compatibility(conn).values()):
        raise ValueError(f"chart {conn.name} is not symplectically compatible")
    pairs = [(i, j) for i in range(1, g + 1) for j in range(i, g + 1)]
    phis = [phi_matrix(g, i, j) for i, j in pairs]
    rows, rhs = [], []
    for a in range(2 * g):
        for b in range(2 * g):
            rows.append([conn.omega(c)[a, b] for c in conn.coordinates])
            if b < g and a >= g:
                rhs.append([phi[a - g, b] for phi in phis])
            else:
                rhs.append([0] * len(pairs))
    try:
        solution = RatMatrix(rows).solve(RatMatrix(rhs))
    except ValueError as e:
        raise ValueError(f"chart {conn.name} has no unique Ramanujan fields: {e}")
    fields = dict()
    for k, (i, j) in enumerate(pairs):
        v = PolyVectorField(
            conn.coordinates, [solution[s, k] for s in range(n)], name=f"v_{i}{j}"
        )
        if not v.is_polynomial():
            logger.warning(f"Solved field v_{i}{j} on {conn.name} is not polynomial")
        fields[(i, j)] = v
    logger.info(f"Solved {len(pairs)} Ramanujan field(s) on {conn.name}")
    return fields
