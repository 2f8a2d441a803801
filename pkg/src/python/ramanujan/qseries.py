# coding: utf-8
#
# Copyright (c) 2026 RAMANUJAN Authors (see AUTHORS.md).
#
# SPDX-License-Identifier: BSD-3-Clause.

"""Truncated q-series, the Eisenstein series and the θ = q d/dq operator.

A :class:`TruncatedQSeries` of order ``N`` holds the exact coefficients of
``q**0`` through ``q**(N-1)`` as an element of the univariate ring ``QQ[q]``;
products, powers and inverses are truncated by :mod:`sympy.polys.ring_series`.
Binary operations return the smaller order of their operands, so no
coefficient is ever invented by zero padding.
"""

import logging
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np
from sympy import divisor_sigma as _divisor_sigma
from sympy.polys.domains import QQ
from sympy.polys.ring_series import rs_mul, rs_pow, rs_series_inversion, rs_trunc
from sympy.polys.rings import PolyElement, ring

from .exact import Scalar, to_fraction, to_qq

logger = logging.getLogger("ramanujan")

SERIES_RING, _q = ring("q", QQ)
"""The ring QQ[q] that carries every truncated series"""

EISENSTEIN_NORMALIZATION = {2: (-24, 1), 4: (240, 3), 6: (-504, 5)}
"""Weight to (scale, k) so that E_w = 1 + scale * sum sigma_k(n) q^n"""


class TruncatedQSeries:
    """A formal power series in q truncated at an exclusive order.

    Parameters
    ----------
    coeffs : sequence
        Exact coefficients of q^0, q^1, ...; the order is their count.
    order : int, optional
        Truncation order; shorter coefficient lists are NOT padded, longer
        ones are cut.
    """

    __slots__ = ("_series", "_order")

    def __init__(self, coeffs: Sequence[Scalar], order: int = None):
        coeffs = [to_qq(c) for c in coeffs]
        if order is not None:
            if order > len(coeffs):
                raise ValueError(
                    f"order {order} exceeds the {len(coeffs)} known coefficients"
                )
            coeffs = coeffs[:order]
        if len(coeffs) < 1:
            raise ValueError("a truncated series needs order >= 1")
        self._order = len(coeffs)
        self._series = SERIES_RING.from_dict({(n,): c for n, c in enumerate(coeffs)})

    @classmethod
    def from_element(cls, series: PolyElement, order: int) -> "TruncatedQSeries":
        """Wrap an element of :data:`SERIES_RING`, truncated at ``order``."""
        if order < 1:
            raise ValueError("a truncated series needs order >= 1")
        obj = cls.__new__(cls)
        obj._order = order
        obj._series = rs_trunc(series, _q, order)
        return obj

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "TruncatedQSeries":
        return cls.from_element(SERIES_RING(to_qq(value)), order)

    @classmethod
    def monomial(cls, n: int, order: int, coeff: Scalar = 1) -> "TruncatedQSeries":
        """The series ``coeff * q**n`` (zero if ``n >= order``)."""
        return cls.from_element(SERIES_RING.term_new((n,), to_qq(coeff)), order)

    @property
    def order(self) -> int:
        return self._order

    @property
    def element(self) -> PolyElement:
        """The underlying element of :data:`SERIES_RING`."""
        return self._series

    @property
    def coeffs(self):
        """The coefficients of q^0 .. q^(order-1) as Fractions."""
        return tuple(self[n] for n in range(self._order))

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            n += self._order
        if not 0 <= n < self._order:
            raise IndexError(f"coefficient {n} is beyond order {self._order}")
        return to_fraction(self._series.get((n,), QQ.zero))

    def __len__(self):
        return self._order

    def truncate(self, order: int) -> "TruncatedQSeries":
        return TruncatedQSeries.from_element(self._series, min(order, self._order))

    def is_zero(self) -> bool:
        return not self._series

    def first_nonzero_index(self):
        """Index of the first nonzero coefficient, or None for the zero series."""
        if not self._series:
            return None
        return min(m[0] for m in self._series)

    def _operand(self, other):
        if isinstance(other, TruncatedQSeries):
            return other
        try:
            return TruncatedQSeries.constant(to_fraction(other), self._order)
        except TypeError:
            return None

    def __add__(self, other):
        other = self._operand(other)
        if other is None:
            return NotImplemented
        n = min(self._order, other._order)
        return TruncatedQSeries.from_element(self._series + other._series, n)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedQSeries.from_element(-self._series, self._order)

    def __sub__(self, other):
        other = self._operand(other)
        if other is None:
            return NotImplemented
        n = min(self._order, other._order)
        return TruncatedQSeries.from_element(self._series - other._series, n)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedQSeries):
            try:
                c = to_qq(other)
            except TypeError:
                return NotImplemented
            return TruncatedQSeries.from_element(self._series.mul_ground(c), self._order)
        n = min(self._order, other._order)
        return TruncatedQSeries.from_element(rs_mul(self._series, other._series, _q, n), n)

    __rmul__ = __mul__

    def __pow__(self, power: int):
        if not isinstance(power, int) or power < 0:
            raise ValueError("series powers must be non-negative integers")
        if power == 0:
            return TruncatedQSeries.constant(1, self._order)
        return TruncatedQSeries.from_element(
            rs_pow(self._series, power, _q, self._order), self._order
        )

    def inverse(self) -> "TruncatedQSeries":
        """Multiplicative inverse to the same order.

        Raises
        ------
        ValueError
            if the constant term is not a unit (zero)
        """
        if self[0] == 0:
            raise ValueError("only series with nonzero constant term are invertible")
        return TruncatedQSeries.from_element(
            rs_series_inversion(self._series, _q, self._order), self._order
        )

    def __truediv__(self, other):
        if isinstance(other, TruncatedQSeries):
            return self * other.inverse()
        try:
            c = to_fraction(other)
        except TypeError:
            return NotImplemented
        return self * (1 / c)

    def __eq__(self, other):
        if not isinstance(other, TruncatedQSeries):
            return NotImplemented
        return self._order == other._order and self._series == other._series

    def __hash__(self):
        return hash((self._order, self.coeffs))

    def __repr__(self):
        head = ", ".join(str(self[n]) for n in range(min(5, self._order)))
        return f"TruncatedQSeries(order={self._order}, coeffs=[{head}, ...])"

def divisor_sigma(k: int, n: int) -> Fraction:
    """The divisor sum ``sum(d**k for d | n)``.

    Raises
    ------
    ValueError
        if ``n < 1`` or ``k < 0``
    """
    if n < 1:
        raise ValueError("divisor_sigma is defined for n >= 1")
    if k < 0:
        raise ValueError("divisor_sigma needs a non-negative power")
    return Fraction(int(_divisor_sigma(n, k)))


def eisenstein(weight: int, order: int) -> TruncatedQSeries:
    """The normalized Eisenstein series E_2, E_4 or E_6 to the given order.

    Raises
    ------
    ValueError
        if the weight is not 2, 4 or 6, or the order is below 1
    """
    if weight not in EISENSTEIN_NORMALIZATION:
        raise ValueError(f"unsupported weight {weight}; choose 2, 4 or 6")
    if order < 1:
        raise ValueError("order must be at least 1")
    scale, k = EISENSTEIN_NORMALIZATION[weight]
    coeffs = [Fraction(1)] + [scale * divisor_sigma(k, n) for n in range(1, order)]
    return TruncatedQSeries(coeffs)


def theta(s: TruncatedQSeries) -> TruncatedQSeries:
    """Apply θ = q d/dq: multiply the coefficient of q^n by n."""
    return TruncatedQSeries.from_element(_q * s.element.diff(0), s.order)


def delta_series(order: int) -> TruncatedQSeries:
    """The discriminant series E_4^3 - E_6^2."""
    return eisenstein(4, order) ** 3 - eisenstein(6, order) ** 2


class RamanujanResiduals(NamedTuple):
    """Residuals of the three Ramanujan equations."""

    e2: TruncatedQSeries
    """θE2 - (E2^2 - E4)/12"""
    e4: TruncatedQSeries
    """θE4 - (E2 E4 - E6)/3; the left-hand side is sometimes misprinted θE3"""
    e6: TruncatedQSeries
    """θE6 - (E2 E6 - E4^2)/2; the left-hand side is sometimes misprinted θE4"""


def _check_order(order: int):
    if order < 2:
        raise ValueError(f"order must be at least 2, got {order}")


def verify_ramanujan(order: int) -> RamanujanResiduals:
    """Residual series of the Ramanujan system at the given truncation order."""
    _check_order(order)
    e2, e4, e6 = (eisenstein(w, order) for w in (2, 4, 6))
    residuals = RamanujanResiduals(
        theta(e2) - (e2 * e2 - e4) / 12,
        theta(e4) - (e2 * e4 - e6) / 3,
        theta(e6) - (e2 * e6 - e4 * e4) / 2,
    )
    logger.info(
        f"Ramanujan residuals to order {order}: "
        f"{[r.first_nonzero_index() for r in residuals]}"
    )
    return residuals


def verify_chazy(order: int) -> TruncatedQSeries:
    """Residual of θ³E2 - E2 θ²E2 + (3/2)(θE2)^2 at the given order."""
    _check_order(order)
    e2 = eisenstein(2, order)
    t1 = theta(e2)
    t2 = theta(t1)
    t3 = theta(t2)
    residual = t3 - e2 * t2 + Fraction(3, 2) * t1 * t1
    logger.info(f"Chazy residual to order {order}: {residual.first_nonzero_index()}")
    return residual


def chazy_triple(order: int):
    """The integral curve (E2, θE2/2, θ²E2/6) in (b2, b4, b6) coordinates."""
    _check_order(order)
    e2 = eisenstein(2, order)
    t1 = theta(e2)
    return e2, t1 / 2, theta(t1) / 6


class Evaluation(NamedTuple):
    """A numerical series value with its reported (not rigorous) tail bound."""

    value: complex
    tail_bound: float
    growth: float
    """max |a_n| / n**7 over the stored coefficients"""


def evaluate(s: TruncatedQSeries, q: complex) -> Evaluation:
    """Evaluate the partial sum at ``q`` by Horner's rule.

    The tail bound is ``growth * N**7 * |q|**N / (1 - |q|)`` where ``growth``
    is the observed maximum of ``|a_n| / n**7``.

    Raises
    ------
    ValueError
        if ``|q| >= 1``
    """
    r = abs(q)
    if r >= 1:
        raise ValueError(f"|q| = {r} is outside the unit disc")
    coeffs = np.array([float(c) for c in s.coeffs], dtype=float)
    value = complex(np.polynomial.polynomial.polyval(complex(q), coeffs))
    n = np.arange(1, s.order, dtype=float)
    growth = float(np.max(np.abs(coeffs[1:]) / n**7)) if s.order > 1 else 0.0
    tail = growth * float(s.order) ** 7 * r**s.order / (1.0 - r)
    return Evaluation(value, tail, growth)
