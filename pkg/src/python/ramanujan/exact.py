# coding: utf-8
#
# Copyright (c) 2026 RAMANUJAN Authors (see AUTHORS.md).
#
# SPDX-License-Identifier: BSD-3-Clause.

"""Exact rational arithmetic on polynomials, rational functions and matrices.

Polynomials are elements of sympy's sparse polynomial rings
(:class:`sympy.polys.rings.PolyRing` over ``QQ`` with graded-lexicographic
order in the declared variable order), so that ring arithmetic, gcd
cancellation and differentiation all run on sympy's low-level types. The
public interface hands out :class:`fractions.Fraction` coefficients and there
is no floating point in this module.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

import sympy
from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing

logger = logging.getLogger("ramanujan")

Monomial = Tuple[int, ...]
Scalar = Union[int, Fraction]


def to_fraction(value) -> Fraction:
    """Convert an exact scalar (int, Fraction, sympy Rational or a ``QQ``
    element) to a Fraction.

    Raises
    ------
    TypeError
        for floats, booleans and anything without an exact value
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not exact scalars")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        if not isinstance(value, float):
            return Fraction(int(value.numerator), int(value.denominator))
    raise TypeError(f"cannot use {type(value).__name__} as an exact coefficient")


def to_qq(value):
    """Convert an exact scalar to an element of sympy's ``QQ`` domain."""
    c = to_fraction(value)
    return QQ(c.numerator, c.denominator)


@lru_cache(maxsize=None)
def polynomial_ring(variables: Tuple[str, ...]) -> PolyRing:
    """The ring ``QQ[variables]`` with graded-lex order, one per variable tuple."""
    return PolyRing(tuple(sympy.Symbol(v) for v in variables), QQ, grlex)


def _union(first: Sequence[str], second: Sequence[str]) -> Tuple[str, ...]:
    return tuple(first) + tuple(v for v in second if v not in first)


def _format_fraction(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


class MultiPoly:
    """A sparse multivariate polynomial with rational coefficients.

    Parameters
    ----------
    variables : sequence of str
        The ordered variable names.
    terms : mapping
        Exponent vector (one non-negative int per variable) to coefficient.
        Zero coefficients are dropped.

    Notes
    -----
    Binary operations on polynomials with different variable lists work on
    the name union, keeping the left operand's order first. Equality and
    hashing compare values, so ``x`` over ``(x,)`` equals ``x`` over ``(x, y)``.
    """

    __slots__ = ("_variables", "_poly")

    def __init__(
        self,
        variables: Sequence[str] = (),
        terms: Mapping[Monomial, Scalar] = None,
    ):
        variables = tuple(str(v) for v in variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        cleaned = dict()
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(variables):
                raise ValueError(
                    f"exponent vector {exps} does not match variables {variables}"
                )
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            cleaned[exps] = to_qq(coeff)
        self._variables = variables
        self._poly = polynomial_ring(variables).from_dict(cleaned)

    @classmethod
    def from_element(cls, variables: Sequence[str], poly: PolyElement) -> "MultiPoly":
        """Wrap an element of :func:`polynomial_ring` ``(variables)``."""
        variables = tuple(variables)
        obj = cls.__new__(cls)
        obj._variables = variables
        obj._poly = poly.set_ring(polynomial_ring(variables))
        return obj

    @classmethod
    def constant(cls, value: Scalar, variables: Sequence[str] = ()) -> "MultiPoly":
        """Create the constant polynomial ``value``."""
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def variable(cls, name: str, variables: Sequence[str] = None) -> "MultiPoly":
        """Create the polynomial ``name`` over ``variables`` (default: just ``name``)."""
        variables = (name,) if variables is None else tuple(variables)
        if name not in variables:
            raise ValueError(f"unknown variable {name!r}")
        return cls.from_element(variables, polynomial_ring(variables).gens[variables.index(name)])

    @classmethod
    def from_sympy(cls, expr, variables: Sequence[str]) -> "MultiPoly":
        """Convert a polynomial sympy expression in ``variables``."""
        variables = tuple(variables)
        expr = sympy.expand(sympy.sympify(expr))
        if not variables:
            return cls.constant(to_fraction(sympy.Rational(expr)))
        poly = sympy.Poly(expr, *(sympy.Symbol(v) for v in variables), domain=QQ)
        return cls.from_element(
            variables, polynomial_ring(variables).from_dict(poly.as_dict(native=True))
        )

    @classmethod
    def from_text(cls, text: str, variables: Sequence[str]) -> "MultiPoly":
        """Parse a polynomial written in the canonical text form (or any
        sympy-readable form, ``^`` meaning power) over ``variables``."""
        return cls.from_sympy(_parse(text, variables), variables)

    @property
    def variables(self) -> Tuple[str, ...]:
        """The ordered variable names."""
        return self._variables

    @property
    def element(self) -> PolyElement:
        """The underlying sympy ring element."""
        return self._poly

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        """The term map, in graded-lexicographic descending order."""
        return {m: to_fraction(c) for m, c in self._poly.terms()}

    def __len__(self):
        return len(self._poly)

    def is_zero(self) -> bool:
        return not self._poly

    def is_constant(self) -> bool:
        return self._poly.is_ground

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial."""
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        if not self._poly:
            return Fraction(0)
        return to_fraction(self._poly.LC)

    def degree(self, var: str = None) -> int:
        """Total degree, or the degree in ``var``; the zero polynomial has degree -1."""
        if not self._poly:
            return -1
        if var is None:
            return max(sum(e) for e in self._poly)
        if var not in self._variables:
            return 0
        return int(self._poly.degree(self._variables.index(var)))

    def used_variables(self) -> Tuple[str, ...]:
        """The variables that occur with a positive exponent."""
        return tuple(
            v for k, v in enumerate(self._variables) if any(e[k] for e in self._poly)
        )

    def leading_coefficient(self) -> Fraction:
        """Leading coefficient under graded-lex order on sorted variable names.

        This is independent of the declared variable order and is used to
        normalize rational-function denominators.
        """
        if not self._poly:
            return Fraction(0)
        index = [self._variables.index(n) for n in sorted(self._variables)]

        def key(exps):
            exps = tuple(exps[k] for k in index)
            return (sum(exps), exps)

        return to_fraction(self._poly[max(self._poly, key=key)])

    def with_variables(self, variables: Sequence[str]) -> "MultiPoly":
        """Re-express over a variable list that contains all used variables."""
        variables = tuple(variables)
        if variables == self._variables:
            return self
        missing = set(self.used_variables()) - set(variables)
        if missing:
            raise ValueError(f"variables {sorted(missing)} are not in {variables}")
        return MultiPoly.from_element(variables, self._embed(variables))

    def _embed(self, variables: Tuple[str, ...]) -> PolyElement:
        if variables == self._variables:
            return self._poly
        return self._poly.set_ring(polynomial_ring(variables))

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            return other
        try:
            return MultiPoly.constant(to_fraction(other))
        except TypeError:
            return None

    def _binary(self, other, op):
        variables = _union(self._variables, other._variables)
        return MultiPoly.from_element(
            variables, op(self._embed(variables), other._embed(variables))
        )

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._binary(other, lambda a, b: a + b)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly.from_element(self._variables, -self._poly)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._binary(other, lambda a, b: a - b)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._binary(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        return MultiPoly.from_element(self._variables, self._poly**n)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        variables = _union(self._variables, other._variables)
        return self._embed(variables) == other._embed(variables)

    def __hash__(self):
        used = set(self.used_variables())
        return hash(
            frozenset(
                (
                    tuple(
                        (v, e) for v, e in zip(self._variables, exps) if v in used and e
                    ),
                    c,
                )
                for exps, c in self.terms.items()
            )
        )

    def diff(self, var: str, strict: bool = True) -> "MultiPoly":
        """Formal partial derivative with respect to ``var``.

        Raises
        ------
        ValueError
            if ``var`` is not one of the polynomial's variables and ``strict``
        """
        if var not in self._variables:
            if strict:
                raise ValueError(f"unknown variable {var!r}")
            return MultiPoly.constant(0, self._variables)
        return MultiPoly.from_element(
            self._variables, self._poly.diff(self._variables.index(var))
        )

    def _substitute_parts(self, assignment: Mapping[str, "RatFunc"]):
        """Substitute and return (numerator, denominator) polynomials.

        Each assigned variable ``x -> N/D`` contributes a common denominator
        ``D**deg_x``; unassigned variables are left in place.
        """
        values = {
            v: RatFunc._coerce_any(assignment[v])
            for v in self._variables
            if v in assignment
        }
        kept = tuple(v for v in self._variables if v not in values)
        variables = kept
        for r in values.values():
            variables = _union(variables, r.variables)
        ring = polynomial_ring(variables)
        degrees = {v: self.degree(v) for v in values}
        num_powers = dict()
        den_powers = dict()
        for v, r in values.items():
            num, den = r.numerator._embed(variables), r.denominator._embed(variables)
            num_powers[v] = [ring.one]
            den_powers[v] = [ring.one]
            for _ in range(degrees[v]):
                num_powers[v].append(num_powers[v][-1] * num)
                den_powers[v].append(den_powers[v][-1] * den)
        kept_index = [(k, variables.index(v)) for k, v in enumerate(self._variables) if v in kept]
        numerator = ring.zero
        for exps, c in self._poly.iterterms():
            monomial = [0] * len(variables)
            for k, j in kept_index:
                monomial[j] = exps[k]
            term = ring.term_new(tuple(monomial), c)
            for k, v in enumerate(self._variables):
                if v in values:
                    e = exps[k]
                    term = term * num_powers[v][e] * den_powers[v][degrees[v] - e]
            numerator += term
        denominator = ring.one
        for v in values:
            denominator = denominator * den_powers[v][degrees[v]]
        return (
            MultiPoly.from_element(variables, numerator),
            MultiPoly.from_element(variables, denominator),
        )

    def substitute(self, assignment: Mapping[str, "RatFunc"]) -> "RatFunc":
        """Simultaneously substitute rational functions for variables."""
        return RatFunc(self).substitute(assignment)

    def to_sympy(self):
        """Convert to a sympy expression."""
        symbols = [sympy.Symbol(v) for v in self._variables]
        expr = sympy.Integer(0)
        for exps, c in self.terms.items():
            term = sympy.Rational(c.numerator, c.denominator)
            for s, e in zip(symbols, exps):
                if e:
                    term = term * s**e
            expr = expr + term
        return expr

    def to_text(self) -> str:
        """Canonical text: graded-lex descending terms, explicit exponents."""
        if not self._poly:
            return "0"
        parts = []
        for exps, c in self.terms.items():
            factors = []
            for v, e in zip(self._variables, exps):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            magnitude = abs(c)
            if not factors:
                body = _format_fraction(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = _format_fraction(magnitude) + "*" + "*".join(factors)
            parts.append(("-" if c < 0 else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"MultiPoly({self.to_text()!r}, variables={self._variables})"


def _parse(text: str, variables: Sequence[str]):
    local = {v: sympy.Symbol(v) for v in variables}
    return sympy.sympify(text, locals=local, convert_xor=True)


def _as_poly(value) -> MultiPoly:
    if isinstance(value, MultiPoly):
        return value
    return MultiPoly.constant(to_fraction(value))


def _normalize(num: MultiPoly, den: MultiPoly):
    """Reduce ``num/den`` to coprime form with a leading-coefficient-one denominator."""
    variables = _union(num.variables, den.variables)
    one = MultiPoly.constant(1, variables)
    if num.is_zero():
        return MultiPoly.constant(0, variables), one
    if den.is_constant():
        return num * (1 / den.constant_value()), one
    if num == den:
        return one, one
    p, q = num._embed(variables).cancel(den._embed(variables))
    num = MultiPoly.from_element(variables, p)
    den = MultiPoly.from_element(variables, q)
    lc = den.leading_coefficient()
    if den.is_constant():
        return num * (1 / lc), one
    return num * (1 / lc), den * (1 / lc)



class RatFunc:
    """A reduced quotient of two :class:`MultiPoly` values.

    The numerator and denominator are coprime and the denominator's leading
    coefficient (see :meth:`MultiPoly.leading_coefficient`) is one, so equal
    rational functions have identical numerator and denominator.

    Raises
    ------
    ZeroDivisionError
        if the denominator is the zero polynomial
    """

    __slots__ = ("_num", "_den")

    def __init__(self, numerator=0, denominator=1):
        num = _as_poly(numerator)
        den = _as_poly(denominator)
        if den.is_zero():
            raise ZeroDivisionError("denominator is the zero polynomial")
        self._num, self._den = _normalize(num, den)

    @classmethod
    def _coerce_any(cls, value) -> "RatFunc":
        if isinstance(value, RatFunc):
            return value
        return cls(_as_poly(value))

    @classmethod
    def constant(cls, value: Scalar, variables: Sequence[str] = ()) -> "RatFunc":
        return cls(MultiPoly.constant(value, variables))

    @classmethod
    def variable(cls, name: str, variables: Sequence[str] = None) -> "RatFunc":
        return cls(MultiPoly.variable(name, variables))

    @classmethod
    def from_sympy(cls, expr, variables: Sequence[str]) -> "RatFunc":
        """Convert a rational sympy expression in ``variables``."""
        num, den = sympy.fraction(sympy.cancel(sympy.together(sympy.sympify(expr))))
        return cls(MultiPoly.from_sympy(num, variables), MultiPoly.from_sympy(den, variables))

    @classmethod
    def from_text(cls, text: str, variables: Sequence[str]) -> "RatFunc":
        """Parse a rational function written over ``variables``."""
        return cls.from_sympy(_parse(text, variables), variables)

    @property
    def numerator(self) -> MultiPoly:
        return self._num

    @property
    def denominator(self) -> MultiPoly:
        return self._den

    @property
    def variables(self) -> Tuple[str, ...]:
        return _union(self._num.variables, self._den.variables)

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def is_polynomial(self) -> bool:
        return self._den.is_constant()

    def is_constant(self) -> bool:
        return self._den.is_constant() and self._num.is_constant()

    def as_poly(self) -> MultiPoly:
        """The numerator of a polynomial-valued rational function."""
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial")
        return self._num

    def constant_value(self) -> Fraction:
        return self.as_poly().constant_value()

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        try:
            return RatFunc(_as_poly(other))
        except TypeError:
            return None

    @classmethod
    def _from_normalized(cls, num: MultiPoly, den: MultiPoly) -> "RatFunc":
        obj = cls.__new__(cls)
        obj._num = num
        obj._den = den
        return obj

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self._den == other._den:
            if self.is_polynomial():
                variables = _union(self.variables, other.variables)
                return RatFunc._from_normalized(
                    self._num + other._num, MultiPoly.constant(1, variables)
                )
            return RatFunc(self._num + other._num, self._den)
        return RatFunc(
            self._num * other._den + other._num * self._den, self._den * other._den
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._from_normalized(-self._num, self._den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_polynomial() and other.is_polynomial():
            product = self._num * other._num
            return RatFunc._from_normalized(
                product, MultiPoly.constant(1, _union(product.variables, self.variables))
            )
        return RatFunc(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self._num * other._den, self._den * other._num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise ValueError("rational function powers must be integers")
        if n < 0:
            return RatFunc(1) / (self ** (-n))
        return RatFunc._from_normalized(self._num**n, self._den**n)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._num * other._den == other._num * self._den

    def __hash__(self):
        return hash((self._num, self._den))

    def diff(self, var: str) -> "RatFunc":
        """Partial derivative by the quotient rule."""
        if var not in self.variables:
            raise ValueError(f"unknown variable {var!r}")
        dn = self._num.diff(var, strict=False)
        if self.is_polynomial():
            return RatFunc(dn)
        dd = self._den.diff(var, strict=False)
        return RatFunc(dn * self._den - self._num * dd, self._den * self._den)

    def substitute(self, assignment: Mapping[str, "RatFunc"]) -> "RatFunc":
        """Simultaneously substitute rational functions for variables.

        Variables that are not assigned are kept as they are.

        Raises
        ------
        ZeroDivisionError
            if the substitution makes the denominator identically zero
        """
        nn, nd = self._num._substitute_parts(assignment)
        dn, dd = self._den._substitute_parts(assignment)
        if dn.is_zero():
            raise ZeroDivisionError(
                "substitution makes a denominator identically zero"
            )
        return RatFunc(nn * dd, nd * dn)

    def to_sympy(self):
        return self._num.to_sympy() / self._den.to_sympy()

    def to_text(self) -> str:
        """Canonical text ``num`` or ``(num)/(den)``."""
        if self.is_polynomial():
            return self._num.to_text()
        return f"({self._num.to_text()})/({self._den.to_text()})"

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"RatFunc({self.to_text()!r})"


def poly_arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    """Apply ``op`` (``"add"``, ``"sub"`` or ``"mul"``) to two polynomials."""
    if op == "add":
        return a + b
    elif op == "sub":
        return a - b
    elif op == "mul":
        return a * b
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_diff(p: MultiPoly, var: str) -> MultiPoly:
    """Formal partial derivative; raises ValueError for an unknown variable."""
    return p.diff(var)


def ratfunc_arith(a: RatFunc, b: RatFunc, op: str) -> RatFunc:
    """Apply ``op`` (``"add"``, ``"sub"``, ``"mul"`` or ``"div"``)."""
    if op == "add":
        return a + b
    elif op == "sub":
        return a - b
    elif op == "mul":
        return a * b
    elif op == "div":
        return a / b
    raise ValueError(f"unknown rational function operation {op!r}")


def substitute(p, assignment: Mapping[str, RatFunc]) -> RatFunc:
    """Substitute into a polynomial or rational function."""
    return RatFunc._coerce_any(p).substitute(assignment)


def partial(x, var: str) -> RatFunc:
    """Partial derivative of a polynomial or rational function.

    Unlike :meth:`RatFunc.diff` this returns zero when ``x`` does not involve
    ``var`` at all.
    """
    x = RatFunc._coerce_any(x)
    if var not in x.variables:
        return RatFunc(0)
    return x.diff(var)


def resultant(p: MultiPoly, q: MultiPoly, var: str) -> MultiPoly:
    """The resultant of ``p`` and ``q`` with respect to ``var``."""
    variables = _union(p.variables, q.variables)
    res = sympy.resultant(p.to_sympy(), q.to_sympy(), sympy.Symbol(var))
    return MultiPoly.from_sympy(res, variables)


def discriminant(p: MultiPoly, var: str) -> MultiPoly:
    """The discriminant of ``p`` as a polynomial in ``var``."""
    disc = sympy.discriminant(p.to_sympy(), sympy.Symbol(var))
    return MultiPoly.from_sympy(disc, p.variables)


def denominator_primes(x) -> set:
    """The primes dividing any coefficient denominator of ``x``.

    ``x`` may be a Fraction, an int, a MultiPoly or a RatFunc (in which case
    both numerator and denominator are inspected).
    """
    if isinstance(x, RatFunc):
        return denominator_primes(x.numerator) | denominator_primes(x.denominator)
    if isinstance(x, MultiPoly):
        primes = set()
        for c in x.terms.values():
            primes |= denominator_primes(c)
        return primes
    return set(sympy.primefactors(to_fraction(x).denominator))


def has_denominator_support(x, primes: Iterable[int]) -> bool:
    """Whether every coefficient denominator of ``x`` is a product of ``primes``."""
    return denominator_primes(x) <= set(primes)


def _delta_power(p: MultiPoly, delta: MultiPoly):
    """Return ``k`` when ``p = c * delta**k`` with ``c`` a nonzero rational.

    For a constant ``delta`` only constants qualify, with ``k = 0``.

    Raises
    ------
    ValueError
        if ``delta`` is the zero polynomial
    """
    if delta.is_zero():
        raise ValueError("delta must be a nonzero polynomial")
    if p.is_zero():
        return None
    if delta.is_constant():
        return 0 if p.is_constant() else None
    k = 0
    while not p.is_constant():
        quotient = RatFunc(p, delta)
        if not quotient.is_polynomial():
            return None
        p = quotient.as_poly()
        k += 1
    return k


def is_delta_unit(x: RatFunc, delta: MultiPoly) -> bool:
    """Whether ``x`` is a nonzero rational times an integer power of ``delta``."""
    x = RatFunc._coerce_any(x)
    return (
        _delta_power(x.numerator, delta) is not None
        and _delta_power(x.denominator, delta) is not None
    )


def clear_delta(x: RatFunc, delta: MultiPoly) -> MultiPoly:
    """Multiply ``x`` by the least power of ``delta`` that makes it a polynomial.

    Raises
    ------
    ValueError
        if the denominator of ``x`` does not divide a power of ``delta``
    """
    x = RatFunc._coerce_any(x)
    bound = max(x.denominator.degree(), 0) // max(delta.degree(), 1) + 1
    for _ in range(bound + 1):
        if x.is_polynomial():
            return x.as_poly()
        x = x * delta
    raise ValueError("denominator does not divide a power of delta")


class RatMatrix:
    """An immutable matrix of :class:`RatFunc` entries.

    Parameters
    ----------
    rows : iterable of iterables
        Entries, anything accepted by :class:`RatFunc` (polynomials, ints,
        Fractions or rational functions).
    """

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable]):
        self._rows = tuple(tuple(RatFunc._coerce_any(x) for x in row) for row in rows)
        if len({len(r) for r in self._rows}) > 1:
            raise ValueError("ragged matrix rows")

    @classmethod
    def zeros(cls, n: int, m: int = None) -> "RatMatrix":
        m = n if m is None else m
        return cls([[0] * m for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> Tuple[int, int]:
        return (len(self._rows), len(self._rows[0]) if self._rows else 0)

    @property
    def rows(self) -> Tuple[Tuple[RatFunc, ...], ...]:
        return self._rows

    def __getitem__(self, index: Tuple[int, int]) -> RatFunc:
        i, j = index
        return self._rows[i][j]

    def _check_shape(self, other: "RatMatrix"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} != {other.shape}")

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._check_shape(other)
        return RatMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)]
        )

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        self._check_shape(other)
        return RatMatrix(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)]
        )

    def __neg__(self) -> "RatMatrix":
        return RatMatrix([[-a for a in r] for r in self._rows])

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        for i in range(n):
            row = []
            for j in range(m):
                acc = RatFunc(0)
                for t in range(k):
                    a = self._rows[i][t]
                    b = other._rows[t][j]
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return RatMatrix(out)

    def scale(self, c) -> "RatMatrix":
        """Multiply every entry by the scalar ``c``."""
        c = RatFunc._coerce_any(c)
        return RatMatrix([[c * a for a in r] for r in self._rows])

    def transpose(self) -> "RatMatrix":
        return RatMatrix(zip(*self._rows)) if self._rows else self

    @property
    def T(self) -> "RatMatrix":
        return self.transpose()

    def trace(self) -> RatFunc:
        acc = RatFunc(0)
        for i in range(min(self.shape)):
            acc = acc + self._rows[i][i]
        return acc

    def map(self, fn) -> "RatMatrix":
        """Apply ``fn`` to every entry."""
        return RatMatrix([[fn(a) for a in r] for r in self._rows])

    def diff(self, var: str) -> "RatMatrix":
        """Entrywise partial derivative; entries free of ``var`` give zero."""
        return self.map(lambda a: a.diff(var) if var in a.variables else RatFunc(0))

    def substitute(self, assignment: Mapping[str, RatFunc]) -> "RatMatrix":
        return self.map(lambda a: a.substitute(assignment))

    def is_zero(self) -> bool:
        return all(a.is_zero() for r in self._rows for a in r)

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self._rows, other._rows) for a, b in zip(r, s)
        )

    def __hash__(self):
        return hash(self._rows)

    def solve(self, rhs: "RatMatrix") -> "RatMatrix":
        """Solve ``self @ X = rhs`` exactly by Gauss-Jordan elimination.

        The system may be overdetermined but must have a unique solution.

        Raises
        ------
        ValueError
            if the system is singular (rank below the number of unknowns)
            or inconsistent
        """
        m, n = self.shape
        if rhs.shape[0] != m:
            raise ValueError("right-hand side has the wrong number of rows")
        k = rhs.shape[1]
        aug = [list(r) + list(s) for r, s in zip(self._rows, rhs._rows)]
        row = 0
        for col in range(n):
            candidates = [i for i in range(row, m) if not aug[i][col].is_zero()]
            if not candidates:
                continue
            constants = [i for i in candidates if aug[i][col].is_constant()]
            p = constants[0] if constants else candidates[0]
            aug[row], aug[p] = aug[p], aug[row]
            inv = 1 / aug[row][col]
            aug[row] = [x * inv for x in aug[row]]
            for i in range(m):
                if i != row and not aug[i][col].is_zero():
                    f = aug[i][col]
                    aug[i] = [a - f * b for a, b in zip(aug[i], aug[row])]
            row += 1
        if row < n:
            raise ValueError(f"singular system: rank {row} < {n} unknowns")
        for i in range(row, m):
            if any(not x.is_zero() for x in aug[i][n:]):
                raise ValueError("inconsistent linear system")
        logger.debug(f"Solved {m}x{n} rational-function system with {k} right-hand sides")
        return RatMatrix([aug[i][n:] for i in range(n)])

    def inverse(self) -> "RatMatrix":
        """The exact inverse of a square matrix.

        Raises
        ------
        ValueError
            if the matrix is not square or not invertible
        """
        n, m = self.shape
        if n != m:
            raise ValueError("only square matrices can be inverted")
        try:
            return self.solve(RatMatrix.identity(n))
        except ValueError:
            raise ValueError("matrix is not invertible over the rational functions")

    def to_text(self):
        """Nested lists of canonical entry texts."""
        return [[a.to_text() for a in r] for r in self._rows]

    def __repr__(self):
        return f"RatMatrix({self.to_text()})"
