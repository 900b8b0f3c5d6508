"""Univariate polynomials in ``x`` with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping


class PolyX:
    """Immutable polynomial ``sum c_d x**d`` with :class:`Fraction` coefficients.

    Zero coefficients are never stored, so two polynomials are equal exactly
    when their coefficient maps are equal.
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[int, Rational] | Iterable[Rational] | Rational = ()):
        if isinstance(coeffs, Rational):
            coeffs = {0: coeffs}
        elif not isinstance(coeffs, Mapping):
            coeffs = dict(enumerate(coeffs))
        clean = {}
        for deg, c in coeffs.items():
            if deg < 0:
                raise ValueError(f"negative degree {deg}")
            c = Fraction(c)
            if c:
                clean[int(deg)] = c
        self._coeffs = clean
        self._hash = None

    @classmethod
    def constant(cls, c: Rational) -> PolyX:
        return cls({0: c})

    @classmethod
    def x(cls) -> PolyX:
        return cls({1: 1})

    @classmethod
    def falling_factorial(cls, shift: int, length: int) -> PolyX:
        """``(x - shift)(x - shift - 1)...(x - shift - length + 1)``."""
        p = cls.constant(1)
        for i in range(length):
            p = p * cls({0: -(shift + i), 1: 1})
        return p

    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(self._coeffs)

    @property
    def degree(self) -> int:
        """Degree of the polynomial; ``-1`` for the zero polynomial."""
        return max(self._coeffs, default=-1)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __call__(self, value: Rational) -> Fraction:
        value = Fraction(value)
        total = Fraction(0)
        for deg in range(self.degree, -1, -1):
            total = total * value + self._coeffs.get(deg, 0)
        return total

    def _coerce(self, other) -> PolyX:
        if isinstance(other, PolyX):
            return other
        if isinstance(other, Rational):
            return PolyX.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._coeffs)
        for deg, c in other._coeffs.items():
            out[deg] = out.get(deg, 0) + c
        return PolyX(out)

    __radd__ = __add__

    def __neg__(self) -> PolyX:
        return PolyX({d: -c for d, c in self._coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, Fraction] = {}
        for d1, c1 in self._coeffs.items():
            for d2, c2 in other._coeffs.items():
                out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
        return PolyX(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Rational):
            return NotImplemented
        return PolyX({d: c / other for d, c in self._coeffs.items()})

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def to_json(self) -> dict[str, list[int]]:
        """Degree -> ``[numerator, denominator]``; keys are strings for JSON."""
        return {str(d): [c.numerator, c.denominator] for d, c in sorted(self._coeffs.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, list[int]]) -> PolyX:
        return cls({int(d): Fraction(num, den) for d, (num, den) in data.items()})

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for deg in sorted(self._coeffs, reverse=True):
            c = self._coeffs[deg]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if deg == 0:
                body = str(mag)
            else:
                mono = "x" if deg == 1 else f"x^{deg}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"PolyX({str(self)!r})"
