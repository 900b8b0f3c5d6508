"""Truncated multivariate power series with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Mapping, Sequence


class QSeries:
    """Sparse series in named variables, truncated independently per variable.

    ``QSeries(("q",), (5,), {(2,): 3})`` is ``3 q^2 + O(q^6)``.  Products and
    sums of series with the same variables keep the smaller truncation.
    """

    __slots__ = ("variables", "truncation", "_coeffs")

    def __init__(self, variables: Sequence[str], truncation: Sequence[int],
                 coeffs: Mapping[tuple[int, ...], Rational] | None = None):
        self.variables = tuple(variables)
        self.truncation = tuple(int(t) for t in truncation)
        if len(self.variables) != len(self.truncation):
            raise ValueError("one truncation degree per variable")
        clean = {}
        for exps, c in (coeffs or {}).items():
            exps = tuple(exps)
            if len(exps) != len(self.variables) or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent {exps}")
            if any(e > t for e, t in zip(exps, self.truncation)):
                continue
            c = Fraction(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
        self._coeffs = {e: c for e, c in clean.items() if c}

    @classmethod
    def one(cls, variables: Sequence[str], truncation: Sequence[int]) -> QSeries:
        return cls(variables, truncation, {(0,) * len(variables): 1})

    @property
    def coeffs(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self._coeffs)

    def coefficient(self, *exps: int) -> Fraction:
        if any(e > t for e, t in zip(exps, self.truncation)):
            raise ValueError(f"coefficient {exps} lies beyond the truncation {self.truncation}")
        return self._coeffs.get(tuple(exps), Fraction(0))

    def _merge(self, other: QSeries) -> tuple[int, ...]:
        if self.variables != other.variables:
            raise ValueError(f"variables {self.variables} and {other.variables} differ")
        return tuple(min(a, b) for a, b in zip(self.truncation, other.truncation))

    def __add__(self, other: QSeries) -> QSeries:
        trunc = self._merge(other)
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return QSeries(self.variables, trunc, out)

    def scale(self, c: Rational) -> QSeries:
        return QSeries(self.variables, self.truncation, {e: v * c for e, v in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, Rational):
            return self.scale(other)
        trunc = self._merge(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if any(x > t for x, t in zip(e, trunc)):
                    continue
                out[e] = out.get(e, 0) + c1 * c2
        return QSeries(self.variables, trunc, out)

    __rmul__ = __mul__

    def substitute_power(self, m: int) -> QSeries:
        """Replace every variable ``v`` by ``v^m`` (the plethystic ``p_m``)."""
        return QSeries(self.variables, self.truncation,
                       {tuple(m * x for x in e): c for e, c in self._coeffs.items()})

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._coeffs.values())

    def coefficient_list(self) -> list[Fraction]:
        """Coefficients ``[c_0, ..., c_T]`` of a one-variable series."""
        if len(self.variables) != 1:
            raise ValueError("coefficient_list needs a one-variable series")
        return [self._coeffs.get((d,), Fraction(0)) for d in range(self.truncation[0] + 1)]

    def __eq__(self, other) -> bool:
        return (isinstance(other, QSeries) and self.variables == other.variables
                and self.truncation == other.truncation and self._coeffs == other._coeffs)

    def __hash__(self):
        return hash((self.variables, self.truncation, frozenset(self._coeffs.items())))

    def __repr__(self) -> str:
        terms = " + ".join(
            f"{c}*" + "*".join(f"{v}^{x}" for v, x in zip(self.variables, e) if x) if any(e) else str(c)
            for e, c in sorted(self._coeffs.items()))
        bound = ", ".join(f"{v}^{t + 1}" for v, t in zip(self.variables, self.truncation))
        return f"QSeries({terms or '0'} + O({bound}))"
