"""The multiset partition algebra ``MP_{r,k}(x)`` in its diagram basis ``X_π``."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Iterator, Mapping

from .combinatorics import (MultisetPartition, coeff_a, coeff_b, enumerate_gluings,
                            gluing_target, parse_partition, self_symmetric_msp)
from .polynomial import PolyX


class AlgebraElement:
    """Finite combination ``sum p_π(x) X_π`` over ``π ∈ Π_{r,k}``.

    Immutable; zero coefficients are pruned on construction so that equality of
    elements is equality of their term maps.
    """

    __slots__ = ("r", "k", "_terms")

    def __init__(self, r: int, k: int,
                 terms: Mapping[MultisetPartition, PolyX | Rational] | None = None):
        self.r = r
        self.k = k
        clean = {}
        for pi, c in (terms or {}).items():
            if not pi.in_pi(r, k):
                raise ValueError(f"{pi} is not in Π_{{{r},{k}}}")
            if not isinstance(c, PolyX):
                c = PolyX.constant(c)
            if c:
                clean[pi] = c
        self._terms = clean

    @classmethod
    def basis(cls, pi: MultisetPartition | str, k: int | None = None) -> AlgebraElement:
        """``X_π``; ``pi`` may be given in text form."""
        if isinstance(pi, str):
            pi = parse_partition(pi, k)
        return cls(pi.r, pi.k, {pi: PolyX.constant(1)})

    @classmethod
    def zero(cls, r: int, k: int) -> AlgebraElement:
        return cls(r, k)

    @property
    def terms(self) -> dict[MultisetPartition, PolyX]:
        return dict(self._terms)

    def __iter__(self) -> Iterator[tuple[MultisetPartition, PolyX]]:
        return iter(sorted(self._terms.items(), key=lambda kv: kv[0].sort_key()))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, pi: MultisetPartition | str) -> PolyX:
        if isinstance(pi, str):
            pi = parse_partition(pi, self.k)
        return self._terms.get(pi, PolyX())

    def _check(self, other: AlgebraElement) -> None:
        if not isinstance(other, AlgebraElement):
            raise TypeError(f"expected AlgebraElement, got {type(other).__name__}")
        if (self.r, self.k) != (other.r, other.k):
            raise ValueError(f"MP_{{{self.r},{self.k}}} and MP_{{{other.r},{other.k}}} do not match")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._check(other)
        out = dict(self._terms)
        for pi, c in other._terms.items():
            out[pi] = out[pi] + c if pi in out else c
        return AlgebraElement(self.r, self.k, out)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.r, self.k, {pi: -c for pi, c in self._terms.items()})

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def scale(self, c: PolyX | Rational) -> AlgebraElement:
        return AlgebraElement(self.r, self.k, {pi: p * c for pi, p in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        if isinstance(other, (PolyX, Rational)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (PolyX, Rational)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        return (isinstance(other, AlgebraElement) and (self.r, self.k) == (other.r, other.k)
                and self._terms == other._terms)

    def __hash__(self):
        return hash((self.r, self.k, frozenset(self._terms.items())))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({c})*X{pi}" for pi, c in self)

    def __repr__(self) -> str:
        return f"AlgebraElement(r={self.r}, k={self.k}, {self})"

    def to_json(self) -> list[dict]:
        return [{"partition": pi.to_json(), "coefficient": c.to_json()} for pi, c in self]

    @classmethod
    def from_json(cls, r: int, k: int, data: Iterable[dict]) -> AlgebraElement:
        return cls(r, k, {MultisetPartition.from_json(t["partition"]): PolyX.from_json(t["coefficient"])
                          for t in data})


@lru_cache(maxsize=None)
def basis_product(pi: MultisetPartition, gamma: MultisetPartition) -> dict[MultisetPartition, PolyX]:
    """Structure constants of ``X_π X_γ`` as a map ``τ -> sum_ν a_ν b_ν(x)``."""
    out: dict[MultisetPartition, PolyX] = {}
    for nu in enumerate_gluings(pi, gamma):
        tau = gluing_target(nu)
        c = coeff_b(nu) * coeff_a(nu)
        out[tau] = out[tau] + c if tau in out else c
    return {tau: c for tau, c in out.items() if c}


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    a._check(b)
    out: dict[MultisetPartition, PolyX] = {}
    for pi, ca in a._terms.items():
        for gamma, cb in b._terms.items():
            prod = basis_product(pi, gamma)
            if not prod:
                continue
            coef = ca * cb
            for tau, c in prod.items():
                term = coef * c
                out[tau] = out[tau] + term if tau in out else term
    return AlgebraElement(a.r, a.k, out)


def identity(r: int, k: int) -> AlgebraElement:
    """Sum of ``X_π`` over the self-symmetric ``π ∈ Π_{r,k}``."""
    return AlgebraElement(r, k, {pi: PolyX.constant(1) for pi in self_symmetric_msp(r, k)})


def bar_involution(a: AlgebraElement) -> AlgebraElement:
    """Swap barred and unbarred entries in every basis index (an antiautomorphism)."""
    return AlgebraElement(a.r, a.k, {pi.bar_swap(): c for pi, c in a._terms.items()})


def evaluate_at(a: AlgebraElement, n: Rational) -> dict[MultisetPartition, Fraction]:
    """Specialise ``x = n``; vanishing coefficients are dropped."""
    out = {}
    for pi, c in a._terms.items():
        v = c(n)
        if v:
            out[pi] = v
    return out
