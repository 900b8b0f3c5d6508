"""Symmetric-group characters, Kronecker and Littlewood-Richardson coefficients,
and the q-series that count irreducible modules of ``A_{r,k}(n)``.

Partitions are plain tuples of weakly decreasing positive integers.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from fractions import Fraction
from functools import cache, lru_cache
from math import comb, factorial, prod
from typing import Iterator, Sequence

from .errors import ResourceLimitError
from .series import QSeries

Partition = tuple[int, ...]

DEFAULT_MAX_SERIES_TERMS = 2_000_000


class InconsistencyError(RuntimeError):
    """Two independent formulas for the same quantity disagree."""


def as_partition(parts: Sequence[int]) -> Partition:
    lam = tuple(int(p) for p in parts if p)
    if any(p < 0 for p in lam) or any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"{tuple(parts)} is not a partition")
    return lam


@cache
def partitions(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """Partitions of ``n`` in reverse lexicographic order, ``(n)`` first."""
    if n == 0:
        return ((),)
    if max_part is None:
        max_part = n
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def multiplicities(lam: Partition) -> Counter:
    return Counter(lam)


def z_lambda(lam: Partition) -> int:
    """``z_λ = prod_i i^{m_i} m_i!``, the centralizer order of cycle type λ."""
    return prod(i ** m * factorial(m) for i, m in Counter(lam).items())


def conjugate(lam: Partition) -> Partition:
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0])) if lam else ()


def cycle_type(sigma: Sequence[int]) -> Partition:
    """Cycle type of a permutation given in one-line notation on ``1..n``."""
    n = len(sigma)
    seen = [False] * (n + 1)
    lengths = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        length, i = 0, start
        while not seen[i]:
            seen[i] = True
            i = sigma[i - 1]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def sign(gamma: Partition) -> int:
    return (-1) ** (sum(gamma) - len(gamma))


def hook_length_dimension(lam: Partition) -> int:
    """``f^λ`` by the hook length formula."""
    conj = conjugate(lam)
    hooks = prod(lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i]))
    return factorial(sum(lam)) // hooks


# ---------------------------------------------------------------------------
# characters

def _beta_to_partition(beta: Sequence[int]) -> Partition:
    b = sorted(beta, reverse=True)
    length = len(b)
    return tuple(p for p in (b[i] - (length - 1 - i) for i in range(length)) if p)


@lru_cache(maxsize=None)
def _mn(lam: Partition, gamma: Partition) -> int:
    if not gamma:
        return 1
    h, rest = gamma[0], gamma[1:]
    length = len(lam)
    beta = [lam[i] + length - 1 - i for i in range(length)]
    present = set(beta)
    total = 0
    for b in beta:
        target = b - h
        if target < 0 or target in present:
            continue
        # rim hook of length h; its height is the number of beads jumped over
        height = sum(1 for c in beta if target < c < b)
        new = _beta_to_partition([target if c == b else c for c in beta])
        total += (-1) ** height * _mn(new, rest)
    return total


def character(lam: Sequence[int], gamma: Sequence[int]) -> int:
    """``χ^λ(γ)`` by the Murnaghan-Nakayama rule."""
    lam, gamma = as_partition(lam), tuple(sorted(as_partition(gamma), reverse=True))
    if sum(lam) != sum(gamma):
        raise ValueError(f"|λ| = {sum(lam)} but |γ| = {sum(gamma)}")
    return _mn(lam, gamma)


class CharacterTable:
    """``χ^λ(γ)`` for all ``λ, γ ⊢ n``, rows and columns in reverse lex order."""

    def __init__(self, n: int):
        self.n = n
        self.partitions = partitions(n)
        self.values = {(lam, gam): character(lam, gam)
                       for lam in self.partitions for gam in self.partitions}

    def __getitem__(self, key: tuple[Partition, Partition]) -> int:
        lam, gam = key
        return self.values[as_partition(lam), as_partition(gam)]

    def column_orthogonality(self) -> bool:
        ps = self.partitions
        return all(sum(self.values[lam, g] * self.values[lam, d] for lam in ps)
                   == (z_lambda(g) if g == d else 0) for g in ps for d in ps)

    def row_orthogonality(self) -> bool:
        ps = self.partitions
        return all(sum(Fraction(self.values[a, g] * self.values[b, g], z_lambda(g)) for g in ps)
                   == (1 if a == b else 0) for a in ps for b in ps)


@cache
def character_table(n: int) -> CharacterTable:
    return CharacterTable(n)


def kronecker_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """``g_{λμν} = sum_γ χ^λ(γ) χ^μ(γ) χ^ν(γ) / z_γ``."""
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    n = sum(lam)
    if sum(mu) != n or sum(nu) != n:
        raise ValueError("Kronecker coefficients need partitions of the same size")
    return _kronecker(*sorted((lam, mu, nu)))


@lru_cache(maxsize=None)
def _kronecker(lam: Partition, mu: Partition, nu: Partition) -> int:
    total = sum(Fraction(character(lam, g) * character(mu, g) * character(nu, g), z_lambda(g))
                for g in partitions(sum(lam)))
    assert total.denominator == 1
    return int(total)


def restriction_multiplicity(lam: Sequence[int], nu: Sequence[int], gamma: Sequence[int]) -> int:
    """Multiplicity of ``W^ν_{A_{d,k}} ⊗ W^γ_{A_{r-d,ℓ}}`` in the restriction of
    ``W^λ_{A_{r,k+ℓ}}``; this is the Kronecker coefficient ``g_{λνγ}``."""
    return kronecker_coefficient(lam, nu, gamma)


# ---------------------------------------------------------------------------
# Littlewood-Richardson

def _lr_count(outer: Partition, inner: Partition, weight: Partition) -> int:
    """Number of LR tableaux of shape ``outer/inner`` and content ``weight``."""
    rows = len(outer)
    inner = inner + (0,) * (rows - len(inner))
    if any(inner[i] > outer[i] for i in range(rows)):
        return 0
    letters = len(weight)

    def fill_row(i: int, above: dict[int, int], counts: list[int]) -> int:
        if i == rows:
            return int(counts == list(weight))
        cells = range(inner[i], outer[i])
        total = 0

        def place(col_iter, prev: int, row: dict[int, int], cnt: list[int]):
            nonlocal total
            col = next(col_iter, None)
            if col is None:
                # reading the row right to left must keep the word a lattice word
                trial = counts[:]
                for c in sorted(row, reverse=True):
                    letter = row[c]
                    trial[letter - 1] += 1
                    if letter > 1 and trial[letter - 1] > trial[letter - 2]:
                        return
                total += fill_row(i + 1, row, trial)
                return
            low = max(prev, above.get(col, 0) + 1)
            for letter in range(low, min(i + 1, letters) + 1):
                if cnt[letter - 1] >= weight[letter - 1]:
                    continue
                cnt[letter - 1] += 1
                row[col] = letter
                place(iter(range(col + 1, outer[i])), letter, row, cnt)
                del row[col]
                cnt[letter - 1] -= 1

        place(iter(cells), 1, {}, counts[:])
        return total

    return fill_row(0, {}, [0] * letters)


def _contains(outer: Partition, inner: Partition) -> bool:
    return len(inner) <= len(outer) and all(a >= b for a, b in zip(outer, inner))


@lru_cache(maxsize=None)
def lr_product(lam: Partition, mu: Partition) -> dict[Partition, int]:
    """``s_λ s_μ`` in the Schur basis."""
    out = {}
    for nu in partitions(sum(lam) + sum(mu)):
        if _contains(nu, lam) and _contains(nu, mu):
            c = _lr_count(nu, lam, mu)
            if c:
                out[nu] = c
    return out


@lru_cache(maxsize=None)
def schur_product(taus: tuple[Partition, ...]) -> dict[Partition, int]:
    """``s_{τ1} s_{τ2} ...`` in the Schur basis, by iterated single products."""
    if not taus:
        return {(): 1}
    acc = schur_product(taus[:-1])
    out: dict[Partition, int] = defaultdict(int)
    for nu, c in acc.items():
        for rho, d in lr_product(nu, taus[-1]).items():
            out[rho] += c * d
    return dict(out)


def lr_coefficient(taus: Sequence[Sequence[int]], target: Sequence[int]) -> int:
    """Multi Littlewood-Richardson coefficient ``c^{target}_{τ1 τ2 ...}``."""
    taus = tuple(as_partition(t) for t in taus)
    target = as_partition(target)
    if sum(map(sum, taus)) != sum(target):
        raise ValueError("sizes of the factors do not add up to the target")
    return schur_product(tuple(taus)).get(target, 0)


# ---------------------------------------------------------------------------
# plethystic specialisations

def principal_alphabet(k: int, max_deg: int) -> QSeries:
    """``1/(1-q)^k`` truncated at ``q^max_deg``; ``k = 0`` gives the constant ``1``."""
    if k == 0:
        return QSeries.one(("q",), (max_deg,))
    return QSeries(("q",), (max_deg,), {(d,): comb(k + d - 1, d) for d in range(max_deg + 1)})


def schur_at(lam: Sequence[int], alphabet: QSeries) -> QSeries:
    """``s_λ[E]`` for a one-variable series ``E``:
    ``sum_γ χ^λ(γ)/z_γ prod_i E(q^{γ_i})``."""
    lam = as_partition(lam)
    n = sum(lam)
    total = QSeries(alphabet.variables, alphabet.truncation)
    powers: dict[int, QSeries] = {}
    for gamma in partitions(n):
        chi = character(lam, gamma)
        if not chi:
            continue
        term = QSeries.one(alphabet.variables, alphabet.truncation)
        for part in gamma:
            if part not in powers:
                powers[part] = alphabet.substitute_power(part)
            term = term * powers[part]
        total = total + term.scale(Fraction(chi, z_lambda(gamma)))
    return total


@lru_cache(maxsize=None)
def _plethysm(lam: Partition, k: int, max_deg: int) -> QSeries:
    return schur_at(lam, principal_alphabet(k, max_deg))


def plethysm_series(lam: Sequence[int], k: int, max_deg: int) -> QSeries:
    """``s_λ[1/(1-q)^k]`` up to ``q^max_deg``; the ``q^r`` coefficient is
    ``dim W^λ_{A_{r,k}(n)}``."""
    if k < 0 or max_deg < 0:
        raise ValueError("need k >= 0 and max_deg >= 0")
    series = _plethysm(as_partition(lam), k, max_deg)
    if not series.is_integral():
        raise InconsistencyError(f"non-integral coefficient in s_{lam}[1/(1-q)^{k}]")
    return series


def irrep_dimension(lam: Sequence[int], r: int, k: int) -> int:
    """``dim W^λ_{A_{r,k}(n)}`` with ``n = |λ|``."""
    return int(plethysm_series(lam, k, r).coefficient(r))


def min_degree_threshold(lam: Sequence[int], k: int) -> int:
    """Smallest ``r`` with ``W^λ_{A_{r,k}(n)} != 0``.

    Rows ``t_{j-1}+1 .. t_j`` of λ carry weight ``j-1``, where
    ``t_d = sum_{e<d} C(k+e-1, e)`` counts monomials of degree below ``d``.
    """
    lam = as_partition(lam)
    if k < 1:
        raise ValueError("k must be positive")
    total, j, lo = 0, 1, 0
    while lo < len(lam):
        hi = lo + comb(k + j - 2, j - 1)
        total += (j - 1) * sum(lam[lo:hi])
        lo, j = hi, j + 1
    return total


def first_nonzero_degree(series: QSeries) -> int | None:
    for d, c in enumerate(series.coefficient_list()):
        if c:
            return d
    return None


def algebra_dim(n: int, r: int, k: int, limit: int = DEFAULT_MAX_SERIES_TERMS) -> int:
    """``dim A_{r,k}(n)``: coefficient of ``z^n q^r t^r`` in
    ``prod_{0<=i,j<=r} (1 - z q^i t^j)^{-C(k+i-1,i) C(k+j-1,j)}``."""
    if n < 0 or r < 0 or k < 1:
        raise ValueError("need n, r >= 0 and k >= 1")
    volume = (n + 1) * (r + 1) ** 2
    if volume > limit:
        raise ResourceLimitError(f"series volume {volume} exceeds cap {limit}")
    variables, trunc = ("z", "q", "t"), (n, r, r)
    acc = QSeries.one(variables, trunc)
    for i in range(r + 1):
        for j in range(r + 1):
            e = comb(k + i - 1, i) * comb(k + j - 1, j)
            factor = {}
            m = 0
            while m <= n and i * m <= r and j * m <= r:
                factor[(m, i * m, j * m)] = comb(e + m - 1, m)
                m += 1
            acc = acc * QSeries(variables, trunc, factor)
    return int(acc.coefficient(n, r, r))


def algebra_dim_from_irreps(n: int, r: int, k: int) -> int:
    """``sum_λ (dim W^λ_{A_{r,k}(n)})^2``."""
    return sum(irrep_dimension(lam, r, k) ** 2 for lam in partitions(n))


# ---------------------------------------------------------------------------
# branching

def _weighted_compositions(n: int, d: int) -> Iterator[tuple[int, ...]]:
    """``α`` of length ``d+1`` with ``sum α_i = n`` and ``sum (i-1) α_i = d``."""
    def rec(i: int, left_n: int, left_d: int) -> Iterator[tuple[int, ...]]:
        if i == d + 1:
            if left_n == 0 and left_d == 0:
                yield ()
            return
        # α_i sits at weight i (0-based)
        top = left_n if i == 0 else min(left_n, left_d // i)
        for a in range(top + 1):
            for tail in rec(i + 1, left_n - a, left_d - i * a):
                yield (a,) + tail
    yield from rec(0, n, d)


def branching_lr_sum(lam: Sequence[int], mu: Sequence[int], d: int) -> int:
    """``sum_α sum_τ c^μ_{τ(1)...τ(d+1)} c^λ_{τ(1)...τ(d+1)}``."""
    lam, mu = as_partition(lam), as_partition(mu)
    n = sum(lam)
    total = 0
    for alpha in _weighted_compositions(n, d):
        for taus in itertools.product(*(partitions(a) for a in alpha)):
            prod_ = schur_product(tuple(taus))
            total += prod_.get(mu, 0) * prod_.get(lam, 0)
    return total


def branching_character_side(lam: Sequence[int], mu: Sequence[int], d: int) -> int:
    """Coefficient of ``q^d`` in ``sum_ν s_ν[1/(1-q)] g_{λμν}``."""
    lam, mu = as_partition(lam), as_partition(mu)
    return sum(kronecker_coefficient(lam, mu, nu) * int(plethysm_series(nu, 1, d).coefficient(d))
               for nu in partitions(sum(lam)))


def branching_multiplicity(lam: Sequence[int], mu: Sequence[int], d: int, k: int) -> int:
    """Multiplicity of ``W^μ_{A_{r-d,k-1}(n)}`` in ``W^λ_{A_{r,k}(n)}``.

    Evaluated by the Littlewood-Richardson sum and by the Kronecker/character
    formula; disagreement raises :class:`InconsistencyError`.  The value does not
    depend on ``k`` or ``r``.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError("λ and μ must have the same size")
    if d < 0 or k < 1:
        raise ValueError("need d >= 0 and k >= 1")
    lr = branching_lr_sum(lam, mu, d)
    ch = branching_character_side(lam, mu, d)
    if lr != ch:
        raise InconsistencyError(f"branching λ={lam} μ={mu} d={d}: LR sum {lr} != character side {ch}")
    return lr


def corner_remove_add_count(lam: Partition, mu: Partition) -> int:
    """Ways to remove a corner from ``μ`` and then add one to reach ``λ``."""
    count = 0
    for i in range(len(mu)):
        if i + 1 == len(mu) or mu[i] > mu[i + 1]:
            smaller = as_partition(mu[:i] + (mu[i] - 1,) + mu[i + 1:])
            for j in range(len(smaller) + 1):
                grown = list(smaller) + [0]
                grown[j] += 1
                if j == 0 or grown[j] <= grown[j - 1]:
                    if as_partition(grown) == lam:
                        count += 1
    return count
