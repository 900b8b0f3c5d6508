"""Matrix model of ``A_{r,k}(n) = End_{S_n}(P^r(V_{n,k}))`` on the monomial basis.

Everything here is exact: orbit matrices are 0/1 integer matrices, products of
them stay integral, and Reynolds projectors are stored as an integer matrix over
the common denominator ``n!``.  Row indices come from the unbarred (top) entries
of a colored multiset partition and column indices from the barred (bottom)
ones, so ``E_a E_b`` is nonzero exactly when the bottom of ``a`` meets the top
of ``b`` and ``O_π O_γ`` mirrors ``X_π X_γ``.
"""

from __future__ import annotations

import itertools
import os
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, perm
from typing import Sequence

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components

from .algebra import AlgebraElement, evaluate_at
from .combinatorics import Multiset, MultisetPartition, colorings, enumerate_msp
from .errors import ResourceLimitError
from .symfunc import character, cycle_type, hook_length_dimension

Monomial = tuple[tuple[int, int], ...]

DEFAULT_MAX_BASIS = 20_000
DEFAULT_MAX_NNZ = 200_000


def max_basis() -> int:
    return int(os.environ.get("MPALG_MAX_BASIS", DEFAULT_MAX_BASIS))


def max_nnz() -> int:
    return int(os.environ.get("MPALG_MAX_NNZ", DEFAULT_MAX_NNZ))


def canonical_monomial(pairs) -> Monomial:
    """Sort ``(i, j)`` pairs with ``j`` weakly increasing, then ``i``."""
    return tuple(sorted(pairs, key=lambda p: (p[1], p[0])))


@lru_cache(maxsize=None)
def monomial_basis(n: int, k: int, r: int) -> tuple[Monomial, ...]:
    """Degree-``r`` monomials in ``x_{ij}``, ``i <= n``, ``j <= k``; ``C(nk+r-1, r)`` of them."""
    if n < 1 or k < 1 or r < 0:
        raise ValueError(f"need n, k >= 1 and r >= 0, got {(n, k, r)}")
    size = comb(n * k + r - 1, r)
    if size > max_basis():
        raise ResourceLimitError(f"monomial basis of size {size} exceeds cap {max_basis()}")
    variables = [(i, j) for j in range(1, k + 1) for i in range(1, n + 1)]
    return tuple(itertools.combinations_with_replacement(variables, r))


@lru_cache(maxsize=None)
def _basis_index(n: int, k: int, r: int) -> dict[Monomial, int]:
    return {m: idx for idx, m in enumerate(monomial_basis(n, k, r))}


def sigma_action(sigma: Sequence[int], m: Monomial) -> Monomial:
    """``σ · x_{(i,j)} = x_{(σ^{-1}(i), j)}``; ``sigma`` in one-line notation on ``1..n``."""
    inv = [0] * (len(sigma) + 1)
    for i, s in enumerate(sigma, start=1):
        inv[s] = i
    return canonical_monomial((inv[i], j) for i, j in m)


def compose(sigma: Sequence[int], tau: Sequence[int]) -> tuple[int, ...]:
    """``(σ τ)(i) = σ(τ(i))``."""
    return tuple(sigma[t - 1] for t in tau)


class EndoMatrix:
    """Exact matrix ``numerators / denominator`` on the ordered monomial basis."""

    __slots__ = ("n", "k", "r", "matrix", "denominator")

    def __init__(self, n: int, k: int, r: int, matrix, denominator: int = 1):
        self.n, self.k, self.r = n, k, r
        m = sp.csr_matrix(matrix, dtype=np.int64)
        m.eliminate_zeros()
        m.sort_indices()
        dim = len(monomial_basis(n, k, r))
        if m.shape != (dim, dim):
            raise ValueError(f"matrix shape {m.shape} does not match basis dimension {dim}")
        self.matrix = m
        self.denominator = denominator

    @property
    def basis(self) -> tuple[Monomial, ...]:
        return monomial_basis(self.n, self.k, self.r)

    @property
    def nnz(self) -> int:
        return self.matrix.nnz

    def entries(self) -> dict[tuple[Monomial, Monomial], Fraction]:
        basis = self.basis
        coo = self.matrix.tocoo()
        return {(basis[i], basis[j]): Fraction(int(v), self.denominator)
                for i, j, v in zip(coo.row, coo.col, coo.data)}

    def entry(self, row: Monomial, col: Monomial) -> Fraction:
        idx = _basis_index(self.n, self.k, self.r)
        return Fraction(int(self.matrix[idx[row], idx[col]]), self.denominator)

    def _check(self, other: EndoMatrix) -> None:
        if (self.n, self.k, self.r) != (other.n, other.k, other.r):
            raise ValueError("matrices act on different spaces")

    def __matmul__(self, other: EndoMatrix) -> EndoMatrix:
        self._check(other)
        prod = self.matrix @ other.matrix
        if prod.nnz > max_nnz():
            raise ResourceLimitError(f"product has {prod.nnz} nonzeros, cap is {max_nnz()}")
        return EndoMatrix(self.n, self.k, self.r, prod, self.denominator * other.denominator)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EndoMatrix):
            return NotImplemented
        if (self.n, self.k, self.r) != (other.n, other.k, other.r):
            return False
        lhs = self.matrix * other.denominator
        rhs = other.matrix * self.denominator
        return (lhs != rhs).nnz == 0

    __hash__ = None

    def __repr__(self) -> str:
        return f"EndoMatrix(n={self.n}, k={self.k}, r={self.r}, nnz={self.nnz}, denominator={self.denominator})"


def identity_matrix(n: int, k: int, r: int) -> EndoMatrix:
    return EndoMatrix(n, k, r, sp.identity(len(monomial_basis(n, k, r)), dtype=np.int64))


def permutation_matrix(sigma: Sequence[int], k: int, r: int) -> EndoMatrix:
    """Matrix of ``σ`` acting on degree-``r`` monomials (column = input monomial)."""
    n = len(sigma)
    basis = monomial_basis(n, k, r)
    idx = _basis_index(n, k, r)
    cols = np.arange(len(basis))
    rows = np.array([idx[sigma_action(sigma, m)] for m in basis], dtype=np.int64)
    data = np.ones(len(basis), dtype=np.int64)
    return EndoMatrix(n, k, r, sp.csr_matrix((data, (rows, cols)), shape=(len(basis),) * 2))


def matrix_unit_index(pi: MultisetPartition, colors: Sequence[int]) -> tuple[Monomial, Monomial]:
    """Row and column monomials of ``E_{π^c}``."""
    top, bot = [], []
    for block, c in zip(pi.blocks, colors):
        for value, row in block.elements():
            (top if row == 0 else bot).append((c, value))
    return canonical_monomial(top), canonical_monomial(bot)


def entry_orbit(row: Monomial, col: Monomial, k: int) -> MultisetPartition:
    """The multiset partition labelling the ``S_n``-orbit of a matrix position:
    entries sharing a row index ``i`` form one block."""
    groups: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for i, j in row:
        groups[i].append((j, 0))
    for i, j in col:
        groups[i].append((j, 1))
    return MultisetPartition([Multiset.from_elements(g, k) for g in groups.values()], k)


@lru_cache(maxsize=None)
def orbit_matrix(pi: MultisetPartition, n: int) -> EndoMatrix:
    """``O_π``: sum of the matrix units of all colorings of ``π`` by ``[n]``."""
    r, k = pi.r, pi.k
    dim = len(monomial_basis(n, k, r))
    count = perm(n, len(pi)) // pi.m_factorial() if len(pi) <= n else 0
    if count > max_nnz():
        raise ResourceLimitError(f"O_π would have {count} nonzeros, cap is {max_nnz()}")
    idx = _basis_index(n, k, r)
    rows, cols = [], []
    for colors in colorings(pi, n):
        top, bot = matrix_unit_index(pi, colors)
        rows.append(idx[top])
        cols.append(idx[bot])
    data = np.ones(len(rows), dtype=np.int64)
    return EndoMatrix(n, k, r, sp.csr_matrix((data, (rows, cols)), shape=(dim, dim)))


def adjacent_transpositions(n: int) -> list[tuple[int, ...]]:
    out = []
    for t in range(1, n):
        s = list(range(1, n + 1))
        s[t - 1], s[t] = s[t], s[t - 1]
        out.append(tuple(s))
    return out


def commutant_check(a: EndoMatrix) -> bool:
    """``A σ = σ A`` for every adjacent transposition (these generate ``S_n``)."""
    for s in adjacent_transpositions(a.n):
        p = permutation_matrix(s, a.k, a.r)
        if (p.matrix @ a.matrix != a.matrix @ p.matrix).nnz:
            return False
    return True


def orbit_expansion(a: EndoMatrix) -> dict[MultisetPartition, Fraction]:
    """Coefficients of ``a`` in the orbit basis.

    Each coefficient is read off the representative unit colored ``1..ℓ(τ)``.
    Raises ``ValueError`` if ``a`` is not constant on ``S_n``-orbits of matrix
    positions, i.e. does not lie in the centralizer.
    """
    n, k, r = a.n, a.k, a.r
    basis = a.basis
    coo = a.matrix.tocoo()
    seen: dict[MultisetPartition, Counter] = defaultdict(Counter)
    for i, j, v in zip(coo.row, coo.col, coo.data):
        tau = entry_orbit(basis[i], basis[j], k)
        seen[tau][int(v)] += 1
    out = {}
    for tau, values in seen.items():
        row, col = matrix_unit_index(tau, range(1, len(tau) + 1))
        rep = a.entry(row, col)
        orbit_size = perm(n, len(tau)) // tau.m_factorial()
        if len(values) != 1 or sum(values.values()) != orbit_size:
            raise ValueError(f"matrix is not constant on the orbit of {tau}")
        out[tau] = rep
    return out


@dataclass
class PairReport:
    pi: MultisetPartition
    gamma: MultisetPartition
    n: int
    match: bool
    mismatches: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "pi": str(self.pi), "gamma": str(self.gamma), "n": self.n, "match": self.match,
            "mismatches": [{"tau": str(t), "structural": str(s), "oracle": str(o)}
                           for t, (s, o) in sorted(self.mismatches.items(), key=lambda kv: kv[0].sort_key())],
        }


def compare_product(pi: MultisetPartition, gamma: MultisetPartition, n: int) -> PairReport:
    """Compare ``X_π X_γ`` at ``x = n`` with ``O_π O_γ`` expanded in the orbit basis."""
    if n < 2 * pi.r:
        raise ValueError(f"the comparison needs n >= 2r, got n={n}, r={pi.r}")
    structural = evaluate_at(AlgebraElement.basis(pi) * AlgebraElement.basis(gamma), n)
    oracle = orbit_expansion(orbit_matrix(pi, n) @ orbit_matrix(gamma, n))
    mismatches = {}
    for tau in set(structural) | set(oracle):
        s, o = structural.get(tau, Fraction(0)), oracle.get(tau, Fraction(0))
        if s != o:
            mismatches[tau] = (s, o)
    return PairReport(pi, gamma, n, not mismatches, mismatches)


def verify_isomorphism(pi: MultisetPartition, gamma: MultisetPartition, n: int) -> bool:
    return compare_product(pi, gamma, n).match


def verify_all(r: int, k: int, n: int) -> list[PairReport]:
    """Every ordered pair of ``Π_{r,k}``, in enumeration order."""
    parts = enumerate_msp(r, k)
    return [compare_product(p, g, n) for p in parts for g in parts]


def oracle_dimension(r: int, k: int, n: int) -> int:
    """Number of nonzero orbit matrices, i.e. ``dim A_{r,k}(n)``."""
    return sum(1 for pi in enumerate_msp(r, k) if orbit_matrix(pi, n).nnz)


# ---------------------------------------------------------------------------
# Reynolds projectors

def _cycle_permutations(n: int):
    for sigma in itertools.permutations(range(1, n + 1)):
        yield sigma, cycle_type(sigma)


def reynolds_projector(lam: Sequence[int], n: int, k: int, r: int) -> EndoMatrix:
    """Isotypic projector ``R^λ = (f^λ/n!) sum_σ χ^λ(σ) σ``.

    The factor ``f^λ`` makes ``R^λ`` idempotent; without it the square is
    ``R^λ / f^λ``.  Rank and image are the same either way.
    """
    lam = tuple(lam)
    if sum(lam) != n:
        raise ValueError(f"{lam} is not a partition of {n}")
    f = hook_length_dimension(lam)
    basis = monomial_basis(n, k, r)
    idx = _basis_index(n, k, r)
    acc: dict[tuple[int, int], int] = defaultdict(int)
    for sigma, ctype in _cycle_permutations(n):
        chi = character(lam, ctype)
        if not chi:
            continue
        for col, m in enumerate(basis):
            acc[idx[sigma_action(sigma, m)], col] += chi
    rows, cols, data = [], [], []
    for (i, j), v in acc.items():
        if v:
            rows.append(i)
            cols.append(j)
            data.append(v * f)
    mat = sp.csr_matrix((np.array(data, dtype=np.int64), (rows, cols)), shape=(len(basis),) * 2)
    return EndoMatrix(n, k, r, mat, factorial(n))


def exact_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    a = [list(map(int, row)) for row in rows]
    if not a:
        return 0
    m, ncols = len(a), len(a[0])
    rank, prev = 0, 1
    for c in range(ncols):
        pivot = next((i for i in range(rank, m) if a[i][c]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][c]
        for i in range(rank + 1, m):
            f = a[i][c]
            row_i, row_r = a[i], a[rank]
            for j in range(c, ncols):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def matrix_rank(a: EndoMatrix) -> int:
    """Exact rank, eliminating separately on each connected block of the sparsity pattern."""
    mat = a.matrix
    if mat.nnz == 0:
        return 0
    pattern = (mat + mat.T).astype(bool)
    ncomp, labels = connected_components(pattern, directed=False)
    total = 0
    dense = mat.tolil()
    for comp in range(ncomp):
        members = np.flatnonzero(labels == comp)
        sub = dense[members][:, members].toarray()
        if not sub.any():
            continue
        total += exact_rank(sub.tolist())
    return total


def reynolds_rank(lam: Sequence[int], n: int, k: int, r: int) -> int:
    """Rank of ``R^λ`` on ``P^r(V_{n,k})``; equals ``f^λ · dim W^λ_{A_{r,k}(n)}``."""
    return matrix_rank(reynolds_projector(lam, n, k, r))
