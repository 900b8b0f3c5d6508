import itertools
import random
from fractions import Fraction
from math import comb, factorial

import pytest

from mpalg.algebra import AlgebraElement, evaluate_at
from mpalg.centralizer import (EndoMatrix, commutant_check, compare_product, compose, entry_orbit, exact_rank,
                               identity_matrix, matrix_rank, matrix_unit_index, monomial_basis, oracle_dimension,
                               orbit_expansion, orbit_matrix, permutation_matrix, reynolds_projector,
                               reynolds_rank, sigma_action, verify_all, verify_isomorphism)
from mpalg.combinatorics import count_msp, enumerate_msp, parse_partition
from mpalg.errors import ResourceLimitError
from mpalg.symfunc import hook_length_dimension, irrep_dimension, partitions

P = parse_partition


def fraction_rank(rows):
    """Plain Gaussian elimination over the rationals."""
    a = [[Fraction(v) for v in row] for row in rows]
    rank = 0
    for c in range(len(a[0]) if a else 0):
        pivot = next((i for i in range(rank, len(a)) if a[i][c]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        for i in range(len(a)):
            if i != rank and a[i][c]:
                f = a[i][c] / a[rank][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


# ---- monomials and the S_n action ----------------------------------------------

@pytest.mark.parametrize("n, k, r, size", [(2, 1, 2, 3), (3, 2, 2, 21), (2, 2, 3, 20), (3, 1, 0, 1)])
def test_basis_sizes(n, k, r, size):
    basis = monomial_basis(n, k, r)
    assert len(basis) == size == comb(n * k + r - 1, r)
    brute = {tuple(sorted(m, key=lambda p: (p[1], p[0])))
             for m in itertools.product([(i, j) for i in range(1, n + 1) for j in range(1, k + 1)], repeat=r)}
    assert set(basis) == brute
    for m in basis:
        assert list(m) == sorted(m, key=lambda p: (p[1], p[0]))


def test_sigma_examples():
    m = ((1, 1), (2, 1))
    assert sigma_action((1, 2), m) == m
    assert sigma_action((2, 1), m) == m
    assert sigma_action((2, 3, 1), ((1, 1), (1, 2))) == ((3, 1), (3, 2))


def test_sigma_is_an_action():
    # x_i -> x_{σ^{-1}(i)} composes as σ·(τ·m) = (τσ)·m under right-to-left composition
    rng = random.Random(2)
    basis = monomial_basis(4, 2, 3)
    perms = list(itertools.permutations(range(1, 5)))
    for _ in range(200):
        s, t = rng.choice(perms), rng.choice(perms)
        m = rng.choice(basis)
        assert sigma_action(s, sigma_action(t, m)) == sigma_action(compose(t, s), m)
    assert all(sigma_action((1, 2, 3, 4), m) == m for m in basis)


def test_permutation_matrices_represent_the_group():
    perms = list(itertools.permutations(range(1, 4)))
    for s, t in itertools.product(perms, repeat=2):
        assert permutation_matrix(s, 2, 2) @ permutation_matrix(t, 2, 2) == permutation_matrix(compose(t, s), 2, 2)


# ---- orbit matrices ------------------------------------------------------------------

def test_orbit_matrix_single_block():
    o = orbit_matrix(P("[[1,1']]"), 2)
    assert o.entries() == {(((1, 1),), ((1, 1),)): 1, (((2, 1),), ((2, 1),)): 1}


def test_orbit_matrix_too_many_blocks():
    assert orbit_matrix(P("[[1],[1'],[1,1']]"), 2).nnz == 0


def test_matrix_unit_convention():
    # row carries the unbarred entries, column the barred ones
    pi = P("[[1],[2']]", 2)
    assert matrix_unit_index(pi, (3, 1)) == (((3, 1),), ((1, 2),))


@pytest.mark.parametrize("n, k, r", [(2, 1, 2), (3, 1, 2), (2, 2, 2), (3, 2, 1), (4, 1, 3)])
def test_orbits_partition_matrix_units(n, k, r):
    dim = comb(n * k + r - 1, r)
    support = {}
    for pi in enumerate_msp(r, k, n):
        o = orbit_matrix(pi, n)
        for pos, v in o.entries().items():
            assert v == 1
            assert pos not in support
            support[pos] = pi
            assert entry_orbit(*pos, k) == pi
    assert len(support) == dim ** 2


def test_orbit_matrices_commute_with_sn():
    for n in (2, 3, 4):
        for pi in enumerate_msp(2, 1):
            assert commutant_check(orbit_matrix(pi, n))
    for pi in enumerate_msp(2, 2):
        assert commutant_check(orbit_matrix(pi, 3))


def test_commutant_check_negative_cases():
    assert commutant_check(identity_matrix(3, 2, 2))
    pi = P("[[1],[1,1'],[1']]")
    row, col = matrix_unit_index(pi, (1, 2, 3))
    unit = EndoMatrix(4, 1, 2, _unit(4, 1, 2, row, col))
    assert not commutant_check(unit)
    assert not commutant_check(permutation_matrix((2, 1, 3), 1, 2))


def _unit(n, k, r, row, col):
    import scipy.sparse as sp
    basis = monomial_basis(n, k, r)
    idx = {m: i for i, m in enumerate(basis)}
    return sp.csr_matrix(([1], ([idx[row]], [idx[col]])), shape=(len(basis),) * 2)


def test_orbit_expansion_rejects_non_invariant():
    pi = P("[[1],[1']]")
    row, col = matrix_unit_index(pi, (1, 2))
    with pytest.raises(ValueError):
        orbit_expansion(EndoMatrix(3, 1, 1, _unit(3, 1, 1, row, col)))


@pytest.mark.parametrize("r, k, n", [(1, 1, 2), (2, 1, 2), (2, 1, 3), (2, 2, 2), (3, 1, 3), (2, 2, 4)])
def test_oracle_dimension(r, k, n):
    assert oracle_dimension(r, k, n) == count_msp(r, k, n)


# ---- the isomorphism ------------------------------------------------------------------

def test_square_example_on_matrices():
    pi = P("[[1],[1,1'],[1']]")
    o = orbit_matrix(pi, 4)
    expansion = orbit_expansion(o @ o)
    assert expansion == {P("[[1],[1'],[1,1']]"): 2, P("[[1,1'],[1,1']]"): 4, P("[[1],[1],[1'],[1']]"): 4}
    assert expansion == evaluate_at(AlgebraElement.basis(pi) * AlgebraElement.basis(pi), 4)
    assert verify_isomorphism(pi, pi, 4)


@pytest.mark.parametrize("r, k", [(1, 1), (2, 1), (1, 2)])
def test_isomorphism_small(r, k):
    for n in (2 * r, 2 * r + 1):
        reports = verify_all(r, k, n)
        assert len(reports) == count_msp(r, k) ** 2
        assert all(rep.match for rep in reports), [rep.to_json() for rep in reports if not rep.match]


def test_isomorphism_needs_stable_range():
    pi = P("[[1],[1,1'],[1']]")
    with pytest.raises(ValueError):
        compare_product(pi, pi, 3)


def test_report_json():
    pi = P("[[1,1']]")
    rep = compare_product(pi, pi, 2).to_json()
    assert rep == {"pi": "[[1,1']]", "gamma": "[[1,1']]", "n": 2, "match": True, "mismatches": []}


# ---- Reynolds projectors ---------------------------------------------------------------

def test_exact_rank_against_rational_elimination():
    rng = random.Random(4)
    for _ in range(60):
        m, c = rng.randint(1, 7), rng.randint(1, 7)
        rows = [[rng.choice([0, 0, 1, -1, 2, 5]) for _ in range(c)] for _ in range(m)]
        if rng.random() < 0.3 and m > 1:
            rows[-1] = [a + 2 * b for a, b in zip(rows[0], rows[1 % m])]
        assert exact_rank(rows) == fraction_rank(rows)


@pytest.mark.parametrize("n, k, r", [(3, 2, 2), (3, 1, 3), (4, 1, 2)])
def test_reynolds_idempotent_orthogonal_complete(n, k, r):
    projs = {lam: reynolds_projector(lam, n, k, r) for lam in partitions(n)}
    total = None
    for lam, p in projs.items():
        assert p @ p == p
        assert commutant_check(p)
        total = p.matrix * (factorial(n) // p.denominator) if total is None else total + p.matrix
    assert EndoMatrix(n, k, r, total, factorial(n)) == identity_matrix(n, k, r)
    for lam, mu in itertools.combinations(projs, 2):
        assert (projs[lam] @ projs[mu]).nnz == 0


def test_trivial_projector_rank_counts_orbits():
    for n, k, r in [(3, 2, 2), (4, 1, 3), (2, 2, 3)]:
        basis = monomial_basis(n, k, r)
        orbits = {frozenset(sigma_action(s, m) for s in itertools.permutations(range(1, n + 1)))
                  for m in basis}
        assert reynolds_rank((n,), n, k, r) == len(orbits)


def test_reynolds_ranks():
    for n, k, r in [(3, 2, 2), (4, 2, 2), (3, 1, 3)]:
        ranks = {lam: reynolds_rank(lam, n, k, r) for lam in partitions(n)}
        for lam, rank in ranks.items():
            assert rank == hook_length_dimension(lam) * irrep_dimension(lam, r, k)
        assert sum(ranks.values()) == comb(n * k + r - 1, r)
    assert reynolds_rank((3, 1), 4, 2, 2) == 3 * irrep_dimension((3, 1), 2, 2)


def test_matrix_rank_matches_dense_elimination():
    p = reynolds_projector((2, 1), 3, 2, 2)
    assert matrix_rank(p) == fraction_rank(p.matrix.toarray().tolist())


# ---- resource guards -------------------------------------------------------------------

def test_basis_cap(monkeypatch):
    monkeypatch.setenv("MPALG_MAX_BASIS", "100")
    with pytest.raises(ResourceLimitError):
        monomial_basis(7, 3, 3)


def test_nnz_cap(monkeypatch):
    pi = P("[[1],[1']]")
    o = orbit_matrix(pi, 5)
    monkeypatch.setenv("MPALG_MAX_NNZ", "3")
    with pytest.raises(ResourceLimitError):
        o @ o
