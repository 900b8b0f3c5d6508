"""Checking the structural product against explicit matrices commuting with S_n."""

import time
from math import comb

from mpalg import (AlgebraElement, commutant_check, count_msp, enumerate_msp, evaluate_at, monomial_basis,
                   oracle_dimension, orbit_expansion, orbit_matrix, parse_partition, verify_all)

n, k, r = 4, 1, 2
basis = monomial_basis(n, k, r)
print(f"P^{r}(V_{{{n},{k}}}) has dimension {len(basis)} = C({n * k + r - 1},{r}) = {comb(n * k + r - 1, r)}")
print("first monomials:", basis[:4])

pi = parse_partition("[[1],[1,1'],[1']]")
o = orbit_matrix(pi, n)
print(f"O_pi has {o.nnz} nonzero entries and commutes with S_{n}: {commutant_check(o)}")

# square the matrix and read the coefficients back in the orbit basis
matrix_side = orbit_expansion(o @ o)
algebra_side = evaluate_at(AlgebraElement.basis(pi) * AlgebraElement.basis(pi), n)
for tau in sorted(matrix_side, key=lambda t: t.sort_key()):
    print(f"  O_{tau}: matrices {matrix_side[tau]}, algebra {algebra_side.get(tau, 0)}")

# every pair at once
for r, k in [(1, 1), (2, 1), (1, 2), (2, 2)]:
    for n in (2 * r, 2 * r + 1):
        start = time.perf_counter()
        reports = verify_all(r, k, n)
        bad = sum(not rep.match for rep in reports)
        print(f"(r,k,n) = ({r},{k},{n}): {len(reports)} pairs, {bad} mismatches, "
              f"{time.perf_counter() - start:.2f}s")

# the orbit matrices that survive at a given n form a basis of the centralizer
for n in (1, 2, 3, 4):
    print(f"dim A_{{2,2}}({n}) = {oracle_dimension(2, 2, n)}  (|Pi_{{2,2,{n}}}| = {count_msp(2, 2, n)})")
print("|Pi_{2,2}| =", len(enumerate_msp(2, 2)))
