"""Branching from A_{r,k}(n) to A_{r-d,k-1}(n), and restriction to A_{d,k} x A_{r-d,l}."""

import itertools

from mpalg import branching_multiplicity, irrep_dimension, kronecker_coefficient, plethysm_series
from mpalg.symfunc import corner_remove_add_count, partitions

n = 4
print("d = 1 multiplicities (rows lambda, columns mu):")
for lam in partitions(n):
    row = [branching_multiplicity(lam, mu, 1, 2) for mu in partitions(n)]
    print(f"  {str(lam):14} {row}")
ok = all(branching_multiplicity(lam, mu, 1, 2) == corner_remove_add_count(lam, mu)
         for lam, mu in itertools.product(partitions(n), repeat=2))
print("remove a corner then add one:", ok)

# rebuild dim W^lambda_{A_{3,2}(4)} from the branching multiplicities
r, k = 3, 2
for lam in partitions(n):
    pieces = sum(branching_multiplicity(lam, mu, d, k) * plethysm_series(mu, k - 1, r).coefficient(r - d)
                 for d in range(r + 1) for mu in partitions(n))
    print(f"  lambda = {lam}: branching sum {pieces}, direct {irrep_dimension(lam, r, k)}")

# restriction multiplicities are Kronecker coefficients
for n, r, k, l in [(3, 2, 1, 1), (4, 2, 1, 1)]:
    for lam in partitions(n):
        total = sum(kronecker_coefficient(lam, nu, gam) * irrep_dimension(nu, d, k) * irrep_dimension(gam, r - d, l)
                    for d in range(r + 1) for nu in partitions(n) for gam in partitions(n))
        print(f"  (n,r,k,l) = {(n, r, k, l)}, lambda = {lam}: {total} = {irrep_dimension(lam, r, k + l)}")
