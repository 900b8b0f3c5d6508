"""Dimensions of A_{r,k}(n) and of its irreducible modules from symmetric functions."""

from math import comb

from mpalg import algebra_dim, count_msp, irrep_dimension, min_degree_threshold, plethysm_series, reynolds_rank
from mpalg.symfunc import hook_length_dimension, partitions

# dim A_{3,4}(n) stabilises once n reaches 2r = 6
for n in range(3, 8):
    print(f"n = {n}: generating function {algebra_dim(n, 3, 4)}, enumeration {count_msp(3, 4, n)}")

# the q^r coefficient of s_lambda[1/(1-q)^k] is the dimension of the irreducible indexed by lambda
n, r, k = 3, 3, 4
total = 0
for lam in partitions(n):
    d = irrep_dimension(lam, r, k)
    total += d * d
    print(f"  lambda = {lam}: dim {d}")
print("sum of squares:", total)

# the first nonzero power of q sits exactly at the threshold
for lam in [(3,), (2, 1), (1, 1, 1), (2, 2, 1), (1, 1, 1, 1)]:
    series = plethysm_series(lam, 2, 6)
    print(f"  s_{lam}[1/(1-q)^2] = {[int(c) for c in series.coefficient_list()]}, "
          f"threshold {min_degree_threshold(lam, 2)}")

# the same dimensions appear as ranks of isotypic projectors on symmetric tensors
n, k, r = 4, 2, 2
ranks = {lam: reynolds_rank(lam, n, k, r) for lam in partitions(n)}
for lam, rank in ranks.items():
    print(f"  rank R^{lam} = {rank} = {hook_length_dimension(lam)} * {irrep_dimension(lam, r, k)}")
print("ranks add up to", sum(ranks.values()), "=", comb(n * k + r - 1, r))
