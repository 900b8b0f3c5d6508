"""Multiplying basis elements of MP_{r,k}(x) and looking at the gluings behind a product."""

from mpalg import AlgebraElement, coeff_a, coeff_b, enumerate_gluings, evaluate_at, identity, parse_partition
from mpalg.combinatorics import gluing_target

# a two-row multiset partition: unbarred entries on top, barred ones below
pi = parse_partition("[[1],[1,1'],[1']]")
print("pi =", pi, " r =", pi.r, " k =", pi.k, " blocks =", len(pi))

# each gluing nu has three rows; its coefficient is a_nu * b_nu(x)
for nu in enumerate_gluings(pi, pi):
    print(f"  nu = {nu}  ->  {gluing_target(nu)}   a = {coeff_a(nu)}   b(x) = {coeff_b(nu)}")

x_pi = AlgebraElement.basis(pi)
square = x_pi * x_pi
print("X_pi^2 =", square)

# at x = n the coefficients count colorings, so they are non-negative integers once n >= 2r
for n in (2, 3, 4, 5):
    print(f"  x = {n}:", {str(t): int(v) for t, v in evaluate_at(square, n).items()})

# a larger product with k = 2
a = AlgebraElement.basis("[[1,1],[1',2'],[1,2,1',2']]")
b = AlgebraElement.basis("[[1,2],[1',1'],[1,2,1',1']]")
print("X_pi X_gamma =", a * b)

# products vanish when the bottom row of pi does not match the top row of gamma
print("mismatch:", AlgebraElement.basis("[[1,1']]", 2) * AlgebraElement.basis("[[2],[1']]", 2))

# the identity is the sum over self-symmetric partitions
one = identity(2, 1)
print("I_{2,1} =", one)
print("I * X_pi == X_pi:", one * x_pi == x_pi, "  X_pi * I == X_pi:", x_pi * one == x_pi)
