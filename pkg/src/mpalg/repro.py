"""Golden checks: reference products, coefficient fixtures, oracle runs and dimension tables."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from .algebra import AlgebraElement, identity
from .centralizer import compare_product, reynolds_rank
from .combinatorics import coeff_a, coeff_b, count_msp, enumerate_gluings, enumerate_msp, parse_partition
from .polynomial import PolyX
from .symfunc import (algebra_dim, algebra_dim_from_irreps, hook_length_dimension, irrep_dimension,
                      partitions)

X = PolyX.x()

# the three-row gluing with a_ν = 12, b_ν(x) = (x-10)(x-11)(x-12)/2
NU_R9_K2 = ("[[1],[1,1'],[1,2'],[1,2'],[1,2''],[1,2,1''],[1,2,1'',1''],"
            "[1'],[1'],[1',2'],[1',2',1''],[2'',2''],[2'',2'']]")


@dataclass
class Check:
    name: str
    run: Callable[[], bool]


def _square_example() -> bool:
    x = AlgebraElement.basis("[[1],[1,1'],[1']]")
    expected = AlgebraElement(2, 1, {
        parse_partition("[[1],[1'],[1,1']]"): X - 2,
        parse_partition("[[1,1'],[1,1']]"): 2 * (X - 2),
        parse_partition("[[1],[1],[1'],[1']]"): PolyX.constant(4),
    })
    return x * x == expected


def _r4_example() -> bool:
    pi = AlgebraElement.basis("[[1,1],[1',2'],[1,2,1',2']]")
    gamma = AlgebraElement.basis("[[1,2],[1',1'],[1,2,1',1']]")
    expected = AlgebraElement(4, 2, {
        parse_partition("[[1,1],[1',1'],[1,2,1',1']]", 2): X - 3,
        parse_partition("[[1,1,1',1'],[1,2,1',1']]", 2): X - 2,
        parse_partition("[[1,1,1',1'],[1,2],[1',1']]", 2): PolyX.constant(1),
        parse_partition("[[1,1],[1',1'],[1,2],[1',1']]", 2): PolyX.constant(2),
    })
    return len(enumerate_gluings(pi_of(pi), pi_of(gamma))) == 4 and pi * gamma == expected


def pi_of(a: AlgebraElement):
    (pi,) = a.terms
    return pi


def _coefficients() -> bool:
    nu = parse_partition(NU_R9_K2)
    return coeff_a(nu) == 12 and coeff_b(nu) == (X - 10) * (X - 11) * (X - 12) / 2


def _identity() -> bool:
    for r, k in ((1, 1), (2, 1), (1, 2)):
        one = identity(r, k)
        for g in enumerate_msp(r, k):
            xg = AlgebraElement.basis(g)
            if one * xg != xg or xg * one != xg:
                return False
    return True


def _oracle() -> bool:
    parts = enumerate_msp(2, 1)
    return all(compare_product(p, g, n).match for n in (4, 5) for p in parts for g in parts)


def _dims() -> bool:
    expected = {3: 22736, 4: 33712, 5: 36912, 6: 37312}
    return all(algebra_dim(n, 3, 4) == v and count_msp(3, 4, n) == v and algebra_dim_from_irreps(n, 3, 4) == v
               for n, v in expected.items())


def _reynolds() -> bool:
    n, k, r = 3, 2, 2
    return all(reynolds_rank(lam, n, k, r) == hook_length_dimension(lam) * irrep_dimension(lam, r, k)
               for lam in partitions(n))


CHECKS = [
    Check("X_pi^2 reference product (r=2, k=1)", _square_example),
    Check("X_pi X_gamma reference product (r=4, k=2)", _r4_example),
    Check("a_nu = 12, b_nu = (x-10)(x-11)(x-12)/2", _coefficients),
    Check("two-sided identity on Pi_{1,1}, Pi_{2,1}, Pi_{1,2}", _identity),
    Check("orbit-basis oracle on Pi_{2,1}, n = 4, 5", _oracle),
    Check("dim A_{3,4}(n) = 22736, 33712, 36912, 37312", _dims),
    Check("Reynolds ranks for (n,k,r) = (3,2,2)", _reynolds),
]


def run_checks() -> list[tuple[str, bool, float]]:
    results = []
    for check in CHECKS:
        start = time.perf_counter()
        ok = bool(check.run())
        results.append((check.name, ok, time.perf_counter() - start))
    return results
