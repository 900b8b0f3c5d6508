"""``mpalg`` command line: products, enumeration, oracle checks and dimension tables.

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .algebra import AlgebraElement, evaluate_at, identity
from .centralizer import compare_product, oracle_dimension
from .combinatorics import count_msp, enumerate_msp, parse_partition
from .errors import PartitionSyntaxError, ResourceLimitError
from .symfunc import (InconsistencyError, algebra_dim, as_partition, branching_multiplicity,
                      irrep_dimension, partitions, restriction_multiplicity)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    params: dict = field(default_factory=dict)
    machine: bool = False


def _parse_int_partition(text: str) -> tuple[int, ...]:
    try:
        parts = [int(p) for p in text.replace(" ", "").split(",") if p]
        return as_partition(parts)
    except ValueError as exc:
        raise UsageError(f"bad partition {text!r}: {exc}") from None


def _parse_msp(text: str, r: int | None, k: int | None, what: str):
    try:
        pi = parse_partition(text, k)
    except PartitionSyntaxError as exc:
        raise UsageError(f"--{what}: {exc}") from None
    except ValueError as exc:
        raise UsageError(f"--{what}: {exc}") from None
    if r is not None and not pi.in_pi(r, pi.k):
        raise UsageError(f"--{what}: {pi} is not in Π_{{{r},{pi.k}}}")
    return pi


def _emit(cfg: RunConfig, result, text: str) -> None:
    if cfg.machine:
        print(json.dumps({"command": cfg.command, "params": cfg.params, "result": result}, sort_keys=True))
    else:
        print(text)


def cmd_product(args, cfg: RunConfig) -> int:
    pi = _parse_msp(args.pi, args.r, args.k, "pi")
    gamma = _parse_msp(args.gamma, args.r, args.k, "gamma")
    if pi.k != gamma.k or pi.r != gamma.r:
        raise UsageError("--pi and --gamma must lie in the same Π_{r,k}")
    prod = AlgebraElement.basis(pi) * AlgebraElement.basis(gamma)
    if args.at is not None:
        values = evaluate_at(prod, args.at)
        result = [{"partition": str(t), "value": str(v)} for t, v in
                  sorted(values.items(), key=lambda kv: kv[0].sort_key())]
        text = "\n".join(f"{v}\t{t}" for t, v in sorted(values.items(), key=lambda kv: kv[0].sort_key())) or "0"
    else:
        result = prod.to_json()
        text = str(prod)
    _emit(cfg, result, text)
    return EXIT_OK


def cmd_identity(args, cfg: RunConfig) -> int:
    one = identity(args.r, args.k)
    _emit(cfg, one.to_json(), "\n".join(f"{c}\t{t}" for t, c in one))
    return EXIT_OK


def cmd_enumerate(args, cfg: RunConfig) -> int:
    if args.count:
        total = count_msp(args.r, args.k, args.n)
        _emit(cfg, {"count": total}, str(total))
        return EXIT_OK
    parts = enumerate_msp(args.r, args.k, args.n)
    _emit(cfg, [p.to_json() for p in parts], "\n".join(str(p) for p in parts))
    return EXIT_OK


def _read_pairs(path: str, r: int, k: int):
    pairs = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if ";" not in line:
                raise UsageError(f"{path}:{lineno}: expected 'PI ; GAMMA'")
            a, b = line.split(";", 1)
            pairs.append((_parse_msp(a.strip(), r, k, f"pairs line {lineno}"),
                          _parse_msp(b.strip(), r, k, f"pairs line {lineno}")))
    return pairs


def _compare(job):
    return compare_product(*job)


def cmd_verify(args, cfg: RunConfig) -> int:
    if args.n < 2 * args.r:
        raise UsageError(f"the oracle comparison needs n >= 2r (got n={args.n}, r={args.r})")
    if args.pairs:
        pairs = _read_pairs(args.pairs, args.r, args.k)
    else:
        parts = enumerate_msp(args.r, args.k)
        pairs = [(p, g) for p in parts for g in parts]
    jobs = [(p, g, args.n) for p, g in pairs]
    if args.workers > 1:
        with ProcessPoolExecutor(args.workers) as pool:
            reports = list(pool.map(_compare, jobs, chunksize=64))
    else:
        reports = [_compare(j) for j in jobs]
    bad = [rep for rep in reports if not rep.match]
    result = {"pairs": len(reports), "mismatches": len(bad),
              "reports": [rep.to_json() for rep in (reports if args.full_report else bad)]}
    lines = [f"{rep.pi} * {rep.gamma}: mismatch " +
             ", ".join(f"{t} structural={s} oracle={o}" for t, (s, o) in rep.mismatches.items())
             for rep in bad]
    lines.append("all pairs match" if not bad else f"{len(bad)} of {len(reports)} pairs mismatch")
    _emit(cfg, result, "\n".join(lines))
    return EXIT_OK if not bad else EXIT_MISMATCH


def cmd_oracle_dim(args, cfg: RunConfig) -> int:
    oracle = oracle_dimension(args.r, args.k, args.n)
    counted = count_msp(args.r, args.k, args.n)
    series = algebra_dim(args.n, args.r, args.k)
    result = {"orbit_matrices": oracle, "partitions": counted, "generating_function": series}
    _emit(cfg, result, f"nonzero orbit matrices: {oracle}\n|Π_{{r,k,n}}|: {counted}\ngenerating function: {series}")
    return EXIT_OK if oracle == counted == series else EXIT_MISMATCH


def cmd_dims(args, cfg: RunConfig) -> int:
    total = algebra_dim(args.n, args.r, args.k)
    result = {"dimension": total}
    lines = [str(total)]
    if args.per_irrep:
        table = [(lam, irrep_dimension(lam, args.r, args.k)) for lam in partitions(args.n)]
        result["irreps"] = [{"lambda": list(lam), "dimension": d} for lam, d in table]
        lines = [f"{','.join(map(str, lam))}\t{d}" for lam, d in table] + [f"total\t{total}"]
    _emit(cfg, result, "\n".join(lines))
    return EXIT_OK


def cmd_branch(args, cfg: RunConfig) -> int:
    lam, mu = _parse_int_partition(args.lam), _parse_int_partition(args.mu)
    if sum(lam) != sum(mu):
        raise UsageError("--lambda and --mu must have the same size")
    m = branching_multiplicity(lam, mu, args.d, args.k)
    _emit(cfg, {"multiplicity": m}, str(m))
    return EXIT_OK


def cmd_restrict(args, cfg: RunConfig) -> int:
    lam, nu, gam = (_parse_int_partition(s) for s in (args.lam, args.nu, args.gamma))
    if not sum(lam) == sum(nu) == sum(gam):
        raise UsageError("--lambda, --nu and --gamma must have the same size")
    g = restriction_multiplicity(lam, nu, gam)
    _emit(cfg, {"multiplicity": g}, str(g))
    return EXIT_OK


def cmd_repro(args, cfg: RunConfig) -> int:
    from .repro import run_checks

    results = run_checks()
    width = max(len(name) for name, _, _ in results)
    lines = [f"{name:<{width}}  {'PASS' if ok else 'FAIL'}  {secs:6.2f}s" for name, ok, secs in results]
    _emit(cfg, [{"check": name, "pass": ok, "seconds": round(secs, 3)} for name, ok, secs in results],
          "\n".join(lines))
    return EXIT_OK if all(ok for _, ok, _ in results) else EXIT_MISMATCH


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mpalg", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("text", "machine"), default="text")
    parser.add_argument("--max-partitions", type=int, help="cap on enumerated partitions")
    parser.add_argument("--max-basis", type=int, help="cap on monomial basis size")
    parser.add_argument("--max-nnz", type=int, help="cap on nonzeros in matrix products")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("product", help="X_pi * X_gamma")
    p.add_argument("--r", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--pi", required=True)
    p.add_argument("--gamma", required=True)
    p.add_argument("--at", type=int, help="evaluate the coefficients at x = AT")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("identity", help="identity element of MP_{r,k}(x)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_identity)

    p = sub.add_parser("enumerate", help="list Π_{r,k} or Π_{r,k,n}")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, help="maximum number of blocks")
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="compare structural products with the orbit-matrix oracle")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--exhaustive", action="store_true")
    group.add_argument("--pairs", metavar="FILE", help="lines of the form 'PI ; GAMMA'")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--full-report", action="store_true", help="include matching pairs in the report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle-dim", help="dim A_{r,k}(n) three ways")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_oracle_dim)

    p = sub.add_parser("dims", help="dim A_{r,k}(n) from the generating function")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--per-irrep", action="store_true")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("branch", help="branching multiplicity A_{r,k}(n) -> A_{r-d,k-1}(n)")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_branch)

    p = sub.add_parser("restrict", help="restriction multiplicity (a Kronecker coefficient)")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--gamma", required=True)
    p.set_defaults(func=cmd_restrict)

    p = sub.add_parser("repro", help="run the golden reference checks")
    p.set_defaults(func=cmd_repro)
    return parser


_CAP_VARS = (("max_partitions", "MPALG_MAX_PARTITIONS"), ("max_basis", "MPALG_MAX_BASIS"),
             ("max_nnz", "MPALG_MAX_NNZ"))


def run(argv: list[str] | None = None) -> int:
    # cap flags override the environment for this call only
    saved = {env: os.environ.get(env) for _, env in _CAP_VARS}
    try:
        return _run(argv)
    finally:
        for env, value in saved.items():
            if value is None:
                os.environ.pop(env, None)
            else:
                os.environ[env] = value


def _run(argv: list[str] | None) -> int:
    try:
        args = build_parser().parse_args(argv)
        for flag, env in _CAP_VARS:
            value = getattr(args, flag)
            if value is not None:
                if value <= 0:
                    raise UsageError(f"--{flag.replace('_', '-')} must be positive")
                os.environ[env] = str(value)
        params = {k: v for k, v in vars(args).items() if k not in ("func", "command", "format")}
        cfg = RunConfig(args.command, params, args.format == "machine")
        return args.func(args, cfg)
    except UsageError as exc:
        print(f"mpalg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"mpalg: resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InconsistencyError as exc:
        print(f"mpalg: inconsistency: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except ValueError as exc:
        print(f"mpalg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
