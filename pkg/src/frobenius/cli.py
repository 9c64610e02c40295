"""frob: compute Frobenius numbers and Sylvester statistics, verify family formulas, print tables.

Exit codes: 0 success, 1 engine disagreement, 2 usage error, 3 resource cap.
"""
from __future__ import annotations

import argparse
import itertools
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Iterator, Sequence

from .apery import compute_nr, stats_from_nr
from .ct import stats_via_ct
from .errors import DomainError, InvalidTuple, OracleCapExceeded, PreconditionError, ResourceError
from .families import FAMILIES, FamilySpec, evaluate_family
from .fx import FX_FAMILIES, fx_family, fx_from_table
from .oracle import oracle_stats
from .stats import StatBundle, format_number, parse_tuple

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
ENGINES = ("nr", "oracle", "ct", "closed")


def parse_params(text: str) -> dict[str, int]:
    """"a=7,h=1" -> {"a": 7, "h": 1}."""
    out = {}
    for part in filter(None, text.replace(" ", "").split(",")):
        name, _, value = part.partition("=")
        if not name or not value:
            raise DomainError(f"bad parameter {part!r}; expected name=value")
        out[name] = int(value)
    return out


def parse_grid(text: str) -> dict[str, range]:
    """"a=3..60,h=1..3,d=2" -> {"a": range(3, 61), "h": range(1, 4), "d": range(2, 3)}."""
    out = {}
    for part in filter(None, text.replace(" ", "").split(",")):
        m = re.fullmatch(r"(\w+)=(-?\d+)(?:\.\.(-?\d+))?", part)
        if not m:
            raise DomainError(f"bad grid entry {part!r}; expected name=lo..hi or name=value")
        lo = int(m.group(2))
        hi = int(m.group(3)) if m.group(3) is not None else lo
        out[m.group(1)] = range(lo, hi + 1)
    return out


def grid_points(family: str, grid: dict[str, range]) -> Iterator[dict[str, int]]:
    """Guard-satisfying parameter points, in lexicographic order of the family's schema."""
    fam = FAMILIES[family]
    unknown = set(grid) - set(fam.params)
    if unknown:
        raise DomainError(f"family {family} has no parameters {sorted(unknown)}; schema is {fam.params}")
    axes = [grid.get(p, range(1, 2)) for p in fam.params]
    for values in itertools.product(*axes):
        point = dict(zip(fam.params, values))
        if fam.admits(point):
            yield point


# ---------------------------------------------------------------------------
# compute


def _engine_bundle(engine: str, A, mu: int, lambdas, spec: FamilySpec | None) -> StatBundle:
    if engine == "nr":
        return stats_from_nr(compute_nr(A), mu, lambdas)
    if engine == "oracle":
        return oracle_stats(A, mu, lambdas)
    if engine == "ct":
        if spec is not None and spec.family in FX_FAMILIES:
            f = fx_family(spec, require_d_gt_h=False)
        else:
            f = fx_from_table(compute_nr(A))
        return stats_via_ct(f, A[0], mu, lambdas, A)
    if engine == "closed":
        if spec is None:
            raise DomainError("the closed-form engine needs --family")
        return evaluate_family(spec, mu)
    raise DomainError(f"unknown engine {engine!r}")


def _format_bundle(b: StatBundle) -> str:
    parts = [f"engine={b.engine}"]
    for name in ("g", "n", "s"):
        value = getattr(b, name)
        if value is not None:
            parts.append(f"{name}={value}")
    for mu, v in sorted(b.s_mu.items()):
        if mu > 1:
            parts.append(f"s_{mu}={v}")
    for mu, v in sorted(b.shat_mu.items()):
        if mu > 1:
            parts.append(f"shat_{mu}={v}")
    for lam, vals in b.s_mu_lambda.items():
        for mu, v in sorted(vals.items()):
            parts.append(f"s_{mu}^({format_number(lam)})={format_number(v)}")
    return " ".join(parts)


def cmd_compute(args) -> int:
    if args.family:
        spec = FamilySpec(args.family, parse_params(args.params or ""))
        spec.check()
        A = spec.tuple()
    elif args.tuple:
        spec = None
        A = parse_tuple(args.tuple)
    else:
        raise DomainError("give --tuple or --family")
    lambdas = [Fraction(x) for x in args.lam]
    if args.engine == "all":
        engines = ["nr", "oracle", "ct"] + (["closed"] if spec else [])
    else:
        engines = [args.engine]
        if args.check and args.engine != "oracle":
            engines.append("oracle")
    bundles = [_engine_bundle(e, A, args.mu, lambdas, spec) for e in engines]
    if args.json:
        for b in bundles:
            print(b.to_json())
    else:
        print("tuple=" + ",".join(map(str, A)))
        for b in bundles:
            print(_format_bundle(b))
    disagreements = [
        f"{x.engine} vs {y.engine}: {', '.join(d)}"
        for x, y in itertools.combinations(bundles, 2)
        if (d := x.differences(y))
    ]
    if len(bundles) > 1 and not args.json:
        print("agreement: " + ("all engines agree" if not disagreements else "MISMATCH"))
    for line in disagreements:
        print("mismatch: " + line, file=sys.stderr)
    return EXIT_MISMATCH if disagreements else EXIT_OK


# ---------------------------------------------------------------------------
# verify


def verify_point(family: str, point: dict[str, int], max_mu: int = 1, oracle: bool = False) -> tuple[str, list[str]]:
    """Compare every engine on one instance; returns (status, problems).

    ``status`` is "pass", "fail" or "pass (ct skipped)" when no f(x) form
    is claimed for the instance.
    """
    spec = FamilySpec(family, point)
    A = spec.tuple()
    closed = evaluate_family(spec, max_mu)
    bundles = [closed, stats_from_nr(compute_nr(A), max_mu)]
    skipped = False
    if family in FX_FAMILIES:
        try:
            f = fx_family(spec)
        except PreconditionError:
            skipped = True
        else:
            bundles.append(stats_via_ct(f, A[0], max_mu, (), A))
    if oracle:
        bundles.append(oracle_stats(A, max_mu))
    problems = []
    for x, y in itertools.combinations(bundles, 2):
        for stat in x.differences(y):
            problems.append(f"{stat}: {x.engine}={_lookup(x, stat)} {y.engine}={_lookup(y, stat)}")
    if problems:
        return "fail", problems
    return ("pass (ct skipped)" if skipped else "pass"), []


def _lookup(b: StatBundle, stat: str):
    m = re.fullmatch(r"(\w+)\[(\d+)\]", stat)
    if m:
        return getattr(b, m.group(1))[int(m.group(2))]
    return getattr(b, stat)


def _verify_task(job):
    family, point, max_mu, oracle = job
    return point, verify_point(family, point, max_mu, oracle)


def cmd_verify(args) -> int:
    if args.family not in FAMILIES:
        raise DomainError(f"unknown family {args.family!r}; known: {', '.join(FAMILIES)}")
    points = list(grid_points(args.family, parse_grid(args.grid or "")))
    if not points:
        print(f"warning: 0 instances satisfy the {args.family} hypotheses on this grid")
        return EXIT_OK
    jobs = [(args.family, p, args.mu, args.oracle) for p in points]
    if args.parallel > 1:
        with ProcessPoolExecutor(args.parallel) as pool:
            results = list(pool.map(_verify_task, jobs, chunksize=32))
    else:
        results = [_verify_task(j) for j in jobs]
    passed = sum(1 for _, (status, _) in results if status.startswith("pass"))
    skipped = sum(1 for _, (status, _) in results if status == "pass (ct skipped)")
    failed = [(p, problems) for p, (status, problems) in results if status == "fail"]
    print(f"family {args.family}: {len(results)} instances, {passed} pass, {len(failed)} fail")
    if skipped:
        print(f"  ct engine skipped on {skipped} instances outside the f(x) hypotheses")
    if failed:
        point, problems = failed[0]
        A = FamilySpec(args.family, point).tuple()
        print(f"first counterexample: {point} tuple={A}")
        for line in problems:
            print("  " + line)
        return EXIT_MISMATCH
    return EXIT_OK


# ---------------------------------------------------------------------------
# table


def _column(name: str, closed: StatBundle, fallback) -> object:
    m = re.fullmatch(r"(s|shat)(\d+)", name)
    if name in ("g", "n", "s"):
        value = getattr(closed, name)
        return value if value is not None else getattr(fallback(), name)
    if m:
        which = "s_mu" if m.group(1) == "s" else "shat_mu"
        mu = int(m.group(2))
        table = getattr(closed, which)
        return table[mu] if mu in table else getattr(fallback(), which)[mu]
    raise DomainError(f"unknown column {name!r}; use g, n, s, s<mu> or shat<mu>")


def cmd_table(args) -> int:
    if args.family not in FAMILIES:
        raise DomainError(f"unknown family {args.family!r}; known: {', '.join(FAMILIES)}")
    fam = FAMILIES[args.family]
    cols = [c for c in args.cols.replace(" ", "").split(",") if c]
    mus = [int(m.group(2)) for c in cols if (m := re.fullmatch(r"(s|shat)(\d+)", c))]
    max_mu = max(mus + [1])
    rows = ["\t".join(list(fam.params) + ["tuple"] + cols)]
    for point in grid_points(args.family, parse_grid(args.param_range or "")):
        spec = FamilySpec(args.family, point)
        A = spec.tuple()
        closed = evaluate_family(spec, max_mu)
        cache: list[StatBundle] = []

        def fallback():
            if not cache:
                cache.append(stats_from_nr(compute_nr(A), max_mu))
            return cache[0]

        values = [_column(c, closed, fallback) for c in cols]
        rows.append("\t".join([str(point[p]) for p in fam.params] + [",".join(map(str, A))] + [str(v) for v in values]))
    print("\n".join(rows))
    return EXIT_OK


def cmd_families(args) -> int:
    for tag, fam in FAMILIES.items():
        print(f"{tag}\t{','.join(fam.params)}\t{fam.description}")
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="frob", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="statistics of one tuple")
    p.add_argument("--tuple", help="comma-separated generators, e.g. 5,16,19,22")
    p.add_argument("--family", help="family tag (enables the closed-form engine)")
    p.add_argument("--params", help="family parameters, e.g. a=7,h=1,d=1,k=2")
    p.add_argument("--mu", type=int, default=1, help="highest power / binomial moment (default 1)")
    p.add_argument("--lambda", dest="lam", action="append", default=[], metavar="LAM",
                   help="weight for s_mu^(lambda); repeatable; rationals like 1/2 allowed")
    p.add_argument("--engine", choices=ENGINES + ("all",), default="nr")
    p.add_argument("--json", action="store_true", help="one JSON bundle per engine, one per line")
    p.add_argument("--check", action="store_true", help="also run the oracle and compare")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="closed form vs residue engine vs constant-term engine over a grid")
    p.add_argument("--family", required=True)
    p.add_argument("--grid", default="", help='e.g. "a=3..60,h=1..3,d=1..3,j=4..8"; missing parameters are 1')
    p.add_argument("--mu", type=int, default=1)
    p.add_argument("--oracle", action="store_true", help="include the brute-force oracle")
    p.add_argument("--parallel", type=int, default=1, metavar="N")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="TSV of closed-form statistics over a parameter range")
    p.add_argument("--family", required=True)
    p.add_argument("--param-range", default="", help='e.g. "a=2..10"')
    p.add_argument("--cols", default="g,n,s", help="columns: g, n, s, s<mu>, shat<mu>")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("families", help="list families and their parameters")
    p.set_defaults(func=cmd_families)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "lam", None):
        try:
            for x in args.lam:
                if Fraction(x) in (0, 1):
                    parser.error("lambda must differ from 0 and 1")
        except ValueError:
            parser.error(f"cannot parse lambda {args.lam!r}")
    try:
        return args.func(args)
    except (InvalidTuple, PreconditionError, DomainError) as exc:
        print(f"frob: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OracleCapExceeded, ResourceError) as exc:
        print(f"frob: resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
