"""Command-line front end.

    treewiener gen odot 3 2 --out t.txt
    treewiener gen custom 2 1 --seed seed.txt --op star
    treewiener metrics t.txt
    treewiener verify all 100 200 7
    treewiener sweep star 1..6 1..3 --out star.csv
    treewiener walk t.txt --walks 100000 --rng-seed 1

Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import verify as verify_mod
from .errors import TreeWienerError
from .growth_ops import GrowthOp, iterate
from .models import (
    DEFAULT_MAX_ORDER,
    ModelParams,
    build_t_odot,
    build_t_star,
    measure,
    odot_metrics,
    star_metrics,
)
from .random_walk import WalkConfig, exact_mean_hitting, mc_mean_hitting
from .tree_core import from_edge_list, to_edge_list

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

CSV_HEADER = ["model", "t", "m", "order", "wiener", "avg_distance", "diameter", "mfpt",
              "source", "avg_distance_decimal", "mfpt_decimal"]


class UsageError(Exception):
    pass


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _open_out(path: str):
    if path == "-":
        return sys.stdout
    return open(path, "w", encoding="utf-8", newline="")


def _int_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'a..b' or an integer, got {text!r}")
    if b < a:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(a, b + 1)


_OPS = {"subdivision": GrowthOp.subdivision, "star": GrowthOp.star, "vertex": GrowthOp.vertex}


def cmd_gen(args) -> int:
    p = ModelParams(args.t, args.m, max_order=args.max_order)
    if args.model == "odot":
        tree = build_t_odot(p)
    elif args.model == "star":
        tree = build_t_star(p)
    else:
        if not args.seed or not args.op:
            raise UsageError("custom model needs --seed FILE and --op")
        seed = from_edge_list(_read_text(args.seed))
        op = GrowthOp.subdivision() if args.op == "subdivision" else _OPS[args.op](args.m)
        tree = iterate(seed, op, args.t)
        if tree.n > args.max_order:
            raise UsageError(f"order {tree.n} exceeds --max-order {args.max_order}")
    summary = f"order={tree.n} size={tree.num_edges}"
    if args.out == "-":
        sys.stdout.write(f"# {summary}\n" + to_edge_list(tree))
    else:
        Path(args.out).write_text(to_edge_list(tree), encoding="utf-8")
        print(summary)
    return EXIT_OK


def cmd_metrics(args) -> int:
    tree = from_edge_list(_read_text(args.path))
    rep = measure(tree)
    out = {
        "order": rep.order,
        "size": rep.size,
        "wiener": str(rep.wiener),
        "avg_distance": _frac(rep.avg_distance),
        "diameter": rep.diameter,
        "degree_histogram": {str(k): v for k, v in rep.degree_histogram.items()},
        "mfpt": _frac(rep.mfpt),
    }
    print(json.dumps(out, indent=2))
    return EXIT_OK


def cmd_verify(args) -> int:
    checks = verify_mod.run(args.suite, args.trials, args.max_n, args.rng_seed, args.max_build_order)
    failed = [c for c in checks if not c.passed]
    summary = {
        "suite": args.suite,
        "checks": len(checks),
        "passed": len(checks) - len(failed),
        "failed": len(failed),
        "failures": [{"name": c.name, **c.detail} for c in failed],
    }
    if args.verbose:
        summary["results"] = [{"name": c.name, "passed": c.passed} for c in checks]
    print(json.dumps(summary, indent=2, default=str))
    return EXIT_FAIL if failed else EXIT_OK


def sweep_rows(model: str, ts: range, ms: range, max_build_order: int) -> list[dict]:
    rows = []
    for t in ts:
        for m in ms:
            p = ModelParams(t, m, max_order=max_build_order)
            rep = odot_metrics(p) if model == "odot" else star_metrics(p)
            rows.append(_row(model, t, m, "analytic", rep.order, rep.wiener, rep.avg_distance,
                             rep.diameter, rep.mfpt))
            if rep.order <= max_build_order:
                tree = build_t_odot(p) if model == "odot" else build_t_star(p)
                got = measure(tree)
                rows.append(_row(model, t, m, "built", got.order, got.wiener, got.avg_distance,
                                 got.diameter, got.mfpt))
    rows.sort(key=lambda r: (r["model"], r["t"], r["m"], r["source"] != "analytic"))
    return rows


def _row(model, t, m, source, order, wiener, avg, diam, mfpt) -> dict:
    return {
        "model": model, "t": t, "m": m, "order": str(order), "wiener": str(wiener),
        "avg_distance": _frac(avg), "diameter": diam, "mfpt": _frac(mfpt), "source": source,
        "avg_distance_decimal": f"{float(avg):.12g}", "mfpt_decimal": f"{float(mfpt):.12g}",
    }


def cmd_sweep(args) -> int:
    rows = sweep_rows(args.model, args.t_range, args.m_range, args.max_build_order)
    fh = _open_out(args.out)
    try:
        writer = csv.DictWriter(fh, fieldnames=CSV_HEADER, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if fh is not sys.stdout:
            fh.close()
    return EXIT_OK


def cmd_walk(args) -> int:
    tree = from_edge_list(_read_text(args.path))
    exact = exact_mean_hitting(tree)
    res = mc_mean_hitting(tree, WalkConfig(args.rng_seed, args.walks, args.max_steps))
    out = {
        "order": tree.n,
        "exact_mean_hitting": _frac(exact),
        "exact_decimal": float(exact),
        "estimate": res.estimate,
        "stderr": res.stderr,
        "completed": res.completed,
        "truncated": res.truncated,
    }
    if res.stderr and res.stderr == res.stderr:
        out["z"] = (res.estimate - float(exact)) / res.stderr
    print(json.dumps(out, indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="treewiener", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    g = sub.add_parser("gen", help="write a model tree as an edge list")
    g.add_argument("model", choices=["odot", "star", "custom"])
    g.add_argument("t", type=int)
    g.add_argument("m", type=int)
    g.add_argument("--seed", help="seed tree edge-list file (custom model)")
    g.add_argument("--op", choices=sorted(_OPS), help="growth operation (custom model)")
    g.add_argument("--out", default="-")
    g.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    g.set_defaults(func=cmd_gen)

    mt = sub.add_parser("metrics", help="measure an edge-list tree")
    mt.add_argument("path", help="edge-list file, or - for stdin")
    mt.set_defaults(func=cmd_metrics)

    v = sub.add_parser("verify", help="run oracle-equivalence suites")
    v.add_argument("suite", choices=[*verify_mod.SUITES, "all"])
    v.add_argument("trials", type=int, nargs="?", default=100)
    v.add_argument("max_n", type=int, nargs="?", default=200)
    v.add_argument("rng_seed", type=int, nargs="?", default=0)
    v.add_argument("--max-build-order", type=int, default=20_000)
    v.add_argument("-v", "--verbose", action="store_true")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sweep", help="analytic vs built metrics as CSV")
    s.add_argument("model", choices=["odot", "star"])
    s.add_argument("t_range", type=_int_range, help="e.g. 1..5")
    s.add_argument("m_range", type=_int_range, help="e.g. 1..2")
    s.add_argument("--out", default="-")
    s.add_argument("--max-build-order", type=int, default=20_000)
    s.set_defaults(func=cmd_sweep)

    w = sub.add_parser("walk", help="exact and Monte Carlo mean hitting time")
    w.add_argument("path")
    w.add_argument("--walks", type=int, default=100_000)
    w.add_argument("--rng-seed", type=int, default=0)
    w.add_argument("--max-steps", type=int, default=10**9)
    w.set_defaults(func=cmd_walk)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, TreeWienerError, OSError) as exc:
        print(f"treewiener {args.verb}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
