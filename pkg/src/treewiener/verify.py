"""Property suites comparing closed forms with graph oracles.

Each suite returns a list of :class:`Check` records; a failing record keeps
the offending seed tree (as edge-list text) and the disagreeing values so a
mismatch can be replayed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .closed_form import WienerState, step, subdivision_wiener, subdivision_wiener_t
from .errors import TreeWienerError
from .growth_ops import GrowthOp, apply, iterate
from .models import (
    ModelParams,
    build_t_odot,
    build_t_star,
    odot_order,
    odot_wiener,
    odot_wiener_recursive,
    star_order,
    star_wiener,
    star_wiener_recursive,
)
from .random_walk import HittingTimes, WalkConfig, exact_mean_hitting, mc_mean_hitting
from .tree_core import bfs_distances, diameter, random_tree, to_edge_list, wiener_bfs, wiener_subtree

SUITES = ("theorems", "models", "walks")


@dataclass
class Check:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)


def _trial_seeds(rng_seed: int, trials: int) -> list[int]:
    rng = random.Random(rng_seed)
    return [rng.getrandbits(63) for _ in range(trials)]


def theorems(trials: int = 100, max_n: int = 200, rng_seed: int = 0) -> list[Check]:
    """Single-step transforms and the subdivision corollary against both oracles."""
    checks = []
    rng = random.Random(rng_seed)
    for i, seed in enumerate(_trial_seeds(rng_seed, trials)):
        n = rng.randint(2, max(2, max_n))
        tree = random_tree(n, seed)
        state = WienerState(wiener_subtree(tree), n)
        m = 1 + i % 5
        for op in (GrowthOp.subdivision(), GrowthOp.vertex(m), GrowthOp.star(m)):
            grown = apply(tree, op)
            try:
                closed = step(state, op).s
            except TreeWienerError as exc:
                closed = f"error: {exc}"
            by_subtree = wiener_subtree(grown)
            by_bfs = wiener_bfs(grown)
            ok = closed == by_subtree == by_bfs
            detail = {"trial": i, "seed": seed, "n": n, "op": str(op), "closed_form": closed,
                      "wiener_subtree": by_subtree, "wiener_bfs": by_bfs}
            if not ok:
                detail["seed_tree"] = to_edge_list(tree)
            checks.append(Check(f"step {op} n={n}", ok, detail))

        t_max = 6
        stepped = state
        for t in range(1, t_max + 1):
            stepped = subdivision_wiener(stepped)
            closed = subdivision_wiener_t(state, t)
            ok = closed == stepped
            if ok and n <= 50 and t <= 3:
                ok = closed.s == wiener_subtree(iterate(tree, GrowthOp.subdivision(), t))
            if not ok:
                checks.append(Check(f"corollary t={t} n={n}", False,
                                    {"seed": seed, "closed": closed.s, "stepped": stepped.s,
                                     "seed_tree": to_edge_list(tree)}))
                break
        else:
            checks.append(Check(f"corollary t<={t_max} n={n}", True, {"seed": seed}))
    return checks


def buildable(order_fn, m: int, max_order: int) -> list[int]:
    ts = []
    t = 0
    while order_fn(ModelParams(t, m)) <= max_order:
        ts.append(t)
        t += 1
    return ts


def models(max_build_order: int = 20_000, ms=range(1, 6), t_arith: int = 25) -> list[Check]:
    checks = []
    spots = {
        ("odot", 1, 1): 10, ("odot", 2, 1): 68, ("odot", 1, 2): 29,
        ("star", 1, 1): 9, ("star", 2, 1): 117, ("star", 1, 2): 16,
    }
    for (model, t, m), want in spots.items():
        fn = odot_wiener if model == "odot" else star_wiener
        got = fn(ModelParams(t, m))
        checks.append(Check(f"spot {model} S({t},{m})={want}", got == want, {"got": got}))

    for m in ms:
        for t in range(t_arith + 1):
            p = ModelParams(t, m)
            a, b = odot_wiener(p), odot_wiener_recursive(p)
            c, d = star_wiener(p), star_wiener_recursive(p)
            if a != b or c != d:
                checks.append(Check(f"recursion t={t} m={m}", False,
                                    {"odot": [a, b], "star": [c, d]}))
        checks.append(Check(f"closed form = recursion, t<={t_arith}, m={m}", True))

        for model, order_fn, build, formula, diam in (
            ("odot", odot_order, build_t_odot, odot_wiener, lambda t: 2 * t + 1),
            ("star", star_order, build_t_star, star_wiener, lambda t: 2**t),
        ):
            for t in buildable(order_fn, m, max_build_order):
                p = ModelParams(t, m, max_order=max_build_order)
                tree = build(p)
                w = wiener_subtree(tree)
                dm = diameter(tree)
                ok = w == formula(p) and dm == diam(t) and tree.n == order_fn(p)
                checks.append(Check(f"{model} t={t} m={m} n={tree.n}", ok,
                                    {"formula": formula(p), "built": w, "diameter": dm, "expected_diameter": diam(t)}))
    return checks


def walks(trials: int = 20, rng_seed: int = 0, max_order: int = 2_000, ms=range(1, 4)) -> list[Check]:
    """Exact hitting-time identities and one Monte Carlo cross-check."""
    checks = []
    for m in ms:
        for model, order_fn, build in (("odot", odot_order, build_t_odot), ("star", star_order, build_t_star)):
            for t in buildable(order_fn, m, max_order):
                tree = build(ModelParams(t, m, max_order=max_order))
                exact = exact_mean_hitting(tree)
                two_s_n = Fraction(2 * wiener_subtree(tree), tree.n)
                checks.append(Check(f"2S/N {model} t={t} m={m}", exact == two_s_n,
                                    {"mean_hitting": str(exact), "2S/N": str(two_s_n)}))

    rng = random.Random(rng_seed)
    for seed in _trial_seeds(rng_seed, trials):
        tree = random_tree(rng.randint(2, 120), seed)
        ht = HittingTimes(tree)
        bad = None
        for _ in range(50):
            u, v = rng.randrange(tree.n), rng.randrange(tree.n)
            d = bfs_distances(tree, u)[v]
            if ht(u, v) + ht(v, u) != 2 * (tree.n - 1) * d:
                bad = (u, v)
                break
        detail = {"seed": seed, "n": tree.n}
        if bad:
            detail.update(pair=bad, seed_tree=to_edge_list(tree))
        checks.append(Check(f"commute identity n={tree.n}", bad is None, detail))

    tree = build_t_star(ModelParams(2, 2))
    exact = exact_mean_hitting(tree)
    res = mc_mean_hitting(tree, WalkConfig(rng_seed, num_walks=20_000))
    ok = res.truncated == 0 and abs(res.estimate - float(exact)) <= 3 * res.stderr
    checks.append(Check("monte carlo T_star(2,3)", ok,
                        {"exact": float(exact), "estimate": res.estimate, "stderr": res.stderr}))
    return checks


def run(suite: str, trials: int = 100, max_n: int = 200, rng_seed: int = 0,
        max_build_order: int = 20_000) -> list[Check]:
    if suite == "all":
        return (theorems(trials, max_n, rng_seed) + models(max_build_order)
                + walks(min(trials, 20), rng_seed, min(max_build_order, 2_000)))
    if suite == "theorems":
        return theorems(trials, max_n, rng_seed)
    if suite == "models":
        return models(max_build_order)
    if suite == "walks":
        return walks(min(trials, 20), rng_seed, min(max_build_order, 2_000))
    raise ValueError(f"unknown suite {suite!r}")
