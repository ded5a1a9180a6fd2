"""Exit criteria. Each test records one PASS/FAIL line, printed in the
terminal summary (see conftest.py)."""

from __future__ import annotations

import math
import random
import time
from fractions import Fraction

import pytest

from treewiener.closed_form import (
    WienerState,
    starfractal_wiener,
    subdivision_wiener,
    subdivision_wiener_t,
    vertexop_wiener,
)
from treewiener.growth_ops import GrowthOp, first_order_subdivision, iterate, star_fractal, vertex_op
from treewiener.models import (
    ModelParams,
    build_t_odot,
    build_t_star,
    odot_degree_profile,
    odot_order,
    odot_wiener,
    star_dimensions,
    star_order,
    star_wiener,
    star_wiener_recursive,
)
from treewiener.random_walk import WalkConfig, exact_mean_hitting, mc_mean_hitting
from treewiener.tree_core import diameter, random_tree, wiener_bfs, wiener_subtree

pytestmark = pytest.mark.acceptance

RESULTS: list[str] = []

BUILD_LIMIT = 20_000
MODEL_MS = range(1, 11)


def record(number: str, title: str, ok: bool, detail: str = "") -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title}"
    if detail:
        line += f" [{detail}]"
    RESULTS.append(line)
    print(line)
    assert ok, line


def random_seeds(count: int, rng_seed: int, max_n: int = 200):
    rng = random.Random(rng_seed)
    for _ in range(count):
        n = rng.randint(2, max_n)
        yield n, random_tree(n, rng.getrandbits(63))


def buildable(order_fn, m, limit=BUILD_LIMIT):
    t = 0
    while order_fn(ModelParams(t, m)) <= limit:
        yield t
        t += 1


def test_criterion_01_subdivision_theorem():
    start = time.perf_counter()
    bad = []
    for n, tree in random_seeds(100, 1):
        grown = first_order_subdivision(tree)
        closed = subdivision_wiener(WienerState(wiener_subtree(tree), n)).s
        if not closed == wiener_bfs(grown) == wiener_subtree(grown):
            bad.append(n)
    elapsed = time.perf_counter() - start
    record("1", "subdivision closed form = BFS = edge sum on 100 random trees (n<=200), < 30 s",
           not bad and elapsed < 30, f"{100 - len(bad)}/100 exact, {elapsed:.1f}s")


def test_criterion_02_vertexop_and_starfractal_theorems():
    bad = []
    count = 0
    for n, tree in random_seeds(100, 2):
        s0 = WienerState(wiener_subtree(tree), n)
        for m in range(1, 6):
            for closed, grown in ((vertexop_wiener(s0, m).s, vertex_op(tree, m)),
                                  (starfractal_wiener(s0, m).s, star_fractal(tree, m))):
                count += 1
                if not closed == wiener_bfs(grown) == wiener_subtree(grown):
                    bad.append((n, m))
    record("2", "vertex-op and star-fractal closed forms = both oracles, 100 random trees x m in 1..5", not bad,
           f"{count - len(bad)}/{count} exact")


def test_criterion_03_corollary():
    bad = []
    for n, tree in random_seeds(100, 3):
        s0 = WienerState(wiener_subtree(tree), n)
        stepped = s0
        for t in range(1, 7):
            stepped = subdivision_wiener(stepped)
            if subdivision_wiener_t(s0, t) != stepped:
                bad.append(("iter", n, t))
    graph_checks = 0
    for n, tree in random_seeds(60, 33, max_n=50):
        s0 = WienerState(wiener_subtree(tree), n)
        for t in range(0, 4):
            graph_checks += 1
            if subdivision_wiener_t(s0, t).s != wiener_subtree(iterate(tree, GrowthOp.subdivision(), t)):
                bad.append(("graph", n, t))
    record("3", "t-step subdivision closed form = iteration (t<=6) and graph oracle (t<=3, n<=50)",
           not bad, f"{graph_checks} graph checks, {len(bad)} mismatches")


def test_criterion_04_odot_wiener():
    bad = []
    cells = 0
    for m in MODEL_MS:
        for t in buildable(odot_order, m):
            p = ModelParams(t, m)
            cells += 1
            if wiener_subtree(build_t_odot(p)) != odot_wiener(p):
                bad.append((t, m))
    spots = [odot_wiener(ModelParams(1, 1)), odot_wiener(ModelParams(2, 1)), odot_wiener(ModelParams(1, 2))]
    record("4", "odot Wiener formula = graph oracle for all 2(m+1)^t <= 20000, m in 1..10; spots 10, 68, 29",
           not bad and spots == [10, 68, 29], f"{cells} instances, spots {spots}")


def test_criterion_05_star_wiener():
    bad = []
    cells = 0
    for m in MODEL_MS:
        for t in range(26):
            p = ModelParams(t, m)
            if star_wiener(p) != star_wiener_recursive(p):
                bad.append(("recursion", t, m))
        for t in buildable(star_order, m):
            p = ModelParams(t, m)
            cells += 1
            if wiener_subtree(build_t_star(p)) != star_wiener(p):
                bad.append(("graph", t, m))
    spots = [star_wiener(ModelParams(1, 1)), star_wiener(ModelParams(2, 1)), star_wiener(ModelParams(1, 2))]
    record("5", "star Wiener formula = recursion (t<=25) and graph oracle ((m+2)^t+1 <= 20000); spots 9, 117, 16",
           not bad and spots == [9, 117, 16], f"{cells} built instances, spots {spots}")


def test_criterion_06_diameters():
    bad = []
    cells = 0
    for m in MODEL_MS:
        for t in buildable(odot_order, m):
            cells += 1
            if diameter(build_t_odot(ModelParams(t, m))) != 2 * t + 1:
                bad.append(("odot", t, m))
        for t in buildable(star_order, m):
            cells += 1
            if diameter(build_t_star(ModelParams(t, m))) != 2**t:
                bad.append(("star", t, m))
    record("6", "diameter(T_odot) = 2t+1 and diameter(T_star) = 2^t for every buildable instance",
           not bad, f"{cells} instances")


def test_criterion_07_mfpt():
    start = time.perf_counter()
    bad = []
    cells = 0
    for m in range(1, 6):
        for build, order_fn in ((build_t_odot, odot_order), (build_t_star, star_order)):
            for t in buildable(order_fn, m, limit=2_000):
                tree = build(ModelParams(t, m))
                cells += 1
                if exact_mean_hitting(tree) != Fraction(2 * wiener_subtree(tree), tree.n):
                    bad.append((build.__name__, t, m))
    mc = []
    for name, tree, seed in (("odot(3,1)", build_t_odot(ModelParams(3, 1)), 31),
                             ("star(3,1)", build_t_star(ModelParams(3, 1)), 32)):
        exact = float(exact_mean_hitting(tree))
        res = mc_mean_hitting(tree, WalkConfig(seed, num_walks=100_000))
        z = (res.estimate - exact) / res.stderr
        mc.append(f"{name} z={z:+.2f}")
        if res.truncated or abs(z) > 3:
            bad.append(name)
    elapsed = time.perf_counter() - start
    record("7", "exact mean hitting = 2S/N (order <= 2000), MC within 3 stderr at 1e5 walks, < 60 s",
           not bad and elapsed < 60, f"{cells} exact instances, {', '.join(mc)}, {elapsed:.1f}s")


def test_criterion_08_degree_profile():
    bad = []
    for m in range(1, 4):
        for t in range(0, 6):
            prof = odot_degree_profile(ModelParams(t, m))
            degrees = {deg for _, _, deg in prof}
            sizes = [c for _, c, _ in prof]
            want = [2] + [2 * m * (m + 1) ** (j - 1) for j in range(1, t + 1)]
            total = sum(sizes)
            cum = 0
            fractions_ok = True
            for j, c in enumerate(sizes):
                cum += c
                fractions_ok &= Fraction(cum, total) == Fraction(m + 1) ** (j - t)
            if len(degrees) != t + 1 or sizes != want or not fractions_ok:
                bad.append((t, m))
    record("8", "T_odot(t<=5, m<=3): t+1 birth-class degrees, sizes 2 and 2m(m+1)^(j-1), cumulative (m+1)^(j-t)",
           not bad, f"{18 - len(bad)}/18 instances")


def _avg(s: int, n: int) -> Fraction:
    return Fraction(2 * s, n * (n - 1))


def test_criterion_09a_odot_average_distance_ratio():
    ratios = {}
    for m in (1, 2, 3):
        p = ModelParams(10, m)
        ratios[m] = float(_avg(odot_wiener(p), odot_order(p)) / 20)
    ok = all(0.8 <= r <= 1.2 for r in ratios.values())
    record("9a", "<S_odot>/(2t) in [0.8, 1.2] at t=10, m in {1,2,3}", ok,
           ", ".join(f"m={m}: {r:.4f}" for m, r in ratios.items()))


def test_criterion_09b_star_average_distance_ratio():
    ratios = {}
    for t in range(8, 15):
        p = ModelParams(t, 1)
        ratios[t] = float(_avg(star_wiener(p), star_order(p)) / 2**t)
    ok = all(0.5 <= r <= 2.0 for r in ratios.values())
    record("9b", "<S_star>/2^t in [0.5, 2.0] for t in 8..14, m=1", ok,
           f"min {min(ratios.values()):.4f}, max {max(ratios.values()):.4f}")


def test_criterion_10_dimensions():
    d_f, d_w, d_s = star_dimensions(1)
    close = all(math.isclose(a, b, rel_tol=1e-12) for a, b in (
        (d_f, math.log(3) / math.log(2)),
        (d_w, math.log(6) / math.log(2)),
        (d_s, math.log(9) / math.log(6)),
    ))
    below_two = all(star_dimensions(m)[2] < 2 for m in range(1, 11))
    record("10", "d_f, d_w, spectral dim for m=1 to 12 digits; spectral dim < 2 for m in 1..10",
           close and below_two, f"d_f={d_f:.12g}, d_w={d_w:.12g}, d_s={d_s:.12g}")
