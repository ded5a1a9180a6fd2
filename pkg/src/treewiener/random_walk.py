"""Hitting times of the simple random walk on trees, exact and sampled.

On a tree, stepping across edge ``u -> v`` for the first time takes
``2 * n_u - 1`` steps in expectation, where ``n_u`` counts the vertices on
``u``'s side of the edge. Hitting times are sums of these along the unique
path, so everything is exact integer arithmetic.

The "mean first-passage time" of a tree is taken as the mean hitting time over
uniformly random ordered pairs ``(src, dst)`` with ``src != dst``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InvalidArgumentError
from .tree_core import TreeGraph, subtree_sizes

__all__ = [
    "WalkConfig",
    "MCResult",
    "HittingTimes",
    "exact_hitting_time",
    "exact_mean_hitting",
    "mc_mean_hitting",
]


class HittingTimes:
    """Precomputed rooted structure answering exact hitting-time queries."""

    def __init__(self, tree: TreeGraph):
        self.tree = tree
        self.n = tree.n
        order, self.parent, self.size = subtree_sizes(tree)
        self.depth = [0] * self.n
        for v in order[1:]:
            self.depth[v] = self.depth[self.parent[v]] + 1

    def up_cost(self, v: int) -> int:
        """Expected steps from ``v`` to its parent."""
        return 2 * self.size[v] - 1

    def down_cost(self, v: int) -> int:
        """Expected steps from ``parent(v)`` to ``v``."""
        return 2 * (self.n - self.size[v]) - 1

    def __call__(self, src: int, dst: int) -> int:
        if src == dst:
            return 0
        parent, depth = self.parent, self.depth
        total = 0
        a, b = src, dst
        while depth[a] > depth[b]:
            total += self.up_cost(a)
            a = parent[a]
        while depth[b] > depth[a]:
            total += self.down_cost(b)
            b = parent[b]
        while a != b:
            total += self.up_cost(a) + self.down_cost(b)
            a, b = parent[a], parent[b]
        return total


def exact_hitting_time(tree: TreeGraph, src: int, dst: int) -> int:
    """Expected steps for a walk from ``src`` to first reach ``dst``; 0 if equal."""
    return HittingTimes(tree)(src, dst)


def _hitting_total(tree: TreeGraph) -> int:
    """Sum of hitting times over all ordered pairs.

    Builds the column ``H[:, v]`` (hitting times into ``v`` from every source)
    from the parent's column: sources inside ``v``'s subtree save the
    ``v -> parent`` crossing, all others pay the ``parent -> v`` crossing.
    Rows are in DFS preorder so a subtree is a contiguous slice. Only columns
    on the current DFS path are alive at once.
    """
    n = tree.n
    ht = HittingTimes(tree)
    adj = tree.adjacency
    parent = ht.parent

    pre = []
    stack = [0]
    while stack:
        u = stack.pop()
        pre.append(u)
        stack.extend(v for v in reversed(adj[u]) if v != parent[u])
    pos = [0] * n
    for i, v in enumerate(pre):
        pos[v] = i

    root_col = np.zeros(n, dtype=np.int64)
    # H(s -> 0) accumulates upward crossings; pre is parent-before-child
    for v in pre[1:]:
        root_col[pos[v]] = root_col[pos[parent[v]]] + ht.up_cost(v)
    total = int(root_col.sum())

    work = [(c, root_col) for c in adj[0]]
    while work:
        v, pcol = work.pop()
        lo, hi = pos[v], pos[v] + ht.size[v]
        col = pcol + ht.down_cost(v)
        col[lo:hi] = pcol[lo:hi] - ht.up_cost(v)
        total += int(col.sum())
        work.extend((c, col) for c in adj[v] if c != parent[v])
    return total


def exact_mean_hitting(tree: TreeGraph) -> Fraction:
    n = tree.n
    if n < 2:
        return Fraction(0)
    return Fraction(_hitting_total(tree), n * (n - 1))


# -- Monte Carlo ----------------------------------------------------------------

@dataclass(frozen=True)
class WalkConfig:
    rng_seed: int
    num_walks: int = 100_000
    max_steps: int = 10**9
    chunk: int = 1 << 16

    def __post_init__(self):
        if self.num_walks < 1:
            raise InvalidArgumentError("num_walks must be >= 1")
        if self.max_steps < 1:
            raise InvalidArgumentError("max_steps must be >= 1")
        if self.chunk < 1:
            raise InvalidArgumentError("chunk must be >= 1")


@dataclass(frozen=True)
class MCResult:
    estimate: float
    stderr: float
    truncated: int
    completed: int


_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)


def _mix(x: np.ndarray) -> np.ndarray:
    # splitmix64 finaliser; uint64 arithmetic wraps
    x = x ^ (x >> np.uint64(30))
    x = x * _M1
    x = x ^ (x >> np.uint64(27))
    x = x * _M2
    return x ^ (x >> np.uint64(31))


def _draw(keys: np.ndarray, counter: np.ndarray) -> np.ndarray:
    """Counter-based stream: value ``counter`` of the walk with key ``keys``."""
    return _mix(keys + (counter.astype(np.uint64) + np.uint64(1)) * _GOLDEN)


def _below(x: np.ndarray, bound: np.ndarray) -> np.ndarray:
    """Map 64-bit draws to ``[0, bound)`` by multiply-shift on the top 32 bits."""
    return ((x >> np.uint64(32)) * bound.astype(np.uint64)) >> np.uint64(32)


def _walk_keys(seed: int, first: int, count: int) -> np.ndarray:
    base = _mix(np.array([seed & 0xFFFFFFFFFFFFFFFF], dtype=np.uint64))
    idx = np.arange(first, first + count, dtype=np.uint64)
    return _mix(base ^ _mix(idx))


def mc_mean_hitting(tree: TreeGraph, cfg: WalkConfig) -> MCResult:
    """Sample mean hitting time over random ordered pairs.

    Walk ``i`` draws only from its own counter-indexed stream, so the result
    is the same for any chunking. Walks still running at ``max_steps`` are
    counted in ``truncated`` and left out of the estimate.
    """
    n = tree.n
    if n < 2:
        raise InvalidArgumentError("need at least two vertices")
    deg = np.array([len(nb) for nb in tree.adjacency], dtype=np.int64)
    offset = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(deg, out=offset[1:])
    nbrs = np.fromiter((v for nb in tree.adjacency for v in nb), dtype=np.int64, count=int(offset[-1]))

    s1 = 0
    s2 = 0
    done = 0
    truncated = 0
    for first in range(0, cfg.num_walks, cfg.chunk):
        count = min(cfg.chunk, cfg.num_walks - first)
        keys = _walk_keys(cfg.rng_seed, first, count)
        zeros = np.zeros(count, dtype=np.int64)
        src = _below(_draw(keys, zeros), np.full(count, n)).astype(np.int64)
        dst = _below(_draw(keys, zeros + 1), np.full(count, n - 1)).astype(np.int64)
        dst += dst >= src

        cur = src
        steps = np.zeros(count, dtype=np.int64)
        while keys.size:
            x = _draw(keys, steps + 2)
            d = deg[cur]
            cur = nbrs[offset[cur] + _below(x, d).astype(np.int64)]
            steps += 1
            hit = cur == dst
            cut = ~hit & (steps >= cfg.max_steps)
            if hit.any():
                finished = steps[hit]
                s1 += int(finished.sum())
                peak = int(finished.max())
                if peak * peak * finished.size < 2**63:
                    s2 += int((finished * finished).sum())
                else:
                    s2 += sum(int(f) * int(f) for f in finished)
                done += int(hit.sum())
            truncated += int(cut.sum())
            keep = ~(hit | cut)
            if not keep.all():
                keys, cur, dst, steps = keys[keep], cur[keep], dst[keep], steps[keep]

    if done == 0:
        return MCResult(float("nan"), float("nan"), truncated, 0)
    mean = Fraction(s1, done)
    if done > 1:
        var = (Fraction(s2) - Fraction(s1 * s1, done)) / (done - 1)
        stderr = float(var / done) ** 0.5
    else:
        stderr = float("nan")
    return MCResult(float(mean), stderr, truncated, done)
