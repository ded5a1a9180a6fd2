"""Immutable tree graphs, seed constructors and geodesic-distance oracles.

Vertices are dense integers ``0..n-1``. Every vertex carries a birth step and
a structural class so that growth operations can be audited after the fact.
Two Wiener-index oracles live here and share no code path:

* :func:`wiener_bfs` sums all-pairs BFS distances;
* :func:`wiener_subtree` sums ``s * (n - s)`` over edges, ``s`` being the
  vertex count on one side of the edge.
"""

from __future__ import annotations

import enum
import random
import re
from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import networkx as nx
import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .errors import EdgeListFormatError, InvalidArgumentError, NotATreeError

__all__ = [
    "VertexClass",
    "VertexMeta",
    "TreeGraph",
    "validate",
    "new_single_edge",
    "new_path",
    "new_star",
    "random_tree",
    "from_edge_list",
    "to_edge_list",
    "bfs_distances",
    "wiener_bfs",
    "wiener_subtree",
    "diameter",
    "degree_histogram",
]


class VertexClass(enum.Enum):
    ORIGINAL = "original"
    SUBDIVISION_INTERNAL = "subdivision-internal"
    STAR_LEAF = "star-leaf"
    VERTEX_OP_LEAF = "vertex-op-leaf"


@dataclass(frozen=True)
class VertexMeta:
    birth_step: int
    vclass: VertexClass


@dataclass(frozen=True, eq=True)
class TreeGraph:
    """Undirected tree stored as sorted neighbour tuples.

    Build instances with :meth:`from_edges` (validated) rather than the raw
    constructor. ``generation`` counts growth steps applied since the seed.
    """

    adjacency: tuple[tuple[int, ...], ...]
    birth: tuple[int, ...]
    vclass: tuple[VertexClass, ...]
    generation: int = 0

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        birth: Sequence[int] | None = None,
        vclass: Sequence[VertexClass] | None = None,
        generation: int = 0,
        check: bool = True,
    ) -> "TreeGraph":
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if check and not (0 <= u < n and 0 <= v < n):
                raise NotATreeError("vertex-range", f"edge ({u}, {v}) outside 0..{n - 1}")
            adj[u].append(v)
            adj[v].append(u)
        if birth is None:
            birth = (0,) * n
        if vclass is None:
            vclass = (VertexClass.ORIGINAL,) * n
        tree = cls(
            adjacency=tuple(tuple(sorted(nb)) for nb in adj),
            birth=tuple(birth),
            vclass=tuple(vclass),
            generation=generation,
        )
        if check:
            validate(tree)
        return tree

    @property
    def n(self) -> int:
        return len(self.adjacency)

    @property
    def num_edges(self) -> int:
        return sum(len(nb) for nb in self.adjacency) // 2

    def meta(self, v: int) -> VertexMeta:
        return VertexMeta(self.birth[v], self.vclass[v])

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(min, max)`` pairs in lexicographic order."""
        return [(u, v) for u, nb in enumerate(self.adjacency) for v in nb if u < v]

    def vertices_of(self, vclass: VertexClass) -> list[int]:
        return [v for v, c in enumerate(self.vclass) if c is vclass]

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g


def validate(tree: TreeGraph) -> None:
    """Raise :class:`NotATreeError` unless ``tree`` is a simple connected tree."""
    n = tree.n
    if n == 0:
        raise NotATreeError("connected", "empty graph")
    if len(tree.birth) != n or len(tree.vclass) != n:
        raise NotATreeError("vertex-range", "metadata length differs from vertex count")
    for u, nb in enumerate(tree.adjacency):
        if u in nb:
            raise NotATreeError("no-self-loops", f"vertex {u}")
        if len(set(nb)) != len(nb):
            raise NotATreeError("no-duplicate-edges", f"at vertex {u}")
        for v in nb:
            if not 0 <= v < n:
                raise NotATreeError("vertex-range", f"neighbour {v} of {u}")
            if u not in tree.adjacency[v]:
                raise NotATreeError("symmetric", f"{u}->{v} has no reverse")
    seen = _reachable(tree.adjacency, 0)
    if seen != n:
        raise NotATreeError("connected", f"disconnected: {seen} of {n} vertices reachable from 0")
    if tree.num_edges != n - 1:
        raise NotATreeError("acyclic", f"contains a cycle: {tree.num_edges} edges on {n} vertices")


def _reachable(adjacency, src: int) -> int:
    seen = bytearray(len(adjacency))
    seen[src] = 1
    stack = [src]
    count = 1
    while stack:
        u = stack.pop()
        for v in adjacency[u]:
            if not seen[v]:
                seen[v] = 1
                count += 1
                stack.append(v)
    return count


# -- seeds -------------------------------------------------------------------

def new_single_edge() -> TreeGraph:
    return TreeGraph.from_edges(2, [(0, 1)])


def new_path(n: int) -> TreeGraph:
    if n < 1:
        raise InvalidArgumentError(f"path needs n >= 1, got {n}")
    return TreeGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def new_star(leaves: int) -> TreeGraph:
    """Star ``K_{1,leaves}`` with centre 0."""
    if leaves < 1:
        raise InvalidArgumentError(f"star needs at least one leaf, got {leaves}")
    return TreeGraph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def random_tree(n: int, rng_seed: int) -> TreeGraph:
    """Uniform labelled tree on ``n`` vertices, decoded from a random Prüfer code.

    The code is drawn with :class:`random.Random`, so the result depends only
    on ``(n, rng_seed)`` and is identical across platforms.
    """
    if n < 2:
        raise InvalidArgumentError(f"random tree needs n >= 2, got {n}")
    rng = random.Random(rng_seed)
    code = [rng.randrange(n) for _ in range(n - 2)]
    g = nx.from_prufer_sequence(code) if code else nx.path_graph(2)
    return TreeGraph.from_edges(n, g.edges())


# -- edge-list format ----------------------------------------------------------

_EDGE_LINE = re.compile(r"^(\d+) (\d+)$")


def from_edge_list(text: str) -> TreeGraph:
    """Parse the one-edge-per-line text format.

    ``#`` comment lines and blank lines are skipped. Vertex IDs must cover
    ``0..n-1`` exactly.
    """
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r")
        if not line or line.startswith("#"):
            continue
        match = _EDGE_LINE.match(line)
        if match is None:
            raise EdgeListFormatError(f"expected '<int> <int>', got {line!r}", lineno)
        edges.append((int(match.group(1)), int(match.group(2))))
    if not edges:
        raise EdgeListFormatError("no edges")
    ids = {x for e in edges for x in e}
    n = max(ids) + 1
    if len(ids) != n:
        missing = sorted(set(range(n)) - ids)[:5]
        raise EdgeListFormatError(f"vertex ids do not form 0..{n - 1}; missing {missing}")
    return TreeGraph.from_edges(n, edges)


def to_edge_list(tree: TreeGraph) -> str:
    return "".join(f"{u} {v}\n" for u, v in tree.edges())


# -- distances -----------------------------------------------------------------

def bfs_distances(tree: TreeGraph, src: int) -> list[int]:
    dist = [-1] * tree.n
    dist[src] = 0
    queue = deque([src])
    adj = tree.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = du
                queue.append(v)
    return dist


def _csr(tree: TreeGraph) -> csr_matrix:
    n = tree.n
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum([len(nb) for nb in tree.adjacency], out=indptr[1:])
    indices = np.fromiter((v for nb in tree.adjacency for v in nb), dtype=np.int32, count=int(indptr[-1]))
    data = np.ones(len(indices), dtype=np.float64)
    return csr_matrix((data, indices, indptr), shape=(n, n))


def wiener_bfs(tree: TreeGraph, chunk: int | None = None) -> int:
    """Sum of distances over unordered pairs, from unweighted searches out of every source.

    Sources are processed in blocks so memory stays at ``chunk * n`` floats.
    Block totals are accumulated as Python ints; the result does not depend
    on the block size.
    """
    n = tree.n
    if n < 2:
        return 0
    graph = _csr(tree)
    if chunk is None:
        chunk = max(1, min(n, 4_000_000 // n))
    # a block sum is at most chunk * n * (n - 1); keep it inside int64
    while chunk > 1 and chunk * n * (n - 1) >= 2**62:
        chunk //= 2
    total = 0
    for start in range(0, n, chunk):
        rows = np.arange(start, min(n, start + chunk))
        d = shortest_path(graph, directed=False, unweighted=True, indices=rows)
        if not np.isfinite(d).all():
            raise NotATreeError("connected", "unreachable vertex during BFS")
        total += int(d.astype(np.int64).sum())
    return total // 2


def _rooted_order(tree: TreeGraph, root: int = 0) -> tuple[list[int], list[int]]:
    """Preorder from ``root`` and the parent of every vertex (root's parent is -1)."""
    parent = [-1] * tree.n
    order = [root]
    seen = bytearray(tree.n)
    seen[root] = 1
    adj = tree.adjacency
    i = 0
    while i < len(order):
        u = order[i]
        i += 1
        for v in adj[u]:
            if not seen[v]:
                seen[v] = 1
                parent[v] = u
                order.append(v)
    return order, parent


def subtree_sizes(tree: TreeGraph, root: int = 0) -> tuple[list[int], list[int], list[int]]:
    """Return ``(order, parent, size)`` for the tree rooted at ``root``."""
    order, parent = _rooted_order(tree, root)
    size = [1] * tree.n
    for v in reversed(order):
        p = parent[v]
        if p >= 0:
            size[p] += size[v]
    return order, parent, size


def wiener_subtree(tree: TreeGraph) -> int:
    """Edge-contribution Wiener index: sum of ``s * (n - s)`` over all edges."""
    n = tree.n
    order, parent, size = subtree_sizes(tree)
    return sum(size[v] * (n - size[v]) for v in order if parent[v] >= 0)


def diameter(tree: TreeGraph) -> int:
    """Longest geodesic, by two sweeps: farthest from 0, then farthest from that."""
    d0 = bfs_distances(tree, 0)
    far = max(range(tree.n), key=d0.__getitem__)
    return max(bfs_distances(tree, far))


def degree_histogram(tree: TreeGraph) -> dict[int, int]:
    return dict(sorted(Counter(len(nb) for nb in tree.adjacency).items()))
