"""The three tree growth operations.

New vertex IDs are appended after the existing ones:

* subdivision midpoints follow the parent's canonical edge order;
* a star-fractal midpoint is immediately followed by its ``m`` leaves;
* vertex-operation leaves are grouped by parent vertex, ascending.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import IntegrityError, InvalidArgumentError
from .tree_core import TreeGraph, VertexClass

__all__ = [
    "OpKind",
    "GrowthOp",
    "first_order_subdivision",
    "star_fractal",
    "star_fractal_by_composition",
    "vertex_op",
    "apply",
    "iterate",
    "expected_order",
    "expected_size",
]


class OpKind(enum.Enum):
    SUBDIVISION = "subdivision"
    STAR_FRACTAL = "star"
    VERTEX_OP = "vertex"


@dataclass(frozen=True)
class GrowthOp:
    kind: OpKind
    m: int = 1

    def __post_init__(self):
        if self.kind is not OpKind.SUBDIVISION and self.m < 1:
            raise InvalidArgumentError(f"{self.kind.value} operation needs m >= 1, got {self.m}")

    @classmethod
    def subdivision(cls) -> "GrowthOp":
        return cls(OpKind.SUBDIVISION)

    @classmethod
    def star(cls, m: int) -> "GrowthOp":
        return cls(OpKind.STAR_FRACTAL, m)

    @classmethod
    def vertex(cls, m: int) -> "GrowthOp":
        return cls(OpKind.VERTEX_OP, m)

    def __str__(self) -> str:
        if self.kind is OpKind.SUBDIVISION:
            return "subdivision"
        return f"{self.kind.value}(m={self.m})"


def _check_m(m: int) -> None:
    if m < 1:
        raise InvalidArgumentError(f"m must be >= 1, got {m}")


def _grown(tree, n, edges, new_birth, new_class) -> TreeGraph:
    return TreeGraph.from_edges(
        n,
        edges,
        birth=tree.birth + tuple(new_birth),
        vclass=tree.vclass + tuple(new_class),
        generation=tree.generation + 1,
        check=False,
    )


def first_order_subdivision(tree: TreeGraph) -> TreeGraph:
    """Replace every edge ``uv`` with a path ``u w v`` through a new vertex ``w``."""
    step = tree.generation + 1
    n = tree.n
    edges = []
    for w, (u, v) in enumerate(tree.edges(), start=n):
        edges.append((u, w))
        edges.append((w, v))
    k = len(edges) // 2
    return _grown(tree, n + k, edges, [step] * k, [VertexClass.SUBDIVISION_INTERNAL] * k)


def star_fractal(tree: TreeGraph, m: int, verify: bool = False) -> TreeGraph:
    """Subdivide every edge and hang ``m`` new leaves on each midpoint.

    With ``verify=True`` the result is also rebuilt as subdivision followed by
    leaf attachment on the midpoints only, and the two edge sets are compared
    under the obvious relabelling.
    """
    _check_m(m)
    step = tree.generation + 1
    nxt = tree.n
    edges = []
    births = []
    classes = []
    for u, v in tree.edges():
        w = nxt
        edges.append((u, w))
        edges.append((w, v))
        edges.extend((w, w + 1 + i) for i in range(m))
        births.extend([step] * (m + 1))
        classes.append(VertexClass.SUBDIVISION_INTERNAL)
        classes.extend([VertexClass.STAR_LEAF] * m)
        nxt += m + 1
    out = _grown(tree, nxt, edges, births, classes)
    if verify:
        _verify_star_composition(tree, m, out)
    return out


def star_fractal_by_composition(tree: TreeGraph, m: int) -> TreeGraph:
    """Same shape as :func:`star_fractal` but built as subdivision, then ``m``
    pendant leaves on each inserted midpoint. IDs follow the subdivision
    layout: midpoints first, then all leaves."""
    _check_m(m)
    sub = first_order_subdivision(tree)
    mids = sub.vertices_of(VertexClass.SUBDIVISION_INTERNAL)
    mids = [w for w in mids if sub.birth[w] == sub.generation]
    edges = sub.edges()
    nxt = sub.n
    for w in mids:
        edges.extend((w, nxt + i) for i in range(m))
        nxt += m
    k = len(mids) * m
    return TreeGraph.from_edges(
        nxt,
        edges,
        birth=sub.birth + (sub.generation,) * k,
        vclass=sub.vclass + (VertexClass.STAR_LEAF,) * k,
        generation=sub.generation,
        check=False,
    )


def _verify_star_composition(tree: TreeGraph, m: int, direct: TreeGraph) -> None:
    composed = star_fractal_by_composition(tree, m)
    n, e = tree.n, tree.n - 1
    relabel = list(range(n))
    for i in range(e):
        relabel.append(n + i * (m + 1))
    for i in range(e):
        for j in range(m):
            relabel.append(n + i * (m + 1) + 1 + j)
    mapped = sorted((min(relabel[u], relabel[v]), max(relabel[u], relabel[v])) for u, v in composed.edges())
    if mapped != direct.edges():
        raise IntegrityError("star-fractal differs from subdivision + midpoint leaves")
    for v in range(composed.n):
        if composed.vclass[v] is not direct.vclass[relabel[v]]:
            raise IntegrityError(f"vertex class mismatch at composed vertex {v}")


def vertex_op(tree: TreeGraph, m: int) -> TreeGraph:
    """Attach ``m`` new pendant vertices to every existing vertex."""
    _check_m(m)
    step = tree.generation + 1
    n = tree.n
    edges = tree.edges()
    nxt = n
    for u in range(n):
        edges.extend((u, nxt + i) for i in range(m))
        nxt += m
    k = n * m
    return _grown(tree, nxt, edges, [step] * k, [VertexClass.VERTEX_OP_LEAF] * k)


def apply(tree: TreeGraph, op: GrowthOp) -> TreeGraph:
    if op.kind is OpKind.SUBDIVISION:
        return first_order_subdivision(tree)
    if op.kind is OpKind.STAR_FRACTAL:
        return star_fractal(tree, op.m)
    return vertex_op(tree, op.m)


def iterate(tree: TreeGraph, op: GrowthOp, t: int) -> TreeGraph:
    if t < 0:
        raise InvalidArgumentError(f"t must be >= 0, got {t}")
    for _ in range(t):
        tree = apply(tree, op)
    return tree


def expected_order(n: int, op: GrowthOp, t: int) -> int:
    """Order after ``t`` steps from a seed tree with ``n`` vertices."""
    e = n - 1
    if op.kind is OpKind.SUBDIVISION:
        return n + (2**t - 1) * e
    if op.kind is OpKind.STAR_FRACTAL:
        return n + ((2 + op.m) ** t - 1) * e
    return (op.m + 1) ** t * n


def expected_size(n: int, op: GrowthOp, t: int) -> int:
    e = n - 1
    if op.kind is OpKind.SUBDIVISION:
        return 2**t * e
    if op.kind is OpKind.STAR_FRACTAL:
        return (2 + op.m) ** t * e
    return ((op.m + 1) ** t - 1) * n + e
