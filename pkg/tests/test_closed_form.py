import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import all_pairs, class_pair_sum
from treewiener.closed_form import (
    WienerState,
    exact_div,
    iterate_closed_form,
    starfractal_cases,
    starfractal_wiener,
    subdivision_cases,
    subdivision_wiener,
    subdivision_wiener_t,
    vertexop_cases,
    vertexop_wiener,
)
from treewiener.errors import IntegrityError, InvalidArgumentError
from treewiener.growth_ops import GrowthOp, first_order_subdivision, iterate, star_fractal, vertex_op
from treewiener.tree_core import VertexClass, new_single_edge, new_star, random_tree, wiener_bfs, wiener_subtree


def state_of(tree):
    return WienerState(wiener_subtree(tree), tree.n)


# frozen values below were computed with BFS on the grown graphs

def test_subdivision_examples():
    assert subdivision_wiener(WienerState(1, 2)) == WienerState(4, 3)
    assert subdivision_wiener(WienerState(4, 3)) == WienerState(20, 5)
    assert subdivision_wiener(WienerState(9, 4)).s == 48


def test_subdivision_t_examples():
    assert subdivision_wiener_t(WienerState(1, 2), 1).s == 4
    assert subdivision_wiener_t(WienerState(1, 2), 2).s == 20
    st_ = WienerState(9, 4)
    assert subdivision_wiener_t(st_, 0) == st_


def test_vertexop_examples():
    assert vertexop_wiener(WienerState(1, 2), 1).s == 10
    assert vertexop_wiener(WienerState(1, 2), 2).s == 29
    # BFS on vertex_op(P3, 1) gives 31
    assert vertexop_wiener(WienerState(4, 3), 1) == WienerState(31, 6)


def test_starfractal_examples():
    assert starfractal_wiener(WienerState(1, 2), 1).s == 9
    assert starfractal_wiener(WienerState(1, 2), 2).s == 16
    assert starfractal_wiener(WienerState(9, 4), 1) == WienerState(117, 10)


def test_iterate_examples():
    s0 = WienerState(1, 2)
    for op in (GrowthOp.subdivision(), GrowthOp.star(3), GrowthOp.vertex(2)):
        assert iterate_closed_form(s0, op, 0) == s0
    assert iterate_closed_form(s0, GrowthOp.vertex(1), 2).s == 68
    assert iterate_closed_form(s0, GrowthOp.star(1), 2).s == 117


def test_bad_inputs():
    with pytest.raises(InvalidArgumentError):
        WienerState(0, 1)
    with pytest.raises(InvalidArgumentError):
        WienerState(2, 3)  # below the star value
    with pytest.raises(InvalidArgumentError):
        WienerState(21, 5)  # above the path value
    with pytest.raises(InvalidArgumentError):
        vertexop_wiener(WienerState(1, 2), 0)
    with pytest.raises(InvalidArgumentError):
        starfractal_wiener(WienerState(1, 2), 0)
    with pytest.raises(IntegrityError):
        exact_div(7, 3)


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 120), st.integers(0, 2**63 - 1), st.integers(1, 5), st.integers(1, 3))
def test_closed_form_matches_graph(n, seed, m, t):
    tree = random_tree(n, seed)
    s0 = state_of(tree)
    for op in (GrowthOp.subdivision(), GrowthOp.vertex(m), GrowthOp.star(m)):
        grown = iterate(tree, op, t)
        if grown.n > 20_000:
            continue
        got = iterate_closed_form(s0, op, t)
        assert got.n == grown.n
        assert got.s == wiener_subtree(grown)


def test_closed_form_matches_bfs_oracle():
    for seed in range(30):
        tree = random_tree(2 + seed * 5, seed)
        s0 = state_of(tree)
        m = 1 + seed % 5
        assert subdivision_wiener(s0).s == wiener_bfs(first_order_subdivision(tree))
        assert vertexop_wiener(s0, m).s == wiener_bfs(vertex_op(tree, m))
        assert starfractal_wiener(s0, m).s == wiener_bfs(star_fractal(tree, m))


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 10**6), st.integers(0, 6), st.data())
def test_corollary_equals_repeated_step(n, t, data):
    # any admissible (s, n) pair, not only ones realised by small trees
    s = data.draw(st.integers((n - 1) ** 2, n * (n - 1) * (n + 1) // 6))
    s0 = WienerState(s, n)
    stepped = s0
    for _ in range(t):
        stepped = subdivision_wiener(stepped)
    assert subdivision_wiener_t(s0, t) == stepped


def test_corollary_vs_graph_small_seeds():
    for seed in range(40):
        tree = random_tree(2 + seed % 49, seed)
        for t in range(4):
            assert subdivision_wiener_t(state_of(tree), t).s == wiener_subtree(
                iterate(tree, GrowthOp.subdivision(), t)
            )


def test_long_arithmetic_sweep_is_exact():
    s = iterate_closed_form(WienerState(1, 2), GrowthOp.star(3), 40)
    assert s.n == 5**40 + 1
    assert subdivision_wiener_t(WienerState(9, 4), 40).n == 3 * 2**40 + 1


# -- case sums against class-restricted distance sums ---------------------------


def _classes(grown, parent_n):
    old = list(range(parent_n))
    new = range(parent_n, grown.n)
    mids = [v for v in new if grown.vclass[v] is VertexClass.SUBDIVISION_INTERNAL]
    leaves = [v for v in new if grown.vclass[v] in (VertexClass.STAR_LEAF, VertexClass.VERTEX_OP_LEAF)]
    return old, mids, leaves


@pytest.mark.parametrize("seed", range(12))
def test_subdivision_case_sums(seed):
    tree = random_tree(3 + seed * 3, seed)
    grown = first_order_subdivision(tree)
    d = all_pairs(grown)
    old, mids, _ = _classes(grown, tree.n)
    cases = subdivision_cases(state_of(tree))
    assert cases["original-original"] == class_pair_sum(d, old, old)
    assert cases["midpoint-midpoint"] == class_pair_sum(d, mids, mids)
    assert cases["original-midpoint"] == class_pair_sum(d, old, mids)


@pytest.mark.parametrize("seed", range(12))
@pytest.mark.parametrize("m", [1, 2, 4])
def test_vertexop_case_sums(seed, m):
    tree = random_tree(2 + seed * 2, seed)
    grown = vertex_op(tree, m)
    d = all_pairs(grown)
    old, _, leaves = _classes(grown, tree.n)
    owner = {leaf: grown.adjacency[leaf][0] for leaf in leaves}
    same = sum(d[a][b] for i, a in enumerate(leaves) for b in leaves[i + 1:] if owner[a] == owner[b])
    diff = sum(d[a][b] for i, a in enumerate(leaves) for b in leaves[i + 1:] if owner[a] != owner[b])
    cases = vertexop_cases(state_of(tree), m)
    assert cases["original-original"] == class_pair_sum(d, old, old)
    assert cases["leaf-leaf same star"] == same
    assert cases["leaf-leaf different stars"] == diff
    assert cases["leaf-original"] == class_pair_sum(d, leaves, old)


@pytest.mark.parametrize("seed", range(12))
@pytest.mark.parametrize("m", [1, 2, 3])
def test_starfractal_case_sums(seed, m):
    tree = random_tree(2 + seed * 2, seed)
    grown = star_fractal(tree, m)
    d = all_pairs(grown)
    old, mids, leaves = _classes(grown, tree.n)
    centre = {leaf: next(w for w in grown.adjacency[leaf]) for leaf in leaves}
    same = sum(d[a][b] for i, a in enumerate(leaves) for b in leaves[i + 1:] if centre[a] == centre[b])
    diff = sum(d[a][b] for i, a in enumerate(leaves) for b in leaves[i + 1:] if centre[a] != centre[b])
    cases = starfractal_cases(state_of(tree), m)
    assert cases["original-original"] == class_pair_sum(d, old, old)
    assert cases["leaf-leaf same star"] == same
    assert cases["midpoint-midpoint"] == class_pair_sum(d, mids, mids)
    assert cases["original-midpoint"] == class_pair_sum(d, old, mids)
    assert cases["leaf-leaf different stars"] == diff
    assert cases["original-leaf"] == class_pair_sum(d, old, leaves)
    assert cases["leaf-midpoint"] == class_pair_sum(d, leaves, mids)


def test_star_seed_example_via_graph():
    grown = star_fractal(new_star(3), 1)
    assert grown.n == 10
    assert wiener_bfs(grown) == 117
    assert wiener_subtree(first_order_subdivision(new_single_edge())) == 4
