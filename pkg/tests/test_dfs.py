import pytest
from hypothesis import given

from domforest.dfs import ArcClass, classify_arc, is_ancestor, run_dfs

from strategies import flow_graphs, named


def parents(info, n):
    return {v: info.parent[v] for v in range(2, n + 1)}


def test_chain():
    info = run_dfs(named("chain"))
    assert parents(info, 3) == {2: 1, 3: 2}
    assert info.reverse_preorder == [3, 2, 1]


def test_diamond_follows_adjacency_order():
    info = run_dfs(named("diamond"))
    assert info.preorder == [1, 2, 4, 3]
    assert parents(info, 4) == {2: 1, 3: 1, 4: 2}
    assert classify_arc(info, (3, 4)) is ArcClass.CROSS
    assert not is_ancestor(info, 2, 3)
    assert all(is_ancestor(info, 1, v) and is_ancestor(info, v, v) for v in range(1, 5))


def test_triangle():
    info = run_dfs(named("triangle"))
    assert parents(info, 3) == {2: 1, 3: 2}
    assert classify_arc(info, (3, 2)) is ArcClass.BACK
    assert classify_arc(info, (1, 3)) is ArcClass.FORWARD
    assert classify_arc(info, (1, 2)) is ArcClass.TREE


def test_loop_arc_has_no_class():
    with pytest.raises(ValueError):
        classify_arc(run_dfs(named("chain")), (2, 2))


def test_deep_chain_does_not_recurse():
    from domforest.graph import FlowGraph

    n = 50_000
    info = run_dfs(FlowGraph.from_arcs(n, 1, [(v, v + 1) for v in range(1, n)]))
    assert info.postorder[0] == n


def walk_ancestor(parent, u, v):
    while v:
        if v == u:
            return True
        v = parent[v]
    return False


@given(flow_graphs())
def test_classes_agree_with_ancestor_walks(g):
    info = run_dfs(g)
    par = info.parent
    for x, y in g.arcs:
        c = classify_arc(info, (x, y))
        if par[y] == x:
            expected = ArcClass.TREE
        elif walk_ancestor(par, x, y):
            expected = ArcClass.FORWARD
        elif walk_ancestor(par, y, x):
            expected = ArcClass.BACK
        else:
            expected = ArcClass.CROSS
        assert c is expected
        assert (c is ArcClass.BACK) == (info.post[x] < info.post[y])


@given(flow_graphs())
def test_numberings(g):
    info = run_dfs(g)
    n = g.n
    assert sorted(info.pre[1:]) == list(range(1, n + 1))
    assert sorted(info.post[1:]) == list(range(1, n + 1))
    for u in range(1, n + 1):
        for v in range(1, n + 1):
            assert is_ancestor(info, u, v) == walk_ancestor(info.parent, u, v)
    for order in (info.reverse_preorder, info.postorder):
        position = {v: i for i, v in enumerate(order)}
        assert all(position[v] < position[info.parent[v]] for v in range(1, n + 1) if v != g.s)
