import pytest
from hypothesis import given

from domforest.acyclic import CyclicGraphError, check_acyclic, compute_ad
from domforest.dfs import run_dfs
from domforest.graph import FlowGraph
from domforest.oracle import brute_idom

from strategies import flow_graphs, named


def test_examples():
    assert compute_ad(named("chain")) == {2: 1, 3: 2}
    assert compute_ad(named("diamond")) == {2: 1, 3: 1, 4: 1}
    assert compute_ad(named("two_diamonds")) == {2: 1, 3: 1, 4: 1, 5: 4, 6: 4, 7: 4}


def test_check_acyclic():
    for name, expected in [("diamond", True), ("chain", True), ("triangle", False)]:
        g = named(name)
        assert check_acyclic(g, run_dfs(g)) is expected


def test_refuses_back_arc():
    with pytest.raises(CyclicGraphError, match="input contains back arc") as err:
        compute_ad(named("simple_loop"))
    assert err.value.arc == (3, 2)


def test_parallel_arcs_are_fine():
    g = FlowGraph.from_arcs(4, 1, [(1, 2), (1, 3), (2, 4), (3, 4), (2, 4), (1, 2)])
    assert compute_ad(g, check=True) == {2: 1, 3: 1, 4: 1}


@given(flow_graphs(acyclic=True, max_n=12))
def test_matches_oracle(g):
    stats = {}
    info = run_dfs(g)
    idom = compute_ad(g, info, stats=stats, check=True)
    assert idom == brute_idom(g)
    assert stats["unites"] == [g.n - 1]
    assert all(v != d and info.is_ancestor(d, v) for v, d in idom.items())
