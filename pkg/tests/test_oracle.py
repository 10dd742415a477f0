import networkx as nx
import pytest
from hypothesis import given

from domforest.oracle import brute_dominators, brute_idom, trees_equal

from strategies import flow_graphs, named


def test_dominator_sets():
    assert brute_dominators(named("diamond"))[4] == {1, 4}
    assert brute_dominators(named("chain"))[3] == {1, 2, 3}
    assert brute_dominators(named("simple_loop"))[4] == {1, 2, 3, 4}
    assert brute_dominators(named("diamond"))[1] == {1}


def test_idoms():
    assert brute_idom(named("diamond")) == {2: 1, 3: 1, 4: 1}
    assert brute_idom(named("chain")) == {2: 1, 3: 2}
    assert brute_idom(named("triangle")) == {2: 1, 3: 1}


def test_trees_equal():
    t = {2: 1, 3: 1}
    assert trees_equal(t, dict(t)) == (True, None)
    assert trees_equal(t, {2: 1, 3: 2}) == (False, 3)
    with pytest.raises(ValueError):
        trees_equal(t, {2: 1})


@given(flow_graphs())
def test_ancestor_chain_is_dominator_set(g):
    dom = brute_dominators(g)
    idom = brute_idom(g)
    for v in range(1, g.n + 1):
        chain = {v}
        w = v
        while w != g.s:
            w = idom[w]
            chain.add(w)
        assert chain == dom[v]


@given(flow_graphs(max_n=12))
def test_agrees_with_networkx(g):
    # a second, unrelated implementation (iterative data-flow)
    dg = nx.DiGraph()
    dg.add_nodes_from(range(1, g.n + 1))
    dg.add_edges_from(g.arcs)
    theirs = nx.immediate_dominators(dg, g.s)
    theirs.pop(g.s)
    assert brute_idom(g) == theirs
