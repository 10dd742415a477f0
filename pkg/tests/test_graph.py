import pytest
from hypothesis import given

from domforest.graph import (
    DegenerateGraphError,
    FlowGraph,
    GraphFormatError,
    format_idom,
    normalize,
    parse,
    serialize,
    validate,
)

from strategies import flow_graphs, named


def test_parse_chain():
    g = parse("p 3 2 1\na 1 2\na 2 3\n")
    assert (g.n, g.s) == (3, 1)
    assert g.arcs == ((1, 2), (2, 3))


def test_parse_minimal_with_comments_and_crlf():
    g = parse("# smallest\r\np 2 1 1\r\n\r\na 1 2\r\n")
    assert (g.n, g.m) == (2, 1)


def test_parse_bytes():
    assert parse(b"p 2 1 1\na 1 2\n").arcs == ((1, 2),)


@pytest.mark.parametrize(
    "text, fragment, line",
    [
        ("p 2 1 1\na 1 3\n", "out of range", 2),
        ("p 2 2 1\na 1 2\n", "declares 2 arcs", None),
        ("p 2 1 1\na 1 2\na 2 1\n", "more arc lines", 3),
        ("q 2 1 1\n", "expected header", 1),
        ("p 2 1 1\na 1 x\n", "decimal integer", 2),
        ("p 2 1 1\nb 1 2\n", "expected arc line", 2),
        ("# nothing\n", "missing header", None),
        ("p 2 1 3\na 1 2\n", "start vertex", 1),
    ],
)
def test_parse_errors(text, fragment, line):
    with pytest.raises(GraphFormatError) as err:
        parse(text)
    assert fragment in str(err.value)
    assert err.value.line == line


def test_validate_clean_diamond():
    assert validate(named("diamond")) == []


def test_validate_reports_problems():
    assert "arc into start vertex: (2, 1)" in validate(FlowGraph.from_arcs(2, 1, [(1, 2), (2, 1)]))
    assert validate(FlowGraph.from_arcs(3, 1, [(1, 2)])) == ["vertex 3 unreachable"]
    probs = validate(FlowGraph.from_arcs(2, 1, [(1, 2), (1, 2), (2, 2)]))
    assert any("duplicate" in p for p in probs) and any("loop arc" in p for p in probs)


def test_normalize_rules():
    g, _ = normalize(FlowGraph.from_arcs(3, 1, [(1, 2), (2, 3), (3, 1)]))
    assert g.arcs == ((1, 2), (2, 3))
    g, _ = normalize(FlowGraph.from_arcs(2, 1, [(1, 2), (1, 2)]))
    assert g.arcs == ((1, 2),)
    g, mapping = normalize(FlowGraph.from_arcs(5, 1, [(1, 2), (2, 3), (3, 4), (5, 4)]))
    assert g.n == 4 and mapping == {1: 1, 2: 2, 3: 3, 4: 4}
    g, mapping = normalize(FlowGraph.from_arcs(4, 2, [(2, 4), (1, 2)]))
    assert (g.n, g.s, g.arcs) == (2, 1, ((1, 2),))
    assert mapping == {2: 1, 4: 2}


def test_normalize_degenerate():
    with pytest.raises(DegenerateGraphError):
        normalize(FlowGraph.from_arcs(3, 1, [(2, 3)]))


def test_format_idom():
    assert format_idom({2: 1, 3: 1, 4: 1}, 4, 1) == "1 0\n2 1\n3 1\n4 1\n"


@given(flow_graphs())
def test_round_trip(g):
    assert parse(serialize(g, ["a comment"])) == g


@given(flow_graphs())
def test_normalize_idempotent_and_valid(g):
    once, _ = normalize(g)
    assert normalize(once)[0] == once
    assert validate(once) == []
