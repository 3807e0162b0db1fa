import pytest

from sinkfvs import ParseError, from_edge_list, gen_erdos_renyi, parse_graph, write_graph
from sinkfvs.graphio import parse_vertex_set, write_vertex_set


def test_parse_cycle():
    g = parse_graph("3 3\n0 1\n1 2\n2 0\n")
    assert g == from_edge_list(3, [(0, 1), (1, 2), (2, 0)])


def test_parse_comment_and_single_vertex():
    g = parse_graph("# comment\n1 0\n")
    assert g.n == 1 and g.num_arcs == 0


def test_parse_inline_comment_and_blank_lines():
    g = parse_graph("2 1  # header\n\n0 1 # arc\n")
    assert g.arcs() == [(0, 1)]


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("2 1\n0 5\n", 2, "out of range"),
        ("2 2\n0 1\n0 1\n", 3, "duplicate"),
        ("2 2\n0 1\n", 2, "announces 2"),
        ("2 1\n0 x\n", 2, "not an integer"),
        ("2 1\n0 1 1\n", 2, "expected 2"),
        ("2\n", 1, "expected 2"),
    ],
)
def test_parse_errors_carry_line(text, line, fragment):
    with pytest.raises(ParseError, match=fragment) as info:
        parse_graph(text)
    assert info.value.line == line


def test_parse_empty_text():
    with pytest.raises(ParseError):
        parse_graph("# nothing\n")


def test_write_examples():
    assert write_graph(from_edge_list(3, [(2, 0), (0, 1), (1, 2)])) == "3 3\n0 1\n1 2\n2 0\n"
    assert write_graph(from_edge_list(0, [])) == "0 0\n"


@pytest.mark.parametrize("seed", range(5))
def test_round_trip(seed):
    g = gen_erdos_renyi(30, 0.1, seed)
    assert parse_graph(write_graph(g)) == g
    text = write_graph(g)
    assert write_graph(parse_graph(text)) == text


def test_vertex_set_round_trip():
    assert parse_vertex_set(write_vertex_set([4, 1, 9])) == [4, 1, 9]
    assert parse_vertex_set("# fvs\n3\n\n5\n") == [3, 5]
