import pytest

from hypermatroid import EmptyEdge, make_hypergraph
from hypermatroid.io import (
    ParseError,
    format_json,
    format_text,
    input_digest,
    parse_hypergraph,
)


def test_parse_text_path():
    h = parse_hypergraph("a b\nb c\n")
    assert h.ground.labels == ("a", "b", "c")
    assert h.edge_labels() == [["a", "b"], ["b", "c"]]


def test_parse_text_with_header_and_comment():
    text = "vertices: a b c d\n# complete 3-regular\na b c\na b d\na c d\nb c d\n"
    h = parse_hypergraph(text)
    assert h.ground.labels == ("a", "b", "c", "d")
    assert h.n_edges == 4


def test_parse_text_header_declares_isolated():
    h = parse_hypergraph("vertices: a b c\na b\n")
    assert h.ground.labels == ("a", "b", "c")
    assert h.n_edges == 1


def test_parse_json():
    h = parse_hypergraph('{"vertices": ["a", "b"], "edges": [["a", "b"]]}')
    assert h.n_edges == 1
    assert h.ground.labels == ("a", "b")


def test_parse_json_infers_vertices():
    h = parse_hypergraph('{"edges": [["b", "a"]]}')
    assert h.ground.labels == ("a", "b")


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_hypergraph('{"edges": "nope"}')
    with pytest.raises(ParseError):
        parse_hypergraph("{bad json")
    with pytest.raises(ParseError):
        parse_hypergraph("a b\nvertices: a b\n")
    with pytest.raises(ParseError):
        parse_hypergraph("vertices: a\nvertices: b\n")
    with pytest.raises(EmptyEdge):
        parse_hypergraph('{"edges": [[]]}')


def test_round_trip_both_formats():
    h = make_hypergraph(["d", "b", "a"], [["d", "b"], ["a", "b"]])
    assert parse_hypergraph(format_text(h)) == h
    assert parse_hypergraph(format_json(h)) == h


def test_round_trip_isolated_vertices():
    h = make_hypergraph(["a", "b", "z"], [["a", "b"]])
    assert parse_hypergraph(format_text(h)) == h
    assert parse_hypergraph(format_json(h)) == h


def test_digest_deterministic_and_label_sensitive():
    h1 = make_hypergraph(["a", "b"], [["a", "b"]])
    h2 = make_hypergraph(["a", "b"], [["a", "b"]])
    h3 = make_hypergraph(["a", "c"], [["a", "c"]])
    assert input_digest(h1) == input_digest(h2)
    assert input_digest(h1) != input_digest(h3)
