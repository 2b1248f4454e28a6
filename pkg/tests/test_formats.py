import json

import pytest
from hypothesis import given

from src.core.exceptions import ContractViolation, MalformedInputError
from src.core.extension import solve
from src.core.graph import build_graph
from src.core.incidence import PaletteOverflow, verify_coloring
from src.toolkit.formats import (
    emit_coloring,
    emit_graph,
    parse_coloring,
    parse_edge_list,
    read_coloring,
    read_graph,
)
from src.toolkit.generators import GENERATOR_ID

from .strategies import outerplanar_graphs


def test_parse_edge_list():
    """Test parsing the basic edge list forms."""
    assert parse_edge_list("0 1\n1 2\n") == build_graph([(0, 1), (1, 2)])
    assert parse_edge_list("# comment\n0 1\n") == build_graph([(0, 1)])
    assert parse_edge_list("  0\t1  \n\n") == build_graph([(0, 1)])


def test_parse_vertex_header():
    g = parse_edge_list("v 4\n0 1\n")
    assert g.vertices == (0, 1, 2, 3)
    assert g.edge_count == 1


@pytest.mark.parametrize("text,line", [
    ("0 0\n", 1),
    ("0 1\nfoo\n", 2),
    ("# header\n0 1 2\n", 2),
    ("0 -1\n", 1),
    ("v x\n", 1),
    ("0 ²\n", 1),
    ("v ³\n0 1\n", 1),
    ("0 1\n١ 2\n", 2),
])
def test_parse_errors_carry_line_number(text, line):
    with pytest.raises(MalformedInputError) as excinfo:
        parse_edge_list(text)
    assert excinfo.value.line_number == line
    assert str(excinfo.value).startswith(f"line {line}:")


def test_emit_graph_keeps_isolated_vertices():
    g = build_graph([(0, 1)], vertices=[2])
    assert emit_graph(g) == "v 3\n0 1\n"
    assert parse_edge_list(emit_graph(g)) == g

    # Without isolated vertices the ids need not be dense
    assert emit_graph(build_graph([(0, 5)])) == "0 5\n"


def test_emit_graph_refuses_sparse_ids_with_isolated_vertices():
    with pytest.raises(ContractViolation):
        emit_graph(build_graph([(0, 1)], vertices=[3]))


@given(outerplanar_graphs(max_n=60))
def test_graph_round_trip(g):
    assert parse_edge_list(emit_graph(g)) == g


def test_read_graph(tmp_path):
    path = tmp_path / "graph.txt"
    path.write_text("0 1\n1 2\n2 0\n")
    assert read_graph(path).edge_count == 3


def test_read_rejects_non_utf8_files(tmp_path):
    path = tmp_path / "graph.txt"
    path.write_bytes(b"0 1\n\xff\xfe 2\n")
    with pytest.raises(MalformedInputError, match="not UTF-8"):
        read_graph(path)
    with pytest.raises(MalformedInputError, match="not UTF-8"):
        read_coloring(path)


def test_emit_coloring_shape(triangle):
    k, c = solve(triangle)
    document = json.loads(emit_coloring(triangle, k, c, seed=3, generator=GENERATOR_ID))
    assert document["k"] == k
    assert document["l"] == 2
    assert document["meta"] == {"delta": 2, "seed": 3, "generator": GENERATOR_ID}
    assert len(document["colors"]) == 6
    assert document["colors"][0] == {"tail": 0, "head": 1, "color": c[(0, 1)]}


def test_emit_coloring_without_metadata(triangle):
    k, c = solve(triangle)
    document = json.loads(emit_coloring(triangle, k, c))
    assert document["meta"]["seed"] is None


@given(outerplanar_graphs(max_n=40))
def test_coloring_round_trip(g):
    """Test that emitted colorings load back and verify as-is."""
    k, c = solve(g)
    text = emit_coloring(g, k, c)
    loaded = parse_coloring(text)
    assert loaded == c
    assert verify_coloring(g, loaded, require_total=True).is_valid
    assert emit_coloring(g, k, loaded) == text


def test_parse_coloring_keeps_out_of_palette_colors(k2):
    text = json.dumps({"k": 3, "l": 2, "colors": [{"tail": 0, "head": 1, "color": 5},
                                                   {"tail": 1, "head": 0, "color": 0}]})
    c = parse_coloring(text)
    report = verify_coloring(k2, c)
    assert [type(v) for v in report.violations] == [PaletteOverflow]


@pytest.mark.parametrize("text", [
    "not json",
    json.dumps({"colors": []}),
    json.dumps({"k": 3, "colors": [{"tail": 0, "head": 1}]}),
    json.dumps({"k": 3, "colors": [{"tail": 0, "head": 1, "color": 0}, {"tail": 0, "head": 1, "color": 1}]}),
])
def test_parse_coloring_errors(text):
    with pytest.raises(MalformedInputError):
        parse_coloring(text)
