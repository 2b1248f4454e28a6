import networkx as nx
import pytest
from hypothesis import given, settings

from src.core.exceptions import MalformedInputError, VertexNotFoundError
from src.core.graph import (
    Graph,
    build_graph,
    connected_components,
    cut_vertices,
    cut_vertices_by_removal,
    is_connected,
    reachable_from,
    remove_vertex,
    subgraph,
)

from .strategies import outerplanar_graphs, small_graphs, to_networkx


def test_build_graph_path():
    """Test building a path from its edges."""
    g = build_graph([(0, 1), (1, 2)])
    assert g.vertices == (0, 1, 2)
    assert [g.degree(v) for v in g] == [1, 2, 1]
    assert g.edge_count == 2
    assert g.max_degree == 2


def test_build_graph_collapses_duplicates():
    g = build_graph([(0, 1), (0, 1), (1, 0)])
    assert g.edge_count == 1
    assert g.edges() == [(0, 1)]


def test_build_graph_rejects_bad_input():
    """Test that self-loops and negative ids are malformed input."""
    with pytest.raises(MalformedInputError):
        build_graph([(0, 0)])
    with pytest.raises(MalformedInputError):
        build_graph([(-1, 2)])
    with pytest.raises(MalformedInputError):
        build_graph([(0, 1, 2)])


def test_graph_rejects_asymmetric_adjacency():
    with pytest.raises(MalformedInputError):
        Graph({0: [1], 1: []})


def test_isolated_vertices_and_empty_graph():
    g = build_graph([], vertices=[0, 3])
    assert g.vertex_count == 2
    assert g.edge_count == 0
    assert g.max_degree == 0
    assert Graph({}).max_degree == 0


def test_unknown_vertex():
    g = build_graph([(0, 1)])
    with pytest.raises(VertexNotFoundError) as excinfo:
        g.neighbors(5)
    assert excinfo.value.vertex == 5
    with pytest.raises(VertexNotFoundError):
        remove_vertex(g, 5)


def test_remove_vertex(triangle, star, c5):
    """Test vertex removal on small graphs."""
    # Triangle minus a vertex is a single edge
    assert remove_vertex(triangle, 0).edges() == [(1, 2)]

    # Star minus its center is three isolated vertices
    leaves = remove_vertex(star, 0)
    assert leaves.vertices == (1, 2, 3)
    assert leaves.edge_count == 0

    # C5 minus any vertex is P4
    for u in c5:
        path = remove_vertex(c5, u)
        assert path.edge_count == 3
        assert sorted(path.degree(v) for v in path) == [1, 1, 2, 2]
        assert is_connected(path)

    # The input is untouched
    assert c5.edge_count == 5


@given(outerplanar_graphs(max_n=25))
def test_low_degree_set_tracks_removals(g):
    """Test the incrementally kept low-degree set against a recount."""
    current = g
    for u in g.vertices[: g.vertex_count // 2]:
        current = remove_vertex(current, u)
        expected = frozenset(v for v in current if current.degree(v) <= 2)
        assert current.low_degree_vertices == expected
        assert current.edge_count == len(current.edges())


def test_connected_components(k23):
    assert len(connected_components(build_graph([(0, 1), (1, 2)]))) == 1

    two = connected_components(build_graph([(0, 1), (2, 3)]))
    assert len(two) == 2
    assert two.blocks == (frozenset({0, 1}), frozenset({2, 3}))
    assert two.block_of(3) == frozenset({2, 3})

    # K2,3 minus a degree-2 vertex is K2,2
    assert len(connected_components(remove_vertex(k23, 2))) == 1


def test_reachable_from_with_blocked_vertex(bowtie_subdivision):
    assert reachable_from(bowtie_subdivision, 1, blocked=0) == frozenset({1, 2, 3})
    assert reachable_from(bowtie_subdivision, 1) == frozenset(range(7))


def test_cut_vertices(c5):
    """Test articulation points on the textbook cases."""
    assert cut_vertices(build_graph([(0, 1), (1, 2)])) == frozenset({1})
    assert cut_vertices(c5) == frozenset()
    two_triangles = build_graph([(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert cut_vertices(two_triangles) == frozenset({2})


def test_cut_vertices_on_long_path():
    path = build_graph([(i, i + 1) for i in range(5000)])
    assert cut_vertices(path) == frozenset(range(1, 5000))


@settings(max_examples=200)
@given(small_graphs())
def test_cut_vertices_agree(g):
    """Test lowpoint, removal and networkx articulation points against each other."""
    expected = frozenset(nx.articulation_points(to_networkx(g)))
    assert cut_vertices(g) == expected
    assert cut_vertices_by_removal(g) == expected


def test_subgraph(bowtie_subdivision):
    inside = subgraph(remove_vertex(bowtie_subdivision, 0), [1, 2, 3])
    assert inside.edges() == [(1, 2), (1, 3), (2, 3)]
    assert inside.low_degree_vertices == frozenset({1, 2, 3})
    assert subgraph(bowtie_subdivision, [0, 1, 4]).edges() == [(0, 1), (0, 4)]

