import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.spectra.errors import Graph6Error, GraphError
from src.spectra.graph import (
    Graph,
    complement,
    complete_bipartite_graph,
    complete_graph,
    connected_components,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_networkx,
    induced_subgraph,
    join,
    parse_graph6,
    path_graph,
    random_graph,
    relabel,
    to_networkx,
    write_graph6,
)


@pytest.mark.parametrize(
    ("text", "edges"),
    [
        ("Ch", [(0, 1), (1, 2), (2, 3)]),
        ("C~", [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]),
        ("C?", []),
        ("@", []),
        ("A_", [(0, 1)]),
    ],
)
def test_parse_graph6_examples(text: str, edges: list[tuple[int, int]]) -> None:
    g = parse_graph6(text)
    assert sorted(g.edges()) == sorted(edges)


def test_write_graph6_known_graphs() -> None:
    assert write_graph6(path_graph(4)) == "Ch"
    assert write_graph6(complete_graph(4)) == "C~"
    assert write_graph6(empty_graph(4)) == "C?"


def test_parse_graph6_accepts_header_and_whitespace() -> None:
    assert parse_graph6(">>graph6<<Ch\n") == path_graph(4)


def test_long_form_size_field() -> None:
    g = empty_graph(63)
    text = write_graph6(g)
    assert text.startswith("~??~")
    assert parse_graph6(text) == g

    h = cycle_graph(70)
    assert parse_graph6(write_graph6(h)) == h


@pytest.mark.parametrize(
    ("text", "offset"),
    [
        ("", 0),
        ("C", 1),
        ("Ch?", 2),
        ("A`", 1),
        ("C h", 1),
        ("~???", 0),
        ("~~??????", 0),
        (">>graph6<<C", 11),
    ],
)
def test_parse_graph6_errors_report_offset(text: str, offset: int) -> None:
    with pytest.raises(Graph6Error) as exc:
        parse_graph6(text)
    assert exc.value.offset == offset
    assert f"byte {offset}" in str(exc.value)


def test_graph_rejects_bad_adjacency() -> None:
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))
    with pytest.raises(GraphError):
        Graph(2, (0b01, 0))
    with pytest.raises(GraphError):
        Graph(2, (0b100, 0))
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])


def test_accessors() -> None:
    g = Graph.from_edges(5, [(0, 1), (1, 2), (1, 3)])
    assert g.open_neighborhood(1) == {0, 2, 3}
    assert g.closed_neighborhood(1) == {0, 1, 2, 3}
    assert g.degree(1) == 3
    assert g.degrees() == [1, 3, 1, 1, 0]
    assert g.edge_count() == 3
    assert g.isolated_vertices() == [4]
    assert g.adjacency_matrix()[1] == [1, 0, 1, 1, 0]
    a = g.to_numpy()
    assert a.shape == (5, 5)
    assert np.array_equal(a, a.T)


def test_constructors() -> None:
    assert complete_bipartite_graph(3, 3).edge_count() == 9
    assert cycle_graph(5).degrees() == [2] * 5
    with pytest.raises(GraphError):
        cycle_graph(2)


def test_complement_join_union() -> None:
    p4 = path_graph(4)
    co = complement(p4)
    assert sorted(co.edges()) == [(0, 2), (0, 3), (1, 3)]
    assert join(empty_graph(1), empty_graph(1)) == complete_graph(2)
    assert sorted(disjoint_union(complete_graph(2), empty_graph(1)).edges()) == [(0, 1)]
    assert join(empty_graph(2), empty_graph(2)) == complete_bipartite_graph(2, 2)
    assert complement(complement(p4)) == p4


def test_induced_subgraph_keeps_given_order() -> None:
    g = path_graph(4)
    h = induced_subgraph(g, [3, 2, 0])
    assert sorted(h.edges()) == [(0, 1)]
    with pytest.raises(GraphError):
        induced_subgraph(g, [0, 0])
    with pytest.raises(GraphError):
        induced_subgraph(g, [4])


def test_relabel() -> None:
    g = Graph.from_edges(3, [(0, 1)])
    h = relabel(g, [2, 0, 1])
    assert sorted(h.edges()) == [(0, 2)]
    with pytest.raises(GraphError):
        relabel(g, [0, 0, 1])


def test_connected_components() -> None:
    g = Graph.from_edges(6, [(0, 3), (3, 5), (1, 4)])
    assert connected_components(g) == [[0, 3, 5], [1, 4], [2]]


def test_random_graph_is_deterministic() -> None:
    assert random_graph(12, seed=7) == random_graph(12, seed=7)
    assert random_graph(12, seed=7).edge_count() > 0
    assert random_graph(12, seed=7, p=0.0).edge_count() == 0


@given(st.integers(1, 40), st.integers(0, 2**32 - 1))
@settings(max_examples=60, deadline=None)
def test_graph6_roundtrip(n: int, seed: int) -> None:
    g = random_graph(n, seed)
    assert parse_graph6(write_graph6(g)) == g


@given(st.integers(1, 80), st.integers(0, 2**32 - 1))
@settings(max_examples=100, deadline=None)
def test_graph6_agrees_with_networkx(n: int, seed: int) -> None:
    g = random_graph(n, seed)
    G = to_networkx(g)
    text = write_graph6(g)
    assert text == nx.to_graph6_bytes(G, header=False).decode("ascii").strip()
    assert nx.utils.graphs_equal(to_networkx(parse_graph6(text)), G)


def test_networkx_conversion_keeps_node_order() -> None:
    G = nx.Graph([("b", "c")])
    G.add_node("a")
    g = from_networkx(G)
    assert g.n == 3
    assert list(g.edges()) == [(0, 1)]
    assert from_networkx(to_networkx(path_graph(5))) == path_graph(5)


@given(st.integers(1, 12), st.integers(1, 12), st.integers(0, 2**32 - 1))
@settings(max_examples=60, deadline=None)
def test_complement_of_union_is_join_of_complements(p: int, q: int, seed: int) -> None:
    g = random_graph(p, seed)
    h = random_graph(q, seed + 1)
    assert complement(disjoint_union(g, h)) == join(complement(g), complement(h))
    assert complement(join(g, h)) == disjoint_union(complement(g), complement(h))


@given(st.integers(0, 20), st.integers(0, 2**32 - 1))
@settings(max_examples=40, deadline=None)
def test_induced_subgraph_on_all_vertices_is_identity(n: int, seed: int) -> None:
    g = random_graph(n, seed)
    assert induced_subgraph(g, list(range(n))) == g
