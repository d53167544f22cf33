from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.spectra.cograph import (
    Leaf,
    Node,
    P4Witness,
    all_graphs,
    build_cotree,
    canonical_encoding,
    cograph_shapes,
    cotree_to_graph,
    enumerate_cographs,
    enumerate_cotrees,
    find_induced_p4,
    format_cotree,
    is_cograph,
    leaf_count,
    parse_cotree,
    random_cograph,
    random_cotree,
)
from src.spectra.errors import CapExceededError, CographError
from src.spectra.graph import (
    Graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    relabel,
    write_graph6,
)

COGRAPH_COUNTS = [1, 2, 4, 10, 24, 66, 180, 522, 1532, 4624, 14136, 43930]


def _brute_force_count(n: int) -> int:
    pairs = [(u, v) for v in range(n) for u in range(v)]
    seen: set[str] = set()
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(n, (p for i, p in enumerate(pairs) if mask >> i & 1))
        if not is_cograph(g):
            continue
        seen.add(min(write_graph6(relabel(g, perm)) for perm in permutations(range(n))))
    return len(seen)


def test_cotree_examples() -> None:
    assert format_cotree(build_cotree(complete_graph(3))) == "J(0,1,2)"
    assert format_cotree(build_cotree(path_graph(3))) == "J(1,U(0,2))"
    assert format_cotree(build_cotree(empty_graph(3))) == "U(0,1,2)"
    assert format_cotree(build_cotree(empty_graph(1))) == "0"
    assert format_cotree(build_cotree(complete_graph(4))) == "J(0,1,2,3)"


def test_p4_witness() -> None:
    result = build_cotree(path_graph(4))
    assert isinstance(result, P4Witness)
    assert str(result) == "P4 witness: 0 1 2 3"
    assert find_induced_p4(cycle_graph(5)) is not None
    assert find_induced_p4(cycle_graph(4)) is None


def test_witness_induces_a_path() -> None:
    g = cycle_graph(6)
    w = find_induced_p4(g)
    assert w is not None
    a, b, c, d = w.vertices
    assert g.adjacent(a, b) and g.adjacent(b, c) and g.adjacent(c, d)
    assert not (g.adjacent(a, c) or g.adjacent(a, d) or g.adjacent(b, d))


def test_build_cotree_rejects_empty_graph() -> None:
    with pytest.raises(CographError):
        build_cotree(empty_graph(0))


def test_children_ordered_by_size_then_min_leaf() -> None:
    # K_{1,3} with the centre at 3
    g = Graph.from_edges(4, [(0, 3), (1, 3), (2, 3)])
    assert format_cotree(build_cotree(g)) == "J(3,U(0,1,2))"
    assert format_cotree(build_cotree(complete_bipartite_graph(3, 3))) == "J(U(0,1,2),U(3,4,5))"


def test_parse_and_format_cotree() -> None:
    t = parse_cotree("J(0, U(1,2))")
    assert t == Node("J", (Leaf(0), Node("U", (Leaf(1), Leaf(2)))))
    assert format_cotree(t) == "J(0,U(1,2))"
    g = cotree_to_graph(t)
    assert sorted(g.edges()) == [(0, 1), (0, 2)]


@pytest.mark.parametrize(
    "text",
    ["U(0,U(1,2))", "J(0)", "J(0,2)", "J(0,1", "J(0,1)x", "J(0,,1)", "X(0,1)", "J(a,1)"],
)
def test_parse_cotree_rejects(text: str) -> None:
    with pytest.raises(CographError):
        parse_cotree(text)


def test_canonical_encoding_ignores_labels() -> None:
    a = parse_cotree("J(0,U(1,2))")
    b = parse_cotree("J(U(2,0),1)")
    assert canonical_encoding(a) == canonical_encoding(b) == "J(*,U(*,*))"


@pytest.mark.parametrize(("n", "expected"), list(enumerate(COGRAPH_COUNTS[:8], start=1)))
def test_enumeration_counts(n: int, expected: int) -> None:
    assert len(cograph_shapes(n)) == expected
    assert sum(1 for _ in enumerate_cographs(n)) == expected


@pytest.mark.slow
@pytest.mark.parametrize(("n", "expected"), [(9, 1532), (10, 4624), (11, 14136), (12, 43930)])
def test_enumeration_counts_large(n: int, expected: int) -> None:
    assert len(cograph_shapes(n)) == expected


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_enumeration_matches_brute_force(n: int) -> None:
    assert _brute_force_count(n) == COGRAPH_COUNTS[n - 1]


def test_enumeration_matches_atlas_at_six() -> None:
    assert sum(1 for g in all_graphs(6) if is_cograph(g)) == COGRAPH_COUNTS[5]


def test_enumerated_graphs_are_distinct_cographs() -> None:
    for n in range(1, 8):
        encodings = []
        for t in enumerate_cotrees(n):
            g = cotree_to_graph(t)
            rebuilt = build_cotree(g)
            assert not isinstance(rebuilt, P4Witness)
            encodings.append(canonical_encoding(rebuilt))
            assert canonical_encoding(rebuilt) == canonical_encoding(t)
        assert len(set(encodings)) == len(encodings)


def test_enumeration_order_is_stable() -> None:
    assert [write_graph6(g) for g in enumerate_cographs(2)] == ["A?", "A_"]
    assert list(enumerate_cographs(4)) == list(enumerate_cographs(4))


def test_enumeration_cap() -> None:
    with pytest.raises(CapExceededError):
        list(enumerate_cographs(13))
    with pytest.raises(CapExceededError):
        list(enumerate_cographs(5, cap=4))


def test_all_graphs_counts_and_cap() -> None:
    assert [len(all_graphs(n)) for n in range(1, 6)] == [1, 2, 4, 11, 34]
    with pytest.raises(CapExceededError):
        all_graphs(8)


@pytest.mark.parametrize("n", range(1, 8))
def test_is_cograph_on_atlas_agrees_with_decomposition(n: int) -> None:
    count = 0
    for g in all_graphs(n):
        tree = build_cotree(g)
        assert is_cograph(g) == (not isinstance(tree, P4Witness))
        if is_cograph(g):
            count += 1
            assert cotree_to_graph(tree) == g
        else:
            assert find_induced_p4(g) == tree
    assert count == COGRAPH_COUNTS[n - 1]


@pytest.mark.parametrize("n", range(1, 9))
def test_labeled_roundtrip_through_cotree(n: int) -> None:
    for i, g in enumerate(enumerate_cographs(n)):
        # rotate labels so leaves are not already in cotree order
        h = relabel(g, [(v + i) % n for v in range(n)])
        tree = build_cotree(h)
        assert not isinstance(tree, P4Witness)
        assert cotree_to_graph(tree) == h


@given(st.integers(1, 30), st.integers(0, 2**32 - 1))
@settings(max_examples=50, deadline=None)
def test_random_cograph_roundtrip(n: int, seed: int) -> None:
    t = random_cotree(n, seed)
    assert leaf_count(t) == n
    g = random_cograph(n, seed)
    assert g == cotree_to_graph(t)
    assert is_cograph(g)
    rebuilt = build_cotree(g)
    assert cotree_to_graph(rebuilt) == g
    assert canonical_encoding(rebuilt) == canonical_encoding(t)
