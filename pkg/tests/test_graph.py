"""Graph core: construction, structure queries, splitting, identification."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trace_forge.errors import (
    AdjacentTargetsError,
    DegreeTooSmallError,
    DisconnectedGraphError,
    DuplicateEdgeError,
    EmptyGraphError,
    InvalidPartitionError,
    OverlappingNeighborhoodsError,
    SelfLoopError,
)
from trace_forge.graph import (
    SplitSpec,
    betti_number,
    build_graph,
    complete_graph,
    cycle_graph,
    edge_connectivity,
    identify_vertices,
    is_connected,
    path_graph,
    split_vertex,
)

from conftest import random_connected_graph


def test_build_triangle():
    g = build_graph([(0, 1), (1, 2), (2, 0)])
    assert g.num_vertices == 3
    assert g.num_edges == 3
    assert g.neighbors(0) == (1, 2)


def test_build_rejects_duplicate_edge():
    with pytest.raises(DuplicateEdgeError):
        build_graph([(0, 1), (1, 0)])


def test_build_rejects_self_loop():
    with pytest.raises(SelfLoopError):
        build_graph([(0, 0)])


def test_connectivity():
    assert is_connected(complete_graph(4))
    two_triangles = build_graph([(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert not is_connected(two_triangles)
    assert is_connected(build_graph([], isolated_vertices=[7]))
    with pytest.raises(EmptyGraphError):
        is_connected(build_graph([]))


@pytest.mark.parametrize(
    "graph,expected",
    [
        (complete_graph(4), 3),
        (path_graph(5), 0),
        (complete_graph(5), 6),
    ],
)
def test_betti_number(graph, expected):
    assert betti_number(graph) == expected


def test_betti_rejects_disconnected():
    g = build_graph([(0, 1), (2, 3)])
    with pytest.raises(DisconnectedGraphError):
        betti_number(g)


@pytest.mark.parametrize(
    "graph,expected",
    [
        (complete_graph(3), 2),
        (complete_graph(4), 3),
        (complete_graph(5), 4),
        (cycle_graph(4), 2),
        (path_graph(3), 1),
    ],
)
def test_edge_connectivity(graph, expected):
    assert edge_connectivity(graph) == expected


def test_split_k4():
    g = complete_graph(4)
    g2 = split_vertex(g, SplitSpec(0, (frozenset({1}), frozenset({2, 3}))))
    assert g2.num_vertices == 5
    assert g2.num_edges == 6
    assert g2.degree(4) == 1 and g2.degree(5) == 2
    assert g2.neighbors(4) == (1,)


def test_split_c4_gives_path():
    g = cycle_graph(4)
    g2 = split_vertex(g, SplitSpec(0, (frozenset({1}), frozenset({3}))))
    assert g2.num_vertices == 5
    assert g2.num_edges == 4
    assert sorted(g2.degree(v) for v in g2.vertices) == [1, 1, 2, 2, 2]
    assert is_connected(g2)


def test_split_bowtie_center_disconnects():
    bowtie = build_graph([(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
    g2 = split_vertex(bowtie, SplitSpec(0, (frozenset({1, 2}), frozenset({3, 4}))))
    assert g2.num_edges == 6
    assert not is_connected(g2)


def test_split_rejects_bad_partition():
    g = complete_graph(4)
    with pytest.raises(InvalidPartitionError):
        split_vertex(g, SplitSpec(0, (frozenset({1}), frozenset({2}))))
    with pytest.raises(InvalidPartitionError):
        SplitSpec(0, (frozenset({1}),))
    with pytest.raises(DegreeTooSmallError):
        split_vertex(path_graph(2), SplitSpec(0, (frozenset({1}), frozenset({2}))))


def test_identify_two_triangles_gives_bowtie():
    g = build_graph([(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    merged = identify_vertices(g, [0, 3], 9)
    assert merged.num_edges == 6
    assert merged.degree(9) == 4


def test_identify_rejects_shared_neighbor():
    g = path_graph(3)  # 0-1-2, both ends see 1
    with pytest.raises(OverlappingNeighborhoodsError):
        identify_vertices(g, [0, 2], 5)


def test_identify_rejects_adjacent_targets():
    g = complete_graph(3)
    with pytest.raises(AdjacentTargetsError):
        identify_vertices(g, [0, 1], 5)


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10_000))
def test_split_then_identify_round_trip(seed):
    rng = random.Random(seed)
    g = random_connected_graph(rng, n_min=3, n_max=6)
    candidates = [v for v in g.vertices if g.degree(v) >= 2]
    v = rng.choice(candidates)
    nbrs = list(g.neighbors(v))
    rng.shuffle(nbrs)
    cut = rng.randint(1, len(nbrs) - 1)
    parts = (frozenset(nbrs[:cut]), frozenset(nbrs[cut:]))
    g2 = split_vertex(g, SplitSpec(v, parts))
    assert g2.num_edges == g.num_edges
    # degrees away from v unchanged
    for w in g.vertices:
        if w != v:
            assert g2.degree(w) == g.degree(w)
    new_a, new_b = max(g.vertices) + 1, max(g.vertices) + 2
    back = identify_vertices(g2, [new_a, new_b], v)
    assert back == g
