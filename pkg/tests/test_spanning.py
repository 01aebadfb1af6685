"""Spanning trees, co-tree components, and deficiency quantities."""

import random

import pytest

from trace_forge.errors import (
    NotQualifiedError,
    NotSpanningTreeError,
    VertexNotInCoTreeError,
)
from trace_forge.graph import betti_number, build_graph, path_graph
from trace_forge.spanning import (
    cotree_decomposition,
    deficiency_of_tree,
    find_even_cotree_tree,
    find_qualified_tree,
    graph_deficiency,
    iter_spanning_trees,
    local_odd_even_split,
    qualified_deficiency,
    spanning_tree,
    tree_is_qualified,
)

from conftest import random_connected_graph, random_spanning_tree


def star_tree(g, center):
    return spanning_tree(g, [(center, w) for w in g.neighbors(center)])


def test_spanning_tree_validation(k4):
    with pytest.raises(NotSpanningTreeError):
        spanning_tree(k4, [(0, 1), (1, 2)])  # too few
    with pytest.raises(NotSpanningTreeError):
        spanning_tree(k4, [(0, 1), (1, 2), (0, 2)])  # cycle
    with pytest.raises(NotSpanningTreeError):
        spanning_tree(k4, [(0, 1), (1, 2), (4, 5)])  # foreign edges


def test_cotree_k4_star(k4):
    t = star_tree(k4, 0)
    decomposition = cotree_decomposition(k4, t)
    assert len(decomposition.components) == 1
    comp = decomposition.components[0]
    assert comp.edges == frozenset({(1, 2), (1, 3), (2, 3)})
    assert comp.edge_count == 3
    assert comp.is_odd
    assert deficiency_of_tree(k4, t) == 1


def test_cotree_k5_star(k5):
    t = star_tree(k5, 0)
    decomposition = cotree_decomposition(k5, t)
    assert len(decomposition.components) == 1
    comp = decomposition.components[0]
    assert comp.edge_count == 6
    assert not comp.is_odd
    assert deficiency_of_tree(k5, t) == 0


def test_cotree_of_tree_graph_is_empty():
    g = path_graph(5)
    t = spanning_tree(g, g.edges)
    assert cotree_decomposition(g, t).components == ()


def test_cotree_c4_path(c4):
    t = spanning_tree(c4, [(0, 1), (1, 2), (2, 3)])
    assert deficiency_of_tree(c4, t) == 1


def test_spanning_tree_count_k4(k4):
    assert sum(1 for _ in iter_spanning_trees(k4)) == 16  # Cayley: 4^2


def test_cotree_edges_sum_to_betti():
    rng = random.Random(6)
    for _ in range(20):
        g = random_connected_graph(rng, n_min=3, n_max=6)
        t = random_spanning_tree(g, rng)
        decomposition = cotree_decomposition(g, t)
        assert sum(c.edge_count for c in decomposition.components) == betti_number(g)


def test_graph_deficiency_values(k3, k4, k5):
    assert graph_deficiency(k5).value == 0
    assert graph_deficiency(k4).value == 1
    assert graph_deficiency(k3).value == 1


def test_deficiency_witness_revalidates(k4):
    cert = graph_deficiency(k4)
    assert deficiency_of_tree(k4, cert.witness_tree) == cert.value


def test_qualified_deficiency_k4(k4):
    assert qualified_deficiency(k4, 4) is None  # max degree 3, odd betti


def test_qualified_deficiency_k5_star(k5):
    cert = qualified_deficiency(k5, 8)
    assert cert is not None
    assert cert.value == 0
    assert cert.qualified_bound == 8


def test_qualified_deficiency_with_given_tree(k5):
    t = star_tree(k5, 0)
    cert = qualified_deficiency(k5, 8, t)
    assert cert.value == 0
    bad = spanning_tree(k5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    if not tree_is_qualified(k5, bad, 8):
        with pytest.raises(NotQualifiedError):
            qualified_deficiency(k5, 8, bad)


def test_local_odd_even_split_k4_path_tree(k4):
    # tree {0-1, 0-2, 2-3} leaves co-tree {1-2, 1-3, 0-3}: one odd component
    t = spanning_tree(k4, [(0, 1), (0, 2), (2, 3)])
    split = local_odd_even_split(k4, t, 0)
    assert len(split.odd_parts) == 1
    assert len(split.even_parts) == 0
    assert split.odd_parts[0] == frozenset({(1, 2), (1, 3), (0, 3)})


def test_local_split_parity_law():
    # a vertex in an odd component always yields an odd number of odd parts
    rng = random.Random(8)
    checked = 0
    for _ in range(40):
        g = random_connected_graph(rng, n_min=4, n_max=6)
        t = random_spanning_tree(g, rng)
        for comp in cotree_decomposition(g, t).components:
            for v in sorted(comp.vertices):
                split = local_odd_even_split(g, t, v)
                if comp.is_odd:
                    assert len(split.odd_parts) % 2 == 1
                    checked += 1
                else:
                    assert len(split.odd_parts) % 2 == 0
    assert checked > 0


def test_local_split_even_component_into_two_odds():
    # diamond with the star tree at 3: vertex 0 sits in the even co-tree
    # component {01, 02}, which detaches into two odd one-edge parts
    g = build_graph([(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)])
    t = spanning_tree(g, [(0, 3), (1, 3), (2, 3)])
    split = local_odd_even_split(g, t, 0)
    assert split.vertex == 0
    assert split.odd_parts == (frozenset({(0, 1)}), frozenset({(0, 2)}))
    assert split.even_parts == ()


def test_vertex_not_in_cotree(k4):
    t = star_tree(k4, 0)
    with pytest.raises(VertexNotInCoTreeError):
        local_odd_even_split(k4, t, 0)  # center touches only tree edges


def test_find_even_cotree_tree(k4, k5, q3):
    assert find_even_cotree_tree(k5) is not None
    assert find_even_cotree_tree(k4) is None  # betti 3 is odd
    assert find_even_cotree_tree(q3) is None  # betti 5 is odd


def test_find_qualified_tree(k4, k5, c4):
    t = find_qualified_tree(k5, 4)
    assert t is not None
    assert tree_is_qualified(k5, t, 4)
    assert find_qualified_tree(k4, 4) is None
    assert find_qualified_tree(c4, 4) is None


def test_parity_law_and_minimality():
    rng = random.Random(9)
    for _ in range(30):
        g = random_connected_graph(rng, n_min=3, n_max=6)
        beta = betti_number(g)
        minimum = graph_deficiency(g).value
        t = random_spanning_tree(g, rng)
        value = deficiency_of_tree(g, t)
        assert value % 2 == beta % 2
        assert minimum <= value
        assert (find_even_cotree_tree(g) is not None) == (minimum == 0)
