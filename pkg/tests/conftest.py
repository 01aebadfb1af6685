"""Shared fixtures: named graphs, random generators, and small-graph sweeps."""

from __future__ import annotations

import random
from itertools import combinations, permutations

import pytest

from trace_forge.graph import (
    Graph,
    build_graph,
    complete_graph,
    cube_graph,
    cycle_graph,
    edge_key,
    is_connected,
    path_graph,
)
from trace_forge.spanning import SpanningTree, spanning_tree
from trace_forge.walks import DoubleTrace, validate_double_trace


@pytest.fixture
def k3() -> Graph:
    return complete_graph(3)


@pytest.fixture
def k4() -> Graph:
    return complete_graph(4)


@pytest.fixture
def k5() -> Graph:
    return complete_graph(5)


@pytest.fixture
def p3() -> Graph:
    return path_graph(3)


@pytest.fixture
def c4() -> Graph:
    return cycle_graph(4)


@pytest.fixture
def q3() -> Graph:
    return cube_graph()


def fixture_family() -> dict[str, Graph]:
    return {
        "K3": complete_graph(3),
        "P3": path_graph(3),
        "C4": cycle_graph(4),
        "K4": complete_graph(4),
        "K5": complete_graph(5),
        "Q3": cube_graph(),
    }


# -- random generators ---------------------------------------------------------


def random_connected_graph(
    rng: random.Random,
    n_min: int = 3,
    n_max: int = 6,
    extra_edge_prob: float = 0.45,
    max_edges: int | None = None,
) -> Graph:
    """Random spanning tree plus a sprinkle of extra edges; always connected."""
    n = rng.randint(n_min, n_max)
    order = list(range(n))
    rng.shuffle(order)
    edges = {edge_key(order[i], order[rng.randrange(i)]) for i in range(1, n)}
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    for u, v in pairs:
        if max_edges is not None and len(edges) >= max_edges:
            break
        if rng.random() < extra_edge_prob:
            edges.add(edge_key(u, v))
    return build_graph(sorted(edges))


def random_spanning_tree(g: Graph, rng: random.Random) -> SpanningTree:
    """Kruskal over a shuffled edge order."""
    edges = list(g.edges)
    rng.shuffle(edges)
    parent = {v: v for v in g.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen = []
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            chosen.append((u, v))
    return spanning_tree(g, chosen)


def random_double_trace(g: Graph, rng: random.Random) -> DoubleTrace:
    """Random Euler tour of the doubled edge multiset (always exists)."""
    slots = {e: 2 for e in g.edges}
    start = rng.choice(g.vertices)
    stack = [start]
    tour: list[int] = []
    while stack:
        u = stack[-1]
        nbrs = [w for w in g.neighbors(u) if slots[edge_key(u, w)] > 0]
        if not nbrs:
            tour.append(stack.pop())
        else:
            w = rng.choice(nbrs)
            slots[edge_key(u, w)] -= 1
            stack.append(w)
    tour.reverse()
    return validate_double_trace(g, tour[:-1])


# -- exhaustive small-graph enumeration ------------------------------------------


def canonical_form(n: int, edges: frozenset[tuple[int, int]]) -> frozenset:
    """Smallest relabeling of the edge set; exact isomorphism key for tiny n."""
    best = None
    for perm in permutations(range(n)):
        relabeled = frozenset(edge_key(perm[u], perm[v]) for u, v in edges)
        key = tuple(sorted(relabeled))
        if best is None or key < best[0]:
            best = (key, relabeled)
    return best[1]


def connected_graphs_up_to_iso(n: int) -> list[Graph]:
    """All connected graphs on n labeled vertices, one per isomorphism class."""
    pairs = list(combinations(range(n), 2))
    seen: set[frozenset] = set()
    out: list[Graph] = []
    for mask in range(1 << len(pairs)):
        edges = frozenset(pairs[i] for i in range(len(pairs)) if mask >> i & 1)
        if len(edges) < n - 1:
            continue
        g = build_graph(sorted(edges), isolated_vertices=range(n))
        if not is_connected(g):
            continue
        key = canonical_form(n, edges)
        if key in seen:
            continue
        seen.add(key)
        out.append(g)
    return out
