"""Constructive transforms between a graph and its vertex splits.

Three families of machinery live here:

* transferring a spanning tree across vertex identification while keeping
  odd co-tree components covered,
* splitting a vertex in an odd co-tree component so that the (qualified)
  deficiency strictly drops, and
* projecting a double trace through a split of one vertex along its
  repetition sets, plus the inverse lift.

Every transform validates its postconditions mechanically; a construction
branch is never trusted blindly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Iterator, Sequence

from .errors import (
    DegreeTooSmallError,
    InternalInvariantError,
    NotInOddComponentError,
    NotQualifiedError,
    NotSpanningTreeError,
    PartitionNotRepetitionClosedError,
    PreconditionViolatedError,
    TraceForgeError,
    UnknownVertexError,
)
from .graph import (
    Edge,
    Graph,
    SplitSpec,
    edge_key,
    fresh_vertex_ids,
    identify_vertices,
    is_connected,
    split_vertex,
)
from .spanning import (
    SpanningTree,
    cotree_decomposition,
    deficiency_of_tree,
    iter_spanning_trees,
    tree_is_qualified,
)
from .walks import DoubleTrace, transition_graph_at, validate_double_trace


@dataclass
class SplitOutcome:
    """A deficiency-reducing split with its full correspondence record."""

    graph_before: Graph
    graph_after: Graph
    tree_after: SpanningTree
    split_vertex: int
    new_vertices: tuple[int, int]
    parts: tuple[frozenset[int], frozenset[int]]
    edge_map: dict[Edge, Edge]  # old edge -> new edge, a bijection
    deficiency_before: int
    deficiency_after: int


# -- tree transfer under identification ---------------------------------------


def _tree_path(t: SpanningTree, a: int, b: int) -> list[int]:
    """Unique a,b-path in the tree, as a vertex list starting at a."""
    adj: dict[int, list[int]] = {}
    for u, v in t.tree_edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    prev = {a: a}
    stack = [a]
    while stack:
        x = stack.pop()
        if x == b:
            break
        for y in sorted(adj.get(x, ())):
            if y not in prev:
                prev[y] = x
                stack.append(y)
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    path.reverse()
    return path


def _odd_components_covered(
    g: Graph, t: SpanningTree, covering: frozenset[int]
) -> bool:
    return all(
        comp.vertices & covering
        for comp in cotree_decomposition(g, t).odd_components()
    )


def _transfer_pair(
    g_prime: Graph,
    t_prime: SpanningTree,
    a: int,
    b: int,
    new_id: int,
    covering: frozenset[int],
) -> tuple[Graph, SpanningTree]:
    """Identify two vertices and rebuild the tree per the pairwise construction.

    Tree edges are relabeled onto the merged vertex; the relabeled tree gains
    exactly one cycle, broken by dropping the first edge of the tree path
    between the two targets.
    """
    g = identify_vertices(g_prime, (a, b), new_id)
    path = _tree_path(t_prime, a, b)
    u = path[1]
    dropped = edge_key(a, u)
    relabeled = set()
    for x, y in t_prime.tree_edges:
        if (x, y) == dropped or (y, x) == dropped:
            continue
        x2 = new_id if x in (a, b) else x
        y2 = new_id if y in (a, b) else y
        relabeled.add(edge_key(x2, y2))
    try:
        t = SpanningTree(g, frozenset(relabeled))
    except NotSpanningTreeError as exc:  # pragma: no cover - construction bug
        raise InternalInvariantError(
            f"pairwise tree transfer produced a non-tree: {exc}"
        ) from exc
    if not _odd_components_covered(g, t, covering | frozenset({new_id})):
        raise InternalInvariantError(
            "tree transfer left an odd co-tree component uncovered"
        )
    return g, t


def transfer_tree_on_identification(
    g_prime: Graph,
    t_prime: SpanningTree,
    targets: Iterable[int],
    new_id: int,
    protected: Iterable[int] = (),
) -> SpanningTree:
    """Pull a spanning tree back through vertex identification.

    Preconditions: the targets have pairwise disjoint neighborhoods with no
    edge between them, and every odd co-tree component of ``t_prime``
    contains a protected vertex or a target.  The result spans the identified
    graph and every odd co-tree component contains a protected vertex or
    ``new_id``.
    """
    targets = sorted(set(targets))
    protected = frozenset(protected)
    if t_prime.host != g_prime:
        raise NotSpanningTreeError("tree does not span this graph")
    if len(targets) < 2:
        raise PreconditionViolatedError("need at least 2 targets to identify")
    for x in targets:
        if x not in g_prime.adjacency:
            raise PreconditionViolatedError(f"target {x} not in graph")
    if protected & set(targets):
        raise PreconditionViolatedError("protected vertices must not be targets")
    if not protected <= set(g_prime.vertices):
        raise PreconditionViolatedError("protected vertices must be in the graph")
    if not _odd_components_covered(
        g_prime, t_prime, protected | frozenset(targets)
    ):
        raise PreconditionViolatedError(
            "an odd co-tree component contains no protected vertex and no target"
        )

    pending = list(targets)
    g_cur, t_cur = g_prime, t_prime
    while len(pending) > 1:
        a, b = pending[0], pending[1]
        rest = pending[2:]
        nid = new_id if not rest else max(max(g_cur.vertices), new_id) + 1
        covering = protected | frozenset(rest)
        try:
            g_cur, t_cur = _transfer_pair(g_cur, t_cur, a, b, nid, covering)
        except TraceForgeError as exc:
            if isinstance(exc, InternalInvariantError):
                raise
            raise PreconditionViolatedError(str(exc)) from exc
        pending = [nid] + rest

    expected = identify_vertices(g_prime, targets, new_id)
    if g_cur != expected:
        raise InternalInvariantError(
            "staged identification disagrees with direct identification"
        )
    return t_cur


# -- deficiency-reducing splits -------------------------------------------------


def _home_component(g: Graph, t: SpanningTree, v: int):
    for comp in cotree_decomposition(g, t).components:
        if v in comp.vertices:
            return comp
    return None


def _relabeled_tree_edges(
    t: SpanningTree, v: int, side: frozenset[int], v1: int, v2: int
) -> set[Edge]:
    """Tree edges with v replaced by v1 toward ``side`` and v2 elsewhere."""
    out = set()
    for x, y in t.tree_edges:
        if x == v:
            out.add(edge_key(v1 if y in side else v2, y))
        elif y == v:
            out.add(edge_key(v1 if x in side else v2, x))
        else:
            out.add(edge_key(x, y))
    return out


def _split_candidates(
    g: Graph, t: SpanningTree, v: int
) -> Iterator[tuple[Graph, SpanningTree, tuple[frozenset[int], frozenset[int]]]]:
    """Splits following the constructive recipe: the tree neighbor u sits in
    one half, a co-tree neighbor w in the other, and the tree regains the
    edge wv.  Halves have sizes ceil(d/2) and floor(d/2); both assignments of
    u's side are tried.  Disconnected splits are skipped.
    """
    nbhd = set(g.neighbors(v))
    degree = len(nbhd)
    tree_nbrs = sorted(x for x in nbhd if edge_key(x, v) in t.tree_edges)
    cotree_nbrs = sorted(x for x in nbhd if edge_key(x, v) not in t.tree_edges)
    ceil_half = (degree + 1) // 2
    floor_half = degree // 2
    sizes = [ceil_half] if ceil_half == floor_half else [ceil_half, floor_half]
    v1, v2 = fresh_vertex_ids(g, 2)
    for u in tree_nbrs:
        for w in cotree_nbrs:
            rest = sorted(nbhd - {u, w})
            for size in sizes:
                for extra in combinations(rest, size - 1):
                    u_side = frozenset({u, *extra})
                    w_side = frozenset(nbhd - u_side)
                    g2 = split_vertex(g, SplitSpec(v, (u_side, w_side)))
                    if not is_connected(g2):
                        continue
                    edges = _relabeled_tree_edges(t, v, u_side, v1, v2)
                    edges.add(edge_key(v2, w))
                    try:
                        t2 = SpanningTree(g2, frozenset(edges))
                    except NotSpanningTreeError:  # pragma: no cover - defensive
                        continue
                    yield g2, t2, (u_side, w_side)


def _edge_map_for_split(
    g: Graph, v: int, parts: tuple[frozenset[int], frozenset[int]], new_ids: tuple[int, int]
) -> dict[Edge, Edge]:
    mapping: dict[Edge, Edge] = {}
    for e in g.edges:
        if v in e:
            far = e[0] if e[1] == v else e[1]
            copy = new_ids[0] if far in parts[0] else new_ids[1]
            mapping[e] = edge_key(copy, far)
        else:
            mapping[e] = e
    return mapping


def _reduce_split(
    g: Graph,
    t: SpanningTree,
    v: int,
    accept: Callable[[Graph, SpanningTree], bool],
    deficiency_before: int,
) -> SplitOutcome:
    """Find a verified split: recipe first, tree rewiring second, and the
    literal exhaustive family as a last resort."""
    new_ids = fresh_vertex_ids(g, 2)

    def outcome(g2: Graph, t2: SpanningTree, parts) -> SplitOutcome:
        return SplitOutcome(
            graph_before=g,
            graph_after=g2,
            tree_after=t2,
            split_vertex=v,
            new_vertices=new_ids,
            parts=parts,
            edge_map=_edge_map_for_split(g, v, parts, new_ids),
            deficiency_before=deficiency_before,
            deficiency_after=deficiency_of_tree(g2, t2),
        )

    for g2, t2, parts in _split_candidates(g, t, v):
        if accept(g2, t2):
            return outcome(g2, t2, parts)

    # the recipe can require first moving to another tree with at least two
    # tree edges at v and no worse deficiency
    for t_alt in iter_spanning_trees(g):
        if t_alt.tree_edges == t.tree_edges:
            continue
        if deficiency_of_tree(g, t_alt) > deficiency_before:
            continue
        home = _home_component(g, t_alt, v)
        if home is None or not home.is_odd:
            continue
        if sum(1 for x in g.neighbors(v) if edge_key(x, v) in t_alt.tree_edges) < 2:
            continue
        for g2, t2, parts in _split_candidates(g, t_alt, v):
            if accept(g2, t2):
                return outcome(g2, t2, parts)

    # last resort: any half-and-half split with any spanning tree
    nbhd = sorted(g.neighbors(v))
    ceil_half = (len(nbhd) + 1) // 2
    for chosen in combinations(nbhd, ceil_half):
        part_a = frozenset(chosen)
        part_b = frozenset(nbhd) - part_a
        g2 = split_vertex(g, SplitSpec(v, (part_a, part_b)))
        if not is_connected(g2):
            continue
        for t2 in iter_spanning_trees(g2):
            if accept(g2, t2):
                return outcome(g2, t2, (part_a, part_b))

    raise InternalInvariantError(
        f"no deficiency-reducing split exists at vertex {v}; "
        f"this contradicts a guaranteed construction"
    )


def _check_split_preconditions(g: Graph, t: SpanningTree, v: int) -> int:
    if t.host != g:
        raise NotSpanningTreeError("tree does not span this graph")
    if v not in g.adjacency:
        raise UnknownVertexError(f"vertex {v} not in graph")
    if g.degree(v) < 2:
        raise DegreeTooSmallError(f"vertex {v} has degree {g.degree(v)} < 2")
    home = _home_component(g, t, v)
    if home is None or not home.is_odd:
        raise NotInOddComponentError(
            f"vertex {v} does not lie in an odd co-tree component"
        )
    return deficiency_of_tree(g, t)


def split_reduce_deficiency(g: Graph, t: SpanningTree, v: int) -> SplitOutcome:
    """Split v (in an odd co-tree component) so the tree deficiency drops.

    Returns a connected split into halves of sizes ceil(d(v)/2) and
    floor(d(v)/2) together with a spanning tree of strictly smaller
    deficiency.  The outcome is validated, not assumed.
    """
    deficiency_before = _check_split_preconditions(g, t, v)

    def accept(g2: Graph, t2: SpanningTree) -> bool:
        return deficiency_of_tree(g2, t2) < deficiency_before

    return _reduce_split(g, t, v, accept, deficiency_before)


def split_reduce_qualified(
    g: Graph, t: SpanningTree, v: int, threshold: int
) -> SplitOutcome:
    """Deficiency-reducing split that also preserves qualification.

    Requires d(v) >= threshold and a tree whose odd components all contain a
    vertex of degree >= threshold; the output tree satisfies the same
    covering property in the split graph.
    """
    if v in g.adjacency and g.degree(v) < threshold:
        raise NotQualifiedError(
            f"vertex {v} has degree {g.degree(v)} < threshold {threshold}"
        )
    if not tree_is_qualified(g, t, threshold):
        raise NotQualifiedError(
            f"an odd co-tree component has no vertex of degree >= {threshold}"
        )
    deficiency_before = _check_split_preconditions(g, t, v)

    def accept(g2: Graph, t2: SpanningTree) -> bool:
        return (
            deficiency_of_tree(g2, t2) < deficiency_before
            and tree_is_qualified(g2, t2, threshold)
        )

    return _reduce_split(g, t, v, accept, deficiency_before)


# -- trace projection and lifting ------------------------------------------------


def project_trace_through_split(
    w: DoubleTrace, v: int, parts: Sequence[Iterable[int]]
) -> DoubleTrace:
    """Rewrite a trace onto the split of v along repetition-closed parts.

    Each part must be a union of minimal repetitions (transition-graph
    components) of the trace at v; then every visit of v maps to a
    well-defined copy and the projected sequence is again a valid double
    trace.  Edge directions are untouched, so antiparallel stays antiparallel.
    """
    g = w.host
    if v not in g.adjacency:
        raise UnknownVertexError(f"vertex {v} not in host")
    norm_parts = tuple(frozenset(p) for p in parts)
    spec = SplitSpec(v, norm_parts)
    components = transition_graph_at(w, v).components
    for comp in components:
        if not any(comp <= part for part in norm_parts):
            raise PartitionNotRepetitionClosedError(
                f"part boundaries cut the minimal repetition {sorted(comp)} at {v}"
            )
    g2 = split_vertex(g, spec)
    new_ids = fresh_vertex_ids(g, len(norm_parts))
    part_of = {x: i for i, part in enumerate(norm_parts) for x in part}
    seq = list(w.sequence)
    n = len(seq)
    out = []
    for i, x in enumerate(seq):
        if x != v:
            out.append(x)
            continue
        pred = seq[(i - 1) % n]
        succ = seq[(i + 1) % n]
        if part_of[pred] != part_of[succ]:  # pragma: no cover - closure ensures this
            raise InternalInvariantError(
                "visit crosses part boundary despite repetition closure"
            )
        out.append(new_ids[part_of[pred]])
    return validate_double_trace(g2, out)


def lift_trace_through_identification(
    w_prime: DoubleTrace, targets: Iterable[int], new_id: int
) -> DoubleTrace:
    """Rewrite a trace onto the graph that identifies the targets.

    Inverse of :func:`project_trace_through_split`; introduces exactly the
    neighborhoods of the former targets as repetitions at ``new_id`` and
    changes nothing elsewhere.
    """
    targets = set(targets)
    try:
        g = identify_vertices(w_prime.host, targets, new_id)
    except TraceForgeError as exc:
        raise PreconditionViolatedError(str(exc)) from exc
    out = [new_id if x in targets else x for x in w_prime.sequence]
    return validate_double_trace(g, out)
