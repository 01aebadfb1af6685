"""Double traces and their repetition calculus.

A double trace is a closed walk using every edge of its host exactly twice.
For a vertex v, the local transition graph pairs the predecessor and the
successor of each visit of v; its connected components are the minimal
non-empty repetition sets, and every repetition is a union of components.
The stability order of a trace is the largest d such that no vertex carries
a repetition of size between 1 and d.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterator, Literal, Sequence

from .errors import (
    EmptyGraphError,
    NonAdjacentStepError,
    UnknownVertexError,
    WrongLengthError,
    WrongMultiplicityError,
)
from .graph import Graph, edge_key, require_connected

PARALLEL = "parallel"
ANTIPARALLEL = "antiparallel"
MIXED = "mixed"

Mode = Literal["components", "brute_force"]


def min_rotation(seq: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically minimal rotation; reflections are left alone."""
    seq = tuple(seq)
    return min(seq[i:] + seq[:i] for i in range(len(seq)))


@dataclass(frozen=True)
class DoubleTrace:
    """A validated double trace, stored as its minimal rotation.

    The sequence is cyclic: the first vertex implicitly follows the last, and
    no terminal vertex is repeated in storage.
    """

    host: Graph
    sequence: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.sequence)

    def steps(self) -> Iterator[tuple[int, int]]:
        """All directed steps (v_i, v_{i+1}), indices mod length."""
        n = len(self.sequence)
        for i in range(n):
            yield self.sequence[i], self.sequence[(i + 1) % n]

    def visits(self, v: int) -> Iterator[tuple[int, int]]:
        """(predecessor, successor) for every cyclic visit of v."""
        n = len(self.sequence)
        for i, x in enumerate(self.sequence):
            if x == v:
                yield self.sequence[(i - 1) % n], self.sequence[(i + 1) % n]

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"DoubleTrace({' '.join(map(str, self.sequence))})"


@dataclass(frozen=True)
class TransitionGraph:
    """Pairing of predecessors and successors at one vertex.

    Nodes are the neighbors of the center; each visit contributes one
    unordered link {pred, succ} (a self-link when pred == succ).  The link
    count equals the center's degree and every neighbor appears as an
    endpoint exactly twice, counting multiplicity.
    """

    center: int
    nodes: tuple[int, ...]
    links: tuple[tuple[int, int], ...]

    @cached_property
    def components(self) -> tuple[frozenset[int], ...]:
        parent = {x: x for x in self.nodes}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.links:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        groups: dict[int, set[int]] = {}
        for x in self.nodes:
            groups.setdefault(find(x), set()).add(x)
        return tuple(
            sorted((frozenset(grp) for grp in groups.values()), key=min)
        )

    @property
    def is_connected(self) -> bool:
        return len(self.components) == 1


@dataclass
class RepetitionReport:
    """Per-vertex minimal repetitions plus the derived trace-level summary."""

    minimal_repetitions: dict[int, tuple[frozenset[int], ...]]
    stability_order: int
    strong: bool
    mode: Mode


@dataclass(frozen=True)
class TraceClass:
    """Where a trace sits in the kind/direction matrix."""

    is_double: bool
    direction: str
    stability_order: int
    strong: bool


def validate_double_trace(g: Graph, sequence: Sequence[int]) -> DoubleTrace:
    """Check a cyclic vertex sequence and return the canonical trace.

    Checks, in order: the host has edges, every cyclic step is an edge, the
    length is twice the edge count, and every edge appears exactly twice.
    """
    require_connected(g)
    if g.num_edges == 0:
        raise EmptyGraphError("a double trace needs at least one edge")
    seq = tuple(int(x) for x in sequence)
    for x in seq:
        if x not in g.adjacency:
            raise UnknownVertexError(f"vertex {x} not in host")
    if len(seq) != 2 * g.num_edges:
        raise WrongLengthError(
            f"sequence length {len(seq)} != 2|E| = {2 * g.num_edges}"
        )
    counts: Counter[tuple[int, int]] = Counter()
    n = len(seq)
    for i in range(n):
        u, v = seq[i], seq[(i + 1) % n]
        if not g.has_edge(u, v):
            raise NonAdjacentStepError(i, u, v)
        key = edge_key(u, v)
        counts[key] += 1
        if counts[key] > 2:
            # reported at the step where the third traversal happens
            raise WrongMultiplicityError(key, counts[key])
    for e in sorted(g.edges):
        c = counts.get(e, 0)
        if c != 2:
            raise WrongMultiplicityError(e, c)
    return DoubleTrace(g, min_rotation(seq))


def direction_profile(w: DoubleTrace) -> dict[tuple[int, int], str]:
    """Per-edge parallel/antiparallel label.

    An edge is parallel when both traversals run in the same direction,
    antiparallel otherwise.
    """
    first_dir: dict[tuple[int, int], tuple[int, int]] = {}
    profile: dict[tuple[int, int], str] = {}
    for u, v in w.steps():
        key = edge_key(u, v)
        if key not in first_dir:
            first_dir[key] = (u, v)
        else:
            profile[key] = PARALLEL if first_dir[key] == (u, v) else ANTIPARALLEL
    return profile


def trace_direction(w: DoubleTrace) -> str:
    labels = set(direction_profile(w).values())
    if labels == {PARALLEL}:
        return PARALLEL
    if labels == {ANTIPARALLEL}:
        return ANTIPARALLEL
    return MIXED


def transition_graph_at(w: DoubleTrace, v: int) -> TransitionGraph:
    """Build the pred/succ pairing at v from all cyclic visits."""
    if v not in w.host.adjacency:
        raise UnknownVertexError(f"vertex {v} not in host")
    links = sorted(edge_key(p, s) for p, s in w.visits(v))
    return TransitionGraph(v, w.host.neighbors(v), tuple(links))


def is_repetition(w: DoubleTrace, v: int, subset: frozenset[int]) -> bool:
    """Direct check: at every visit of v, pred in subset iff succ in subset."""
    return all((p in subset) == (s in subset) for p, s in w.visits(v))


def _minimal_repetitions_brute(w: DoubleTrace, v: int) -> tuple[frozenset[int], ...]:
    """Inclusion-minimal non-empty repetition sets by scanning all subsets."""
    nbhd = w.host.neighbors(v)
    reps = [
        frozenset(sub)
        for r in range(1, len(nbhd) + 1)
        for sub in combinations(nbhd, r)
        if is_repetition(w, v, frozenset(sub))
    ]
    minimal = [
        s for s in reps if not any(t < s for t in reps)
    ]
    return tuple(sorted(minimal, key=min))


def _stability_from_components(
    per_vertex: dict[int, tuple[frozenset[int], ...]], g: Graph
) -> int:
    # At v: with a connected pairing only the trivial repetitions exist, so the
    # bound is d(v) - 1; otherwise the smallest component is itself a
    # repetition, giving (min component size) - 1.
    best = None
    for v, comps in per_vertex.items():
        if len(comps) == 1:
            d_max = g.degree(v) - 1
        else:
            d_max = min(len(c) for c in comps) - 1
        best = d_max if best is None else min(best, d_max)
    assert best is not None
    return best


def repetition_analysis(w: DoubleTrace, mode: Mode = "components") -> RepetitionReport:
    """Minimal repetitions at every vertex plus stability order and strongness.

    ``components`` derives them from the transition graphs (polynomial);
    ``brute_force`` re-derives them by testing every neighbor subset and is
    kept as an independent oracle.  Both modes agree on every graph.
    """
    per_vertex: dict[int, tuple[frozenset[int], ...]] = {}
    for v in w.host.vertices:
        if mode == "components":
            per_vertex[v] = transition_graph_at(w, v).components
        else:
            per_vertex[v] = _minimal_repetitions_brute(w, v)
    strong = all(len(comps) == 1 for comps in per_vertex.values())
    return RepetitionReport(
        minimal_repetitions=per_vertex,
        stability_order=_stability_from_components(per_vertex, w.host),
        strong=strong,
        mode=mode,
    )


def stability_order(w: DoubleTrace) -> int:
    """Largest d such that no vertex has a repetition of size in [1, d].

    Always finite: bounded above by the host's minimum degree minus one.
    """
    per_vertex = {
        v: transition_graph_at(w, v).components for v in w.host.vertices
    }
    return _stability_from_components(per_vertex, w.host)


def is_strong(w: DoubleTrace) -> bool:
    return all(
        transition_graph_at(w, v).is_connected for v in w.host.vertices
    )


def classify_trace(w: DoubleTrace) -> TraceClass:
    """Bundle direction, stability order, and the strong flag."""
    report = repetition_analysis(w, "components")
    return TraceClass(
        is_double=True,
        direction=trace_direction(w),
        stability_order=report.stability_order,
        strong=report.strong,
    )


# -- trace text format (shared with the CLI) ----------------------------------

def parse_trace_text(text: str) -> tuple[int, ...]:
    """One line of whitespace-separated vertex ids, interpreted cyclically."""
    fields = text.split()
    if not fields:
        raise WrongLengthError("empty trace")
    try:
        return tuple(int(f) for f in fields)
    except ValueError as exc:
        raise WrongLengthError(f"non-integer vertex id in trace: {exc}") from exc


def format_trace_text(w: DoubleTrace) -> str:
    return " ".join(str(x) for x in w.sequence)
