"""Top-level decisions with certificates.

Each cell of the kind x direction matrix is decided by its exact structural
predicate; yes-verdicts can carry a witness (a trace found by search or
built constructively, or a qualifying spanning tree), no-verdicts name the
violated condition.  The constructive pipeline builds an antiparallel
d-stable trace by repeatedly splitting a high-degree vertex inside an odd
co-tree component until the co-tree is all even, finding an antiparallel
strong trace there, and lifting it back through the identifications; the
reverse extraction projects a trace along its repetition sets and pulls an
all-even tree back up.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    EmptyGraphError,
    InternalInvariantError,
    NotAntiparallelError,
    NotStableError,
)
from .graph import Graph, betti_number, edge_connectivity, fresh_vertex_ids, require_connected
from .search import TraceSpec, find_parallel_trace, find_trace
from .spanning import (
    SpanningTree,
    cotree_decomposition,
    find_even_cotree_tree,
    find_qualified_tree,
    graph_deficiency,
    qualified_deficiency,
    tree_is_qualified,
)
from .transform import (
    lift_trace_through_identification,
    project_trace_through_split,
    split_reduce_qualified,
    transfer_tree_on_identification,
)
from .walks import (
    ANTIPARALLEL,
    PARALLEL,
    DoubleTrace,
    classify_trace,
    repetition_analysis,
    trace_direction,
    transition_graph_at,
)

MIN_DEGREE = "MinDegree"
NOT_EULERIAN = "NotEulerian"
NO_QUALIFIED_TREE = "NoQualifiedTree"
PARITY_OBSTRUCTION = "ParityObstruction"


@dataclass
class DecisionCertificate:
    """Outcome of one matrix cell, with re-checkable evidence."""

    verdict: bool
    kind: str
    direction: str
    d: int | None = None
    witness_trace: DoubleTrace | None = None
    witness_tree: SpanningTree | None = None
    violated_condition: str | None = None
    condition_detail: dict = field(default_factory=dict)

    def condition_label(self) -> str:
        if self.verdict:
            return "yes"
        if self.violated_condition == NO_QUALIFIED_TREE:
            threshold = self.condition_detail.get("threshold")
            if threshold is not None:
                return f"{NO_QUALIFIED_TREE}(D={threshold})"
        return self.violated_condition or "no"


def _is_eulerian(g: Graph) -> bool:
    return all(g.degree(v) % 2 == 0 for v in g.vertices)


def _no(kind, direction, d, condition, **detail) -> DecisionCertificate:
    return DecisionCertificate(
        verdict=False,
        kind=kind,
        direction=direction,
        d=d,
        violated_condition=condition,
        condition_detail=detail,
    )


def _yes_trace(kind, direction, d, trace) -> DecisionCertificate:
    return DecisionCertificate(
        verdict=True, kind=kind, direction=direction, d=d, witness_trace=trace
    )


def _yes_tree(kind, direction, d, tree) -> DecisionCertificate:
    return DecisionCertificate(
        verdict=True, kind=kind, direction=direction, d=d, witness_tree=tree
    )


def _search_witness(g: Graph, spec: TraceSpec, budget: int | None) -> DoubleTrace:
    trace = find_trace(g, spec, budget)
    if trace is None:
        raise InternalInvariantError(
            f"predicate says yes but the complete search found no trace for {spec}"
        )
    return trace


def decide_existence(
    g: Graph,
    kind: str,
    direction: str = "any",
    d: int | None = None,
    *,
    witness: bool = True,
    budget: int | None = None,
) -> DecisionCertificate:
    """Decide one cell of the matrix by its structural predicate.

    Predicates: plain and antiparallel double traces and strong traces exist
    for every connected graph; parallel cells require an Eulerian graph;
    stability requires minimum degree above d; antiparallel stability
    additionally requires a spanning tree whose odd co-tree components each
    contain a vertex of degree at least 2d + 2; antiparallel strong traces
    require an all-even co-tree tree.
    """
    require_connected(g)
    if g.num_edges == 0:
        raise EmptyGraphError("decisions need at least one edge")
    spec = TraceSpec(kind, direction, d)  # validates the cell coordinates
    kind, direction, d = spec.kind, spec.direction, spec.d

    if kind == "stable" and g.min_degree() <= d:
        return _no(kind, direction, d, MIN_DEGREE, min_degree=g.min_degree())

    if direction == PARALLEL and not _is_eulerian(g):
        return _no(kind, direction, d, NOT_EULERIAN)

    if kind == "stable" and direction == ANTIPARALLEL:
        threshold = 2 * d + 2
        tree = find_qualified_tree(g, threshold)
        if tree is None:
            return _no(kind, direction, d, NO_QUALIFIED_TREE, threshold=threshold)
        return _yes_tree(kind, direction, d, tree)

    if kind == "strong" and direction == ANTIPARALLEL:
        if betti_number(g) % 2 == 1:
            return _no(kind, direction, d, PARITY_OBSTRUCTION, betti=betti_number(g))
        tree = find_even_cotree_tree(g)
        if tree is None:
            return _no(kind, direction, d, NO_QUALIFIED_TREE, threshold=None)
        return _yes_tree(kind, direction, d, tree)

    # remaining cells are yes; produce a trace witness when asked
    if not witness:
        return DecisionCertificate(verdict=True, kind=kind, direction=direction, d=d)
    if direction == PARALLEL:
        trace = find_parallel_trace(g, d)
        if trace is not None and kind == "strong":
            if not classify_trace(trace).strong:
                trace = None
        if trace is None:
            spec_for_witness = TraceSpec(kind, direction, d)
            trace = _search_witness(g, spec_for_witness, budget)
        return _yes_trace(kind, direction, d, trace)
    return _yes_trace(kind, direction, d, _search_witness(g, spec, budget))


def build_antiparallel_d_stable(
    g: Graph, d: int, *, budget: int | None = None
) -> DoubleTrace | None:
    """Construct an antiparallel d-stable trace, or None when none exists.

    Pipeline: start from a minimum qualified tree at threshold 2d + 2; while
    the co-tree has an odd component, split a vertex of degree >= 2d + 2
    inside one (strictly reducing the qualified deficiency), recurse, and
    lift the recursive trace back through the identification.  The fully
    reduced graph has an all-even co-tree, where an antiparallel strong
    trace exists and is d-stable because all degrees stay above d.
    """
    require_connected(g)
    if g.num_edges == 0:
        raise EmptyGraphError("a double trace needs at least one edge")
    if d < 1:
        raise ValueError("d must be >= 1")
    if g.min_degree() <= d:
        return None
    threshold = 2 * d + 2
    certificate = qualified_deficiency(g, threshold)
    if certificate is None:
        return None
    trace = _build_on_tree(g, certificate.witness_tree, d, threshold, budget)
    cls = classify_trace(trace)
    if cls.direction != ANTIPARALLEL or cls.stability_order < d:
        raise InternalInvariantError(
            f"pipeline produced a non-conforming trace: {cls}"
        )
    return trace


def _build_on_tree(
    g: Graph, t: SpanningTree, d: int, threshold: int, budget: int | None
) -> DoubleTrace:
    odd = cotree_decomposition(g, t).odd_components()
    if not odd:
        trace = find_trace(g, TraceSpec("strong", ANTIPARALLEL), budget)
        if trace is None:
            raise InternalInvariantError(
                "all-even co-tree but no antiparallel strong trace found"
            )
        return trace
    candidates = sorted(
        v
        for comp in odd
        for v in comp.vertices
        if g.degree(v) >= threshold
    )
    if not candidates:
        raise InternalInvariantError(
            "odd component lost its high-degree vertex during the induction"
        )
    v = candidates[0]
    outcome = split_reduce_qualified(g, t, v, threshold)
    if outcome.deficiency_after >= outcome.deficiency_before:
        raise InternalInvariantError("split failed to reduce the deficiency")
    inner = _build_on_tree(
        outcome.graph_after, outcome.tree_after, d, threshold, budget
    )
    return lift_trace_through_identification(inner, outcome.new_vertices, v)


def extract_qualified_tree_from_trace(w: DoubleTrace, d: int) -> SpanningTree:
    """Turn an antiparallel d-stable trace into a qualifying spanning tree.

    Projects the trace through splits of its repetition vertices along their
    minimal repetition sets until it is strong, takes an all-even co-tree
    tree there, and transfers the tree back through the identifications.
    Every odd component of the result contains a vertex of degree at least
    2d + 2 (and there may be none at all).
    """
    if trace_direction(w) != ANTIPARALLEL:
        raise NotAntiparallelError("trace is not antiparallel")
    report = repetition_analysis(w, "components")
    if report.stability_order < d:
        raise NotStableError(d)
    return _extract_rec(w, 2 * d + 2)


def _extract_rec(w: DoubleTrace, threshold: int) -> SpanningTree:
    g = w.host
    repetition_vertices = sorted(
        v
        for v in g.vertices
        if not transition_graph_at(w, v).is_connected
    )
    if not repetition_vertices:
        tree = find_even_cotree_tree(g)
        if tree is None:
            raise InternalInvariantError(
                "strong antiparallel trace exists but no all-even co-tree tree found"
            )
        return tree
    v = repetition_vertices[0]
    parts = transition_graph_at(w, v).components
    projected = project_trace_through_split(w, v, parts)
    inner_tree = _extract_rec(projected, threshold)
    g2 = projected.host
    new_ids = fresh_vertex_ids(g, len(parts))
    protected = frozenset(
        x for x in g2.vertices if g2.degree(x) >= threshold and x not in new_ids
    )
    tree = transfer_tree_on_identification(g2, inner_tree, new_ids, v, protected)
    if not tree_is_qualified(g, tree, threshold):
        raise InternalInvariantError(
            "transferred tree lost its degree qualification"
        )
    return tree


def sufficient_four_edge_connected(g: Graph, d: int) -> bool:
    """Cheap sufficient test: 4-edge-connected, min degree above d, and a
    vertex of degree at least 2d + 2 or an even Betti number.

    Never contradicts :func:`decide_existence`: True implies the antiparallel
    d-stable cell is a yes.
    """
    require_connected(g)
    if g.num_vertices < 2:
        return False
    if g.min_degree() <= d:
        return False
    if edge_connectivity(g) < 4:
        return False
    return g.max_degree() >= 2 * d + 2 or betti_number(g) % 2 == 0


def graph_deficiency_report(g: Graph, threshold: int | None = None) -> dict:
    """Betti number and (qualified) deficiency summary for reporting."""
    certificate = graph_deficiency(g)
    report: dict = {
        "betti_number": betti_number(g),
        "deficiency": certificate.value,
        "witness_tree": [list(e) for e in certificate.witness_tree.sorted_edges()],
    }
    if threshold is not None:
        qualified = qualified_deficiency(g, threshold)
        report["qualified_threshold"] = threshold
        report["qualified_deficiency"] = (
            qualified.value if qualified is not None else "NoQualifiedTree"
        )
        if qualified is not None:
            report["qualified_witness_tree"] = [
                list(e) for e in qualified.witness_tree.sorted_edges()
            ]
    return report


def condition_table(
    g: Graph,
    d_values: list[int],
    *,
    witness: bool = False,
    budget: int | None = None,
) -> dict[tuple[str, str, int | None], DecisionCertificate]:
    """All nine cells of the matrix; stable cells once per requested d."""
    table: dict[tuple[str, str, int | None], DecisionCertificate] = {}
    for direction in ("any", PARALLEL, ANTIPARALLEL):
        table[("double", direction, None)] = decide_existence(
            g, "double", direction, witness=witness, budget=budget
        )
        for d in d_values:
            table[("stable", direction, d)] = decide_existence(
                g, "stable", direction, d, witness=witness, budget=budget
            )
        table[("strong", direction, None)] = decide_existence(
            g, "strong", direction, witness=witness, budget=budget
        )
    return table
