#!/usr/bin/env python3
"""Co-tree components, deficiency, and qualified spanning trees.

Removing a spanning tree leaves the co-tree; its components are odd or even
by edge count.  The deficiency of a tree counts its odd components, the
deficiency of a graph minimizes that over all spanning trees, and a tree is
qualified at threshold D when every odd component contains a vertex of
degree at least D.  These quantities decide which graphs admit antiparallel
strong and d-stable traces.
"""

from trace_forge import (
    betti_number,
    build_graph,
    complete_graph,
    cotree_decomposition,
    cube_graph,
    deficiency_of_tree,
    find_even_cotree_tree,
    find_qualified_tree,
    graph_deficiency,
    local_odd_even_split,
    qualified_deficiency,
    spanning_tree,
    split_reduce_deficiency,
)

k4 = complete_graph(4)
k5 = complete_graph(5)

print("=== co-trees of star trees ===")
star4 = spanning_tree(k4, [(0, 1), (0, 2), (0, 3)])
decomposition = cotree_decomposition(k4, star4)
for comp in decomposition.components:
    print("K4 co-tree component:", sorted(comp.edges),
          "odd" if comp.is_odd else "even",
          "| highest-degree vertex:", comp.witness_vertex)
print("deficiency of the star tree:", deficiency_of_tree(k4, star4))

star5 = spanning_tree(k5, [(0, w) for w in range(1, 5)])
print("K5 star co-tree components:",
      [(sorted(c.edges), c.parity) for c in cotree_decomposition(k5, star5).components])

print("\n=== graph deficiency (minimum over all spanning trees) ===")
for name, g in [("K3", complete_graph(3)), ("K4", k4), ("K5", k5), ("Q3", cube_graph())]:
    cert = graph_deficiency(g)
    print(f"{name}: betti={betti_number(g)} deficiency={cert.value} "
          f"witness={sorted(cert.witness_tree.tree_edges)}")

print("\n=== all-even co-trees and qualified trees ===")
print("K5 all-even co-tree tree:", find_even_cotree_tree(k5))
print("K4 all-even co-tree tree:", find_even_cotree_tree(k4), "(betti 3 is odd)")
print("K4 qualified at D=4:", find_qualified_tree(k4, 4), "(max degree is 3)")
print("K5 qualified deficiency at D=8:", qualified_deficiency(k5, 8))

print("\n=== detaching a vertex splits its component by parity ===")
path_tree = spanning_tree(k4, [(0, 1), (0, 2), (2, 3)])
split = local_odd_even_split(k4, path_tree, 0)
print("odd parts:", [sorted(p) for p in split.odd_parts])
print("even parts:", [sorted(p) for p in split.even_parts])

print("\n=== a split that reduces deficiency ===")
outcome = split_reduce_deficiency(k4, path_tree, 0)
print(f"deficiency {outcome.deficiency_before} -> {outcome.deficiency_after}")
print("vertex 0 split into", [sorted(p) for p in outcome.parts],
      "as new vertices", outcome.new_vertices)
print("new tree:", sorted(outcome.tree_after.tree_edges))

print("\n=== a graph whose odd components need their hub ===")
# a degree-6 hub whose five co-tree edges form one odd star component
edges = [(0, 1)] + [(1, w) for w in range(2, 7)] + [(0, w) for w in range(2, 7)]
g = build_graph(edges)
tree = spanning_tree(g, [(0, 1)] + [(1, w) for w in range(2, 7)])
print("deficiency of the given tree:", deficiency_of_tree(g, tree))
out = split_reduce_deficiency(g, tree, 0)
print(f"after splitting the hub: {out.deficiency_before} -> {out.deficiency_after}")
