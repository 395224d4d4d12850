"""Tour of the necessary conditions and how they relate.

A zero-divisor graph must be connected, have diameter at most 3, have its
cycle-core covered by triangles and quadrilaterals, and satisfy the star
condition: every nonadjacent pair x, y needs a vertex z whose closed
neighborhood contains N(x) | N(y).  The star condition implies the other
two nontrivial conditions, but none of the converses hold; the three
graphs below witness each failed converse.
"""

from zdg.graphs import Graph
from zdg.conditions import check_all_conditions


def show(name, g):
    r = check_all_conditions(g)
    print(f"{name:28s} connected={r.connected} diameter3={r.diameter3} "
          f"core_ok={r.core_ok} star_ok={r.star_ok}", end="")
    if r.failing_pair:
        print(f"  first failing pair: {r.failing_pair}")
    else:
        print()


# diameter fine, star fails: a 7-cycle-like graph with one chord pattern
lemma_7v = Graph.from_neighborhoods([[1, 4, 6], [0, 2], [1, 3], [2, 5],
                                     [0, 5], [3, 4, 6], [0, 5]])
show("diameter<=3, not star", lemma_7v)

# the 6-cycle: diameter fine, but its only cycle is a hexagon, so the
# core is not a union of triangles and quadrilaterals
hexagon = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])
show("diameter<=3, core fails", hexagon)

# an 11-vertex graph built from quadrilaterals whose diameter is 4
lemma_11v = Graph.from_neighborhoods([
    [1, 2], [0, 2, 3, 4], [0, 1, 5, 6], [1, 4, 7], [1, 3, 5, 8],
    [2, 4, 6, 8], [2, 5, 9], [3, 8, 10], [4, 5, 7, 9, 10], [6, 8, 10],
    [7, 8, 9]])
show("core ok, diameter 4", lemma_11v)

# a star graph satisfies everything: the hub witnesses every pair
star = Graph.from_edges(7, [(0, i) for i in range(1, 7)])
show("star graph (all pass)", star)

print()
print("star condition witnesses for the star graph, pair by pair:")
r = check_all_conditions(star)
for pair, zs in sorted(r.star_witnesses.items()):
    print(f"  pair {pair}: witnesses {sorted(zs)}")
