"""Necessary conditions for a graph to be a zero-divisor graph.

Four conditions are checked: connectivity, diameter at most 3, the
cycle-core condition (every edge lying on a cycle sits on a triangle or
quadrilateral, and everything off the core is a pendant vertex), and the
neighborhood-domination condition we call the star condition:

    for every nonadjacent pair x, y there is a witness z
    with N(x) | N(y) contained in N(z) | {z}.

The star condition is the strongest of the four: on connected graphs it
implies the other two nontrivial ones, while none of the converses hold.
Classification gates only on connectivity + star; the core condition is
advisory (see ConditionReport.core_ok).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from zdg.graphs import (
    Graph,
    bfs_distances,
    bits,
    closed_neighborhood,
    diameter,
    is_connected,
    open_neighborhood,
    popcount,
)


@dataclass
class ConditionReport:
    connected: bool
    diameter3: bool = False
    core_ok: bool = False
    star_ok: bool = False
    # witnesses z for each nonadjacent pair, keyed (u, v) with u < v
    star_witnesses: dict = field(default_factory=dict)
    failing_pair: tuple | None = None

    def to_json(self):
        return {
            "connected": self.connected,
            "diameter3": self.diameter3,
            "core_ok": self.core_ok,
            "star_ok": self.star_ok,
            "star_witnesses": {f"{u},{v}": sorted(ws)
                               for (u, v), ws in sorted(self.star_witnesses.items())},
            "failing_pair": list(self.failing_pair) if self.failing_pair else None,
        }


class DisconnectedError(ValueError):
    """Raised when a condition that presumes connectivity gets a disconnected graph."""


def _require_connected(g):
    if not is_connected(g):
        raise DisconnectedError("graph is disconnected")


def check_diameter3(g):
    """Every pair joined by a path of at most 3 edges."""
    _require_connected(g)
    return diameter(g) <= 3


def _core_edges(g):
    """Edges lying on at least one cycle, i.e. the non-bridge edges."""
    core = set()
    for u, v in g.edges():
        # (u,v) is on a cycle iff u reaches v without using the edge itself
        pruned_adj = list(g.adj)
        pruned_adj[u] &= ~(1 << v)
        pruned_adj[v] &= ~(1 << u)
        pruned = Graph(g.n, pruned_adj)
        if bfs_distances(pruned, u)[v] is not None:
            core.add((u, v))
    return core


def check_core_condition(g):
    """Core edges covered by triangles/quadrilaterals; non-core vertices are ends.

    Acyclic graphs pass vacuously.  The core is taken to be the union of
    all cycles: every edge on some cycle plus its endpoints.
    """
    _require_connected(g)
    core = _core_edges(g)
    if not core:
        return True
    core_adj = [0] * g.n
    for u, v in core:
        core_adj[u] |= 1 << v
        core_adj[v] |= 1 << u
    core_vertices = {v for v in range(g.n) if core_adj[v]}
    for v in range(g.n):
        if v not in core_vertices and popcount(g.adj[v]) != 1:
            return False
    for u, v in core:
        common = core_adj[u] & core_adj[v]
        on_triangle = common != 0
        on_quad = False
        if not on_triangle:
            # u - v - b - a - u with all four edges in the core
            for a in bits(core_adj[u]):
                if a == v:
                    continue
                if core_adj[a] & core_adj[v] & ~(1 << u):
                    on_quad = True
                    break
        if not (on_triangle or on_quad):
            return False
    return True


def check_star_condition(g):
    """Witness map for every nonadjacent pair; star_ok iff none is empty."""
    _require_connected(g)
    report = ConditionReport(connected=True, diameter3=check_diameter3(g),
                             core_ok=check_core_condition(g))
    report.star_ok = True
    closed = [closed_neighborhood(g, z) for z in range(g.n)]
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            union = open_neighborhood(g, u) | open_neighborhood(g, v)
            witnesses = frozenset(z for z in range(g.n) if union & ~closed[z] == 0)
            report.star_witnesses[(u, v)] = witnesses
            if not witnesses and report.failing_pair is None:
                report.star_ok = False
                report.failing_pair = (u, v)
    return report


def check_all_conditions(g):
    """Full report; on a disconnected graph the other flags stay False."""
    if not is_connected(g):
        return ConditionReport(connected=False)
    return check_star_condition(g)
