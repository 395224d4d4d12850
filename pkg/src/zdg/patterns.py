"""Structure families that settle realizability without a table search.

Recognizers detect a family, and for the realizable families they build a
witness table constructively and verify it before answering; when a
constructive scheme is not known for a subcase the table is obtained from
the search instead, so the emitted certificate is verified either way.
The two impossibility families (complete core with ends on three or more
vertices, complete bipartite core with two or more ends on two or more
vertices) report realizable=False without a table; classification trusts
those refutations only behind an explicit flag and otherwise confirms them
by exhaustive search.

Also here: the twin-duplication construction (a realized graph plus an
open twin of x when x^2 != 0, a closed twin when x^2 = 0, products copied
from x) and pendant-vertex emanation, both used to transfer witnesses
between sizes.
"""

from __future__ import annotations

from dataclasses import dataclass

from zdg.graphs import (
    add_vertex,
    bits,
    closed_neighborhood,
    degree,
    is_connected,
    max_degree,
    open_neighborhood,
)
from zdg.conditions import check_star_condition
from zdg.semigroup import MulTable, UNASSIGNED, verify_witness

FAMILY_STAR_REFINEMENT = "StarRefinement"
FAMILY_DOUBLE_STAR = "DoubleStar"
FAMILY_BIPARTITE_ONE_VERTEX = "CompleteBipartitePlusEndsOneVertex"
FAMILY_BIPARTITE_TWO_VERTICES = "BipartitePlusEndsTwoVertices"
FAMILY_COMPLETE_AT_MOST_TWO = "CompletePlusEndsAtMostTwoVertices"
FAMILY_K3_THREE_ENDS = "K3PlusEndsThreeVertices"
FAMILY_COMPLETE_THREE_PLUS = "CompletePlusEndsThreePlusVertices"
FAMILY_DUPLICATION = "Duplication"
FAMILY_NONE = "None"


@dataclass
class PatternVerdict:
    family: str
    realizable: bool | None = None
    table: MulTable | None = None
    detail: dict | None = None

    @property
    def recognized(self):
        return self.family != FAMILY_NONE


def _verified(g, table):
    ok, _ = verify_witness(g, table)
    return table if ok else None


def _solver_table(g):
    # local import: patterns is imported by the solver's callers, not vice versa
    from zdg.semigroup import find_realization

    cert = find_realization(g)
    return cert.table if cert.sat else None


# ---------------------------------------------------------------------------
# star refinements and double stars
# ---------------------------------------------------------------------------


def recognize_star_refinement(g):
    """Witness table when some vertex is adjacent to every other vertex.

    Construction: the dominating vertex c annihilates everything, every
    other product lands on c.  Any three-factor product is then 0, so
    associativity is immediate; the table is verified all the same, with
    the search as a fallback that has never been needed.
    """
    if not is_connected(g):
        return None
    n = g.n
    center = None
    for v in range(n):
        if degree(g, v) == n - 1:
            center = v
            break
    if center is None:
        return None
    c = center + 1
    t = MulTable.empty(g)
    t.set_product(c, c, 0)
    for u in range(1, n + 1):
        for v in range(u, n + 1):
            if t.product(u, v) == UNASSIGNED:
                t.set_product(u, v, c)
    return _verified(g, t) or _solver_table(g)


def _pendant_split(g, centers):
    """Leaves of g grouped by which center they hang from; None if not a split."""
    groups = {c: [] for c in centers}
    for v in range(g.n):
        if v in centers:
            continue
        if degree(g, v) != 1:
            return None
        nbr = bits(open_neighborhood(g, v))[0]
        if nbr not in groups:
            return None
        groups[nbr].append(v)
    return groups


def recognize_double_star(g):
    """Witness table for two stars whose centers share an edge.

    Strict two-center reading: both stars must have at least one leaf, so
    a plain star is left to recognize_star_refinement.
    """
    if not is_connected(g) or g.n < 4:
        return None
    deg = [degree(g, v) for v in range(g.n)]
    centers = [v for v in range(g.n) if deg[v] > 1]
    if len(centers) != 2:
        return None
    c1, c2 = centers
    if not g.has_edge(c1, c2):
        return None
    groups = _pendant_split(g, centers)
    if groups is None or not groups[c1] or not groups[c2]:
        return None
    a_side, b_side = groups[c1], groups[c2]
    e1, e2 = c1 + 1, c2 + 1
    base = a_side[0] + 1
    t = MulTable.empty(g)
    t.set_product(e1, e1, e1)
    t.set_product(e2, e2, 0)
    for a in a_side:
        t.set_product(a + 1, e2, e2)
        for a2 in a_side:
            t.set_product(a + 1, a2 + 1, base)
    for b in b_side:
        t.set_product(b + 1, e1, e1)
        for b2 in b_side:
            t.set_product(b + 1, b2 + 1, e1)
        for a in a_side:
            t.set_product(a + 1, b + 1, e2)
    return _verified(g, t) or _solver_table(g)


# ---------------------------------------------------------------------------
# complete and complete bipartite cores with pendant ends
# ---------------------------------------------------------------------------


def _strip_ends(g):
    """(core vertices, ends, attachment map); None when an end hangs on an end."""
    ends = [v for v in range(g.n) if degree(g, v) == 1]
    core = [v for v in range(g.n) if degree(g, v) != 1]
    if not core:
        return None  # K2 or a single edge: treat elsewhere
    attach = {}
    for e in ends:
        nbr = bits(open_neighborhood(g, e))[0]
        if nbr not in core:
            return None
        attach[e] = nbr
    return core, ends, attach


def _is_complete(g, vertices):
    return all(g.has_edge(u, v) for i, u in enumerate(vertices) for v in vertices[i + 1:])


def _bipartition(g, vertices):
    """Two-coloring of the induced subgraph; None if an odd cycle intervenes."""
    color = {}
    order = sorted(vertices)
    vset = set(vertices)
    for start in order:
        if start in color:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            u = queue.pop()
            for v in bits(open_neighborhood(g, u)):
                if v not in vset:
                    continue
                if v not in color:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    part0 = sorted(v for v in vertices if color[v] == 0)
    part1 = sorted(v for v in vertices if color[v] == 1)
    return part0, part1


def _is_complete_bipartite(g, part0, part1):
    if not part0 or not part1:
        return False
    for u in part0:
        for v in part1:
            if not g.has_edge(u, v):
                return False
    return True


def recognize_complete_bipartite_plus_ends(g):
    """Complete bipartite core plus pendant ends.

    Realizable when every end hangs from one shared vertex (or there are no
    ends); never realizable once two or more ends hang from two or more
    distinct vertices.  One end total is the one-vertex case.
    """
    if not is_connected(g):
        return PatternVerdict(FAMILY_NONE)
    stripped = _strip_ends(g)
    if stripped is None:
        return PatternVerdict(FAMILY_NONE)
    core, ends, attach = stripped
    parts = _bipartition(g, core)
    if parts is None:
        return PatternVerdict(FAMILY_NONE)
    part0, part1 = parts
    if not _is_complete_bipartite(g, part0, part1):
        return PatternVerdict(FAMILY_NONE)
    attach_vertices = sorted(set(attach.values()))
    if len(ends) >= 2 and len(attach_vertices) >= 2:
        return PatternVerdict(FAMILY_BIPARTITE_TWO_VERTICES, realizable=False,
                              detail={"attach": attach_vertices})
    # all ends (if any) share one attachment vertex
    if attach_vertices:
        z = attach_vertices[0]
        zpart, other = (part0, part1) if z in part0 else (part1, part0)
    else:
        z = part0[0]
        zpart, other = part0, part1
    table = _bipartite_table(g, zpart, other, z, ends)
    table = _verified(g, table) or _solver_table(g)
    return PatternVerdict(FAMILY_BIPARTITE_ONE_VERTEX, realizable=True, table=table,
                          detail={"attach": attach_vertices})


def _bipartite_table(g, zpart, other, z, ends):
    """Witness scheme for a complete bipartite core with ends on z.

    z absorbs its own part, the first vertex of the opposite part absorbs
    that part together with the ends, and cross products fall on z's side.
    """
    t = MulTable.empty(g)
    ze = z + 1
    q1 = other[0] + 1
    rest = [v + 1 for v in zpart if v != z]
    p1 = rest[0] if rest else None
    t.set_product(ze, ze, 0)
    for x in rest:
        t.set_product(ze, x, ze)
        for y in rest:
            t.set_product(x, y, p1)
    for u in other:
        for v in other:
            t.set_product(u + 1, v + 1, q1)
    for e in ends:
        ee = e + 1
        t.set_product(ee, ee, q1)
        for u in other:
            t.set_product(ee, u + 1, q1)
        for e2 in ends:
            t.set_product(ee, e2 + 1, q1)
        for x in rest:
            t.set_product(ee, x, ze)
    return t


def recognize_complete_plus_ends(g):
    """Complete core K_m plus pendant ends.

    Realizable when the ends hang from at most two vertices, and for m = 3
    regardless of how the ends are spread; never realizable for m >= 4 with
    ends on three or more distinct vertices.
    """
    if not is_connected(g):
        return PatternVerdict(FAMILY_NONE)
    stripped = _strip_ends(g)
    if stripped is None:
        return PatternVerdict(FAMILY_NONE)
    core, ends, attach = stripped
    if len(core) < 2 or not _is_complete(g, core):
        return PatternVerdict(FAMILY_NONE)
    attach_vertices = sorted(set(attach.values()))
    m = len(core)
    if m >= 4 and len(attach_vertices) >= 3:
        return PatternVerdict(FAMILY_COMPLETE_THREE_PLUS, realizable=False,
                              detail={"attach": attach_vertices})
    if m == 3 and len(attach_vertices) == 3:
        table = _solver_table(g)
        return PatternVerdict(FAMILY_K3_THREE_ENDS, realizable=True, table=table,
                              detail={"attach": attach_vertices})
    if len(attach_vertices) <= 1:
        table = _complete_one_vertex_table(g, core, ends, attach)
        table = _verified(g, table) or _solver_table(g)
    else:
        table = _solver_table(g)
    return PatternVerdict(FAMILY_COMPLETE_AT_MOST_TWO, realizable=True, table=table,
                          detail={"attach": attach_vertices})


def _complete_one_vertex_table(g, core, ends, attach):
    """Null core; every undetermined product falls on the attachment vertex."""
    t = MulTable.empty(g)
    for u in core:
        for v in core:
            t.set_product(u + 1, v + 1, 0)
    if ends:
        k1 = attach[ends[0]] + 1
        for e in ends:
            ee = e + 1
            t.set_product(ee, ee, k1)
            for u in core:
                if u + 1 != k1:
                    t.set_product(ee, u + 1, k1)
            for e2 in ends:
                t.set_product(ee, e2 + 1, k1)
    return t


# ---------------------------------------------------------------------------
# twin duplication and end emanation
# ---------------------------------------------------------------------------


def duplicate_vertex(g, t, x):
    """Extend a verified witness by a twin of x.

    The new vertex y gets N(y) = N(x) when x^2 != 0 and N(y) = N(x) | {x}
    when x^2 = 0; its products copy x's row, with xy = y^2 = x^2.  Returns
    the extended graph and its (verified) extended table.
    """
    ok, why = verify_witness(g, t)
    if not ok:
        raise ValueError(f"not a valid witness: {why}")
    if not 0 <= x < g.n:
        raise ValueError(f"vertex {x} out of range")
    xe = x + 1
    xsq = t.product(xe, xe)
    mask = open_neighborhood(g, x)
    if xsq == 0:
        mask |= 1 << x
    g2 = add_vertex(g, mask)
    n2 = g.n + 1
    ye = n2
    rows = [row[:] + [UNASSIGNED] for row in t.rows]
    rows.append([UNASSIGNED] * (n2 + 1))
    t2 = MulTable(n2, rows)
    t2.set_product(0, ye, 0)
    for z in range(1, g.n + 1):
        if z != xe:
            t2.set_product(ye, z, t.product(xe, z))
    t2.set_product(xe, ye, xsq)
    t2.set_product(ye, ye, xsq)
    ok, why = verify_witness(g2, t2)
    if not ok:
        raise AssertionError(f"duplication produced an invalid witness: {why}")
    return g2, t2


def find_duplication_parent(g):
    """First twin pair (x, y, mode): y duplicates x, so g reduces to g - y.

    Open twins share the open neighborhood and are nonadjacent; closed
    twins are adjacent with equal closed neighborhoods.
    """
    for x in range(g.n):
        for y in range(x + 1, g.n):
            if g.adj[x] == g.adj[y]:
                return x, y, "open"
            if g.has_edge(x, y) and closed_neighborhood(g, x) == closed_neighborhood(g, y):
                return x, y, "closed"
    return None


def emanate_end(g, x):
    """Attach a new pendant vertex to x."""
    if not 0 <= x < g.n:
        raise ValueError(f"vertex {x} out of range")
    return add_vertex(g, 1 << x)


def lemma_end_preserves_star(g, x):
    """Emanating an end at a maximum-degree vertex keeps the star condition.

    Property-test helper, not a production path: raises if the premises
    (g satisfies the star condition, x has maximum degree) do not hold,
    and otherwise returns whether the extended graph still satisfies it.
    """
    if degree(g, x) != max_degree(g):
        raise ValueError("x must have maximum degree")
    if not check_star_condition(g).star_ok:
        raise ValueError("g must satisfy the star condition")
    return check_star_condition(emanate_end(g, x)).star_ok


def recognize(g):
    """Run the realizable-family recognizers in order; first hit wins."""
    table = recognize_star_refinement(g)
    if table is not None:
        return PatternVerdict(FAMILY_STAR_REFINEMENT, realizable=True, table=table)
    table = recognize_double_star(g)
    if table is not None:
        return PatternVerdict(FAMILY_DOUBLE_STAR, realizable=True, table=table)
    verdict = recognize_complete_bipartite_plus_ends(g)
    if verdict.recognized:
        return verdict
    verdict = recognize_complete_plus_ends(g)
    if verdict.recognized:
        return verdict
    return PatternVerdict(FAMILY_NONE)
