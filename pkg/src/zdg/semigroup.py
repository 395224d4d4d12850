"""Commutative multiplication tables over {0} | V(G) and the realization search.

Element convention used throughout this module: element 0 is the semigroup
zero and vertex v (0-based) is element v + 1.  A table for an n-vertex graph
is a symmetric (n+1) x (n+1) matrix with an all-zero row and column for the
zero element.  The zero-divisor graph of a total table joins distinct
vertices u, v exactly when their product is 0, so a table realizes G when

  * adjacent pairs multiply to 0,
  * nonadjacent distinct pairs multiply to a nonzero element, and
  * the operation is associative.

Candidate pruning: if ab = c in an associative table then every f in N(a)
has f(ab) = (fa)b = 0, hence fc = 0, hence N(a) (and likewise N(b)) lies in
the closed neighborhood of c.  That gives the candidate sets

    D(ab)  = { c : N(a) | N(b)  subset of  N(c)|{c} }   (nonadjacent a != b)
    D(a^2) = {0} | { c : N(a)  subset of  N(c)|{c} }

which are supersets of the legal products, so searching inside them loses
no solutions.  An empty D(ab) is exactly a failure of the star condition
and refutes realizability outright.

The solver is a most-constrained-first backtracking search over the pair
and square products with two pruning layers: a unit-propagation fixpoint
that completes partially decided associativity triples and derives forced
products, and per-candidate forward filtering against the triples a value
would decide.  Exhausting the search space yields an Unsat certificate;
any table found is re-verified from scratch before being reported.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from zdg.graphs import Graph, closed_neighborhood, is_connected, open_neighborhood

UNASSIGNED = -1

ZERO_LABEL = "0"


def default_labels(n):
    return [str(v + 1) for v in range(n)]


class PartialTableError(ValueError):
    """Operation needs a total table but found unassigned products."""


class MulTable:
    """Symmetric multiplication table; entries are elements or UNASSIGNED."""

    __slots__ = ("n", "rows")

    def __init__(self, n, rows):
        self.n = n
        self.rows = [list(r) for r in rows]
        size = n + 1
        if len(self.rows) != size or any(len(r) != size for r in self.rows):
            raise ValueError("table must be (n+1) x (n+1)")

    @classmethod
    def empty(cls, g):
        """Table with only the structurally fixed products filled in.

        Zero annihilates everything and adjacent vertices multiply to 0;
        nonadjacent pairs and squares start unassigned.
        """
        n = g.n
        size = n + 1
        rows = [[UNASSIGNED] * size for _ in range(size)]
        for x in range(size):
            rows[0][x] = rows[x][0] = 0
        for u in range(n):
            for v in range(n):
                if u != v and g.has_edge(u, v):
                    rows[u + 1][v + 1] = 0
        return cls(n, rows)

    def copy(self):
        return MulTable(self.n, self.rows)

    def product(self, x, y):
        return self.rows[x][y]

    def set_product(self, x, y, value):
        self.rows[x][y] = value
        self.rows[y][x] = value

    def is_total(self):
        return all(e != UNASSIGNED for row in self.rows for e in row)

    def is_commutative(self):
        size = self.n + 1
        return all(self.rows[x][y] == self.rows[y][x]
                   for x in range(size) for y in range(x + 1, size))

    def zero_row_ok(self):
        size = self.n + 1
        return all(self.rows[0][x] == 0 and self.rows[x][0] == 0 for x in range(size))

    # -- serialization ------------------------------------------------------

    def to_json(self, labels=None):
        labels = labels or default_labels(self.n)
        name = lambda e: ZERO_LABEL if e == 0 else labels[e - 1]
        table = [[name(self.rows[u + 1][v + 1]) for v in range(self.n)]
                 for u in range(self.n)]
        return {"n": self.n, "labels": list(labels), "table": table}

    @classmethod
    def from_json(cls, obj):
        n = obj["n"]
        labels = obj.get("labels") or default_labels(n)
        if len(labels) != n:
            raise ValueError("label count does not match n")
        index = {lab: i + 1 for i, lab in enumerate(labels)}
        index[ZERO_LABEL] = 0
        t = cls.empty_square(n)
        for u in range(n):
            for v in range(n):
                entry = obj["table"][u][v]
                if entry not in index:
                    raise ValueError(f"unknown table entry {entry!r}")
                t.rows[u + 1][v + 1] = index[entry]
        return t

    @classmethod
    def empty_square(cls, n):
        size = n + 1
        rows = [[UNASSIGNED] * size for _ in range(size)]
        for x in range(size):
            rows[0][x] = rows[x][0] = 0
        return cls(n, rows)

    def to_text(self, labels=None):
        """Aligned grid over the vertex labels, zero shown as 0."""
        labels = labels or default_labels(self.n)
        name = lambda e: "." if e == UNASSIGNED else (ZERO_LABEL if e == 0 else labels[e - 1])
        width = max(len(name(e)) for row in self.rows[1:] for e in row[1:])
        width = max(width, max(len(l) for l in labels))
        head = " " * (width + 2) + " ".join(l.rjust(width) for l in labels)
        lines = [head]
        for u in range(self.n):
            cells = " ".join(name(self.rows[u + 1][v + 1]).rjust(width)
                             for v in range(self.n))
            lines.append(labels[u].rjust(width) + " | " + cells)
        return "\n".join(lines)

    def __eq__(self, other):
        return isinstance(other, MulTable) and self.n == other.n and self.rows == other.rows

    def __repr__(self):
        return f"MulTable(n={self.n})"


def table_from_products(g, pair_products, squares):
    """Assemble a total table from per-pair products given in element space."""
    t = MulTable.empty(g)
    for (u, v), e in pair_products.items():
        t.set_product(u + 1, v + 1, e)
    for v, e in squares.items():
        t.set_product(v + 1, v + 1, e)
    if not t.is_total():
        raise PartialTableError("missing products")
    return t


def row_spectrum(t, x):
    """Products of element x with each vertex, in label order."""
    if not t.is_total():
        raise PartialTableError("spectrum of a partial table")
    return tuple(t.rows[x][v] for v in range(1, t.n + 1))


def associativity_violation(t):
    """Lexicographically first triple (x,y,z) with (xy)z != x(yz), else None."""
    if not t.is_total():
        raise PartialTableError("associativity of a partial table")
    rows = t.rows
    size = t.n + 1
    for x in range(size):
        rx = rows[x]
        for y in range(size):
            xy = rx[y]
            ry = rows[y]
            rxy = rows[xy]
            for z in range(size):
                if rxy[z] != rx[ry[z]]:
                    return (x, y, z)
    return None


def is_associative(t):
    return associativity_violation(t) is None


def graph_of_table(t):
    """Graph with an edge u-v exactly where the table has a zero product."""
    if not t.is_total():
        raise PartialTableError("graph of a partial table")
    n = t.n
    adj = [0] * n
    for u in range(n):
        for v in range(n):
            if u != v and t.rows[u + 1][v + 1] == 0:
                adj[u] |= 1 << v
    return Graph(n, adj)


def verify_witness(g, t):
    """Check a claimed realization end to end.

    Returns (ok, diagnostic).  Passing requires commutativity, a correct
    zero row, associativity, and exact labeled equality of the zero pattern
    with g.
    """
    if t.n != g.n:
        raise ValueError(f"table is for {t.n} vertices, graph has {g.n}")
    if not t.is_total():
        return False, "table has unassigned products"
    if not t.zero_row_ok():
        return False, "zero is not absorbing"
    if not t.is_commutative():
        return False, "table is not commutative"
    viol = associativity_violation(t)
    if viol is not None:
        return False, f"associativity fails at {viol}"
    got = graph_of_table(t)
    if got != g:
        return False, "zero pattern does not match the graph"
    return True, "ok"


# ---------------------------------------------------------------------------
# candidate sets
# ---------------------------------------------------------------------------


def compute_candidates(g):
    """Candidate products for every nonadjacent pair and every square.

    Keys are vertex pairs (u, v) with u <= v; u < v entries are the
    nonadjacent pairs, (v, v) entries the squares.  Values are ascending
    tuples of elements (0 only ever appears for squares).
    """
    n = g.n
    closed = [closed_neighborhood(g, z) for z in range(n)]
    out = {}
    for u in range(n):
        for v in range(u + 1, n):
            if g.has_edge(u, v):
                continue
            union = open_neighborhood(g, u) | open_neighborhood(g, v)
            out[(u, v)] = tuple(z + 1 for z in range(n) if union & ~closed[z] == 0)
    for v in range(n):
        nbhd = open_neighborhood(g, v)
        out[(v, v)] = (0,) + tuple(z + 1 for z in range(n) if nbhd & ~closed[z] == 0)
    return out


# ---------------------------------------------------------------------------
# realization search
# ---------------------------------------------------------------------------


@dataclass
class WitnessCertificate:
    """Sat carries a verified table; Unsat attests how the search ended."""

    kind: str  # "sat" | "unsat"
    table: MulTable | None = None
    nodes_explored: int = 0
    exhaustive: bool = False

    @property
    def sat(self):
        return self.kind == "sat"

    def to_json(self, labels=None):
        if self.sat:
            obj = {"status": "sat", "nodes_explored": self.nodes_explored}
            obj.update(self.table.to_json(labels))
            return obj
        return {"status": "unsat", "nodes_explored": self.nodes_explored,
                "exhaustive": self.exhaustive}


class _SearchState:
    """Mutable state owned by one find_realization call (single-threaded)."""

    __slots__ = ("n", "size", "m", "variables", "var_index", "domains",
                 "unassigned", "trail", "inner_triples", "triples", "nodes",
                 "budget", "solution", "aborted")

    def __init__(self, g, candidates, budget):
        n = g.n
        size = n + 1
        self.n = n
        self.size = size
        self.budget = budget
        self.nodes = 0
        self.solution = None
        self.aborted = False

        # flat (n+1)^2 table, UNASSIGNED where a decision is pending
        m = [UNASSIGNED] * (size * size)
        for x in range(size):
            m[x] = 0
            m[x * size] = 0
        for u in range(n):
            for v in range(n):
                if u != v and g.has_edge(u, v):
                    m[(u + 1) * size + (v + 1)] = 0
        self.m = m

        self.variables = []
        self.var_index = {}
        self.domains = []
        for (u, v), cand in sorted(candidates.items()):
            key = (u + 1, v + 1)
            self.var_index[key] = len(self.variables)
            self.variables.append(key)
            self.domains.append(tuple(cand))
        self.unassigned = set(range(len(self.variables)))
        self.trail = []

        # representative triples (x,y,z), x <= z: by commutativity the mirror
        # triple states the same equation, so each is checked once
        self.triples = [(x, y, z)
                        for x in range(1, size)
                        for z in range(x, size)
                        for y in range(1, size)]
        per_var = {key: [] for key in self.variables}
        for tr in self.triples:
            x, y, z = tr
            for key in ((x, y) if x <= y else (y, x)), ((y, z) if y <= z else (z, y)):
                if key in per_var and (not per_var[key] or per_var[key][-1] != tr):
                    per_var[key].append(tr)
        self.inner_triples = [per_var[key] for key in self.variables]

    # -- assignment plumbing ------------------------------------------------

    def assign(self, var, value):
        x, y = self.variables[var]
        size = self.size
        self.m[x * size + y] = value
        self.m[y * size + x] = value
        self.unassigned.discard(var)
        self.trail.append(var)

    def undo_to(self, mark):
        size = self.size
        while len(self.trail) > mark:
            var = self.trail.pop()
            x, y = self.variables[var]
            self.m[x * size + y] = UNASSIGNED
            self.m[y * size + x] = UNASSIGNED
            self.unassigned.add(var)

    def force(self, x, y, value):
        """Propagation derived m[x][y] = value; returns False on conflict."""
        key = (x, y) if x <= y else (y, x)
        var = self.var_index[key]
        if value not in self.domains[var]:
            return False
        self.assign(var, value)
        return True

    # -- pruning ------------------------------------------------------------

    def propagate(self):
        """Complete decided triples and derive forced products to a fixpoint."""
        m = self.m
        size = self.size
        changed = True
        while changed:
            changed = False
            for x, y, z in self.triples:
                a = m[x * size + y]
                b = m[y * size + z]
                if a == UNASSIGNED and b == UNASSIGNED:
                    continue
                left = m[a * size + z] if a != UNASSIGNED else UNASSIGNED
                right = m[x * size + b] if b != UNASSIGNED else UNASSIGNED
                if left != UNASSIGNED:
                    if right != UNASSIGNED:
                        if left != right:
                            return False
                    elif b != UNASSIGNED:
                        if not self.force(x, b, left):
                            return False
                        changed = True
                elif right != UNASSIGNED and a != UNASSIGNED:
                    if not self.force(a, z, right):
                        return False
                    changed = True
        return True

    def value_survives(self, var, value):
        """Would assigning value immediately violate a decided triple?"""
        m = self.m
        size = self.size
        vx, vy = self.variables[var]
        m[vx * size + vy] = value
        m[vy * size + vx] = value
        ok = True
        for x, y, z in self.inner_triples[var]:
            a = m[x * size + y]
            b = m[y * size + z]
            if a == UNASSIGNED or b == UNASSIGNED:
                continue
            left = m[a * size + z]
            right = m[x * size + b]
            if left != UNASSIGNED and right != UNASSIGNED and left != right:
                ok = False
                break
        m[vx * size + vy] = UNASSIGNED
        m[vy * size + vx] = UNASSIGNED
        return ok

    # -- search -------------------------------------------------------------

    def search(self):
        """Depth-first search; returns True when a table has been found."""
        if not self.propagate():
            return False
        if not self.unassigned:
            if self._check_full():
                self.solution = self._extract_table()
                return True
            return False

        best_var = None
        best_values = None
        for var in sorted(self.unassigned):
            values = [c for c in self.domains[var] if self.value_survives(var, c)]
            if not values:
                return False
            if best_values is None or len(values) < len(best_values):
                best_var = var
                best_values = values
                if len(values) == 1:
                    break

        for value in best_values:
            self.nodes += 1
            if self.budget is not None and self.nodes > self.budget:
                self.aborted = True
                return False
            mark = len(self.trail)
            self.assign(best_var, value)
            if self.search():
                return True
            self.undo_to(mark)
            if self.aborted:
                return False
        return False

    def _check_full(self):
        m = self.m
        size = self.size
        for x, y, z in self.triples:
            if m[m[x * size + y] * size + z] != m[x * size + m[y * size + z]]:
                return False
        return True

    def _extract_table(self):
        size = self.size
        rows = [[self.m[x * size + y] for y in range(size)] for x in range(size)]
        return MulTable(self.n, rows)


def find_realization(g, budget=None):
    """Search for a semigroup table realizing g.

    Returns a WitnessCertificate: Sat with a verified table, Unsat with
    exhaustive=True when the full pruned space was explored, or Unsat with
    exhaustive=False when the node budget ran out first.  An empty candidate
    set for some nonadjacent pair (= star condition failure) is an immediate
    exhaustive Unsat.
    """
    if not is_connected(g):
        raise ValueError("find_realization needs a connected graph")
    candidates = compute_candidates(g)
    for (u, v), cand in candidates.items():
        if u != v and not cand:
            return WitnessCertificate("unsat", nodes_explored=0, exhaustive=True)
    state = _SearchState(g, candidates, budget)
    found = state.search()
    if found:
        table = state.solution
        ok, why = verify_witness(g, table)
        if not ok:  # cannot happen if the search is sound; refuse to lie
            raise AssertionError(f"solver produced an invalid witness: {why}")
        return WitnessCertificate("sat", table=table, nodes_explored=state.nodes)
    return WitnessCertificate("unsat", nodes_explored=state.nodes,
                              exhaustive=not state.aborted)


def brute_force_realization(g):
    """Pruning-free oracle: try every zero-pattern-consistent symmetric table.

    Independent of the candidate machinery by design; nonadjacent products
    range over all vertices and squares over all elements, and each complete
    table is tested for associativity directly.  Only sensible for n <= 4.
    """
    if not is_connected(g):
        raise ValueError("brute_force_realization needs a connected graph")
    n = g.n
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if not g.has_edge(u, v)]
    slots = [(u + 1, v + 1) for u, v in pairs] + [(v + 1, v + 1) for v in range(n)]
    domains = [range(1, n + 1)] * len(pairs) + [range(0, n + 1)] * n

    t = MulTable.empty(g)

    def fill(i):
        if i == len(slots):
            if is_associative(t):
                return t.copy()
            return None
        x, y = slots[i]
        for value in domains[i]:
            t.set_product(x, y, value)
            got = fill(i + 1)
            if got is not None:
                return got
        t.set_product(x, y, UNASSIGNED)
        return None

    table = fill(0)
    if table is None:
        return WitnessCertificate("unsat", exhaustive=True)
    return WitnessCertificate("sat", table=table)


def load_table(path):
    with open(path, "r", encoding="utf-8") as fh:
        return MulTable.from_json(json.load(fh))
