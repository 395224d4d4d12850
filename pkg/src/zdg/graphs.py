"""Small simple undirected graphs on at most 12 vertices.

Vertices are 0-based ints.  The adjacency matrix is stored as one int
bitmask per row, so neighborhood operations are single machine-word ops
and graphs are cheap to hash and compare.  Everything here is immutable
and pure; graphs can be shared freely across workers.

Vertex sets are plain int bitmasks over 0..n-1 (bit v set <=> v in set).
Unreachable distances are reported as None, never as a large number.
"""

from __future__ import annotations

import itertools
from collections import deque

MAX_VERTICES = 12


def bits(mask):
    """Indices of set bits, ascending."""
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def popcount(mask):
    return bin(mask).count("1")


class Graph:
    """Immutable simple graph: vertex count n and bitmask adjacency rows."""

    __slots__ = ("n", "adj")

    def __init__(self, n, adj):
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} out of range 1..{MAX_VERTICES}")
        adj = tuple(adj)
        if len(adj) != n:
            raise ValueError("adjacency row count does not match n")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"row {v} has bits outside 0..{n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for u in range(n):
            for v in range(u + 1, n):
                if (adj[u] >> v & 1) != (adj[v] >> u & 1):
                    raise ValueError(f"asymmetric adjacency at ({u},{v})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph, (self.n, self.adj))

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph({self.n}, edges={self.edges()})"

    @classmethod
    def from_edges(cls, n, edges):
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @classmethod
    def from_neighborhoods(cls, neighborhoods):
        """Build from per-vertex neighbor lists, insisting they are symmetric.

        Fixture files transcribe neighbor lists verbatim; an asymmetric list
        is a transcription error and must not pass silently.
        """
        n = len(neighborhoods)
        adj = [0] * n
        for v, nbrs in enumerate(neighborhoods):
            for u in nbrs:
                adj[v] |= 1 << u
        g = cls(n, adj)  # symmetry validated by the constructor
        return g

    def edges(self):
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n)
                if self.adj[u] >> v & 1]

    def edge_count(self):
        return sum(popcount(row) for row in self.adj) // 2

    def has_edge(self, u, v):
        return bool(self.adj[u] >> v & 1)


def open_neighborhood(g, v):
    """N(v) as a bitmask; v itself is never included."""
    return g.adj[v]


def closed_neighborhood(g, v):
    """N(v) together with v itself."""
    return g.adj[v] | (1 << v)


def degree(g, v):
    return popcount(g.adj[v])


def max_degree(g):
    return max(popcount(row) for row in g.adj)


def is_connected(g):
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def bfs_distances(g, src):
    """Distances from src; None where unreachable."""
    dist = [None] * g.n
    dist[src] = 0
    q = deque([src])
    while q:
        u = q.popleft()
        for v in bits(g.adj[u]):
            if dist[v] is None:
                dist[v] = dist[u] + 1
                q.append(v)
    return dist


def distance(g, u, v):
    """Shortest-path length, or None when u and v are in different components."""
    return bfs_distances(g, u)[v]


def diameter(g):
    """Max pairwise distance; None if g is disconnected."""
    best = 0
    for u in range(g.n):
        dist = bfs_distances(g, u)
        for d in dist:
            if d is None:
                return None
            best = max(best, d)
    return best


def permuted(g, perm):
    """Relabel: new vertex i is old vertex perm[i]."""
    n = g.n
    adj = [0] * n
    for i in range(n):
        row = g.adj[perm[i]]
        new_row = 0
        for j in range(n):
            if row >> perm[j] & 1:
                new_row |= 1 << j
        adj[i] = new_row
    return Graph(n, adj)


def add_vertex(g, neighbor_mask):
    """Graph on n+1 vertices; the new vertex is adjacent to neighbor_mask."""
    n = g.n
    adj = list(g.adj)
    for v in bits(neighbor_mask):
        adj[v] |= 1 << n
    adj.append(neighbor_mask)
    return Graph(n + 1, adj)


def remove_vertex(g, x):
    """Delete vertex x, shifting higher labels down by one."""
    if g.n == 1:
        raise ValueError("cannot remove the last vertex")
    keep = [v for v in range(g.n) if v != x]
    adj = []
    for v in keep:
        row = 0
        for j, u in enumerate(keep):
            if g.adj[v] >> u & 1:
                row |= 1 << j
        adj.append(row)
    return Graph(g.n - 1, adj)


# ---------------------------------------------------------------------------
# canonical labeling
#
# Iterated neighbor-color refinement splits the vertices into classes that any
# isomorphism must respect; the canonical labeling is then the class-respecting
# permutation minimizing the upper-triangle code.  Interchangeable twins inside
# a class are pinned to one relative order, which keeps complete and empty
# blocks from exploding the permutation product.  Worst case for n=7 is the
# 5040-permutation sweep on a regular graph, which is fine: correctness is
# prioritized over sophistication at this scale.
# ---------------------------------------------------------------------------


def _refine_classes(g):
    """Vertex classes ordered by a label-invariant signature."""
    n = g.n
    colors = [popcount(g.adj[v]) for v in range(n)]
    while True:
        tags = [(colors[v], tuple(sorted(colors[u] for u in bits(g.adj[v]))))
                for v in range(n)]
        order = sorted(set(tags))
        new_colors = [order.index(t) for t in tags]
        if len(set(new_colors)) == len(set(colors)):
            colors = new_colors
            break
        colors = new_colors
    classes = {}
    for v in range(n):
        classes.setdefault(colors[v], []).append(v)
    return [classes[c] for c in sorted(classes)]


def _twin_groups(g, cls):
    """Group class members that are open or closed twins (interchangeable)."""
    groups = []
    for v in cls:
        placed = False
        for grp in groups:
            u = grp[0]
            open_twin = g.adj[u] == g.adj[v]
            mutual = 1 << u | 1 << v
            closed_twin = (g.adj[u] | mutual) == (g.adj[v] | mutual) and g.has_edge(u, v)
            if open_twin or closed_twin:
                grp.append(v)
                placed = True
                break
        if not placed:
            groups.append([v])
    return groups


def _distinct_orderings(groups):
    """All orderings of the class that differ up to twin interchange."""
    if len(groups) == 1:
        yield list(groups[0])
        return
    symbols = []
    for i, grp in enumerate(groups):
        symbols += [i] * len(grp)

    def rec(prefix, remaining):
        if not remaining:
            cursor = {i: 0 for i in range(len(groups))}
            out = []
            for s in prefix:
                out.append(groups[s][cursor[s]])
                cursor[s] += 1
            yield out
            return
        for s in sorted(set(remaining)):
            rest = list(remaining)
            rest.remove(s)
            yield from rec(prefix + [s], rest)

    yield from rec([], symbols)


def _upper_code(g, perm):
    code = 0
    n = g.n
    for i in range(n):
        row = g.adj[perm[i]]
        for j in range(i + 1, n):
            code = code << 1 | (row >> perm[j] & 1)
    return code


def canonical_graph(g):
    """A canonically labeled copy of g (equal for isomorphic inputs)."""
    blocks = [_distinct_orderings(_twin_groups(g, cls)) for cls in _refine_classes(g)]
    best_code = None
    best_perm = None
    for combo in itertools.product(*[list(b) for b in blocks]):
        perm = [v for block in combo for v in block]
        code = _upper_code(g, perm)
        if best_code is None or code < best_code:
            best_code = code
            best_perm = perm
    return permuted(g, best_perm)


def canonical_form(g):
    """Isomorphism-invariant code: graph6 bytes of the canonical labeling."""
    return emit_graph6(canonical_graph(g)).encode("ascii")


# ---------------------------------------------------------------------------
# graph6 interchange format: printable bytes offset by 63, upper-triangle bits
# in column-major order, zero-padded to whole 6-bit groups.
# ---------------------------------------------------------------------------


class Graph6Error(ValueError):
    pass


def emit_graph6(g):
    n = g.n
    out = [chr(n + 63)]
    bitstream = []
    for col in range(1, n):
        for row in range(col):
            bitstream.append(g.adj[row] >> col & 1)
    while len(bitstream) % 6:
        bitstream.append(0)
    for i in range(0, len(bitstream), 6):
        word = 0
        for b in bitstream[i:i + 6]:
            word = word << 1 | b
        out.append(chr(word + 63))
    return "".join(out)


def parse_graph6(text):
    if isinstance(text, bytes):
        text = text.decode("ascii")
    text = text.strip()
    if not text:
        raise Graph6Error("empty graph6 string")
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    n = ord(text[0]) - 63
    if not 1 <= n <= MAX_VERTICES:
        raise Graph6Error(f"unsupported vertex count {n} (need 1..{MAX_VERTICES})")
    need = (n * (n - 1) // 2 + 5) // 6
    body = text[1:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} payload bytes for n={n}, got {len(body)}")
    bitstream = []
    for ch in body:
        word = ord(ch) - 63
        if not 0 <= word < 64:
            raise Graph6Error(f"byte {ch!r} outside graph6 alphabet")
        for k in range(5, -1, -1):
            bitstream.append(word >> k & 1)
    m = n * (n - 1) // 2
    if any(bitstream[m:]):
        raise Graph6Error("nonzero padding bits")
    adj = [0] * n
    idx = 0
    for col in range(1, n):
        for row in range(col):
            if bitstream[idx]:
                adj[row] |= 1 << col
                adj[col] |= 1 << row
            idx += 1
    return Graph(n, adj)
