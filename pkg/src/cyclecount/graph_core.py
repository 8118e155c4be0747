"""Graph containers and structural predicates used across the package.

Two representations are used throughout:

* ``ChordedCycleGraph`` -- a cubic hamiltonian graph given as the cycle
  ``v0 v1 ... v(V-1) v0`` plus a perfect matching of chords ("spokes").
  This is the canonical form for everything the counting machinery does.
* ``SimpleGraph`` -- a plain edge-set graph for operations that do not
  care about the hamiltonian structure: connectivity, isomorphism,
  edge deletion with suppression, and graph6 interchange.

All containers are immutable; every operation is a pure function, so
values can be shared freely across worker processes.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised when a graph value violates a structural requirement."""


class SuppressionError(GraphError):
    """Raised when deleting an edge and suppressing its endpoints would
    create a loop or a parallel edge."""


class CapExceeded(Exception):
    """Raised when an operation would exceed its configured size cap."""


def edge(u: int, v: int) -> Edge:
    """Normalize an unordered vertex pair to ``(min, max)``."""
    if u == v:
        raise GraphError(f"loop edge ({u},{v}) not allowed")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SimpleGraph:
    """An undirected simple graph on vertices ``0..vertex_count-1``."""

    vertex_count: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        for u, v in self.edges:
            if not (0 <= u < v < self.vertex_count):
                raise GraphError(f"edge ({u},{v}) out of range or unnormalized")

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for nbrs in adj:
            nbrs.sort()
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self.edges


def simple_graph(vertex_count: int, edges) -> SimpleGraph:
    """Build a SimpleGraph from any iterable of vertex pairs."""
    return SimpleGraph(vertex_count, frozenset(edge(u, v) for u, v in edges))


@dataclass(frozen=True)
class ChordedCycleGraph:
    """A cubic hamiltonian graph: implicit cycle ``0-1-...-(V-1)-0`` plus a
    spoke perfect matching.

    ``spokes`` keeps the construction order, which is the indexing every
    spoke-subset operation refers to.  ``spoke_partner[v]`` is the vertex
    matched to ``v``.
    """

    vertex_count: int
    spoke_partner: tuple[int, ...]
    spokes: tuple[Edge, ...]

    @property
    def spoke_count(self) -> int:
        return self.vertex_count // 2

    def spoke_index_of(self) -> list[int]:
        """Index of the spoke covering each vertex."""
        idx = [-1] * self.vertex_count
        for i, (u, v) in enumerate(self.spokes):
            idx[u] = i
            idx[v] = i
        return idx

    def cycle_edges(self) -> frozenset[Edge]:
        n = self.vertex_count
        return frozenset(edge(i, (i + 1) % n) for i in range(n))


def build_chorded(vertex_count: int, spoke_pairs) -> ChordedCycleGraph:
    """Validate a chord matching and wrap it as a ChordedCycleGraph.

    Requirements: even ``vertex_count`` >= 4; the pairs cover every vertex
    exactly once; no pair joins cycle-adjacent vertices (that would create
    a parallel edge with the hamiltonian cycle).  The given pair order is
    retained for spoke indexing.
    """
    if vertex_count < 4 or vertex_count % 2 != 0:
        raise GraphError(f"vertex_count must be an even integer >= 4, got {vertex_count}")
    pairs = [tuple(p) for p in spoke_pairs]
    if len(pairs) != vertex_count // 2:
        raise GraphError(f"expected {vertex_count // 2} spokes, got {len(pairs)}")
    partner = [-1] * vertex_count
    spokes = []
    for u, v in pairs:
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise GraphError(f"spoke ({u},{v}) out of range")
        if u == v:
            raise GraphError(f"spoke ({u},{v}) is a loop")
        if (u - v) % vertex_count in (1, vertex_count - 1):
            raise GraphError(f"spoke joins cycle-adjacent vertices {u},{v}")
        if partner[u] != -1 or partner[v] != -1:
            raise GraphError(f"vertex covered twice by spoke ({u},{v})")
        partner[u] = v
        partner[v] = u
        spokes.append(edge(u, v))
    if any(p == -1 for p in partner):
        missing = [i for i, p in enumerate(partner) if p == -1]
        raise GraphError(f"spokes do not cover vertices {missing}")
    return ChordedCycleGraph(vertex_count, tuple(partner), tuple(spokes))


def to_simple(g: ChordedCycleGraph) -> SimpleGraph:
    """Cycle edges plus spokes as a plain SimpleGraph (3V/2 edges)."""
    return SimpleGraph(g.vertex_count, g.cycle_edges() | frozenset(g.spokes))


def is_cycle_edge_set(edges) -> bool:
    """True iff the edge set induces a single cycle: every touched vertex
    has degree 2 and the edges form one connected component."""
    edges = set(edges)
    if not edges:
        return False
    deg: dict[int, int] = {}
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    if any(d != 2 for d in deg.values()):
        return False
    start = next(iter(adj))
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(adj)


# ---------------------------------------------------------------------------
# Connectivity
# ---------------------------------------------------------------------------


def is_connected(g: SimpleGraph) -> bool:
    n = g.vertex_count
    if n == 0:
        return True
    adj = g.adjacency()
    seen = [False] * n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == n


def _bridge_exists(adj: list[list[int]], n: int, skip: Edge) -> bool:
    """True if the graph minus edge ``skip`` is disconnected or has a bridge.

    Iterative lowlink DFS; one parallel edge slot per parent is permitted
    so a doubled edge is not misreported as a bridge (cannot occur here,
    but keeps the helper honest on general input).
    """
    su, sv = skip
    disc = [-1] * n
    low = [0] * n
    visited = 0
    start = 0
    timer = 0
    stack: list[tuple[int, int, int]] = [(start, -1, 0)]
    disc[start] = low[start] = timer
    timer += 1
    visited += 1
    # (vertex, parent, next neighbor position)
    while stack:
        u, parent, i = stack.pop()
        nbrs = adj[u]
        advanced = False
        while i < len(nbrs):
            w = nbrs[i]
            i += 1
            if (u, w) in ((su, sv), (sv, su)):
                continue
            if disc[w] == -1:
                stack.append((u, parent, i))
                disc[w] = low[w] = timer
                timer += 1
                visited += 1
                stack.append((w, u, 0))
                advanced = True
                break
            if w != parent:
                low[u] = min(low[u], disc[w])
            else:
                # allow one back-edge to parent only if multi-adjacency
                parent = -2
        if not advanced and stack:
            # u finished; propagate lowlink to its parent frame
            pu = stack[-1][0]
            low[pu] = min(low[pu], low[u])
            if low[u] > disc[pu]:
                return True
    return visited < n


def _three_edge_connected_cubic(g: SimpleGraph) -> bool:
    """Exact 3-edge-connectivity for a connected graph: no single edge or
    pair of edges disconnects.  Checked by verifying G - e is bridgeless
    and connected for every edge e."""
    n = g.vertex_count
    adj = g.adjacency()
    for e in g.edges:
        if _bridge_exists(adj, n, e):
            return False
    return True


def _disjoint_paths_at_least(g: SimpleGraph, s: int, t: int, k: int) -> bool:
    """At least ``k`` internally vertex-disjoint s-t paths, via unit-capacity
    augmentation on the vertex-split digraph."""
    n = g.vertex_count
    adj = g.adjacency()
    # split node v -> v_in = 2v, v_out = 2v+1; arc v_in->v_out has cap 1
    # (unbounded for s and t); each edge (u,w) gives u_out->w_in, w_out->u_in.
    cap: dict[tuple[int, int], int] = {}
    for v in range(n):
        cap[(2 * v, 2 * v + 1)] = n if v in (s, t) else 1
    for u, w in g.edges:
        cap[(2 * u + 1, 2 * w)] = 1
        cap[(2 * w + 1, 2 * u)] = 1
    out_arcs: dict[int, list[int]] = {}
    for a, b in cap:
        out_arcs.setdefault(a, []).append(b)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < k:
        # BFS for an augmenting path in the residual graph
        prev = {source: -1}
        queue = deque([source])
        while queue and sink not in prev:
            a = queue.popleft()
            for b in out_arcs.get(a, []):
                if b not in prev and cap.get((a, b), 0) > 0:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            return False
        b = sink
        while b != source:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] = cap.get((b, a), 0) + 1
            out_arcs.setdefault(b, []).append(a)
            b = a
        flow += 1
    return True


def _three_vertex_connected_flow(g: SimpleGraph) -> bool:
    """Generic vertex-connectivity >= 3 check: every non-adjacent pair has
    three vertex-disjoint paths (Menger).  Adjacent pairs cannot be
    separated from each other, so they are skipped; if no non-adjacent
    pair exists the connectivity equals V-1 >= 3."""
    n = g.vertex_count
    for s, t in itertools.combinations(range(n), 2):
        if g.has_edge(s, t):
            continue
        if not _disjoint_paths_at_least(g, s, t, 3):
            return False
    return True


def is_three_connected(g: SimpleGraph) -> bool:
    """Exact test for vertex connectivity >= 3.

    Cubic graphs take a fast path through 3-edge-connectivity (for cubic
    graphs vertex and edge connectivity coincide); anything else goes
    through the vertex-disjoint-path computation.  Both routes are exact.
    """
    n = g.vertex_count
    if n < 4:
        raise GraphError(f"3-connectivity needs >= 4 vertices, got {n}")
    deg = g.degrees()
    if min(deg) < 3:
        return False
    if not is_connected(g):
        return False
    if all(d == 3 for d in deg):
        return _three_edge_connected_cubic(g)
    return _three_vertex_connected_flow(g)


# ---------------------------------------------------------------------------
# Isomorphism via canonical labeling
# ---------------------------------------------------------------------------


def _vertex_invariants(g: SimpleGraph) -> list[tuple[int, int, int]]:
    """(degree, #triangles at v, #4-cycles at v) -- cheap refinement seed.

    Degree alone is useless for cubic graphs, so short-cycle incidence
    counts do the initial splitting."""
    n = g.vertex_count
    adj = [set() for _ in range(n)]
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    tri = [0] * n
    quad = [0] * n
    for v in range(n):
        nbrs = sorted(adj[v])
        for a, b in itertools.combinations(nbrs, 2):
            if b in adj[a]:
                tri[v] += 1
            # common neighbors of a,b other than v close a 4-cycle through v
            quad[v] += sum(1 for c in adj[a] & adj[b] if c != v)
    return [(len(adj[v]), tri[v], quad[v]) for v in range(n)]


def _refine(colors: list[int], adj: list[list[int]]) -> list[int]:
    """Stable 1-dimensional color refinement (repeat until no cell splits)."""
    n = len(colors)
    while True:
        sig = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(n)]
        order = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [order[sig[v]] for v in range(n)]
        if new == colors:
            return new
        colors = new


def canonical_form(g: SimpleGraph) -> bytes:
    """Canonical certificate of a graph: equal certificates iff isomorphic.

    Individualization-refinement search: refine, pick the smallest-color
    non-singleton cell, branch on each of its vertices, and keep the
    lexicographically smallest adjacency bitstring over all leaves.  No
    automorphism pruning -- exhaustive and exact, intended for the desk
    scale (V <= 20) this package works at.
    """
    n = g.vertex_count
    adj = g.adjacency()
    inv = _vertex_invariants(g)
    order = {s: i for i, s in enumerate(sorted(set(inv)))}
    start = [order[inv[v]] for v in range(n)]

    best: bytes | None = None

    def leaf_certificate(colors: list[int]) -> bytes:
        perm = sorted(range(n), key=colors.__getitem__)
        inverse = [0] * n
        for i, v in enumerate(perm):
            inverse[v] = i
        bits = bytearray()
        acc = 0
        count = 0
        for j in range(1, n):
            for i in range(j):
                acc = (acc << 1) | (1 if edge(perm[i], perm[j]) in g.edges else 0)
                count += 1
                if count == 8:
                    bits.append(acc)
                    acc = count = 0
        if count:
            bits.append(acc << (8 - count))
        return bytes(bits)

    def search(colors: list[int]) -> None:
        nonlocal best
        colors = _refine(colors, adj)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            cert = leaf_certificate(colors)
            if best is None or cert < best:
                best = cert
            return
        for v in target:
            child = [2 * c + 1 for c in colors]
            child[v] = 2 * colors[v]
            search(child)

    search(start)
    assert best is not None
    header = bytes([n]) + len(g.edges).to_bytes(2, "big")
    return header + best


def are_isomorphic(g1: SimpleGraph, g2: SimpleGraph) -> bool:
    """Exact isomorphism test by canonical-certificate equality."""
    if g1.vertex_count != g2.vertex_count or len(g1.edges) != len(g2.edges):
        return False
    if sorted(_vertex_invariants(g1)) != sorted(_vertex_invariants(g2)):
        return False
    return canonical_form(g1) == canonical_form(g2)


# ---------------------------------------------------------------------------
# Edge deletion with suppression
# ---------------------------------------------------------------------------


def delete_and_suppress(g: SimpleGraph, e: Edge) -> SimpleGraph:
    """Remove edge ``e`` from a graph whose ``e``-endpoints have degree 3,
    then replace each endpoint (now degree 2) with a direct edge between
    its two remaining neighbors.  Vertices are relabeled contiguously.

    Raises SuppressionError instead of silently producing a loop or a
    parallel edge, so the result is always simple and cubic.
    """
    a, b = edge(*e)
    if (a, b) not in g.edges:
        raise GraphError(f"edge ({a},{b}) not in graph")
    deg = g.degrees()
    if deg[a] != 3 or deg[b] != 3:
        raise GraphError(f"endpoints of ({a},{b}) must have degree 3")
    edges = set(g.edges)
    edges.remove((a, b))
    for v in (a, b):
        nbrs = sorted({u for u, w in edges if w == v} | {w for u, w in edges if u == v})
        if len(nbrs) != 2:
            raise GraphError(f"vertex {v} does not have degree 2 after deletion")
        x, y = nbrs
        if x == y:
            raise SuppressionError(f"suppressing {v} creates a loop at {x}")
        if (x, y) in edges:
            raise SuppressionError(f"suppressing {v} creates a parallel edge ({x},{y})")
        edges = {ed for ed in edges if v not in ed}
        edges.add((x, y))
    keep = sorted(set(range(g.vertex_count)) - {a, b})
    relabel = {v: i for i, v in enumerate(keep)}
    return SimpleGraph(
        g.vertex_count - 2,
        frozenset(edge(relabel[u], relabel[v]) for u, v in edges),
    )


# ---------------------------------------------------------------------------
# graph6 interchange (short form, V <= 62)
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def graph6_encode(g: SimpleGraph) -> str:
    """Standard graph6 text for a graph on at most 62 vertices."""
    n = g.vertex_count
    if n > 62:
        raise GraphError("short graph6 form supports at most 62 vertices")
    chars = [chr(n + 63)]
    acc = 0
    count = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (1 if (i, j) in g.edges else 0)
            count += 1
            if count == 6:
                chars.append(chr(acc + 63))
                acc = count = 0
    if count:
        chars.append(chr((acc << (6 - count)) + 63))
    return "".join(chars)


def graph6_decode(text: str) -> SimpleGraph:
    """Parse standard graph6 (short form); rejects malformed input."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):].strip()
    if not s:
        raise GraphError("empty graph6 string")
    if s[0] == "~":
        raise GraphError("long graph6 forms (V > 62) not supported")
    n = ord(s[0]) - 63
    if not (0 <= n <= 62):
        raise GraphError(f"bad graph6 size byte {s[0]!r}")
    body = s[1:]
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise GraphError(f"graph6 body length {len(body)}, expected {expected}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if not (0 <= val < 64):
            raise GraphError(f"bad graph6 character {ch!r}")
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise GraphError("nonzero padding bits in graph6 body")
    edges = set()
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.add((i, j))
            k += 1
    return SimpleGraph(n, frozenset(edges))


# ---------------------------------------------------------------------------
# Random members (testing and randomized sweeps)
# ---------------------------------------------------------------------------


def random_chorded(vertex_count: int, rng, require_three_connected: bool = False) -> ChordedCycleGraph:
    """Uniform-ish random valid chord matching by rejection sampling."""
    if vertex_count < 6 or vertex_count % 2 != 0:
        raise GraphError("random members need an even vertex_count >= 6")
    n = vertex_count
    while True:
        free = list(range(n))
        pairs = []
        dead = False
        while free:
            u = free[0]
            allowed = [v for v in free[1:] if (u - v) % n not in (1, n - 1)]
            if not allowed:
                dead = True
                break
            v = rng.choice(allowed)
            free.remove(u)
            free.remove(v)
            pairs.append((u, v))
        if dead:
            continue
        g = build_chorded(n, pairs)
        if not require_three_connected or is_three_connected(to_simple(g)):
            return g
