"""Brute-force cycle enumeration on arbitrary simple graphs.

This is the ground truth the spoke-subset engine is checked against, so it
shares no machinery with it: plain anchored backtracking.  A cycle is
discovered exactly once, rooted at its minimum vertex with the traversal
direction normalized (second vertex smaller than last).

Every invocation also asserts the classical cyclomatic bound: a graph with
cyclomatic number r = |E| - |V| + #components has at most 2^r - 1 cycles.
A violation would mean the enumerator itself is broken, so it raises.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph_core import CapExceeded, SimpleGraph, edge

DEFAULT_VERTEX_CAP = 20


class AhrensBoundViolation(RuntimeError):
    """The enumerator produced more cycles than the cyclomatic bound allows."""


@dataclass(frozen=True)
class CycleList:
    """All simple cycles of a graph, each as a canonical vertex sequence
    (minimum vertex first, smaller neighbor second)."""

    cycles: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.cycles)


def cyclomatic_number(g: SimpleGraph) -> int:
    """|E| - |V| + #components; equals |E| - |V| + 1 on connected graphs."""
    n = g.vertex_count
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    components = n
    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            components -= 1
    return len(g.edges) - n + components


def enumerate_all_cycles(g: SimpleGraph, *, max_vertices: int = DEFAULT_VERTEX_CAP) -> CycleList:
    """All simple cycles, each exactly once.

    Backtracking over paths anchored at their minimum vertex: a path only
    ever extends through vertices greater than its anchor, and a closure
    back to the anchor is recorded only in the direction with the smaller
    second vertex.
    """
    n = g.vertex_count
    if n > max_vertices:
        raise CapExceeded(f"{n} vertices exceed the oracle cap of {max_vertices}")
    adj = g.adjacency()
    found: list[tuple[int, ...]] = []
    for anchor in range(n):
        path = [anchor]
        on_path = [False] * n
        on_path[anchor] = True
        stack = [iter(adj[anchor])]
        while stack:
            it = stack[-1]
            advanced = False
            for w in it:
                if w == anchor and len(path) >= 3 and path[1] < path[-1]:
                    found.append(tuple(path))
                elif w > anchor and not on_path[w]:
                    path.append(w)
                    on_path[w] = True
                    stack.append(iter(adj[w]))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                on_path[path.pop()] = False
    found.sort()
    result = CycleList(tuple(found))
    bound = (1 << cyclomatic_number(g)) - 1
    if len(result) > bound:
        raise AhrensBoundViolation(
            f"{len(result)} cycles exceed the cyclomatic bound {bound}"
        )
    return result


def count_all_cycles(g: SimpleGraph, *, max_vertices: int = DEFAULT_VERTEX_CAP) -> int:
    return len(enumerate_all_cycles(g, max_vertices=max_vertices))


def count_cycles_through_edge_brute(
    g: SimpleGraph, e, *, max_vertices: int = DEFAULT_VERTEX_CAP
) -> int:
    """Cycles containing a given edge, by filtering the full enumeration."""
    u, v = edge(*e)
    total = 0
    for cyc in enumerate_all_cycles(g, max_vertices=max_vertices).cycles:
        k = len(cyc)
        for i in range(k):
            if edge(cyc[i], cyc[(i + 1) % k]) == (u, v):
                total += 1
                break
    return total
