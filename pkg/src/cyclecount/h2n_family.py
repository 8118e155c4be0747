"""The H_{2n} family: a ladder-like chord matching on the 2n-cycle that is
conjectured to minimize the number of cycles among cubic hamiltonian
3-connected graphs.

Spoke indexing follows the family's own order e_0 .. e_{n-1} (not sorted by
endpoint), because the interval machinery in :mod:`cyclecount.cycle_engine`
is defined on exactly this order:

    e_0     = (v_1, v_{2n-1})
    e_i     = (v_{i-1}, v_{2n-i-2})   for odd  i, 1 <= i < n-1
    e_i     = (v_{i+1}, v_{2n-i})     for even i, 2 <= i < n-1
    e_{n-1} = (v_{n-1}, v_{n+1}) if n odd, else (v_{n-2}, v_n)

Two hamiltonian-cycle edges get names: ``alpha = (v_0, v_{2n-1})`` and
``beta = (v_{n-1}, v_n)``.  Removing any of alpha, beta, e_0, e_{n-1} and
suppressing the two degree-2 endpoints yields a graph isomorphic to the
member two vertices smaller; ``verify_reduction`` checks that per instance.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph_core import (
    ChordedCycleGraph,
    Edge,
    GraphError,
    SimpleGraph,
    are_isomorphic,
    build_chorded,
    delete_and_suppress,
    edge,
    to_simple,
)

REDUCIBLE_EDGES = ("alpha", "beta", "e0", "e_last")


@dataclass(frozen=True)
class H2nGraph:
    """A family member on 2n vertices with its named edges."""

    n: int
    graph: ChordedCycleGraph
    alpha: Edge
    beta: Edge

    @property
    def spokes(self) -> tuple[Edge, ...]:
        return self.graph.spokes


def _spoke_formula(n: int, i: int) -> Edge:
    if i == 0:
        return edge(1, 2 * n - 1)
    if i == n - 1:
        if n % 2 == 1:
            return edge(n - 1, n + 1)
        return edge(n - 2, n)
    if i % 2 == 1:
        return edge(i - 1, 2 * n - i - 2)
    return edge(i + 1, 2 * n - i)


def construct_h2n(n: int) -> H2nGraph:
    """Instantiate the member on 2n vertices; n >= 2."""
    if n < 2:
        raise GraphError(f"family members need n >= 2, got {n}")
    spokes = [_spoke_formula(n, i) for i in range(n)]
    graph = build_chorded(2 * n, spokes)
    return H2nGraph(n, graph, edge(0, 2 * n - 1), edge(n - 1, n))


def intersection_graph(h: H2nGraph) -> SimpleGraph:
    """Chord crossing graph: vertex i is spoke e_i, edges join crossing
    spokes.  For every member this comes out as the path e_0 - ... - e_{n-1};
    the structural tests assert exactly that."""
    from .spoke_analysis import spokes_intersect  # deferred: keeps layering one-way

    n = h.n
    edges = set()
    for i in range(n):
        for j in range(i + 1, n):
            if spokes_intersect(h.graph, h.spokes[i], h.spokes[j]):
                edges.add((i, j))
    return SimpleGraph(n, frozenset(edges))


def reducible_edge(h: H2nGraph, which: str) -> Edge:
    """One of the four edges whose deletion-plus-suppression shrinks the
    member: ``alpha``, ``beta``, ``e0`` or ``e_last``."""
    if which == "alpha":
        return h.alpha
    if which == "beta":
        return h.beta
    if which == "e0":
        return h.spokes[0]
    if which == "e_last":
        return h.spokes[-1]
    raise ValueError(f"which must be one of {REDUCIBLE_EDGES}, got {which!r}")


def verify_reduction(n: int, which: str) -> bool:
    """Delete the named edge of the 2n-vertex member, suppress, and test
    isomorphism with the (2n-2)-vertex member.  Needs n >= 3 so the result
    still has at least 4 vertices."""
    if n < 3:
        raise GraphError(f"reduction check needs n >= 3, got {n}")
    big = construct_h2n(n)
    small = construct_h2n(n - 1)
    reduced = delete_and_suppress(to_simple(big.graph), reducible_edge(big, which))
    return are_isomorphic(reduced, to_simple(small.graph))
