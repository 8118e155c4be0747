"""Chord interaction machinery: crossing/parallel spokes, consecutive pairs
inside a subset, executable versions of the at-most-one-cycle claims, the
sparse structured spoke-set construction, and the resulting upper bound on
the total cycle count.

Two spokes cross when their endpoints interleave around the hamiltonian
cycle, otherwise they are parallel.  A pair e, f inside a subset F is
*consecutive in F* when every other member of F either crosses both or is
parallel to both.  The claim checkers below encode their hypotheses
exactly and report "inapplicable" rather than forcing a verdict when a
hypothesis fails; randomized sweeps over hypothesis-satisfying instances
are part of the acceptance suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .cycle_engine import cycles_from_subset
from .graph_core import ChordedCycleGraph, Edge, GraphError, edge


def _spoke_index(g: ChordedCycleGraph, e: Edge) -> int:
    e = edge(*e)
    try:
        return g.spokes.index(e)
    except ValueError:
        raise GraphError(f"{e} is not a spoke of this graph") from None


def _cross(a: int, b: int, c: int, d: int) -> bool:
    """Do chords {a,b} and {c,d} interleave on the cycle?  Assumes the four
    vertices are distinct (chords of a matching never share endpoints)."""
    lo, hi = (a, b) if a < b else (b, a)
    return (lo < c < hi) != (lo < d < hi)


def spokes_intersect(g: ChordedCycleGraph, e: Edge, f: Edge) -> bool:
    """True iff the two (distinct) spokes cross."""
    e = edge(*e)
    f = edge(*f)
    if e == f:
        raise GraphError("spokes must be distinct")
    _spoke_index(g, e)
    _spoke_index(g, f)
    return _cross(e[0], e[1], f[0], f[1])


def _cross_idx(g: ChordedCycleGraph, i: int, j: int) -> bool:
    a, b = g.spokes[i]
    c, d = g.spokes[j]
    return _cross(a, b, c, d)


def consecutive_in_set(g: ChordedCycleGraph, subset, e: int, f: int) -> bool:
    """Are spokes ``e`` and ``f`` (by index) consecutive in ``subset``:
    does every other subset member cross both or neither?

    A second, arc-based characterization is available as
    :func:`arc_characterization`; it implies this predicate but is strictly
    stronger on some inputs (see the module tests for a four-spoke
    counterexample to equivalence), so this definitional form is the one
    returned.
    """
    members = set(subset)
    if e not in members or f not in members:
        raise GraphError("e and f must belong to the subset")
    if e == f:
        raise GraphError("spokes must be distinct")
    for other in members - {e, f}:
        crosses_e = _cross_idx(g, other, e)
        crosses_f = _cross_idx(g, other, f)
        if crosses_e != crosses_f:
            return False
    return True


def _opposite_arc_pairs(g: ChordedCycleGraph, e: int, f: int):
    """The two opposite pairs of arcs cut out of the cycle by the four
    endpoints w1 < w2 < w3 < w4 of spokes e, f:
    ((w1->w2, w3->w4), (w2->w3, w4->w1))."""
    w = sorted(g.spokes[e] + g.spokes[f])
    return (
        ((w[0], w[1]), (w[2], w[3])),
        ((w[1], w[2]), (w[3], w[0])),
    )


def _arc_interior(a: int, b: int, n: int) -> list[int]:
    out = []
    v = (a + 1) % n
    while v != b:
        out.append(v)
        v = (v + 1) % n
    return out


def arc_characterization(g: ChordedCycleGraph, subset, e: int, f: int) -> bool:
    """Arc form of consecutiveness: some opposite pair of arcs between the
    four endpoints of e and f has no internal vertex on a subset spoke.
    Implies :func:`consecutive_in_set`; not implied by it."""
    members = set(subset)
    if e not in members or f not in members:
        raise GraphError("e and f must belong to the subset")
    n = g.vertex_count
    spoke_idx = g.spoke_index_of()
    for pair in _opposite_arc_pairs(g, e, f):
        ok = True
        for a, b in pair:
            for v in _arc_interior(a, b, n):
                if spoke_idx[v] in members:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


@dataclass(frozen=True)
class ClaimVerdict:
    """Outcome of one claim check on a (graph, subset) instance."""

    claim: str
    applicable: bool
    holds: bool | None
    cycle_count: int | None
    witness: tuple[int, ...] | None
    detail: str

    @property
    def violated(self) -> bool:
        return self.applicable and not self.holds


def check_claim_3_1(g: ChordedCycleGraph, subset) -> ClaimVerdict:
    """At-most-one-cycle check for subsets with an even-crossed consecutive
    pair.

    Hypotheses, encoded exactly: some pair e, f in F is consecutive in F,
    the number of F-spokes crossing both e and f is even, some opposite
    arc pair between their endpoints is free of F-spokes, and either
    |F| >= 3 or e, f are parallel.  (A bare crossing pair -- |F| = 2 with
    e, f interleaving, as the two chords of K4 -- always forms two cycles,
    so it is outside the claim's reach and reported inapplicable.)
    """
    members = sorted(set(subset))
    if len(members) < 2:
        return ClaimVerdict("3.1", False, None, None, None, "need at least two spokes")
    for e, f in combinations(members, 2):
        if not consecutive_in_set(g, members, e, f):
            continue
        both = sum(
            1
            for o in members
            if o not in (e, f) and _cross_idx(g, o, e) and _cross_idx(g, o, f)
        )
        if both % 2 != 0:
            continue
        if not arc_characterization(g, members, e, f):
            continue
        if len(members) == 2 and _cross_idx(g, e, f):
            continue
        count = len(cycles_from_subset(g, members))
        return ClaimVerdict(
            "3.1", True, count <= 1, count, (e, f),
            f"consecutive pair ({e},{f}) with {both} spokes crossing both",
        )
    return ClaimVerdict("3.1", False, None, None, None, "no qualifying consecutive pair")


def check_claim_3_2(g: ChordedCycleGraph, subset) -> ClaimVerdict:
    """At-most-one-cycle check for subsets containing a spoke crossed by no
    other subset member; needs |F| > 1."""
    members = sorted(set(subset))
    if len(members) < 2:
        return ClaimVerdict("3.2", False, None, None, None, "need |F| > 1")
    for e in members:
        if any(_cross_idx(g, o, e) for o in members if o != e):
            continue
        count = len(cycles_from_subset(g, members))
        return ClaimVerdict(
            "3.2", True, count <= 1, count, (e,),
            f"spoke {e} crossed by no subset member",
        )
    return ClaimVerdict("3.2", False, None, None, None, "every spoke is crossed")


# ---------------------------------------------------------------------------
# Sparse structured spoke sets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SparseSpokeSet:
    """A spoke subset of size >= V/2 - 2*floor(sqrt(V)) that contains either
    an uncrossed spoke or a consecutive pair, with the construction trail."""

    spoke_indices: frozenset[int]
    case: str  # "unintersected_spoke" | "consecutive_pair"
    witness: tuple[int, ...]
    blocks: tuple[tuple[int, int], ...]  # vertex partition, inclusive ranges


def _vertex_blocks(n: int) -> list[tuple[int, int]]:
    """Split 0..n-1 into k = floor(sqrt(n)) consecutive blocks with sizes
    between k and k+2, distributing the remainder greedily from vertex 0."""
    k = math.isqrt(n)
    q, r = divmod(n, k)
    sizes = [q + 1] * r + [q] * (k - r)
    if any(not (k <= s <= k + 2) for s in sizes):
        raise GraphError(f"no block partition with sizes in [{k},{k + 2}] for n={n}")
    blocks = []
    start = 0
    for s in sizes:
        blocks.append((start, start + s - 1))
        start += s
    return blocks


def find_sparse_spoke_set(g: ChordedCycleGraph) -> SparseSpokeSet:
    """Build the structured subset by the two-case construction.

    Case 1 (preferred, removes at most k spokes): some spoke lies inside a
    single block; dropping every spoke incident to the interior of its span
    leaves it uncrossed.  Case 2 (removes at most 2k): two spokes run from
    the first block into one common block; dropping the spokes incident to
    the interiors of the two connecting stretches makes the pair
    consecutive in the remainder.
    """
    n = g.vertex_count
    blocks = _vertex_blocks(n)
    k = len(blocks)
    spoke_idx = g.spoke_index_of()
    block_of = [0] * n
    for bi, (lo, hi) in enumerate(blocks):
        for v in range(lo, hi + 1):
            block_of[v] = bi

    all_spokes = set(range(g.spoke_count))

    def drop_incident(interior: list[int]) -> set[int]:
        return {spoke_idx[v] for v in interior}

    # case 1: a spoke with both endpoints in one block
    for i, (u, v) in enumerate(g.spokes):
        if block_of[u] == block_of[v]:
            lo, hi = (u, v) if u < v else (v, u)
            removed = drop_incident(list(range(lo + 1, hi)))
            removed.discard(i)
            keep = frozenset(all_spokes - removed)
            result = SparseSpokeSet(keep, "unintersected_spoke", (i,), tuple(blocks))
            break
    else:
        # case 2: pigeonhole two first-block spokes into a common block
        landings: dict[int, list[int]] = {}
        first_lo, first_hi = blocks[0]
        pair = None
        for v in range(first_lo, first_hi + 1):
            s = spoke_idx[v]
            other = g.spoke_partner[v]
            target = block_of[other]
            landings.setdefault(target, [])
            if s not in landings[target]:
                landings[target].append(s)
        for bi in range(1, k):
            if len(landings.get(bi, [])) >= 2:
                pair = tuple(sorted(landings[bi][:2]))
                break
        if pair is None:
            raise GraphError("pigeonhole failed; vertex blocks are inconsistent")
        e, f = pair
        p = sorted(v for v in g.spokes[e] + g.spokes[f] if block_of[v] == 0)
        q = sorted(v for v in g.spokes[e] + g.spokes[f] if block_of[v] != 0)
        removed = drop_incident(list(range(p[0] + 1, p[1]))) | drop_incident(
            list(range(q[0] + 1, q[1]))
        )
        removed -= {e, f}
        keep = frozenset(all_spokes - removed)
        result = SparseSpokeSet(keep, "consecutive_pair", (e, f), tuple(blocks))

    if len(result.spoke_indices) < n // 2 - 2 * k:
        raise GraphError("construction produced a set below the size bound")
    return result


# ---------------------------------------------------------------------------
# Cycle-count upper bound
# ---------------------------------------------------------------------------


def theorem3_bound(vertex_count: int) -> float:
    """Upper bound 2^(V/2+1) - 2^(V/2 - 2*sqrt(V) - 3) on the number of
    cycles of a cubic hamiltonian graph, at double precision."""
    if vertex_count < 4 or vertex_count % 2 != 0:
        raise GraphError("bound needs an even vertex count >= 4")
    v = vertex_count
    return 2.0 ** (v / 2 + 1) - 2.0 ** (v / 2 - 2 * math.sqrt(v) - 3)


def theorem3_bound_exact(vertex_count: int) -> Fraction:
    """A rational lower estimate of the bound, safe for strict comparison:
    the irrational exponent is rounded up (ceil) before exponentiation, so
    any count strictly below this value is strictly below the true bound."""
    if vertex_count < 4 or vertex_count % 2 != 0:
        raise GraphError("bound needs an even vertex count >= 4")
    v = vertex_count
    exponent_ceil = v // 2 - 3 - math.isqrt(4 * v)
    return Fraction(2) ** (v // 2 + 1) - Fraction(2) ** exponent_ceil


def count_below_theorem3_bound(count: int, vertex_count: int) -> bool:
    """Exact, conservative test that ``count`` is strictly below the bound."""
    return Fraction(count) < theorem3_bound_exact(vertex_count)
