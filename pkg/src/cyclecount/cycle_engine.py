"""Cycle counting for chorded-cycle graphs via chord subsets.

Every cycle other than the hamiltonian cycle uses a non-empty set F of
spokes.  Sort the 2k spoke endpoints around the cycle as i_1 < ... < i_2k;
between consecutive endpoints the cycle must take the whole arc or none of
it, and arc membership alternates at every endpoint.  That leaves exactly
two candidate edge sets:

    E1 = F + arcs (i_1..i_2), (i_3..i_4), ..., (i_{2k-1}..i_{2k})
    E2 = F + arcs (i_2..i_3), (i_4..i_5), ..., (i_{2k}..i_1)

Both are 2-regular; a candidate counts only when it is a single connected
cycle, so each F contributes 0, 1 or 2 cycles and the total count is a sum
over all 2^s - 1 subsets plus one for the hamiltonian cycle itself.

For the ladder family (:mod:`cyclecount.h2n_family`) the subset sum has a
combinatorial shortcut: split F into maximal runs of consecutive spoke
indices (its interval representation).  A single run always gives two
cycles; with k >= 2 runs there is exactly one cycle when every interior
run has even size, otherwise none.  That classification also decides which
of the named edges ``alpha``/``beta`` a cycle uses, which yields the exact
recurrences and the Fibonacci closed forms at the bottom of this module.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph_core import CapExceeded, ChordedCycleGraph, Edge, GraphError, edge

# ---------------------------------------------------------------------------
# Subset machinery (any member)
# ---------------------------------------------------------------------------


def _sorted_endpoints(g: ChordedCycleGraph, mask: int, spoke_idx: list[int]) -> list[int]:
    return [v for v in range(g.vertex_count) if (mask >> spoke_idx[v]) & 1]


def _single_cycle_flags(g: ChordedCycleGraph, eps: list[int]) -> tuple[bool, bool]:
    """Which of E1/E2 induce a single cycle.

    The union of the arc pairing and the spoke pairing on the 2k endpoint
    positions decomposes into alternating cycles; a candidate is a single
    graph cycle iff that decomposition is one cycle, which a pairing
    traversal from position 0 detects in O(k).
    """
    m = len(eps)
    pos_of = {v: p for p, v in enumerate(eps)}
    partner = g.spoke_partner
    spoke_pos = [pos_of[partner[v]] for v in eps]

    def single(arc_next) -> bool:
        p = 0
        rounds = 0
        while True:
            p = spoke_pos[arc_next(p)]
            rounds += 1
            if p == 0:
                return rounds == m // 2

    e1 = single(lambda p: p ^ 1)
    e2 = single(lambda p: (p + 1) % m if p & 1 else (p - 1) % m)
    return e1, e2


def _arc_edges(a: int, b: int, n: int) -> list[Edge]:
    """Edges of the forward path a -> a+1 -> ... -> b on the cycle."""
    out = []
    v = a
    while v != b:
        out.append(edge(v, (v + 1) % n))
        v = (v + 1) % n
    return out


def _mask_of(g: ChordedCycleGraph, spoke_indices) -> int:
    mask = 0
    for i in spoke_indices:
        if not (0 <= i < g.spoke_count):
            raise GraphError(f"spoke index {i} out of range")
        mask |= 1 << i
    return mask


def cycles_from_subset(g: ChordedCycleGraph, spoke_indices) -> list[frozenset[Edge]]:
    """The cycles whose spoke set is exactly the given non-empty subset,
    as explicit edge sets (0, 1 or 2 of them)."""
    mask = _mask_of(g, spoke_indices)
    if mask == 0:
        raise GraphError("empty spoke subset; the hamiltonian cycle is handled by callers")
    n = g.vertex_count
    spoke_idx = g.spoke_index_of()
    eps = _sorted_endpoints(g, mask, spoke_idx)
    f_edges = [g.spokes[i] for i in range(g.spoke_count) if (mask >> i) & 1]
    flag1, flag2 = _single_cycle_flags(g, eps)
    m = len(eps)
    out = []
    if flag1:
        edges = list(f_edges)
        for j in range(0, m, 2):
            edges.extend(_arc_edges(eps[j], eps[j + 1], n))
        out.append(frozenset(edges))
    if flag2:
        edges = list(f_edges)
        for j in range(1, m, 2):
            edges.extend(_arc_edges(eps[j], eps[(j + 1) % m], n))
        out.append(frozenset(edges))
    return out


def count_cycles(g: ChordedCycleGraph, *, max_spokes: int = 31) -> int:
    """Total number of cycles: one hamiltonian cycle plus the subset sum."""
    s = g.spoke_count
    if s > max_spokes:
        raise CapExceeded(f"{s} spokes exceed the cap of {max_spokes} (2^s subsets)")
    spoke_idx = g.spoke_index_of()
    total = 1
    for mask in range(1, 1 << s):
        eps = _sorted_endpoints(g, mask, spoke_idx)
        f1, f2 = _single_cycle_flags(g, eps)
        total += f1 + f2
    return total


def count_cycles_through_edge(g: ChordedCycleGraph, e: Edge, *, max_spokes: int = 31) -> int:
    """Number of cycles whose edge set contains ``e`` (a spoke or a
    hamiltonian-cycle edge)."""
    e = edge(*e)
    cycle_edges = g.cycle_edges()
    spoke_set = set(g.spokes)
    if e not in cycle_edges and e not in spoke_set:
        raise GraphError(f"edge {e} not in graph")
    s = g.spoke_count
    if s > max_spokes:
        raise CapExceeded(f"{s} spokes exceed the cap of {max_spokes}")
    total = 1 if e in cycle_edges else 0  # hamiltonian cycle
    for mask in range(1, 1 << s):
        for cyc in cycles_from_subset(g, [i for i in range(s) if (mask >> i) & 1]):
            if e in cyc:
                total += 1
    return total


# ---------------------------------------------------------------------------
# Interval representation (ladder family indexing)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BirPartition:
    """Minimal split of a spoke-index set into maximal consecutive runs,
    ordered by smallest index.  Each part is an inclusive (lo, hi) range."""

    parts: tuple[tuple[int, int], ...]

    def sizes(self) -> tuple[int, ...]:
        return tuple(hi - lo + 1 for lo, hi in self.parts)

    @property
    def part_count(self) -> int:
        return len(self.parts)


def bir(spoke_indices) -> BirPartition:
    """Interval representation of a non-empty set of spoke indices."""
    idx = sorted(set(spoke_indices))
    if not idx:
        raise GraphError("empty spoke subset has no interval representation")
    if idx[0] < 0:
        raise GraphError(f"negative spoke index {idx[0]}")
    parts = []
    lo = prev = idx[0]
    for i in idx[1:]:
        if i == prev + 1:
            prev = i
        else:
            parts.append((lo, prev))
            lo = prev = i
    parts.append((lo, prev))
    return BirPartition(tuple(parts))


def _run_sizes(mask: int) -> list[int]:
    """Sizes of maximal runs of set bits, in ascending bit order."""
    sizes = []
    run = 0
    while mask:
        if mask & 1:
            run += 1
        elif run:
            sizes.append(run)
            run = 0
        mask >>= 1
    if run:
        sizes.append(run)
    return sizes


def count_cycles_bir(n: int, *, max_spokes: int = 31) -> int:
    """Cycle count of the 2n-vertex ladder member by interval counting
    alone: 1 (hamiltonian) + 2 per single-run subset + 1 per multi-run
    subset whose interior runs all have even size.  Independent of the
    subset engine; the two must agree on every member."""
    if n < 2:
        raise GraphError(f"need n >= 2, got {n}")
    if n > max_spokes:
        raise CapExceeded(f"{n} spokes exceed the cap of {max_spokes}")
    total = 1
    for mask in range(1, 1 << n):
        sizes = _run_sizes(mask)
        if len(sizes) == 1:
            total += 2
        elif all(s % 2 == 0 for s in sizes[1:-1]):
            total += 1
    return total


def alpha_even_odd(n: int, *, max_spokes: int = 31) -> tuple[int, int]:
    """Split of the cycles through ``alpha`` in the 2n-vertex member by the
    parity of the last run of their spoke set.

    Classification rules: the hamiltonian cycle (empty spoke set, last-run
    size 0) is even.  A single-run subset always has exactly one of its two
    cycles through ``alpha``, classified by the run's own parity.  A
    multi-run subset's unique cycle (interior runs even) goes through
    ``alpha`` iff the first run has even size, and is then classified by
    the last run's parity.
    """
    if n < 2:
        raise GraphError(f"need n >= 2, got {n}")
    if n > max_spokes:
        raise CapExceeded(f"{n} spokes exceed the cap of {max_spokes}")
    even = 1
    odd = 0
    for mask in range(1, 1 << n):
        sizes = _run_sizes(mask)
        if len(sizes) == 1:
            if sizes[0] % 2 == 0:
                even += 1
            else:
                odd += 1
        elif all(s % 2 == 0 for s in sizes[1:-1]) and sizes[0] % 2 == 0:
            if sizes[-1] % 2 == 0:
                even += 1
            else:
                odd += 1
    return even, odd


@dataclass(frozen=True)
class CountLedger:
    """The four exact counts for one family member: total cycles, cycles
    through ``alpha``, and their even/odd split by last-run parity."""

    n: int
    c: int
    alpha: int
    even: int
    odd: int

    def __post_init__(self) -> None:
        if self.alpha != self.even + self.odd:
            raise GraphError(f"ledger inconsistent: {self.alpha} != {self.even} + {self.odd}")


def count_ledger(n: int) -> CountLedger:
    even, odd = alpha_even_odd(n)
    return CountLedger(n, count_cycles_bir(n), even + odd, even, odd)


# ---------------------------------------------------------------------------
# Closed forms (exact integers)
# ---------------------------------------------------------------------------


def fibonacci(k: int) -> int:
    """fib(1) = fib(2) = 1; exact for any k >= 0."""
    if k < 0:
        raise ValueError("fibonacci index must be >= 0")
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def closed_form_alpha(n: int) -> int:
    """Cycles through ``alpha`` in the 2n-vertex member: fib(n+3) - 1.

    Equivalent to the recurrence a(n) = a(n-1) + a(n-2) + 1 with
    a(2) = 4, a(3) = 7, and to the golden-ratio expression
    (2/sqrt5 + 1) phi^n + (1 - 2/sqrt5) psi^n - 1; the Fibonacci form is
    the production path because it is exact at any n.
    """
    if n < 2:
        raise GraphError(f"need n >= 2, got {n}")
    return fibonacci(n + 3) - 1


def closed_form_c(n: int) -> int:
    """Total cycles in the 2n-vertex member: fib(n+5) - (n+4).

    Note the closing term is -(n+4): the sign variant -(n-4) fails the
    initial values 7, 14, 26, 46.  Equivalently c(n) = alpha(n+2) - (n+3),
    and c(n) = c(n-1) + alpha(n) since the cycles avoiding ``alpha`` are
    exactly the cycles of the member two vertices smaller.
    """
    if n < 2:
        raise GraphError(f"need n >= 2, got {n}")
    return fibonacci(n + 5) - (n + 4)
