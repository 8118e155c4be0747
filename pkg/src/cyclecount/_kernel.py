"""Compiled batch kernel for the exhaustive matching scan.

Works on raw partner arrays (one row per chord matching) so the hot loop
never touches Python objects.  Semantics are kept deliberately identical
to the pure-Python routes -- ``graph_core.is_three_connected`` and
``cycle_engine.count_cycles`` -- and the test suite checks row-for-row
agreement on complete small-V scans.

Counts use the two-candidate pairing traversal: for each chord subset the
sorted endpoints are alternately paired by arcs and by chords, and a
candidate contributes iff that pairing union is a single cycle.
3-connectivity is the definition itself: deleting any two vertices leaves
the rest connected (bitmask flood fill), which is exact for V <= 18.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def scan_batch(partners: np.ndarray, counts: np.ndarray) -> None:
    """For each row: -1 if the graph is not 3-connected, else its exact
    cycle count.  ``partners``: (N, V) int8; ``counts``: (N,) int64."""
    nrows, nverts = partners.shape
    s = nverts // 2
    full = (1 << nverts) - 1
    adj = np.empty(nverts, np.int64)
    spoke_of = np.empty(nverts, np.int64)
    ep = np.empty(nverts, np.int64)
    pos_of = np.empty(nverts, np.int64)
    sp = np.empty(nverts, np.int64)

    for row in range(nrows):
        for v in range(nverts):
            p = partners[row, v]
            nxt = v + 1 if v + 1 < nverts else 0
            prv = v - 1 if v > 0 else nverts - 1
            adj[v] = (1 << nxt) | (1 << prv) | (1 << p)

        connected3 = True
        for a in range(nverts):
            if not connected3:
                break
            for b in range(a + 1, nverts):
                removed = full & ~(1 << a) & ~(1 << b)
                start = 0
                while start == a or start == b:
                    start += 1
                visited = 1 << start
                frontier = visited
                while frontier != 0:
                    new = 0
                    for v in range(nverts):
                        if (frontier >> v) & 1:
                            new |= adj[v]
                    new &= removed
                    frontier = new & ~visited
                    visited |= new
                if visited != removed:
                    connected3 = False
                    break
        if not connected3:
            counts[row] = -1
            continue

        si = 0
        for v in range(nverts):
            if partners[row, v] > v:
                spoke_of[v] = si
                spoke_of[partners[row, v]] = si
                si += 1

        total = 1
        for mask in range(1, 1 << s):
            m = 0
            for v in range(nverts):
                if (mask >> spoke_of[v]) & 1:
                    ep[m] = v
                    pos_of[v] = m
                    m += 1
            for p in range(m):
                sp[p] = pos_of[partners[row, ep[p]]]
            half = m // 2

            p = 0
            rounds = 0
            while True:
                p = sp[p ^ 1]
                rounds += 1
                if p == 0:
                    break
            if rounds == half:
                total += 1

            p = 0
            rounds = 0
            while True:
                if p & 1:
                    q = p + 1
                    if q == m:
                        q = 0
                else:
                    q = p - 1 if p > 0 else m - 1
                p = sp[q]
                rounds += 1
                if p == 0:
                    break
            if rounds == half:
                total += 1
        counts[row] = total


def warm_up() -> None:
    """Force JIT compilation once (cheap; cached on disk afterwards)."""
    partners = np.array([[3, 4, 5, 0, 1, 2]], dtype=np.int8)  # K_{3,3}
    counts = np.empty(1, dtype=np.int64)
    scan_batch(partners, counts)
