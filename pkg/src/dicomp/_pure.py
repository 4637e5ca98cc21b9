"""Pure-Python kernels for the two cubic inner loops.

These mirror the compiled kernels in ``_core`` exactly; the active backend
is chosen in ``_backend``.  Pair (x,y) is encoded as the slot x*n + y.

The forcing-relation scans use per-vertex neighbour bitmasks: for a pair
(x,y) the set of z with (x,y) directly forcing (x,z) (shared first
coordinate) is

    (row[x] & ~row[y]  if yx is an arc)  |  (col[x] & ~col[y]  if xy is an arc)

minus y itself, and symmetrically for pairs sharing the second coordinate.
"""

from __future__ import annotations

import numpy as np


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _masks(adj: np.ndarray):
    n = adj.shape[0]
    row = [0] * n
    col = [0] * n
    for u in range(n):
        for v in range(n):
            if adj[u, v]:
                row[u] |= 1 << v
                col[v] |= 1 << u
    return row, col


def forcing_neighbours(adj: np.ndarray, row, col, x: int, y: int):
    """Slots of all pairs directly forced by (x,y), other than (x,y)."""
    n = adj.shape[0]
    first = 0
    if adj[y, x]:
        first |= row[x] & ~row[y]
    if adj[x, y]:
        first |= col[x] & ~col[y]
    first &= ~(1 << y)
    second = 0
    if adj[x, y]:
        second |= row[y] & ~row[x]
    if adj[y, x]:
        second |= col[y] & ~col[x]
    second &= ~(1 << x)
    for z in _bits(first):
        yield x * n + z
    for z in _bits(second):
        yield z * n + y


def class_labels(adj: np.ndarray) -> np.ndarray:
    """Implication-class label per pair slot; -1 for non-adjacent slots.

    Labels are assigned in lexicographic order of each class's smallest
    pair, so the numbering is deterministic.
    """
    n = adj.shape[0]
    labels = np.full(n * n, -1, dtype=np.int32)
    row, col = _masks(adj)
    next_label = 0
    for x in range(n):
        for y in range(n):
            if x == y or not (adj[x, y] or adj[y, x]):
                continue
            p = x * n + y
            if labels[p] >= 0:
                continue
            labels[p] = next_label
            stack = [p]
            while stack:
                q = stack.pop()
                for r in forcing_neighbours(adj, row, col, q // n, q % n):
                    if labels[r] < 0:
                        labels[r] = next_label
                        stack.append(r)
            next_label += 1
    return labels


def compose_scan(adj: np.ndarray, labels: np.ndarray, t: np.ndarray,
                 new_pairs: np.ndarray, in_pool: np.ndarray,
                 enqueued: np.ndarray) -> np.ndarray:
    """Scan pairs just added to the forcing set T for transitivity demands.

    For each new pair (a,b) and each vertex z, the compositions
    (a,b),(b,z) in T and (z,a),(a,b) in T demand the pairs (a,z) and (z,b)
    respectively.  Classes of demanded pairs that are still in the working
    pool and not yet enqueued are marked enqueued and returned in scan
    order.  t must already contain the new pairs.
    """
    n = adj.shape[0]
    found: list[int] = []
    for p in new_pairs:
        a, b = int(p) // n, int(p) % n
        for z in range(n):
            if t[b, z] and z != a and (adj[a, z] or adj[z, a]):
                lab = labels[a * n + z]
                if in_pool[lab] and not enqueued[lab]:
                    enqueued[lab] = 1
                    found.append(lab)
            if t[z, a] and z != b and (adj[z, b] or adj[b, z]):
                lab = labels[z * n + b]
                if in_pool[lab] and not enqueued[lab]:
                    enqueued[lab] = 1
                    found.append(lab)
    return np.asarray(found, dtype=np.int32)
