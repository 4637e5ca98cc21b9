"""Pairs of adjacent vertices, the direct-forcing relation, implication
classes, canonical chains, and circuit detection.

A pair is an ordered tuple (x, y) of adjacent vertices; each adjacency
contributes both (x, y) and (y, x).  Implication classes are the
equivalence classes of pairs under the transitive closure of direct
forcing.  Class ids are assigned in lexicographic order of each class's
smallest pair so all outputs are deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import _backend
from .digraph import Digraph, is_semicomplete

Pair = tuple[int, int]


class NotSemicompleteError(ValueError):
    """Raised when an operation restricted to semicomplete digraphs is
    applied to a digraph with a non-adjacent vertex pair."""


def pairs(d: Digraph) -> list[Pair]:
    """All ordered pairs of adjacent vertices, in lexicographic order."""
    out = []
    for x in range(d.n):
        for y in range(d.n):
            if x != y and d.adjacent(x, y):
                out.append((x, y))
    return out


def _check_pair(d: Digraph, p: Pair) -> None:
    x, y = p
    if x == y or not d.adjacent(x, y):
        raise ValueError(f"({x},{y}) is not a pair of adjacent vertices")


def direct_forces(d: Digraph, p: Pair, q: Pair) -> bool:
    """Whether p directly forces q, per the three defining cases."""
    _check_pair(d, p)
    _check_pair(d, q)
    x, y = p
    x2, y2 = q
    if p == q:
        return True
    a = d.adj
    if x == x2 and y != y2:
        return bool((a[y, x] and a[x2, y2] and not a[y, y2])
                    or (a[y2, x2] and a[x, y] and not a[y2, y]))
    if y == y2 and x != x2:
        return bool((a[x, y] and a[y2, x2] and not a[x, x2])
                    or (a[x2, y2] and a[y, x] and not a[x2, x]))
    return False


def _directed_triangle(d: Digraph, x: int, y: int, z: int) -> bool:
    a = d.adj
    return bool((a[x, y] and a[y, z] and a[z, x])
                or (a[x, z] and a[z, y] and a[y, x]))


def direct_forces_semicomplete(d: Digraph, p: Pair, q: Pair) -> bool:
    """Triangle-based fast path for direct forcing on semicomplete digraphs.

    For pairs sharing the first coordinate, (x,y) forces (x,z) iff the arc
    between y and z is non-symmetric and {x,y,z} induces a directed
    triangle.  Pairs sharing the second coordinate reduce to the same test
    under coordinate reversal.
    """
    if not is_semicomplete(d):
        raise NotSemicompleteError("not semicomplete")
    _check_pair(d, p)
    _check_pair(d, q)
    if p == q:
        return True
    a = d.adj
    if p[0] == q[0]:
        x, y, z = p[0], p[1], q[1]
    elif p[1] == q[1]:
        # (x,y) forces (z,y) iff (y,x) forces (y,z)
        x, y, z = p[1], p[0], q[0]
    else:
        return False
    nonsym = bool(a[y, z]) != bool(a[z, y])
    return nonsym and _directed_triangle(d, x, y, z)


@dataclass(frozen=True)
class ClassPartition:
    """The partition of the pair set into implication classes."""

    n: int
    class_of: dict[Pair, int]
    members: tuple[tuple[Pair, ...], ...]
    inverse_of: tuple[int, ...]

    def num_classes(self) -> int:
        return len(self.members)

    def _check_id(self, c: int) -> None:
        if not (0 <= c < len(self.members)):
            raise KeyError(f"unknown class id {c}")

    def members_of(self, c: int) -> tuple[Pair, ...]:
        self._check_id(c)
        return self.members[c]

    def inverse(self, c: int) -> int:
        self._check_id(c)
        return self.inverse_of[c]

    def is_trivial(self, c: int) -> bool:
        self._check_id(c)
        return len(self.members[c]) == 1

    def nontrivial_ids(self) -> list[int]:
        return [c for c in range(len(self.members)) if len(self.members[c]) > 1]


def implication_classes(d: Digraph) -> ClassPartition:
    """Compute all implication classes (cubic-time kernel)."""
    n = d.n
    labels = _backend.class_labels(np.ascontiguousarray(d.adj))
    class_of: dict[Pair, int] = {}
    buckets: dict[int, list[Pair]] = {}
    for x in range(n):
        for y in range(n):
            lab = int(labels[x * n + y])
            if lab >= 0:
                class_of[(x, y)] = lab
                buckets.setdefault(lab, []).append((x, y))
    num = len(buckets)
    members = tuple(tuple(buckets[c]) for c in range(num))
    inverse = tuple(class_of[(y, x)] for c in range(num)
                    for (x, y) in [members[c][0]])
    return ClassPartition(n, class_of, members, inverse)


def is_self_inverse(part: ClassPartition, c: int) -> bool:
    return part.inverse(c) == c


@dataclass(frozen=True)
class Chain:
    """A sequence of pairs with consecutive members directly forcing."""

    steps: tuple[Pair, ...]


def _forced_neighbours(d: Digraph, p: Pair) -> list[Pair]:
    n = d.n
    from ._pure import forcing_neighbours
    return [(s // n, s % n)
            for s in forcing_neighbours(d.adj, d.row_mask, d.col_mask,
                                        p[0], p[1])]


def canonical_chain(d: Digraph, p: Pair, q: Pair) -> Chain:
    """A canonical forcing chain from p to q.

    Found by breadth-first search over direct forcing (so the underlying
    chain is shortest), then canonicalized by inserting (x_{i+1}, y_i)
    between consecutive steps.
    """
    _check_pair(d, p)
    _check_pair(d, q)
    if p == q:
        return Chain((p,))
    prev: dict[Pair, Pair] = {p: p}
    queue = deque([p])
    while queue:
        cur = queue.popleft()
        if cur == q:
            break
        for nxt in _forced_neighbours(d, cur):
            if nxt not in prev:
                prev[nxt] = cur
                queue.append(nxt)
    if q not in prev:
        raise ValueError("not in the same implication class")
    path = [q]
    while path[-1] != p:
        path.append(prev[path[-1]])
    path.reverse()
    steps: list[Pair] = []
    for i, cur in enumerate(path):
        if i > 0:
            steps.append((cur[0], path[i - 1][1]))
        steps.append(cur)
    return Chain(tuple(steps))


def is_canonical_chain(d: Digraph, chain: Chain) -> bool:
    """Validate the chain: consecutive direct forcing plus the canonical
    alternation (x_i = x_{i+1} and y_i = y_{i-1} for odd i)."""
    s = chain.steps
    for a, b in zip(s, s[1:]):
        if not direct_forces(d, a, b):
            return False
    for i in range(1, len(s), 2):
        if i + 1 < len(s) and s[i][0] != s[i + 1][0]:
            return False
        if s[i][1] != s[i - 1][1]:
            return False
    return True


@dataclass(frozen=True)
class Circuit:
    """A cyclic vertex sequence x_1..x_k; its pairs are the consecutive
    pairs plus the wrap-around pair."""

    vertices: tuple[int, ...]

    def pairs(self) -> list[Pair]:
        v = self.vertices
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]


def _find_cycle(n: int, arcs: set[Pair]) -> Optional[Circuit]:
    """Directed cycle in the auxiliary digraph whose arcs are the given
    pairs; depth-first search from the smallest vertex first."""
    succ: dict[int, list[int]] = {}
    for x, y in arcs:
        succ.setdefault(x, []).append(y)
    for k in succ:
        succ[k].sort()
    state = {v: 0 for v in range(n)}   # 0 unseen, 1 on stack, 2 done
    parent: dict[int, int] = {}
    for start in range(n):
        if state[start] != 0:
            continue
        stack = [(start, iter(succ.get(start, ())))]
        state[start] = 1
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if state[w] == 0:
                    state[w] = 1
                    parent[w] = v
                    stack.append((w, iter(succ.get(w, ()))))
                    advanced = True
                    break
                if state[w] == 1:
                    cycle = [v]
                    while cycle[-1] != w:
                        cycle.append(parent[cycle[-1]])
                    cycle.reverse()
                    return Circuit(tuple(cycle))
            if not advanced:
                state[v] = 2
                stack.pop()
    return None


def class_circuit(part: ClassPartition, c: int) -> Optional[Circuit]:
    """A circuit contained in class c, if any."""
    return _find_cycle(part.n, set(part.members_of(c)))


def union_has_circuit(part: ClassPartition, cs: Sequence[int],
                      d: Digraph) -> Optional[Circuit]:
    """A circuit contained in the union of the listed classes, if any."""
    arcs: set[Pair] = set()
    for c in cs:
        arcs.update(part.members_of(c))
    return _find_cycle(d.n, arcs)


def format_circuit(d: Digraph, circuit: Circuit) -> str:
    parts = [d.label(v) for v in circuit.vertices]
    parts.append(d.label(circuit.vertices[0]))
    return " -> ".join(parts)


def format_chain(d: Digraph, chain: Chain) -> str:
    return "\n".join(f"({d.label(a)},{d.label(b)})" for a, b in chain.steps)
