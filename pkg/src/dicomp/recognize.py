"""Recognition of semicomplete comparability digraphs, ordering
verification, and the symmetric (graph) special case.

The recognizer first rejects if any implication class equals its own
inverse (reporting the class and its length-2 circuit as a certificate).
Otherwise it accumulates a forcing set T, one of {I, I^-1} per nontrivial
inverse pair, giving priority to classes demanded by the transitivity of
T, and finally reads the ordering off a topological sort of T.
"""

from __future__ import annotations

import heapq
import random
from collections import deque
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from . import _backend
from .digraph import Digraph, Graph, Ordering, is_semicomplete, \
    symmetric_digraph
from .implication import Circuit, ClassPartition, NotSemicompleteError, \
    implication_classes
from .knotting import Inconclusive, Refutation, general_comparability_check

Triple = tuple[int, int, int]


@dataclass(frozen=True)
class SelfInverseWitness:
    class_id: int
    circuit: Circuit             # length-2 circuit inside the class


@dataclass(frozen=True)
class RecognitionResult:
    verdict: str                 # "comparability" | "not-comparability"
    ordering: Optional[Ordering] = None
    witness: Union[SelfInverseWitness, Refutation, Triple, None] = None


def verify_ordering(d: Digraph, o: Ordering) -> Optional[Triple]:
    """None if o is a comparability ordering, else the first violating
    triple (x, y, z) with x < y < z in o, in lexicographic position order.

    A triple violates if xy, yz are arcs but xz is not, or zy, yx are arcs
    but zx is not.
    """
    n = d.n
    if len(o.perm) != n:
        raise ValueError("ordering does not cover all vertices")
    perm = np.asarray(o.perm)
    m = d.adj[np.ix_(perm, perm)].astype(bool)
    bad_j = None
    for j in range(1, n - 1):
        up = m[:j, j]                       # i -> j arcs, i < j
        down = m[j, j + 1:]                 # j -> k arcs, k > j
        if (up[:, None] & down[None, :] & ~m[:j, j + 1:]).any():
            bad_j = j
            break
        upr = m[j, :j]                      # j -> i arcs
        downr = m[j + 1:, j]                # k -> j arcs
        if (downr[:, None] & upr[None, :] & ~m[j + 1:, :j]).any():
            bad_j = j
            break
    if bad_j is None:
        return None
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if (m[i, j] and m[j, k] and not m[i, k]) or \
                   (m[k, j] and m[j, i] and not m[k, i]):
                    return (int(perm[i]), int(perm[j]), int(perm[k]))
    raise AssertionError("violation detected but not located")


def _policy_chooser(policy: str, seed: int):
    if policy == "min":
        return min
    if policy == "max":
        return max
    if policy == "shuffle":
        rng = random.Random(seed)
        return lambda pool: rng.choice(sorted(pool))
    raise ValueError(f"unknown choice policy {policy!r}")


def recognize_semicomplete(d: Digraph, policy: str = "min",
                           seed: int = 0) -> RecognitionResult:
    if not is_semicomplete(d):
        raise NotSemicompleteError("not semicomplete")
    part = implication_classes(d)
    for c in range(part.num_classes()):
        if part.inverse(c) == c:
            x, y = part.members_of(c)[0]
            return RecognitionResult(
                "not-comparability",
                witness=SelfInverseWitness(c, Circuit((x, y))))
    ordering = _build_ordering(d, part, policy, seed)
    return RecognitionResult("comparability", ordering=ordering)


def _build_ordering(d: Digraph, part: ClassPartition, policy: str,
                    seed: int) -> Ordering:
    n = d.n
    choose = _policy_chooser(policy, seed)
    num = part.num_classes()
    pool = set(part.nontrivial_ids())
    in_pool = np.zeros(num, dtype=np.uint8)
    in_pool[list(pool)] = 1
    enqueued = np.zeros(num, dtype=np.uint8)
    pending: deque[int] = deque()
    t = np.zeros((n, n), dtype=np.uint8)
    t_arcs: list[tuple[int, int]] = []
    adj = np.ascontiguousarray(d.adj)
    labels = np.asarray(_part_labels(part), dtype=np.int32)
    while pool:
        c = None
        while pending:
            cand = pending.popleft()
            if cand in pool:
                c = cand
                break
        if c is None:
            c = choose(pool)
        members = part.members_of(c)
        new = np.asarray([x * n + y for x, y in members], dtype=np.int32)
        for x, y in members:
            t[x, y] = 1
            t_arcs.append((x, y))
        pool.discard(c)
        pool.discard(part.inverse(c))
        in_pool[c] = 0
        in_pool[part.inverse(c)] = 0
        for lab in _backend.compose_scan(adj, labels, t, new, in_pool,
                                         enqueued):
            pending.append(int(lab))
    order = _toposort(n, t)
    if order is None:
        raise AssertionError("forcing set acquired a circuit; this "
                             "contradicts the correctness guarantee")
    return order


def _part_labels(part: ClassPartition) -> np.ndarray:
    n = part.n
    labels = np.full(n * n, -1, dtype=np.int32)
    for (x, y), c in part.class_of.items():
        labels[x * n + y] = c
    return labels


def _toposort(n: int, t: np.ndarray) -> Optional[Ordering]:
    """Topological sort of the forcing relation, smallest vertex first."""
    indeg = t.sum(axis=0, dtype=np.int64)
    heap = [v for v in range(n) if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        u = heapq.heappop(heap)
        order.append(u)
        for v in np.flatnonzero(t[u]):
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(heap, int(v))
    if len(order) != n:
        return None
    return Ordering(tuple(order))


def graph_comparability(g: Graph,
                        component_limit: int = 20) -> RecognitionResult:
    """Comparability test for graphs via their symmetric digraphs."""
    d = symmetric_digraph(g)
    result = general_comparability_check(d, component_limit)
    if isinstance(result, Ordering):
        return RecognitionResult("comparability", ordering=result)
    if isinstance(result, Inconclusive):
        raise RuntimeError(
            f"knotting graph has {result.components} components, over the "
            f"limit {result.limit}")
    return RecognitionResult("not-comparability", witness=result)


@dataclass(frozen=True)
class ConsistencyViolation:
    class_id: int
    agreeing: tuple[int, int]
    disagreeing: tuple[int, int]


def audit_ordering_consistency(d: Digraph, o: Ordering,
                               part: ClassPartition
                               ) -> list[ConsistencyViolation]:
    """Within every implication class all pairs must agree with the
    ordering or all disagree; returns one violation per offending class."""
    pos = {v: i for i, v in enumerate(o.perm)}
    violations = []
    for c in range(part.num_classes()):
        members = part.members_of(c)
        agree = [p for p in members if pos[p[0]] < pos[p[1]]]
        disagree = [p for p in members if pos[p[0]] > pos[p[1]]]
        if agree and disagree:
            violations.append(ConsistencyViolation(c, agree[0], disagree[0]))
    return violations
