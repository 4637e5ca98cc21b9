"""Shared helpers: independent brute-force oracles used to validate the
production code paths."""

from __future__ import annotations

import pytest

from dicomp.digraph import Digraph
from dicomp.implication import direct_forces, pairs


def closure_partition(d: Digraph) -> list[frozenset]:
    """Implication classes by pairwise transitive closure of
    direct_forces; independent of the flood-fill kernels."""
    ps = pairs(d)
    parent = list(range(len(ps)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(ps)):
        for j in range(i + 1, len(ps)):
            if direct_forces(d, ps[i], ps[j]):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[rj] = ri
    groups: dict[int, set] = {}
    for i, p in enumerate(ps):
        groups.setdefault(find(i), set()).add(p)
    return sorted((frozenset(g) for g in groups.values()), key=sorted)


def anchored_partition(d: Digraph, x: int) -> list[list[int]]:
    """Partition of N(x) by closure of direct forcing restricted to pairs
    with first coordinate x; independent of the knotting module."""
    neigh = [y for y in range(d.n) if y != x and d.adjacent(x, y)]
    parent = {y: y for y in neigh}

    def find(y: int) -> int:
        while parent[y] != y:
            parent[y] = parent[parent[y]]
            y = parent[y]
        return y

    for i, y in enumerate(neigh):
        for z in neigh[i + 1:]:
            if direct_forces(d, (x, y), (x, z)):
                ry, rz = find(y), find(z)
                if ry != rz:
                    parent[rz] = ry
    groups: dict[int, list[int]] = {}
    for y in neigh:
        groups.setdefault(find(y), []).append(y)
    return sorted((sorted(g) for g in groups.values()))


def tournament_3cycle() -> Digraph:
    return Digraph(3, [(0, 1), (1, 2), (2, 0)])


def transitive_tournament(n: int) -> Digraph:
    return Digraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
