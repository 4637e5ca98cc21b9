"""Digraph and graph containers plus the edge-list file format.

Vertices are dense integers 0..n-1.  A digraph is immutable after
construction; derived structures (adjacency matrix, neighbour bitmasks,
in/out lists) are built once in the constructor so arc-membership queries
are O(1) and neighbourhood scans are O(n).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np


class ParseError(ValueError):
    """Raised on malformed edge-list input; message names the line."""


class Digraph:
    """A loopless digraph on vertices 0..n-1 with an ordered arc set."""

    __slots__ = ("n", "arcs", "adj", "out", "inn", "row_mask", "col_mask",
                 "und_mask", "names", "_ids")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]],
                 names: Optional[dict[int, str]] = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        arcset = set()
        for u, v in arcs:
            if u == v:
                raise ValueError(f"loop arc {u}->{v}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc {u}->{v} out of range for n={n}")
            arcset.add((u, v))
        self.n = n
        self.arcs = frozenset(arcset)
        adj = np.zeros((n, n), dtype=np.uint8)
        for u, v in arcset:
            adj[u, v] = 1
        self.adj = adj
        self.out = [sorted(v for v in range(n) if adj[u, v]) for u in range(n)]
        self.inn = [sorted(u for u in range(n) if adj[u, v]) for v in range(n)]
        row = [0] * n
        col = [0] * n
        und = [0] * n
        for u, v in arcset:
            row[u] |= 1 << v
            col[v] |= 1 << u
            und[u] |= 1 << v
            und[v] |= 1 << u
        self.row_mask = row     # row_mask[u]: bit v set iff arc u->v
        self.col_mask = col     # col_mask[v]: bit u set iff arc u->v
        self.und_mask = und     # und_mask[u]: bit v set iff u,v adjacent
        self.names = dict(names) if names else {}
        self._ids = {name: vid for vid, name in self.names.items()}

    # -- basic queries -------------------------------------------------

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.adj[u, v])

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj[u, v] or self.adj[v, u])

    def arc_count(self) -> int:
        return len(self.arcs)

    def label(self, v: int) -> str:
        return self.names.get(v, str(v))

    def vertex_id(self, token: str) -> int:
        """Resolve a label or a decimal id to a vertex id."""
        if token in self._ids:
            return self._ids[token]
        try:
            vid = int(token)
        except ValueError:
            raise ValueError(f"unknown vertex {token!r}") from None
        if not (0 <= vid < self.n):
            raise ValueError(f"vertex id {vid} out of range")
        return vid

    def __eq__(self, other) -> bool:
        return (isinstance(other, Digraph)
                and self.n == other.n and self.arcs == other.arcs)

    def __hash__(self):
        return hash((self.n, self.arcs))

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={sorted(self.arcs)!r})"


@dataclass(frozen=True)
class Graph:
    """A loopless undirected graph on vertices 0..n-1."""

    n: int
    edges: frozenset[frozenset[int]] = field(default_factory=frozenset)

    @staticmethod
    def from_pairs(n: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        edges = set()
        for u, v in pairs:
            if u == v:
                raise ValueError(f"loop edge {u}")
            edges.add(frozenset((u, v)))
        return Graph(n, frozenset(edges))

    def edge_count(self) -> int:
        return len(self.edges)

    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(e)) for e in self.edges)


@dataclass(frozen=True)
class Ordering:
    """A vertex ordering: perm[i] is the vertex in position i (i.e. the
    i-th smallest under the order)."""

    perm: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError("perm is not a permutation of 0..n-1")

    def position(self, v: int) -> int:
        return self.perm.index(v)

    def precedes(self, u: int, v: int) -> bool:
        return self.perm.index(u) < self.perm.index(v)


def is_semicomplete(d: Digraph) -> bool:
    """True iff every two distinct vertices are joined by at least one arc."""
    for u in range(d.n):
        for v in range(u + 1, d.n):
            if not (d.adj[u, v] or d.adj[v, u]):
                return False
    return True


def is_symmetric(d: Digraph) -> bool:
    """True iff every arc has its reverse present."""
    return all((v, u) in d.arcs for u, v in d.arcs)


def underlying_graph(d: Digraph) -> Graph:
    """Forget arc directions: edge {u,v} iff u,v adjacent in d."""
    return Graph.from_pairs(d.n, ((u, v) for u, v in d.arcs))


def symmetric_digraph(g: Graph) -> Digraph:
    """Embed a graph as the digraph with both arcs per edge."""
    arcs = []
    for u, v in g.sorted_edges():
        arcs.append((u, v))
        arcs.append((v, u))
    return Digraph(g.n, arcs)


def load_digraph(text: str) -> Digraph:
    """Parse the edge-list format.

    Optional leading lines ``# name <id> <label>`` bind vertex labels.
    The first non-name line is ``n m``; it is followed by m lines ``u v``,
    each meaning the arc u->v.  Duplicate arc lines are idempotent.
    """
    names: dict[int, str] = {}
    header: Optional[tuple[int, int]] = None
    arcs: list[tuple[int, int]] = []
    declared = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if parts[:1] == ["name"]:
                if header is not None:
                    raise ParseError(f"name line after header at line {lineno}")
                if len(parts) != 3:
                    raise ParseError(f"malformed name line at line {lineno}")
                try:
                    vid = int(parts[1])
                except ValueError:
                    raise ParseError(
                        f"malformed name line at line {lineno}") from None
                names[vid] = parts[2]
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise ParseError(f"malformed header at line {lineno}")
            try:
                n, m = int(fields[0]), int(fields[1])
            except ValueError:
                raise ParseError(f"malformed header at line {lineno}") from None
            if n < 0 or m < 0:
                raise ParseError(f"malformed header at line {lineno}")
            header = (n, m)
            continue
        if len(fields) != 2:
            raise ParseError(f"malformed arc at line {lineno}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"malformed arc at line {lineno}") from None
        n = header[0]
        if u == v:
            raise ParseError(f"loop arc at line {lineno}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex id out of range at line {lineno}")
        arcs.append((u, v))
        declared += 1
    if header is None:
        raise ParseError("missing header line")
    if declared != header[1]:
        raise ParseError(
            f"header declares {header[1]} arcs but {declared} were given")
    for vid in names:
        if not (0 <= vid < header[0]):
            raise ParseError(f"name binds vertex id {vid} out of range")
    return Digraph(header[0], arcs, names)


def dump_digraph(d: Digraph) -> str:
    """Serialize to the edge-list format; inverse of load_digraph."""
    lines = [f"# name {vid} {label}" for vid, label in sorted(d.names.items())]
    arcs = sorted(d.arcs)
    lines.append(f"{d.n} {len(arcs)}")
    lines.extend(f"{u} {v}" for u, v in arcs)
    return "\n".join(lines) + "\n"
