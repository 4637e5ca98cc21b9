"""Knotting graphs, bipartiteness with certificates, knotting walks, and
the general comparability check via orientation transforms.

Each vertex x of the digraph is split into partial copies x^1..x^l, one
per part of the partition of N(x) induced by the anchored forcing
relation: neighbours y, z share a part iff (x,y) and (x,z) are joined by a
forcing chain all of whose pairs have first coordinate x.  Part numbers
are 1-based and assigned by ascending smallest neighbour id.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .digraph import Digraph, Graph, Ordering, underlying_graph
from .implication import Pair, canonical_chain

Node = tuple[int, int]          # (original vertex, 1-based part number)


@dataclass(frozen=True)
class KnottingGraph:
    n_orig: int
    parts: tuple[tuple[tuple[int, ...], ...], ...]   # parts[x][a-1]: part x^a
    nodes: tuple[Node, ...]
    edges: tuple[tuple[Node, Node], ...]
    copy_of: dict[Pair, int]     # (x, neighbour y) -> part a with y in x^a

    def copies(self, x: int) -> int:
        return len(self.parts[x])


def _anchored_parts(d: Digraph, x: int) -> list[list[int]]:
    """Partition of N(x) under the forcing relation anchored at x."""
    neighbours = [y for y in range(d.n) if y != x and d.adjacent(x, y)]
    seen: set[int] = set()
    parts: list[list[int]] = []
    und_x = d.und_mask[x]
    for y0 in neighbours:
        if y0 in seen:
            continue
        comp = [y0]
        seen.add(y0)
        queue = deque([y0])
        while queue:
            y = queue.popleft()
            # z with (x,y) directly forcing (x,z)
            mask = 0
            if d.adj[y, x]:
                mask |= d.row_mask[x] & ~d.row_mask[y]
            if d.adj[x, y]:
                mask |= d.col_mask[x] & ~d.col_mask[y]
            mask &= und_x & ~(1 << y)
            while mask:
                low = mask & -mask
                z = low.bit_length() - 1
                mask ^= low
                if z not in seen:
                    seen.add(z)
                    comp.append(z)
                    queue.append(z)
        parts.append(sorted(comp))
    parts.sort(key=lambda part: part[0])
    return parts


def knotting_graph(d: Digraph) -> KnottingGraph:
    parts = tuple(tuple(tuple(p) for p in _anchored_parts(d, x))
                  for x in range(d.n))
    copy_of: dict[Pair, int] = {}
    for x in range(d.n):
        for a, part in enumerate(parts[x], start=1):
            for y in part:
                copy_of[(x, y)] = a
    nodes = tuple((x, a) for x in range(d.n)
                  for a in range(1, len(parts[x]) + 1))
    edges = tuple(((u, copy_of[(u, v)]), (v, copy_of[(v, u)]))
                  for u, v in underlying_graph(d).sorted_edges())
    return KnottingGraph(d.n, parts, nodes, edges, copy_of)


@dataclass(frozen=True)
class Bipartition:
    side: dict[Node, str]        # node -> "X" | "Y"


@dataclass(frozen=True)
class OddWalk:
    """A closed walk of odd length, as knotting nodes and as the
    corresponding closed knotting walk on original vertices."""

    nodes: tuple[Node, ...]      # closed: first == last
    vertices: tuple[int, ...]    # originals of nodes

    def length(self) -> int:
        return len(self.nodes) - 1


@dataclass(frozen=True)
class Walk:
    """A knotting walk: each interior vertex's two incident pairs are
    knotted."""

    vertices: tuple[int, ...]


def _adjacency(k: KnottingGraph) -> dict[Node, list[Node]]:
    adj: dict[Node, list[Node]] = {v: [] for v in k.nodes}
    for u, v in k.edges:
        adj[u].append(v)
        adj[v].append(u)
    for v in adj:
        adj[v].sort()
    return adj


def is_bipartite(k: KnottingGraph) -> Union[Bipartition, OddWalk]:
    """Two-colour the knotting graph or exhibit an odd closed walk."""
    adj = _adjacency(k)
    colour: dict[Node, int] = {}
    parent: dict[Node, Optional[Node]] = {}
    for start in k.nodes:
        if start in colour:
            continue
        colour[start] = 0
        parent[start] = None
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v not in colour:
                    colour[v] = colour[u] ^ 1
                    parent[v] = u
                    queue.append(v)
                elif colour[v] == colour[u]:
                    up_u = _root_path(parent, u)
                    up_v = _root_path(parent, v)
                    while (len(up_u) > 1 and len(up_v) > 1
                           and up_u[-2] == up_v[-2]):
                        up_u.pop()
                        up_v.pop()
                    # closed odd walk: lca .. v, (v,u) edge, u .. lca
                    nodes = tuple(reversed(up_v)) + tuple(up_u)
                    return OddWalk(nodes, tuple(x for x, _ in nodes))
    return Bipartition({v: "XY"[c] for v, c in colour.items()})


def _root_path(parent: dict[Node, Optional[Node]], v: Node) -> list[Node]:
    path = [v]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path


def odd_closed_walk_within(k: KnottingGraph, bound: int) -> Optional[OddWalk]:
    """Shortest odd closed knotting walk of length <= bound, if one exists.

    Searched independently of is_bipartite, via breadth-first search on the
    bipartite double cover from every node.
    """
    adj = _adjacency(k)
    best: Optional[tuple[int, Node, dict]] = None
    for start in k.nodes:
        dist = {(start, 0): 0}
        prev: dict[tuple[Node, int], tuple[Node, int]] = {}
        queue = deque([(start, 0)])
        while queue:
            u, par = queue.popleft()
            if dist[(u, par)] >= bound:
                continue
            for v in adj[u]:
                state = (v, par ^ 1)
                if state not in dist:
                    dist[state] = dist[(u, par)] + 1
                    prev[state] = (u, par)
                    queue.append(state)
        if (start, 1) in dist and dist[(start, 1)] <= bound:
            if best is None or dist[(start, 1)] < best[0]:
                best = (dist[(start, 1)], start, prev)
    if best is None:
        return None
    _, start, prev = best
    nodes = [(start, 1)]
    while nodes[-1] != (start, 0):
        nodes.append(prev[nodes[-1]])
    seq = tuple(v for v, _ in reversed(nodes))
    return OddWalk(seq, tuple(x for x, _ in seq))


def knotting_walk(d: Digraph, p: Pair, q: Pair) -> Walk:
    """A knotting walk realizing a canonical chain from p to q: the walk
    x_0, y_0, x_1, y_1, ... over the chain's coordinates."""
    chain = canonical_chain(d, p, q)
    verts: list[int] = []
    for x, y in chain.steps:
        verts.append(x)
        verts.append(y)
    return Walk(tuple(verts))


def is_knotting_walk(d: Digraph, k: KnottingGraph, walk: Walk) -> bool:
    v = walk.vertices
    if len(v) < 2:
        return False
    for a, b in zip(v, v[1:]):
        if a == b or not d.adjacent(a, b):
            return False
    for i in range(1, len(v) - 1):
        if k.copy_of[(v[i], v[i - 1])] != k.copy_of[(v[i], v[i + 1])]:
            return False
    return True


@dataclass(frozen=True)
class Refutation:
    reason: str                          # "odd closed knotting walk" or
                                         # "no acyclic transform"
    odd_walk: Optional[OddWalk] = None


@dataclass(frozen=True)
class Inconclusive:
    components: int
    limit: int


def transform_orientation(d: Digraph, k: KnottingGraph,
                          b: Bipartition) -> Digraph:
    """Orient each knotting edge from its X endpoint to its Y endpoint and
    identify partial copies: an orientation of the underlying graph."""
    arcs = []
    for u_node, v_node in k.edges:
        su, sv = b.side.get(u_node), b.side.get(v_node)
        if {su, sv} != {"X", "Y"}:
            raise ValueError("invalid bipartition for this knotting graph")
        if su == "X":
            arcs.append((u_node[0], v_node[0]))
        else:
            arcs.append((v_node[0], u_node[0]))
    return Digraph(d.n, arcs)


def _components(k: KnottingGraph) -> list[list[Node]]:
    adj = _adjacency(k)
    seen: set[Node] = set()
    comps: list[list[Node]] = []
    for start in k.nodes:
        if start in seen:
            continue
        comp = []
        queue = deque([start])
        seen.add(start)
        while queue:
            u = queue.popleft()
            comp.append(u)
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        comps.append(sorted(comp))
    comps.sort(key=lambda c: c[0])
    return comps


def _acyclic_order(n: int, arcs: Sequence[Pair]) -> Optional[Ordering]:
    """Topological order with smallest-vertex tie-breaking, or None."""
    import heapq

    succ: dict[int, list[int]] = {v: [] for v in range(n)}
    indeg = [0] * n
    for u, v in arcs:
        succ[u].append(v)
        indeg[v] += 1
    heap = [v for v in range(n) if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        u = heapq.heappop(heap)
        order.append(u)
        for v in succ[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(heap, v)
    if len(order) != n:
        return None
    return Ordering(tuple(order))


GeneralResult = Union[Ordering, Refutation, Inconclusive]


def general_comparability_check(d: Digraph,
                                component_limit: int = 20) -> GeneralResult:
    """Decide comparability via the knotting graph, when feasible.

    If the knotting graph is non-bipartite the digraph is refuted with an
    odd closed knotting walk.  Otherwise each of the c connected
    components admits exactly two bipartition orientations; all 2^c side
    assignments are tried in lexicographic order and the first acyclic
    transformed orientation yields a comparability ordering.  If none is
    acyclic the digraph is refuted; if c exceeds component_limit the check
    is inconclusive.
    """
    k = knotting_graph(d)
    base = is_bipartite(k)
    if isinstance(base, OddWalk):
        return Refutation("odd closed knotting walk", base)
    comps = _components(k)
    c = len(comps)
    if c > component_limit:
        return Inconclusive(c, component_limit)
    comp_index = {}
    for i, comp in enumerate(comps):
        for node in comp:
            comp_index[node] = i
    for flips in itertools.product((0, 1), repeat=c):
        side = {node: "XY"[(base.side[node] == "Y") ^ flips[comp_index[node]]]
                for node in k.nodes}
        oriented = transform_orientation(d, k, Bipartition(side))
        order = _acyclic_order(d.n, sorted(oriented.arcs))
        if order is not None:
            return order
    return Refutation("no acyclic transform")


def to_dot(d: Digraph, k: KnottingGraph,
           b: Optional[Bipartition] = None) -> str:
    """DOT export; bipartition sides, when given, become node attributes."""
    lines = ["graph knotting {"]
    for x, a in k.nodes:
        attrs = [f'label="{d.label(x)}^{a}"']
        if b is not None:
            attrs.append(f'side="{b.side[(x, a)]}"')
        lines.append(f'  v{x}_{a} [{", ".join(attrs)}];')
    for (x, a), (y, c) in k.edges:
        lines.append(f"  v{x}_{a} -- v{y}_{c};")
    lines.append("}")
    return "\n".join(lines) + "\n"
