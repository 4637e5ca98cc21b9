"""Named example digraphs, embedded so tests cannot drift.

fig1: a non-comparability digraph on 12 vertices whose 16 arcs are all
      non-symmetric; one implication class contains the circuit
      w -> x -> y -> z -> w.
fig3: a non-comparability digraph on 12 vertices none of whose single
      implication classes contains a circuit.
fig4: a semicomplete comparability digraph on 4 vertices with a
      non-transitive implication class.

Unlabeled vertices carry deterministic ids in drawing order.
"""

from __future__ import annotations

from .digraph import Digraph

FIG1 = Digraph(
    12,
    [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 5), (2, 6), (6, 3),
     (5, 8), (9, 5), (9, 6), (10, 6), (11, 10), (10, 9), (9, 8), (8, 7)],
    names={2: "w", 5: "x", 6: "z", 9: "y"},
)

FIG3 = Digraph(
    12,
    [(0, 10), (1, 0), (2, 0), (5, 0), (7, 0), (9, 0),
     (1, 2), (1, 3), (1, 7), (1, 10), (6, 1), (9, 1),
     (2, 3), (5, 2), (6, 2), (7, 2),
     (3, 4), (6, 3), (6, 4), (5, 6), (6, 7),
     (7, 8), (9, 8), (7, 10), (9, 7), (9, 10), (10, 11)],
    names={0: "w", 1: "v", 2: "u", 8: "z", 9: "y", 10: "x"},
)

FIG4 = Digraph(
    4,
    [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (2, 0), (1, 3), (3, 1)],
    names={0: "x", 1: "m", 2: "y", 3: "z"},
)

FIXTURES = {"fig1": FIG1, "fig3": FIG3, "fig4": FIG4}


def verify_fixtures() -> list[str]:
    """Structural self-checks; returns a list of failure messages."""
    problems = []
    if FIG1.n != 12 or FIG1.arc_count() != 16:
        problems.append("fig1 must have 12 vertices and 16 arcs")
    if any((v, u) in FIG1.arcs for u, v in FIG1.arcs):
        problems.append("fig1 arcs must all be non-symmetric")
    from .digraph import is_semicomplete
    if FIG4.n != 4 or not is_semicomplete(FIG4):
        problems.append("fig4 must be semicomplete on 4 vertices")
    sym_pairs = {frozenset((u, v)) for u, v in FIG4.arcs
                 if (v, u) in FIG4.arcs}
    if len(sym_pairs) != 2:
        problems.append("fig4 must have exactly 2 symmetric adjacent pairs")
    if FIG3.n != 12 or set(FIG3.names.values()) != \
            {"w", "v", "u", "z", "y", "x"}:
        problems.append("fig3 must have 12 vertices labeled w,v,u,z,y,x")
    return problems
