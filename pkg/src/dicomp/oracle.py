"""Independent ground truth: exhaustive ordering search, the forbidden
2x2-submatrix characterization, and small-digraph enumeration.

These operations deliberately avoid the implication-class machinery so
they can validate it.
"""

from __future__ import annotations

import random
from typing import Iterator, Optional

from .digraph import Digraph, Ordering


class InstanceTooLarge(ValueError):
    pass


def brute_force_ordering(d: Digraph, max_n: int = 9) -> Optional[Ordering]:
    """Lexicographically smallest comparability ordering, or None.

    Depth-first search over permutation prefixes, pruning as soon as a
    placed triple violates the defining implications.  Trying vertices in
    ascending id yields the lexicographically smallest accepted
    permutation.
    """
    n = d.n
    if n > max_n:
        raise InstanceTooLarge(
            f"instance too large for oracle (n={n} > max_n={max_n})")
    row, col = d.row_mask, d.col_mask
    full = (1 << n) - 1

    prefix: list[int] = []
    pred = {}                    # vertex -> bitmask of vertices before it

    def extend(used: int) -> bool:
        if used == full:
            return True
        for w in range(n):
            bit = 1 << w
            if used & bit:
                continue
            ok = True
            for y in prefix:
                before_y = pred[y]
                # x < y < w with xy, yw arcs but xw missing
                if (col[w] >> y) & 1 and before_y & col[y] & ~col[w]:
                    ok = False
                    break
                # x < y < w with wy, yx arcs but wx missing
                if (row[w] >> y) & 1 and before_y & row[y] & ~row[w]:
                    ok = False
                    break
            if ok:
                pred[w] = used
                prefix.append(w)
                if extend(used | bit):
                    return True
                prefix.pop()
                del pred[w]
        return False

    if extend(0):
        return Ordering(tuple(prefix))
    return None


def matrix_forbidden_submatrix_free(d: Digraph, o: Ordering) -> bool:
    """Whether permuting the adjacency matrix by o leaves no 2x2 identity
    submatrix with one of its 0 entries on the main diagonal.

    The submatrix takes rows p < q and columns r < s of the permuted
    matrix; its 0 entries sit at (p,s) and (q,r), so the diagonal
    condition is p == s or q == r.
    """
    n = d.n
    perm = o.perm
    m = [[int(d.adj[perm[i], perm[j]]) for j in range(n)] for i in range(n)]
    for p in range(n):
        for q in range(p + 1, n):
            for r in range(n):
                for s in range(r + 1, n):
                    if p != s and q != r:
                        continue
                    if (m[p][r] == 1 and m[p][s] == 0
                            and m[q][r] == 0 and m[q][s] == 1):
                        return False
    return True


def enumerate_digraphs(n: int, semicomplete_only: bool = False
                       ) -> Iterator[Digraph]:
    """Every labeled digraph (or labeled semicomplete digraph) on n
    vertices, exactly once.

    Each unordered vertex pair, in lexicographic order, is one little-
    endian digit of a counter: states 0..3 (none, u->v, v->u, both) in
    general, or 0..2 (u->v, v->u, both) when semicomplete.
    """
    if n > 6:
        raise InstanceTooLarge("exhaustive enumeration capped at n=6")
    vpairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    base = 3 if semicomplete_only else 4
    for code in range(base ** len(vpairs)):
        yield _decode(n, vpairs, code, semicomplete_only)


def sample_digraphs(n: int, count: int, seed: int,
                    semicomplete_only: bool = False) -> Iterator[Digraph]:
    """Seeded uniform samples over the same per-pair state space."""
    rng = random.Random(seed)
    vpairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    base = 3 if semicomplete_only else 4
    for _ in range(count):
        code = rng.randrange(base ** len(vpairs))
        yield _decode(n, vpairs, code, semicomplete_only)


def _decode(n: int, vpairs: list[tuple[int, int]], code: int,
            semicomplete_only: bool) -> Digraph:
    arcs = []
    for u, v in vpairs:
        if semicomplete_only:
            code, state = divmod(code, 3)
            state += 1
        else:
            code, state = divmod(code, 4)
        if state in (1, 3):
            arcs.append((u, v))
        if state in (2, 3):
            arcs.append((v, u))
    return Digraph(n, arcs)
