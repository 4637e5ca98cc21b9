"""Command-line interface.

Exit codes: 0 comparability/valid, 1 refuted, 2 input error,
3 inconclusive (component limit exceeded).

The FILE argument of each subcommand is an edge-list file or one of the
embedded fixture names (fig1, fig3, fig4).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional

from .digraph import Digraph, Ordering, ParseError, is_semicomplete, \
    load_digraph
from .fixtures import FIXTURES, verify_fixtures
from .implication import (NotSemicompleteError, class_circuit,
                          format_circuit, implication_classes)
from .knotting import (Bipartition, Inconclusive, OddWalk, Refutation,
                       general_comparability_check, is_bipartite,
                       knotting_graph, to_dot)
from .oracle import (InstanceTooLarge, brute_force_ordering,
                     enumerate_digraphs, matrix_forbidden_submatrix_free,
                     sample_digraphs)
from .recognize import (SelfInverseWitness, recognize_semicomplete,
                        verify_ordering)

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_INPUT = 2
EXIT_INCONCLUSIVE = 3


def _load(spec: str) -> Digraph:
    if spec in FIXTURES:
        return FIXTURES[spec]
    return load_digraph(Path(spec).read_text())


def _format_ordering(d: Digraph, o: Ordering) -> str:
    return " ".join(d.label(v) for v in o.perm)


def cmd_classes(args) -> int:
    d = _load(args.file)
    part = implication_classes(d)
    for c in range(part.num_classes()):
        members = part.members_of(c)
        kind = "trivial" if len(members) == 1 else "nontrivial"
        circuit = class_circuit(part, c)
        status = (f"circuit {format_circuit(d, circuit)}" if circuit
                  else "no circuit")
        rep = members[0]
        print(f"class {c} [{d.label(rep[0])},{d.label(rep[1])}]: "
              f"size {len(members)}, inverse {part.inverse(c)}, "
              f"{kind}, "
              f"{'self-inverse' if part.inverse(c) == c else 'not self-inverse'}, "
              f"{status}")
    return EXIT_OK


def cmd_recognize(args) -> int:
    d = _load(args.file)
    if args.general:
        result = general_comparability_check(d, component_limit=args.limit)
        if isinstance(result, Ordering):
            print(f"ordering: {_format_ordering(d, result)}")
            return EXIT_OK
        if isinstance(result, Inconclusive):
            print(f"inconclusive: {result.components} knotting components "
                  f"exceed limit {result.limit}")
            return EXIT_INCONCLUSIVE
        print(f"not a comparability digraph: {result.reason}")
        if result.odd_walk is not None:
            walk = " -> ".join(d.label(v) for v in result.odd_walk.vertices)
            print(f"odd closed knotting walk: {walk}")
        return EXIT_REFUTED
    if not is_semicomplete(d):
        print("error: input is not semicomplete (use --general)",
              file=sys.stderr)
        return EXIT_INPUT
    result = recognize_semicomplete(d, policy=args.policy, seed=args.seed)
    if result.verdict == "comparability":
        print(f"ordering: {_format_ordering(d, result.ordering)}")
        return EXIT_OK
    witness = result.witness
    assert isinstance(witness, SelfInverseWitness)
    print("not a comparability digraph: "
          f"class {witness.class_id} equals its inverse")
    print(f"length-2 circuit: {format_circuit(d, witness.circuit)}")
    return EXIT_REFUTED


def cmd_knotting(args) -> int:
    d = _load(args.file)
    k = knotting_graph(d)
    bip = is_bipartite(k)
    side = bip if isinstance(bip, Bipartition) else None
    if args.dot:
        print(to_dot(d, k, side), end="")
        return EXIT_OK
    print(f"{len(k.nodes)} nodes, {len(k.edges)} edges")
    for x, a in k.nodes:
        tag = f" side={side.side[(x, a)]}" if side else ""
        print(f"node {d.label(x)}^{a}{tag}")
    for (x, a), (y, c) in k.edges:
        print(f"edge {d.label(x)}^{a} -- {d.label(y)}^{c}")
    if isinstance(bip, OddWalk):
        walk = " -> ".join(d.label(v) for v in bip.vertices)
        print(f"not bipartite; odd closed knotting walk: {walk}")
    return EXIT_OK


def cmd_check(args) -> int:
    d = _load(args.file)
    try:
        perm = tuple(d.vertex_id(tok) for tok in args.ordering)
        o = Ordering(perm)
        if len(perm) != d.n:
            raise ValueError("ordering must name every vertex once")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    violation = verify_ordering(d, o)
    if args.matrix:
        clean = matrix_forbidden_submatrix_free(d, o)
        print(f"matrix check: {'clean' if clean else 'forbidden submatrix'}")
        if clean != (violation is None):
            raise AssertionError(
                "matrix characterization disagrees with the ordering check")
    if violation is None:
        print("valid")
        return EXIT_OK
    x, y, z = violation
    print(f"violating triple: ({d.label(x)},{d.label(y)},{d.label(z)})")
    return EXIT_REFUTED


def cmd_oracle(args) -> int:
    d = _load(args.file)
    try:
        o = brute_force_ordering(d, max_n=args.max_n)
    except InstanceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if o is None:
        print("not a comparability digraph (exhaustive search)")
        return EXIT_REFUTED
    print(f"ordering: {_format_ordering(d, o)}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    try:
        if args.sample:
            stream = sample_digraphs(args.n, args.sample, args.seed,
                                     semicomplete_only=args.semicomplete)
        else:
            stream = enumerate_digraphs(args.n,
                                        semicomplete_only=args.semicomplete)
        for d in stream:
            arcs = ",".join(f"{u}>{v}" for u, v in sorted(d.arcs))
            print(f"n={d.n} arcs={arcs}")
    except InstanceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dicomp",
        description="comparability digraph analysis")
    parser.add_argument("--verify-fixtures", action="store_true",
                        help="self-test the embedded fixtures and exit")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("classes", help="implication class report")
    p.add_argument("file")
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("recognize", help="comparability recognition")
    p.add_argument("file")
    p.add_argument("--general", action="store_true",
                   help="use the knotting-graph check (any digraph)")
    p.add_argument("--limit", type=int, default=20,
                   help="knotting component limit for --general")
    p.add_argument("--policy", choices=("min", "max", "shuffle"),
                   default="min")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("knotting", help="knotting graph report")
    p.add_argument("file")
    p.add_argument("--dot", action="store_true", help="DOT output")
    p.set_defaults(func=cmd_knotting)

    p = sub.add_parser("check", help="verify a comparability ordering")
    p.add_argument("file")
    p.add_argument("ordering", nargs="+",
                   help="every vertex once, by label or id")
    p.add_argument("--matrix", action="store_true",
                   help="also run the forbidden-submatrix check")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", help="exhaustive ordering search")
    p.add_argument("file")
    p.add_argument("--max-n", type=int, default=9)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("enumerate", help="stream small digraphs")
    p.add_argument("n", type=int)
    p.add_argument("--semicomplete", action="store_true")
    p.add_argument("--sample", type=int, default=0,
                   help="emit this many seeded samples instead")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verify_fixtures:
        problems = verify_fixtures()
        for msg in problems:
            print(f"fixture problem: {msg}", file=sys.stderr)
        print("fixtures ok" if not problems else "fixtures broken")
        return EXIT_OK if not problems else EXIT_REFUTED
    if not getattr(args, "command", None):
        parser.print_usage(sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except (ParseError, FileNotFoundError, NotSemicompleteError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
