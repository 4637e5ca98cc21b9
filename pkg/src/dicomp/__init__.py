"""Comparability digraph toolkit: implication classes, knotting graphs,
and certificate-producing recognition of semicomplete comparability
digraphs."""

from ._backend import BACKEND
from .digraph import (Digraph, Graph, Ordering, ParseError, dump_digraph,
                      is_semicomplete, is_symmetric, load_digraph,
                      symmetric_digraph, underlying_graph)
from .implication import (Chain, Circuit, ClassPartition,
                          NotSemicompleteError, canonical_chain,
                          class_circuit, direct_forces,
                          direct_forces_semicomplete, format_chain,
                          format_circuit, implication_classes,
                          is_self_inverse, pairs, union_has_circuit)
from .knotting import (Bipartition, Inconclusive, KnottingGraph, OddWalk,
                       Refutation, Walk, general_comparability_check,
                       is_bipartite, knotting_graph, knotting_walk,
                       to_dot, transform_orientation)
from .oracle import (InstanceTooLarge, brute_force_ordering,
                     enumerate_digraphs, matrix_forbidden_submatrix_free,
                     sample_digraphs)
from .recognize import (RecognitionResult, SelfInverseWitness,
                        audit_ordering_consistency, graph_comparability,
                        recognize_semicomplete, verify_ordering)

__version__ = "0.1.0"


def _core_available() -> bool:
    try:
        from . import _core  # noqa: F401
        return True
    except ImportError:
        return False
