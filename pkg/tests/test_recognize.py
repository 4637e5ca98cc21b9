import pytest

from conftest import tournament_3cycle, transitive_tournament
from dicomp.digraph import Graph, Ordering
from dicomp.fixtures import FIG1, FIG4
from dicomp.implication import NotSemicompleteError, implication_classes
from dicomp.oracle import brute_force_ordering, enumerate_digraphs, \
    sample_digraphs
from dicomp.recognize import (SelfInverseWitness, audit_ordering_consistency,
                              graph_comparability, recognize_semicomplete,
                              verify_ordering)


def test_verify_ordering_accepts_fig4():
    assert verify_ordering(FIG4, Ordering((0, 1, 2, 3))) is None


def test_verify_ordering_reports_first_triple():
    # swapping x and m puts m before x, breaking m < x < y
    assert verify_ordering(FIG4, Ordering((1, 0, 2, 3))) == (1, 0, 2)


def test_verify_ordering_rejects_wrong_length():
    with pytest.raises(ValueError):
        verify_ordering(FIG4, Ordering((0, 1, 2)))


def test_verify_ordering_matches_naive_check():
    def naive(d, perm):
        pos = {v: i for i, v in enumerate(perm)}
        for x in range(d.n):
            for y in range(d.n):
                for z in range(d.n):
                    if len({x, y, z}) < 3:
                        continue
                    if pos[x] < pos[y] < pos[z]:
                        if d.has_arc(x, y) and d.has_arc(y, z) \
                                and not d.has_arc(x, z):
                            return False
                        if d.has_arc(z, y) and d.has_arc(y, x) \
                                and not d.has_arc(z, x):
                            return False
        return True

    import itertools
    for d in sample_digraphs(4, 30, seed=2):
        for perm in itertools.permutations(range(4)):
            got = verify_ordering(d, Ordering(perm))
            assert (got is None) == naive(d, perm)


def test_recognize_rejects_non_semicomplete():
    with pytest.raises(NotSemicompleteError):
        recognize_semicomplete(FIG1)


def test_recognize_3cycle_witness():
    d = tournament_3cycle()
    result = recognize_semicomplete(d)
    assert result.verdict == "not-comparability"
    assert result.ordering is None
    assert isinstance(result.witness, SelfInverseWitness)
    circuit = result.witness.circuit
    assert len(circuit.vertices) == 2
    part = implication_classes(d)
    assert part.inverse(result.witness.class_id) == result.witness.class_id
    members = set(part.members_of(result.witness.class_id))
    assert set(circuit.pairs()) <= members


def test_recognize_transitive_tournament():
    result = recognize_semicomplete(transitive_tournament(7))
    assert result.verdict == "comparability"
    assert result.ordering.perm == tuple(range(7))


def test_recognize_fig4_policies():
    r_min = recognize_semicomplete(FIG4, policy="min")
    assert r_min.verdict == "comparability"
    assert r_min.ordering.perm == (0, 1, 2, 3)      # x m y z
    r_max = recognize_semicomplete(FIG4, policy="max")
    assert r_max.verdict == "comparability"
    assert verify_ordering(FIG4, r_max.ordering) is None
    for seed in range(5):
        r = recognize_semicomplete(FIG4, policy="shuffle", seed=seed)
        assert r.verdict == "comparability"
        assert verify_ordering(FIG4, r.ordering) is None


def test_recognize_unknown_policy():
    with pytest.raises(ValueError, match="policy"):
        recognize_semicomplete(FIG4, policy="median")


def test_recognize_matches_oracle_exhaustive_n4():
    for d in enumerate_digraphs(4, semicomplete_only=True):
        result = recognize_semicomplete(d)
        oracle = brute_force_ordering(d)
        if oracle is None:
            assert result.verdict == "not-comparability"
        else:
            assert result.verdict == "comparability"
            assert verify_ordering(d, result.ordering) is None


def test_recognize_matches_oracle_samples():
    for n, seed in ((6, 31), (7, 32)):
        for d in sample_digraphs(n, 150, seed, semicomplete_only=True):
            result = recognize_semicomplete(d)
            oracle = brute_force_ordering(d)
            assert (result.verdict == "comparability") == (oracle is not None)
            if result.ordering is not None:
                assert verify_ordering(d, result.ordering) is None


def test_ordering_respects_chosen_classes():
    for d in sample_digraphs(6, 40, seed=8, semicomplete_only=True):
        result = recognize_semicomplete(d)
        if result.verdict != "comparability":
            continue
        part = implication_classes(d)
        assert audit_ordering_consistency(d, result.ordering, part) == []


def test_audit_flags_split_class():
    part = implication_classes(FIG4)
    bad = Ordering((0, 2, 1, 3))                    # x y m z splits [x,y]
    violations = audit_ordering_consistency(FIG4, bad, part)
    assert violations
    v = violations[0]
    members = set(part.members_of(v.class_id))
    assert v.agreeing in members and v.disagreeing in members
    good = Ordering((0, 1, 2, 3))
    assert audit_ordering_consistency(FIG4, good, part) == []


def path_graph(n):
    return Graph.from_pairs(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph.from_pairs(n, [(i, (i + 1) % n) for i in range(n)])


def test_graph_comparability_path():
    result = graph_comparability(path_graph(5))
    assert result.verdict == "comparability"


def test_graph_comparability_odd_hole():
    result = graph_comparability(cycle_graph(5))
    assert result.verdict == "not-comparability"
    assert result.witness.reason == "odd closed knotting walk"


def test_graph_comparability_component_limit():
    g = Graph.from_pairs(44, [(2 * i, 2 * i + 1) for i in range(22)])
    with pytest.raises(RuntimeError, match="components"):
        graph_comparability(g, component_limit=20)
