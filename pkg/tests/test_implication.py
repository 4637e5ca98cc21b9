import pytest

from conftest import closure_partition, tournament_3cycle
from dicomp.digraph import Digraph
from dicomp.fixtures import FIG1, FIG3, FIG4
from dicomp.implication import (NotSemicompleteError, canonical_chain,
                                class_circuit, direct_forces,
                                direct_forces_semicomplete, format_circuit,
                                implication_classes, is_canonical_chain,
                                is_self_inverse, pairs, union_has_circuit)
from dicomp.oracle import enumerate_digraphs, sample_digraphs

# fig4 labels
X, M, Y, Z = 0, 1, 2, 3


def test_pairs_counts():
    assert pairs(Digraph(2, [(0, 1)])) == [(0, 1), (1, 0)]
    assert len(pairs(FIG4)) == 12
    assert len(pairs(FIG1)) == 32


def test_direct_forces_fig4_examples():
    assert direct_forces(FIG4, (X, Y), (X, M))
    assert direct_forces(FIG4, (X, Y), (X, Y))
    assert not direct_forces(FIG4, (X, Y), (X, Z))


def test_direct_forces_reflexive_and_symmetric():
    for d in sample_digraphs(5, 60, seed=11):
        ps = pairs(d)
        for p in ps:
            assert direct_forces(d, p, p)
        for p in ps:
            for q in ps:
                assert direct_forces(d, p, q) == direct_forces(d, q, p)


def test_semicomplete_fast_path_examples():
    assert direct_forces_semicomplete(FIG4, (X, Y), (X, M))
    assert direct_forces_semicomplete(FIG4, (Y, Z), (M, Z))
    # symmetric arcs between the two second coordinates block forcing
    assert not direct_forces_semicomplete(FIG4, (M, X), (M, Y))
    with pytest.raises(NotSemicompleteError):
        direct_forces_semicomplete(FIG1, (2, 5), (2, 6))


def test_semicomplete_fast_path_matches_general_n4():
    for d in enumerate_digraphs(4, semicomplete_only=True):
        ps = pairs(d)
        for p in ps:
            for q in ps:
                if p[0] == q[0] or p[1] == q[1]:
                    assert direct_forces_semicomplete(d, p, q) == \
                        direct_forces(d, p, q)


def test_classes_match_closure_oracle():
    for d in enumerate_digraphs(4):
        part = implication_classes(d)
        ours = sorted((frozenset(part.members_of(c))
                       for c in range(part.num_classes())), key=sorted)
        assert ours == closure_partition(d)


def test_classes_fig4():
    part = implication_classes(FIG4)
    xy = part.class_of[(X, Y)]
    assert set(part.members_of(xy)) == \
        {(X, Y), (X, M), (M, Y), (M, Z), (Y, Z)}
    assert set(part.members_of(part.inverse(xy))) == \
        {(Y, X), (M, X), (Y, M), (Z, M), (Z, Y)}
    assert part.is_trivial(part.class_of[(X, Z)])
    assert part.is_trivial(part.class_of[(Z, X)])
    assert part.num_classes() == 4


def test_classes_single_arc():
    part = implication_classes(Digraph(2, [(0, 1)]))
    assert part.num_classes() == 2
    assert part.is_trivial(0) and part.is_trivial(1)
    assert part.inverse(part.class_of[(0, 1)]) == part.class_of[(1, 0)]


def test_classes_fig3_nontrivial():
    part = implication_classes(FIG3)
    x, y, u, v = 10, 9, 2, 1
    expected = {part.class_of[(x, y)], part.class_of[(y, x)],
                part.class_of[(u, v)], part.class_of[(v, u)]}
    assert set(part.nontrivial_ids()) == expected
    assert len(expected) == 4


def test_inverse_closure_property():
    for d in sample_digraphs(6, 40, seed=7):
        part = implication_classes(d)
        for c in range(part.num_classes()):
            reversed_members = {(y, x) for x, y in part.members_of(c)}
            assert reversed_members == set(part.members_of(part.inverse(c)))


def test_canonical_chain_identity():
    chain = canonical_chain(FIG4, (X, Y), (X, Y))
    assert chain.steps == ((X, Y),)


def test_canonical_chain_fig4():
    chain = canonical_chain(FIG4, (X, Y), (Y, Z))
    assert chain.steps[0] == (X, Y) and chain.steps[-1] == (Y, Z)
    assert is_canonical_chain(FIG4, chain)


def test_canonical_chain_rejects_unrelated():
    with pytest.raises(ValueError, match="same implication class"):
        canonical_chain(FIG4, (X, Y), (X, Z))


def test_canonical_chain_random():
    for d in sample_digraphs(6, 25, seed=3, semicomplete_only=True):
        part = implication_classes(d)
        for c in part.nontrivial_ids()[:2]:
            members = part.members_of(c)
            chain = canonical_chain(d, members[0], members[-1])
            assert chain.steps[0] == members[0]
            assert chain.steps[-1] == members[-1]
            assert is_canonical_chain(d, chain)


def test_class_circuit_fig1():
    part = implication_classes(FIG1)
    w, x, y, z = 2, 5, 9, 6
    c = part.class_of[(w, x)]
    assert {(w, x), (x, y), (y, z), (z, w)} <= set(part.members_of(c))
    circuit = class_circuit(part, c)
    assert circuit is not None
    assert set(circuit.pairs()) <= set(part.members_of(c))
    assert format_circuit(FIG1, circuit) == "w -> x -> y -> z -> w"


def test_class_circuit_absent_fig4():
    part = implication_classes(FIG4)
    assert class_circuit(part, part.class_of[(X, Y)]) is None


def test_length2_circuit_in_self_inverse_class():
    d = tournament_3cycle()
    part = implication_classes(d)
    c = part.nontrivial_ids()[0]
    assert is_self_inverse(part, c)
    circuit = class_circuit(part, c)
    assert circuit is not None


def test_is_self_inverse_figures():
    for d in (FIG1, FIG3):
        part = implication_classes(d)
        assert all(not is_self_inverse(part, c)
                   for c in range(part.num_classes()))


def test_unknown_class_id():
    part = implication_classes(FIG4)
    with pytest.raises(KeyError):
        part.members_of(99)
    with pytest.raises(KeyError):
        class_circuit(part, 99)


def test_union_has_circuit_fig3():
    part = implication_classes(FIG3)
    x, y, u, v = 10, 9, 2, 1
    xy = part.class_of[(x, y)]
    uv = part.class_of[(u, v)]
    vu = part.class_of[(v, u)]
    assert union_has_circuit(part, [xy], FIG3) is None
    for other in (uv, vu):
        circuit = union_has_circuit(part, [xy, other], FIG3)
        assert circuit is not None
        allowed = set(part.members_of(xy)) | set(part.members_of(other))
        assert set(circuit.pairs()) <= allowed
    assert union_has_circuit(part, [], FIG3) is None
