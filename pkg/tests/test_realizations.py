import pytest

from geocycle.graphs import AbstractGraph
from geocycle.hom import HomKind, find_homomorphism, verify_map
from geocycle.realizations import build_poset, sample_realizations


def test_sampling_is_deterministic():
    a = sample_realizations(AbstractGraph.cycle(5), 300, seed=7)
    b = sample_realizations(AbstractGraph.cycle(5), 300, seed=7)
    assert [c.signature for c in a] == [c.signature for c in b]
    assert [c.representative for c in a] == [c.representative for c in b]


def test_class_count_monotone_in_trials():
    counts = [len(sample_realizations(AbstractGraph.cycle(5), t, seed=3)) for t in (10, 100, 1000)]
    assert counts == sorted(counts)


def test_classes_pairwise_non_isomorphic():
    classes = sample_realizations(AbstractGraph.cycle(5), 1000, seed=0)
    for i, a in enumerate(classes):
        for b in classes[i + 1:]:
            assert find_homomorphism(a.representative, b.representative, HomKind.GEOMETRIC_ISOMORPHISM) is None


def test_c4_poset_is_two_chain():
    classes = sample_realizations(AbstractGraph.cycle(4), 500, seed=0)
    assert [c.crossing_count for c in classes] == [0, 1]
    poset = build_poset(classes)
    assert poset.is_chain and poset.covers == [(0, 1)] and poset.maximal == [1]


def test_poset_witnesses_verify():
    classes = sample_realizations(AbstractGraph.cycle(5), 2000, seed=0)
    poset = build_poset(classes)
    for (i, j), f in poset.witnesses.items():
        assert verify_map(classes[i].representative, classes[j].representative, f, HomKind.INJECTIVE_GEOMETRIC)
    assert len(poset.maximal) == 1
    assert classes[poset.maximal[0]].crossing_count == 5


def test_too_large_graph_rejected():
    with pytest.raises(ValueError):
        sample_realizations(AbstractGraph.cycle(8), 10)
