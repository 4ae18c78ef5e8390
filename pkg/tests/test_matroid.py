import itertools

import pytest

from spechtkit.combinatorics import Partition, all_permutations, partitions_of, word_from_text
from spechtkit.errors import DomainError
from spechtkit.matroid import (
    LinearMatroid,
    format_poly1,
    format_poly2,
    poly1_to_json,
    poly2_to_json,
    specht_matroid,
)

W = word_from_text


def test_labels_must_match_columns():
    with pytest.raises(DomainError):
        LinearMatroid((0, 1), ((1, 0),))
    with pytest.raises(DomainError):
        LinearMatroid((0, 0), ((1, 0), (0, 1)))


def test_rank_and_closure(x_matroid):
    m = x_matroid
    assert m.rank() == 3
    assert m.rank([0]) == 1
    assert m.rank([]) == 0
    assert m.closure([0, 1]) == frozenset({0, 1, 3, 4})
    assert m.closure([]) == frozenset()
    with pytest.raises(DomainError):
        m.rank([99])


def test_x_matroid_flats(x_matroid):
    flats = [sorted(f) for f in x_matroid.flats()]
    expected = [
        [],
        [0],
        [1],
        [2],
        [3],
        [4],
        [5],
        [0, 2],
        [0, 5],
        [1, 2],
        [1, 5],
        [2, 3],
        [2, 4],
        [2, 5],
        [3, 5],
        [4, 5],
        [0, 1, 3, 4],
        [0, 1, 2, 3, 4, 5],
    ]
    assert sorted(flats) == sorted(expected)
    assert len(x_matroid.flats(rank=1)) == 6
    assert len(x_matroid.proper_nonempty_flats()) == 16


def test_x_matroid_polynomials(x_matroid):
    assert (
        format_poly2(x_matroid.tutte_polynomial())
        == "x^3 + x*y^2 + y^3 + 3*x^2 + 2*x*y + 2*y^2 + 3*x + 3*y"
    )
    assert format_poly1(x_matroid.characteristic_polynomial()) == "t^3 - 6*t^2 + 12*t - 7"


def test_matroid_2_2_circuits_bases_flats():
    m = specht_matroid(Partition((2, 2)))
    pairs = {frozenset(c) for c in m.circuits(max_size=2)}
    assert pairs == {
        frozenset({W("1122"), W("2211")}),
        frozenset({W("1212"), W("2121")}),
        frozenset({W("1221"), W("2112")}),
    }
    # plus one circuit per transversal of the three parallel classes
    assert len(m.circuits()) == 3 + 8
    assert m.has_two_element_circuit()
    assert m.bases_count() == 12
    assert len(m.flats()) == 5  # empty, three parallel pairs, everything


def test_matroid_2_1_1_1_polynomials():
    m = specht_matroid(Partition((2, 1, 1, 1)))
    assert format_poly2(m.tutte_polynomial()) == "x^4 + x^3 + x^2 + x + y"
    assert (
        format_poly1(m.characteristic_polynomial())
        == "t^4 - 5*t^3 + 10*t^2 - 10*t + 4"
    )


def test_matroid_2_2_1_characteristic_polynomial():
    m = specht_matroid(Partition((2, 2, 1)))
    assert (
        format_poly1(m.characteristic_polynomial())
        == "t^5 - 10*t^4 + 45*t^3 - 105*t^2 + 120*t - 51"
    )


def test_tutte_strategies_agree(x_matroid):
    mats = [
        x_matroid,
        specht_matroid(Partition((2, 2))),
        specht_matroid(Partition((2, 1, 1))),
        LinearMatroid(("a", "b", "c"), ((1, 0), (0, 1), (0, 0))),
    ]
    for m in mats:
        subsets = m.tutte_polynomial("subsets")
        assert m.tutte_polynomial("deletion-contraction") == subsets
        assert m.tutte_polynomial("flats") == subsets


def test_tutte_specializations(x_matroid):
    for m in [x_matroid, specht_matroid(Partition((2, 2)))]:
        t = m.tutte_polynomial()
        assert m.bases_count() == sum(t.values())  # T(1, 1)
        assert sum(c * 2**i * 2**j for (i, j), c in t.items()) == 2**m.size


def test_loops_and_coloops():
    m = LinearMatroid(("a", "b"), ((0, 0), (1, 0)))
    assert m.loops() == {"a"}
    assert m.tutte_polynomial() == {(1, 1): 1}
    assert {frozenset(c) for c in m.circuits()} == {frozenset({"a"})}


@pytest.mark.parametrize("n", range(2, 6))
def test_two_element_circuit_detection_matches_enumeration(n):
    for p in partitions_of(n):
        m = specht_matroid(p)
        if m.size > m.limits.max_circuit_ground:
            continue
        pairs = [c for c in m.circuits(max_size=2)]
        assert m.has_two_element_circuit() == bool(pairs)


@pytest.mark.parametrize(
    "parts,expected",
    [((2, 2), True), ((2, 1, 1), False), ((3, 1), True), ((4, 1), True)],
)
def test_two_element_circuit_iff_conjugate_has_repeated_part(parts, expected):
    p = Partition(parts)
    assert specht_matroid(p).has_two_element_circuit() == expected
    conj = p.conjugate().parts
    assert (len(set(conj)) < len(conj)) == expected


def test_rank_is_submodular(x_matroid):
    labels = x_matroid.labels
    subsets = [
        set(s)
        for size in range(4)
        for s in itertools.combinations(labels, size)
    ]
    for a in subsets:
        for b in subsets:
            assert x_matroid.rank(a | b) + x_matroid.rank(a & b) <= x_matroid.rank(
                a
            ) + x_matroid.rank(b)


@pytest.mark.parametrize("n", range(2, 5))
def test_flats_are_stable_under_letter_position_relabeling(n):
    for p in partitions_of(n):
        m = specht_matroid(p)
        flats = {frozenset(f) for f in m.flats()}
        for sigma in all_permutations(n):
            relabeled = {
                frozenset(sigma.apply(w) for w in f) for f in flats
            }
            assert relabeled == flats


def test_poly_json_serializers(x_matroid):
    t = poly2_to_json(x_matroid.tutte_polynomial())
    assert t["x^3"] == 1 and t["x*y^2"] == 1 and t["y"] == 3
    c = poly1_to_json(x_matroid.characteristic_polynomial())
    assert c == {"1": -7, "t": 12, "t^2": -6, "t^3": 1}


def test_format_poly_edge_cases():
    assert format_poly2({}) == "0"
    assert format_poly1({0: -1}) == "-1"
    assert format_poly1({1: 1, 0: -2}) == "t - 2"
