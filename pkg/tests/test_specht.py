import json

import pytest

from spechtkit.combinatorics import (
    Partition,
    all_permutations,
    partitions_of,
    word_from_text,
)
from spechtkit.errors import DomainError
from spechtkit.specht import (
    SpechtMatrix,
    column_action_witness,
    pair_matrix_entry,
    specht_matrix,
    specht_module_dimension,
    young_character,
)

W = word_from_text

GOLDEN_22_LABELS = ["1122", "1212", "1221", "2112", "2121", "2211"]
GOLDEN_22_ENTRIES = [
    [0, 1, -1, -1, 1, 0],
    [-1, 0, 1, 1, 0, -1],
    [1, -1, 0, 0, -1, 1],
    [1, -1, 0, 0, -1, 1],
    [-1, 0, 1, 1, 0, -1],
    [0, 1, -1, -1, 1, 0],
]


def test_young_character_base_pair_is_one():
    for n in range(1, 7):
        for p in partitions_of(n):
            r1, r2 = p.canonical_words()
            assert young_character(r1, r2, r1, r2) == 1


def test_young_character_repeated_column_is_zero():
    r1, r2 = Partition((2, 2)).canonical_words()
    assert young_character((1, 1, 2, 2), (1, 1, 2, 2), r1, r2) == 0


def test_young_character_rejects_non_complementary_base():
    with pytest.raises(DomainError):
        young_character((1, 1), (1, 1), (1, 1), (1, 1))


def test_young_character_rejects_foreign_words():
    r1, r2 = Partition((2, 1)).canonical_words()
    with pytest.raises(DomainError):
        young_character((1, 2, 3), (1, 2, 1), r1, r2)


def test_matrix_2_2_golden():
    mat = specht_matrix(Partition((2, 2)))
    assert [".".join(map(str, w)).replace(".", "") for w in mat.row_labels] == GOLDEN_22_LABELS
    assert mat.row_labels == mat.col_labels
    assert [list(row) for row in mat.entries] == GOLDEN_22_ENTRIES
    assert mat.rank() == 2


def test_matrix_2_1_1_golden_submatrix():
    # rows indexed by rearrangements of 1123, columns by those of 1112
    mat = specht_matrix(Partition((2, 1, 1)))
    cols = [W("1211"), W("1121"), W("1112"), W("2111")]
    rows = {
        W("1123"): [1, 0, 0, -1],
        W("1132"): [-1, 0, 0, 1],
        W("1213"): [0, -1, 0, 1],
        W("1231"): [0, 0, 1, -1],
        W("1312"): [0, 1, 0, -1],
        W("1321"): [0, 0, -1, 1],
        W("2113"): [-1, 1, 0, 0],
        W("2131"): [1, 0, -1, 0],
        W("2311"): [0, -1, 1, 0],
        W("3112"): [1, -1, 0, 0],
        W("3121"): [-1, 0, 1, 0],
        W("3211"): [0, 1, -1, 0],
    }
    assert set(mat.row_labels) == set(rows)
    for w1, expect in rows.items():
        assert [mat.entry(w1, w2) for w2 in cols] == expect


@pytest.mark.parametrize("n", range(1, 7))
def test_entries_are_signs(n):
    for p in partitions_of(n):
        mat = specht_matrix(p)
        for row in mat.entries:
            for x in row:
                assert x in (-1, 0, 1)


@pytest.mark.parametrize("n", range(2, 7))
def test_row_sums_vanish_for_non_column_shapes(n):
    for p in partitions_of(n):
        if p.parts == (1,) * n:
            continue
        mat = specht_matrix(p)
        for row in mat.entries:
            assert sum(row) == 0


@pytest.mark.parametrize("n", range(1, 7))
def test_rank_equals_hook_length_dimension(n):
    for p in partitions_of(n):
        assert specht_module_dimension(p) == p.dimension()


@pytest.mark.parametrize("n", range(1, 5))
def test_simultaneous_position_permutation_multiplies_by_sign(n):
    for p in partitions_of(n):
        r1, r2 = p.canonical_words()
        mat = specht_matrix(p)
        for sigma in all_permutations(n):
            s = sigma.sign()
            for w1 in mat.row_labels:
                for w2 in mat.col_labels:
                    assert young_character(
                        sigma.apply(w1), sigma.apply(w2), r1, r2
                    ) == s * young_character(w1, w2, r1, r2)


@pytest.mark.parametrize("n", range(1, 6))
def test_transposed_matrix_is_signed_conjugate_matrix(n):
    for p in partitions_of(n):
        mat = specht_matrix(p)
        conj = specht_matrix(p.conjugate())
        assert mat.col_labels == conj.row_labels
        assert mat.row_labels == conj.col_labels
        transposed = [
            [mat.entries[i][j] for i in range(len(mat.row_labels))]
            for j in range(len(mat.col_labels))
        ]
        flat_t = [x for row in transposed for x in row]
        flat_c = [x for row in conj.entries for x in row]
        sign = 0
        for a, b in zip(flat_t, flat_c):
            assert (a == 0) == (b == 0)
            if a:
                if sign == 0:
                    sign = a * b
                assert a == sign * b
        assert sign in (-1, 1) or all(x == 0 for x in flat_t)


@pytest.mark.parametrize("n", range(2, 5))
def test_column_action_permutes_columns_with_sign(n):
    for p in partitions_of(n):
        for sigma in all_permutations(n):
            witness = column_action_witness(p, sigma)
            mat = specht_matrix(p)
            assert set(witness) == set(mat.col_labels)


def test_pair_matrix_entry_normalizes_alphabets():
    assert pair_matrix_entry(W("ABAB"), W("1212")) == pair_matrix_entry(
        W("1212"), W("1212")
    )
    with pytest.raises(DomainError):
        pair_matrix_entry((1, 1, 2), (1, 2, 3))


def test_json_round_trip():
    mat = specht_matrix(Partition((2, 2)))
    again = SpechtMatrix.from_json_dict(json.loads(mat.to_json()))
    assert again == mat


def test_csv_has_header_and_labels():
    mat = specht_matrix(Partition((2,)))
    lines = mat.to_csv().strip().splitlines()
    assert lines[0] == ",12,21"
    assert lines[1] == "11,1,-1"


def test_matrix_guard():
    from spechtkit.config import Limits
    from spechtkit.errors import ResourceLimitError

    with pytest.raises(ResourceLimitError):
        specht_matrix(Partition((4, 4)), Limits(max_matrix_cells=10))
