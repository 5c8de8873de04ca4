"""Layer counting engine: recurrence matrix, count grid, weighted sums.

Claims covered:
    - recurrence matrix entries follow the binomial-difference rule
    - count columns reproduce the known two- and three-layer sequences
    - the last footprint class at horizon k equals the total at k-1
    - weighted column sums through matrix powers match table counts
    - the binomial-weighted matrix powers are symmetric
    - counts agree with the exhaustive census footprint by footprint
"""

import math

import pytest

from consets.layers import (
    footprint_weights,
    pascal_row,
    profile_table,
    recurrence_matrix,
    weighted_power_symmetric,
    weighted_profile_sum,
)
from consets.oracle import complete_path_product, footprint_census


# -- binomials and the matrix ------------------------------------------------

def test_pascal_row_matches_math_comb():
    for m in range(9):
        assert pascal_row(m) == tuple(math.comb(m, j) for j in range(m + 1))


def test_recurrence_matrix_small_cases():
    assert recurrence_matrix(1).rows == ((1,),)
    assert recurrence_matrix(2).rows == ((1, 1), (2, 1))
    assert recurrence_matrix(3).rows == ((1, 2, 1), (2, 3, 1), (3, 3, 1))


@pytest.mark.parametrize("m", range(1, 9))
def test_recurrence_matrix_entry_rule(m):
    matrix = recurrence_matrix(m)
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            expected = math.comb(m, j) - math.comb(m - i, j)
            assert matrix.entry(i - 1, j - 1) == expected
            assert matrix.entry(i - 1, j - 1) >= 0
    assert matrix.rows[-1] == footprint_weights(m)


def test_zero_layer_size_rejected():
    with pytest.raises(ValueError):
        recurrence_matrix(0)
    with pytest.raises(ValueError):
        profile_table(0, 1)


# -- count grid ----------------------------------------------------------------

def test_two_layer_totals_and_first_class():
    table = profile_table(2, 2)
    assert table.total(1) == 3
    assert table.total(2) == 7
    assert table.count(1, 1) == 1
    assert table.count(1, 2) == 2


def test_three_layer_totals():
    table = profile_table(3, 4)
    assert [table.total(k) for k in range(1, 5)] == [7, 37, 205, 1129]


def test_first_column_is_all_ones():
    for m in range(1, 7):
        assert profile_table(m, 1).column(1) == (1,) * m


def test_column_advances_by_matrix():
    table = profile_table(4, 6)
    for k in range(2, 7):
        assert table.column(k) == table.matrix.apply(table.column(k - 1))


def test_total_weights_column_by_binomials():
    table = profile_table(5, 8)
    weights = footprint_weights(5)
    for k in range(1, 9):
        assert table.total(k) == sum(w * c for w, c in zip(weights, table.column(k)))


@pytest.mark.parametrize("m", range(1, 7))
def test_last_class_equals_previous_total(m):
    table = profile_table(m, 30)
    for k in range(2, 31):
        assert table.count(m, k) == table.total(k - 1)


def test_all_entries_strictly_positive():
    for m in range(1, 7):
        table = profile_table(m, 20)
        for k in range(1, 21):
            assert all(c > 0 for c in table.column(k))


def test_tables_are_shared_per_layer_size():
    assert profile_table(3, 5) is profile_table(3, 2)
    assert profile_table(3, 2).k_max >= 5  # prefixes persist


def test_out_of_range_accessors():
    table = profile_table(3, 3)
    with pytest.raises(ValueError, match="outside"):
        table.count(0, 1)
    with pytest.raises(ValueError, match="outside"):
        table.count(4, 1)
    with pytest.raises(ValueError, match="outside computed range"):
        table.total(10 ** 6)
    with pytest.raises(ValueError):
        table.ensure(0)


# -- weighted sums and symmetry ------------------------------------------------

def test_weighted_profile_sum_examples():
    assert weighted_profile_sum(2, 1, 2) == 4  # 2 * count(1, 2)
    assert weighted_profile_sum(3, 2, 3) == 99  # 3 * count(2, 3)


def test_weighted_profile_sum_at_horizon_one_is_binomial():
    for m in range(1, 7):
        for i in range(1, m + 1):
            assert weighted_profile_sum(m, i, 1) == math.comb(m, i)


def test_weighted_profile_sum_matches_table():
    for m in range(2, 7):
        table = profile_table(m, 12)
        weights = footprint_weights(m)
        for k in range(1, 13):
            for i in range(1, m + 1):
                assert weighted_profile_sum(m, i, k) == weights[i - 1] * table.count(i, k)


def test_weighted_profile_sum_index_errors():
    with pytest.raises(ValueError):
        weighted_profile_sum(3, 0, 1)
    with pytest.raises(ValueError):
        weighted_profile_sum(3, 4, 1)


def test_weighted_power_symmetric_sweep():
    assert weighted_power_symmetric(1, 5)
    assert weighted_power_symmetric(2, 1)
    assert weighted_power_symmetric(5, 7)
    for m in range(2, 7):
        for k in range(1, 13):
            assert weighted_power_symmetric(m, k)


# -- census equivalence --------------------------------------------------------

@pytest.mark.parametrize("m", range(1, 5))
def test_counts_match_census_by_footprint(m):
    for k in range(1, 5):
        layered = complete_path_product(m, k)
        table = profile_table(m, k)
        for i in range(1, m + 1):
            footprint = [layered.vertex(k, p) for p in range(i)]
            assert footprint_census(layered, k, footprint).count == table.count(i, k)
