"""Tests for integer partitions and the counting formulas."""

import pytest

from matroid_hvectors.exceptions import MalformedPartitionError, TooLargeError
from matroid_hvectors.partition import (
    Partition,
    bell_number,
    count_classes,
    count_labeled,
    partitions_of,
    total_labeled,
)

# --- Partition value tests ---


class TestPartition:
    """Tests for the Partition value type."""

    def test_plus_form(self):
        """'3+1+1' parses and prints back."""
        partition = Partition.parse("3+1+1")
        assert partition.parts == (3, 1, 1)
        assert str(partition) == "3+1+1"
        assert partition.n == 5
        assert partition.length == 3

    def test_list_form(self):
        """'[3,1,1]' parses to the same value."""
        assert Partition.parse("[3, 1, 1]") == Partition.of(3, 1, 1)
        assert Partition.parse(" 2 + 2 ") == Partition.of(2, 2)

    def test_malformed(self):
        """Zero parts, increasing parts and junk are rejected."""
        for text in ("3+0", "1+3", "abc", "", "[3, \"a\"]", "[3,", "{}", "3++1"):
            with pytest.raises(MalformedPartitionError):
                Partition.parse(text)

    def test_from_sizes_sorts(self):
        """Block sizes in any order become a partition."""
        assert Partition.from_sizes([1, 3, 2, 1]) == Partition.of(3, 2, 1, 1)

    def test_weighted_sum(self):
        """|λ|_k = Σ C(λᵢ, k)."""
        partition = Partition.of(3, 2, 1)
        assert partition.weighted_sum() == 4
        assert partition.weighted_sum(3) == 1

    def test_m_sequence(self):
        """mᵢ = λᵢ - 1."""
        assert Partition.of(3, 1, 1).m_sequence == (2, 0, 0)

    def test_compact_notation(self):
        """Repeated parts are written with a multiplicity."""
        assert Partition.of(3, 2, 1, 1).compact() == "3 2 1x2"
        assert Partition.of(2, 2, 2).compact() == "2x3"
        assert Partition.of(5).compact() == "5"

    def test_multiplicities(self):
        """Sizes map to their counts, largest size first."""
        assert list(Partition.of(3, 1, 1).multiplicities.items()) == [(3, 1), (1, 2)]

    def test_ordering_is_lexicographic(self):
        """Partitions sort by their parts."""
        assert sorted([Partition.of(4, 1, 1), Partition.of(3, 3)]) == [Partition.of(3, 3), Partition.of(4, 1, 1)]


# --- Enumeration tests ---


class TestPartitionsOf:
    """Tests for partition enumeration."""

    def test_reverse_lexicographic_order(self):
        """Partitions of 4 come out from (4) to 1+1+1+1."""
        assert [str(p) for p in partitions_of(4)] == ["4", "3+1", "2+2", "2+1+1", "1+1+1+1"]

    def test_each_once_and_summing_to_n(self):
        """Every partition appears once and sums to n."""
        for n in range(1, 16):
            listed = list(partitions_of(n))
            assert len(listed) == len(set(listed))
            assert all(partition.n == n for partition in listed)

    def test_count_matches_partition_numbers(self):
        """p(n) for n = 1..30 against the enumeration."""
        for n in range(1, 31):
            assert count_classes(n) == len(list(partitions_of(n))) - 1

    def test_range(self):
        """Enumeration covers 1..60."""
        with pytest.raises(TooLargeError):
            list(partitions_of(0))
        with pytest.raises(TooLargeError):
            list(partitions_of(61))


# --- Counting tests ---


def test_class_counts():
    """p(n) - 1 one-dimensional classes."""
    assert count_classes(2) == 1
    assert count_classes(6) == 10
    assert count_classes(7) == 14


def test_labeled_class_sizes():
    """Faà di Bruno coefficients for a few shapes."""
    assert count_labeled(Partition.of(2, 2, 2)) == 15
    assert count_labeled(Partition.of(3, 3)) == 10
    assert count_labeled(Partition.of(4, 1, 1)) == 15
    assert count_labeled(Partition.of(3, 1, 1, 1)) == 20
    assert count_labeled(Partition.of(1, 1, 1)) == 1
    assert count_labeled(Partition.of(5)) == 1


def test_labeled_totals_are_bell_numbers():
    """Σ over λ ⊢ n of the class sizes is B(n)."""
    assert total_labeled(2) == 2
    assert total_labeled(3) == 5
    assert total_labeled(4) == 15
    assert total_labeled(7) == 877
    for n in range(1, 16):
        assert total_labeled(n) == bell_number(n)
