"""Tests for monomial ideals, Stanley–Reisner ideals and the witness ideals J_λ."""

from itertools import combinations

import networkx as nx
import pytest

from matroid_hvectors.classification import h_of_partition
from matroid_hvectors.complex import build, cone, from_edges
from matroid_hvectors.exceptions import (
    DimTooHighError,
    GhostVertexError,
    MalformedInputError,
    MalformedPartitionError,
    NotArtinianError,
    NotSquarefreeError,
    TooLargeError,
)
from matroid_hvectors.ideals import (
    Monomial,
    SetPartition,
    complex_from_ideal,
    format_ideal_text,
    hilbert_function,
    is_center_by_ideal,
    monomial_ideal,
    parse_ideal_text,
    recursion_consistent,
    set_partitions_subordinate,
    socle_and_purity,
    stanley_reisner,
    witness_ideal,
)
from matroid_hvectors.matroid import (
    complete_graph,
    delta_of_partition,
    extract_partition,
    is_center,
)
from matroid_hvectors.partition import Partition, count_labeled, partitions_of


def mono(nvars: int, *indices: int) -> Monomial:
    return Monomial.from_indices(nvars, indices)


def max_ideal_squared(nvars: int):
    return monomial_ideal(nvars, (mono(nvars, i, j) for i in range(1, nvars + 1) for j in range(i, nvars + 1)))


# --- Monomial tests ---


class TestMonomial:
    """Tests for Monomial."""

    def test_str(self):
        assert str(Monomial((2, 0, 1))) == "x1^2*x3"
        assert str(Monomial((0, 0))) == "1"

    def test_arithmetic(self):
        x1x2 = mono(3, 1, 2)
        assert x1x2.degree == 2
        assert x1x2.is_squarefree
        assert x1x2.support == 0b011
        assert x1x2.divides(mono(3, 1, 2, 3))
        assert not x1x2.divides(mono(3, 1, 1))
        assert x1x2.times(1) == Monomial((2, 1, 0))
        assert not x1x2.times(1).is_squarefree
        assert Monomial.squarefree(3, 0b101) == mono(3, 1, 3)

    def test_minimal_generators(self):
        """Generators divisible by another generator are dropped."""
        ideal = monomial_ideal(2, [mono(2, 1, 2), mono(2, 1), mono(2, 2, 2)])
        assert ideal.generators == (mono(2, 1), mono(2, 2, 2))
        assert ideal.contains(mono(2, 1, 2))
        assert not ideal.contains(mono(2, 2))
        assert ideal.is_artinian
        assert str(ideal) == "⟨x1, x2^2⟩"

    def test_exponent_length_checked(self):
        with pytest.raises(MalformedInputError):
            monomial_ideal(3, [Monomial((1, 1))])


# --- Stanley–Reisner tests ---


class TestStanleyReisner:
    """Tests for Stanley–Reisner ideals and their inverse."""

    def test_complete_graph(self):
        """K₄ is cut out by the four squarefree cubics."""
        ideal = stanley_reisner(complete_graph(4))
        assert set(ideal.generators) == {mono(4, *triple) for triple in combinations(range(1, 5), 3)}

    def test_two_triangles(self, two_triangles):
        """Quadrics inside each anti-clique; every cubic is already covered."""
        ideal = stanley_reisner(two_triangles)
        assert set(ideal.generators) == {
            mono(6, 1, 3),
            mono(6, 1, 4),
            mono(6, 3, 4),
            mono(6, 2, 5),
            mono(6, 2, 6),
            mono(6, 5, 6),
        }

    def test_path(self, path3):
        assert stanley_reisner(path3).generators == (mono(3, 1, 3),)

    def test_size_limit(self):
        with pytest.raises(TooLargeError):
            stanley_reisner(build(21, [[v] for v in range(1, 22)]))

    def test_round_trip(self, two_triangles, impure_triangle):
        """complex_from_ideal inverts stanley_reisner."""
        complexes = [two_triangles, impure_triangle, build(5, [[1, 2, 3], [3, 4, 5]]), cone(two_triangles)]
        complexes.extend(delta_of_partition(partition) for n in range(1, 9) for partition in partitions_of(n))
        pairs = list(combinations(range(1, 6), 2))
        for code in range(1 << len(pairs)):
            complexes.append(from_edges(5, [pair for position, pair in enumerate(pairs) if code >> position & 1]))
        for delta in complexes:
            assert complex_from_ideal(stanley_reisner(delta)) == delta

    def test_from_ideal_examples(self, two_triangles):
        cubics = monomial_ideal(4, (mono(4, *triple) for triple in combinations(range(1, 5), 3)))
        assert complex_from_ideal(cubics, max_dim=1) == complete_graph(4)
        assert complex_from_ideal(monomial_ideal(2, [mono(2, 1, 2)])).facet_lists() == [[1], [2]]
        assert complex_from_ideal(stanley_reisner(two_triangles), max_dim=1) == two_triangles

    def test_from_ideal_errors(self):
        with pytest.raises(NotSquarefreeError):
            complex_from_ideal(monomial_ideal(2, [mono(2, 1, 1)]))
        with pytest.raises(DimTooHighError):
            complex_from_ideal(monomial_ideal(3, []), max_dim=1)
        with pytest.raises(GhostVertexError):
            complex_from_ideal(monomial_ideal(2, [mono(2, 1)]))
        assert complex_from_ideal(monomial_ideal(3, [])).facet_lists() == [[1, 2, 3]]

    def test_quadrics_form_blocks(self):
        """Degree-2 generators of a matroid are complete quadric blocks on disjoint vertex sets."""
        for n in range(2, 9):
            for partition in partitions_of(n):
                if partition.length < 2:
                    continue
                ideal = stanley_reisner(delta_of_partition(partition))
                graph = nx.Graph()
                graph.add_edges_from(
                    tuple(v + 1 for v in range(n) if generator.support >> v & 1) for generator in ideal.in_degree(2)
                )
                blocks = list(nx.connected_components(graph))
                assert sum(len(block) for block in blocks) <= n
                for block in blocks:
                    assert graph.subgraph(block).number_of_edges() == len(block) * (len(block) - 1) // 2
                sizes = sorted((len(block) for block in blocks), reverse=True)
                assert sizes == [part for part in partition.parts if part > 1]

    def test_center_by_ideal(self, starred_triangle, two_triangles, path3):
        """x_v in no quadric generator exactly when v is a center."""
        for delta in (starred_triangle, two_triangles, path3, complete_graph(4)):
            for vertex in range(1, delta.n + 1):
                assert is_center_by_ideal(delta, vertex) == is_center(delta, vertex)


# --- Witness ideal tests ---


class TestWitnessIdeal:
    """Tests for J_λ."""

    def test_three_one_one(self):
        ideal = witness_ideal(Partition.of(3, 1, 1))
        assert ideal.nvars == 3
        assert ideal.in_degree(2) == (mono(3, 1, 1), mono(3, 1, 2), mono(3, 2, 2))
        assert all(ideal.contains(mono(3, *triple)) for triple in combinations(range(1, 4), 3))
        assert hilbert_function(ideal) == (1, 3, 3)

    def test_three_twos(self):
        ideal = witness_ideal(Partition.of(2, 2, 2))
        assert ideal.nvars == 4
        assert ideal.in_degree(2) == (mono(4, 1, 1), mono(4, 2, 2), mono(4, 3, 3))
        assert hilbert_function(ideal) == (1, 4, 7)

    def test_cone_and_points(self):
        """λ = (n-1)+1 and λ = n use the square of the maximal ideal."""
        assert hilbert_function(witness_ideal(Partition.of(4, 1))) == (1, 3)
        assert hilbert_function(witness_ideal(Partition.of(5))) == (1, 4)
        assert witness_ideal(Partition.of(4, 1)).is_artinian

    @pytest.mark.timeout(5)
    def test_pure_witness_for_every_partition(self):
        """HF(J_λ) = h(λ) trimmed and the socle sits in one degree, for n <= 10."""
        for n in range(1, 11):
            for partition in partitions_of(n):
                ideal = witness_ideal(partition)
                expected = h_of_partition(partition).trimmed().entries
                assert hilbert_function(ideal) == expected, partition
                report = socle_and_purity(ideal)
                assert report.is_pure and report.is_level, partition
                assert report.degrees == (len(expected) - 1,)

    def test_recursion(self):
        """h_d(J_λ) = h_{d-1}(J_γ) + h_d(J_λ̄) wherever the recursion applies."""
        checked = 0
        for n in range(4, 10):
            for partition in partitions_of(n):
                if partition.length >= 2 and 2 <= partition.parts[0] <= n - 2:
                    assert recursion_consistent(partition), partition
                    checked += 1
        assert checked > 50

    def test_recursion_domain(self):
        for text in ("3+1", "4", "1+1+1"):
            with pytest.raises(MalformedPartitionError):
                recursion_consistent(Partition.parse(text))


class TestHilbertAndSocle:
    """Tests for Hilbert functions and socles."""

    def test_mixed_ideal(self):
        ideal = monomial_ideal(2, [mono(2, 1, 1), mono(2, 1, 2), mono(2, 2, 2, 2)])
        assert hilbert_function(ideal) == (1, 2, 1)
        report = socle_and_purity(ideal)
        assert report.socle == (mono(2, 1), mono(2, 2, 2))
        assert report.degrees == (1, 2)
        assert not report.is_pure
        assert not report.is_level

    def test_square_of_maximal_ideal(self):
        ideal = max_ideal_squared(4)
        assert hilbert_function(ideal) == (1, 4)
        report = socle_and_purity(ideal)
        assert report.socle == tuple(mono(4, i) for i in range(1, 5))
        assert report.is_pure

    def test_witness_socle(self):
        report = socle_and_purity(witness_ideal(Partition.of(3, 1, 1)))
        assert [str(monomial) for monomial in report.socle] == ["x1*x3", "x2*x3", "x3^2"]
        assert report.degrees == (2,)

    def test_not_artinian(self):
        ideal = monomial_ideal(2, [mono(2, 1, 1)])
        assert not ideal.is_artinian
        with pytest.raises(NotArtinianError):
            hilbert_function(ideal)
        with pytest.raises(NotArtinianError):
            socle_and_purity(ideal)


# --- Set partition tests ---


class TestSetPartition:
    """Tests for set partitions and the labeled-class bijection."""

    def test_normalized_order(self):
        blocks = SetPartition.of([[5], [2, 6], [1, 3, 4]]).blocks
        assert blocks == (frozenset({1, 3, 4}), frozenset({2, 6}), frozenset({5}))

    def test_validation(self):
        with pytest.raises(MalformedInputError):
            SetPartition.of([[1, 2], [2, 3]])
        with pytest.raises(MalformedInputError):
            SetPartition.of([[1], [3]])

    def test_complex_round_trip(self, two_triangles):
        set_partition = SetPartition.from_complex(two_triangles)
        assert set_partition.blocks == (frozenset({1, 3, 4}), frozenset({2, 5, 6}))
        assert set_partition.shape == Partition.of(3, 3)
        assert set_partition.n == 6
        assert set_partition.to_complex() == two_triangles

    def test_subordinate_counts(self):
        """Set partitions with block sizes λ number the Faà di Bruno coefficient."""
        assert len(list(set_partitions_subordinate(Partition.of(2, 2, 2)))) == 15
        for n in range(1, 7):
            for partition in partitions_of(n):
                complexes = {sp.to_complex() for sp in set_partitions_subordinate(partition)}
                assert len(complexes) == count_labeled(partition)
                assert all(extract_partition(delta) == partition for delta in complexes)


# --- Text format tests ---


class TestIdealText:
    """Tests for the one-generator-per-line ideal format."""

    def test_parse(self):
        ideal = parse_ideal_text("x1^2*x3\nx2*x3  # quadric\n\n# comment\n")
        assert ideal.nvars == 3
        assert set(ideal.generators) == {Monomial((2, 0, 1)), Monomial((0, 1, 1))}

    def test_explicit_variable_count(self):
        assert parse_ideal_text("x1*x2", nvars=4).generators == (Monomial((1, 1, 0, 0)),)
        with pytest.raises(MalformedInputError):
            parse_ideal_text("x5", nvars=3)

    def test_unit(self):
        ideal = parse_ideal_text("1", nvars=2)
        assert ideal.generators == (Monomial((0, 0)),)

    def test_rejects_non_monomials(self):
        for text in ("x1+x2", "2*x1", "x1**", "x1/x2"):
            with pytest.raises(MalformedInputError):
                parse_ideal_text(text, nvars=2)

    def test_format_round_trip(self):
        ideal = witness_ideal(Partition.of(3, 1, 1))
        text = format_ideal_text(ideal)
        assert text == "x1^2\nx1*x2\nx2^2\nx1*x3^2\nx2*x3^2\nx3^3\n"
        assert parse_ideal_text(text, nvars=3) == ideal
