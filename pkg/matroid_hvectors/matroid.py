"""Matroid recognition and the partial-star constructions for dimension at most 1."""

from __future__ import annotations

import logging
from collections.abc import Sequence
import sys
from dataclasses import dataclass
if sys.version_info >= (3, 11):
    from enum import StrEnum
else:
    from backports.strenum import StrEnum

import networkx as nx

from .complex import (
    SimplicialComplex,
    build,
    from_masks,
    mask_vertices,
    maximal_masks,
)
from .const import MAX_DEFINITIONAL_VERTICES, MAX_VERTICES
from .exceptions import (
    BadCountError,
    NotMatroidError,
    TooLargeError,
    VertexOutOfRangeError,
    WrongDimError,
)
from .partition import Partition

_LOGGER = logging.getLogger(__name__)


class MatroidTest(StrEnum):
    """How is_matroid decides."""

    DEFINITIONAL = "definitional"
    FAST = "fast"


def _is_matroid_definitional(delta: SimplicialComplex) -> bool:
    if delta.n > MAX_DEFINITIONAL_VERTICES:
        raise TooLargeError(f"definitional test scans 2^n subsets; n={delta.n} > {MAX_DEFINITIONAL_VERTICES}")
    for window in range(1, 1 << delta.n):
        restricted = maximal_masks(facet & window for facet in delta.facets)
        sizes = {mask.bit_count() for mask in restricted if mask}
        if len(sizes) > 1:
            _LOGGER.debug("restriction to %s is not pure", mask_vertices(window))
            return False
    return True


def _is_matroid_fast(delta: SimplicialComplex) -> bool:
    if delta.dim > 1:
        raise WrongDimError(f"fast matroid test needs dim <= 1, got {delta.dim}")
    if delta.dim < 1:
        return True
    if any(facet.bit_count() != 2 for facet in delta.facets):
        return False
    # Every vertex's link meets every edge.
    return all(neighbors & edge for neighbors in delta.neighbors for edge in delta.edges)


def is_matroid(delta: SimplicialComplex, mode: MatroidTest | str = MatroidTest.DEFINITIONAL) -> bool:
    """Return whether every restriction of the complex is pure.

    The fast mode applies only in dimension at most 1: the complex is pure and
    the link of each vertex meets every edge.
    """
    if MatroidTest(mode) is MatroidTest.FAST:
        return _is_matroid_fast(delta)
    return _is_matroid_definitional(delta)


def _check_vertex(delta: SimplicialComplex, vertex: int) -> None:
    """Raise VertexOutOfRangeError unless 1 <= vertex <= n."""
    if not 1 <= vertex <= delta.n:
        raise VertexOutOfRangeError(vertex, delta.n)


def is_center(delta: SimplicialComplex, vertex: int) -> bool:
    """Return whether the vertex is adjacent to every other vertex."""
    _check_vertex(delta, vertex)
    others = delta.vertex_set & ~(1 << (vertex - 1))
    return delta.neighbors[vertex - 1] == others


def centers(delta: SimplicialComplex) -> tuple[int, ...]:
    """Return every center, ascending."""
    return tuple(vertex for vertex in range(1, delta.n + 1) if is_center(delta, vertex))


def partial_star(delta: SimplicialComplex, vertex: int, count: int) -> SimplicialComplex:
    """S_v^k Δ: add k new vertices n+1..n+k, each joined to every face of link(v).

    Each new vertex gets the same link as v, so an isolated v yields isolated
    new vertices.
    """
    _check_vertex(delta, vertex)
    if count < 1:
        raise BadCountError(f"partial star needs at least one new vertex, got {count}")
    n = delta.n + count
    if n > MAX_VERTICES:
        raise TooLargeError(f"partial star would have {n} vertices")
    bit = 1 << (vertex - 1)
    link_facets = [facet & ~bit for facet in delta.facets if facet & bit]
    masks = list(delta.facets)
    for new in range(delta.n, n):
        masks.extend(face | (1 << new) for face in link_facets)
    return from_masks(n, masks)


def complete_graph(s: int) -> SimplicialComplex:
    """K_s as a complex of dimension at most 1; K_1 is a single vertex."""
    if s < 1:
        raise BadCountError(f"K_s needs s >= 1, got {s}")
    if s == 1:
        return build(1, [[1]])
    return build(s, [[i, j] for i in range(1, s + 1) for j in range(i + 1, s + 1)])


def construct_delta_m(m: Sequence[int]) -> SimplicialComplex:
    """Δ_m: start from K_s and apply S^{mᵢ} avoiding vertex i, for i = 1..s."""
    if not m:
        raise BadCountError("an m-sequence needs at least one entry")
    if any(entry < 0 for entry in m):
        raise BadCountError(f"m-sequence entries must be nonnegative: {tuple(m)}")
    if len(m) + sum(m) > MAX_VERTICES:
        raise TooLargeError(f"Δ_m would have {len(m) + sum(m)} vertices")
    delta = complete_graph(len(m))
    for vertex, count in enumerate(m, start=1):
        if count:
            delta = partial_star(delta, vertex, count)
    return delta


def delta_of_partition(partition: Partition) -> SimplicialComplex:
    """Δ_λ, built as Δ_m with mᵢ = λᵢ - 1."""
    return construct_delta_m(partition.m_sequence)


def _require_matroid(delta: SimplicialComplex) -> None:
    """Raise unless the complex is a matroid of dimension at most 1."""
    if delta.dim > 1:
        raise WrongDimError(f"expected dim <= 1, got {delta.dim}")
    if not _is_matroid_fast(delta):
        raise NotMatroidError(f"{delta} is not a matroid complex")


@dataclass(frozen=True)
class DegreeSequence:
    """counts[i] = number of vertices of degree i."""

    counts: tuple[int, ...]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.counts)) + ")"


def degree_sequence(delta: SimplicialComplex) -> DegreeSequence:
    """Degree counts D₀..D_{n-1} of a matroid of dimension at most 1."""
    _require_matroid(delta)
    counts = [0] * max(delta.n, 1)
    for neighbors in delta.neighbors:
        counts[neighbors.bit_count()] += 1
    return DegreeSequence(tuple(counts))


def iso_dim1(first: SimplicialComplex, second: SimplicialComplex) -> bool:
    """Isomorphism of matroids of dimension at most 1 via degree sequences.

    Only valid for matroids; both inputs are checked.
    """
    first_degrees = degree_sequence(first)
    second_degrees = degree_sequence(second)
    return first.n == second.n and first_degrees == second_degrees


def to_graph(delta: SimplicialComplex) -> nx.Graph:
    """The 1-skeleton as a networkx graph on nodes 1..n."""
    graph = nx.Graph()
    graph.add_nodes_from(range(1, delta.n + 1))
    graph.add_edges_from(mask_vertices(edge) for edge in delta.edges)
    return graph


def anti_cliques(delta: SimplicialComplex) -> tuple[frozenset[int], ...]:
    """Components of the complement graph, each required to induce no edge.

    Blocks are ordered by decreasing size, ties by smallest vertex.
    """
    if delta.dim > 1:
        raise WrongDimError(f"expected dim <= 1, got {delta.dim}")
    graph = to_graph(delta)
    blocks = []
    for component in nx.connected_components(nx.complement(graph)):
        if graph.subgraph(component).number_of_edges():
            raise NotMatroidError(f"complement component {sorted(component)} induces an edge")
        blocks.append(frozenset(component))
    return tuple(sorted(blocks, key=lambda block: (-len(block), min(block))))


def extract_partition(delta: SimplicialComplex) -> Partition:
    """λ_Δ: the sizes of the anti-cliques, largest first.

    Succeeds exactly when the 1-skeleton is complete multipartite, so it also
    certifies the matroid property.
    """
    return Partition.from_sizes(len(block) for block in anti_cliques(delta))


def max_clique_size(delta: SimplicialComplex) -> int:
    """Size of a largest clique, equal to the number of anti-cliques."""
    _require_matroid(delta)
    return len(anti_cliques(delta))


def is_shifted_class(delta: SimplicialComplex) -> bool:
    """Whether λ_Δ has at most one part larger than 1."""
    _require_matroid(delta)
    return sum(1 for part in extract_partition(delta).parts if part > 1) <= 1


def complex_from_blocks(n: int, blocks: Sequence[frozenset[int]]) -> SimplicialComplex:
    """The complete multipartite complex whose anti-cliques are the given blocks."""
    if len(blocks) == 1:
        return build(n, [[vertex] for vertex in range(1, n + 1)])
    owner = {vertex: index for index, block in enumerate(blocks) for vertex in block}
    edges = [
        [i, j] for i in range(1, n + 1) for j in range(i + 1, n + 1) if owner[i] != owner[j]
    ]
    return build(n, edges)
