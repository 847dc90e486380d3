"""Simplicial complexes on small vertex sets, stored as facet bitmasks."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb

from .const import MAX_VERTICES
from .exceptions import (
    BadSkeletonDimError,
    EmptyComplexError,
    EmptyRestrictionError,
    GhostVertexError,
    MalformedHVectorError,
    NotAFaceError,
    TooLargeError,
    VertexOutOfRangeError,
)


def vertex_mask(vertices: Iterable[int]) -> int:
    """Return the bitmask of a set of 1-based vertex labels."""
    mask = 0
    for vertex in vertices:
        mask |= 1 << (vertex - 1)
    return mask


def mask_vertices(mask: int) -> tuple[int, ...]:
    """Return the sorted 1-based vertex labels in a bitmask."""
    vertices = []
    vertex = 1
    while mask:
        if mask & 1:
            vertices.append(vertex)
        mask >>= 1
        vertex += 1
    return tuple(vertices)


def maximal_masks(masks: Iterable[int]) -> tuple[int, ...]:
    """Drop every mask contained in another one and sort the rest canonically."""
    unique = sorted(set(masks), key=lambda mask: -mask.bit_count())
    kept: list[int] = []
    for mask in unique:
        if not any(mask & other == mask for other in kept):
            kept.append(mask)
    return tuple(sorted(kept, key=mask_vertices))


def _compress(mask: int, labels: tuple[int, ...]) -> int:
    """Rewrite a mask over original labels as a mask over positions in labels."""
    result = 0
    for position, vertex in enumerate(labels):
        if mask >> (vertex - 1) & 1:
            result |= 1 << position
    return result


def _expand(mask: int, labels: tuple[int, ...]) -> int:
    """Inverse of _compress."""
    result = 0
    for position, vertex in enumerate(labels):
        if mask >> position & 1:
            result |= 1 << (vertex - 1)
    return result


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex on vertices 1..n given by its facets.

    Facets are bitmasks forming an antichain, sorted by their vertex lists.
    The complex whose only face is the empty face has n = 0 and facets (0,).
    """

    n: int
    facets: tuple[int, ...]

    @classmethod
    def empty_face(cls) -> SimplicialComplex:
        """Return the complex whose only face is the empty face."""
        return cls(0, (0,))

    @cached_property
    def faces(self) -> frozenset[int]:
        """Every face as a bitmask, the empty face included."""
        faces: set[int] = set()
        for facet in self.facets:
            if facet in faces:
                continue
            sub = facet
            while True:
                faces.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & facet
        return frozenset(faces)

    @property
    def dim(self) -> int:
        """Return the dimension."""
        return max(facet.bit_count() for facet in self.facets) - 1

    @property
    def vertex_set(self) -> int:
        """Bitmask of all vertices."""
        return (1 << self.n) - 1

    @cached_property
    def edges(self) -> tuple[int, ...]:
        """The 1-dimensional faces as bitmasks, in canonical order."""
        return tuple(sorted((face for face in self.faces if face.bit_count() == 2), key=mask_vertices))

    @cached_property
    def neighbors(self) -> tuple[int, ...]:
        """Neighbor bitmask of each vertex in the 1-skeleton; index 0 is vertex 1."""
        adjacency = [0] * self.n
        for edge in self.edges:
            low = (edge & -edge).bit_length() - 1
            high = edge.bit_length() - 1
            adjacency[low] |= 1 << high
            adjacency[high] |= 1 << low
        return tuple(adjacency)

    def has_face(self, vertices: Iterable[int]) -> bool:
        """Return whether the vertex set is a face."""
        return vertex_mask(vertices) in self.faces

    def facet_lists(self) -> list[list[int]]:
        """Facets as sorted lists of vertex labels."""
        if self.n == 0:
            return []
        return [list(mask_vertices(facet)) for facet in self.facets]

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return (mask_vertices(facet) for facet in self.facets)

    def __str__(self) -> str:
        facets = ", ".join("{" + ",".join(map(str, facet)) + "}" for facet in self)
        return f"Δ(n={self.n}; {facets})"


def from_masks(n: int, masks: Iterable[int]) -> SimplicialComplex:
    """Build a complex from facet masks without checking for ghost vertices."""
    return SimplicialComplex(n, maximal_masks(masks))


def build(n: int, facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Build the complex on {1..n} generated by the given facets.

    Non-maximal sets are dropped. Every vertex 1..n must appear in some facet.
    """
    if n > MAX_VERTICES:
        raise TooLargeError(f"n={n} exceeds the {MAX_VERTICES}-vertex limit")
    if n < 1:
        raise EmptyComplexError(f"vertex count must be positive, got {n}")
    masks = []
    for facet in facets:
        vertices = set(facet)
        if not vertices:
            raise EmptyComplexError("facets must be nonempty")
        for vertex in vertices:
            if not 1 <= vertex <= n:
                raise VertexOutOfRangeError(vertex, n)
        masks.append(vertex_mask(vertices))
    if not masks:
        raise EmptyComplexError("facet list is empty")
    covered = 0
    for mask in masks:
        covered |= mask
    for vertex in range(1, n + 1):
        if not covered >> (vertex - 1) & 1:
            raise GhostVertexError(vertex)
    return from_masks(n, masks)


def from_edges(n: int, edges: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Build a dimension-at-most-1 complex from an edge list; uncovered vertices become isolated."""
    facets = [tuple(edge) for edge in edges]
    covered = {vertex for edge in facets for vertex in edge}
    facets.extend((vertex,) for vertex in range(1, n + 1) if vertex not in covered)
    return build(n, facets)


def _check_vertices(delta: SimplicialComplex, vertices: Iterable[int]) -> int:
    """Return the mask of the given vertices, each checked against 1..n."""
    mask = 0
    for vertex in vertices:
        if not 1 <= vertex <= delta.n:
            raise VertexOutOfRangeError(vertex, delta.n)
        mask |= 1 << (vertex - 1)
    return mask


def original_faces(delta: SimplicialComplex, labels: tuple[int, ...]) -> frozenset[int]:
    """Faces of a relabeled complex written back over the original labels."""
    return frozenset(_expand(face, labels) for face in delta.faces)


def restrict(delta: SimplicialComplex, vertices: Iterable[int]) -> tuple[SimplicialComplex, tuple[int, ...]]:
    """Restrict to the faces inside a vertex set.

    The result is relabeled 1..|W| in ascending original order; the returned
    label tuple maps new vertex i to original vertex labels[i-1].
    """
    window = _check_vertices(delta, vertices)
    if not window:
        raise EmptyRestrictionError("restriction set is empty")
    labels = mask_vertices(window)
    masks = [_compress(facet & window, labels) for facet in delta.facets if facet & window]
    if not masks:
        raise EmptyRestrictionError(f"no face of the complex lies in {set(labels)}")
    return from_masks(len(labels), masks), labels


def delete(delta: SimplicialComplex, vertex: int) -> tuple[SimplicialComplex, tuple[int, ...]]:
    """Remove a vertex and every face containing it."""
    _check_vertices(delta, (vertex,))
    return restrict(delta, (v for v in range(1, delta.n + 1) if v != vertex))


def link(delta: SimplicialComplex, face: Iterable[int]) -> tuple[SimplicialComplex, tuple[int, ...]]:
    """Return the link of a face, relabeled onto its own vertices.

    The link of a facet is the empty-face complex with an empty label tuple.
    """
    face_mask = _check_vertices(delta, face)
    if face_mask not in delta.faces:
        raise NotAFaceError(f"{set(mask_vertices(face_mask))} is not a face")
    residues = [facet & ~face_mask for facet in delta.facets if facet & face_mask == face_mask]
    support = 0
    for residue in residues:
        support |= residue
    if not support:
        return SimplicialComplex.empty_face(), ()
    labels = mask_vertices(support)
    return from_masks(len(labels), (_compress(residue, labels) for residue in residues)), labels


def cone(delta: SimplicialComplex) -> SimplicialComplex:
    """Join every face with a new apex vertex n+1."""
    apex = 1 << delta.n
    return SimplicialComplex(delta.n + 1, maximal_masks(facet | apex for facet in delta.facets))


def skeleton(delta: SimplicialComplex, k: int) -> SimplicialComplex:
    """Keep the faces of dimension at most k."""
    if not 0 <= k <= delta.dim:
        raise BadSkeletonDimError(f"skeleton dimension {k} outside 0..{delta.dim}")
    masks: list[int] = []
    for facet in delta.facets:
        if facet.bit_count() <= k + 1:
            masks.append(facet)
            continue
        bits = [1 << i for i in range(delta.n) if facet >> i & 1]
        masks.extend(sum(chosen) for chosen in combinations(bits, k + 1))
    return from_masks(delta.n, masks)


def one_skeleton_cone(delta: SimplicialComplex) -> SimplicialComplex:
    """C₁Δ: the 1-skeleton of the cone over Δ."""
    return skeleton(cone(delta), 1)


def join_one_skeleton(first: SimplicialComplex, second: SimplicialComplex) -> SimplicialComplex:
    """1-skeleton of the join; the second complex's vertices are shifted past the first's."""
    shift = first.n
    masks = list(first.edges) + [edge << shift for edge in second.edges]
    masks.extend((1 << i) | (1 << (shift + j)) for i in range(first.n) for j in range(second.n))
    masks.extend(1 << i for i in range(first.n + second.n))
    n = first.n + second.n
    if n > MAX_VERTICES:
        raise TooLargeError(f"join has {n} vertices")
    return from_masks(n, masks)


def cone_apexes(delta: SimplicialComplex) -> tuple[int, ...]:
    """Vertices contained in every facet."""
    common = delta.vertex_set
    for facet in delta.facets:
        common &= facet
    return mask_vertices(common)


def relabel(delta: SimplicialComplex, permutation: dict[int, int] | tuple[int, ...]) -> SimplicialComplex:
    """Apply a vertex permutation given as old -> new (dict, or tuple with entry i-1 for vertex i)."""
    mapping = permutation if isinstance(permutation, dict) else dict(enumerate(permutation, start=1))
    masks = [vertex_mask(mapping[v] for v in mask_vertices(facet)) for facet in delta.facets]
    return from_masks(delta.n, masks)


def is_pure(delta: SimplicialComplex) -> bool:
    """Return whether all facets have the same dimension."""
    return len({facet.bit_count() for facet in delta.facets}) == 1


@dataclass(frozen=True)
class FVector:
    """Face numbers (f₋₁, f₀, ..., f_d)."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.entries or self.entries[0] != 1:
            raise ValueError(f"f-vector must start with f₋₁ = 1, got {self.entries}")

    @property
    def dim(self) -> int:
        """Return the dimension."""
        return len(self.entries) - 2

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, index: int) -> int:
        return self.entries[index]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.entries)) + ")"


@dataclass(frozen=True)
class HVector:
    """h-vector (h₀, ..., h_{d+1}) with h₀ = 1."""

    entries: tuple[int, ...]

    @classmethod
    def of(cls, *entries: int) -> HVector:
        """Return the h-vector with these entries."""
        return cls(tuple(entries))

    @classmethod
    def parse(cls, text: str) -> HVector:
        """Parse "1,4,7" (parentheses and spaces allowed)."""
        body = text.strip().strip("()[]")
        try:
            entries = tuple(int(part) for part in body.split(","))
        except ValueError as error:
            raise MalformedHVectorError(f"cannot parse h-vector {text!r}") from error
        return cls(entries)

    def validate(self) -> HVector:
        """Raise unless h₀ = 1 and every entry is nonnegative."""
        if not self.entries or self.entries[0] != 1:
            raise MalformedHVectorError(f"h-vector must start with h₀ = 1, got {self}")
        if any(entry < 0 for entry in self.entries):
            raise MalformedHVectorError(f"h-vector has a negative entry: {self}")
        return self

    def trimmed(self) -> HVector:
        """Drop trailing zeros, keeping h₀."""
        entries = list(self.entries)
        while len(entries) > 1 and entries[-1] == 0:
            entries.pop()
        return HVector(tuple(entries))

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, index: int) -> int:
        return self.entries[index]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.entries)) + ")"


def h_from_f(f: FVector) -> HVector:
    """Transform face numbers into the h-vector.

    h_k = Σ_{i≤k} (-1)^(k-i) C(d+1-i, k-i) f_{i-1}, where entry i of the
    f-vector holds f_{i-1}.
    """
    d = f.dim
    return HVector(
        tuple(sum((-1) ** (k - i) * comb(d + 1 - i, k - i) * f[i] for i in range(k + 1)) for k in range(d + 2))
    )


def f_from_h(h: HVector) -> FVector:
    """Inverse of h_from_f: f_{k-1} = Σ_{i≤k} C(d+1-i, k-i) h_i."""
    d = len(h) - 2
    return FVector(tuple(sum(comb(d + 1 - i, k - i) * h[i] for i in range(k + 1)) for k in range(d + 2)))


def f_vector(delta: SimplicialComplex) -> FVector:
    """Count faces of each dimension."""
    counts = [0] * (delta.dim + 2)
    for face in delta.faces:
        counts[face.bit_count()] += 1
    return FVector(tuple(counts))


def h_vector(delta: SimplicialComplex) -> HVector:
    """h-vector of the complex; for dimension 1 this is (1, f₀-2, 1-f₀+f₁)."""
    return h_from_f(f_vector(delta))
