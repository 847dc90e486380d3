"""Monomial ideals: Stanley–Reisner ideals and the pure witness ideals J_λ."""

from __future__ import annotations

import logging
import re
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from tokenize import TokenError

import sympy as sp
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.utilities.iterables import multiset_partitions

from .complex import SimplicialComplex, from_masks, vertex_mask
from .const import MAX_IDEAL_VERTICES
from .exceptions import (
    CrosscheckError,
    DimTooHighError,
    GhostVertexError,
    MalformedInputError,
    MalformedPartitionError,
    NotArtinianError,
    NotSquarefreeError,
    TooLargeError,
)
from .matroid import anti_cliques, complex_from_blocks, is_matroid
from .partition import Partition

_LOGGER = logging.getLogger(__name__)

_VARIABLE = re.compile(r"x(\d+)")
_TRANSFORMATIONS = (*standard_transformations, convert_xor)


@dataclass(frozen=True, order=True)
class Monomial:
    """x^e over a fixed number of variables."""

    exponents: tuple[int, ...]

    @classmethod
    def squarefree(cls, nvars: int, mask: int) -> Monomial:
        """x_F for the vertex set F given as a bitmask."""
        return cls(tuple(mask >> i & 1 for i in range(nvars)))

    @classmethod
    def from_indices(cls, nvars: int, indices: Iterable[int]) -> Monomial:
        """Product of x_i over 1-based indices, with repetition."""
        exponents = [0] * nvars
        for index in indices:
            exponents[index - 1] += 1
        return cls(tuple(exponents))

    @property
    def degree(self) -> int:
        """Return the exponent sum."""
        return sum(self.exponents)

    @property
    def is_squarefree(self) -> bool:
        """Return whether every exponent is at most 1."""
        return all(exponent <= 1 for exponent in self.exponents)

    @property
    def support(self) -> int:
        """Bitmask of the variables present."""
        return sum(1 << i for i, exponent in enumerate(self.exponents) if exponent)

    def divides(self, other: Monomial) -> bool:
        """Return whether this monomial divides other."""
        return all(a <= b for a, b in zip(self.exponents, other.exponents, strict=True))

    def times(self, index: int) -> Monomial:
        """Multiply by x_index (1-based)."""
        exponents = list(self.exponents)
        exponents[index - 1] += 1
        return Monomial(tuple(exponents))

    def __str__(self) -> str:
        factors = [
            f"x{i}" if exponent == 1 else f"x{i}^{exponent}"
            for i, exponent in enumerate(self.exponents, start=1)
            if exponent
        ]
        return "*".join(factors) or "1"


def _sort_key(monomial: Monomial) -> tuple:
    return (monomial.degree, tuple(-exponent for exponent in monomial.exponents))


@dataclass(frozen=True)
class MonomialIdeal:
    """An ideal given by its minimal monomial generators."""

    nvars: int
    generators: tuple[Monomial, ...]

    def contains(self, monomial: Monomial) -> bool:
        """Return whether some generator divides the monomial."""
        return any(generator.divides(monomial) for generator in self.generators)

    @property
    def is_squarefree(self) -> bool:
        """Return whether every generator is squarefree."""
        return all(generator.is_squarefree for generator in self.generators)

    @property
    def is_artinian(self) -> bool:
        """Some pure power of every variable lies in the ideal."""
        powers = {
            generator.support for generator in self.generators if generator.support.bit_count() == 1
        }
        unit = any(generator.degree == 0 for generator in self.generators)
        return unit or all(1 << i in powers for i in range(self.nvars))

    def in_degree(self, degree: int) -> tuple[Monomial, ...]:
        """Return the generators of the given degree."""
        return tuple(generator for generator in self.generators if generator.degree == degree)

    def __str__(self) -> str:
        return "⟨" + ", ".join(map(str, self.generators)) + "⟩"


def monomial_ideal(nvars: int, generators: Iterable[Monomial]) -> MonomialIdeal:
    """Build an ideal, keeping only the minimal generators."""
    candidates = sorted(set(generators), key=_sort_key)
    for generator in candidates:
        if len(generator.exponents) != nvars:
            raise MalformedInputError(f"{generator} does not have {nvars} exponents")
    minimal: list[Monomial] = []
    for generator in candidates:
        if not any(kept.divides(generator) for kept in minimal):
            minimal.append(generator)
    return MonomialIdeal(nvars, tuple(minimal))


def _minimal_non_faces(delta: SimplicialComplex) -> set[int]:
    """Return the masks of the minimal non-faces."""
    faces = delta.faces
    found: set[int] = set()
    for face in faces:
        for vertex in range(delta.n):
            bit = 1 << vertex
            candidate = face | bit
            if face & bit or candidate in faces or candidate in found:
                continue
            if all(candidate & ~(1 << i) in faces for i in range(delta.n) if candidate >> i & 1):
                found.add(candidate)
    return found


def expected_matroid_ideal(n: int, blocks: Iterable[frozenset[int]]) -> MonomialIdeal:
    """Σ m̂²_σ + m̂³: squarefree quadrics inside each block plus every squarefree cubic."""
    generators = [
        Monomial.from_indices(n, pair) for block in blocks for pair in combinations(sorted(block), 2)
    ]
    generators.extend(Monomial.from_indices(n, triple) for triple in combinations(range(1, n + 1), 3))
    return monomial_ideal(n, generators)


def stanley_reisner(delta: SimplicialComplex) -> MonomialIdeal:
    """I_Δ, generated by the minimal non-faces.

    For a matroid of dimension at most 1 the generators are checked against
    the block shape built from its anti-cliques.
    """
    if delta.n > MAX_IDEAL_VERTICES:
        raise TooLargeError(f"Stanley–Reisner ideals are computed for n <= {MAX_IDEAL_VERTICES}")
    ideal = monomial_ideal(delta.n, (Monomial.squarefree(delta.n, mask) for mask in _minimal_non_faces(delta)))
    if 0 <= delta.dim <= 1 and is_matroid(delta, "fast"):
        expected = expected_matroid_ideal(delta.n, anti_cliques(delta))
        if expected != ideal:
            raise CrosscheckError(
                "Stanley–Reisner ideal does not have the block shape",
                details=f"computed {ideal}\nexpected {expected}",
            )
    return ideal


def _standard_faces(ideal: MonomialIdeal) -> Iterator[int]:
    supports = [generator.support for generator in ideal.generators]
    stack = [(0, 0)]
    while stack:
        face, start = stack.pop()
        yield face
        for vertex in range(start, ideal.nvars):
            candidate = face | (1 << vertex)
            if not any(support & candidate == support for support in supports):
                stack.append((candidate, vertex + 1))


def complex_from_ideal(ideal: MonomialIdeal, max_dim: int | None = None) -> SimplicialComplex:
    """The complex whose faces are the squarefree monomials outside the ideal."""
    if not ideal.is_squarefree:
        raise NotSquarefreeError(f"{ideal} is not squarefree")
    if ideal.nvars > MAX_IDEAL_VERTICES:
        raise TooLargeError(f"ideals are read for at most {MAX_IDEAL_VERTICES} variables")
    faces = set(_standard_faces(ideal))
    for vertex in range(ideal.nvars):
        if 1 << vertex not in faces:
            raise GhostVertexError(vertex + 1)
    facets = [
        face
        for face in faces
        if not any(not face >> v & 1 and face | (1 << v) in faces for v in range(ideal.nvars))
    ]
    delta = from_masks(ideal.nvars, facets)
    if max_dim is not None and delta.dim > max_dim:
        raise DimTooHighError(f"ideal defines a complex of dimension {delta.dim} > {max_dim}")
    return delta


def _all_monomials(nvars: int, degree: int) -> Iterator[Monomial]:
    for indices in combinations_with_replacement(range(1, nvars + 1), degree):
        yield Monomial.from_indices(nvars, indices)


def witness_ideal(partition: Partition) -> MonomialIdeal:
    """J_λ, an artinian pure monomial ideal whose Hilbert function is h(λ).

    With n = |λ| and v = n-2 variables, blocks σᵢ of mᵢ = λᵢ - 1 consecutive
    variables start at x1, largest part first; J_λ holds every degree-2
    monomial inside a block and every degree-3 monomial. One part gives the
    square of the maximal ideal in n-1 variables; λ = (n-1)+1 gives it in
    n-2 variables.
    """
    n = partition.n
    if partition.length == 1:
        return monomial_ideal(n - 1, _all_monomials(n - 1, 2))
    if partition.parts[0] == n - 1:
        return monomial_ideal(n - 2, _all_monomials(n - 2, 2))
    nvars = n - 2
    generators = list(_all_monomials(nvars, 3))
    start = 1
    for size in partition.m_sequence:
        block = range(start, start + size)
        generators.extend(Monomial.from_indices(nvars, pair) for pair in combinations_with_replacement(block, 2))
        start += size
    return monomial_ideal(nvars, generators)


def _standard_by_degree(ideal: MonomialIdeal) -> list[set[Monomial]]:
    if not ideal.is_artinian:
        raise NotArtinianError(f"{ideal} is not artinian")
    one = Monomial((0,) * ideal.nvars)
    if ideal.contains(one):
        return []
    layers = [{one}]
    while True:
        following = {
            monomial.times(index)
            for monomial in layers[-1]
            for index in range(1, ideal.nvars + 1)
        }
        following = {monomial for monomial in following if not ideal.contains(monomial)}
        if not following:
            return layers
        layers.append(following)


def hilbert_function(ideal: MonomialIdeal) -> tuple[int, ...]:
    """Number of standard monomials in each degree, up to the last nonzero one."""
    return tuple(len(layer) for layer in _standard_by_degree(ideal))


@dataclass(frozen=True)
class SocleReport:
    """Socle of an artinian monomial quotient and its degrees."""

    socle: tuple[Monomial, ...]
    degrees: tuple[int, ...]

    @property
    def is_pure(self) -> bool:
        """Return whether the socle lives in a single degree."""
        return len(self.degrees) == 1

    @property
    def is_level(self) -> bool:
        # Same flag: for artinian monomial ideals level and pure coincide.
        return self.is_pure


def socle_and_purity(ideal: MonomialIdeal) -> SocleReport:
    """Standard monomials u with x_i·u in the ideal for every i."""
    socle = [
        monomial
        for layer in _standard_by_degree(ideal)
        for monomial in layer
        if all(ideal.contains(monomial.times(index)) for index in range(1, ideal.nvars + 1))
    ]
    socle.sort(key=_sort_key)
    return SocleReport(tuple(socle), tuple(sorted({monomial.degree for monomial in socle})))


def recursion_consistent(partition: Partition) -> bool:
    """h_d(J_λ) = h_{d-1}(J_γ) + h_d(J_λ̄) for every d.

    λ̄ lowers λ₁ by one and γ = (n-λ₁)+1 is the cone-link partition. Only
    meaningful for ℓ >= 2 and 2 <= λ₁ <= n-2.
    """
    n = partition.n
    first = partition.parts[0]
    if partition.length < 2 or not 2 <= first <= n - 2:
        raise MalformedPartitionError(f"recursion needs ℓ >= 2 and 2 <= λ₁ <= n-2, got {partition}")
    lowered = Partition.from_sizes((first - 1, *partition.parts[1:]))
    cone_link = Partition.of(n - first, 1)
    whole = hilbert_function(witness_ideal(partition))
    below = hilbert_function(witness_ideal(lowered))
    shifted = (0, *hilbert_function(witness_ideal(cone_link)))
    size = max(len(whole), len(below), len(shifted))

    def padded(values: tuple[int, ...]) -> tuple[int, ...]:
        return values + (0,) * (size - len(values))

    return padded(whole) == tuple(a + b for a, b in zip(padded(shifted), padded(below), strict=True))


@dataclass(frozen=True)
class SetPartition:
    """Disjoint blocks covering {1..n}."""

    blocks: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for block in self.blocks:
            if not block or seen & block:
                raise MalformedInputError(f"blocks must be nonempty and disjoint: {self.blocks}")
            seen |= block
        if seen != set(range(1, len(seen) + 1)):
            raise MalformedInputError(f"blocks must cover 1..n: {sorted(seen)}")

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]]) -> SetPartition:
        """Normalize block order: larger blocks first, ties by smallest element."""
        frozen = (frozenset(block) for block in blocks)
        return cls(tuple(sorted(frozen, key=lambda block: (-len(block), min(block)))))

    @classmethod
    def from_complex(cls, delta: SimplicialComplex) -> SetPartition:
        """Anti-cliques of a matroid of dimension at most 1."""
        return cls.of(anti_cliques(delta))

    @property
    def n(self) -> int:
        """Return the size of the ground set."""
        return sum(len(block) for block in self.blocks)

    @property
    def shape(self) -> Partition:
        """Return the block sizes as a partition."""
        return Partition.from_sizes(len(block) for block in self.blocks)

    def to_complex(self) -> SimplicialComplex:
        """The labeled matroid whose anti-cliques are these blocks."""
        return complex_from_blocks(self.n, self.blocks)


def set_partitions_subordinate(partition: Partition) -> Iterator[SetPartition]:
    """Set partitions of {1..n} whose block sizes are λ."""
    for blocks in multiset_partitions(list(range(1, partition.n + 1)), partition.length):
        if sorted((len(block) for block in blocks), reverse=True) == list(partition.parts):
            yield SetPartition.of(blocks)


def parse_ideal_text(text: str, nvars: int | None = None) -> MonomialIdeal:
    """Read one generator per line ("x1^2*x3", "1"); blank lines and # comments are skipped."""
    lines = [line.split("#", 1)[0].strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    indices = [int(match) for line in lines for match in _VARIABLE.findall(line)]
    nvars = nvars if nvars is not None else max(indices, default=0)
    if indices and max(indices) > nvars:
        raise MalformedInputError(f"variable x{max(indices)} exceeds {nvars} variables")
    symbols = sp.symbols(f"x1:{nvars + 1}") if nvars else ()
    local = {str(symbol): symbol for symbol in symbols}
    generators = []
    for line in lines:
        try:
            expression = parse_expr(line, local_dict=local, transformations=_TRANSFORMATIONS)
            terms = sp.Poly(expression, *symbols).terms() if symbols else [((), expression)]
        except (SyntaxError, TokenError, TypeError, sp.PolynomialError, sp.SympifyError) as error:
            raise MalformedInputError(f"cannot parse generator {line!r}") from error
        if len(terms) != 1 or terms[0][1] != 1:
            raise MalformedInputError(f"generator {line!r} is not a monomial")
        generators.append(Monomial(tuple(int(exponent) for exponent in terms[0][0])))
    _LOGGER.debug("parsed %s generators in %s variables", len(generators), nvars)
    return monomial_ideal(nvars, generators)


def format_ideal_text(ideal: MonomialIdeal) -> str:
    """One generator per line, as parse_ideal_text reads them."""
    return "".join(f"{generator}\n" for generator in ideal.generators)


def is_center_by_ideal(delta: SimplicialComplex, vertex: int) -> bool:
    """x_v divides no degree-2 minimal generator of I_Δ."""
    bit = vertex_mask((vertex,))
    return not any(generator.support & bit for generator in stanley_reisner(delta).in_degree(2))
