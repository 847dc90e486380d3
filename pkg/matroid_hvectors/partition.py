"""Integer partitions: the isomorphism invariant of 1-dimensional matroid complexes."""

from __future__ import annotations

import json
import re
from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass
from math import comb, factorial, prod

from sympy import bell
from sympy import partition as partition_count

from .const import MAX_PARTITION_N
from .exceptions import MalformedPartitionError, TooLargeError

_PLUS_FORM = re.compile(r"^\s*\d+(\s*\+\s*\d+)*\s*$")


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing positive parts λ₁ ≥ ... ≥ λ_ℓ."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise MalformedPartitionError("a partition needs at least one part")
        if any(part < 1 for part in self.parts):
            raise MalformedPartitionError(f"parts must be positive: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:], strict=False)):
            raise MalformedPartitionError(f"parts must be weakly decreasing: {self.parts}")

    @classmethod
    def of(cls, *parts: int) -> Partition:
        """Return the partition with these parts."""
        return cls(tuple(parts))

    @classmethod
    def from_sizes(cls, sizes) -> Partition:
        """Sort arbitrary positive sizes into a partition."""
        return cls(tuple(sorted(sizes, reverse=True)))

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse "3+1+1" or "[3,1,1]"."""
        stripped = text.strip()
        if stripped.startswith("["):
            try:
                parts = json.loads(stripped)
            except json.JSONDecodeError as error:
                raise MalformedPartitionError(f"cannot parse partition {text!r}") from error
            if not isinstance(parts, list) or not all(isinstance(part, int) for part in parts):
                raise MalformedPartitionError(f"cannot parse partition {text!r}")
            return cls(tuple(parts))
        if not _PLUS_FORM.match(stripped):
            raise MalformedPartitionError(f"cannot parse partition {text!r}")
        return cls(tuple(int(part) for part in stripped.split("+")))

    @property
    def n(self) -> int:
        """Return |λ|."""
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Return the number of parts ℓ(λ)."""
        return len(self.parts)

    def weighted_sum(self, k: int = 2) -> int:
        """|λ|_k = Σ C(λᵢ, k)."""
        return sum(comb(part, k) for part in self.parts)

    @property
    def m_sequence(self) -> tuple[int, ...]:
        """The Δ_m sequence (λᵢ - 1) realizing this partition."""
        return tuple(part - 1 for part in self.parts)

    @property
    def multiplicities(self) -> dict[int, int]:
        """Part size -> number of parts of that size, largest size first."""
        return dict(sorted(Counter(self.parts).items(), reverse=True))

    def compact(self) -> str:
        """Compact table notation, e.g. "3 2 1x2" for 3+2+1+1."""
        return " ".join(
            str(size) if count == 1 else f"{size}x{count}" for size, count in self.multiplicities.items()
        )

    def __str__(self) -> str:
        return "+".join(map(str, self.parts))


def _descending(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _descending(n - first, first):
            yield (first, *rest)


def partitions_of(n: int) -> Iterator[Partition]:
    """Yield every partition of n once, in reverse-lexicographic order (n, ..., 1+1+...+1)."""
    if not 1 <= n <= MAX_PARTITION_N:
        raise TooLargeError(f"partitions are enumerated for 1 <= n <= {MAX_PARTITION_N}, got {n}")
    for parts in _descending(n, n):
        yield Partition(parts)


def count_classes(n: int) -> int:
    """Isomorphism classes of 1-dimensional matroid complexes on n vertices: p(n) - 1.

    Adding the single 0-dimensional class gives p(n) for dimension at most 1.
    """
    return int(partition_count(n)) - 1


def count_labeled(partition: Partition) -> int:
    """Labeled complexes in the class of Δ_λ.

    This is the Faà di Bruno coefficient n! / Π aⱼ! (j!)^aⱼ, the number of set
    partitions of {1..n} with block sizes λ.
    """
    denominator = prod(
        factorial(count) * factorial(size) ** count for size, count in partition.multiplicities.items()
    )
    return factorial(partition.n) // denominator


def total_labeled(n: int) -> int:
    """Labeled matroid complexes of dimension at most 1 on n vertices, the Bell number B(n)."""
    return sum(count_labeled(partition) for partition in partitions_of(n))


def bell_number(n: int) -> int:
    """Closed reference value for total_labeled."""
    return int(bell(n))
