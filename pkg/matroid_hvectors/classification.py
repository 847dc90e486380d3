"""h-vectors of 1-dimensional matroid complexes: formulas, membership tests and tables."""

from __future__ import annotations

import logging
from collections import defaultdict
from collections.abc import Iterator
import sys
from dataclasses import dataclass, field
if sys.version_info >= (3, 11):
    from enum import StrEnum
else:
    from backports.strenum import StrEnum
from functools import cache
from math import comb

from .complex import HVector
from .const import BROWN_COLBOURN_ALPHAS, MAX_PARTITION_N, MAX_RECURSIVE_H1, MAX_TABLE_N, MIN_TABLE_N
from .exceptions import MalformedHVectorError, TooLargeError
from .partition import Partition, count_labeled, partitions_of

_LOGGER = logging.getLogger(__name__)


def h_of_partition(partition: Partition) -> HVector:
    """h-vector of Δ_λ: (1, n-1) for one part, else (1, n-2, C(n-1,2) - |λ|₂)."""
    n = partition.n
    if partition.length == 1:
        return HVector.of(1, n - 1)
    return HVector.of(1, n - 2, comb(n - 1, 2) - partition.weighted_sum(2))


class MembershipMode(StrEnum):
    """Decision procedure for is_matroid_hvector."""

    CLOSED = "closed"
    RECURSIVE = "recursive"


@dataclass(frozen=True)
class MembershipResult:
    """Verdict for one h-vector; witnesses are only collected in closed mode."""

    hvector: HVector
    is_matroid: bool
    mode: MembershipMode
    witnesses: tuple[Partition, ...] | None = None


@cache
def _recursive(m: int, h2: int) -> bool:
    """Return whether (1, m, h₂) passes the recursive test; memoized."""
    for x in range(m // 2, m + 1):
        if x * (m - x) == h2:
            return True
    for x in range(max(1, m // 2), m + 1):
        rest = h2 - x * (m - x + 1)
        if rest >= 0 and _recursive(x - 1, rest):
            return True
    return False


def is_matroid_hvector(hvector: HVector, mode: MembershipMode | str = MembershipMode.CLOSED) -> MembershipResult:
    """Decide whether (1, h₁, h₂) or (1, h₁) is the h-vector of a matroid complex.

    Closed mode scans the partitions of n = h₁ + 2 with at least two parts and
    returns every λ whose h-vector matches, in ascending lexicographic order.
    Recursive mode checks h₂ = x(m-x) for ⌊m/2⌋ <= x <= m, or
    h₂ = h' + x(m-x+1) for x in the same range with (1, x-1, h') a matroid h-vector,
    where m = h₁. Closed mode falls back to the recursive test when n exceeds
    MAX_PARTITION_N; the result then reports recursive mode and carries no witnesses.
    """
    hvector.validate()
    mode = MembershipMode(mode)
    if len(hvector) not in (2, 3):
        raise MalformedHVectorError(f"expected (1,h1) or (1,h1,h2), got {hvector}")
    m = hvector[1]

    if len(hvector) == 2:
        witnesses = (Partition.of(m + 1),) if mode is MembershipMode.CLOSED else None
        return MembershipResult(hvector, True, mode, witnesses)

    h2 = hvector[2]
    n = m + 2
    if mode is MembershipMode.RECURSIVE or n > MAX_PARTITION_N:
        _check_recursion_depth(m)
        if mode is MembershipMode.CLOSED:
            _LOGGER.debug("n=%s is past the partition limit; deciding %s recursively", n, hvector)
        return MembershipResult(hvector, _recursive(m, h2), MembershipMode.RECURSIVE)

    witnesses = tuple(
        sorted(
            partition
            for partition in partitions_of(n)
            if partition.length >= 2 and h_of_partition(partition)[2] == h2
        )
    )
    return MembershipResult(hvector, bool(witnesses), mode, witnesses)


def recursive_witness(hvector: HVector) -> Partition | None:
    """Build one partition realizing (1, m, h₂) by following the recursive test, or None."""
    hvector.validate()
    if len(hvector) == 2:
        return Partition.of(hvector[1] + 1)
    _check_recursion_depth(hvector[1])
    return _witness(hvector[1], hvector[2])


def _check_recursion_depth(m: int) -> None:
    if m > MAX_RECURSIVE_H1:
        raise TooLargeError(f"membership is decided for h₁ <= {MAX_RECURSIVE_H1}, got {m}")


def _witness(m: int, h2: int) -> Partition | None:
    for x in range(m // 2, m + 1):
        if x * (m - x) == h2:
            return Partition.from_sizes((x + 1, m - x + 1))
    for x in range(max(1, m // 2), m + 1):
        rest = h2 - x * (m - x + 1)
        if rest >= 0 and _recursive(x - 1, rest):
            inner = _witness(x - 1, rest)
            return Partition.from_sizes((*inner.parts, m - x + 1))
    return None


def easy_hvectors(m: int) -> tuple[HVector, ...]:
    """The families (1,m,m), (1,m,m-1), (1,m,2(m-1)), (1,m,2(m-2)), (1,m,3m-5) where they make sense."""
    candidates = (m, m - 1, 2 * (m - 1), 2 * (m - 2), 3 * m - 5)
    ceiling = comb(m + 1, 2)
    return tuple(HVector.of(1, m, h2) for h2 in dict.fromkeys(candidates) if 0 <= h2 <= ceiling)


@dataclass(frozen=True)
class HVectorGroup:
    """Partitions of n sharing one h-vector."""

    hvector: HVector
    partitions: tuple[Partition, ...]

    @property
    def labeled(self) -> int:
        """Labeled complexes with this h-vector."""
        return sum(count_labeled(partition) for partition in self.partitions)


def distinct_hvectors(n: int) -> tuple[HVectorGroup, ...]:
    """Group the partitions of n with at least two parts by h-vector, ascending."""
    groups: dict[HVector, list[Partition]] = defaultdict(list)
    for partition in partitions_of(n):
        if partition.length >= 2:
            groups[h_of_partition(partition)].append(partition)
    return tuple(
        HVectorGroup(hvector, tuple(sorted(members)))
        for hvector, members in sorted(groups.items(), key=lambda item: item[0].entries)
    )


def duplicates(n: int) -> tuple[HVectorGroup, ...]:
    """h-vectors realized by more than one isomorphism class."""
    return tuple(group for group in distinct_hvectors(n) if len(group.partitions) > 1)


def _check_table_range(max_n: int) -> None:
    """Raise TooLargeError outside the table range."""
    if not MIN_TABLE_N <= max_n <= MAX_TABLE_N:
        raise TooLargeError(f"tables cover {MIN_TABLE_N} <= max_n <= {MAX_TABLE_N}, got {max_n}")


@cache
def _weighted_sums(n: int) -> frozenset[int]:
    """Every |λ|₂ over all partitions of n."""
    if n == 0:
        return frozenset({0})
    return frozenset(comb(k, 2) + rest for k in range(1, n + 1) for rest in _weighted_sums(n - k))


def matroid_h2_values(n: int) -> frozenset[int]:
    """Every h₂ of a 1-dimensional matroid on n vertices."""
    single_part = comb(n, 2)
    top = comb(n - 1, 2)
    return frozenset(top - weighted for weighted in _weighted_sums(n) if weighted != single_part)


@dataclass(frozen=True)
class TableRow:
    """One row n of a table; entries run over h₂ from C(n-1,2) down to 0."""

    n: int
    entries: tuple[tuple[int, bool], ...]

    @property
    def shaded(self) -> frozenset[int]:
        """Return the h₂ values that are matroid h-vectors."""
        return frozenset(h2 for h2, is_shaded in self.entries if is_shaded)

    @property
    def unshaded(self) -> frozenset[int]:
        """Return the h₂ values no matroid realizes."""
        return frozenset(h2 for h2, is_shaded in self.entries if not is_shaded)


def _h2_range(n: int) -> range:
    """Return h₂ from C(n-1,2) down to 0."""
    return range(comb(n - 1, 2), -1, -1)


def _rows_from(max_n: int, shaded: frozenset[tuple[int, int]] | set[tuple[int, int]]) -> tuple[TableRow, ...]:
    return tuple(
        TableRow(n, tuple((h2, (n, h2) in shaded) for h2 in _h2_range(n))) for n in range(MIN_TABLE_N, max_n + 1)
    )


def table1(max_n: int) -> tuple[TableRow, ...]:
    """Which (1, n-2, h₂) are matroid h-vectors, for n = 2..max_n."""
    _check_table_range(max_n)
    shaded = {(n, h2) for n in range(MIN_TABLE_N, max_n + 1) for h2 in matroid_h2_values(n)}
    _LOGGER.debug("table1 up to n=%s has %s shaded entries", max_n, len(shaded))
    return _rows_from(max_n, shaded)


@dataclass
class _MoveBoard:
    """Shaded table cells as the down/diagonal moves fill them in."""

    max_n: int
    shaded: set[tuple[int, int]] = field(default_factory=set)

    def add(self, cells) -> bool:
        """Shade cells inside the table; return whether anything changed."""
        before = len(self.shaded)
        self.shaded.update(cell for cell in cells if cell[0] <= self.max_n)
        return len(self.shaded) > before

    def down_closure(self) -> bool:
        """Move every shaded cell straight down, row by row."""
        changed = False
        for n in range(MIN_TABLE_N, self.max_n):
            for cell_n, h2 in sorted(self.shaded):
                if cell_n == n:
                    changed |= self.add([(n + 1, h2 + n - 1)])
        return changed

    def can_center(self, n: int, h2: int) -> bool:
        """Return whether the cell has a realization with a center."""
        return (n, h2) in self.shaded and (h2 == 0 or (n - 1, h2 - (n - 2)) in self.shaded)

    def diagonal(self, n: int, h2: int) -> bool:
        """Shade the diagonal of repeated partial stars from a cell."""
        return self.add((n + k, h2 + (n - 2) * k) for k in range(1, self.max_n - n + 1))

    def snapshot(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.shaded)


def move_snapshots(max_n: int) -> Iterator[frozenset[tuple[int, int]]]:
    """Shade the table with down and diagonal moves, yielding each intermediate table.

    Down moves take (n, h₂) to (n+1, h₂+n-1). A shaded entry whose upper-left
    neighbour (n-1, h₂-(n-2)) is shaded, or with h₂ = 0, is a cone centre and
    moves diagonally to (n+k, h₂+(n-2)k). Snapshots: empty table, the zeros,
    their down-closure, one per productive diagonal source (rows ascending,
    h₂ descending), then each closing down-closure.
    """
    _check_table_range(max_n)
    board = _MoveBoard(max_n)
    yield board.snapshot()
    board.add((n, 0) for n in range(MIN_TABLE_N, max_n + 1))
    yield board.snapshot()
    if board.down_closure():
        yield board.snapshot()
    while True:
        swept = False
        for n in range(MIN_TABLE_N, max_n + 1):
            row = sorted((h2 for cell_n, h2 in board.shaded if cell_n == n), reverse=True)
            for h2 in row:
                if board.can_center(n, h2) and board.diagonal(n, h2):
                    swept = True
                    yield board.snapshot()
        closed = board.down_closure()
        if closed:
            yield board.snapshot()
        if not (swept or closed):
            return


def shade_by_moves(max_n: int) -> tuple[TableRow, ...]:
    """Table 1 as produced by the move procedure."""
    final = frozenset()
    for final in move_snapshots(max_n):
        pass
    return _rows_from(max_n, final)


@dataclass(frozen=True)
class PartitionCell:
    """A table2 cell: the partitions of n with a given h₂."""

    h2: int
    partitions: tuple[Partition, ...]

    @property
    def labeled(self) -> int:
        """Return the labeled complexes in this cell."""
        return sum(count_labeled(partition) for partition in self.partitions)


@dataclass(frozen=True)
class PartitionRow:
    """One row n of table2."""

    n: int
    cells: tuple[PartitionCell, ...]


def table2(max_n: int) -> tuple[PartitionRow, ...]:
    """Partitions of each n = 2..max_n placed under their h₂."""
    _check_table_range(max_n)
    rows = []
    for n in range(MIN_TABLE_N, max_n + 1):
        by_h2: dict[int, list[Partition]] = defaultdict(list)
        for group in distinct_hvectors(n):
            by_h2[group.hvector[2]].extend(group.partitions)
        cells = tuple(PartitionCell(h2, tuple(by_h2.get(h2, ()))) for h2 in _h2_range(n))
        rows.append(PartitionRow(n, cells))
    return tuple(rows)


@dataclass(frozen=True)
class SanityReport:
    """Numeric checks on an h-vector; checks maps check name to pass/fail."""

    hvector: HVector
    checks: dict[str, bool]

    @property
    def passed(self) -> bool:
        """Return whether every check passed."""
        return all(self.checks.values())


def brown_colbourn(hvector: HVector, alpha: int) -> bool:
    """(-1)^j Σ_{i<=j} (-α)^i hᵢ >= 0 for every j, strictly for α > 1, after trimming trailing zeros."""
    entries = hvector.trimmed().entries
    for j in range(len(entries)):
        value = (-1) ** j * sum((-alpha) ** i * entries[i] for i in range(j + 1))
        if value < 0 or (alpha > 1 and value == 0):
            return False
    return True


def hvector_sanity(hvector: HVector) -> SanityReport:
    """Run the inequality and gap checks that every matroid h-vector satisfies."""
    checks: dict[str, bool] = {}
    for alpha in BROWN_COLBOURN_ALPHAS:
        checks[f"brown_colbourn_alpha_{alpha}"] = brown_colbourn(hvector, alpha)
    checks["nonnegative"] = all(entry >= 0 for entry in hvector)
    if len(hvector) == 3:
        m, h2 = hvector[1], hvector[2]
        checks["macaulay_bound"] = h2 <= comb(m + 1, 2)
        checks["no_low_gap"] = not 0 < h2 < m - 1
        checks["no_middle_gap"] = m < 6 or not m < h2 < 2 * (m - 2)
    return SanityReport(hvector, checks)
