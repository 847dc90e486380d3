"""Vectorized matroid tests over every graph on n labeled vertices.

A graph code is a C(n,2)-bit integer; bit p is the p-th pair of
itertools.combinations(range(n), 2).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cache
from itertools import combinations

import numpy as np

_LOGGER = logging.getLogger(__name__)


@cache
def pair_index(n: int) -> dict[tuple[int, int], int]:
    """(i, j) with i < j (0-based) -> bit position in a graph code."""
    return {pair: position for position, pair in enumerate(combinations(range(n), 2))}


def code_edges(n: int, code: int) -> list[tuple[int, int]]:
    """1-based edges of a graph code."""
    return [(i + 1, j + 1) for (i, j), position in pair_index(n).items() if code >> position & 1]


@dataclass(frozen=True)
class ChunkResult:
    """Codes in one range that pass each test."""

    scanned: int
    definitional: frozenset[int]
    fast: frozenset[int]
    multipartite: frozenset[int]

    def merge(self, other: ChunkResult) -> ChunkResult:
        """Return the union of two chunk results."""
        return ChunkResult(
            self.scanned + other.scanned,
            self.definitional | other.definitional,
            self.fast | other.fast,
            self.multipartite | other.multipartite,
        )


EMPTY_CHUNK = ChunkResult(0, frozenset(), frozenset(), frozenset())


def _neighbor_masks(n: int, codes: np.ndarray) -> list[np.ndarray]:
    """Return per-vertex neighbor bitmasks for a batch of codes."""
    pairs = pair_index(n)
    masks = [np.zeros_like(codes) for _ in range(n)]
    for (i, j), position in pairs.items():
        bit = (codes >> position) & 1
        masks[i] |= bit << j
        masks[j] |= bit << i
    return masks


def _window_edge_mask(n: int, window: int) -> int:
    return sum(1 << position for (i, j), position in pair_index(n).items() if window >> i & 1 and window >> j & 1)


def scan_chunk(n: int, start: int, stop: int) -> ChunkResult:
    """Run the three matroid tests on codes start..stop-1."""
    codes = np.arange(start, stop, dtype=np.int64)
    neighbors = _neighbor_masks(n, codes)
    adjacent = [[(neighbors[v] >> u) & 1 == 1 for u in range(n)] for v in range(n)]
    has_edge = codes != 0

    # Every restriction pure: no window holding an edge and an isolated vertex.
    definitional = np.ones(codes.shape, dtype=bool)
    for window in range(1, 1 << n):
        if window.bit_count() < 3:
            continue
        window_edges = (codes & _window_edge_mask(n, window)) != 0
        isolated = np.zeros(codes.shape, dtype=bool)
        for v in range(n):
            if window >> v & 1:
                isolated |= (neighbors[v] & window) == 0
        definitional &= ~(window_edges & isolated)

    # Pure, and each vertex's neighborhood meets every edge.
    fast = np.ones(codes.shape, dtype=bool)
    for v in range(n):
        fast &= ~has_edge | (neighbors[v] != 0)
    for (a, b), position in pair_index(n).items():
        edge = ((codes >> position) & 1) == 1
        for v in range(n):
            fast &= ~edge | adjacent[v][a] | adjacent[v][b]

    # Complete multipartite: non-adjacency is transitive.
    multipartite = np.ones(codes.shape, dtype=bool)
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            for c in range(n):
                if c in (a, b):
                    continue
                multipartite &= adjacent[a][b] | adjacent[b][c] | ~adjacent[a][c]

    _LOGGER.debug("scanned codes %s..%s for n=%s", start, stop - 1, n)
    return ChunkResult(
        scanned=stop - start,
        definitional=frozenset(int(code) for code in codes[definitional]),
        fast=frozenset(int(code) for code in codes[fast]),
        multipartite=frozenset(int(code) for code in codes[multipartite]),
    )


def chunk_ranges(n: int, chunk_size: int, reverse: bool = False) -> list[tuple[int, int]]:
    """Split the code range [0, 2^C(n,2)) into chunks."""
    total = 1 << (n * (n - 1) // 2)
    ranges = [(start, min(start + chunk_size, total)) for start in range(0, total, chunk_size)]
    return ranges[::-1] if reverse else ranges
