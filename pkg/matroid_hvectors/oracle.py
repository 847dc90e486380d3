"""Exhaustive census of matroid graphs, used as ground truth for the classification."""

from __future__ import annotations

import logging
from collections import defaultdict
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial, reduce
from typing import TypeVar

import networkx as nx
from sympy import bell
from sympy import partition as partition_count

from .classification import is_matroid_hvector
from .complex import HVector, SimplicialComplex, from_edges, h_vector
from .const import DEFAULT_CHUNK_SIZE, LIBRARY_SWEEP_MAX_N, MAX_CENSUS_N, MIN_CENSUS_N
from .exceptions import CrosscheckError, NotMatroidError, TooLargeError
from .graphscan import EMPTY_CHUNK, ChunkResult, chunk_ranges, code_edges, scan_chunk
from .matroid import MatroidTest, degree_sequence, extract_partition, is_matroid, to_graph
from .partition import Partition, count_labeled

_LOGGER = logging.getLogger(__name__)


def code_complex(n: int, code: int) -> SimplicialComplex:
    """The complex on n vertices whose 1-skeleton is the graph code."""
    return from_edges(n, code_edges(n, code))


@dataclass(frozen=True)
class LibrarySweep:
    """Codes accepted by the library's fast test and by partition extraction."""

    scanned: int
    fast: frozenset[int]
    extracted: frozenset[int]

    def merge(self, other: LibrarySweep) -> LibrarySweep:
        """Return the union of two sweeps."""
        return LibrarySweep(self.scanned + other.scanned, self.fast | other.fast, self.extracted | other.extracted)


EMPTY_SWEEP = LibrarySweep(0, frozenset(), frozenset())


def sweep_chunk(n: int, start: int, stop: int) -> LibrarySweep:
    """Run is_matroid(FAST) and extract_partition on codes start..stop-1."""
    fast = set()
    extracted = set()
    for code in range(start, stop):
        delta = code_complex(n, code)
        if is_matroid(delta, MatroidTest.FAST):
            fast.add(code)
        try:
            extract_partition(delta)
        except NotMatroidError:
            continue
        extracted.add(code)
    _LOGGER.debug("swept codes %s..%s for n=%s", start, stop - 1, n)
    return LibrarySweep(stop - start, frozenset(fast), frozenset(extracted))


@dataclass(frozen=True)
class MatroidCensus:
    """Every labeled matroid graph on n vertices, grouped by class and h-vector.

    classes includes the 0-dimensional class λ = (n); class_total and
    hvector_groups count only the 1-dimensional classes. library is None when
    the per-graph library sweep was skipped.
    """

    n: int
    scanned: int
    labeled_matroids: tuple[int, ...]
    classes: dict[Partition, tuple[int, ...]]
    hvector_groups: dict[HVector, tuple[Partition, ...]]
    kernel: ChunkResult
    library: LibrarySweep | None = None

    @property
    def labeled_total(self) -> int:
        """Return the number of labeled matroids."""
        return len(self.labeled_matroids)

    @property
    def class_total(self) -> int:
        """Return the number of 1-dimensional classes."""
        return sum(1 for partition in self.classes if partition.length >= 2)

    @property
    def distinct_hvector_total(self) -> int:
        """Return the number of distinct 1-dimensional h-vectors."""
        return len(self.hvector_groups)

    @property
    def duplicate_groups(self) -> dict[HVector, tuple[Partition, ...]]:
        """Return the h-vectors shared by two or more classes."""
        return {hvector: members for hvector, members in self.hvector_groups.items() if len(members) > 1}


Result = TypeVar("Result", ChunkResult, LibrarySweep)


def _scan(
    chunk: Callable[[int, int, int], Result],
    empty: Result,
    n: int,
    chunk_size: int,
    workers: int,
    reverse: bool,
) -> Result:
    ranges = chunk_ranges(n, chunk_size, reverse=reverse)
    scan = partial(chunk, n)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            partials = list(executor.map(scan, *zip(*ranges, strict=True)))
    else:
        partials = [scan(start, stop) for start, stop in ranges]
    return reduce(lambda left, right: left.merge(right), partials, empty)


def enumerate_matroids(
    n: int,
    workers: int = 1,
    reverse: bool = False,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
    library_sweep: bool | None = None,
) -> MatroidCensus:
    """Scan all 2^C(n,2) graphs on n labeled vertices and keep the matroids.

    The vectorized definitional test selects the matroids; each one is
    confirmed with the library's definitional test before it is classified.
    With library_sweep (default on for n <= LIBRARY_SWEEP_MAX_N) every graph
    also goes through the library's fast test and partition extraction.
    """
    if not MIN_CENSUS_N <= n <= MAX_CENSUS_N:
        raise TooLargeError(f"census covers {MIN_CENSUS_N} <= n <= {MAX_CENSUS_N}, got {n}")
    if library_sweep is None:
        library_sweep = n <= LIBRARY_SWEEP_MAX_N
    kernel = _scan(scan_chunk, EMPTY_CHUNK, n, chunk_size, workers, reverse)
    library = _scan(sweep_chunk, EMPTY_SWEEP, n, chunk_size, workers, reverse) if library_sweep else None
    matroids = []
    classes: dict[Partition, list[int]] = defaultdict(list)
    groups: dict[HVector, set[Partition]] = defaultdict(set)
    for code in sorted(kernel.definitional):
        delta = code_complex(n, code)
        if not is_matroid(delta):
            continue
        matroids.append(code)
        partition = extract_partition(delta)
        classes[partition].append(code)
        if partition.length >= 2:
            groups[h_vector(delta)].add(partition)
    _LOGGER.info("n=%s: %s graphs scanned, %s labeled matroids", n, kernel.scanned, len(matroids))
    return MatroidCensus(
        n=n,
        scanned=kernel.scanned,
        labeled_matroids=tuple(matroids),
        classes={partition: tuple(codes) for partition, codes in sorted(classes.items(), reverse=True)},
        hvector_groups={
            hvector: tuple(sorted(members))
            for hvector, members in sorted(groups.items(), key=lambda item: item[0].entries)
        },
        kernel=kernel,
        library=library,
    )


def check_class_count(census: MatroidCensus) -> str:
    """1-dimensional classes number p(n)-1, plus one 0-dimensional class."""
    expected = int(partition_count(census.n)) - 1
    zero_dim = len(census.classes) - census.class_total
    if census.class_total != expected or zero_dim != 1:
        raise CrosscheckError(
            f"class count {census.class_total} (+{zero_dim} dim 0), expected {expected} (+1)",
            details=", ".join(map(str, census.classes)),
        )
    return f"{census.class_total} classes + 1 dim-0 class"


def check_labeled_counts(census: MatroidCensus) -> str:
    """Per-class labeled counts are Faà di Bruno coefficients; their sum is Bell(n)."""
    wrong = [
        f"{partition}: {len(codes)} != {count_labeled(partition)}"
        for partition, codes in census.classes.items()
        if len(codes) != count_labeled(partition)
    ]
    if wrong:
        raise CrosscheckError("labeled class sizes disagree with Faà di Bruno", details="\n".join(wrong))
    if census.labeled_total != int(bell(census.n)):
        raise CrosscheckError(f"labeled total {census.labeled_total} != B({census.n}) = {bell(census.n)}")
    return f"{census.labeled_total} labeled = B({census.n})"


def check_hvectors(census: MatroidCensus) -> str:
    """Realized h-vectors are exactly the ones accepted by closed-form membership."""
    n = census.n
    accepted = {
        HVector.of(1, n - 2, h2)
        for h2 in range((n - 1) * (n - 2) // 2 + 1)
        if is_matroid_hvector(HVector.of(1, n - 2, h2)).is_matroid
    }
    realized = set(census.hvector_groups)
    if accepted != realized:
        missing = sorted(map(str, accepted - realized))
        extra = sorted(map(str, realized - accepted))
        raise CrosscheckError("realized h-vectors differ from membership", details=f"missing {missing}, extra {extra}")
    return f"{len(realized)} distinct h-vectors"


def check_tests_agree(census: MatroidCensus) -> str:
    """Definitional, fast and complete-multipartite tests select the same graphs.

    The numpy kernel's three tests are compared with each other and with the
    confirmed matroids; when the census carries a library sweep, the library's
    fast test and partition extraction must also accept exactly those graphs.
    """
    kernel = census.kernel
    confirmed = frozenset(census.labeled_matroids)
    if not kernel.definitional == kernel.fast == kernel.multipartite == confirmed:
        details = (
            f"definitional-only {sorted(kernel.definitional - kernel.fast)}\n"
            f"fast-only {sorted(kernel.fast - kernel.definitional)}\n"
            f"multipartite-only {sorted(kernel.multipartite - kernel.definitional)}\n"
            f"library-rejected {sorted(kernel.definitional - confirmed)}"
        )
        raise CrosscheckError("matroid tests disagree", details=details)
    library = census.library
    if library is None:
        return f"{census.scanned} graphs, 3 tests agree"
    if library.scanned != census.scanned or not library.fast == library.extracted == confirmed:
        details = (
            f"swept {library.scanned} of {census.scanned}\n"
            f"library-fast-only {sorted(library.fast - confirmed)}\n"
            f"library-fast-missing {sorted(confirmed - library.fast)}\n"
            f"extracted-only {sorted(library.extracted - confirmed)}\n"
            f"extracted-missing {sorted(confirmed - library.extracted)}"
        )
        raise CrosscheckError("library matroid tests disagree with the kernel", details=details)
    return f"{census.scanned} graphs, 3 tests agree in the kernel and the library"


def check_degree_sequences(census: MatroidCensus) -> str:
    """Degree sequences separate exactly the partition classes."""
    by_degrees: dict[object, set[Partition]] = defaultdict(set)
    for partition, codes in census.classes.items():
        for code in codes:
            by_degrees[degree_sequence(code_complex(census.n, code))].add(partition)
    merged = [sorted(map(str, members)) for members in by_degrees.values() if len(members) > 1]
    if merged or len(by_degrees) != len(census.classes):
        raise CrosscheckError("degree sequences do not match partition classes", details=str(merged))
    return f"{len(by_degrees)} degree sequences"


def check_max_cliques(census: MatroidCensus) -> str:
    """The largest clique of each class has ℓ(λ) vertices."""
    wrong = []
    for partition, codes in census.classes.items():
        graph = to_graph(code_complex(census.n, codes[0]))
        largest = max(len(clique) for clique in nx.find_cliques(graph))
        if largest != partition.length:
            wrong.append(f"{partition}: clique {largest} != {partition.length}")
    if wrong:
        raise CrosscheckError("max clique differs from partition length", details="\n".join(wrong))
    return f"{len(census.classes)} classes"


CROSSCHECKS: tuple[tuple[str, Callable[[MatroidCensus], str]], ...] = (
    ("classes", check_class_count),
    ("labeled", check_labeled_counts),
    ("h-vectors", check_hvectors),
    ("tests agree", check_tests_agree),
    ("degrees", check_degree_sequences),
    ("max clique", check_max_cliques),
)


@dataclass(frozen=True)
class CrosscheckReport:
    """Detail line per passed cross-check."""

    n: int
    results: tuple[tuple[str, str], ...]


def crosscheck(n: int, workers: int = 1, census: MatroidCensus | None = None) -> CrosscheckReport:
    """Run every cross-check against the census; the first failure raises CrosscheckError."""
    census = census or enumerate_matroids(n, workers=workers)
    results = []
    for name, check in CROSSCHECKS:
        try:
            results.append((name, check(census)))
        except CrosscheckError as error:
            _LOGGER.warning("crosscheck %s failed for n=%s: %s", name, n, error)
            raise
    return CrosscheckReport(n, tuple(results))


def census_to_dict(census: MatroidCensus, members: bool = False) -> dict:
    """JSON-ready census; member codes are included only on request."""
    classes = []
    for partition, codes in census.classes.items():
        entry = {
            "partition": str(partition),
            "hvector": list(h_vector(code_complex(census.n, codes[0])).entries),
            "labeled": len(codes),
        }
        if members:
            entry["members"] = [code_edges(census.n, code) for code in codes]
        classes.append(entry)
    return {
        "n": census.n,
        "labeled_total": census.labeled_total,
        "class_total": census.class_total,
        "distinct_hvector_total": census.distinct_hvector_total,
        "classes": classes,
        "hvector_groups": [
            {"hvector": list(hvector.entries), "partitions": [str(partition) for partition in partitions]}
            for hvector, partitions in census.hvector_groups.items()
        ],
    }
