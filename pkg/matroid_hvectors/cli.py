"""Command-line interface for matroid complexes of dimension at most 1."""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Callable
from pathlib import Path

from .classification import (
    MembershipMode,
    distinct_hvectors,
    is_matroid_hvector,
    recursive_witness,
    table1,
    table2,
)
from .complex import HVector, SimplicialComplex, f_vector, h_vector
from .config import build_settings
from .const import LIBRARY_SWEEP_MAX_N, MAX_TABLE_N, TABLE_FORMATS
from .exceptions import (
    CrosscheckError,
    MalformedHVectorError,
    MalformedInputError,
    MalformedPartitionError,
    MatroidComplexError,
    OutputError,
)
from .formats import (
    TABLE1_EMITTERS,
    TABLE2_EMITTERS,
    complex_from_dict,
    complex_to_dict,
    dumps,
    ideal_to_dict,
    load_json,
)
from .graphscan import code_edges
from .ideals import format_ideal_text, hilbert_function, socle_and_purity, stanley_reisner, witness_ideal
from .matroid import delta_of_partition, extract_partition, is_matroid
from .oracle import CROSSCHECKS, census_to_dict, code_complex, enumerate_matroids
from .partition import Partition, count_classes, total_labeled

USAGE_ERRORS = (MalformedPartitionError, MalformedHVectorError, MalformedInputError)


def emit(args: argparse.Namespace, text: str) -> None:
    """Write command output to --out when given, else stdout."""
    if args.out:
        try:
            Path(args.out).write_text(text)
        except OSError as error:
            raise OutputError(f"cannot write {args.out}: {error}") from error
    else:
        sys.stdout.write(text)


def read_complex(path: str) -> SimplicialComplex:
    """Load a complex JSON file ("-" reads stdin)."""
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(path).read_text()
        except OSError as error:
            raise MalformedInputError(f"cannot read {path}: {error}") from error
    return complex_from_dict(load_json(text, path))


def read_target(target: str) -> SimplicialComplex:
    """A partition ("3+1+1", "[3,1,1]") builds Δ_λ; anything else is a complex JSON path."""
    if target.endswith(".json") or target == "-" or Path(target).is_file():
        return read_complex(target)
    return delta_of_partition(Partition.parse(target))


def yes_no(value: bool) -> str:
    return "yes" if value else "no"


def command_construct(args: argparse.Namespace) -> int:
    """Emit Δ_λ as complex JSON."""
    emit(args, dumps(complex_to_dict(delta_of_partition(Partition.parse(args.partition)))))
    return 0


def command_classify(args: argparse.Namespace) -> int:
    """Report matroid verdict, partition and h-vector of a complex."""
    delta = read_complex(args.complex)
    matroid = is_matroid(delta)
    result = {
        "matroid": matroid,
        "partition": str(extract_partition(delta)) if matroid and delta.dim <= 1 else None,
        "hvector": list(h_vector(delta).entries),
        "fvector": list(f_vector(delta).entries),
    }
    if args.json:
        emit(args, dumps(result))
    else:
        lines = [f"matroid: {yes_no(matroid)}"]
        if result["partition"]:
            lines.append(f"partition: {result['partition']}")
        lines.append(f"h-vector: {h_vector(delta)}")
        lines.append(f"f-vector: {f_vector(delta)}")
        emit(args, "\n".join(lines) + "\n")
    return 0


def command_hvector(args: argparse.Namespace) -> int:
    """Print the h-vector of Δ_λ or of a complex file."""
    emit(args, f"{h_vector(read_target(args.target))}\n")
    return 0


def command_member(args: argparse.Namespace) -> int:
    """Decide whether an h-vector belongs to a matroid complex."""
    mode = MembershipMode(args.mode)
    if args.witnesses and mode is MembershipMode.RECURSIVE:
        raise MalformedInputError("--witnesses needs --mode closed")
    hvector = HVector.parse(args.hvector)
    result = is_matroid_hvector(hvector, mode)
    if not result.is_matroid:
        emit(args, "no\n")
    elif args.witnesses:
        witnesses = result.witnesses if result.witnesses is not None else (recursive_witness(hvector),)
        emit(args, "yes: " + ", ".join(map(str, witnesses)) + "\n")
    else:
        emit(args, "yes\n")
    return 0


def command_ideal(args: argparse.Namespace) -> int:
    """Print the Stanley–Reisner ideal."""
    ideal = stanley_reisner(read_target(args.target))
    emit(args, dumps(ideal_to_dict(ideal)) if args.json else format_ideal_text(ideal))
    return 0


def command_witness(args: argparse.Namespace) -> int:
    """Print J_λ with its Hilbert function and socle report."""
    ideal = witness_ideal(Partition.parse(args.partition))
    values = hilbert_function(ideal)
    report = socle_and_purity(ideal)
    if args.json:
        payload = ideal_to_dict(ideal) | {
            "hilbert_function": list(values),
            "socle": [str(monomial) for monomial in report.socle],
            "socle_degrees": list(report.degrees),
            "pure": report.is_pure,
            "level": report.is_level,
        }
        emit(args, dumps(payload))
        return 0
    lines = [
        format_ideal_text(ideal).rstrip("\n"),
        "",
        "hilbert function: (" + ",".join(map(str, values)) + ")",
        "socle degrees: " + ",".join(map(str, report.degrees)),
        f"pure: {yes_no(report.is_pure)}, level: {yes_no(report.is_level)}",
    ]
    emit(args, "\n".join(lines).lstrip("\n") + "\n")
    return 0


def command_enumerate(args: argparse.Namespace) -> int:
    """Exhaustive census of labeled matroid graphs on n vertices."""
    settings = build_settings(workers=args.workers)
    census = enumerate_matroids(args.n, workers=settings.workers, chunk_size=settings.chunk_size)
    if args.json or args.out:
        emit(args, dumps(census_to_dict(census, members=args.labeled)))
        return 0
    lines = []
    for partition, codes in census.classes.items():
        hvector = str(h_vector(code_complex(args.n, codes[0])))
        lines.append(f"{str(partition):<16} {hvector:<12} labeled {len(codes)}")
        if args.labeled:
            for code in codes:
                lines.append("    " + " ".join(f"{a}{b}" for a, b in code_edges(args.n, code)))
    lines.append(
        f"classes: {census.class_total}, distinct h-vectors: {census.distinct_hvector_total}, "
        f"labeled: {census.labeled_total}"
    )
    emit(args, "\n".join(lines) + "\n")
    return 0


def command_count(args: argparse.Namespace) -> int:
    """Class, h-vector and labeled counts from the closed formulas."""
    emit(
        args,
        f"classes: {count_classes(args.n)}, distinct h-vectors: {len(distinct_hvectors(args.n))}, "
        f"labeled: {total_labeled(args.n)}\n",
    )
    return 0


def command_table1(args: argparse.Namespace) -> int:
    """Emit the h₂ shading table."""
    emit(args, TABLE1_EMITTERS[args.format](table1(args.max_n)))
    return 0


def command_table2(args: argparse.Namespace) -> int:
    """Emit the partition table."""
    emit(args, TABLE2_EMITTERS[args.format](table2(args.max_n)))
    return 0


def run_step(index: int, total: int, name: str, action: Callable[[], str], report: Callable[[str], None]) -> None:
    """Run one check, report its status line, and re-raise on failure."""
    try:
        detail = action()
    except CrosscheckError as error:
        report(f"[{index}/{total}] {name:<12} ✗ {error}")
        if error.details:
            report(f"\n{error.details}")
        raise
    report(f"[{index}/{total}] {name:<12} ✓ {detail}")


def command_oracle(args: argparse.Namespace) -> int:
    """Run every cross-check against the exhaustive census."""
    settings = build_settings(workers=args.workers)
    total = len(CROSSCHECKS) + 1
    census = None
    lines: list[str] = []
    report = lines.append if args.out else print

    def census_step() -> str:
        nonlocal census
        census = enumerate_matroids(
            args.n,
            workers=settings.workers,
            chunk_size=settings.chunk_size,
            library_sweep=args.library_sweep,
        )
        return f"{census.scanned} graphs, {census.labeled_total} matroids"

    status = 0
    try:
        run_step(1, total, "census", census_step, report)
        for index, (name, check) in enumerate(CROSSCHECKS, start=2):
            run_step(index, total, name, lambda check=check: check(census), report)
    except CrosscheckError:
        status = 1
    if args.out:
        emit(args, "\n".join(lines) + "\n")
    return status


def build_parser() -> argparse.ArgumentParser:
    """Build CLI parser."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write output to FILE instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="matroid-hvectors", description=__doc__)
    subparsers = parser.add_subparsers(dest="command", required=True)

    construct = subparsers.add_parser("construct", parents=[common], help="emit Δ_λ as JSON")
    construct.add_argument("partition")
    construct.set_defaults(func=command_construct)

    classify = subparsers.add_parser("classify", parents=[common], help="classify a complex JSON file")
    classify.add_argument("complex")
    classify.add_argument("--json", action="store_true")
    classify.set_defaults(func=command_classify)

    hvector = subparsers.add_parser("hvector", parents=[common], help="h-vector of a partition or complex")
    hvector.add_argument("target")
    hvector.set_defaults(func=command_hvector)

    member = subparsers.add_parser("member", parents=[common], help="is this a matroid h-vector?")
    member.add_argument("hvector")
    member.add_argument("--witnesses", action="store_true")
    member.add_argument("--mode", choices=[mode.value for mode in MembershipMode], default=MembershipMode.CLOSED)
    member.set_defaults(func=command_member)

    ideal = subparsers.add_parser("ideal", parents=[common], help="Stanley–Reisner ideal")
    ideal.add_argument("target")
    ideal.add_argument("--json", action="store_true")
    ideal.set_defaults(func=command_ideal)

    witness = subparsers.add_parser("witness", parents=[common], help="pure witness ideal J_λ")
    witness.add_argument("partition")
    witness.add_argument("--json", action="store_true")
    witness.set_defaults(func=command_witness)

    enumerate_ = subparsers.add_parser("enumerate", parents=[common], help="exhaustive census on n vertices")
    enumerate_.add_argument("n", type=int)
    enumerate_.add_argument("--labeled", action="store_true")
    enumerate_.add_argument("--json", action="store_true")
    enumerate_.add_argument("--workers", type=int)
    enumerate_.set_defaults(func=command_enumerate)

    count = subparsers.add_parser("count", parents=[common], help="counts from closed formulas")
    count.add_argument("n", type=int)
    count.set_defaults(func=command_count)

    for name, func in (("table1", command_table1), ("table2", command_table2)):
        table = subparsers.add_parser(name, parents=[common])
        table.add_argument("--max-n", type=int, default=9, help=f"largest n (at most {MAX_TABLE_N})")
        table.add_argument("--format", choices=TABLE_FORMATS, default="text")
        table.set_defaults(func=func)

    oracle = subparsers.add_parser("oracle", parents=[common], help="run the brute-force cross-checks")
    oracle.add_argument("n", type=int)
    oracle.add_argument("--workers", type=int)
    oracle.add_argument(
        "--library-sweep",
        action=argparse.BooleanOptionalAction,
        help=f"also run the library matroid tests on every graph (default on for n <= {LIBRARY_SWEEP_MAX_N})",
    )
    oracle.set_defaults(func=command_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    """Run CLI."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return int(error.code or 0)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except USAGE_ERRORS as error:
        print(f"error: {error}", file=sys.stderr)
        return 2
    except MatroidComplexError as error:
        print(f"error: {error}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
