"""Interchange formats: complex and ideal JSON, table emitters."""

from __future__ import annotations

import csv
import io
import json
from typing import Any

import voluptuous as vol

from .classification import PartitionRow, TableRow
from .complex import SimplicialComplex, build
from .const import EMPTY_CELL, MAX_VERTICES, SHADED_MARK
from .exceptions import MalformedInputError
from .ideals import Monomial, MonomialIdeal, monomial_ideal

COMPLEX_SCHEMA = vol.Schema(
    {
        vol.Required("n"): vol.All(int, vol.Range(min=1, max=MAX_VERTICES)),
        vol.Required("facets"): vol.All([vol.All([int], vol.Length(min=1))], vol.Length(min=1)),
    }
)

IDEAL_SCHEMA = vol.Schema(
    {
        vol.Required("vars"): vol.All(int, vol.Range(min=0)),
        vol.Required("gens"): [[vol.All(int, vol.Range(min=0))]],
    }
)


def dumps(payload: Any) -> str:
    """Deterministic JSON: sorted keys, 2-space indent, trailing newline."""
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _validate(schema: vol.Schema, payload: Any, what: str) -> dict:
    """Return the validated payload or raise MalformedInputError."""
    try:
        return schema(payload)
    except vol.Invalid as error:
        raise MalformedInputError(f"invalid {what}: {error}") from error


def complex_to_dict(delta: SimplicialComplex) -> dict:
    """Return the complex JSON payload."""
    return {"n": delta.n, "facets": delta.facet_lists()}


def complex_from_dict(payload: Any) -> SimplicialComplex:
    """Validate a complex payload and build it."""
    data = _validate(COMPLEX_SCHEMA, payload, "complex")
    return build(data["n"], data["facets"])


def ideal_to_dict(ideal: MonomialIdeal) -> dict:
    """Return the ideal JSON payload, one exponent vector per generator."""
    return {"vars": ideal.nvars, "gens": [list(generator.exponents) for generator in ideal.generators]}


def ideal_from_dict(payload: Any) -> MonomialIdeal:
    """Validate an ideal payload and keep its minimal generators."""
    data = _validate(IDEAL_SCHEMA, payload, "ideal")
    return monomial_ideal(data["vars"], (Monomial(tuple(gen)) for gen in data["gens"]))


def load_json(text: str, what: str) -> Any:
    """Parse JSON text; what names the source in error messages."""
    try:
        return json.loads(text)
    except json.JSONDecodeError as error:
        raise MalformedInputError(f"{what} is not valid JSON: {error}") from error


# --- Table 1 ---


def table1_text(rows: tuple[TableRow, ...]) -> str:
    """Rows indexed by n; h₂ runs from C(n-1,2) down to 0; matroid entries carry "*"."""
    width = max(len(str(h2)) for row in rows for h2, _ in row.entries) + len(SHADED_MARK)
    lines = []
    for row in rows:
        cells = (f"{h2}{SHADED_MARK if shaded else ''}".rjust(width) for h2, shaded in row.entries)
        lines.append(f"{row.n:>3} | " + " ".join(cells))
    return "\n".join(lines) + "\n"


def table1_csv(rows: tuple[TableRow, ...]) -> str:
    """One line per (n, h₂) with a 0/1 matroid flag."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["n", "h2", "matroid"])
    for row in rows:
        for h2, shaded in row.entries:
            writer.writerow([row.n, h2, int(shaded)])
    return buffer.getvalue()


def table1_json(rows: tuple[TableRow, ...]) -> str:
    return dumps(
        {
            "rows": [
                {"n": row.n, "entries": [{"h2": h2, "matroid": shaded} for h2, shaded in row.entries]}
                for row in rows
            ]
        }
    )


# --- Table 2 ---


def table2_text(rows: tuple[PartitionRow, ...]) -> str:
    """One block per n; each h₂ lists its partitions in compact notation."""
    lines = []
    for row in rows:
        lines.append(f"n={row.n}")
        width = len(str(row.cells[0].h2)) if row.cells else 1
        for cell in row.cells:
            listed = " | ".join(partition.compact() for partition in cell.partitions) or EMPTY_CELL
            suffix = f"  [{cell.labeled}]" if cell.partitions else ""
            lines.append(f"  {cell.h2:>{width}}  {listed}{suffix}")
    return "\n".join(lines) + "\n"


def table2_csv(rows: tuple[PartitionRow, ...]) -> str:
    """One line per (n, h₂); partitions joined by ";"."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["n", "h2", "partitions", "labeled"])
    for row in rows:
        for cell in row.cells:
            writer.writerow([row.n, cell.h2, ";".join(map(str, cell.partitions)), cell.labeled])
    return buffer.getvalue()


def table2_json(rows: tuple[PartitionRow, ...]) -> str:
    return dumps(
        {
            "rows": [
                {
                    "n": row.n,
                    "cells": [
                        {"h2": cell.h2, "partitions": [str(p) for p in cell.partitions], "labeled": cell.labeled}
                        for cell in row.cells
                    ],
                }
                for row in rows
            ]
        }
    )


TABLE1_EMITTERS = {"text": table1_text, "csv": table1_csv, "json": table1_json}
TABLE2_EMITTERS = {"text": table2_text, "csv": table2_csv, "json": table2_json}
