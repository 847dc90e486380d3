"""Tests for the matroid-hvectors command line."""

import io
import json
from pathlib import Path

import pytest

from matroid_hvectors import cli
from matroid_hvectors.const import ENV_WORKERS
from matroid_hvectors.exceptions import CrosscheckError
from matroid_hvectors.formats import complex_from_dict
from matroid_hvectors.matroid import extract_partition, is_matroid
from matroid_hvectors.partition import Partition


def write_json(path: Path, payload) -> str:
    path.write_text(json.dumps(payload))
    return str(path)


# --- Construction and classification ---


def test_construct_emits_complex_json(capsys: pytest.CaptureFixture):
    """2+2 is the four-cycle."""
    assert cli.main(["construct", "2+2"]) == 0

    delta = complex_from_dict(json.loads(capsys.readouterr().out))
    assert delta.n == 4
    assert len(delta.facets) == 4
    assert is_matroid(delta)
    assert extract_partition(delta) == Partition.of(2, 2)


def test_classify_text(tmp_path: Path, capsys: pytest.CaptureFixture):
    path = write_json(tmp_path / "k3.json", {"n": 3, "facets": [[1, 2], [1, 3], [2, 3]]})

    assert cli.main(["classify", path]) == 0
    assert capsys.readouterr().out == "matroid: yes\npartition: 1+1+1\nh-vector: (1,1,1)\nf-vector: (1,3,3)\n"


def test_classify_json_non_matroid(tmp_path: Path, capsys: pytest.CaptureFixture):
    """The 4-path has no partition."""
    path = write_json(tmp_path / "path.json", {"n": 4, "facets": [[1, 2], [2, 3], [3, 4]]})

    assert cli.main(["classify", path, "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == {
        "fvector": [1, 4, 3],
        "hvector": [1, 2, 0],
        "matroid": False,
        "partition": None,
    }


def test_classify_reads_stdin(monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture):
    monkeypatch.setattr("sys.stdin", io.StringIO('{"n": 2, "facets": [[1], [2]]}'))

    assert cli.main(["classify", "-"]) == 0
    assert "partition: 2" in capsys.readouterr().out


def test_hvector_of_partition_and_file(tmp_path: Path, capsys: pytest.CaptureFixture):
    assert cli.main(["hvector", "3+3"]) == 0
    assert capsys.readouterr().out == "(1,4,4)\n"

    path = write_json(tmp_path / "cycle.json", {"n": 4, "facets": [[1, 2], [2, 3], [3, 4], [1, 4]]})
    assert cli.main(["hvector", path]) == 0
    assert capsys.readouterr().out == "(1,2,1)\n"


# --- Membership and counts ---


def test_member_witnesses(capsys: pytest.CaptureFixture):
    """(1,4,4) is realized by two partitions."""
    assert cli.main(["member", "1,4,4", "--witnesses"]) == 0
    assert capsys.readouterr().out == "yes: 3+3, 4+1+1\n"


def test_member_rejection_is_not_an_error(capsys: pytest.CaptureFixture):
    assert cli.main(["member", "1,4,5"]) == 0
    assert capsys.readouterr().out == "no\n"


def test_member_recursive_mode(capsys: pytest.CaptureFixture):
    assert cli.main(["member", "(1,4,7)", "--mode", "recursive"]) == 0
    assert capsys.readouterr().out == "yes\n"


def test_member_witnesses_need_closed_mode(capsys: pytest.CaptureFixture):
    assert cli.main(["member", "1,4,4", "--witnesses", "--mode", "recursive"]) == 2
    assert capsys.readouterr().err == "error: --witnesses needs --mode closed\n"


def test_member_past_partition_limit(capsys: pytest.CaptureFixture):
    """h₁ = 60 has too many partitions to scan; the recursive test answers instead."""
    assert cli.main(["member", "1,60,3"]) == 0
    assert capsys.readouterr().out == "no\n"

    assert cli.main(["member", "1,60,59", "--witnesses"]) == 0
    assert capsys.readouterr().out == "yes: 60+2\n"


def test_count(capsys: pytest.CaptureFixture):
    assert cli.main(["count", "7"]) == 0
    assert capsys.readouterr().out == "classes: 14, distinct h-vectors: 12, labeled: 877\n"


def test_out_writes_file(tmp_path: Path, capsys: pytest.CaptureFixture):
    out = tmp_path / "count.txt"

    assert cli.main(["count", "6", "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    assert out.read_text() == "classes: 10, distinct h-vectors: 8, labeled: 203\n"


# --- Ideals ---


def test_ideal_text_and_json(capsys: pytest.CaptureFixture):
    """The path 1-2-3 misses only the edge 13."""
    assert cli.main(["ideal", "2+1"]) == 0
    assert capsys.readouterr().out == "x1*x3\n"

    assert cli.main(["ideal", "2+1", "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == {"gens": [[1, 0, 1]], "vars": 3}


def test_witness_report(capsys: pytest.CaptureFixture):
    assert cli.main(["witness", "3+1+1"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("x1^2\nx1*x2\n")
    assert out.endswith("\nhilbert function: (1,3,3)\nsocle degrees: 2\npure: yes, level: yes\n")


def test_witness_json(capsys: pytest.CaptureFixture):
    assert cli.main(["witness", "3+1+1", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["vars"] == 3
    assert payload["hilbert_function"] == [1, 3, 3]
    assert payload["socle_degrees"] == [2]
    assert len(payload["socle"]) == 3
    assert payload["pure"] is payload["level"] is True


# --- Census, tables and oracle ---


def test_enumerate_text(capsys: pytest.CaptureFixture):
    assert cli.main(["enumerate", "3", "--labeled"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == f"{'3':<16} {'(1,2)':<12} labeled 1"
    assert lines[2] == f"{'2+1':<16} {'(1,1,0)':<12} labeled 3"
    assert lines[3:6] == ["    12 13", "    12 23", "    13 23"]
    assert lines[-1] == "classes: 2, distinct h-vectors: 2, labeled: 5"


def test_enumerate_out_writes_json(tmp_path: Path, capsys: pytest.CaptureFixture):
    out = tmp_path / "census.json"

    assert cli.main(["enumerate", "4", "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    payload = json.loads(out.read_text())
    assert payload["labeled_total"] == 15
    assert "members" not in payload["classes"][0]


def test_table1_formats(capsys: pytest.CaptureFixture):
    assert cli.main(["table1", "--max-n", "3"]) == 0
    assert capsys.readouterr().out == "  2 | 0*\n  3 | 1* 0*\n"

    assert cli.main(["table1", "--max-n", "3", "--format", "csv"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "n,h2,matroid"


def test_table2_json(capsys: pytest.CaptureFixture):
    assert cli.main(["table2", "--max-n", "6", "--format", "json"]) == 0
    rows = json.loads(capsys.readouterr().out)["rows"]
    assert [row["n"] for row in rows] == [2, 3, 4, 5, 6]


def test_oracle_passes(capsys: pytest.CaptureFixture):
    assert cli.main(["oracle", "4"]) == 0
    lines = capsys.readouterr().out.splitlines()
    total = len(cli.CROSSCHECKS) + 1
    assert len(lines) == total
    assert lines[0] == f"[1/{total}] census       ✓ 64 graphs, 15 matroids"
    assert all("✓" in line for line in lines)


def test_oracle_failure_exits_one(monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture):
    """A failing check prints its details and stops the run."""

    def broken(census):
        raise CrosscheckError("counts drifted", details="2+2: 2 != 3")

    monkeypatch.setattr(cli, "CROSSCHECKS", (("broken", broken), ("never", lambda census: "unreached")))

    assert cli.main(["oracle", "3"]) == 1
    out = capsys.readouterr().out
    assert "[2/3] broken       ✗ counts drifted" in out
    assert "2+2: 2 != 3" in out
    assert "never" not in out


def test_oracle_out_writes_file(tmp_path: Path, capsys: pytest.CaptureFixture):
    out = tmp_path / "oracle.txt"

    assert cli.main(["oracle", "4", "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    lines = out.read_text().splitlines()
    assert len(lines) == len(cli.CROSSCHECKS) + 1
    assert "library" in next(line for line in lines if "tests agree" in line)


def test_oracle_failure_still_writes_out(monkeypatch: pytest.MonkeyPatch, tmp_path: Path):
    def broken(census):
        raise CrosscheckError("counts drifted", details="2+2: 2 != 3")

    monkeypatch.setattr(cli, "CROSSCHECKS", (("broken", broken),))
    out = tmp_path / "oracle.txt"

    assert cli.main(["oracle", "3", "--no-library-sweep", "--out", str(out)]) == 1
    text = out.read_text()
    assert "[2/2] broken       ✗ counts drifted" in text
    assert text.endswith("2+2: 2 != 3\n")


def test_unwritable_out_exits_one(tmp_path: Path, capsys: pytest.CaptureFixture):
    """--out naming a directory is reported, not raised."""
    assert cli.main(["count", "4", "--out", str(tmp_path)]) == 1
    err = capsys.readouterr().err
    assert err.startswith(f"error: cannot write {tmp_path}:")


# --- Exit codes ---


@pytest.mark.parametrize(
    "argv",
    [
        ["construct", "1+3"],
        ["member", "1,x"],
        ["member", "2,1,1"],
        ["witness", "[3,"],
        ["classify", "missing.json"],
        [],
        ["table1", "--format", "xml"],
    ],
)
def test_usage_errors_exit_two(argv: list[str], tmp_path: Path, monkeypatch: pytest.MonkeyPatch):
    monkeypatch.chdir(tmp_path)

    assert cli.main(argv) == 2


def test_malformed_json_exits_two(tmp_path: Path, capsys: pytest.CaptureFixture):
    path = tmp_path / "bad.json"
    path.write_text("{")

    assert cli.main(["classify", str(path)]) == 2
    assert "not valid JSON" in capsys.readouterr().err


def test_invalid_settings_exit_two(monkeypatch: pytest.MonkeyPatch):
    monkeypatch.setenv(ENV_WORKERS, "0")

    assert cli.main(["enumerate", "3"]) == 2


def test_ghost_vertex_exits_one(tmp_path: Path, capsys: pytest.CaptureFixture):
    path = write_json(tmp_path / "ghost.json", {"n": 3, "facets": [[1, 2]]})

    assert cli.main(["classify", path]) == 1
    assert capsys.readouterr().err == "error: vertex 3 appears in no facet\n"


@pytest.mark.parametrize("argv", [["enumerate", "8"], ["table1", "--max-n", "100"]])
def test_too_large_exits_one(argv: list[str]):
    assert cli.main(argv) == 1
