import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from altorder.cli import EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, run

GOLDEN = Path(__file__).parent / "golden"


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_zeta_example():
    assert call("zeta", "--onc", "7", "--q", "2") == (EXIT_OK, "30\n")
    assert call("moebius", "--onc", "7") == (EXIT_OK, "-22\n")
    code, text = call("zeta", "--perm", "(1 2 3 4 5)", "--n", "5")
    assert (code, text) == (EXIT_OK, "0;-3/2;5/2\n")


def test_tables_example():
    code, text = call("tables", "--table", "2", "--max-n", "5")
    assert code == EXIT_OK
    assert text.splitlines()[-1] == "5,1;55;308;308;55;1"


def test_hurwitz_example():
    code, text = call("hurwitz", "--perm", "(1 2)(3 4)", "--n", "4")
    assert code == EXIT_OK and "orbits: 2" in text.splitlines()
    code, text = call("hurwitz", "--perm", "(1 2)(3 4)", "--n", "4", "--format", "json")
    assert json.loads(text)["orbit_count"] == 2


def test_interval_and_onc():
    code, text = call("interval", "--perm", "(1 2 3 4 5 6 7)", "--n", "7")
    assert code == EXIT_OK and "elements: 30" in text
    code, text = call("onc", "--n", "5", "--format", "dot")
    assert code == EXIT_OK and text.startswith("digraph")
    code, text = call("onc", "--n", "4")
    assert code == EXIT_OK and len(text.splitlines()) == 3


def test_bijection_and_mdiv():
    code, text = call("bijection", "phi", "--perm", "(1 2 3 4 5 6)", "--n", "6")
    assert code == EXIT_OK and "white degrees: [6]" in text
    code, text = call("mdiv", "--n", "2", "--m", "2", "--report", "json")
    assert code == EXIT_OK and json.loads(text)["elements"] == 18
    code, text = call("mdiv", "--conjectures", "--max-n", "2", "--max-m", "3", "--format", "csv")
    assert code == EXIT_OK and len(text.splitlines()) == 7


@pytest.mark.parametrize(
    "argv",
    [
        ("zeta", "--onc", "6"),
        ("zeta",),
        ("hurwitz", "--perm", "(1 2", "--n", "4"),
        ("mdiv", "--n", "2"),
        ("tables", "--table", "3", "--max-pq", "6"),
        ("--threads", "0", "onc", "--n", "5"),
        ("interval", "--perm", "(1 2)", "--n", "4"),
        ("--max-elements", "10", "mdiv", "--n", "3", "--m", "3"),
    ],
)
def test_usage_errors(argv, capsys):
    assert call(*argv)[0] == EXIT_USAGE
    assert capsys.readouterr().err


@pytest.mark.parametrize("argv", [("bogus",), ("tables", "--table", "4"), ("onc",)])
def test_parser_errors_exit_1(argv):
    with pytest.raises(SystemExit) as exc:
        call(*argv)
    assert exc.value.code == EXIT_USAGE


def test_verify_exit_codes(monkeypatch):
    code, text = call("verify", "--suite", "hurwitz")
    assert code == EXIT_OK and "checks passed" in text
    from altorder import verify

    monkeypatch.setitem(verify.SUITES, "hurwitz", lambda: [verify.Check("forced", False, "", True)])
    assert call("verify", "--suite", "hurwitz")[0] == EXIT_MISMATCH


@pytest.mark.parametrize("table", [1, 2, 3])
def test_golden_tables(table):
    code, text = call("tables", "--table", str(table))
    assert code == EXIT_OK
    assert text == (GOLDEN / f"table{table}.csv").read_text()


@pytest.mark.parametrize(
    "argv",
    [
        ("tables", "--table", "3", "--max-pq", "4"),
        ("hurwitz", "--perm", "(1 2)(3 4)(5 6 7)", "--n", "7", "--format", "json"),
        ("onc", "--n", "7", "--format", "json"),
        ("verify", "--suite", "zeta"),
    ],
)
def test_output_is_deterministic(argv):
    a = call(*argv)
    b = call("--threads", "4", *argv)
    assert a == b


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "altorder", "zeta", "--onc", "5", "--q", "3"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "18\n"
