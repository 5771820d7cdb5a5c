import io
import json
import subprocess
import sys

import pytest

from tanglekh.cli import EXIT_CAP, EXIT_INPUT, EXIT_OK, EXIT_VERIFY, main
from tanglekh.tables import GoldenEntry, fixture_path


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_compute_trefoil():
    code, text = run("compute", fixture_path("31_mmm.tangle"))
    assert code == EXIT_OK
    assert text.strip().splitlines()[-1] == "x^-3y^-9 + x^-2y^-5 + y^-3 + y^-1"


def test_compute_loop_json_is_stable():
    path = fixture_path("00_0.tangle")
    code, a = run("compute", path, "--format", "json")
    _, b = run("compute", path, "--format", "json")
    assert code == EXIT_OK and a == b
    payload = json.loads(a)
    assert payload["poincare"] == "y^-1 + y"
    assert payload["betti"] == [[0, -1, 1], [0, 1, 1]]


def test_compute_gf2():
    code, text = run("compute", fixture_path("31_mmm.tangle"), "--field", "GF2")
    assert code == EXIT_OK and "x^-3y^-7" in text


def test_malformed_input(tmp_path, capsys):
    bad = tmp_path / "bad.tangle"
    bad.write_text("X+ a b c\n")
    code, _ = run("compute", str(bad))
    assert code == EXIT_INPUT
    assert "line 1, column 9" in capsys.readouterr().err
    assert run("compute", str(tmp_path / "missing.tangle"))[0] == EXIT_INPUT


def test_crossing_cap():
    code, _ = run("compute", fixture_path("31_mmm.tangle"), "--max-crossings", "2")
    assert code == EXIT_CAP


def test_reduce_trace():
    code, text = run("reduce", "--trace", fixture_path("24_pp.tangle"))
    lines = text.strip().splitlines()
    assert code == EXIT_OK
    assert lines[0].startswith("remove arc ") and "[right] -> factor 1 + xy" in lines[0]
    assert "[free] -> factor y^-1" in lines[2]
    assert lines[-1] == "y^-1 + 2x + x^2y"
    assert run("reduce", fixture_path("23_pp.tangle"))[0] == EXIT_INPUT


def test_verify_tables():
    code, text = run("verify-tables", "--table", "1")
    assert code == EXIT_OK
    assert text.count("FLAG") == 3 and "FAIL" not in text
    code, text = run("verify-tables", "--table", "2")
    assert code == EXIT_OK and "28/28 rows ok" in text


def test_verify_reports_corrupted_fixture(monkeypatch):
    import tanglekh.cli as cli

    bad = GoldenEntry(1, "2_3", "+,+", "1+xy+x^{2}y^{5}")
    monkeypatch.setattr(cli, "golden_entries", lambda table: [bad])
    code, text = run("verify-tables")
    assert code == EXIT_VERIFY
    assert "FAIL  2_3 {+,+}: expected 1 + xy + x^2y^5, got 1 + xy + x^2y^3" in text


def test_euler_check():
    code, text = run("euler-check", fixture_path("31_mmm.tangle"), fixture_path("11_p.tangle"),
                     fixture_path("00_0.tangle"))
    assert code == EXIT_OK and text.count("PASS") == 3


def test_expand():
    code, text = run("expand", "4", "0", "3")
    assert code == EXIT_OK
    assert text.splitlines() == ["x^-3y^-10 + 3x^-2y^-9 + 3x^-1y^-8 + y^-7",
                                 "(-3,-10) + 3(-2,-9) + 3(-1,-8) + (0,-7)"]
    assert run("expand", "2", "1", "1")[0] == EXIT_INPUT


def test_parallel_batch_matches_serial(monkeypatch):
    serial = run("verify-tables", "--table", "2")
    monkeypatch.setenv("TANGLEKH_WORKERS", "3")
    assert run("verify-tables", "--table", "2") == serial


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "tanglekh.cli", "expand", "1", "0", "0"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.splitlines()[0] == "y^-1"
