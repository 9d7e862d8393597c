"""Command-line interface: output formats, exit codes, fan-out."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from stringlinks import gassner, matrix_from_json, parse_morse
from stringlinks.cli import run

from conftest import CORPUS_DIR

HOPF = str(CORPUS_DIR / "hopf.sl")
FIG8 = str(CORPUS_DIR / "fig8.sl")
TRIVIAL = str(CORPUS_DIR / "trivial_2.sl")


def invoke(argv, capsys):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExitCodes:
    def test_success(self, capsys):
        code, out, err = invoke(["gassner", HOPF], capsys)
        assert code == 0
        assert "t2" in out

    def test_missing_file(self, capsys):
        code, out, err = invoke(["gassner", "/no/such/file.sl"], capsys)
        assert code == 1
        assert "error" in err

    def test_bad_subcommand_exits_one(self):
        with pytest.raises(SystemExit) as exc:
            run(["frobnicate", HOPF])
        assert exc.value.code == 1

    def test_missing_argument_exits_one(self):
        with pytest.raises(SystemExit) as exc:
            run(["gassner"])
        assert exc.value.code == 1

    def test_parse_error_in_file(self, tmp_path, capsys):
        bad = tmp_path / "bad.sl"
        bad.write_text("braid 2: s9\n")
        code, out, err = invoke(["gassner", str(bad)], capsys)
        assert code == 1
        assert "out of range" in err

    def test_invariant_violation_exits_two(self, capsys):
        code, out, err = invoke(
            ["spectrum", FIG8, "--angles", "0.5"], capsys
        )
        assert code == 2
        assert "violation" in err


class TestJson:
    def test_matrix_round_trip(self, capsys):
        code, out, err = invoke(["gassner", HOPF, "--json"], capsys)
        assert code == 0
        data = json.loads(out)
        word = parse_morse(Path(HOPF).read_text())
        assert matrix_from_json(data) == gassner(word).entries

    def test_report_json_fields(self, capsys):
        code, out, err = invoke(["report", HOPF, "--json"], capsys)
        data = json.loads(out)
        assert data["pure"] is True
        assert data["one_factorization_ok"] is True

    def test_verify_json(self, capsys):
        code, out, err = invoke(["verify", HOPF, "--json"], capsys)
        assert code == 0
        data = json.loads(out)
        assert data["ok"] is True
        assert all(c["ok"] in (True, None) for c in data["checks"])


class TestSubcommands:
    def test_torsion_of_braid_is_unit(self, capsys):
        code, out, err = invoke(["torsion", HOPF], capsys)
        assert code == 0
        assert out.strip() == "1"

    def test_walkcheck(self, capsys):
        code, out, err = invoke(["walkcheck", HOPF], capsys)
        assert code == 0
        assert "agree" in out

    def test_twist_self_verifies(self, capsys):
        code, out, err = invoke(["twist", HOPF, "--strand", "2"], capsys)
        assert code == 0

    def test_twist_bad_strand_is_usage_error(self, capsys):
        # strand 1 of s1 is not returned to its slot: precondition fails
        code, out, err = invoke(
            ["twist", str(CORPUS_DIR / "s1.sl"), "--strand", "1"], capsys
        )
        assert code == 1

    def test_taylor_default_order(self, capsys):
        code, out, err = invoke(["taylor", HOPF, "--json"], capsys)
        data = json.loads(out)
        assert data["bound"] == 2
        assert data["vars"] == ["z1", "z2"]

    def test_altsum_requires_flips(self, capsys):
        code, out, err = invoke(["altsum", HOPF], capsys)
        assert code == 1

    def test_altsum_reports_vanishing(self, capsys):
        code, out, err = invoke(["altsum", HOPF, "--flips", "1"], capsys)
        assert code == 0
        assert "min total degree" in out

    def test_alexander_with_braid(self, capsys):
        code, out, err = invoke(
            ["alexander", HOPF, "--braid-b", "s1", "--json"], capsys
        )
        assert code == 0
        data = json.loads(out)
        assert data["knot_closure"]["ok"] is True
        assert data["knot_closure"]["closure"] == "1 - t"

    def test_spectrum_default_angles(self, capsys):
        code, out, err = invoke(["spectrum", HOPF], capsys)
        assert code == 0
        assert "lambda" in out

    def test_verify_skips_on_non_pure(self, capsys):
        code, out, err = invoke(["verify", FIG8], capsys)
        assert code == 0
        assert "skip" in out


class TestMultiFile:
    def test_headers_and_aggregate_status(self, capsys):
        code, out, err = invoke(["torsion", HOPF, TRIVIAL], capsys)
        assert code == 0
        assert "== %s ==" % HOPF in out

    def test_parallel_jobs(self, capsys):
        code, out, err = invoke(
            ["walkcheck", HOPF, TRIVIAL, FIG8, "--jobs", "2"], capsys
        )
        assert code == 0
        assert out.count("agree") == 3

    def test_worst_exit_code_wins(self, capsys):
        code, out, err = invoke(
            ["spectrum", HOPF, FIG8, "--angles", "0.5"], capsys
        )
        assert code == 2


def test_console_script_installed():
    proc = subprocess.run(
        [sys.executable, "-m", "stringlinks.cli", "gassner", HOPF],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "t2" in proc.stdout
