"""CLI tests: every command is a thin adapter over the library, with the
documented exit codes and formats."""

import json
from fractions import Fraction

import pytest

import nhc.cli as cli
from nhc import cm, families
from nhc.heights import CALIBRATED


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCount:
    def test_cm_rep(self, capsys):
        code, out, _ = run(capsys, "count", "--family", "cm-rep", "--height", "cal", "--bound", "1e3")
        assert code == 0
        assert out.splitlines()[0] == "24"

    def test_all_uncalibrated(self, capsys):
        code, out, _ = run(capsys, "count", "--family", "all", "--height", "ncal", "--bound", "1")
        assert (code, out.strip()) == (0, "8")

    def test_fixed_j(self, capsys):
        code, out, _ = run(
            capsys, "count", "--family", "j", "--j=-3375", "--height", "cal", "--bound", "259308"
        )
        assert (code, out.strip()) == (0, "2")

    def test_asymptotic_lines(self, capsys):
        code, out, _ = run(
            capsys, "count", "--family", "cm-rep", "--height", "cal", "--bound", "1e5",
            "--asymptotic",
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "180"
        assert lines[1].startswith("main term: 181.5")
        assert lines[2] == "relative error: 0.86%"

    def test_scientific_bound_is_exact(self, capsys):
        code, out, _ = run(capsys, "count", "--family", "j", "--j", "0", "--bound", "1e30")
        assert code == 0
        assert int(out.strip()) == families.count_curves_with_j(0, CALIBRATED, 10**30)

    def test_rational_bound(self, capsys):
        code, out, _ = run(capsys, "count", "--family", "all", "--height", "ncal", "--bound", "27/4")
        assert code == 0
        assert int(out.strip()) == families.count_curves(cli.parse_height_spec("ncal"), Fraction(27, 4))

    def test_missing_j_is_usage_error(self, capsys):
        code, _, err = run(capsys, "count", "--family", "j", "--bound", "100")
        assert code == 2
        assert "--j" in err

    def test_malformed_bound_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["count", "--family", "all", "--bound", "banana"])
        assert exc.value.code == 2

    def test_custom_height_spec(self, capsys):
        code, out, _ = run(
            capsys, "count", "--family", "all", "--height", "alpha/4:1,beta/27:1",
            "--bound", "7000",
        )
        assert (code, out.strip()) == (0, "820")


class TestParametrize:
    def test_cm_alias_six_curves(self, capsys):
        code, out, _ = run(capsys, "parametrize", "--j", "cm:-163", "--height", "cal", "--bound", "1e25")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 7  # header + six curves
        ms = [int(line.split()[0]) for line in lines[1:]]
        assert ms == [-3, -2, -1, 1, 2, 3]

    def test_j0_convention(self, capsys):
        code, out, _ = run(capsys, "parametrize", "--j", "0", "--height", "cal", "--bound", "27")
        rows = [line.split() for line in out.splitlines()[1:]]
        assert code == 0
        assert [(r[1], r[2]) for r in rows] == [("0", "-1"), ("0", "1")]

    def test_below_minimal_height_is_empty(self, capsys):
        code, out, _ = run(capsys, "parametrize", "--j=-3375", "--height", "cal", "--bound", "259307")
        assert code == 0
        assert len(out.splitlines()) == 1  # header only

    def test_squarefree_filter(self, capsys):
        code, out, _ = run(
            capsys, "parametrize", "--j=-3375", "--height", "cal", "--bound", "1e9",
            "--squarefree-only",
        )
        assert code == 0
        ms = [int(line.split()[0]) for line in out.splitlines()[1:]]
        assert 4 not in ms and -4 not in ms and 1 in ms

    def test_squarefree_flag_refused_for_special_j(self, capsys):
        code, _, err = run(
            capsys, "parametrize", "--j", "0", "--bound", "100", "--squarefree-only"
        )
        assert code == 3
        assert "6-free" in err

    def test_json_big_integers_are_strings(self, capsys):
        code, out, _ = run(
            capsys, "parametrize", "--j", "cm:-163", "--bound", "1e25", "--format", "json"
        )
        assert code == 0
        rows = json.loads(out)
        assert len(rows) == 6
        row = next(r for r in rows if r["m"] == 1)
        assert row["A"] == "-8697680"
        assert row["B"] == "-9873093538"
        assert row["height"] == "2631905352272628650988"  # beyond 53-bit floats

    def test_csv_format(self, capsys):
        code, out, _ = run(
            capsys, "parametrize", "--j", "0", "--bound", "27", "--format", "csv"
        )
        assert code == 0
        assert out.splitlines()[0] == "m,A,B,height"
        assert out.splitlines()[1] == "-1,0,-1,27"


class TestTwist:
    def test_examples(self, capsys):
        assert run(capsys, "twist", "--", "-240", "1408")[1].strip() == "2 -15 22"
        assert run(capsys, "twist", "--", "-15", "22")[1].strip() == "1 -15 22"
        assert run(capsys, "twist", "0", "64")[1].strip() == "2 0 1"

    def test_singular_exits_4(self, capsys):
        code, _, err = run(capsys, "twist", "--", "-3", "2")
        assert code == 4
        assert "singular" in err


class TestTables:
    def test_cm_counts_values(self, capsys):
        code, out, _ = run(capsys, "tables", "--name", "cm-counts", "--height", "cal",
                           "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 15  # header + 13 orders + totals
        top = lines[1].split(",")
        assert top[:3] == ["-3", "1", "0"]
        assert top[3:] == ["38490", "12171612", "3849001794", "1217161238900", "384900179459750"]
        totals = lines[-1].split(",")
        assert totals[0] == "total"
        table = cm.cm_count_table(CALIBRATED)
        assert [int(v) for v in totals[3:]] == list(table.totals)

    def test_cm_counts_custom_bounds(self, capsys):
        code, out, _ = run(capsys, "tables", "--name", "cm-counts", "--bounds", "1e3,1e6",
                           "--format", "csv")
        assert code == 0
        assert out.splitlines()[0] == "d_K,f,j,X=1000,X=1000000"

    def test_coefficients_match_reference(self, capsys):
        code, out, _ = run(capsys, "tables", "--name", "coefficients", "--format", "csv")
        assert code == 0
        rows = {tuple(line.split(",")[:2]): line.split(",")[3] for line in out.splitlines()[1:]}
        assert rows[("-3", "2")] == "0.2491681566"
        assert rows[("-163", "1")] == "0.0003272174502"
        assert len(rows) == 11

    def test_cm_minimal(self, capsys):
        code, out, _ = run(capsys, "tables", "--name", "cm-minimal", "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 14
        row = next(l for l in lines if l.startswith("-7,1"))
        assert row == "-7,1,-3375,-35,98,259308"

    def test_relative_error(self, capsys):
        code, out, _ = run(capsys, "tables", "--name", "relative-error", "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "X,exact,approximation,relative_error"
        assert "1000,24,27.26," in lines[3]
        assert lines[-1] == "27000000000,65732,65722.95,0.014%"

    def test_output_file(self, tmp_path, capsys):
        target = tmp_path / "coeffs.json"
        code, out, _ = run(capsys, "tables", "--name", "coefficients", "--format", "json",
                           "--output", str(target))
        assert code == 0 and out == ""
        rows = json.loads(target.read_text())
        assert len(rows) == 11
        assert rows[0]["d_K"] == -3
        # 18-digit j-invariants must survive as exact strings
        assert rows[-1]["j"] == "-262537412640768000"

    def test_unknown_table_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            cli.main(["tables", "--name", "bogus"])
        assert exc.value.code == 2


class TestVerify:
    def test_small_pass(self, capsys):
        code, out, _ = run(capsys, "verify", "--height", "cal", "--bound", "1e4",
                           "--j", "0,1728,-3375", "--workers", "1")
        assert code == 0
        assert "PASS  all formulas agree" in out
        assert "FAIL" not in out

    def test_cm_keyword_tracks_thirteen(self, capsys):
        code, out, _ = run(capsys, "verify", "--height", "ncal", "--bound", "100",
                           "--j", "cm", "--workers", "1")
        assert code == 0
        assert out.count("curves j=") == 13

    def test_budget_refusal_exits_6(self, capsys):
        code, _, err = run(capsys, "verify", "--height", "cal", "--bound", "1e12",
                           "--workers", "1")
        assert code == 6
        assert "lattice points" in err

    def test_mismatch_exits_5(self, capsys, monkeypatch):
        monkeypatch.setattr(families, "count_curves", lambda spec, x: 10**9)
        code, out, err = run(capsys, "verify", "--height", "cal", "--bound", "100",
                             "--workers", "1")
        assert code == 5
        assert "mismatch in family: curves" in err
        assert "FAIL" in out
