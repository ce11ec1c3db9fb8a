import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from hadamard_cauchy.cli import main
from hadamard_cauchy.formulas import TwistedRational

F = Fraction


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


class TestScott:
    def test_values(self, capsys):
        assert run(capsys, "scott", "3")[:2] == (0, "-3/8\n")
        assert run(capsys, "scott", "4")[:2] == (0, "0\n")

    def test_table(self, capsys):
        code, rec = run_json(capsys, "scott", "--table", "9")
        assert code == 0
        rows = {r["n"]: r for r in rec["values"]}
        assert [rows[n]["value"] for n in (3, 5, 7, 9)] == ["-3/8", "45/32", "-1575/128", "99225/512"]
        assert all(rows[n]["minc"] == rows[n]["value"] for n in rows)
        assert rows[3]["scott_historical"] == "3/8"
        assert "historical" in rec["note"]

    def test_invalid(self, capsys):
        assert run(capsys, "scott", "3", "--a", "0")[0] == 2
        assert run(capsys, "scott")[0] == 2


class TestClosedForms:
    def test_permanent(self, capsys):
        code, rec = run_json(capsys, "permanent", "--n", "2", "--a", "-1", "--b", "-4")
        assert code == 0
        assert rec["value"] == "-10/9"
        assert rec["schema"] == "hadamard-cauchy/1"
        assert rec["params"] == {"n": 2, "a": "-1", "b": "-4"}

    def test_permanent_a_equals_b(self, capsys):
        code, _, err = run(capsys, "permanent", "--n", "3", "--a", "1", "--b", "1")
        assert code == 2 and "error" in err

    def test_negative_fraction_flags(self, capsys):
        code, rec = run_json(capsys, "permanent", "--n", "2", "--a", "-1/3", "--b", "5")
        assert code == 0 and rec["params"]["a"] == "-1/3"

    def test_det(self, capsys):
        code, rec = run_json(capsys, "det", "--n", "2", "--m", "2", "--a", "-1", "--b", "-4")
        assert code == 0
        v = rec["value"]
        assert v["alpha_relation"] == "alpha^2 = 4"
        t = TwistedRational(F(v["rational"]), v["alpha_exponent"], n=2, c=4)
        assert t.embed(F(2)) == F(80, 81)

    def test_fnm(self, capsys):
        code, rec = run_json(capsys, "fnm", "--n", "2", "--m", "2", "--k", "0", "--c", "4")
        assert code == 0 and rec["value"]["rational"] == "10/9"
        assert [c["name"] for c in rec["checks"]] == ["direct", "recurrence", "series"]
        assert all(c["status"] == "pass" for c in rec["checks"])
        code, rec = run_json(capsys, "fnm", "--n", "5", "--m", "0", "--k", "0", "--c", "7")
        assert rec["value"]["rational"] == "5"
        code, rec = run_json(capsys, "fnm", "--n", "2", "--m", "1", "--k", "1", "--c", "4")
        v = rec["value"]
        assert TwistedRational(F(v["rational"]), v["alpha_exponent"], n=2, c=4) == TwistedRational(F(-8, 3), -1, n=2, c=4)

    def test_fnm_bad_c(self, capsys):
        assert run(capsys, "fnm", "--n", "2", "--m", "1", "--k", "0", "--c", "1")[0] == 2


class TestVerify:
    def test_scott_instance(self, capsys):
        code, rec = run_json(capsys, "verify", "--n", "3", "--beta", "1", "--gamma", "-1", "--m-max", "2")
        assert code == 0 and rec["value"] == "-3/8"
        assert rec["checks"] and all(c["status"] == "pass" for c in rec["checks"])

    def test_two_by_two(self, capsys):
        assert run(capsys, "verify", "--n", "2", "--beta", "1", "--gamma", "2", "--m-max", "2")[0] == 0

    def test_coincident(self, capsys):
        assert run(capsys, "verify", "--n", "2", "--beta", "1", "--gamma", "1")[0] == 2

    def test_mismatch_exit_code(self, capsys, monkeypatch):
        import hadamard_cauchy.verify as verify

        real = verify.per_closed
        monkeypatch.setattr(verify, "per_closed", lambda inst: real(inst) + 1)
        code, out, _ = run(capsys, "verify", "--n", "2", "--beta", "1", "--gamma", "2")
        assert code == 1
        assert "[fail] per_closed: -10/9 | -1/9" in out

    def test_cap_precedence(self, capsys, monkeypatch, tmp_path):
        cfg = tmp_path / "hc.conf"
        cfg.write_text("# caps\nmax_bruteforce = 2\nformat = json\n")
        args = ["verify", "--n", "3", "--beta", "1", "--gamma", "2"]
        assert run(capsys, *args, "--config", str(cfg))[0] == 2
        monkeypatch.setenv("HC_MAX_BRUTEFORCE", "5")
        code, out, _ = run(capsys, *args, "--config", str(cfg))
        assert code == 0 and json.loads(out)["command"] == "verify"
        assert run(capsys, *args, "--max-bruteforce", "2")[0] == 2

    def test_bad_config(self, capsys, tmp_path):
        cfg = tmp_path / "bad.conf"
        cfg.write_text("n = 3\n")
        assert run(capsys, "scott", "3", "--config", str(cfg))[0] == 2


class TestFormats:
    @pytest.mark.parametrize(
        "argv",
        [
            ["permanent", "--n", "5", "--a", "3/7", "--b", "-2"],
            ["det", "--n", "3", "--m", "2", "--a", "-1", "--b", "-8"],
            ["verify", "--n", "2", "--beta", "1", "--gamma", "2"],
        ],
    )
    def test_same_values_everywhere(self, capsys, argv):
        _, rec = run_json(capsys, *argv)
        _, out, _ = run(capsys, *argv, "--format", "csv")
        table = dict(list(csv.reader(io.StringIO(out)))[1:])
        _, plain, _ = run(capsys, *argv, "--format", "plain")
        if isinstance(rec["value"], dict):
            assert table["value.rational"] == rec["value"]["rational"]
            assert rec["value"]["rational"] in plain
        else:
            assert table["value"] == rec["value"]
            assert plain.splitlines()[0] == rec["value"]

    def test_rationals_roundtrip(self, capsys):
        _, rec = run_json(capsys, "verify", "--n", "3", "--beta", "2/3", "--gamma", "-5/4", "--m-max", "2")
        for v in rec["values"].values():
            q = F(v)
            assert str(q) == v


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hadamard_cauchy", "scott", "5"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "45/32"


def test_no_subcommand(capsys):
    assert run(capsys)[0] == 2
