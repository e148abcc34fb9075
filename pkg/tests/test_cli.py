import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from twisted_hv import structure
from twisted_hv.cli import UsageError, main, parse_args

GOLDEN = Path(__file__).parent / "golden"

SCENARIOS = {
    "theorem1_ratio0.json": ["--h", "1", "--hI", "0", "--cL", "1", "--cLI", "1", "--cI", "0"],
    "theorem1_ratio1.json": ["--h", "1", "--hI", "1", "--cL", "0", "--cLI", "1", "--cI", "0"],
    "theorem1_ratio3.json": ["--h", "2", "--hI", "3", "--cL", "1", "--cLI", "1", "--cI", "0"],
}


def invoke(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_singular():
    cfg = parse_args(["singular", "--hI", "2", "--cLI", "1", "--h", "1", "--cL", "0", "--cI", "0",
                      "--max-degree", "1"])
    assert cfg.command == "singular" and cfg.max_degree == 1
    assert cfg.hw.values() == (1, 2, 0, 1, 0)
    assert (cfg.mode, cfg.format, cfg.seed) == ("evaluated", "table", 0)


def test_parse_defaults_and_rationals():
    cfg = parse_args(["det", "--cI", "1/3"])
    assert cfg.hw.cI == Fraction(1, 3)
    assert cfg.max_degree == 5


def test_symbolic_mode_keeps_unset_parameters_generic():
    cfg = parse_args(["gram", "--mode", "symbolic", "--cI", "0"])
    assert cfg.hw.cI == 0 and str(cfg.hw.h) == "1 * h^1"


def test_symbolic_mode_forbids_nullspace_commands():
    for cmd in ("singular", "quotient", "verify-theorem1"):
        with pytest.raises(UsageError):
            parse_args([cmd, "--mode", "symbolic"])


@pytest.mark.parametrize("argv", [
    ["singular", "--hI", "1.5"],
    ["singular", "--hI", "x/2"],
    ["gram", "--bogus", "1"],
    ["verify-theorem1", "--cI", "1/3", "--cLI", "1"],
    ["verify-theorem1", "--cLI", "0"],
    ["frobnicate"],
    ["singular", "--mode", "symbolic"],
    ["det", "--mode", "symbolic", "--max-degree", "5"],
])
def test_usage_and_domain_errors_exit_2(capsys, argv):
    code, out, err = invoke(capsys, *argv)
    assert code == 2
    assert err


def test_outside_theorem_message(capsys):
    code, _, err = invoke(capsys, "verify-theorem1", "--cI", "1/3", "--cLI", "1")
    assert code == 2 and "outside the theorem" in err


def test_example_ii_report(capsys):
    code, out, _ = invoke(capsys, "verify-theorem1", "--hI", "2", "--cLI", "1", "--h", "1", "--cL", "0", "--cI", "0")
    assert code == 0
    assert "I(-1) 𝟏" in out


@pytest.mark.parametrize("name", sorted(SCENARIOS))
def test_golden_theorem_reports(capsys, name):
    code, out, _ = invoke(capsys, "verify-theorem1", *SCENARIOS[name], "--format", "json")
    assert code == 0
    expected = (GOLDEN / name).read_text(encoding="utf-8")
    assert out == expected
    assert all(r["passed"] for r in json.loads(out)["records"])


def test_golden_table(capsys):
    code, out, _ = invoke(capsys, "verify-theorem1", *SCENARIOS["theorem1_ratio3.json"])
    assert code == 0
    assert out == (GOLDEN / "theorem1_ratio3.txt").read_text(encoding="utf-8")


def test_verify_det_symbolic(capsys):
    code, out, _ = invoke(capsys, "verify-det", "--mode", "symbolic", "--max-degree", "4")
    assert code == 0
    for k in ("K_n = -1", "K_n = 16", "K_n = -20736", "K_n = -28179280429056"):
        assert k in out


def test_verify_det_evaluated_json(capsys):
    code, out, _ = invoke(capsys, "verify-det", "--max-degree", "3", "--seed", "7", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert len(data["header"]["sample_points"]) == 5
    assert [r["passed"] for r in data["records"]] == [True, True, True]


def test_property_suite(capsys):
    code, out, _ = invoke(capsys, "property-suite", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert len(data["records"]) == 9
    assert all(r["cases"] >= 200 and r["failures"] == 0 for r in data["records"])


def test_gram_json_shape(capsys):
    code, out, _ = invoke(capsys, "gram", "--h", "5/3", "--hI", "2", "--cLI", "2", "--degree", "1", "--format", "json")
    rec = json.loads(out)["records"][0]["report"]
    assert code == 0
    assert rec["degree"] == 1 and rec["matrix"] == [["0", "2"], ["-2", "10/3"]]


def test_character_table_row(capsys):
    code, out, _ = invoke(capsys, "character", "--hI", "0", "--cLI", "1")
    assert code == 0 and "n=3: 5" in out


def test_empty_singular_result(capsys):
    code, out, _ = invoke(capsys, "singular", "--hI", "1", "--cLI", "2", "--degree", "1")
    assert code == 0 and "kernel dimension 0" in out


def test_quotient_command(capsys):
    code, out, _ = invoke(capsys, "quotient", "--hI", "-1", "--cLI", "1", "--max-degree", "4", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["header"]["p"] == 2
    dims = [r["quotient_dim"] for r in data["records"] if r["check"] == "quotient_dim"]
    assert dims == [2, 4, 8, 15]


def test_failed_verification_exits_1(capsys, monkeypatch):
    monkeypatch.setattr(structure, "lemma4_check", lambda result, hw: False)
    code, out, _ = invoke(capsys, "verify-theorem1", "--hI", "2", "--cLI", "1", "--format", "json")
    assert code == 1
    rec = next(r for r in json.loads(out)["records"] if r["check"] == "lemma4_lowest_component")
    assert rec["passed"] is False and rec["witness"]["lowest"] == "I(-1) 𝟏"


@pytest.mark.parametrize("argv", [
    ["verify-theorem1", "--hI", "3", "--cLI", "1", "--format", "json"],
    ["property-suite", "--seed", "12345"],
    ["verify-det", "--seed", "99", "--max-degree", "3"],
])
def test_determinism(capsys, argv):
    first = invoke(capsys, *argv)
    second = invoke(capsys, *argv)
    assert first == second


def test_seed_changes_sample_points(capsys):
    _, a, _ = invoke(capsys, "verify-det", "--seed", "1", "--max-degree", "1", "--format", "json")
    _, b, _ = invoke(capsys, "verify-det", "--seed", "2", "--max-degree", "1", "--format", "json")
    assert json.loads(a)["header"]["sample_points"] != json.loads(b)["header"]["sample_points"]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "twisted_hv", "singular", "--hI", "2", "--cLI", "1",
                          "--max-degree", "1"], capture_output=True, text=True, encoding="utf-8")
    assert res.returncode == 0, res.stderr
    assert "I(-1) 𝟏" in res.stdout
