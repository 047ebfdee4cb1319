import json

import pytest

from ffmzv.cli import main, parse_args


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_parse_args_defaults():
    cfg = parse_args(["compute", "--tuple", "(1,2)", "--D", "3"])
    assert cfg.command == "compute"
    assert cfg.format == "json" and cfg.out is None
    assert cfg.args.q == 2 and not cfg.args.star


def test_compute_truncated(capsys):
    code, out = run(capsys, "compute", "--tuple", "(1,)", "--D", "2")
    assert code == 0
    result = json.loads(out)
    assert result["evaluator"] == "trunc"
    assert result["value"] == "(t^2+t+1)/(t^2+t)"


def test_compute_finite(capsys):
    code, out = run(capsys, "compute", "--tuple", "(1,2)", "--v", "t^2+t+1")
    assert code == 0
    assert json.loads(out)["value"] == "1 mod (t^2+t+1)^1"


def test_compute_vadic_auto(capsys):
    code, out = run(capsys, "compute", "--tuple", "(2,)", "--v", "t", "--N", "3")
    assert code == 0
    result = json.loads(out)
    assert result["value"] == "0 mod (t)^3" and result["stabilized"] is True


def test_verify_families(capsys):
    code, out = run(capsys, "verify", "--family", "thm2", "--tuple", "(1,2,3)",
                    "--evaluator", "vadic", "--v", "t", "--N", "3")
    assert code == 0
    assert json.loads(out)["verdict"] == "ValuationAtLeast(3)"

    code, out = run(capsys, "verify", "--family", "thmB",
                    "--pairs", "(1:2),(3:2)", "--evaluator", "trunc", "--D", "3")
    assert code == 0
    assert json.loads(out)["verdict"] == "Zero"

    code, out = run(capsys, "verify", "--q", "3", "--family", "thmA",
                    "--tuple", "(2,4,6)", "--evaluator", "finite",
                    "--v", "t^2+1")
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_search_command(capsys):
    code, out = run(capsys, "search", "--v", "t", "--weight-max", "4",
                    "--depth-max", "3", "--N", "2")
    assert code == 0
    result = json.loads(out)
    assert result["containment"] is True
    assert result["dim_found"] >= result["dim_universal"]


def test_harmonic_command(capsys):
    code, out = run(capsys, "harmonic", "--ring", "zmod:12", "--checks", "5")
    assert code == 0 and json.loads(out)["failures"] == []
    code, out = run(capsys, "harmonic", "--ring", "polymod:2:4", "--checks",
                    "5", "--doubling")
    assert code == 0 and json.loads(out)["failures"] == []


def test_primes_command(capsys):
    code, out = run(capsys, "primes", "--degree-max", "2")
    assert code == 0
    assert json.loads(out)["primes"] == ["t", "t+1", "t^2+t+1"]


def test_formats(capsys, tmp_path):
    code, out = run(capsys, "primes", "--degree-max", "1", "--format", "csv")
    assert code == 0 and out.splitlines()[0] == "prime"
    code, out = run(capsys, "primes", "--degree-max", "1", "--format", "plain")
    assert code == 0 and "command: primes" in out


def test_out_file_and_determinism(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["search", "--v", "t", "--weight-max", "4", "--depth-max", "3",
            "--N", "2"]
    assert main(argv + ["--out", str(a)]) == 0
    assert main(argv + ["--out", str(b)]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()


def test_exit_code_2_on_usage_errors(capsys):
    assert main(["compute", "--tuple", "(1,)"])  == 2     # no evaluator args
    assert main(["compute", "--tuple", "(1,)", "--N", "2"]) == 2  # N without v
    assert main(["compute", "--tuple", "bogus", "--D", "2"]) == 2
    assert main(["verify", "--family", "thm2", "--tuple", "(2,2,4)",
                 "--evaluator", "trunc", "--D", "2"]) == 2
    assert main(["compute", "--tuple", "(1,)", "--D", "2", "--v", "t+t"]) == 2
    assert main(["nonsense"]) == 2
    capsys.readouterr()


def test_exit_code_3_on_unwritable_path(capsys):
    code = main(["primes", "--degree-max", "1",
                 "--out", "/nonexistent-dir/x.json"])
    capsys.readouterr()
    assert code == 3
