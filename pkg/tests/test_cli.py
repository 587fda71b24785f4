"""Command-line behavior: formats, determinism, and exit codes."""

import json

import pytest

from padicapery.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_series_evil_example(capsys):
    code, out, _ = run_cli(
        capsys, "series", "--form", "evil", "--weight", "4", "--p", "2", "--prec", "3"
    )
    assert code == 0
    assert out == "0 0\n1 1\n2 8\n"


def test_series_uniformizer_case(capsys):
    code, out, _ = run_cli(capsys, "series", "--case", "zeta-p2", "--prec", "4")
    assert code == 0
    assert out.splitlines() == ["0 0", "1 1", "2 24", "3 300"]


def test_series_fractional_output(capsys):
    code, out, _ = run_cli(capsys, "series", "--form", "f", "--weight", "1", "--prec", "2")
    assert code == 0
    assert out.splitlines()[0] == "0 1/4"


def test_series_requires_exactly_one_source():
    with pytest.raises(SystemExit) as err:
        main(["series", "--prec", "3"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main(["series", "--form", "e", "--case", "zeta-p2"])
    assert err.value.code == 2


def test_series_p_validation():
    with pytest.raises(SystemExit) as err:
        main(["series", "--form", "evil", "--weight", "4", "--prec", "3"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main(["series", "--form", "f", "--weight", "1", "--p", "2", "--prec", "3"])
    assert err.value.code == 2


def test_sequences_csv(capsys):
    code, out, _ = run_cli(capsys, "sequences", "--case", "zeta-p2", "-n", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,a_num,a_den,b,p_n,q_n"
    assert lines[1] == "0,0,1,1,0,1"
    assert lines[2] == "1,1,1,24,1,12"


def test_sequences_json_sorted_keys(capsys):
    code, out, _ = run_cli(
        capsys, "sequences", "--case", "catalan-p2", "-n", "3", "--format", "json"
    )
    assert code == 0
    rows = json.loads(out)
    assert [row["b"] for row in rows] == ["-1", "-4", "28"]
    dumped = json.dumps(rows, sort_keys=True, indent=2) + "\n"
    assert out == dumped


def test_sequences_cap_is_usage_error():
    with pytest.raises(SystemExit) as err:
        main(["sequences", "--case", "zeta-p2", "-n", "65"])
    assert err.value.code == 2


def test_sequences_env_cap(capsys, monkeypatch):
    monkeypatch.setenv("PADICAPERY_MAX_TERMS", "70")
    code, out, _ = run_cli(capsys, "sequences", "--case", "zeta-p2", "-n", "65")
    assert code == 0
    assert len(out.splitlines()) == 66


def test_sequences_output_file(tmp_path, capsys):
    target = tmp_path / "table.csv"
    code, out, _ = run_cli(
        capsys, "sequences", "--case", "zeta-p2", "-n", "3", "-o", str(target)
    )
    assert code == 0
    assert out == ""
    assert target.read_text().splitlines()[1] == "0,0,1,1,0,1"


def test_certify_jsonl_schema_and_verdict(capsys):
    code, out, _ = run_cli(capsys, "certify", "--case", "zeta-p2", "--bits", "30")
    assert code == 0
    lines = out.splitlines()
    rows = [json.loads(line) for line in lines]
    summary = rows[-1]
    assert summary["verdict"] == "WITNESS_PASS"
    assert summary["sign"] == -1
    assert summary["theta_closed"] == "1.1618804316"
    for row in rows[:-1]:
        assert list(row) == sorted(row)
        assert set(row) == {
            "case",
            "certified",
            "implied_exponent",
            "log_max_size",
            "n",
            "p_n",
            "q_n",
            "sign",
            "theta_closed",
            "valuation_gap",
        }
    certified = [row for row in rows[:-1] if row["certified"]]
    assert certified
    for row in certified:
        assert float(row["implied_exponent"]) > 1.01


def test_certify_window_rows(capsys):
    code, out, _ = run_cli(
        capsys, "certify", "--case", "catalan-p2", "--bits", "30",
        "--window", "4", "6",
    )
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert [row["n"] for row in rows[:-1]] == [4, 5, 6]


def test_certify_p5_uncertified_rows(capsys):
    code, out, _ = run_cli(capsys, "certify", "--case", "zeta-p5")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows[-1]["verdict"] == "WITNESS_FAIL"
    assert rows[-1]["oracle_bits"] is None
    for row in rows[:-1]:
        assert row["certified"] is False
        assert row["valuation_gap"] is None


def test_certify_runs_are_byte_identical(capsys):
    first = run_cli(capsys, "certify", "--case", "zeta-p3", "--bits", "25")
    second = run_cli(capsys, "certify", "--case", "zeta-p3", "--bits", "25")
    assert first == second
    assert first[0] == 0


def test_oracle_json(capsys):
    code, out, _ = run_cli(capsys, "oracle", "--target", "catalan", "--bits", "36")
    assert code == 0
    payload = json.loads(out)
    assert payload["p"] == 2
    assert payload["agreement_exponent"] >= 35
    assert payload["digits"][:4] == [[-1, 1], [0, 1], [2, 1], [3, 1]]
    assert payload["representative"]["den"].isdigit()
    assert json.dumps(payload, sort_keys=True, indent=2) + "\n" == out


def test_oracle_rejects_catalan_with_n():
    with pytest.raises(SystemExit) as err:
        main(["oracle", "--target", "catalan", "-n", "2"])
    assert err.value.code == 2


def test_recurrence_verify_and_fit(capsys):
    code, out, _ = run_cli(capsys, "recurrence", "verify", "-n", "12")
    assert code == 0
    payload = json.loads(out)
    assert payload["violations_a"] == 0
    assert payload["violations_b"] == 0
    assert payload["coeff_polys"] == [[1, 2, 1], [-4, 0, 32], [256, -512, 256]]

    code, out, _ = run_cli(capsys, "recurrence", "fit", "-n", "12")
    assert code == 0
    payload = json.loads(out)
    assert payload["matches_builtin"] is True


def test_unknown_command_is_usage_error():
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 2


def test_module_entry_point():
    import subprocess
    import sys

    result = subprocess.run(
        [sys.executable, "-m", "padicapery", "oracle", "--target", "zeta-p2",
         "--bits", "20", "--digits", "3"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert payload["target"] == "zeta-p2"
