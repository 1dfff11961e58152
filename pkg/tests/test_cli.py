"""CLI behaviour: output schemas, determinism, exit codes, formats."""

import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from normtrace_ramp import cli


CFG_437 = {"q": 4, "s": 3, "u": 7, "lambda1": 92, "lambda2": 87,
           "gamma_pool": [90, 91, 92], "seed": 11}
CFG_223 = {"q": 2, "s": 2, "u": 3, "lambda1": 2, "lambda2": 0, "seed": 5}


def schema(name):
    ref = resources.files("normtrace_ramp") / "schemas" / f"{name}.schema.json"
    return json.loads(ref.read_text())


def write_config(tmp_path, cfg, name="config.json"):
    path = tmp_path / name
    path.write_text(json.dumps(cfg))
    return str(path)


def run_cli(args, capsys):
    code = cli.main(args)
    out = capsys.readouterr().out
    return code, out


def test_params_report_matches_fixture_and_schema(tmp_path, capsys):
    cfg = write_config(tmp_path, CFG_437)
    code, out = run_cli(["params", "--config", cfg], capsys)
    assert code == 0
    report = json.loads(out)
    jsonschema.validate(report, schema("params_report"))
    jsonschema.validate(report["config"], schema("scheme_config"))
    assert report["m_primary"] == [260, 274, 295]
    assert report["m_dual"] == [14, 33, 40]
    assert report["privacy"] == [13, 32, 39]
    assert report["reconstruction"] == [58, 79, 93]
    assert report["swapped_assignment"]["privacy"] == [259, 273, 294]
    assert report["swapped_assignment"]["reconstruction"] == [313, 320, 339]
    singles = {tuple(e["gammas"]): e["count"] for e in report["primary_audit"][0]["subsets"]}
    assert singles == {(90,): 262, (91,): 261, (92,): 260}
    dual_singles = {tuple(e["gammas"]): e["count"] for e in report["dual_audit"][0]["subsets"]}
    assert dual_singles == {(90,): 28, (91,): 14, (92,): 25}


def test_params_is_byte_identical(tmp_path, capsys):
    cfg = write_config(tmp_path, CFG_437)
    _, first = run_cli(["params", "--config", cfg], capsys)
    _, second = run_cli(["params", "--config", cfg], capsys)
    assert first == second


def test_params_csv(tmp_path, capsys):
    cfg = write_config(tmp_path, CFG_223)
    code, out = run_cli(["params", "--config", cfg, "--format", "csv"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "kind,m,gammas,value"
    assert "m_primary,1,,6" in lines
    assert "privacy,1,,1" in lines


def test_pool_flag_overrides_config(tmp_path, capsys):
    cfg = dict(CFG_437)
    del cfg["gamma_pool"]
    path = write_config(tmp_path, cfg)
    code, out = run_cli(["params", "--config", path, "--pool", "90,91,92"], capsys)
    assert code == 0
    assert json.loads(out)["m_primary"] == [260, 274, 295]
    code, out = run_cli(["params", "--config", path], capsys)
    assert json.loads(out)["pool"] == [88, 90, 91, 92]


def test_curve_report(tmp_path, capsys):
    cfg = write_config(tmp_path, CFG_223)
    code, out = run_cli(["curve", "--config", cfg], capsys)
    assert code == 0
    report = json.loads(out)
    jsonschema.validate(report, schema("curve_report"))
    assert report["n"] == 8
    assert len(report["departments"][0]) == 2
    code, _ = run_cli(["curve", "--config", cfg, "--format", "csv"], capsys)
    assert code == 2


def test_deal_reconstruct_round_trip(tmp_path, capsys):
    cfg = write_config(tmp_path, CFG_223)
    secret = tmp_path / "secret.json"
    secret.write_text("[3]")
    shares = tmp_path / "shares.json"
    code, _ = run_cli(
        ["deal", "--config", cfg, "--secret", str(secret), "--output", str(shares)],
        capsys,
    )
    assert code == 0
    data = json.loads(shares.read_text())
    jsonschema.validate(data, schema("share_file"))
    assert data["config"]["seed"] == 5
    assert len(data["shares"]) == 8

    code, out = run_cli(
        ["reconstruct", "--shares", str(shares), "--subset", "all"], capsys
    )
    assert code == 0
    report = json.loads(out)
    jsonschema.validate(report, schema("reconstruct_report"))
    assert report["complete"] and report["secret"] == [3]

    # a reconstruction-threshold-sized subset still recovers in full
    code, out = run_cli(
        ["reconstruct", "--shares", str(shares), "--subset", "0,2,4"], capsys
    )
    report = json.loads(out)
    assert report["complete"] and report["secret"] == [3]


def test_deal_is_deterministic_given_seed(tmp_path, capsys):
    cfg = write_config(tmp_path, CFG_223)
    secret = tmp_path / "secret.json"
    secret.write_text("[2]")
    _, first = run_cli(["deal", "--config", cfg, "--secret", str(secret)], capsys)
    _, second = run_cli(["deal", "--config", cfg, "--secret", str(secret)], capsys)
    assert first == second
    _, other = run_cli(
        ["deal", "--config", cfg, "--secret", str(secret), "--seed", "99"], capsys
    )
    assert json.loads(other)["config"]["seed"] == 99


def test_coalition_command(tmp_path, capsys):
    cfg = write_config(tmp_path, CFG_223)
    code, out = run_cli(["coalition", "--config", cfg, "--subset", "0,1"], capsys)
    assert code == 0
    report = json.loads(out)
    jsonschema.validate(report, schema("coalition_report"))
    assert report["leakage"] == 0
    assert report["values"] is None

    secret = tmp_path / "secret.json"
    secret.write_text("[1]")
    shares = tmp_path / "shares.json"
    run_cli(["deal", "--config", cfg, "--secret", str(secret), "--output", str(shares)], capsys)
    code, out = run_cli(
        ["coalition", "--config", cfg, "--subset", "2-7", "--shares", str(shares)],
        capsys,
    )
    report = json.loads(out)
    assert report["leakage"] == 1
    assert report["values"] is not None


def test_nonqual_command(tmp_path, capsys):
    cfg = write_config(tmp_path, CFG_223)
    code, out = run_cli(["nonqual", "--config", cfg, "--w", "1", "--limit", "5"], capsys)
    assert code == 0
    report = json.loads(out)
    jsonschema.validate(report, schema("nonqual_report"))
    assert report["count"] == 1
    assert report["sets"][0]["indices"] == [0, 1]


def test_oracle_matches_params_table(tmp_path, capsys):
    cfg = write_config(tmp_path, CFG_223)
    code, out = run_cli(["oracle", "--config", cfg, "--t", "1"], capsys)
    assert code == 0
    report = json.loads(out)
    jsonschema.validate(report, schema("oracle_report"))
    _, params_out = run_cli(["params", "--config", cfg], capsys)
    assert report["value"] == json.loads(params_out)["m_primary"][0] == 6


def test_exit_codes(tmp_path, capsys):
    bad = write_config(tmp_path, {"q": 4, "s": 3, "u": 5, "lambda1": 9, "lambda2": 0})
    assert run_cli(["params", "--config", bad], capsys)[0] == 2
    cfg437 = write_config(tmp_path, CFG_437, "c437.json")
    assert run_cli(["oracle", "--config", cfg437, "--t", "1", "--budget", "10"], capsys)[0] == 4
    cfg223 = write_config(tmp_path, CFG_223, "c223.json")
    assert run_cli(["oracle", "--config", cfg223, "--t", "5"], capsys)[0] == 3
    assert run_cli(["params", "--config", str(tmp_path / "missing.json")], capsys)[0] == 2
    garbage = tmp_path / "garbage.json"
    garbage.write_text("{not json")
    assert run_cli(["params", "--config", str(garbage)], capsys)[0] == 2
    unknown = write_config(tmp_path, {**CFG_223, "bogus": 1}, "unknown.json")
    assert run_cli(["params", "--config", unknown], capsys)[0] == 2


def test_share_file_field_spec_guard(tmp_path, capsys):
    cfg = write_config(tmp_path, CFG_223)
    secret = tmp_path / "secret.json"
    secret.write_text("[0]")
    shares = tmp_path / "shares.json"
    run_cli(["deal", "--config", cfg, "--secret", str(secret), "--output", str(shares)], capsys)
    data = json.loads(shares.read_text())
    data["field_spec"]["generator"] = 3
    shares.write_text(json.dumps(data))
    code, _ = run_cli(["reconstruct", "--shares", str(shares), "--subset", "all"], capsys)
    assert code == 2


def test_console_entry_point_runs(tmp_path):
    cfg = write_config(tmp_path, CFG_223)
    proc = subprocess.run(
        [sys.executable, "-m", "normtrace_ramp", "params", "--config", cfg],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["m_primary"] == [6]
