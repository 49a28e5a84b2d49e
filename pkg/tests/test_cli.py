"""Command-line surface: formats, determinism, exit codes, usage errors."""

import json
import subprocess
import sys

import pytest

from twistroots.cli import main

RUN = [sys.executable, "-m", "twistroots.cli"]


def run_cli(*argv):
    return subprocess.run(RUN + list(argv), capture_output=True, text=True)


def test_roots_json_count():
    out = run_cli("roots", "--family", "a-even-2", "--k", "1", "--l", "1",
                  "--mmax", "1", "--format", "json")
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert doc["count"] == 33
    assert sum(1 for r in doc["roots"] if r["class"] != "zero") == 32
    zero_entries = [r for r in doc["roots"] if r["class"] == "zero"]
    assert len(zero_entries) == 1


def test_roots_csv_and_tex():
    out = run_cli("roots", "--family", "d-2", "--k", "1", "--l", "1",
                  "--mmax", "1", "--format", "csv")
    assert out.returncode == 0
    lines = out.stdout.strip().splitlines()
    assert lines[0] == "eps,del,dc,class,parity,component"
    out = run_cli("roots", "--family", "d-2", "--k", "1", "--l", "1",
                  "--mmax", "0", "--format", "tex")
    assert out.returncode == 0
    assert out.stdout.startswith("\\documentclass") and "\\end{document}" in out.stdout


def test_classify_command():
    out = run_cli("classify", "--family", "a-even-2", "--k", "1", "--l", "1",
                  "--root", '{"eps":[0],"del":[0],"dc":1}')
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert doc["class"] == "imaginary" and doc["parity"] == "unspecified"
    out = run_cli("classify", "--family", "a-even-2", "--k", "1", "--l", "1",
                  "--root", '{"eps":[0],"del":[3],"dc":0}')
    assert out.returncode == 1
    assert json.loads(out.stdout)["is_root"] is False


def test_tables_tex_matches_printed_entries():
    out = run_cli("tables", "--family", "a-4", "--k", "1", "--l", "1",
                  "--format", "tex")
    assert out.returncode == 0
    # the doubled-del coefficient set of the order-4 family
    assert r"$S_{\pm2\delta_j}$ & $4\mathbb{Z}\delta$" in out.stdout
    assert r"(4\mathbb{Z}+2)\delta" in out.stdout


def test_tables_json_schema():
    out = run_cli("tables", "--family", "a-odd-2", "--k", "1", "--l", "2")
    doc = json.loads(out.stdout)
    assert doc["family"] == "a-odd-2" and doc["k"] == 1 and doc["l"] == 2
    assert all({"dot", "progression"} <= set(c) for c in doc["clauses"])
    assert isinstance(doc["clauses"][0]["dot"], list)
    assert doc["R0"]["1"]["clauses"]
    # Every S entry is a single progression (mod, res) pair.
    for entry in doc["S"]:
        assert set(entry["progression"]) == {"mod", "res"}


def test_deterministic_output():
    args = ("verify", "--family", "a-4", "--k", "1", "--l", "1", "--mmax", "6",
            "--seed", "5", "--configs", "4", "--adversarial", "3",
            "--functionals", "2", "--roundtrip", "4")
    a, b = run_cli(*args), run_cli(*args)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout  # byte-identical for fixed flags and seed


def test_verify_exit_zero_on_pass(tmp_path):
    out_file = tmp_path / "report.json"
    out = run_cli("verify", "--family", "d-2", "--k", "2", "--l", "2",
                  "--mmax", "8", "--configs", "5", "--adversarial", "4",
                  "--functionals", "3", "--roundtrip", "5",
                  "--out", str(out_file))
    assert out.returncode == 0
    doc = json.loads(out_file.read_text())
    assert doc["ok"] is True
    assert {r["suite"] for r in doc["reports"]} == {
        "tables", "classification", "structure", "shadow-pipeline",
        "generators", "roundtrip"}


def test_usage_error_names_constraint():
    out = run_cli("roots", "--family", "a-odd-2", "--k", "1", "--l", "1",
                  "--mmax", "1")
    assert out.returncode != 0
    assert "(1, 1)" in out.stderr


def test_malformed_config_reports_location(tmp_path):
    bad = tmp_path / "cfg.json"
    bad.write_text('{"classes": [')
    out = run_cli("shadow-validate", "--family", "a-even-2", "--k", "1",
                  "--l", "1", "--config", str(bad))
    assert out.returncode != 0
    assert "line" in out.stderr and "column" in out.stderr


def test_shadow_commands_roundtrip(tmp_path):
    from random import Random

    from twistroots.families import AffineFamily, AlgebraParams
    from twistroots.sampling import random_tight_config

    p = AlgebraParams(AffineFamily.A_EVEN_2, 1, 1)
    cfg, zeta = random_tight_config(p, Random(3))
    cfg_file = tmp_path / "cfg.json"
    cfg_file.write_text(json.dumps(cfg.to_json()))

    out = run_cli("shadow-validate", "--family", "a-even-2", "--k", "1",
                  "--l", "1", "--config", str(cfg_file))
    assert out.returncode == 0 and json.loads(out.stdout)["valid"] is True

    out = run_cli("shadow-derive-p", "--family", "a-even-2", "--k", "1",
                  "--l", "1", "--config", str(cfg_file))
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert doc["closure"]["ok"] is True
    assert doc["components"]["1"]["parabolic"] is True

    out = run_cli("parabolic-synth", "--family", "a-even-2", "--k", "1",
                  "--l", "1", "--config", str(cfg_file))
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert "combined" in doc and doc["trivial"] is False


def test_parabolic_synth_flags_trivial_functional(tmp_path):
    # every class fully-ln: both traces are the whole component, both
    # synthesized functionals vanish, and the combination is flagged trivial
    from twistroots.families import AffineFamily, AlgebraParams
    from twistroots import rootsys as rs
    from twistroots.shadow import FULL_LN, ShadowConfig

    p = AlgebraParams(AffineFamily.A_EVEN_2, 1, 1)
    cfg = ShadowConfig(p, {d: FULL_LN for d in rs.real_dot_roots(p)})
    cfg_file = tmp_path / "cfg.json"
    cfg_file.write_text(json.dumps(cfg.to_json()))
    out = run_cli("parabolic-synth", "--family", "a-even-2", "--k", "1",
                  "--l", "1", "--config", str(cfg_file))
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert doc["trivial"] is True and "note" in doc

    # shadow-derive-p reports the same situation as a finding
    out = run_cli("shadow-derive-p", "--family", "a-even-2", "--k", "1",
                  "--l", "1", "--config", str(cfg_file))
    doc = json.loads(out.stdout)
    assert doc["components"]["1"]["proper"] is False
    assert doc["mixed_components"] is False  # all-ln fails the mixing hypothesis
    assert doc["findings"] == []             # so no contradiction is flagged


def test_phi_pi_and_decompose(tmp_path):
    zeta_file = tmp_path / "zeta.json"
    zeta_file.write_text(json.dumps({"eps": ["2"], "del": ["1"], "delta": "0"}))
    out = run_cli("phi-pi", "--family", "a-even-2", "--k", "1", "--l", "1",
                  "--functional", str(zeta_file))
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert doc["modulus"] == 2
    gens = {(tuple(g["eps"]), tuple(g["del"]), g["dc"]) for g in doc["generators"]}
    assert gens == {((1,), (0,), 0), ((1,), (0,), 1), ((0,), (1,), 0), ((0,), (1,), 1)}

    out = run_cli("decompose", "--family", "a-even-2", "--k", "1", "--l", "1",
                  "--functional", str(zeta_file),
                  "--root", '{"eps":[0],"del":[2],"dc":0}')
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert doc["coefficients"] == [
        {"generator": {"eps": [0], "del": [1], "dc": 0}, "count": 2}]


def test_list_families_inprocess(capsys):
    assert main(["--list-families"]) == 0
    out = capsys.readouterr().out
    assert "a-odd-2" in out and "(k, l) != (1, 1)" in out


def test_no_command_prints_help():
    assert main([]) == 2
