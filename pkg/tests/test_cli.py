import json
import subprocess
import sys

import pytest

from leonard.cli import main

D1_SELF_DUAL = {
    "field": {"kind": "rational"},
    "d": 1,
    "theta": ["1/1", "-1/1"],
    "theta_star": ["1/1", "-1/1"],
    "varphi": ["2/1"],
    "phi": ["6/1"],
}

D1_NON_SELF_DUAL = {
    "field": {"kind": "rational"},
    "d": 1,
    "theta": ["1/1", "-1/1"],
    "theta_star": ["2/1", "0/1"],
    "varphi": ["1/1"],
    "phi": ["5/1"],
}

D0 = {
    "field": {"kind": "rational"},
    "d": 0,
    "theta": ["3/1"],
    "theta_star": ["3/1"],
    "varphi": [],
    "phi": [],
}


def run_cli(tmp_path, argv, payload=None):
    inp = tmp_path / "in.json"
    out = tmp_path / "out.json"
    full = list(argv)
    if payload is not None:
        inp.write_text(json.dumps(payload))
        full += ["--input", str(inp)]
    full += ["--output", str(out)]
    code = main(full)
    text = out.read_text() if out.exists() else ""
    return code, text


def test_verify_d0_all_pass(tmp_path):
    code, text = run_cli(tmp_path, ["verify"], D0)
    assert code == 0
    report = json.loads(text)["report"]
    assert all(c["pass"] for c in report["checks"])


def test_verify_failing_array_exits_1(tmp_path):
    bad = dict(D1_SELF_DUAL, phi=["5/1"])  # wrong second split sequence
    code, text = run_cli(tmp_path, ["verify"], bad)
    assert code == 1
    checks = {c["name"]: c["pass"] for c in json.loads(text)["report"]["checks"]}
    assert not checks["round_trip_parameter_array"]


def test_verify_malformed_input(tmp_path, capsys):
    code, _ = run_cli(tmp_path, ["verify"], {"not": "an array"})
    assert code == 2
    err = json.loads(capsys.readouterr().err)
    assert "error" in err


def test_verify_structurally_invalid_is_malformed(tmp_path):
    dup = dict(D1_SELF_DUAL, theta=["1/1", "1/1"])
    code, _ = run_cli(tmp_path, ["verify"], dup)
    assert code == 2


def test_relatives_round_trip(tmp_path):
    code, text = run_cli(tmp_path, ["relatives"], D1_SELF_DUAL)
    assert code == 0
    rel = json.loads(text)["relatives"]
    assert sorted(rel) == ["*", "*D", "*d", "*dD", "D", "d", "dD", "e"]
    assert rel["e"] == json.loads(json.dumps(D1_SELF_DUAL))
    # applying * twice is the identity; the orbit stores reduced words only
    assert rel["*"]["theta"] == D1_SELF_DUAL["theta_star"]


def test_dualize_self_dual_passes(tmp_path):
    code, text = run_cli(tmp_path, ["dualize"], D1_SELF_DUAL)
    assert code == 0
    payload = json.loads(text)
    assert payload["self_dual"] is True
    assert payload["bundle"]["lambda"] == "3/2"
    assert all(c["pass"] for c in payload["report"]["checks"])


def test_dualize_non_self_dual_negative_control(tmp_path):
    code, text = run_cli(tmp_path, ["dualize"], D1_NON_SELF_DUAL)
    assert code == 1
    checks = {c["name"]: c["pass"] for c in json.loads(text)["report"]["checks"]}
    assert checks["A_T_equals_T_Astar"] is False


def test_dualize_require_self_dual_flag(tmp_path, capsys):
    code, _ = run_cli(tmp_path, ["dualize", "--require-self-dual"], D1_NON_SELF_DUAL)
    assert code == 1
    err = json.loads(capsys.readouterr().err)
    assert err["error"]["type"] == "LeonardError"


def test_bases_verb(tmp_path):
    code, text = run_cli(tmp_path, ["bases"], D1_SELF_DUAL)
    assert code == 0
    payload = json.loads(text)
    assert len(payload["bases"]) == 24
    assert len(payload["anchors"]["scalars"]) == 8
    assert all(c["pass"] for c in payload["report"]["checks"])


def test_matrix_of_t_all_four_bases(tmp_path):
    for basis in ("etastar-v0", "eta-vstar0", "taustar-vd", "tau-vstard"):
        code, text = run_cli(tmp_path, ["matrix-of-t", "--basis", basis], D1_SELF_DUAL)
        assert code == 0
        payload = json.loads(text)
        assert payload["matrix"] == payload["expected"]


def test_matrix_of_t_rejects_non_self_dual(tmp_path, capsys):
    code, _ = run_cli(tmp_path, ["matrix-of-t", "--basis", "etastar-v0"], D1_NON_SELF_DUAL)
    assert code == 1
    capsys.readouterr()


def test_matrix_of_t_unknown_basis_flag(tmp_path):
    with pytest.raises(SystemExit) as info:
        main(["matrix-of-t", "--basis", "nope"])
    assert info.value.code == 2


def test_search_verb_jsonl(tmp_path):
    code, text = run_cli(tmp_path, ["search", "--field", "prime:7", "--d", "1", "--limit", "3"])
    assert code == 0
    lines = text.strip().split("\n")
    assert len(lines) == 3
    for line in lines:
        obj = json.loads(line)
        assert obj["field"] == {"kind": "prime", "p": 7}


def test_search_deterministic_bytes(tmp_path):
    argv = ["search", "--field", "rational", "--d", "1", "--limit", "2", "--seed", "11"]
    _, a = run_cli(tmp_path, argv)
    _, b = run_cli(tmp_path, argv)
    assert a == b


def test_search_exhausted_partial_output(tmp_path, capsys):
    code, text = run_cli(
        tmp_path,
        ["search", "--field", "rational", "--d", "3", "--limit", "1",
         "--seed", "1", "--max-trials", "20"],
    )
    assert code == 1
    assert text == ""
    err = json.loads(capsys.readouterr().err)
    assert err["error"]["type"] == "ExhaustedTrials"


def test_installed_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "leonard.cli", "verify"],
        input=json.dumps(D0),
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["report"]["checks"]
