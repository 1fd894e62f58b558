"""Command-line interface: verbs, JSON schema, exit codes."""

import json

import pytest

from hkr.cli import main
from hkr.scalars import parse_scalar


def run_json(capsys, *argv):
    code = main(list(argv) + ["--json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_list(capsys):
    code, payload = run_json(capsys, "list")
    assert code == 0
    assert payload["schema"] == 1
    forms = payload["forms"]
    assert len(forms) == 19
    names = {r["form"] for r in forms}
    assert "su(1,2)" in names and "so*(8)" in names


def test_describe_su12(capsys):
    code, payload = run_json(capsys, "describe", "su:p=1,q=2")
    assert code == 0
    assert payload["schema"] == 1
    assert payload["form"] == "su(1,2)"
    assert payload["dim"] == 8
    assert payload["dim_h"] == 4
    assert payload["dim_m"] == 4
    assert payload["rank"] == 1
    assert payload["restricted_type"] == "BC1"
    assert payload["split_sub"] == "so(1,2)"
    assert payload["quasi_split"] is True
    assert payload["num_restricted_roots"] == 4
    # multiplicity 2 on the short roots, 1 on the doubled ones
    assert sorted(payload["multiplicities"].values()) == [1, 1, 2, 2]


def test_hkr_verb_scalars_parse_back(capsys):
    code, payload = run_json(capsys, "hkr", "sl_r:n=2")
    assert code == 0
    assert payload["relations_verified"] is True
    assert payload["table1_match"] is True
    assert payload["degrees"] == [2]
    # every matrix entry round-trips through the scalar grammar
    for key in ("e", "f", "x", "w"):
        for row in payload[key]:
            for entry in row:
                parse_scalar(entry)
    e00 = parse_scalar(payload["e"][0][0])
    assert str(e00) == payload["e"][0][0]


def test_section_verb(capsys):
    code, payload = run_json(capsys, "section", "sp_r:n=2",
                             "--gamma", "1,1/2")
    assert code == 0
    assert payload["form"] == "sp(4,R)"
    assert payload["gamma"] == ["1", "1/2"]
    assert payload["degrees"] == [2, 4]
    assert payload["regular"] is True
    for row in payload["point"]:
        for entry in row:
            parse_scalar(entry)


def test_section_default_gamma_is_zero(capsys):
    code, payload = run_json(capsys, "section", "sl_r:n=2")
    assert code == 0
    assert payload["gamma"] == ["0"]
    assert payload["regular"] is True


def test_dims_verb(capsys):
    code, payload = run_json(capsys, "dims", "sp_r:n=2",
                             "--genus", "2", "--L", "K")
    assert code == 0
    assert payload["form"] == "sp(4,R)"
    assert payload["base_dim"] == 10
    assert payload["expected_moduli_dim"] == 10
    assert payload["is_split"] is True
    assert payload["hkr_open"] is True


def test_dims_degree_spec(capsys):
    code, payload = run_json(capsys, "dims", "sl_r:n=2",
                             "--genus", "2", "--L", "deg:8")
    assert code == 0
    assert payload["base_dim"] == 15
    code, payload = run_json(capsys, "dims", "sl_r:n=2", "--L", "O")
    assert code == 0
    assert payload["base_dim"] == 1
    assert payload["expected_moduli_dim"] is None


def test_table1_single_and_full(capsys):
    code, payload = run_json(capsys, "table1", "su:p=2,q=2")
    assert code == 0
    assert payload["rows"] == [{"form": "su(2,2)", "split_sub": "sp(4,R)",
                                "restricted_type": "C2",
                                "quasi_split": True}]
    code, payload = run_json(capsys, "table1")
    assert code == 0
    assert len(payload["rows"]) == 19 + 12
    code, payload = run_json(capsys, "table1", "f4(-20)")
    assert payload["rows"][0]["split_sub"] == "sl(2,R)"


def test_lemma73(capsys):
    code, payload = run_json(capsys, "lemma73", "--n", "3")
    assert code == 0
    rep = payload["reports"][0]
    assert rep["ok"] is True
    assert rep["y_scalar"] == "1"
    assert rep["displayed_y_in_algebra"] is False
    assert any("corrected" in note for note in rep["notes"])


def test_verify_single_form(capsys):
    code, payload = run_json(capsys, "verify", "sl_r:n=2",
                             "--samples", "5", "--seed", "1")
    assert code == 0
    assert payload["failures"] == 0
    checks = {r["check"] for r in payload["results"] if r["form"] == "sl(2,R)"}
    assert "tds_relations" in checks or len(checks) >= 8


def test_verify_text_output(capsys):
    code = main(["verify", "sl_r:n=2", "--samples", "3"])
    out = capsys.readouterr().out
    assert code == 0
    assert "0 failures" in out


def test_exit_code_usage_errors(capsys):
    assert main(["describe", "nope:n=2"]) == 2
    assert main(["dims", "sl_r:n=2", "--L", "deg:x"]) == 2
    assert main(["dims", "sl_r:n=2", "--genus", "1"]) == 2
    assert main(["section", "sl_r:n=2", "--gamma", "1,2,3"]) == 2
    assert main(["verify"]) == 2
    capsys.readouterr()


def test_parser_rejects_unknown_verb():
    with pytest.raises(SystemExit):
        main(["frobnicate"])


def test_size_bound_respected(monkeypatch, capsys):
    monkeypatch.setenv("HKR_MAX_DIM", "4")
    assert main(["describe", "su:p=2,q=3"]) == 2
    err = capsys.readouterr().err
    assert "error" in err
