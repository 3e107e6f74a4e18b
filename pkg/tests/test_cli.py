"""Command line behavior: output, exit codes, determinism."""
import json
from pathlib import Path

import pytest

from pmsem.cli import main

PROOFS = Path(__file__).resolve().parent.parent / "proofs"


@pytest.fixture
def world_file(tmp_path):
    path = tmp_path / "w.txt"
    path.write_text(
        "individual a\nindividual b\nrelation S/1\nfact S(a)\nprop P true\n"
    )
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# parse

def test_parse_prints_canonical_form(capsys):
    code, out, _ = run(capsys, "parse", "p v q .=>. q v p")
    assert code == 0
    assert out.strip() == "(~(p v q) v (q v p))"


def test_parse_json_lists_variables(capsys):
    code, out, _ = run(capsys, "parse", "(x). S(x) v p", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["prop_variables"] == ["p"]
    assert data["predicates"] == ["S"]
    assert data["free_variables"] == []


def test_parse_error_exits_2(capsys):
    code, _, err = run(capsys, "parse", "p v")
    assert code == 2
    assert "error" in err


# ---------------------------------------------------------------------------
# eval / taut

def test_eval_lists_assignments(capsys):
    code, out, _ = run(capsys, "eval", "~(p v q)")
    assert code == 0
    assert "p=false, q=false | true" in out
    assert "{{<P+,0>, <Q+,0>}}" in out


def test_eval_json_schema(capsys):
    code, out, _ = run(capsys, "eval", "p", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["formula"] == "p"
    assert len(data["assignments"]) == 2
    assert data["assignments"][0]["true"] is True


def test_taut_accepts_tautology(capsys):
    code, out, _ = run(capsys, "taut", "p v ~p")
    assert code == 0
    assert out.strip() == "tautology"


def test_taut_rejects_contradiction(capsys):
    code, out, _ = run(capsys, "taut", "p . ~p")
    assert code == 1
    assert out.strip() == "contradiction"


def test_taut_reports_contingent_witnesses(capsys):
    code, out, _ = run(capsys, "taut", "p v q")
    assert code == 1
    assert "true under" in out
    assert "false under" in out


def test_taut_with_world_file(capsys, world_file):
    code, out, _ = run(capsys, "taut", "p v ~p", "--world", world_file)
    assert code == 0
    assert out.strip() == "tautology"


def test_taut_sampled_requires_seed(capsys):
    code, _, err = run(capsys, "taut", "p v ~p", "--mode", "sampled", "--count", "5")
    assert code == 2
    assert "seed" in err


# ---------------------------------------------------------------------------
# fo-eval / fo-valid

def test_fo_eval_true_formula(capsys, world_file):
    code, out, _ = run(capsys, "fo-eval", "(Ex). S(x)", "--model", world_file)
    assert code == 0
    assert "true" in out


def test_fo_eval_false_formula_exits_1(capsys, world_file):
    code, out, _ = run(capsys, "fo-eval", "(x). S(x)", "--model", world_file)
    assert code == 1
    assert "false" in out


def test_fo_eval_needs_model(capsys):
    code, _, err = run(capsys, "fo-eval", "(x). S(x)")
    assert code == 2
    assert "world file" in err


def test_fo_eval_base_mode_any(capsys, world_file):
    code, out, _ = run(
        capsys, "fo-eval", "S(x)", "--model", world_file, "--base-mode", "any:x"
    )
    assert code == 0


def test_fo_eval_rejects_bad_base_mode(capsys, world_file):
    code, _, err = run(
        capsys, "fo-eval", "S(x)", "--model", world_file, "--base-mode", "some"
    )
    assert code == 2


def test_fo_eval_json(capsys, world_file):
    code, out, _ = run(capsys, "fo-eval", "(Ex). S(x)", "--model", world_file, "--json")
    data = json.loads(out)
    assert code == 0
    assert data["true"] is True
    assert data["meaning"].startswith("{{")


def test_fo_valid_accepts_logical_truth(capsys):
    code, out, _ = run(capsys, "fo-valid", "(x). S(x) v ~S(x)")
    assert code == 0
    assert "logical_truth" in out


def test_fo_valid_reports_witness(capsys):
    code, out, _ = run(capsys, "fo-valid", "(Ex).S(x) .=>. (x).S(x)")
    assert code == 1
    assert "falsifiable" in out
    assert "S(a)" in out


def test_fo_valid_rejects_open_formula(capsys):
    code, _, err = run(capsys, "fo-valid", "S(x)")
    assert code == 2


# ---------------------------------------------------------------------------
# compare

def test_compare_small_sweep_passes(capsys):
    code, out, _ = run(capsys, "compare", "--vars", "2", "--prop-depth", "2")
    assert code == 0
    assert "disagreements: 0" in out
    assert "verdict: PASS" in out


def test_compare_json_report(capsys):
    code, out, _ = run(capsys, "compare", "--vars", "1", "--prop-depth", "1", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["verdict"] == "PASS"
    assert data["disagreement_count"] == 0


def test_compare_fo_sweep(capsys):
    code, out, _ = run(
        capsys,
        "compare",
        "--no-prop",
        "--fo",
        "--fo-ind-vars",
        "x",
        "--fo-size",
        "4",
        "--fo-individuals",
        "2",
    )
    assert code == 0
    assert "quantified" in out


def test_compare_reports_are_byte_identical(tmp_path, capsys):
    out1 = tmp_path / "r1.json"
    out2 = tmp_path / "r2.json"
    args = ["compare", "--vars", "2", "--prop-depth", "2", "--json"]
    assert main(args + ["--out", str(out1)]) == 0
    assert main(args + ["--out", str(out2)]) == 0
    capsys.readouterr()
    assert out1.read_bytes() == out2.read_bytes()


def test_compare_sampled_reports_are_byte_identical(tmp_path, capsys):
    out1 = tmp_path / "s1.json"
    out2 = tmp_path / "s2.json"
    args = [
        "compare", "--vars", "1", "--mode", "sampled", "--seed", "7",
        "--count", "5", "--json",
    ]
    assert main(args + ["--out", str(out1)]) == 0
    assert main(args + ["--out", str(out2)]) == 0
    capsys.readouterr()
    assert out1.read_bytes() == out2.read_bytes()


def test_compare_text_header_reports_seed(capsys):
    code, out, _ = run(
        capsys, "compare", "--vars", "1", "--mode", "sampled", "--seed", "3",
        "--count", "2",
    )
    assert code == 0
    assert "seed=3" in out


# ---------------------------------------------------------------------------
# check-proof

def test_check_proof_valid_corpus(capsys):
    path = str(PROOFS / "valid" / "imp_self.proof")
    code, out, _ = run(capsys, "check-proof", path)
    assert code == 0
    assert "proof valid" in out


def test_check_proof_invalid_corpus(capsys):
    path = str(PROOFS / "invalid" / "bad_mp_antecedent.proof")
    code, out, _ = run(capsys, "check-proof", path)
    assert code == 1
    assert "proof INVALID" in out


def test_check_proof_json(capsys):
    path = str(PROOFS / "valid" / "taut_instance.proof")
    code, out, _ = run(capsys, "check-proof", path, "--json")
    data = json.loads(out)
    assert code == 0
    assert data["valid"] is True


def test_check_proof_missing_file(capsys):
    code, _, err = run(capsys, "check-proof", "/nonexistent.proof")
    assert code == 2


def test_check_proof_no_semantic_flag(capsys):
    path = str(PROOFS / "valid" / "taut_instance.proof")
    code, out, _ = run(capsys, "check-proof", path, "--no-semantic")
    assert code == 0
    assert "tautology" not in out


# ---------------------------------------------------------------------------
# usage errors

def test_unknown_subcommand_exits_2(capsys):
    assert main(["frobnicate"]) == 2


def test_no_arguments_exits_2(capsys):
    assert main([]) == 2


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "report.txt"
    code = main(["taut", "p v ~p", "--out", str(target)])
    capsys.readouterr()
    assert code == 0
    assert target.read_text().strip() == "tautology"
