"""Tests for the command-line front end: reports, exit codes and determinism."""

import json

import pytest

from run_cli import main
from jobs import EXIT_INPUT_ERROR, EXIT_OK, EXIT_POLE, EXIT_VERIFICATION_FAILED

from conftest import SAMPLE_DIR

FAST_VERIFY = {
    "verification": {"check_prop1": False, "diagonal_points": 5, "griess_samples": 1},
    "global_settings": {"log_level": "WARNING"},
}


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


@pytest.fixture
def fast_config(write_json):
    return write_json("fast.json", FAST_VERIFY)


def test_diagrams_for_four_pairs(capsys):
    code, out = run(capsys, "--command", "diagrams", "--n", "4")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[:4] == ["# command: diagrams", "# seed: 7", "# bound: -", "# r: symbolic"]
    assert "derangements: 9" in lines
    assert "diagrams: 60" in lines


def test_diagrams_json(capsys):
    code, report = run_json(capsys, "--command", "diagrams", "--n", "3")
    assert code == EXIT_OK
    assert report["derangement_count"] == 2
    assert report["diagram_count"] == 8
    assert sorted(entry["fibre_size"] for entry in report["derangements"]) == [4, 4]
    assert all(entry["cycles"] in ("(123)", "(132)") for entry in report["diagrams"])


def test_single_pair_has_no_diagrams(capsys):
    code, report = run_json(capsys, "--command", "diagrams", "--n", "1")
    assert code == EXIT_OK
    assert report["derangement_count"] == 0
    assert report["diagram_count"] == 0


def test_virasoro_value_at_a_point(capsys):
    code, out = run(capsys, "--command", "virasoro", "--n", "2", "--points", "z1=1,z2=0", "--r", "2")
    assert code == EXIT_OK
    assert "value = 1" in out.splitlines()


def test_single_virasoro_field_has_zero_correlator(capsys):
    code, report = run_json(capsys, "--command", "virasoro", "--n", "1", "--points", "z1=1/2")
    assert code == EXIT_OK
    assert report["terms"] == []
    assert report["value"] == []


def test_correlator_from_a_sample_file(capsys):
    code, report = run_json(capsys, "--command", "correlator", "--input", str(SAMPLE_DIR / "virasoro_n4.json"),
                            "--r", "1/2", "--points", "z1=3,z2=1,z3=-1,z4=1/2")
    assert code == EXIT_OK
    assert report["header"]["r"] == "1/2"
    assert len(report["terms"]) == 9
    assert {term["value_at_r"] for term in report["terms"]} == {"1/16", "1/4"}
    assert "value" in report


def test_two_variable_form_and_expansion(capsys):
    code, report = run_json(capsys, "--command", "correlator", "--input", str(SAMPLE_DIR / "virasoro_n2.json"),
                            "--prop2", "--expand", "--bound", "2")
    assert code == EXIT_OK
    assert report["header"]["bound"] == 2
    assert len(report["prop2_terms"]) == 2
    assert report["series"]["variables"] == ["z1", "z2"]
    assert report["prop2_series"]["variables"] == ["z1", "w1", "z2", "w2"]
    leading = {tuple(t["exponents"]): t["coeff"] for t in report["prop2_series"]["terms"]}
    assert leading[(-2, -2, 0, 0)] == ["0", "1/2"]


def test_symbolic_four_pair_display_ordering(capsys):
    code, out = run(capsys, "--command", "correlator", "--n", "4")
    assert code == EXIT_OK
    lines = out.splitlines()
    body = lines[lines.index("n = 4, 9 terms") + 1:]
    assert [line.split()[0] for line in body] == [
        "(12)(34)", "(13)(24)", "(14)(23)",
        "(1234)", "(1243)", "(1324)", "(1342)", "(1423)", "(1432)",
    ]
    assert "1/64 r^2 Tr(L1L2)Tr(L3L4) / (z1-z2)^4 (z3-z4)^4" in body[0]
    assert "1/32 r Tr(L1L2L3L4)" in body[3]


def test_symbolic_display_cannot_be_evaluated(capsys):
    code, out = run(capsys, "--command", "correlator", "--n", "2", "--points", "z1=1,z2=0")
    assert code == EXIT_INPUT_ERROR
    assert out.splitlines()[-1].startswith("ERROR:")


def test_malformed_input_file(capsys, write_json):
    path = write_json("bad.json", {"dim": 1, "gram": [["1"]]})
    code, report = run_json(capsys, "--command", "correlator", "--input", path)
    assert code == EXIT_INPUT_ERROR
    assert report["status"] == "ERROR"
    assert "pairs" in report["error"]


def test_degenerate_gram_matrix(capsys, write_json):
    path = write_json("degenerate.json", {"dim": 2, "gram": [[1, 1], [1, 1]], "pairs": []})
    code, _ = run(capsys, "--command", "correlator", "--input", path)
    assert code == EXIT_INPUT_ERROR


def test_missing_input_file(capsys):
    code, _ = run(capsys, "--command", "correlator", "--input", "does/not/exist.json")
    assert code == EXIT_INPUT_ERROR


def test_invalid_r(capsys):
    code, out = run(capsys, "--command", "virasoro", "--n", "2", "--r", "two")
    assert code == EXIT_INPUT_ERROR
    assert "ERROR: r must be" in out


def test_malformed_points(capsys):
    code, _ = run(capsys, "--command", "virasoro", "--n", "2", "--points", "z1:1")
    assert code == EXIT_INPUT_ERROR


def test_coincident_points_are_a_pole(capsys):
    code, out = run(capsys, "--command", "virasoro", "--n", "2", "--points", "z1=1/2,z2=2/4")
    assert code == EXIT_POLE
    assert "ERROR: pole at evaluation point: z1 = z2" in out


def test_missing_variable(capsys):
    code, _ = run(capsys, "--command", "virasoro", "--n", "3", "--points", "z1=1,z2=0")
    assert code == EXIT_INPUT_ERROR


def test_verify_virasoro_data(capsys, fast_config):
    code, out = run(capsys, "--command", "verify", "--input", str(SAMPLE_DIR / "virasoro_n2.json"),
                    "--config", fast_config)
    assert code == EXIT_OK
    lines = out.splitlines()
    assert "# bound: 6" in lines
    assert lines[-1] == "RESULT: PASS"
    assert any(line.startswith("PASS  virasoro_coefficients") for line in lines)


def test_verify_random_datasets(capsys, fast_config):
    code, report = run_json(capsys, "--command", "verify", "--n", "2", "--dim", "2", "--bound", "4",
                            "--seed", "3", "--config", fast_config)
    assert code == EXIT_OK
    assert report["status"] == "PASS"
    assert report["datasets"] == 3
    assert report["header"] == {"command": "verify", "seed": 3, "bound": 4, "r": "symbolic"}


def test_verify_three_generic_pairs(capsys, fast_config):
    code, report = run_json(capsys, "--command", "verify", "--n", "3", "--dim", "2", "--bound", "2",
                            "--config", fast_config)
    assert code == EXIT_OK
    assert report["status"] == "PASS"
    assert report["vacuous_datasets"] == []
    fibre_checks = [check for check in report["checks"] if check["name"] == "fibre_sum"]
    assert len(fibre_checks) == 3
    # one class {(123), (132)}: the class sum and the inverse symmetry
    assert all(check["cases"] == 2 for check in fibre_checks)


def test_verify_negative_control(capsys, fast_config):
    code, report = run_json(capsys, "--command", "verify", "--input", str(SAMPLE_DIR / "virasoro_n2.json"),
                            "--corrupt", "--config", fast_config)
    assert code == EXIT_VERIFICATION_FAILED
    assert report["status"] == "FAIL"
    assert report["first_failure"]["check"] == "theorem1_oracle"
    assert report["first_failure"]["expected"] != report["first_failure"]["actual"]


def test_verify_needs_data(capsys):
    code, _ = run(capsys, "--command", "verify")
    assert code == EXIT_INPUT_ERROR


def test_output_is_deterministic(capsys, fast_config):
    argv = ("--command", "verify", "--n", "2", "--dim", "1", "--bound", "3", "--seed", "5", "--config", fast_config)
    first = run(capsys, *argv, "--format", "json")
    second = run(capsys, *argv, "--format", "json")
    assert first == second


def test_unknown_command_is_rejected_by_the_parser():
    with pytest.raises(SystemExit):
        main(["--command", "plot"])
