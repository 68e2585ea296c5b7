import json

import pytest

from flopk.cli import canonical_json, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv)
    return code, json.loads(out)


# ---------------------------------------------------------------------------
# Individual commands
# ---------------------------------------------------------------------------

def test_kbasis(capsys):
    code, payload = run_json(capsys, "kbasis", "--t", "2", "--h", "4")
    assert code == 0
    assert payload == {
        "basis": ["-", "1", "2", "1,1", "2,1", "2,2"],
        "box": [2, 2],
        "rank": 6,
    }


def test_check_iso(capsys):
    code, payload = run_json(capsys, "check-iso", "--t", "2", "--h", "4")
    assert code == 0
    assert payload["isomorphism"] is True
    assert payload["det"] in ("1", "-1")


def test_flop_matrix_schema_and_round_trip(capsys):
    code, out = run_cli(capsys, "flop-matrix", "--t", "1", "--h", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["box"] == [1, 2]
    assert payload["basis"] == ["-", "1", "2"]
    assert payload["matrix"] == [["1", "3", "6"], ["0", "-3", "-8"], ["0", "1", "3"]]
    assert payload["det"] in ("1", "-1")
    assert payload["snf"] == ["1", "1", "1"]
    # canonical JSON round trip is byte-identical
    assert canonical_json(json.loads(out)) == out.strip()


def test_snf_of_flop_matrix(capsys):
    code, payload = run_json(capsys, "snf", "--t", "2", "--h", "4")
    assert code == 0
    assert payload["snf"] == ["1"] * 6


def test_snf_explicit_matrix(capsys):
    code, payload = run_json(capsys, "snf", "--matrix", "[[2,0],[0,3]]")
    assert code == 0
    assert payload["snf"] == ["1", "6"]


def test_counterexample(capsys):
    code, payload = run_json(capsys, "counterexample")
    assert code == 0
    assert payload["index"] == 2
    assert payload["snf"] == [1, 1, 2]
    assert payload["images"]["O+(1)"] == ["-3", "6", "-2"]
    assert payload["basis"] == "line"


def test_counterexample_canonical(capsys):
    code, payload = run_json(capsys, "counterexample", "--canonical-basis")
    assert code == 0
    assert payload["index"] == 2
    assert payload["snf"] == [1, 1, 2]
    assert payload["target_basis"] == ["S^-", "S^1", "S^2"]


def test_bott_zero_and_nonzero(capsys):
    # a leading minus sign needs the --weight=... form, as usual
    code, payload = run_json(
        capsys, "bott", "--t", "2", "--h", "4", "--weight=-2,-2|0,0"
    )
    assert code == 0
    assert payload == {"zero": True}
    code, payload = run_json(capsys, "bott", "--weight", "1|0,0")
    assert code == 0
    assert payload == {"degree": 0, "dim": 3}


def test_hodge(capsys):
    code, payload = run_json(capsys, "hodge", "--t", "2", "--h", "4")
    assert code == 0
    assert payload["diagonal"] == [1, 1, 2, 1, 1]


def test_gamma_and_quadric(capsys):
    code, payload = run_json(capsys, "gamma", "--point", "1,1,2,3,4")
    assert code == 0
    assert payload == {
        "image": ["1", "3", "4", "-1", "-2", "-2"],
        "indeterminate": False,
    }
    code, payload = run_json(capsys, "gamma", "--point", "0,1,2,3,6")
    assert payload["indeterminate"] is True
    code, payload = run_json(
        capsys, "quadric", "--point", "1,3,4,-1,-2,-2", "--field", "32003"
    )
    assert code == 0
    assert payload == {"on_quadric": True, "value": "0"}


def test_springer_fiber(capsys):
    code, payload = run_json(
        capsys, "springer-fiber", "--t", "2", "--h", "4", "--i", "2"
    )
    assert code == 0
    assert payload == {"dim": 0, "grassmann": [0, 0]}


def test_weyl_word(capsys):
    code, payload = run_json(capsys, "weyl-word", "--h", "5")
    assert code == 0
    assert payload == {
        "h": 5,
        "length": 7,
        "sigma": [5, 2, 3, 4, 1],
        "word": [1, 2, 3, 4, 3, 2, 1],
    }


def test_chamber_sort(capsys):
    code, payload = run_json(capsys, "chamber-sort", "--vector", "1,3,2,4")
    assert code == 0
    assert payload == {"length": 5, "sigma": [4, 2, 3, 1], "word": [1, 2, 3, 2, 1]}


# ---------------------------------------------------------------------------
# Errors and exit codes
# ---------------------------------------------------------------------------

def test_usage_error_missing_params(capsys):
    assert main(["kbasis"]) == 2
    capsys.readouterr()


def test_usage_error_flop_hypothesis(capsys):
    # flop commands require t <= h/2
    assert main(["check-iso", "--t", "3", "--h", "4"]) == 2
    capsys.readouterr()


def test_wall_point_is_structured_error(capsys):
    code, out = run_cli(capsys, "chamber-sort", "--vector", "1,1,2")
    assert code == 1
    payload = json.loads(out)
    assert payload["error"]["type"] == "RegularityViolation"


def test_bad_weight_is_usage_error(capsys):
    assert main(["bott", "--weight", "nonsense"]) == 2
    capsys.readouterr()


def test_bad_field_is_usage_error(capsys):
    code, out = run_cli(capsys, "quadric", "--point", "1,1,1,1,1,1", "--field", "10")
    assert code == 2


# ---------------------------------------------------------------------------
# Output formats and determinism
# ---------------------------------------------------------------------------

def test_table_format(capsys):
    code, out = run_cli(capsys, "flop-matrix", "--t", "1", "--h", "2", "--format", "table")
    assert code == 0
    assert "det: " in out


def test_json_outputs_deterministic(capsys):
    first = run_cli(capsys, "counterexample")[1]
    second = run_cli(capsys, "counterexample")[1]
    assert first == second


@pytest.mark.parametrize(
    "argv",
    [
        ("kbasis", "--t", "2", "--h", "5"),
        ("flop-matrix", "--t", "2", "--h", "4"),
        ("counterexample",),
        ("hodge", "--t", "2", "--h", "4"),
        ("weyl-word", "--h", "6"),
        ("springer-fiber", "--t", "2", "--h", "6", "--i", "1"),
    ],
    ids=lambda a: a[0],
)
def test_json_round_trip_byte_identical(capsys, argv):
    code, out = run_cli(capsys, *argv)
    assert code == 0
    assert canonical_json(json.loads(out)) == out.strip()


def test_verify_all_table(capsys):
    code, out = run_cli(capsys, "verify-all", "--format", "table")
    assert code == 0
    lines = [l for l in out.splitlines() if l.startswith(("PASS", "FAIL"))]
    assert len(lines) == 10
    assert all(l.startswith("PASS") for l in lines)
