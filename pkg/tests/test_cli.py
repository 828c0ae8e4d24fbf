# -*- coding: utf-8 -*-
"""Tests for the JSON command-line front end."""

import io
import json
import math

import numpy as np
import pytest

import src.runtime.cli as cli
from src.core.errors import NumericalDegeneracy
from src.core.group import adjoint_rotation
from src.runtime import codec


def _run(command, payload, *extra):
    stdin = io.StringIO(payload if isinstance(payload, str) else json.dumps(payload))
    stdout = io.StringIO()
    exit_code = cli.run([command, *extra], stdin=stdin, stdout=stdout)
    return exit_code, json.loads(stdout.getvalue())


def _complex_vector(values):
    return [[complex(v).real, complex(v).imag] for v in values]


def _angle_gap(first, second):
    gap = abs(first - second) % (2 * math.pi)
    return min(gap, 2 * math.pi - gap)


def _assert_polar_deviations(payload, output):
    element_json = codec.element_to_json(codec.element_from_json(payload))
    assert output["max_deviation"] == codec.max_deviation(output["reconstructed"], element_json)
    factors, oracle = output["factors"], output["oracle"]
    expected = max(abs(factors["beta"] - oracle["beta"]), _angle_gap(factors["epsilon"], oracle["epsilon"]))
    assert output["oracle_deviation"] == expected


def _assert_wigner_deviation(output):
    closed_form, constructive = output["closed_form"], output["constructive"]
    expected = max(abs(closed_form[key] - constructive[key]) for key in ("epsilon", "beta_res", "phi"))
    assert output["max_deviation"] == expected


def _assert_classify_deviation(payload, output):
    reducer = codec.element_from_json(output["reducing_element"])
    image = adjoint_rotation(reducer) @ np.asarray(codec.vector_from_json(payload["z"], "z"))
    canonical = np.asarray(codec.vector_from_json(output["canonical"], "canonical"))
    assert output["max_deviation"] == float(np.max(np.abs(image - canonical)))


IDENTITY_JSON = {"a0": [1.0, 0.0], "a": _complex_vector([0, 0, 0])}


def test_compose_two_boosts_takes_the_geometric_path():
    payload = {
        "left": {"boost": {"rapidity": 1.0, "axis": [1, 0, 0]}},
        "right": {"boost": {"rapidity": 1.0, "axis": [0, 1, 0]}},
    }
    exit_code, envelope = _run("compose", payload)

    assert exit_code == 0
    assert envelope["schema_version"] == "hamilton_turns.envelope.v1"
    assert envelope["command"] == "compose"
    assert envelope["path"] == "geometric"
    assert envelope["input"] == payload
    assert envelope["tolerances"]["meet_tol"] == pytest.approx(1e-9)

    output = envelope["output"]
    assert output["factor_axis"] is None
    np.testing.assert_allclose(np.array(output["meet"])[:, 0], [0.0, 0.0, 1.0], atol=1e-15)
    assert output["product"]["a0"][0] == pytest.approx(math.cosh(0.5) ** 2, abs=1e-12)
    assert output["max_deviation"] <= 1e-12
    assert output["max_deviation"] == codec.max_deviation(output["product"], output["oracle"])


def test_compose_parallel_rotations_reports_the_factor_axis():
    rotation_json = {"rotation": {"angle": math.pi, "axis": [0, 0, 1]}}
    exit_code, envelope = _run("compose", {"left": rotation_json, "right": rotation_json})

    assert exit_code == 0
    assert envelope["path"] == "degenerate-factorized"
    output = envelope["output"]
    assert output["meet"] is None
    assert output["factor_axis"] == _complex_vector([1, 0, 0])
    assert output["product"]["a0"][0] == pytest.approx(-1.0, abs=1e-12)
    assert output["max_deviation"] <= 1e-12


def test_polar_reads_back_a_pure_boost():
    payload = {"boost": {"rapidity": 2.0, "axis": [1, 0, 0]}}
    exit_code, envelope = _run("polar", payload)

    assert exit_code == 0
    assert envelope["path"] == "algebraic"
    output = envelope["output"]
    assert output["factors"]["beta"] == pytest.approx(2.0, abs=1e-14)
    assert output["factors"]["k_b"] == pytest.approx([1.0, 0.0, 0.0], abs=1e-15)
    assert output["factors"]["epsilon"] == 0.0
    assert output["factors"]["branch"] == "commuting"
    assert output["max_deviation"] <= 1e-12
    assert output["oracle_deviation"] <= 1e-8
    assert set(output["rotation_turn"]) == {"tail", "head"}
    _assert_polar_deviations(payload, output)


def test_polar_of_identity():
    exit_code, envelope = _run("polar", IDENTITY_JSON)
    assert exit_code == 0
    factors = envelope["output"]["factors"]
    assert factors["beta"] == 0.0
    assert factors["sign"] == 1
    assert factors["k_r"] == [1.0, 0.0, 0.0]
    _assert_polar_deviations(IDENTITY_JSON, envelope["output"])


def test_wigner_with_an_opening_angle():
    exit_code, envelope = _run("wigner", {"beta_m": 1.0, "beta_n": 1.0, "theta": math.pi / 2})

    assert exit_code == 0
    assert envelope["path"] == "geometric"
    output = envelope["output"]
    assert output["closed_form"]["epsilon"] == pytest.approx(0.4207840, abs=1e-6)
    assert output["closed_form"]["beta_res"] == pytest.approx(1.5133745, abs=1e-6)
    assert output["closed_form"]["phi"] == pytest.approx(0.575006, abs=1e-6)
    assert output["constructive"]["epsilon"] == pytest.approx(output["closed_form"]["epsilon"], abs=1e-9)
    assert output["max_deviation"] <= 1e-9
    assert output["product"]["a0"][1] == pytest.approx(0.0, abs=1e-12)
    _assert_wigner_deviation(output)


def test_wigner_with_explicit_directions():
    payload = {"beta_m": 0.5, "beta_n": 2.0, "m": [0, 1, 0], "n": [1, 0, 0]}
    exit_code, envelope = _run("wigner", payload)

    assert exit_code == 0
    output = envelope["output"]
    assert output["theta"] == pytest.approx(math.pi / 2, abs=1e-15)
    assert output["constructive"]["k_r"] == pytest.approx([0.0, 0.0, -1.0], abs=1e-12)
    assert output["max_deviation"] <= 1e-9
    _assert_wigner_deviation(output)


def test_wigner_collinear_boosts():
    exit_code, envelope = _run("wigner", {"beta_m": 1.0, "beta_n": 1.0, "theta": 0.0})

    assert exit_code == 0
    assert envelope["path"] == "degenerate-factorized"
    output = envelope["output"]
    assert output["constructive"]["epsilon"] == 0.0
    assert output["constructive"]["beta_res"] == pytest.approx(2.0, abs=1e-12)
    assert output["constructive"]["meet"] is None
    _assert_wigner_deviation(output)


def test_wigner_antiparallel_equal_rapidities_cancel():
    exit_code, envelope = _run("wigner", {"beta_m": 1.0, "beta_n": 1.0, "theta": math.pi})

    assert exit_code == 0
    assert envelope["path"] == "degenerate-factorized"
    output = envelope["output"]
    assert output["closed_form"] == {"epsilon": output["closed_form"]["epsilon"], "beta_res": 0.0, "phi": 0.0}
    assert output["constructive"]["beta_res"] == 0.0
    assert output["constructive"]["phi"] == 0.0
    assert output["max_deviation"] <= 1e-15
    assert output["product"]["a0"][0] == pytest.approx(1.0, abs=1e-12)
    _assert_wigner_deviation(output)


def test_wigner_requires_both_directions():
    exit_code, envelope = _run("wigner", {"beta_m": 1.0, "beta_n": 1.0, "m": [1, 0, 0]})
    assert exit_code == 2
    assert envelope["error"]["code"] == "SCHEMA_VIOLATION"


def test_classify_null_vector():
    payload = {"z": _complex_vector([1, 1j, 0])}
    exit_code, envelope = _run("classify", payload)

    assert exit_code == 0
    output = envelope["output"]
    assert output["tag"] == "TypeII"
    assert output["r"] is None
    assert output["canonical"] == _complex_vector([1, 1j, 0])
    assert output["max_deviation"] <= 1e-12
    _assert_classify_deviation(payload, output)


def test_classify_type_one_and_zero():
    payload = {"z": _complex_vector([2, 0, 0])}
    exit_code, envelope = _run("classify", payload)
    assert exit_code == 0
    output = envelope["output"]
    assert output["tag"] == "TypeI"
    assert output["r"] == pytest.approx(2.0)
    assert output["phi"] == pytest.approx(0.0, abs=1e-15)
    assert output["max_deviation"] <= 1e-12
    _assert_classify_deviation(payload, output)

    exit_code, envelope = _run("classify", {"z": _complex_vector([0, 0, 0])})
    assert exit_code == 0
    assert envelope["output"]["tag"] == "Zero"
    assert envelope["output"]["canonical"] is None


def test_matrices_of_identity():
    exit_code, envelope = _run("matrices", IDENTITY_JSON)

    assert exit_code == 0
    output = envelope["output"]
    assert output["sl2c"] == [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]]
    np.testing.assert_allclose(np.array(output["so31"]), np.eye(4), atol=1e-15)
    np.testing.assert_allclose(np.array(output["so3c"])[..., 0], np.eye(3), atol=1e-15)


@pytest.mark.parametrize(
    "command, payload, code",
    [
        ("compose", "{not json", "SCHEMA_VIOLATION"),
        ("compose", {"left": IDENTITY_JSON}, "SCHEMA_VIOLATION"),
        ("polar", {"a0": [2.0, 0.0], "a": _complex_vector([0, 0, 0])}, "CONSTRAINT_VIOLATION"),
        ("polar", {"a0": [1.0, 0.0], "a": [[0, 0], [0, 0]]}, "SCHEMA_VIOLATION"),
        ("polar", {"rotation": {"angle": 1.0, "axis": [0, 0, 2]}}, "CONSTRAINT_VIOLATION"),
        ("wigner", {"beta_m": -1.0, "beta_n": 1.0, "theta": 1.0}, "PARAMETER_OUT_OF_RANGE"),
        ("wigner", {"beta_m": 1.0, "beta_n": 1.0, "theta": True}, "SCHEMA_VIOLATION"),
        ("classify", {"z": [1, 2, 3]}, "SCHEMA_VIOLATION"),
    ],
)
def test_input_errors_exit_with_code_two(command, payload, code):
    exit_code, envelope = _run(command, payload)
    assert exit_code == 2
    assert envelope == {"error": {"code": code, "message": envelope["error"]["message"]}}
    assert envelope["error"]["message"]


def test_numerical_failures_exit_with_code_three(monkeypatch):
    def failing(_element):
        raise NumericalDegeneracy("forced failure")

    monkeypatch.setattr(cli, "polar_factors", failing)
    exit_code, envelope = _run("polar", IDENTITY_JSON)
    assert exit_code == 3
    assert envelope["error"] == {"code": "NUMERICAL_DEGENERACY", "message": "forced failure"}


def test_unexpected_errors_are_reported_as_internal(monkeypatch):
    def broken(_element):
        raise RuntimeError("boom")

    monkeypatch.setattr(cli, "matrix_polar_oracle", broken)
    exit_code, envelope = _run("polar", IDENTITY_JSON)
    assert exit_code == 3
    assert envelope["error"] == {"code": "INTERNAL_ERROR", "message": "internal error"}


def test_output_is_byte_identical_across_runs():
    payload = json.dumps({"left": {"rotation": {"angle": 0.7, "axis": [0, 0, 1]}}, "right": IDENTITY_JSON})
    outputs = []
    for _ in range(2):
        stdout = io.StringIO()
        assert cli.run(["compose", "--pretty"], stdin=io.StringIO(payload), stdout=stdout) == 0
        outputs.append(stdout.getvalue())
    assert outputs[0] == outputs[1]
    assert outputs[0].startswith("{\n  ")


def test_input_file_argument(tmp_path):
    input_path = tmp_path / "element.json"
    input_path.write_text(json.dumps(IDENTITY_JSON), encoding="utf-8")
    stdout = io.StringIO()
    assert cli.run(["matrices", "--input", str(input_path)], stdout=stdout) == 0
    assert json.loads(stdout.getvalue())["command"] == "matrices"

    stdout = io.StringIO()
    assert cli.run(["matrices", "--input", str(tmp_path / "missing.json")], stdout=stdout) == 2
    assert json.loads(stdout.getvalue())["error"]["code"] == "SCHEMA_VIOLATION"
