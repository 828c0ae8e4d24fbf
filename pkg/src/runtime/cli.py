# -*- coding: utf-8 -*-
"""Command-line front end: compose, polar, wigner, classify, matrices over JSON."""

import argparse
import math
import sys

import numpy as np

from src.core.calg import E1, cvec
from src.core.errors import SchemaViolation, TurnsError
from src.core.group import (
    OrbitTag,
    adjoint_rotation,
    classify_orbit,
    lorentz_matrix,
    multiply,
    reduce_to_canonical,
    to_matrix,
)
from src.core.polar import matrix_polar_oracle, polar_factors, polar_turns, reconstruct
from src.core.turns import compose, element_of, turn_of
from src.core.wigner import BoostSpec, boost_deflection, compose_boosts, resultant_rapidity, wigner_angle
from src.runtime import codec
from src.runtime.contracts import (
    EXIT_CODE_BY_KIND,
    CommandName,
    ErrorCode,
    ExitCode,
    ResultEnvelope,
    ResultPath,
)
from src.utils.config_manager import config_manager
from src.utils.logger import app_logger


def _envelope(command, payload, output, path):
    return ResultEnvelope(
        command=command,
        input=payload,
        output=output,
        path=path,
        tolerances=config_manager.get_tolerances().to_dict(),
    )


def _turn_to_json(turn):
    return {"tail": codec.vector_to_json(turn.tail), "head": codec.vector_to_json(turn.head)}


def _factors_to_json(factors):
    return {
        "beta": factors.beta,
        "k_b": codec.real_vector_to_json(factors.k_b),
        "epsilon": factors.epsilon,
        "k_r": codec.real_vector_to_json(factors.k_r),
        "sign": factors.sign,
        "branch": factors.branch.value,
    }


def _angle_gap(first, second):
    gap = abs(first - second) % (2 * math.pi)
    return min(gap, 2 * math.pi - gap)


def _require_fields(payload, keys):
    if not isinstance(payload, dict):
        raise SchemaViolation(f"input: expected an object, got {type(payload).__name__}")
    missing = [key for key in keys if key not in payload]
    if missing:
        raise SchemaViolation(f"input: missing field(s) {', '.join(missing)}")


def cmd_compose(payload):
    """Product left∘right through the turn calculus, checked against the matrix product."""
    _require_fields(payload, ("left", "right"))
    left = codec.element_from_json(payload["left"], "left")
    right = codec.element_from_json(payload["right"], "right")

    composition = compose(turn_of(left), turn_of(right))
    product_json = codec.element_to_json(element_of(composition.turn))
    oracle_json = codec.element_to_json(multiply(left, right))
    output = {
        "product": product_json,
        "oracle": oracle_json,
        "max_deviation": codec.max_deviation(product_json, oracle_json),
        "turn": _turn_to_json(composition.turn),
        "meet": codec.vector_to_json(composition.meet),
        "factor_axis": codec.vector_to_json(composition.w),
    }
    return _envelope(CommandName.COMPOSE, payload, output, ResultPath(composition.path.value))


def cmd_polar(payload):
    element = codec.element_from_json(payload)
    factors = polar_factors(element)
    oracle = matrix_polar_oracle(element)
    rotation_turn, boost_turn = polar_turns(element)

    element_json = codec.element_to_json(element)
    reconstructed_json = codec.element_to_json(reconstruct(factors))
    output = {
        "factors": _factors_to_json(factors),
        "rotation_turn": _turn_to_json(rotation_turn),
        "boost_turn": _turn_to_json(boost_turn),
        "reconstructed": reconstructed_json,
        "max_deviation": codec.max_deviation(reconstructed_json, element_json),
        "oracle": _factors_to_json(oracle),
        "oracle_deviation": max(abs(factors.beta - oracle.beta), _angle_gap(factors.epsilon, oracle.epsilon)),
    }
    return _envelope(CommandName.POLAR, payload, output, ResultPath.ALGEBRAIC)


def _wigner_inputs(payload):
    _require_fields(payload, ("beta_m", "beta_n"))
    beta_m = codec.real_from_json(payload["beta_m"], "beta_m")
    beta_n = codec.real_from_json(payload["beta_n"], "beta_n")
    has_m, has_n = "m" in payload, "n" in payload
    if has_m != has_n:
        raise SchemaViolation("input: give both m and n, or neither")

    if has_m:
        first = BoostSpec(beta_m, codec.real_vector_from_json(payload["m"], "m"))
        second = BoostSpec(beta_n, codec.real_vector_from_json(payload["n"], "n"))
        theta = math.atan2(
            float(np.linalg.norm(np.cross(first.direction, second.direction))),
            float(first.direction @ second.direction),
        )
        return first, second, theta

    _require_fields(payload, ("theta",))
    theta = codec.real_from_json(payload["theta"], "theta")
    # n̂ = e1, m̂ at angle θ in the e1-e2 plane
    first = BoostSpec(beta_m, cvec(math.cos(theta), math.sin(theta), 0.0))
    second = BoostSpec(beta_n, E1)
    return first, second, theta


def cmd_wigner(payload):
    """Closed-form Wigner quantities next to the constructive turn pipeline."""
    first, second, theta = _wigner_inputs(payload)
    beta_m, beta_n = first.beta, second.beta
    closed_form = {
        "epsilon": wigner_angle(beta_m, beta_n, theta),
        "beta_res": resultant_rapidity(beta_m, beta_n, theta),
        "phi": boost_deflection(beta_m, beta_n, theta),
    }
    result = compose_boosts(first, second)
    constructive = {
        "epsilon": result.epsilon,
        "beta_res": result.beta_res,
        "phi": result.phi,
        "k_r": codec.real_vector_to_json(result.k_r),
        "k_b": codec.real_vector_to_json(result.k_b),
        "meet": codec.vector_to_json(result.meet),
    }
    output = {
        "theta": theta,
        "closed_form": closed_form,
        "constructive": constructive,
        "product": codec.element_to_json(result.product),
        "max_deviation": max(abs(closed_form[key] - constructive[key]) for key in closed_form),
    }
    return _envelope(CommandName.WIGNER, payload, output, ResultPath(result.path.value))


def cmd_classify(payload):
    _require_fields(payload, ("z",))
    z = codec.vector_from_json(payload["z"], "z")
    orbit = classify_orbit(z)
    output = {"tag": orbit.tag.value, "r": orbit.r, "phi": orbit.phi}
    if orbit.tag == OrbitTag.ZERO:
        output.update({"canonical": None, "reducing_element": None, "max_deviation": None})
    else:
        reducer, canonical = reduce_to_canonical(z)
        image = adjoint_rotation(reducer) @ np.asarray(z)
        output.update(
            {
                "canonical": codec.vector_to_json(canonical),
                "reducing_element": codec.element_to_json(reducer),
                "max_deviation": float(np.max(np.abs(image - np.asarray(canonical)))),
            }
        )
    return _envelope(CommandName.CLASSIFY, payload, output, ResultPath.ALGEBRAIC)


def cmd_matrices(payload):
    element = codec.element_from_json(payload)
    output = {
        "element": codec.element_to_json(element),
        "sl2c": codec.matrix_to_json(to_matrix(element)),
        "so3c": codec.matrix_to_json(adjoint_rotation(element)),
        "so31": codec.matrix_to_json(lorentz_matrix(element)),
    }
    return _envelope(CommandName.MATRICES, payload, output, ResultPath.ALGEBRAIC)


COMMANDS = {
    CommandName.COMPOSE: cmd_compose,
    CommandName.POLAR: cmd_polar,
    CommandName.WIGNER: cmd_wigner,
    CommandName.CLASSIFY: cmd_classify,
    CommandName.MATRICES: cmd_matrices,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", default="-", help="JSON input file, or - for stdin")
    common.add_argument("--pretty", action="store_true", help="indent the JSON output")
    common.add_argument("--verbose", action="store_true", help="debug logging on stderr")

    parser = argparse.ArgumentParser(prog="turns", description="Hamilton turns for SL(2,C).")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in CommandName:
        subparsers.add_parser(command.value, parents=[common])
    return parser


def _read_input(source, stdin):
    if source == "-":
        return codec.loads(stdin.read(), "stdin")
    try:
        with open(source, "r", encoding="utf-8") as handle:
            return codec.loads(handle.read(), source)
    except OSError as e:
        raise SchemaViolation(f"cannot read input file {source}: {e.strerror}")


def run(argv=None, stdin=None, stdout=None):
    """Execute one command; returns the process exit code."""
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    args = build_parser().parse_args(argv)
    if args.verbose:
        app_logger.set_level("DEBUG")

    try:
        payload = _read_input(args.input, stdin)
        envelope = COMMANDS[CommandName(args.command)](payload)
        stdout.write(codec.dumps(envelope.to_dict(), pretty=args.pretty) + "\n")
        return int(ExitCode.OK)
    except TurnsError as e:
        app_logger.warning(f"{args.command} 失败: {e.error_code.value}: {e.user_message}")
        error = {"error": {"code": e.error_code.value, "message": e.user_message}}
        stdout.write(codec.dumps(error, pretty=args.pretty) + "\n")
        return int(EXIT_CODE_BY_KIND.get(e.kind, ExitCode.NUMERICAL_FAILURE))
    except Exception as e:
        app_logger.error(f"{args.command} 内部错误: {str(e)}")
        error = {"error": {"code": ErrorCode.INTERNAL_ERROR.value, "message": "internal error"}}
        stdout.write(codec.dumps(error, pretty=args.pretty) + "\n")
        return int(ExitCode.NUMERICAL_FAILURE)


def main(argv=None):
    return run(argv)


if __name__ == "__main__":
    raise SystemExit(main())
