# -*- coding: utf-8 -*-
"""JSON codec for elements, vectors and matrices.

Complex numbers travel as explicit ``[re, im]`` pairs. Floats are written with
Python's shortest round-trip repr, so a value read back is bit-identical.
"""

import json
import math
from numbers import Real

import numpy as np

from src.core.calg import as_cvec
from src.core.errors import SchemaViolation
from src.core.group import GroupElement, boost, make_element, rotation


def _is_number(value):
    return isinstance(value, Real) and not isinstance(value, bool)


def real_from_json(value, path):
    if not _is_number(value) or not math.isfinite(float(value)):
        raise SchemaViolation(f"{path}: expected a finite number, got {value!r}")
    return float(value)


def complex_from_json(value, path):
    if not isinstance(value, list) or len(value) != 2:
        raise SchemaViolation(f"{path}: expected an [re, im] pair, got {value!r}")
    return complex(real_from_json(value[0], f"{path}[0]"), real_from_json(value[1], f"{path}[1]"))


def complex_to_json(value):
    value = complex(value)
    return [float(value.real), float(value.imag)]


def vector_from_json(value, path):
    if not isinstance(value, list) or len(value) != 3:
        raise SchemaViolation(f"{path}: expected 3 [re, im] pairs, got {value!r}")
    return as_cvec([complex_from_json(item, f"{path}[{index}]") for index, item in enumerate(value)])


def real_vector_from_json(value, path):
    if not isinstance(value, list) or len(value) != 3:
        raise SchemaViolation(f"{path}: expected 3 real numbers, got {value!r}")
    return as_cvec([real_from_json(item, f"{path}[{index}]") for index, item in enumerate(value)])


def vector_to_json(vector):
    if vector is None:
        return None
    return [complex_to_json(component) for component in np.asarray(vector)]


def real_vector_to_json(vector):
    return [float(component) for component in np.real(np.asarray(vector))]


def matrix_to_json(matrix):
    matrix = np.asarray(matrix)
    if np.iscomplexobj(matrix):
        return [[complex_to_json(entry) for entry in row] for row in matrix]
    return [[float(entry) for entry in row] for row in matrix]


def _require_object(value, path, keys):
    if not isinstance(value, dict):
        raise SchemaViolation(f"{path}: expected an object, got {type(value).__name__}")
    missing = [key for key in keys if key not in value]
    if missing:
        raise SchemaViolation(f"{path}: missing field(s) {', '.join(missing)}")
    return value


def element_from_json(value, path="element"):
    """
    Parse an element given as ``{"a0", "a"}`` or in generator form
    (``{"rotation": {"angle", "axis"}}`` / ``{"boost": {"rapidity", "axis"}}``).
    """
    if isinstance(value, dict) and "rotation" in value:
        spec = _require_object(value["rotation"], f"{path}.rotation", ("angle", "axis"))
        return rotation(
            real_from_json(spec["angle"], f"{path}.rotation.angle"),
            real_vector_from_json(spec["axis"], f"{path}.rotation.axis"),
        )
    if isinstance(value, dict) and "boost" in value:
        spec = _require_object(value["boost"], f"{path}.boost", ("rapidity", "axis"))
        return boost(
            real_from_json(spec["rapidity"], f"{path}.boost.rapidity"),
            real_vector_from_json(spec["axis"], f"{path}.boost.axis"),
        )
    _require_object(value, path, ("a0", "a"))
    return make_element(complex_from_json(value["a0"], f"{path}.a0"), vector_from_json(value["a"], f"{path}.a"))


def element_to_json(element: GroupElement):
    return {"a0": complex_to_json(element.a0), "a": vector_to_json(element.a)}


def max_deviation(left_json, right_json):
    """Largest modulus of the componentwise difference of two serialized elements."""
    left = [complex_from_json(left_json["a0"], "left.a0")] + list(vector_from_json(left_json["a"], "left.a"))
    right = [complex_from_json(right_json["a0"], "right.a0")] + list(vector_from_json(right_json["a"], "right.a"))
    return max(abs(p - q) for p, q in zip(left, right))


def loads(text, source="input"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaViolation(f"{source} is not valid JSON: {e.msg} (line {e.lineno})")


def dumps(payload, pretty=False):
    return json.dumps(payload, ensure_ascii=False, allow_nan=False, indent=2 if pretty else None)
