# -*- coding: utf-8 -*-
"""
错误类型模块
转动演算库抛出的所有异常都带错误码与面向用户的信息；kind 区分输入错误与数值失败。
"""

from enum import Enum


class ErrorCode(str, Enum):
    ISOTROPIC_VECTOR = "ISOTROPIC_VECTOR"
    ZERO_VECTOR = "ZERO_VECTOR"
    CONSTRAINT_VIOLATION = "CONSTRAINT_VIOLATION"
    NOT_UNIMODULAR = "NOT_UNIMODULAR"
    NON_REAL_AXIS = "NON_REAL_AXIS"
    NUMERICAL_DEGENERACY = "NUMERICAL_DEGENERACY"
    TAIL_NOT_ADMISSIBLE = "TAIL_NOT_ADMISSIBLE"
    DEGENERATE_COMPOSITION_FAILURE = "DEGENERATE_COMPOSITION_FAILURE"
    PARAMETER_OUT_OF_RANGE = "PARAMETER_OUT_OF_RANGE"
    SCHEMA_VIOLATION = "SCHEMA_VIOLATION"
    INTERNAL_ERROR = "INTERNAL_ERROR"


class ErrorKind(str, Enum):
    INPUT = "input"
    NUMERICAL = "numerical"


class TurnsError(Exception):
    """转动演算异常基类，携带错误码与用户信息"""

    error_code = ErrorCode.INTERNAL_ERROR
    kind = ErrorKind.NUMERICAL

    def __init__(self, user_message, error_code=None):
        super().__init__(user_message)
        if error_code is not None:
            self.error_code = error_code
        self.user_message = user_message


class IsotropicVector(TurnsError):
    """向量落在（或数值上接近）零锥 z·z = 0"""

    error_code = ErrorCode.ISOTROPIC_VECTOR
    kind = ErrorKind.INPUT


class ZeroVector(TurnsError):
    error_code = ErrorCode.ZERO_VECTOR
    kind = ErrorKind.INPUT


class ConstraintViolation(TurnsError):
    """a0² + a·a 偏离 1"""

    error_code = ErrorCode.CONSTRAINT_VIOLATION
    kind = ErrorKind.INPUT


class NotUnimodular(TurnsError):
    error_code = ErrorCode.NOT_UNIMODULAR
    kind = ErrorKind.INPUT


class NonRealAxis(TurnsError):
    error_code = ErrorCode.NON_REAL_AXIS
    kind = ErrorKind.INPUT


class NumericalDegeneracy(TurnsError):
    error_code = ErrorCode.NUMERICAL_DEGENERACY
    kind = ErrorKind.NUMERICAL


class TailNotAdmissible(TurnsError):
    """新尾不与转动的载体 a 双线性正交"""

    error_code = ErrorCode.TAIL_NOT_ADMISSIBLE
    kind = ErrorKind.INPUT


class DegenerateCompositionFailure(TurnsError):
    """退化分解的全部候选轴都不可用"""

    error_code = ErrorCode.DEGENERATE_COMPOSITION_FAILURE
    kind = ErrorKind.NUMERICAL


class ParameterOutOfRange(TurnsError):
    error_code = ErrorCode.PARAMETER_OUT_OF_RANGE
    kind = ErrorKind.INPUT


class SchemaViolation(TurnsError):
    error_code = ErrorCode.SCHEMA_VIOLATION
    kind = ErrorKind.INPUT
