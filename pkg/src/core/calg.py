# -*- coding: utf-8 -*-
"""
复三维向量代数模块
点积与叉积均为对称双线性形式（不取复共轭），这是 SO(3,C) 的不变量。
向量统一用只读的 complex128 numpy 数组表示。
"""

import cmath
from typing import Optional, Sequence, Tuple

import numpy as np

from ..utils.config_manager import config_manager
from .errors import ConstraintViolation, IsotropicVector, NumericalDegeneracy, ZeroVector

CVec3 = np.ndarray
UnitCVec3 = np.ndarray


def _freeze(array):
    array.setflags(write=False)
    return array


def as_cvec(values: Sequence) -> CVec3:
    """
    转换为只读复三维向量

    Args:
        values: 长度为 3 的数值序列

    Returns:
        np.ndarray: complex128，形状 (3,)
    """
    vector = np.array(values, dtype=np.complex128).reshape(-1)
    if vector.shape != (3,):
        raise NumericalDegeneracy(f"expected 3 components, got {vector.shape[0]}")
    if not np.all(np.isfinite(vector)):
        raise NumericalDegeneracy("vector has non-finite components")
    return _freeze(vector)


def cvec(z1, z2, z3) -> CVec3:
    """由三个分量构造复三维向量"""
    return as_cvec((z1, z2, z3))


E1 = cvec(1, 0, 0)
E2 = cvec(0, 1, 0)
E3 = cvec(0, 0, 1)
BASIS = (E1, E2, E3)


def principal_sqrt(value: complex) -> complex:
    """主值平方根，辐角落在 (-π/2, π/2]"""
    value = complex(value)
    # -0.0 的虚部会把负实轴上的结果翻到下半平面
    return cmath.sqrt(complex(value.real, value.imag + 0.0))


def dot(u: CVec3, v: CVec3) -> complex:
    """双线性点积 Σ u_k v_k"""
    return complex(u[0] * v[0] + u[1] * v[1] + u[2] * v[2])


def wedge(u: CVec3, v: CVec3) -> CVec3:
    """复分量叉积"""
    return _freeze(np.cross(u, v).astype(np.complex128, copy=False))


def scale(factor: complex, v: CVec3) -> CVec3:
    return _freeze(complex(factor) * np.asarray(v, dtype=np.complex128))


def hermitian_norm(z: CVec3) -> float:
    return float(np.linalg.norm(z))


def real_part(z: CVec3) -> np.ndarray:
    return np.real(np.asarray(z)).astype(float)


def imag_part(z: CVec3) -> np.ndarray:
    return np.imag(np.asarray(z)).astype(float)


def is_real(z: CVec3, tol: Optional[float] = None) -> bool:
    tol = config_manager.get_tolerances().real_tol if tol is None else tol
    return float(np.max(np.abs(imag_part(z)))) <= tol


def is_unit(z: CVec3, tol: Optional[float] = None) -> bool:
    """UnitCVec3 不变量：|z·z − 1| ≤ tol"""
    tol = config_manager.get_tolerances().unit_tol if tol is None else tol
    return abs(dot(z, z) - 1.0) <= tol


def require_unit(z: CVec3, name: str = "vector", tol: Optional[float] = None) -> UnitCVec3:
    vector = as_cvec(z)
    if not is_unit(vector, tol):
        raise ConstraintViolation(f"{name} is not a complex unit vector: z·z = {dot(vector, vector)}")
    return vector


def real_imag_norm_gap(z: CVec3) -> float:
    """|Re z|² − |Im z|²，复单位向量上恒为 1"""
    re, im = real_part(z), imag_part(z)
    return float(re @ re - im @ im)


def normalize(z: CVec3, iso_tol: Optional[float] = None) -> UnitCVec3:
    """
    用主值平方根归一化：z / sqrt(z·z)

    Args:
        z: 复三维向量
        iso_tol: 零锥阈值，默认取配置中的 iso_tol

    Returns:
        np.ndarray: 满足 z·z = 1 的复单位向量

    Raises:
        IsotropicVector: |z·z| 小于阈值
    """
    iso_tol = config_manager.get_tolerances().iso_tol if iso_tol is None else iso_tol
    square = dot(z, z)
    if abs(square) < iso_tol:
        raise IsotropicVector(f"cannot normalize isotropic vector: |z·z| = {abs(square):.3e}")
    return scale(1.0 / principal_sqrt(square), z)


def orthonormal_complement(v: CVec3, iso_tol: Optional[float] = None) -> Tuple[CVec3, CVec3]:
    """
    实向量的确定性正交补基 (p, q)，满足 p∧q 与 v 同向。

    p 由与 v 重叠最小的标准基向量做 Gram–Schmidt 得到（并列时取下标最小者），q = v̂∧p。
    """
    iso_tol = config_manager.get_tolerances().iso_tol if iso_tol is None else iso_tol
    axis = real_part(v)
    length = float(np.linalg.norm(axis))
    if length < iso_tol:
        raise ZeroVector("cannot build a complement of the zero vector")
    axis = axis / length

    seed = np.zeros(3)
    seed[int(np.argmin(np.abs(axis)))] = 1.0
    p = seed - (seed @ axis) * axis
    p = p / np.linalg.norm(p)
    q = np.cross(axis, p)
    return as_cvec(p), as_cvec(q)
