# -*- coding: utf-8 -*-
"""
SL(2,C) 群元模块
群元以 Pauli 分量 (a0, a) 表示：S = a0 − i a·σ，约束 a0² + a·a = 1。
提供与 2×2 矩阵的互转、矩阵乘法预言机、伴随表示 SO(3,C)、Lorentz 表示 SO(3,1)、
单参数子群，以及伴随轨道的分类与标准形约化。
"""

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

import numpy as np

from ..utils.config_manager import config_manager
from ..utils.logger import app_logger
from .calg import (
    BASIS,
    E3,
    CVec3,
    as_cvec,
    cvec,
    dot,
    hermitian_norm,
    imag_part,
    principal_sqrt,
    real_part,
    scale,
    wedge,
)
from .errors import (
    ConstraintViolation,
    NonRealAxis,
    NotUnimodular,
    NumericalDegeneracy,
    ZeroVector,
)

Mat2C = np.ndarray
ComplexRotation3 = np.ndarray
LorentzMat4 = np.ndarray

IDENTITY2 = np.eye(2, dtype=np.complex128)
PAULI = np.array(
    [
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=np.complex128,
)
# Hermitian basis {1, σ1, σ2, σ3}, time index first
HERMITIAN_BASIS = np.concatenate([IDENTITY2[np.newaxis], PAULI])


@dataclass(frozen=True, eq=False)
class GroupElement:
    """SL(2,C) 群元 S(a0, a) = a0 − i a·σ"""

    a0: complex
    a: CVec3

    def components(self) -> np.ndarray:
        """(a0, a1, a2, a3) 组成的长度 4 复数组"""
        return np.concatenate([[complex(self.a0)], np.asarray(self.a)])

    def constraint_residual(self) -> float:
        return abs(complex(self.a0) ** 2 + dot(self.a, self.a) - 1.0)


class OrbitTag(str, Enum):
    TYPE_I = "TypeI"
    TYPE_II = "TypeII"
    ZERO = "Zero"


@dataclass(frozen=True)
class OrbitClass:
    tag: OrbitTag
    r: Optional[float] = None
    phi: Optional[float] = None


def _tolerances():
    return config_manager.get_tolerances()


def _element(a0, a) -> GroupElement:
    return GroupElement(complex(a0), as_cvec(a))


def make_element(a0, a, constraint_tol: Optional[float] = None) -> GroupElement:
    """
    构造群元并检查约束（只检查，不修正）

    Args:
        a0: 复标量
        a: 复三维向量
        constraint_tol: 约束容差，默认取配置

    Returns:
        GroupElement: 群元

    Raises:
        ConstraintViolation: |a0² + a·a − 1| 超出容差
    """
    constraint_tol = _tolerances().constraint_tol if constraint_tol is None else constraint_tol
    element = _element(a0, a)
    residual = element.constraint_residual()
    if residual > constraint_tol:
        raise ConstraintViolation(f"a0² + a·a − 1 = {residual:.3e} exceeds {constraint_tol:.1e}")
    return element


def identity() -> GroupElement:
    return _element(1.0, (0, 0, 0))


def negate(S: GroupElement) -> GroupElement:
    return GroupElement(-S.a0, scale(-1.0, S.a))


def inverse(S: GroupElement) -> GroupElement:
    """S(a0, a)⁻¹ = S(a0, −a)"""
    return GroupElement(S.a0, scale(-1.0, S.a))


def to_matrix(S: GroupElement) -> Mat2C:
    """群元的 2×2 复矩阵 a0·1 − i a·σ"""
    return S.a0 * IDENTITY2 - 1j * np.einsum('k,kab->ab', np.asarray(S.a), PAULI)


def pauli_components(M: Mat2C) -> GroupElement:
    """按 {1, σ1, σ2, σ3} 展开 2×2 矩阵，不检查行列式"""
    a0 = np.trace(M) / 2
    a = 0.5j * np.einsum('kab,ba->k', PAULI, M)
    return _element(a0, a)


def from_matrix(M: Mat2C, constraint_tol: Optional[float] = None) -> GroupElement:
    """
    2×2 矩阵按 {1, σ1, σ2, σ3} 展开：a0 = tr(M)/2，a_k = (i/2) tr(σ_k M)

    Raises:
        NotUnimodular: det M 偏离 1
    """
    constraint_tol = _tolerances().constraint_tol if constraint_tol is None else constraint_tol
    M = np.asarray(M, dtype=np.complex128)
    if M.shape != (2, 2):
        raise NotUnimodular(f"expected a 2x2 matrix, got shape {M.shape}")
    det = M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]
    if abs(det - 1.0) > constraint_tol:
        raise NotUnimodular(f"det M = {complex(det)} is not 1")
    return pauli_components(M)


def multiply(S2: GroupElement, S1: GroupElement) -> GroupElement:
    """矩阵乘积预言机：S2·S1（先作用 S1）"""
    return pauli_components(to_matrix(S2) @ to_matrix(S1))


def compose_components(S2: GroupElement, S1: GroupElement) -> GroupElement:
    """分量形式的乘积（四元数式）：c0 = b0 a0 − a·b，c = a0 b + b0 a + b∧a"""
    a0, a = S1.a0, S1.a
    b0, b = S2.a0, S2.a
    c0 = b0 * a0 - dot(a, b)
    c = a0 * np.asarray(b) + b0 * np.asarray(a) + wedge(b, a)
    return _element(c0, c)


def _real_unit_axis(n, name="axis") -> np.ndarray:
    tolerances = _tolerances()
    vector = as_cvec(n)
    if float(np.max(np.abs(imag_part(vector)))) > tolerances.real_tol:
        raise NonRealAxis(f"{name} must be real, got {vector}")
    axis = real_part(vector)
    if abs(float(np.linalg.norm(axis)) - 1.0) > tolerances.unit_tol:
        raise ConstraintViolation(f"{name} must have unit length, got |n| = {np.linalg.norm(axis):.12g}")
    return axis


def rotation(theta: float, n) -> GroupElement:
    """绕实单位轴 n 转 θ：(cos θ/2, n sin θ/2)"""
    axis = _real_unit_axis(n)
    return _element(math.cos(theta / 2), math.sin(theta / 2) * axis)


def boost(beta: float, n) -> GroupElement:
    """沿实单位方向 n 的快度 β 推进：(cosh β/2, i n sinh β/2)"""
    axis = _real_unit_axis(n)
    return _element(math.cosh(beta / 2), 1j * math.sinh(beta / 2) * axis)


def one_parameter(z: CVec3, t: float) -> GroupElement:
    """
    单参数子群 exp(−i t z·σ / 2)

    z·z ≠ 0 时为 cos(tw/2) − i sin(tw/2) (z/w)·σ，w = sqrt(z·z)；
    z·z = 0（II 型轨道）时级数截断为 1 − i (t/2) z·σ。
    """
    z = as_cvec(z)
    square = dot(z, z)
    if abs(square) < _tolerances().iso_tol:
        return _element(1.0, (t / 2) * np.asarray(z))
    w = principal_sqrt(square)
    half = t * w / 2
    return _element(cmath.cos(half), (cmath.sin(half) / w) * np.asarray(z))


def _adjugate(M: Mat2C) -> Mat2C:
    return np.array([[M[1, 1], -M[0, 1]], [-M[1, 0], M[0, 0]]])


def adjoint_rotation(S: GroupElement) -> ComplexRotation3:
    """伴随作用 S (z·σ) S⁻¹ = (R^c z)·σ，逐列共轭 e_k·σ 得到"""
    M = to_matrix(S)
    conjugated = M @ PAULI @ _adjugate(M)
    return 0.5 * np.einsum('jab,kba->jk', PAULI, conjugated)


def lorentz_matrix(S: GroupElement) -> LorentzMat4:
    """Hermite 合同作用 S (ξ0 + ξ·σ) S† 在 {1, σ1, σ2, σ3} 上的实 4×4 矩阵"""
    M = to_matrix(S)
    congruent = M @ HERMITIAN_BASIS @ M.conj().T
    return 0.5 * np.real(np.einsum('mab,nba->mn', HERMITIAN_BASIS, congruent))


def minkowski_metric() -> np.ndarray:
    return np.diag([1.0, -1.0, -1.0, -1.0])


def is_complex_orthogonal(R: ComplexRotation3, tol: float = 1e-9) -> bool:
    """RᵀR = 1 且 det R = 1（双线性意义）"""
    R = np.asarray(R)
    return bool(
        np.max(np.abs(R.T @ R - np.eye(3))) <= tol and abs(np.linalg.det(R) - 1.0) <= tol
    )


def is_proper_lorentz(L: LorentzMat4, tol: float = 1e-9) -> bool:
    """Lᵀ η L = η，L00 ≥ 1，det L = 1"""
    L = np.asarray(L)
    eta = minkowski_metric()
    return bool(
        np.max(np.abs(L.T @ eta @ L - eta)) <= tol
        and L[0, 0] >= 1.0 - tol
        and abs(np.linalg.det(L) - 1.0) <= tol
    )


def element_from_rotation(R: ComplexRotation3) -> GroupElement:
    """
    由 SO(3,C) 矩阵反求群元（差一个整体符号）

    取 4a0² 与 4a_k² 中模最大者开方，其余分量由反对称/对称部分求出。
    """
    R = np.asarray(R, dtype=np.complex128)
    trace = R[0, 0] + R[1, 1] + R[2, 2]
    candidates = [1 + trace] + [1 + 2 * R[k, k] - trace for k in range(3)]
    pick = int(np.argmax(np.abs(candidates)))
    antisym = np.array([R[2, 1] - R[1, 2], R[0, 2] - R[2, 0], R[1, 0] - R[0, 1]])

    if pick == 0:
        a0 = principal_sqrt(candidates[0]) / 2
        a = antisym / (4 * a0)
        return _element(a0, a)

    i = pick - 1
    a = np.zeros(3, dtype=np.complex128)
    a[i] = principal_sqrt(candidates[pick]) / 2
    for j in range(3):
        if j != i:
            a[j] = (R[i, j] + R[j, i]) / (4 * a[i])
    a0 = antisym[i] / (4 * a[i])
    return _element(a0, a)


def classify_orbit(z: CVec3, iso_tol: Optional[float] = None) -> OrbitClass:
    """
    伴随轨道分类

    Returns:
        OrbitClass: I 型带 (r, φ)，z·z = r² e^{2iφ}，0 ≤ φ < π
    """
    iso_tol = _tolerances().iso_tol if iso_tol is None else iso_tol
    z = as_cvec(z)
    square = dot(z, z)
    if abs(square) >= iso_tol:
        phase = cmath.phase(complex(square.real, square.imag + 0.0))
        return OrbitClass(OrbitTag.TYPE_I, r=math.sqrt(abs(square)), phi=(phase / 2) % math.pi)
    if hermitian_norm(z) >= iso_tol:
        return OrbitClass(OrbitTag.TYPE_II)
    return OrbitClass(OrbitTag.ZERO)


_SEED_DIAGONALS = tuple(
    as_cvec(np.array(d) / math.sqrt(2))
    for d in ((1, 1, 0), (1, 0, 1), (0, 1, 1), (1, -1, 0), (1, 0, -1), (0, 1, -1))
)
_SEED_ACCEPT = 1e-8


def _best_seed_complement(unit: CVec3, seeds) -> Tuple[Optional[CVec3], float]:
    best, best_quality = None, 0.0
    for seed in seeds:
        candidate = np.asarray(seed) - dot(seed, unit) * np.asarray(unit)
        length_sq = hermitian_norm(candidate) ** 2
        if length_sq == 0.0:
            continue
        quality = abs(dot(candidate, candidate)) / length_sq
        if quality > best_quality:
            best, best_quality = candidate, quality
    return best, best_quality


def _triad_rotation(unit: CVec3) -> ComplexRotation3:
    """把复单位向量映到 e1 的 SO(3,C) 矩阵（行为双线性正交三元组）"""
    order = np.argsort(np.abs(np.asarray(unit)), kind="stable")
    candidate, quality = _best_seed_complement(unit, [BASIS[k] for k in order])
    if quality < _SEED_ACCEPT:
        app_logger.warning("三元组补全遇到近似迷向中间向量，改用对角种子重试", quality=f"{quality:.2e}")
        candidate, quality = _best_seed_complement(unit, _SEED_DIAGONALS)
        if quality < _SEED_ACCEPT:
            raise NumericalDegeneracy("triad completion hit an isotropic intermediate vector")
    u = scale(1.0 / principal_sqrt(dot(candidate, candidate)), candidate)
    v = wedge(unit, u)
    return np.array([np.asarray(unit), np.asarray(u), np.asarray(v)])


def reduce_to_canonical(z: CVec3) -> Tuple[GroupElement, CVec3]:
    """
    用伴随作用把 z 约化为标准形

    I 型：z0 = (r e^{iφ}, 0, 0)；II 型：z0 = (1, i, 0)。

    Returns:
        (S, z0): 满足 adjoint_rotation(S)·z = z0

    Raises:
        ZeroVector: z = 0
        NumericalDegeneracy: 三元组补全失败
    """
    z = as_cvec(z)
    orbit = classify_orbit(z)
    if orbit.tag == OrbitTag.ZERO:
        raise ZeroVector("the zero vector has no canonical form")

    if orbit.tag == OrbitTag.TYPE_I:
        w = orbit.r * cmath.exp(1j * orbit.phi)
        R = _triad_rotation(scale(1.0 / w, z))
        app_logger.debug(f"I 型轨道约化: r={orbit.r:.6g}, phi={orbit.phi:.6g}")
        return element_from_rotation(R), cvec(w, 0, 0)

    re, im = real_part(z), imag_part(z)
    rho = (np.linalg.norm(re) + np.linalg.norm(im)) / 2
    p = re / np.linalg.norm(re)
    q = im - (im @ p) * p
    q = q / np.linalg.norm(q)
    frame = np.array([p, q, np.cross(p, q)])
    spin = element_from_rotation(frame)
    stretch = boost(-math.log(rho), E3)
    app_logger.debug(f"II 型轨道约化: rho={rho:.6g}")
    return multiply(stretch, spin), cvec(1, 1j, 0)


def random_element(rng: np.random.Generator, reject_below: float = 1e-6) -> GroupElement:
    """
    复正态采样后投影到约束面：除以 s = sqrt(a0² + a·a)（主值），拒绝 |s| 过小的样本
    """
    while True:
        raw = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        s = principal_sqrt(raw[0] ** 2 + raw[1] ** 2 + raw[2] ** 2 + raw[3] ** 2)
        if abs(s) < reject_below:
            continue
        return _element(raw[0] / s, raw[1:] / s)
