# -*- coding: utf-8 -*-
"""
极分解模块
S = H·U：H 为 Hermite 正定的纯推进，U 为 SU(2) 转动。
分解完全在转动语言中完成：实尾 x̂ 先转到实向量 ẑ，再由 ẑ 推进到 ŷ。
另附基于 2×2 矩阵特征分解的独立预言机，仅用于校验。
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

import numpy as np

from ..utils.config_manager import config_manager
from ..utils.logger import app_logger
from .calg import E1, CVec3, as_cvec, wedge
from .group import (
    PAULI,
    GroupElement,
    LorentzMat4,
    boost,
    lorentz_matrix,
    multiply,
    negate,
    pauli_components,
    rotation,
    to_matrix,
)
from .turns import Turn, canonical_tail


class PolarBranch(str, Enum):
    GENERIC = "generic"
    COMMUTING = "commuting"


@dataclass(frozen=True, eq=False)
class PolarFactors:
    """
    极分解因子：S = sign · boost(beta, k_b) · rotation(epsilon, k_r)

    Attributes:
        beta: 推进快度，≥ 0
        k_b: 推进方向（实单位向量，beta = 0 时为 e1）
        epsilon: 转角，[0, 2π)
        k_r: 转轴（实单位向量，epsilon = 0 时为 e1）
        sign: 整体符号 ±1
        branch: generic 或 commuting
    """

    beta: float
    k_b: CVec3
    epsilon: float
    k_r: CVec3
    sign: int = 1
    branch: PolarBranch = PolarBranch.GENERIC


def _real_parts(S: GroupElement):
    a0 = complex(S.a0)
    a = np.asarray(S.a)
    return a0.real, a0.imag, np.real(a).astype(float), np.imag(a).astype(float)


def _unit_or_e1(vector: np.ndarray) -> CVec3:
    length = float(np.linalg.norm(vector))
    if length == 0.0:
        return E1
    return as_cvec(vector / length)


def _rotation_parameters(u0: float, u: np.ndarray) -> Tuple[float, CVec3, int]:
    """实单位四元数 (u0, u) 的转角、转轴与整体符号"""
    u_norm = float(np.linalg.norm(u))
    if u_norm == 0.0 and u0 < 0:
        return 0.0, E1, -1
    return 2.0 * math.atan2(u_norm, u0), _unit_or_e1(u), 1


def _branch(a_re: np.ndarray, a_im: np.ndarray, commuting_tol: Optional[float] = None) -> PolarBranch:
    commuting_tol = config_manager.get_tolerances().commuting_tol if commuting_tol is None else commuting_tol
    spread = float(np.linalg.norm(np.cross(a_re, a_im)))
    if spread < commuting_tol * (np.linalg.norm(a_re) * np.linalg.norm(a_im) + 1e-300):
        return PolarBranch.COMMUTING
    return PolarBranch.GENERIC


def polar_factors(S: GroupElement) -> PolarFactors:
    """
    由分量直接读出极分解因子

    cosh(β/2) = N = sqrt(a0R² + a_R·a_R)
    sinh(β/2) k_b = (a0R a_I − a0I a_R + a_R∧a_I) / N
    cos(ε/2) = a0R / N，sin(ε/2) k_r = a_R / N
    """
    a0_re, a0_im, a_re, a_im = _real_parts(S)
    norm = math.sqrt(a0_re * a0_re + float(a_re @ a_re))
    boost_vector = (a0_re * a_im - a0_im * a_re + np.cross(a_re, a_im)) / norm
    beta = 2.0 * math.asinh(float(np.linalg.norm(boost_vector)))
    epsilon, k_r, sign = _rotation_parameters(a0_re, a_re)
    branch = _branch(a_re, a_im)
    app_logger.debug("极分解", branch=branch.value, beta=f"{beta:.6g}", epsilon=f"{epsilon:.6g}", sign=sign)
    return PolarFactors(beta, _unit_or_e1(boost_vector), epsilon, k_r, sign, branch)


def polar_turns(S: GroupElement) -> Tuple[Turn, Turn]:
    """
    S(x̂, ŷ) = S(ẑ, ŷ)·S(x̂, ẑ)

    Returns:
        (rotation_turn, boost_turn): 转动部分 (x̂, ẑ) 全为实向量，推进部分 (ẑ, ŷ) 满足 ẑ·ŷ ≥ 1
    """
    a0_re, _, a_re, _ = _real_parts(S)
    norm = math.sqrt(a0_re * a0_re + float(a_re @ a_re))
    x = canonical_tail(S.a)
    x_real = np.real(np.asarray(x))
    z = as_cvec((a0_re * x_real + np.cross(a_re, x_real)) / norm)
    y = as_cvec(S.a0 * np.asarray(x) + wedge(S.a, x))
    return Turn(x, z), Turn(z, y)


def reconstruct(factors: PolarFactors) -> GroupElement:
    """sign · boost(β, k_b) · rotation(ε, k_r)"""
    product = multiply(boost(factors.beta, factors.k_b), rotation(factors.epsilon, factors.k_r))
    return negate(product) if factors.sign < 0 else product


def lorentz_polar(S: GroupElement) -> Tuple[LorentzMat4, LorentzMat4]:
    """SO(3,1) 极分解 Λ = P·R：P 实对称正定，R 为空间转动"""
    factors = polar_factors(S)
    P = lorentz_matrix(boost(factors.beta, factors.k_b))
    R = lorentz_matrix(rotation(factors.epsilon, factors.k_r))
    return P, R


def matrix_polar_oracle(S: GroupElement) -> PolarFactors:
    """
    独立的矩阵极分解：H = sqrt(M M†)（2×2 Hermite 特征分解），U = H⁻¹ M
    """
    M = to_matrix(S)
    eigenvalues, eigenvectors = np.linalg.eigh(M @ M.conj().T)
    H = eigenvectors @ np.diag(np.sqrt(eigenvalues)) @ eigenvectors.conj().T
    U = np.linalg.solve(H, M)

    h = np.real(0.5 * np.einsum('kab,ba->k', PAULI, H))
    beta = 2.0 * math.asinh(float(np.linalg.norm(h)))
    unitary = pauli_components(U)
    epsilon, k_r, sign = _rotation_parameters(
        float(np.real(unitary.a0)), np.real(np.asarray(unitary.a)).astype(float)
    )
    _, _, a_re, a_im = _real_parts(S)
    return PolarFactors(beta, _unit_or_e1(h), epsilon, k_r, sign, _branch(a_re, a_im))
