# -*- coding: utf-8 -*-
"""
Wigner 转动模块
两个纯推进的乘积 = 推进 × 转动。乘积先用转动的平行四边形法则构造，再做极分解；
同时提供 Wigner 角、合成快度与推进偏折角的闭式公式，二者互为校验。
"""

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ..utils.config_manager import config_manager
from ..utils.logger import app_logger
from .calg import E1, CVec3, as_cvec, wedge
from .errors import NonRealAxis, NumericalDegeneracy, ParameterOutOfRange
from .group import GroupElement, boost
from .polar import polar_factors
from .turns import CompositionPath, apply_sign_rule, compose, element_of, turn_of


@dataclass(frozen=True, eq=False)
class BoostSpec:
    """快度 beta 沿实单位方向 n 的推进"""

    beta: float
    n: CVec3

    def __post_init__(self):
        if not math.isfinite(self.beta) or self.beta <= 0:
            raise ParameterOutOfRange(f"rapidity must be positive and finite, got {self.beta}")
        tolerances = config_manager.get_tolerances()
        n = as_cvec(self.n)
        if float(np.max(np.abs(np.imag(n)))) > tolerances.real_tol:
            raise NonRealAxis(f"boost direction must be real, got {n}")
        if abs(float(np.linalg.norm(n)) - 1.0) > tolerances.unit_tol:
            raise ParameterOutOfRange(f"boost direction must have unit length, got |n| = {np.linalg.norm(n):.12g}")
        object.__setattr__(self, "n", as_cvec(np.real(n)))

    @property
    def direction(self) -> np.ndarray:
        return np.real(np.asarray(self.n))

    def element(self) -> GroupElement:
        return boost(self.beta, self.n)


@dataclass(frozen=True, eq=False)
class WignerResult:
    """
    两推进乘积的分解

    Attributes:
        epsilon: Wigner 角
        k_r: 转轴，∝ m̂∧n̂
        beta_res: 合成快度
        k_b: 合成推进方向，位于 span{m̂, n̂}
        phi: k_b 与 n̂ 的夹角
        product: 乘积群元
        meet: 两个推进转动的公共点（实向量），共线时为 None
        path: 转动乘积所走的路径
    """

    epsilon: float
    k_r: CVec3
    beta_res: float
    k_b: CVec3
    phi: float
    product: GroupElement
    meet: Optional[CVec3]
    path: CompositionPath


def _angle_between(u: np.ndarray, v: np.ndarray) -> float:
    return math.atan2(float(np.linalg.norm(np.cross(u, v))), float(u @ v))


def _is_collinear(first: BoostSpec, second: BoostSpec) -> bool:
    spread = float(np.linalg.norm(np.cross(first.direction, second.direction)))
    return spread < config_manager.get_tolerances().collinear_tol


def compose_boosts(first: BoostSpec, second: BoostSpec) -> WignerResult:
    """
    先 first 后 second 的两推进乘积，经转动合成与极分解得到 Wigner 转动

    Raises:
        NumericalDegeneracy: 乘积标量部分出现虚部
    """
    composition = compose(turn_of(second.element()), turn_of(first.element()))
    product = element_of(composition.turn)

    scalar_real_tol = config_manager.get_tolerances().scalar_real_tol
    if abs(product.a0.imag) > scalar_real_tol * max(1.0, abs(product.a0)):
        raise NumericalDegeneracy(f"boost product has a complex scalar part: Im a0 = {product.a0.imag:.3e}")

    if _is_collinear(first, second):
        signed = second.beta + float(first.direction @ second.direction) * first.beta
        direction = second.n if signed >= 0 else as_cvec(-second.direction)
        app_logger.debug("共线推进", signed_rapidity=f"{signed:.6g}")
        return WignerResult(
            epsilon=0.0,
            k_r=E1,
            beta_res=abs(signed),
            k_b=direction,
            phi=0.0 if signed >= 0 else math.pi,
            product=product,
            meet=composition.meet,
            path=composition.path,
        )

    factors = polar_factors(product)
    phi = _angle_between(np.real(np.asarray(factors.k_b)), second.direction)
    app_logger.debug("Wigner 分解", epsilon=f"{factors.epsilon:.6g}", beta_res=f"{factors.beta:.6g}", phi=f"{phi:.6g}")
    return WignerResult(
        epsilon=factors.epsilon,
        k_r=factors.k_r,
        beta_res=factors.beta,
        k_b=factors.k_b,
        phi=phi,
        product=product,
        meet=composition.meet,
        path=composition.path,
    )


def _check_parameters(beta_m: float, beta_n: float, theta: float):
    for name, value in (("beta_m", beta_m), ("beta_n", beta_n)):
        if not math.isfinite(value) or value <= 0:
            raise ParameterOutOfRange(f"{name} must be positive and finite, got {value}")
    if not (0.0 <= theta <= math.pi):
        raise ParameterOutOfRange(f"theta must lie in [0, π], got {theta}")


def _collinear_signed(beta_m: float, beta_n: float, theta: float) -> Optional[float]:
    """sin θ 低于共线阈值时返回带符号快度 β_n + cos θ · β_m，否则返回 None"""
    if abs(math.sin(theta)) >= config_manager.get_tolerances().collinear_tol:
        return None
    return beta_n + math.cos(theta) * beta_m


def wigner_angle(beta_m: float, beta_n: float, theta: float) -> float:
    """tan(ε/2) = sin θ / (κ + cos θ)，κ = coth(β_n/2) coth(β_m/2)"""
    _check_parameters(beta_m, beta_n, theta)
    t = math.tanh(beta_m / 2) * math.tanh(beta_n / 2)
    return 2.0 * math.atan2(math.sin(theta) * t, 1.0 + math.cos(theta) * t)


def resultant_rapidity(beta_m: float, beta_n: float, theta: float) -> float:
    """cosh β_res = cosh β_m cosh β_n + sinh β_m sinh β_n cos θ"""
    _check_parameters(beta_m, beta_n, theta)
    signed = _collinear_signed(beta_m, beta_n, theta)
    if signed is not None:
        return abs(signed)
    value = math.cosh(beta_m) * math.cosh(beta_n) + math.sinh(beta_m) * math.sinh(beta_n) * math.cos(theta)
    return math.acosh(max(1.0, value))


def boost_deflection(beta_m: float, beta_n: float, theta: float) -> float:
    """合成推进方向与 n̂ 的夹角 φ ∈ [0, θ]；共线时按带符号快度取 0 或 θ"""
    _check_parameters(beta_m, beta_n, theta)
    signed = _collinear_signed(beta_m, beta_n, theta)
    if signed is not None:
        return 0.0 if signed >= 0 else theta
    numerator = math.sin(theta) * math.sinh(beta_m)
    denominator = math.cosh(beta_m) * math.sinh(beta_n) + math.cos(theta) * math.cosh(beta_n) * math.sinh(beta_m)
    return math.atan2(numerator, denominator)


def boost_product(first: BoostSpec, second: BoostSpec) -> GroupElement:
    """
    闭式乘积分量（a0 为实数）

    a0 = c_m c_n + s_m s_n m̂·n̂，a_R = s_m s_n m̂∧n̂，a_I = s_m c_n m̂ + s_n c_m n̂
    """
    c_m, s_m = math.cosh(first.beta / 2), math.sinh(first.beta / 2)
    c_n, s_n = math.cosh(second.beta / 2), math.sinh(second.beta / 2)
    m, n = first.direction, second.direction
    a0 = c_m * c_n + s_m * s_n * float(m @ n)
    a = s_m * s_n * np.cross(m, n) + 1j * (s_m * c_n * m + s_n * c_m * n)
    return GroupElement(complex(a0), as_cvec(a))


def boost_pair_turns(first: BoostSpec, second: BoostSpec) -> Tuple[CVec3, CVec3, CVec3]:
    """
    闭式的乘积转动：公共点 ẑ = ±m̂∧n̂/|m̂∧n̂|，
    x̂ = cosh(β_m/2) ẑ + i sinh(β_m/2) ẑ∧m̂，ŷ = cosh(β_n/2) ẑ + i sinh(β_n/2) n̂∧ẑ

    Returns:
        (x̂, ẑ, ŷ)

    Raises:
        ParameterOutOfRange: 两推进共线
    """
    if _is_collinear(first, second):
        raise ParameterOutOfRange("collinear boosts have no real meeting point")
    normal = np.cross(first.direction, second.direction)
    z = apply_sign_rule(as_cvec(normal / np.linalg.norm(normal)))
    x = math.cosh(first.beta / 2) * np.asarray(z) + 1j * math.sinh(first.beta / 2) * wedge(z, first.n)
    y = math.cosh(second.beta / 2) * np.asarray(z) + 1j * math.sinh(second.beta / 2) * wedge(second.n, z)
    return as_cvec(x), z, as_cvec(y)


def resultant_direction(first: BoostSpec, second: BoostSpec) -> CVec3:
    """½ sinh β_m m̂ + (½ cosh β_m sinh β_n + sinh β_m sinh²(β_n/2) cos θ) n̂ 的单位方向"""
    m, n = first.direction, second.direction
    cos_theta = float(m @ n)
    along_n = 0.5 * math.cosh(first.beta) * math.sinh(second.beta) + (
        math.sinh(first.beta) * math.sinh(second.beta / 2) ** 2 * cos_theta
    )
    direction = 0.5 * math.sinh(first.beta) * m + along_n * n
    length = float(np.linalg.norm(direction))
    if length == 0.0:
        return second.n
    return as_cvec(direction / length)
