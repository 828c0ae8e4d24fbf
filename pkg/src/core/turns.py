# -*- coding: utf-8 -*-
"""
转动（turn）模块
群元 S(a0, a) 表示为一对复单位向量 (x̂, ŷ) 的等价类：a0 = x̂·ŷ，a = x̂∧ŷ。
两个转动的乘积按平行四边形法则计算：把右因子的头与左因子的尾滑到公共点 ẑ。
公共点不存在时（(a∧b)·(a∧b) = 0），先把左因子分解为两个因子再两次应用该法则。
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
    E1,
    CVec3,
    UnitCVec3,
    as_cvec,
    dot,
    hermitian_norm,
    imag_part,
    normalize,
    orthonormal_complement,
    real_part,
    require_unit,
    scale,
    wedge,
)
from .errors import DegenerateCompositionFailure, TailNotAdmissible
from .group import GroupElement, inverse, multiply, rotation

SIGN_RULE_FLOOR = 1e-6


@dataclass(frozen=True, eq=False)
class Turn:
    """从尾 x̂ 到头 ŷ 的转动"""

    tail: UnitCVec3
    head: UnitCVec3


class CompositionPath(str, Enum):
    GEOMETRIC = "geometric"
    DEGENERATE_FACTORIZED = "degenerate-factorized"


@dataclass(frozen=True, eq=False)
class Composition:
    """
    转动乘积的结果

    Attributes:
        turn: 乘积转动
        path: 执行的路径
        meet: 几何路径下的公共点，退化路径为 None
        w: 退化路径选中的分解轴
    """

    turn: Turn
    path: CompositionPath
    meet: Optional[UnitCVec3] = None
    w: Optional[CVec3] = None


def _tolerances():
    return config_manager.get_tolerances()


def make_turn(tail, head, unit_tol: Optional[float] = None) -> Turn:
    """构造转动，两端必须是复单位向量"""
    return Turn(require_unit(tail, "tail", unit_tol), require_unit(head, "head", unit_tol))


def invariants(t: Turn) -> Tuple[complex, CVec3]:
    return dot(t.tail, t.head), wedge(t.tail, t.head)


def element_of(t: Turn) -> GroupElement:
    """S(x̂, ŷ) = x̂·ŷ − i (x̂∧ŷ)·σ"""
    a0, a = invariants(t)
    return GroupElement(a0, a)


def canonical_tail(a: CVec3, parallel_tol: Optional[float] = None) -> UnitCVec3:
    """
    确定性的实尾向量

    规则：
        1. a = 0：取 e1
        2. Re a 与 Im a 线性无关：取 Re a ∧ Im a 的单位方向
        3. Re a ∥ Im a：取公共实轴正交补的第一个向量

    Args:
        a: 群元的向量部分
        parallel_tol: 判定平行的相对阈值

    Returns:
        np.ndarray: 与 a 双线性正交的实单位向量
    """
    parallel_tol = _tolerances().parallel_tol if parallel_tol is None else parallel_tol
    a = as_cvec(a)
    if not np.any(a):
        app_logger.debug("canonical tail: a = 0，取 e1")
        return E1

    re, im = real_part(a), imag_part(a)
    re_norm, im_norm = np.linalg.norm(re), np.linalg.norm(im)
    real_leads = re_norm >= im_norm
    lead, other = (re, im) if real_leads else (im, re)
    lead_norm = max(re_norm, im_norm)

    p = lead / lead_norm
    eta = other - (other @ p) * p
    eta_norm = np.linalg.norm(eta)
    if eta_norm < parallel_tol * lead_norm:
        app_logger.debug("canonical tail: Re a ∥ Im a，取正交补")
        return orthonormal_complement(lead)[0]

    eta = eta / eta_norm
    tail = np.cross(p, eta) if real_leads else np.cross(eta, p)
    return as_cvec(tail / np.linalg.norm(tail))


def turn_of(S: GroupElement) -> Turn:
    """群元的标准代表：实尾 x̂，头 ŷ = a0 x̂ + a∧x̂"""
    tail = canonical_tail(S.a)
    head = S.a0 * np.asarray(tail) + wedge(S.a, tail)
    return Turn(tail, as_cvec(head))


def equivalent(t1: Turn, t2: Turn, tol: Optional[float] = None) -> bool:
    tol = _tolerances().equivalence_tol if tol is None else tol
    a0, a = invariants(t1)
    b0, b = invariants(t2)
    return abs(a0 - b0) <= tol and float(np.max(np.abs(np.asarray(a) - np.asarray(b)))) <= tol


def _slide_head(a0: complex, a: CVec3, tail: CVec3) -> CVec3:
    return as_cvec(a0 * np.asarray(tail) + wedge(a, tail))


def slide(t: Turn, new_tail: UnitCVec3, tol: Optional[float] = None) -> Turn:
    """
    沿转动自身的测地线滑动代表元

    Raises:
        TailNotAdmissible: 新尾不与 a 双线性正交
    """
    tol = _tolerances().equivalence_tol if tol is None else tol
    new_tail = require_unit(new_tail, "new_tail")
    a0, a = invariants(t)
    overlap = abs(dot(new_tail, a))
    if overlap > tol:
        raise TailNotAdmissible(f"new tail is not orthogonal to the carrier: |tail·a| = {overlap:.3e}")
    return Turn(new_tail, _slide_head(a0, a, new_tail))


def invert(t: Turn) -> Turn:
    return Turn(t.head, t.tail)


def apply_sign_rule(z: CVec3) -> CVec3:
    """第一个模不小于 1e-6 的分量辐角须落在 (−π/2, π/2]，否则整体取反"""
    for component in np.asarray(z):
        if abs(component) >= SIGN_RULE_FLOOR:
            phase = cmath.phase(complex(component.real, component.imag + 0.0))
            if -math.pi / 2 < phase <= math.pi / 2:
                return z
            return scale(-1.0, z)
    return z


def meet_measure(t1: Turn, t2: Turn) -> float:
    """投影意义下的 |(â∧b̂)·(â∧b̂)|，â、b̂ 为单位 Hermite 范数"""
    a = np.asarray(invariants(t1)[1])
    b = np.asarray(invariants(t2)[1])
    a_norm, b_norm = hermitian_norm(a), hermitian_norm(b)
    if a_norm == 0.0 or b_norm == 0.0:
        return 0.0
    c = wedge(a / a_norm, b / b_norm)
    return abs(dot(c, c))


def meet(t1: Turn, t2: Turn, meet_tol: Optional[float] = None) -> Optional[UnitCVec3]:
    """
    两个转动的公共单位向量 ẑ ∝ a∧b

    Returns:
        公共点；不存在时返回 None
    """
    meet_tol = _tolerances().meet_tol if meet_tol is None else meet_tol
    if meet_measure(t1, t2) < meet_tol:
        return None
    return apply_sign_rule(normalize(wedge(invariants(t1)[1], invariants(t2)[1]), iso_tol=0.0))


def _is_trivial(t: Turn) -> bool:
    return hermitian_norm(invariants(t)[1]) <= _tolerances().iso_tol


def _carriers_parallel(t1: Turn, t2: Turn) -> bool:
    """a ∥ b（Hermite 意义下 â∧b̂ ≈ 0），此时 t1 的头已与 b 双线性正交"""
    a = np.asarray(invariants(t1)[1])
    b = np.asarray(invariants(t2)[1])
    c = wedge(a / hermitian_norm(a), b / hermitian_norm(b))
    return hermitian_norm(c) <= _tolerances().equivalence_tol


def _junction(t1: Turn, t2: Turn, meet_tol: float, allow_parallel: bool = False) -> Tuple[Optional[UnitCVec3], float]:
    """
    t1 的头与 t2 的尾可以滑到的公共点；平凡转动与任意转动相接

    allow_parallel 为真时，载体平行的两个转动在 t1 的头处相接（对易因子，乘积仍在同一单参数族内）
    """
    if _is_trivial(t1):
        return t2.tail, 1.0
    if _is_trivial(t2):
        return t1.head, 1.0
    measure = meet_measure(t1, t2)
    if measure >= meet_tol:
        return meet(t1, t2, meet_tol=meet_tol), measure
    if allow_parallel and _carriers_parallel(t1, t2):
        return t1.head, 1.0
    return None, measure


def _compose_through(t2: Turn, t1: Turn, z: UnitCVec3) -> Turn:
    """平行四边形法则：t1 滑到头为 ẑ，t2 滑到尾为 ẑ"""
    a0, a = invariants(t1)
    b0, b = invariants(t2)
    x = as_cvec(a0 * np.asarray(z) - wedge(a, z))
    y = _slide_head(b0, b, z)
    return Turn(x, y)


def _factor_axes():
    signed_axes = []
    for k in range(3):
        for sign in (1.0, -1.0):
            axis = np.zeros(3)
            axis[k] = sign
            signed_axes.append(axis)
    diagonals = []
    for i, j in ((0, 1), (0, 2), (1, 2)):
        for si, sj in ((1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)):
            axis = np.zeros(3)
            axis[i], axis[j] = si, sj
            diagonals.append(axis / math.sqrt(2))
    return tuple(as_cvec(axis) for axis in signed_axes + diagonals)


FACTOR_AXES = _factor_axes()


def _compose_factorized(t2: Turn, t1: Turn, meet_tol: float) -> Composition:
    """退化情形：t2 = t2″∘t2′，t2′ 为绕 w 转 π/2；按固定顺序取第一个两次相接都不低于 10·meet_tol 的 w"""
    S2 = element_of(t2)
    threshold = 10 * meet_tol
    best_score = 0.0
    for w in FACTOR_AXES:
        quarter = rotation(math.pi / 2, w)
        first = turn_of(quarter)
        second = turn_of(multiply(S2, inverse(quarter)))

        z1, m1 = _junction(t1, first, meet_tol, allow_parallel=True)
        if z1 is None or m1 < threshold:
            best_score = max(best_score, m1)
            continue
        partial = _compose_through(first, t1, z1)
        z2, m2 = _junction(partial, second, meet_tol, allow_parallel=True)
        if z2 is None or m2 < threshold:
            best_score = max(best_score, min(m1, m2))
            continue

        app_logger.debug("退化分解", w=np.real(np.asarray(w)).round(6).tolist(), measure=f"{min(m1, m2):.3e}")
        return Composition(
            _compose_through(second, partial, z2), CompositionPath.DEGENERATE_FACTORIZED, meet=None, w=w
        )

    raise DegenerateCompositionFailure(f"no admissible factor axis found (best meet measure {best_score:.3e})")


def compose(t2: Turn, t1: Turn, meet_tol: Optional[float] = None) -> Composition:
    """
    转动乘积 t2∘t1（先 t1 后 t2）

    Args:
        t2: 左因子
        t1: 右因子
        meet_tol: 公共点存在阈值

    Returns:
        Composition: element_of(result.turn) = element_of(t2)·element_of(t1)

    Raises:
        DegenerateCompositionFailure: 所有候选分解轴都不可用
    """
    meet_tol = _tolerances().meet_tol if meet_tol is None else meet_tol
    z, measure = _junction(t1, t2, meet_tol)
    if z is not None:
        app_logger.debug("几何路径", measure=f"{measure:.3e}")
        return Composition(_compose_through(t2, t1, z), CompositionPath.GEOMETRIC, meet=z)
    app_logger.debug("公共点不存在，进入退化分解", measure=f"{measure:.3e}")
    return _compose_factorized(t2, t1, meet_tol)
