# -*- coding: utf-8 -*-
"""Tests for the polar decomposition read off the components and from turns."""

import math

import numpy as np
import pytest

from src.core.calg import E1, E2, E3, dot, real_imag_norm_gap
from src.core.group import (
    adjoint_rotation,
    boost,
    identity,
    inverse,
    lorentz_matrix,
    multiply,
    negate,
    random_element,
    rotation,
)
from src.core.polar import (
    PolarBranch,
    lorentz_polar,
    matrix_polar_oracle,
    polar_factors,
    polar_turns,
    reconstruct,
)
from src.core.turns import element_of

from .strategies import element_scale, random_axis


def _assert_element(actual, expected, tol):
    np.testing.assert_allclose(actual.components(), expected.components(), rtol=0, atol=tol)


def test_identity_has_trivial_factors():
    factors = polar_factors(identity())
    assert factors.beta == 0.0
    assert factors.epsilon == 0.0
    assert factors.sign == 1
    np.testing.assert_array_equal(factors.k_b, E1)
    np.testing.assert_array_equal(factors.k_r, E1)
    assert factors.branch == PolarBranch.COMMUTING


def test_minus_identity_keeps_the_sign_separate():
    factors = polar_factors(negate(identity()))
    assert factors.beta == 0.0
    assert factors.epsilon == 0.0
    assert factors.sign == -1
    _assert_element(reconstruct(factors), negate(identity()), 0.0)


def test_pure_boost():
    factors = polar_factors(boost(2.0, E1))
    assert factors.beta == pytest.approx(2.0, abs=1e-14)
    np.testing.assert_allclose(factors.k_b, E1, atol=1e-15)
    assert factors.epsilon == 0.0
    assert factors.branch == PolarBranch.COMMUTING


def test_pure_rotation():
    factors = polar_factors(rotation(2.5, E2))
    assert factors.beta == pytest.approx(0.0, abs=1e-15)
    assert factors.epsilon == pytest.approx(2.5, abs=1e-14)
    np.testing.assert_allclose(factors.k_r, E2, atol=1e-15)


def test_boost_times_rotation_is_read_back():
    element = multiply(boost(1.0, E2), rotation(math.pi / 3, E3))
    factors = polar_factors(element)
    assert factors.beta == pytest.approx(1.0, abs=1e-14)
    np.testing.assert_allclose(factors.k_b, E2, atol=1e-14)
    assert factors.epsilon == pytest.approx(math.pi / 3, abs=1e-14)
    np.testing.assert_allclose(factors.k_r, E3, atol=1e-14)
    assert factors.sign == 1
    assert factors.branch == PolarBranch.GENERIC


def _assert_matches_oracle(element, tol=1e-8, axis_tol=1e-7):
    factors = polar_factors(element)
    oracle = matrix_polar_oracle(element)
    assert factors.beta == pytest.approx(oracle.beta, abs=tol)
    assert factors.epsilon == pytest.approx(oracle.epsilon, abs=tol)
    assert factors.sign == oracle.sign
    if factors.beta > 1e-6:
        np.testing.assert_allclose(factors.k_b, oracle.k_b, atol=axis_tol)
    if 1e-6 < factors.epsilon < 2 * math.pi - 1e-6:
        np.testing.assert_allclose(factors.k_r, oracle.k_r, atol=axis_tol)
    return factors


def test_components_agree_with_matrix_oracle():
    rng = np.random.default_rng(127)
    for _ in range(10_000):
        _assert_matches_oracle(random_element(rng, reject_below=0.5))


def test_commuting_branch_agrees_with_matrix_oracle():
    rng = np.random.default_rng(131)
    for _ in range(150):
        axis = random_axis(rng)
        element = multiply(boost(rng.uniform(0.05, 3.0), axis), rotation(rng.uniform(0.05, 6.0), axis))
        factors = _assert_matches_oracle(element)
        assert factors.branch == PolarBranch.COMMUTING


def test_reconstruction():
    rng = np.random.default_rng(137)
    for _ in range(2000):
        element = random_element(rng, reject_below=0.5)
        tol = 1e-10 * max(1.0, element_scale(element) ** 2)
        _assert_element(reconstruct(polar_factors(element)), element, tol)


def test_polar_turns_split_into_rotation_then_boost():
    rng = np.random.default_rng(139)
    for _ in range(1000):
        element = random_element(rng, reject_below=0.5)
        scale = max(1.0, element_scale(element))
        rotation_turn, boost_turn = polar_turns(element)

        assert np.all(np.imag(np.asarray(rotation_turn.tail)) == 0)
        assert np.all(np.imag(np.asarray(rotation_turn.head)) == 0)
        np.testing.assert_array_equal(rotation_turn.head, boost_turn.tail)
        assert abs(dot(rotation_turn.head, rotation_turn.head) - 1.0) <= 1e-12 * scale

        boost_part = element_of(boost_turn)
        assert abs(complex(boost_part.a0).imag) <= 1e-10 * scale
        assert complex(boost_part.a0).real >= 1.0 - 1e-10 * scale
        assert float(np.max(np.abs(np.real(np.asarray(boost_part.a))))) <= 1e-10 * scale
        assert real_imag_norm_gap(boost_turn.head) == pytest.approx(1.0, abs=1e-9 * scale ** 2)

        factors = polar_factors(element)
        if factors.beta > 1e-6:
            assert dot(boost_turn.tail, boost_turn.head).real > 1.0
        _assert_element(element_of(rotation_turn), rotation(factors.epsilon, factors.k_r), 1e-10 * scale)
        _assert_element(boost_part, boost(factors.beta, factors.k_b), 1e-10 * scale ** 2)
        _assert_element(multiply(boost_part, element_of(rotation_turn)), element, 1e-9 * scale ** 2)


def test_factors_are_covariant_under_rotations():
    rng = np.random.default_rng(149)
    for _ in range(500):
        element = random_element(rng, reject_below=0.5)
        spin = rotation(rng.uniform(-math.pi, math.pi), random_axis(rng))
        turned = multiply(multiply(spin, element), inverse(spin))
        R = np.real(adjoint_rotation(spin))

        before, after = polar_factors(element), polar_factors(turned)
        scale = max(1.0, element_scale(element))
        assert after.beta == pytest.approx(before.beta, abs=1e-9 * scale)
        assert after.epsilon == pytest.approx(before.epsilon, abs=1e-9 * scale)
        if before.beta > 1e-6:
            np.testing.assert_allclose(after.k_b, R @ np.asarray(before.k_b), atol=1e-7 * scale)
        if 1e-6 < before.epsilon < 2 * math.pi - 1e-6:
            np.testing.assert_allclose(after.k_r, R @ np.asarray(before.k_r), atol=1e-7 * scale)


def test_factors_are_not_covariant_under_boosts():
    spin = rotation(math.pi / 2, E3)
    stretch = boost(1.0, E1)
    boosted = multiply(multiply(stretch, spin), inverse(stretch))
    assert polar_factors(spin).beta == pytest.approx(0.0, abs=1e-15)
    assert polar_factors(boosted).beta > 0.1


def test_lorentz_polar():
    rng = np.random.default_rng(151)
    for _ in range(200):
        element = random_element(rng, reject_below=0.5)
        P, R = lorentz_polar(element)
        L = lorentz_matrix(element)
        scale = float(np.max(np.abs(L)))

        np.testing.assert_allclose(P, P.T, atol=1e-10 * scale)
        assert np.all(np.linalg.eigvalsh(P) > 0)
        np.testing.assert_allclose(R[1:, 1:].T @ R[1:, 1:], np.eye(3), atol=1e-12)
        assert R[0, 0] == pytest.approx(1.0, abs=1e-12)
        np.testing.assert_allclose(P @ R, L, atol=1e-9 * scale)


@pytest.mark.parametrize("beta", [1e-3, 0.5, 4.0])
def test_boost_turn_opens_strictly_beyond_one(beta):
    element = multiply(boost(beta, E2), rotation(1.1, E3))
    _, boost_turn = polar_turns(element)
    opening = dot(boost_turn.tail, boost_turn.head)
    assert opening.real > 1.0
    assert opening.real == pytest.approx(math.cosh(beta / 2), abs=1e-12 * math.cosh(beta / 2))
