import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from numpy.testing import assert_allclose
from scipy.linalg import expm

from photonamp.lorentz import (
    AxisAngle,
    boost_matrix,
    compose_axis_angle,
    is_rotation,
    lorentz_inverse,
    metric_residual,
    minkowski,
    polar_azimuth,
    rotation_matrix,
    rotation_y,
    rotation_z,
    standard_boost_z,
    standard_lorentz,
    standard_rotation,
    su2_matrix,
)

PAULI = [
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
]


@st.composite
def axis_angles(draw):
    vec = draw(
        st.tuples(
            st.floats(-1, 1), st.floats(-1, 1), st.floats(-1, 1)
        ).filter(lambda t: np.linalg.norm(t) > 1e-3)
    )
    angle = draw(st.floats(-np.pi, np.pi))
    return AxisAngle(np.array(vec), angle)


@st.composite
def subluminal_betas(draw):
    direction = draw(
        st.tuples(
            st.floats(-1, 1), st.floats(-1, 1), st.floats(-1, 1)
        ).filter(lambda t: np.linalg.norm(t) > 1e-3)
    )
    speed = draw(st.floats(0, 0.99))
    d = np.array(direction)
    return speed * d / np.linalg.norm(d)


def random_lightlike(rng):
    d = rng.normal(size=3)
    d /= np.linalg.norm(d)
    omega = rng.uniform(0.3, 3.0)
    return np.array([omega, *(omega * d)])


class TestBoost:
    def test_zero_velocity_is_identity(self):
        assert_allclose(boost_matrix([0, 0, 0]), np.eye(4), atol=0)

    def test_textbook_z_boost(self):
        # gamma = 1.25 for beta = 0.6
        out = boost_matrix([0, 0, 0.6]) @ np.array([1.0, 0, 0, 0])
        assert_allclose(out, [1.25, 0, 0, 0.75], atol=1e-15)

    def test_superluminal_rejected(self):
        with pytest.raises(ValueError, match="superluminal"):
            boost_matrix([0, 0, 1.0])

    @settings(max_examples=60, deadline=None)
    @given(subluminal_betas())
    def test_metric_preserved(self, beta):
        assert metric_residual(boost_matrix(beta)) <= 1e-12

    def test_inverse_via_metric(self):
        L = boost_matrix([0.3, -0.2, 0.5])
        assert_allclose(lorentz_inverse(L) @ L, np.eye(4), atol=1e-13)


class TestRotation:
    def test_zero_angle_is_identity(self):
        assert_allclose(rotation_matrix(AxisAngle([0, 0, 1], 0.0)), np.eye(4), atol=0)

    def test_quarter_turn_about_z(self):
        out = rotation_z(np.pi / 2) @ np.array([0.0, 1.0, 0.0, 0.0])
        assert_allclose(out, [0, 0, 1, 0], atol=1e-15)

    @settings(max_examples=60, deadline=None)
    @given(axis_angles())
    def test_spatial_block_orthogonal(self, r):
        R = rotation_matrix(r)
        block = R[1:, 1:]
        assert np.max(np.abs(block.T @ block - np.eye(3))) <= 1e-12
        assert abs(np.linalg.det(block) - 1.0) <= 1e-12
        assert_allclose(R[0], [1, 0, 0, 0], atol=0)

    def test_zero_axis_rejected(self):
        with pytest.raises(ValueError):
            AxisAngle([0, 0, 0], 1.0)


class TestStandardRotation:
    def test_north_pole_is_identity(self):
        assert_allclose(standard_rotation([0, 0, 1]), np.eye(4), atol=1e-15)

    def test_x_direction(self):
        out = standard_rotation([1, 0, 0]) @ np.array([0.0, 0, 0, 1])
        assert_allclose(out, [0, 1, 0, 0], atol=1e-15)

    def test_zero_direction_rejected(self):
        with pytest.raises(ValueError):
            standard_rotation([0, 0, 0])

    def test_carries_z_to_direction(self):
        rng = np.random.default_rng(3)
        for _ in range(300):
            d = rng.normal(size=3)
            d /= np.linalg.norm(d)
            out = standard_rotation(d) @ np.array([0.0, 0, 0, 1])
            assert_allclose(out, [0, *d], atol=1e-13)


class TestStandardBoost:
    def test_equal_energies_identity(self):
        assert_allclose(standard_boost_z(1.0, 1.0), np.eye(4), atol=0)

    def test_doubling_energy(self):
        L = standard_boost_z(2.0, 1.0)
        # speed (4-1)/(4+1) = 0.6 read off the matrix
        assert_allclose(L[0, 3] / L[0, 0], 0.6, atol=1e-15)
        assert_allclose(L @ np.array([1.0, 0, 0, 1]), [2, 0, 0, 2], atol=1e-14)

    def test_deboost_negative_speed(self):
        L = standard_boost_z(0.5, 1.0)
        assert_allclose(L[0, 3] / L[0, 0], -0.6, atol=1e-15)

    def test_nonpositive_energy_rejected(self):
        with pytest.raises(ValueError):
            standard_boost_z(-1.0, 1.0)
        with pytest.raises(ValueError):
            standard_boost_z(1.0, 0.0)


class TestStandardLorentz:
    def test_reference_momentum_identity(self):
        assert_allclose(standard_lorentz([1.0, 0, 0, 1], 1.0), np.eye(4), atol=1e-15)

    def test_x_direction_example(self):
        L = standard_lorentz([2.0, 2.0, 0, 0], 1.0)
        assert_allclose(L @ np.array([1.0, 0, 0, 1]), [2, 2, 0, 0], atol=1e-13)

    def test_defining_property(self):
        rng = np.random.default_rng(11)
        k0 = np.array([1.0, 0, 0, 1])
        for _ in range(1000):
            k = random_lightlike(rng)
            out = standard_lorentz(k, 1.0) @ k0
            assert np.max(np.abs(out - k)) <= 1e-12 * k[0]

    def test_timelike_rejected(self):
        with pytest.raises(ValueError, match="lightlike"):
            standard_lorentz([1.0, 0, 0, 0.5], 1.0)


class TestSu2:
    def test_identity(self):
        assert_allclose(su2_matrix(AxisAngle([0, 0, 1], 0.0)), np.eye(2), atol=0)

    def test_z_rotation_phases(self):
        gamma = 0.7
        u = su2_matrix(AxisAngle([0, 0, 1], gamma))
        expected = np.diag([np.exp(-0.5j * gamma), np.exp(0.5j * gamma)])
        assert_allclose(u, expected, atol=1e-15)

    def test_y_rotation_rows(self):
        theta = 1.1
        u = su2_matrix(AxisAngle([0, 1, 0], theta))
        c, s = np.cos(theta / 2), np.sin(theta / 2)
        assert_allclose(u, [[c, -s], [s, c]], atol=1e-15)

    @settings(max_examples=40, deadline=None)
    @given(axis_angles())
    def test_matches_matrix_exponential(self, r):
        sigma_n = sum(n * p for n, p in zip(r.axis, PAULI))
        oracle = expm(-0.5j * r.angle * sigma_n)
        assert np.max(np.abs(su2_matrix(r) - oracle)) <= 1e-12

    @settings(max_examples=40, deadline=None)
    @given(axis_angles())
    def test_unitary_unit_determinant(self, r):
        u = su2_matrix(r)
        assert np.max(np.abs(u @ u.conj().T - np.eye(2))) <= 1e-12
        assert abs(np.linalg.det(u) - 1.0) <= 1e-12


def test_rotation_composition_through_double_cover():
    rng = np.random.default_rng(5)
    for _ in range(200):
        r1 = AxisAngle(rng.normal(size=3), rng.uniform(-np.pi, np.pi))
        r2 = AxisAngle(rng.normal(size=3), rng.uniform(-np.pi, np.pi))
        direct = rotation_matrix(r1) @ rotation_matrix(r2)
        composed = rotation_matrix(compose_axis_angle(r1, r2))
        assert np.max(np.abs(direct - composed)) <= 1e-10


def test_metric_preserved_by_random_products():
    rng = np.random.default_rng(9)
    for _ in range(200):
        m = np.eye(4)
        for _ in range(rng.integers(1, 9)):
            if rng.random() < 0.5:
                m = m @ rotation_matrix(
                    AxisAngle(rng.normal(size=3), rng.uniform(-np.pi, np.pi))
                )
            else:
                d = rng.normal(size=3)
                d /= np.linalg.norm(d)
                m = m @ boost_matrix(np.tanh(rng.uniform(0, 0.8)) * d)
        assert metric_residual(m) <= 1e-12
        assert abs(np.linalg.det(m) - 1.0) <= 1e-12


def test_minkowski_signature():
    assert minkowski([1, 0, 0, 0], [1, 0, 0, 0]) == 1.0
    assert minkowski([0, 1, 0, 0], [0, 1, 0, 0]) == -1.0
    assert minkowski([1, 1, 0, 0], [1, 1, 0, 0]) == 0.0


def test_polar_azimuth_pole_convention():
    theta, phi = polar_azimuth([0, 0, 1])
    assert theta == 0.0 and phi == 0.0
    theta, phi = polar_azimuth([0, 0, -2.0])
    assert theta == pytest.approx(np.pi) and phi == 0.0
    theta, phi = polar_azimuth([1, 1, 0])
    assert theta == pytest.approx(np.pi / 2)
    assert phi == pytest.approx(np.pi / 4)


def test_is_rotation_detects_boosts():
    assert is_rotation(rotation_y(0.4))
    assert not is_rotation(boost_matrix([0, 0, 0.4]))
