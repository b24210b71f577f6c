import numpy as np
import pytest
from numpy.testing import assert_allclose

from photonamp.lorentz import (
    AxisAngle,
    beta_from_rapidity,
    boost_matrix,
    rotation_matrix,
    rotation_z,
)
from photonamp.wigner import (
    boost_half_phase,
    rotation_half_phase,
    wigner_boost,
    wigner_phase_boost_closed,
    wigner_phase_rotation_closed,
    wigner_rotation,
)


def random_lightlike(rng):
    d = rng.normal(size=3)
    d /= np.linalg.norm(d)
    omega = rng.uniform(0.3, 3.0)
    return np.array([omega, *(omega * d)])


def random_axis_angle(rng):
    return AxisAngle(rng.normal(size=3), rng.uniform(-np.pi, np.pi))


class TestRotationAngle:
    def test_identity(self):
        d = np.array([1.2, -0.8, 1.2])
        d /= np.linalg.norm(d)
        k = np.array([2.0, *(2.0 * d)])
        data = wigner_rotation(np.eye(4), k)
        assert data.w == pytest.approx(0.0)
        assert data.alpha == pytest.approx([0.0, 0.0])

    def test_z_rotation_passes_through(self):
        rng = np.random.default_rng(0)
        for _ in range(50):
            k = random_lightlike(rng)
            gamma = rng.uniform(-np.pi, np.pi)
            data = wigner_rotation(rotation_z(gamma), k)
            assert abs(np.exp(-1j * data.w) - np.exp(-1j * gamma)) <= 1e-12

    def test_reconstruction_residual(self):
        rng = np.random.default_rng(1)
        for _ in range(300):
            data = wigner_rotation(
                rotation_matrix(random_axis_angle(rng)), random_lightlike(rng)
            )
            assert data.residual <= 1e-10

    def test_boost_input_rejected(self):
        with pytest.raises(ValueError, match="rotation"):
            wigner_rotation(boost_matrix([0, 0, 0.5]), np.array([1.0, 0, 0, 1]))

    def test_rotation_about_momentum_gives_the_angle(self):
        rng = np.random.default_rng(2)
        for _ in range(100):
            k = random_lightlike(rng)
            angle = rng.uniform(-np.pi, np.pi)
            data = wigner_rotation(rotation_matrix(AxisAngle(k[1:], angle)), k)
            assert abs(np.exp(-1j * data.w) - np.exp(-1j * angle)) <= 1e-9


class TestBoostAngle:
    def test_identity(self):
        data = wigner_boost(np.eye(4), np.array([1.5, 0.9, 0, 1.2]))
        assert data.w == pytest.approx(0.0)
        assert_allclose(data.alpha, [0, 0], atol=1e-12)

    def test_z_boost_has_zero_angle(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            k = random_lightlike(rng)
            data = wigner_boost(boost_matrix([0, 0, 0.7]), k)
            assert abs(data.w) <= 1e-10

    def test_mixed_transformations_accepted(self):
        # products of boosts and rotations go through the general decomposition
        m = rotation_z(0.4) @ boost_matrix([0.2, 0, 0.3])
        data = wigner_boost(m, np.array([1.0, 0.6, 0, 0.8]))
        assert data.residual <= 1e-10

    def test_non_lorentz_rejected(self):
        with pytest.raises(ValueError):
            wigner_boost(2.0 * np.eye(4), np.array([1.0, 0, 0, 1]))


class TestClosedForms:
    def test_identity_rotation_phase(self):
        k = np.array([1.0, 0.3, 0.4, np.sqrt(1 - 0.25)])
        assert wigner_phase_rotation_closed(
            AxisAngle([0, 0, 1], 0.0), k
        ) == pytest.approx(1.0)

    def test_z_rotation_half_phase(self):
        gamma = 0.9
        k = np.array([1.0, 0.6, 0, 0.8])
        phase = wigner_phase_rotation_closed(AxisAngle([0, 0, 1], gamma), k)
        assert phase == pytest.approx(np.exp(-0.5j * gamma))

    def test_zero_rapidity(self):
        k = np.array([1.0, 0.6, 0, 0.8])
        assert wigner_phase_boost_closed([0, 0, 0], k) == pytest.approx(1.0)

    def test_z_boost_real_positive(self):
        k = np.array([1.0, 0.6, 0, 0.8])
        assert wigner_phase_boost_closed([0, 0, 1.3], k) == pytest.approx(1.0)

    def test_degenerate_alignment_raises(self):
        # rotating the north pole to the south pole leaves no defined azimuth
        k = np.array([1.0, 0, 0, 1.0])
        with pytest.raises(ValueError, match="undefined half-phase"):
            wigner_phase_rotation_closed(AxisAngle([0, 1, 0], np.pi), k)

    def test_vectorized_matches_scalar(self):
        rng = np.random.default_rng(4)
        r = random_axis_angle(rng)
        zeta = rng.normal(size=3)
        ks = np.array([random_lightlike(rng) for _ in range(40)])
        rot_vec = rotation_half_phase(r, ks[:, 1:])
        boost_vec = boost_half_phase(zeta, ks[:, 1:])
        for i, k in enumerate(ks):
            assert rot_vec[i] == pytest.approx(wigner_phase_rotation_closed(r, k))
            assert boost_vec[i] == pytest.approx(wigner_phase_boost_closed(zeta, k))


class TestDualPath:
    def test_rotations(self):
        rng = np.random.default_rng(5)
        worst = 0.0
        for _ in range(500):
            r = random_axis_angle(rng)
            k = random_lightlike(rng)
            data = wigner_rotation(rotation_matrix(r), k)
            closed = wigner_phase_rotation_closed(r, k)
            worst = max(worst, abs(closed**2 - np.exp(-1j * data.w)))
        assert worst <= 1e-9

    def test_boosts(self):
        rng = np.random.default_rng(6)
        worst = 0.0
        for _ in range(500):
            d = rng.normal(size=3)
            d /= np.linalg.norm(d)
            zeta = rng.uniform(0, 2.0) * d
            lam = boost_matrix(beta_from_rapidity(zeta))
            k = random_lightlike(rng)
            data = wigner_boost(lam, k)
            closed = wigner_phase_boost_closed(zeta, k)
            worst = max(worst, abs(closed**2 - np.exp(-1j * data.w)))
        assert worst <= 1e-9


def test_phase_cocycle_under_composition():
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(200):
        r1, r2 = random_axis_angle(rng), random_axis_angle(rng)
        k = random_lightlike(rng)
        R1, R2 = rotation_matrix(r1), rotation_matrix(r2)
        w_total = wigner_rotation(R2 @ R1, k).w
        w1 = wigner_rotation(R1, k).w
        w2 = wigner_rotation(R2, R1 @ k).w
        worst = max(
            worst, abs(np.exp(-1j * w_total) - np.exp(-1j * w2) * np.exp(-1j * w1))
        )
    assert worst <= 1e-9


def test_half_phase_squares_to_state_phase():
    rng = np.random.default_rng(8)
    for _ in range(50):
        data = wigner_rotation(
            rotation_matrix(random_axis_angle(rng)), random_lightlike(rng)
        )
        assert abs(data.phase_half) == pytest.approx(1.0, abs=1e-12)
        assert data.phase_half**2 == pytest.approx(data.phase(1))
        assert data.phase(-1) == pytest.approx(np.conj(data.phase(1)))
