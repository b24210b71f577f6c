"""Exact 4x4 Lorentz algebra: boosts, rotations, and standard transformations.

Conventions used throughout the package:

* metric signature (+, -, -, -), ``METRIC = diag(1, -1, -1, -1)``;
* transformations act actively on column 4-vectors, matrices are indexed
  row-first (contravariant index first);
* natural units (hbar = c = 1), so momenta carry energy units and positions
  inverse-energy units.

Four-vectors are plain ``numpy`` arrays of shape ``(4,)`` (or ``(..., 4)``
where broadcasting is supported); Lorentz matrices are ``(4, 4)`` arrays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])

X_HAT = np.array([1.0, 0.0, 0.0])
Y_HAT = np.array([0.0, 1.0, 0.0])
Z_HAT = np.array([0.0, 0.0, 1.0])

_PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
_PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
_PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)


def minkowski(a, b):
    """Minkowski product a.b with signature (+,-,-,-); broadcasts over leading axes."""
    a = np.asarray(a)
    b = np.asarray(b)
    return a[..., 0] * b[..., 0] - np.sum(a[..., 1:] * b[..., 1:], axis=-1)


def four_momentum(kvec) -> np.ndarray:
    """On-shell massless 4-momentum (|k|, k) from spatial momenta of shape (..., 3)."""
    k = np.asarray(kvec, dtype=float)
    omega = np.linalg.norm(k, axis=-1)
    return np.concatenate([omega[..., None], k], axis=-1)


def is_lightlike(k, tol: float = 1e-9) -> bool:
    k = np.asarray(k, dtype=float)
    if k.shape != (4,) or k[0] <= 0.0:
        return False
    return abs(minkowski(k, k)) <= tol * k[0] ** 2


def require_lightlike(k, tol: float = 1e-9) -> np.ndarray:
    k = np.asarray(k, dtype=float)
    if not is_lightlike(k, tol):
        raise ValueError(f"momentum {k!r} is not lightlike with positive energy")
    return k


@dataclass(frozen=True)
class AxisAngle:
    """Rotation by ``angle`` (radians) about the unit 3-vector ``axis``.

    The axis is normalized on construction; a zero axis is rejected.
    """

    axis: np.ndarray
    angle: float

    def __post_init__(self):
        axis = np.asarray(self.axis, dtype=float)
        n = np.linalg.norm(axis)
        if axis.shape != (3,) or n < 1e-12:
            raise ValueError("rotation axis must be a nonzero 3-vector")
        object.__setattr__(self, "axis", axis / n)
        object.__setattr__(self, "angle", float(self.angle))


def rotation3(r: AxisAngle) -> np.ndarray:
    """Active 3x3 rotation matrix (right-hand rule) for an axis-angle pair."""
    n = r.axis
    c, s = math.cos(r.angle), math.sin(r.angle)
    cross = np.array(
        [
            [0.0, -n[2], n[1]],
            [n[2], 0.0, -n[0]],
            [-n[1], n[0], 0.0],
        ]
    )
    return c * np.eye(3) + s * cross + (1.0 - c) * np.outer(n, n)


def rotation_matrix(r: AxisAngle) -> np.ndarray:
    """4x4 spatial rotation: trivial time row/column, rotation3 block."""
    out = np.eye(4)
    out[1:, 1:] = rotation3(r)
    return out


def rotation_z(angle: float) -> np.ndarray:
    return rotation_matrix(AxisAngle(Z_HAT, angle))


def rotation_y(angle: float) -> np.ndarray:
    return rotation_matrix(AxisAngle(Y_HAT, angle))


def boost_matrix(beta) -> np.ndarray:
    """Active boost by 3-velocity ``beta``; maps (m,0,0,0) to m*(gamma, gamma*beta).

    Raises ValueError for superluminal speeds.
    """
    beta = np.asarray(beta, dtype=float)
    b2 = float(beta @ beta)
    if b2 >= 1.0:
        raise ValueError("superluminal boost")
    if b2 == 0.0:
        return np.eye(4)
    gamma = 1.0 / math.sqrt(1.0 - b2)
    out = np.eye(4)
    out[0, 0] = gamma
    out[0, 1:] = gamma * beta
    out[1:, 0] = gamma * beta
    out[1:, 1:] += (gamma - 1.0) / b2 * np.outer(beta, beta)
    return out


def rapidity_from_beta(beta) -> np.ndarray:
    """Rapidity 3-vector zeta = atanh(|beta|) * beta_hat."""
    beta = np.asarray(beta, dtype=float)
    b = np.linalg.norm(beta)
    if b >= 1.0:
        raise ValueError("superluminal boost")
    if b == 0.0:
        return np.zeros(3)
    return math.atanh(b) * beta / b


def beta_from_rapidity(zeta) -> np.ndarray:
    zeta = np.asarray(zeta, dtype=float)
    z = np.linalg.norm(zeta)
    if z == 0.0:
        return np.zeros(3)
    return math.tanh(z) * zeta / z


def polar_azimuth(v) -> tuple[float, float]:
    """Spherical angles (theta, phi) of a nonzero 3-vector; phi := 0 on the z-axis."""
    v = np.asarray(v, dtype=float)
    n = np.linalg.norm(v)
    if n == 0.0:
        raise ValueError("zero vector has no direction")
    theta = math.acos(max(-1.0, min(1.0, v[2] / n)))
    if abs(v[0]) == 0.0 and abs(v[1]) == 0.0:
        return theta, 0.0
    return theta, math.atan2(v[1], v[0])


def standard_rotation(k_hat) -> np.ndarray:
    """Canonical rotation R_z(phi) R_y(theta) R_z(-phi) carrying +z to ``k_hat``.

    On the poles the azimuth is fixed to zero, making the result the identity
    (north) or a rotation about y by pi (south).
    """
    k_hat = np.asarray(k_hat, dtype=float)
    n = np.linalg.norm(k_hat)
    if n == 0.0:
        raise ValueError("direction must be a nonzero 3-vector")
    theta, phi = polar_azimuth(k_hat / n)
    return rotation_z(phi) @ rotation_y(theta) @ rotation_z(-phi)


def standard_boost_z(omega: float, kappa_ref: float) -> np.ndarray:
    """z-boost carrying the reference null energy ``kappa_ref`` to ``omega``.

    The boost speed is (omega^2 - kappa^2)/(omega^2 + kappa^2), negative when
    de-boosting to lower energy.
    """
    if omega <= 0.0 or kappa_ref <= 0.0:
        raise ValueError("energies must be positive")
    beta_z = (omega**2 - kappa_ref**2) / (omega**2 + kappa_ref**2)
    return boost_matrix(np.array([0.0, 0.0, beta_z]))


def standard_lorentz(k, kappa_ref: float) -> np.ndarray:
    """Canonical transformation carrying (kappa,0,0,kappa) to the lightlike ``k``.

    Composition: z-boost to energy k^0, then the standard rotation into k_hat.
    """
    k = require_lightlike(k)
    return standard_rotation(k[1:]) @ standard_boost_z(k[0], kappa_ref)


def su2_matrix(r: AxisAngle) -> np.ndarray:
    """Spin-1/2 rotation matrix exp(-i angle (axis . sigma)/2), Condon-Shortley basis."""
    half = 0.5 * r.angle
    n = r.axis
    sigma_n = n[0] * _PAULI_X + n[1] * _PAULI_Y + n[2] * _PAULI_Z
    return math.cos(half) * np.eye(2, dtype=complex) - 1j * math.sin(half) * sigma_n


def compose_axis_angle(r1: AxisAngle, r2: AxisAngle) -> AxisAngle:
    """Axis-angle of the composition r1 r2, computed through the spin-1/2 cover."""
    u = su2_matrix(r1) @ su2_matrix(r2)
    w = u[0, 0].real
    vec = np.array([-u[0, 1].imag, -u[0, 1].real, -u[0, 0].imag])
    s = np.linalg.norm(vec)
    if s < 1e-15:
        return AxisAngle(Z_HAT, 0.0)
    return AxisAngle(vec / s, 2.0 * math.atan2(s, w))


def metric_residual(L) -> float:
    """Max-norm deviation of L^T g L from g."""
    L = np.asarray(L, dtype=float)
    return float(np.max(np.abs(L.T @ METRIC @ L - METRIC)))


def lorentz_inverse(L) -> np.ndarray:
    """Inverse of a Lorentz matrix via the metric: L^{-1} = g L^T g."""
    L = np.asarray(L, dtype=float)
    return METRIC @ L.T @ METRIC


def is_rotation(L, tol: float = 1e-9) -> bool:
    """True when L is a pure spatial rotation (trivial time row/column, det +1)."""
    L = np.asarray(L, dtype=float)
    if L.shape != (4, 4):
        return False
    time_ok = (
        abs(L[0, 0] - 1.0) <= tol
        and np.all(np.abs(L[0, 1:]) <= tol)
        and np.all(np.abs(L[1:, 0]) <= tol)
    )
    if not time_ok:
        return False
    R = L[1:, 1:]
    return (
        float(np.max(np.abs(R.T @ R - np.eye(3)))) <= tol
        and abs(np.linalg.det(R) - 1.0) <= 10 * tol
    )


def is_proper_orthochronous(L, tol: float = 1e-9) -> bool:
    L = np.asarray(L, dtype=float)
    if L.shape != (4, 4) or metric_residual(L) > tol:
        return False
    return L[0, 0] >= 1.0 - tol and np.linalg.det(L) > 0.0
