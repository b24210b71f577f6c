"""The subgroup of Lorentz transformations fixing the reference null momentum.

For a massless particle moving along +z with reference momentum
k0 = (kappa, 0, 0, kappa), the stabilizer is generated by

* rotations about z, and
* two-parameter "isoenergetic boost-rotations": a boost chosen so the energy
  of k0 is unchanged, followed by the rotation that carries the tilted
  momentum back to +z.

The boost-rotation family ``ibr_matrix(alpha)`` is abelian and quadratic in
its 2-vector parameter; together with z-rotations it realizes the Euclidean
group of the plane.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .lorentz import (
    AxisAngle,
    Z_HAT,
    boost_matrix,
    rotation_matrix,
    rotation_z,
)

K0_NULL = np.array([1.0, 0.0, 0.0, 1.0])  # reference null direction (kappa = 1)
_Z_MINUS_NULL = np.array([1.0, 0.0, 0.0, -1.0])


def _check_theta(theta: float) -> float:
    theta = float(theta)
    if not 0.0 < theta < math.pi:
        raise ValueError("degenerate isoenergetic direction")
    return theta


def isoenergetic_velocity(theta: float, phi: float) -> np.ndarray:
    """Boost velocity along the direction (theta, phi) that preserves the energy of k0.

    The signed speed is -2 cos(theta)/(1 + cos^2 theta): negative for
    theta < pi/2, zero in the transverse plane, and approaching light speed
    at the poles (which are rejected).
    """
    theta = _check_theta(theta)
    c = math.cos(theta)
    speed = -2.0 * c / (1.0 + c * c)
    direction = np.array(
        [math.sin(theta) * math.cos(phi), math.sin(theta) * math.sin(phi), c]
    )
    return speed * direction


def final_polar_angle(theta: float) -> float:
    """Signed polar angle, in (-pi, pi), of k0's momentum after the isoenergetic boost."""
    theta = _check_theta(theta)
    return 2.0 * theta - math.pi


def alpha_from_angles(theta: float, phi: float) -> np.ndarray:
    """Abelian parameter alpha = -2 cot(theta) (cos phi, sin phi) of the boost-rotation."""
    theta = _check_theta(theta)
    scale = -2.0 / math.tan(theta)
    return scale * np.array([math.cos(phi), math.sin(phi)])


def ibr_matrix(alpha) -> np.ndarray:
    """Closed-form matrix of the isoenergetic boost-rotation with parameter ``alpha``.

    Quadratic in alpha and exactly fixes (kappa, 0, 0, kappa) for every kappa.
    """
    ax, ay = float(alpha[0]), float(alpha[1])
    a2 = ax * ax + ay * ay
    return np.array(
        [
            [1.0 + 0.5 * a2, ax, ay, -0.5 * a2],
            [ax, 1.0, 0.0, -ax],
            [ay, 0.0, 1.0, -ay],
            [0.5 * a2, ax, ay, 1.0 - 0.5 * a2],
        ]
    )


def ibr_physical_factors(theta: float, phi: float) -> tuple[np.ndarray, np.ndarray]:
    """(rotation, boost) pair whose product equals ``ibr_matrix(alpha_from_angles(...))``.

    The boost is the isoenergetic boost; the rotation turns the boosted
    momentum (at signed polar angle ``final_polar_angle(theta)``, azimuth phi)
    back to +z. Its axis is the in-plane normal z_hat x u1 with angle
    -final_polar_angle; this orientation is fixed by requiring the product to
    fix k0.
    """
    theta = _check_theta(theta)
    boost = boost_matrix(isoenergetic_velocity(theta, phi))
    psi0 = final_polar_angle(theta)
    u1 = np.array([math.cos(phi), math.sin(phi), 0.0])
    axis = np.cross(Z_HAT, u1)
    rot = rotation_matrix(AxisAngle(axis, -psi0))
    return rot, boost


@dataclass(frozen=True)
class LittleGroupElement:
    """Canonical factorization R_z(gamma) * ibr_matrix(alpha) of a stabilizer element."""

    gamma: float
    alpha: np.ndarray

    def matrix(self) -> np.ndarray:
        return rotation_z(self.gamma) @ ibr_matrix(self.alpha)


def decompose_little_group(M, tol: float = 1e-10) -> LittleGroupElement:
    """Split a matrix fixing k0 into (gamma, alpha) with M = R_z(gamma) ibr(alpha).

    The abelian parameter is read off from the action on the opposite null
    direction (1,0,0,-1), which z-rotations leave invariant; gamma then comes
    from the x-y block of the rotation remainder. Raises ValueError when M
    does not fix k0 or does not reconstruct.
    """
    M = np.asarray(M, dtype=float)
    if float(np.max(np.abs(M @ K0_NULL - K0_NULL))) > tol:
        raise ValueError("not a little-group element of k0")
    image = M @ _Z_MINUS_NULL
    # In the factorization ibr(alpha') R_z(gamma), the opposite null direction
    # picks out alpha' directly: image = (1+|a|^2, 2ax, 2ay, |a|^2-1).
    alpha_rot = 0.5 * image[1:3]
    remainder = ibr_matrix(-alpha_rot) @ M
    gamma = math.atan2(remainder[2, 1], remainder[1, 1])
    cg, sg = math.cos(gamma), math.sin(gamma)
    alpha = np.array(
        [
            cg * alpha_rot[0] + sg * alpha_rot[1],
            -sg * alpha_rot[0] + cg * alpha_rot[1],
        ]
    )
    element = LittleGroupElement(gamma, alpha)
    if float(np.max(np.abs(element.matrix() - M))) > max(tol, 1e-8):
        raise ValueError("matrix does not factor as R_z(gamma) * ibr(alpha)")
    return element


def vector_generators() -> tuple[np.ndarray, np.ndarray]:
    """(J, K): rotation and boost generators in the real 4-vector representation.

    Conventions: rotation_matrix(AxisAngle(n, a)) = exp(a n.J) and
    boost_matrix(tanh(z) n) = exp(z n.K), with no factors of i.
    """
    J = np.zeros((3, 4, 4))
    J[0, 2, 3], J[0, 3, 2] = -1.0, 1.0  # about x: y -> z
    J[1, 3, 1], J[1, 1, 3] = -1.0, 1.0  # about y: z -> x
    J[2, 1, 2], J[2, 2, 1] = -1.0, 1.0  # about z: x -> y
    K = np.zeros((3, 4, 4))
    for i in range(3):
        K[i, 0, i + 1] = K[i, i + 1, 0] = 1.0
    return J, K


def ibr_generators() -> tuple[np.ndarray, np.ndarray]:
    """Commuting nilpotent generators (L_x, L_y) of the boost-rotation family.

    L_x = K_x - J_y and L_y = K_y + J_x in the conventions of
    ``vector_generators``; exp(ax L_x + ay L_y) reproduces ``ibr_matrix``.
    """
    J, K = vector_generators()
    return K[0] - J[1], K[1] + J[0]
