"""Photon polarization vectors, gauge shifts, and the field-strength coefficients.

Reference vectors for momentum along +z:

    eps(k0, +1) = -(0, 1, i, 0)/sqrt(2),    eps(k0, -1) = (0, 1, -i, 0)/sqrt(2),

whose spatial parts are the spherical unit vectors sqrt(4 pi/3) Y_{1,lam}.
General-momentum vectors are carried over by the standard rotation (the
z-boost in the canonical transformation cannot touch transverse components),
so they stay purely spatial and satisfy k.eps = 0 and eps*.eps = -1.

Physical objects depend on eps only through the antisymmetric coefficient
T^{mu nu} = k^mu eps^nu - k^nu eps^mu, which is invariant under the gauge
freedom eps -> eps + f(k) k.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .lorentz import (
    is_proper_orthochronous,
    minkowski,
    require_lightlike,
    standard_rotation,
)
from .wigner import wigner_boost

_SQRT2 = np.sqrt(2.0)
_EPS_REF = {
    1: np.array([0.0, -1.0, -1.0j, 0.0]) / _SQRT2,
    -1: np.array([0.0, 1.0, -1.0j, 0.0]) / _SQRT2,
}


@dataclass(frozen=True)
class PolarizationVector:
    eps: np.ndarray  # complex (4,)
    k: np.ndarray  # lightlike (4,)
    lam: int


@dataclass(frozen=True)
class FieldTensorCoeff:
    T: np.ndarray  # complex antisymmetric (4, 4)
    k: np.ndarray
    lam: int


def _check_lam(lam: int) -> int:
    if lam not in (1, -1):
        raise ValueError("helicity must be +1 or -1")
    return lam


def reference_polarization(lam: int, kappa: float = 1.0) -> PolarizationVector:
    """Polarization vector of the reference momentum (kappa, 0, 0, kappa)."""
    _check_lam(lam)
    k0 = np.array([kappa, 0.0, 0.0, kappa])
    return PolarizationVector(_EPS_REF[lam].copy(), k0, lam)


def polarization(k, lam: int, kappa_ref: float = 1.0) -> PolarizationVector:
    """Canonical-gauge polarization vector for a general lightlike momentum.

    Equals the standard rotation applied to the reference vector; the result
    does not depend on ``kappa_ref`` (kept in the signature because the
    canonical construction is phrased relative to a reference energy).
    """
    _check_lam(lam)
    k = require_lightlike(k)
    del kappa_ref  # the z-boost leg acts trivially on transverse vectors
    eps = standard_rotation(k[1:]).astype(complex) @ _EPS_REF[lam]
    return PolarizationVector(eps, k, lam)


def polarization_spatial(kvec, lam: int) -> np.ndarray:
    """Vectorized spatial part of the canonical polarization, shape (..., 3).

    Closed form of R_z(phi) R_y(theta) R_z(-phi) acting on the reference
    spatial vector; the azimuth is fixed to zero on the polar axis.
    """
    _check_lam(lam)
    k = np.asarray(kvec, dtype=float)
    kx, ky, kz = k[..., 0], k[..., 1], k[..., 2]
    kn = np.sqrt(kx * kx + ky * ky + kz * kz)
    safe = np.where(kn > 0.0, kn, 1.0)
    ct = np.clip(kz / safe, -1.0, 1.0)
    st = np.sqrt(np.clip(1.0 - ct * ct, 0.0, None))
    perp = np.hypot(kx, ky)
    u = np.where(perp > 1e-13 * safe, kx + 1j * ky, 1.0)
    eiphi = u / np.abs(u)
    cp, sp = eiphi.real, eiphi.imag
    # R0[k_hat] (x_hat + i y_hat) = e^{i phi} (ct*cp - i sp, ct*sp + i cp, -st)
    plus = np.stack(
        [
            eiphi * (ct * cp - 1j * sp),
            eiphi * (ct * sp + 1j * cp),
            eiphi * (-st),
        ],
        axis=-1,
    ) * (-1.0 / _SQRT2)
    if lam == 1:
        return plus
    return -np.conj(plus)


def gauge_shift(p: PolarizationVector, f: complex) -> PolarizationVector:
    """Shift eps -> eps + f k; preserves k.eps = 0 (k lightlike), not eps*.eps."""
    return PolarizationVector(p.eps + complex(f) * p.k.astype(complex), p.k, p.lam)


def tensor_coeff(p: PolarizationVector) -> FieldTensorCoeff:
    """Gauge-invariant antisymmetric coefficient k^mu eps^nu - k^nu eps^mu."""
    k = p.k.astype(complex)
    T = np.outer(k, p.eps) - np.outer(p.eps, k)
    return FieldTensorCoeff(T, p.k, p.lam)


def covariance_residual(
    Lambda, k, lam: int, kappa_ref: float = 1.0
) -> tuple[complex, float]:
    """How well Lambda eps(k) = eps(Lambda k) e^{-i lam w} + (coef) (Lambda k) holds.

    The scalar coefficient of the gauge term along (Lambda k) is fitted by
    least squares and returned with the max-norm residual of the relation
    (which also folds in the transversality of the transported vector).
    Rotations come back with a vanishing coefficient.
    """
    Lambda = np.asarray(Lambda, dtype=float)
    if not is_proper_orthochronous(Lambda):
        raise ValueError("transformation is not proper orthochronous")
    _check_lam(lam)
    k = require_lightlike(k)
    k_out = Lambda @ k
    w = wigner_boost(Lambda, k, kappa_ref).w
    lhs = Lambda.astype(complex) @ polarization(k, lam, kappa_ref).eps
    eps_out = polarization(k_out, lam, kappa_ref).eps
    diff = lhs - eps_out * np.exp(-1j * lam * w)
    k_c = k_out.astype(complex)
    coef = complex((np.conj(k_c) @ diff) / (np.conj(k_c) @ k_c))
    scale = max(1.0, float(np.max(np.abs(lhs))))
    residual = float(np.max(np.abs(diff - coef * k_c))) / scale
    transversality = abs(minkowski(k_out, eps_out)) / max(1.0, k_out[0] ** 2)
    return coef, max(residual, float(transversality))
