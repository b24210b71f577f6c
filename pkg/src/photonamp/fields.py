"""Coherent-state expectation values of the electromagnetic field strengths.

For a wavepacket amplitude psi tuned to mean photon number one, the field
expectation is the momentum integral

    <F^{mu nu}(x)> = C int d^3k / sqrt(omega) sum_lam T^{mu nu}(k, lam)
                     psi_lam(k) e^{-i k.x}  + c.c.,

with T the gauge-invariant coefficient k^mu eps^nu - k^nu eps^mu and
C = 1/sqrt(16 pi^3). The sign/phase convention is pinned by the narrowband
closed form below: a +z circular packet of central energy kappa gives

    E = sqrt(kappa) G(x,t) (cos chi, -sin chi, 0),
    B = sqrt(kappa) G(x,t) (sin chi, cos chi, 0),   chi = kappa (z - t),

where G is the unit-norm Gaussian envelope of width sigma_x = 1/(2 sigma_k)
translating at the speed of light. Narrowband evaluation is exact to first
order in sigma_k/kappa and valid for |t| well inside (kappa/sigma_k) sigma_x.

Grid fills exploit the tensor-product structure of both the Gauss-Legendre
momentum box and the Cartesian spatial grid, reducing the Fourier sum to
three small tensor contractions per field component.

Everything is in natural units; only ``localization_scale`` and the CLI
convert to laboratory units via hbar*c.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .amplitudes import HELICITIES, HelicityAmplitude, expectation_momentum
from .lorentz import (
    AxisAngle,
    boost_matrix,
    four_momentum,
    lorentz_inverse,
    rotation_matrix,
)
from .polarization import polarization_spatial
from .quadrature import BoxQuadrature

PREFACTOR = 1.0 / math.sqrt(16.0 * math.pi**3)
HBARC_EV_NM = 197.3269804
HBARC_EV_UM = HBARC_EV_NM * 1e-3

#: Carrier sampling rule for energy/momentum grid integrals: at least 8
#: points per wavelength, i.e. spacing <= (2 pi / kappa) / 8.
CARRIER_POINTS_PER_WAVELENGTH = 8


class UnderResolvedGridError(ValueError):
    """Spatial grid too coarse to resolve the carrier wave."""


class NarrowbandValidityWarning(UserWarning):
    """Evaluation time is outside the no-spreading window of the narrowband form."""


@dataclass(frozen=True)
class SpatialGrid:
    """Uniform Cartesian grid: origin corner, per-axis spacing, n points per axis."""

    origin: np.ndarray
    spacing: np.ndarray
    npts: int

    def __post_init__(self):
        origin = np.asarray(self.origin, dtype=float).reshape(3)
        spacing = np.broadcast_to(np.asarray(self.spacing, dtype=float), (3,)).copy()
        if np.any(spacing <= 0.0) or self.npts < 2:
            raise ValueError("grid spacing must be positive and npts >= 2")
        object.__setattr__(self, "origin", origin)
        object.__setattr__(self, "spacing", spacing)

    @classmethod
    def centered(cls, halfwidth, npts: int, center=(0.0, 0.0, 0.0)) -> "SpatialGrid":
        halfwidth = np.broadcast_to(np.asarray(halfwidth, dtype=float), (3,)).copy()
        center = np.asarray(center, dtype=float).reshape(3)
        spacing = 2.0 * halfwidth / (npts - 1)
        return cls(center - halfwidth, spacing, npts)

    def axes(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        idx = np.arange(self.npts)
        return tuple(self.origin[i] + self.spacing[i] * idx for i in range(3))

    def trapezoid_weights(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        out = []
        for i in range(3):
            w = np.full(self.npts, self.spacing[i])
            w[0] *= 0.5
            w[-1] *= 0.5
            out.append(w)
        return tuple(out)

    @property
    def shape(self) -> tuple[int, int, int]:
        return (self.npts, self.npts, self.npts)


@dataclass
class FieldTensorGrid:
    """Real E and B fields sampled on a spatial grid at a fixed time.

    ``kappa`` records the carrier energy when known, enabling the resolution
    check in :func:`energy_momentum_integrals`.
    """

    grid: SpatialGrid
    t: float
    E: np.ndarray  # (n, n, n, 3)
    B: np.ndarray
    kappa: float | None = None

    def tensor_at(self, ix: int, iy: int, iz: int) -> np.ndarray:
        """Antisymmetric field-strength matrix at one node (E_i = -F^{0i})."""
        E = self.E[ix, iy, iz]
        B = self.B[ix, iy, iz]
        F = np.zeros((4, 4))
        F[0, 1:] = -E
        F[1:, 0] = E
        F[1, 2], F[2, 1] = -B[2], B[2]
        F[2, 3], F[3, 2] = -B[0], B[0]
        F[3, 1], F[1, 3] = -B[1], B[1]
        return F

    def energy_density(self) -> np.ndarray:
        return 0.5 * (np.sum(self.E * self.E, axis=-1) + np.sum(self.B * self.B, axis=-1))

    def poynting(self) -> np.ndarray:
        return np.cross(self.E, self.B)


@dataclass(frozen=True)
class NarrowbandSpec:
    """Central energy and momentum width of a +z circular Gaussian packet.

    The position width is locked to sigma_x = 1/(2 sigma_k); the closed form
    stays valid while |t| is small against (kappa/sigma_k) sigma_x.
    """

    kappa: float
    sigma_k: float

    def __post_init__(self):
        if self.kappa <= 0.0 or self.sigma_k <= 0.0:
            raise ValueError("kappa and sigma_k must be positive")

    @property
    def sigma_x(self) -> float:
        return 0.5 / self.sigma_k

    @property
    def spreading_window(self) -> float:
        return (self.kappa / self.sigma_k) * self.sigma_x


# -- pointwise momentum-integral evaluation ----------------------------------

#: Field integrands are linear in psi, so their box-edge tails are only the
#: square root of the density tails the amplitude box was sized for. Widening
#: the box by 1.5 restores the same tail suppression for field quadratures.
FIELD_BOX_SCALE = 1.5


def _node_data(psi: HelicityAmplitude):
    box = BoxQuadrature(
        psi.quad.center, FIELD_BOX_SCALE * psi.quad.halfwidth, psi.quad.npts
    )
    pts = box.points()
    w = box.weights()
    omega = np.linalg.norm(pts, axis=-1)
    return box, pts, w, omega


def positive_frequency_field(psi: HelicityAmplitude, x, gauge=None) -> np.ndarray:
    """Complex positive-frequency tensor F^{(+)mu nu}(x); its term + c.c. is <F>.

    ``gauge``: optional callable f(kpts) -> complex (N,) shifting every
    polarization vector by f(k) k; observables built from the antisymmetric
    coefficient are unchanged by it.
    """
    x = np.asarray(x, dtype=float).reshape(4)
    _, pts, w, omega = _node_data(psi)
    phase = np.exp(-1j * (omega * x[0] - pts @ x[1:]))
    base = PREFACTOR * w / np.sqrt(omega) * phase
    k4 = four_momentum(pts)
    S = np.zeros((4, 4), dtype=complex)
    for lam in HELICITIES:
        if psi.component(lam) is None:
            continue
        vals = psi.evaluate(lam, pts)
        eps4 = np.zeros((len(pts), 4), dtype=complex)
        eps4[:, 1:] = polarization_spatial(pts, lam)
        if gauge is not None:
            eps4 = eps4 + np.asarray(gauge(pts), dtype=complex)[:, None] * k4
        c = base * vals
        A = np.einsum("n,nu,nv->uv", c, k4, eps4)
        S += A - A.T
    return S


def field_expectation_exact(psi: HelicityAmplitude, x, gauge=None) -> np.ndarray:
    """Real antisymmetric <F^{mu nu}> at the spacetime point ``x``."""
    return 2.0 * positive_frequency_field(psi, x, gauge).real


def sipe_wavefunction(psi: HelicityAmplitude, x) -> np.ndarray:
    """Gauge-invariant 3-vector sqrt(2) F^{(+)0i}(x) = -sqrt(2) E^{(+)i}(x)."""
    S = positive_frequency_field(psi, x)
    return math.sqrt(2.0) * S[0, 1:]


def bb_density(psi: HelicityAmplitude, x) -> float:
    """Nonnegative energy-density-like scalar |E^{(+)}|^2 + |B^{(+)}|^2."""
    S = positive_frequency_field(psi, x)
    Ep = -S[0, 1:]
    Bp = -np.array([S[2, 3], S[3, 1], S[1, 2]])
    return float(np.sum(np.abs(Ep) ** 2) + np.sum(np.abs(Bp) ** 2))


def vector_potential(psi: HelicityAmplitude, x, gauge=None) -> np.ndarray:
    """Complex 4-potential (twice the positive-frequency part; real part physical).

    In the canonical gauge the time component vanishes. Gauge shifts move the
    potential but not the reconstructed field strengths.
    """
    x = np.asarray(x, dtype=float).reshape(4)
    _, pts, w, omega = _node_data(psi)
    phase = np.exp(-1j * (omega * x[0] - pts @ x[1:]))
    base = PREFACTOR * w / np.sqrt(omega) * phase
    k4 = four_momentum(pts)
    A_plus = np.zeros(4, dtype=complex)
    for lam in HELICITIES:
        if psi.component(lam) is None:
            continue
        vals = psi.evaluate(lam, pts)
        eps4 = np.zeros((len(pts), 4), dtype=complex)
        eps4[:, 1:] = polarization_spatial(pts, lam)
        if gauge is not None:
            eps4 = eps4 + np.asarray(gauge(pts), dtype=complex)[:, None] * k4
        A_plus += 1j * ((base * vals) @ eps4)
    return 2.0 * A_plus


# -- tensor-product grid fills -------------------------------------------------


def _contract(C: np.ndarray, Ax: np.ndarray, Ay: np.ndarray, Az: np.ndarray) -> np.ndarray:
    t1 = np.tensordot(C, Az, axes=(2, 0))  # (kx, ky, Z)
    t2 = np.tensordot(t1, Ay, axes=(1, 0))  # (kx, Z, Y)
    t3 = np.tensordot(t2, Ax, axes=(0, 0))  # (Z, Y, X)
    return np.transpose(t3, (2, 1, 0))


def positive_frequency_grid(
    psi: HelicityAmplitude, grid: SpatialGrid, t: float = 0.0
) -> tuple[np.ndarray, np.ndarray]:
    """(E^{(+)}, B^{(+)}) complex fields on the grid, shape (n, n, n, 3) each."""
    box, pts, w, omega = _node_data(psi)
    nq = box.npts
    base = PREFACTOR * w / np.sqrt(omega) * np.exp(-1j * omega * t)
    comps = [np.zeros(len(pts), dtype=complex) for _ in range(6)]
    for lam in HELICITIES:
        if psi.component(lam) is None:
            continue
        c = base * psi.evaluate(lam, pts)
        eps = polarization_spatial(pts, lam)
        cross = np.cross(pts, eps)
        for i in range(3):
            comps[i] += c * omega * eps[:, i]  # S^{0i}
            comps[3 + i] += c * cross[:, i]  # S^{23}, S^{31}, S^{12}
    kx, ky, kz = box.axes()
    gx, gy, gz = grid.axes()
    Ax = np.exp(1j * np.outer(kx, gx))
    Ay = np.exp(1j * np.outer(ky, gy))
    Az = np.exp(1j * np.outer(kz, gz))
    fields = [
        _contract(comp.reshape(nq, nq, nq), Ax, Ay, Az) for comp in comps
    ]
    Ep = -np.stack(fields[:3], axis=-1)
    Bp = -np.stack(fields[3:], axis=-1)
    return Ep, Bp


def field_expectation_grid(
    psi: HelicityAmplitude, grid: SpatialGrid, t: float = 0.0
) -> FieldTensorGrid:
    """Real <E>, <B> on the grid; tags the carrier with the packet's mean energy."""
    Ep, Bp = positive_frequency_grid(psi, grid, t)
    kappa = float(expectation_momentum(psi, warn=False)[0])
    return FieldTensorGrid(grid, t, 2.0 * Ep.real, 2.0 * Bp.real, kappa)


# -- narrowband closed form ----------------------------------------------------


def _narrowband_envelope(spec: NarrowbandSpec, X, Y, Z, t: float):
    sx2 = spec.sigma_x**2
    r2 = X * X + Y * Y + (Z - t) ** 2
    return np.exp(-r2 / (4.0 * sx2)) / (2.0 * math.pi * sx2) ** 0.75


def _narrowband_EB(spec: NarrowbandSpec, X, Y, Z, t: float, phase_offset: float = 0.0):
    G = _narrowband_envelope(spec, X, Y, Z, t)
    chi = spec.kappa * (Z - t) + phase_offset
    root = math.sqrt(spec.kappa)
    c, s = np.cos(chi), np.sin(chi)
    Ex, Ey = root * G * c, -root * G * s
    Bx, By = root * G * s, root * G * c
    zero = np.zeros_like(G)
    E = np.stack([Ex, Ey, zero], axis=-1)
    B = np.stack([Bx, By, zero], axis=-1)
    return E, B


def _warn_if_spreading(spec: NarrowbandSpec, t: float):
    if abs(t) > 0.2 * spec.spreading_window:
        warnings.warn(
            f"time {t} is outside the no-spreading window "
            f"(~{spec.spreading_window:.3g}); narrowband fields degrade",
            NarrowbandValidityWarning,
            stacklevel=3,
        )


def field_expectation_narrowband(
    spec: NarrowbandSpec, x, phase_offset: float = 0.0
) -> tuple[np.ndarray, np.ndarray]:
    """Closed-form (E, B) at the spacetime point ``x``."""
    x = np.asarray(x, dtype=float).reshape(4)
    _warn_if_spreading(spec, x[0])
    E, B = _narrowband_EB(
        spec,
        np.asarray(x[1]),
        np.asarray(x[2]),
        np.asarray(x[3]),
        x[0],
        phase_offset,
    )
    return E.reshape(3), B.reshape(3)


def narrowband_grid(
    spec: NarrowbandSpec, grid: SpatialGrid, t: float = 0.0, phase_offset: float = 0.0
) -> FieldTensorGrid:
    """Closed-form fields sampled on a (materializable) spatial grid."""
    _warn_if_spreading(spec, t)
    gx, gy, gz = grid.axes()
    X, Y, Z = np.meshgrid(gx, gy, gz, indexing="ij")
    E, B = _narrowband_EB(spec, X, Y, Z, t, phase_offset)
    return FieldTensorGrid(grid, t, E, B, spec.kappa)


# -- grid integrals --------------------------------------------------------------


def _require_carrier_resolved(grid: SpatialGrid, kappa: float):
    limit = (2.0 * math.pi / kappa) / CARRIER_POINTS_PER_WAVELENGTH
    h_max = float(np.max(grid.spacing))
    if h_max > limit * (1.0 + 1e-12):
        extent = float(np.max(grid.spacing)) * (grid.npts - 1)
        needed = math.ceil(extent / limit) + 1
        raise UnderResolvedGridError(
            f"grid spacing {h_max:.4g} exceeds the carrier limit {limit:.4g} "
            f"(need >= {CARRIER_POINTS_PER_WAVELENGTH} points per wavelength, "
            f"n >= {needed} at this extent)"
        )


def energy_momentum_integrals(ftg: FieldTensorGrid) -> np.ndarray:
    """(int u, int E x B) over the grid by trapezoidal quadrature, as a 4-vector."""
    if ftg.kappa is not None:
        _require_carrier_resolved(ftg.grid, ftg.kappa)
    wx, wy, wz = ftg.grid.trapezoid_weights()
    u = ftg.energy_density()
    S = ftg.poynting()
    energy = float(np.einsum("xyz,x,y,z->", u, wx, wy, wz))
    momentum = [
        float(np.einsum("xyz,x,y,z->", S[..., i], wx, wy, wz)) for i in range(3)
    ]
    return np.array([energy, *momentum])


def narrowband_energy_momentum(
    spec: NarrowbandSpec, grid: SpatialGrid, t: float = 0.0
) -> np.ndarray:
    """Streamed (slab by slab) version of the conservation integrals.

    Identical mathematics to building the full FieldTensorGrid and calling
    :func:`energy_momentum_integrals`, but never materializes the fields;
    use for carrier-resolving grids too large for memory.
    """
    _require_carrier_resolved(grid, spec.kappa)
    _warn_if_spreading(spec, t)
    gx, gy, gz = grid.axes()
    wx, wy, wz = grid.trapezoid_weights()
    wxy = np.outer(wx, wy)
    # Transverse Gaussian factor is z-independent; only the z-envelope, carrier
    # phase and weights change per slab.
    sx2 = spec.sigma_x**2
    norm = (2.0 * math.pi * sx2) ** -0.75
    gauss_x = np.exp(-(gx**2) / (4.0 * sx2))
    gauss_y = np.exp(-(gy**2) / (4.0 * sx2))
    trans = norm * np.outer(gauss_x, gauss_y)
    root = math.sqrt(spec.kappa)
    energy = 0.0
    momentum = np.zeros(3)
    for iz, z in enumerate(gz):
        G = trans * math.exp(-((z - t) ** 2) / (4.0 * sx2))
        chi = spec.kappa * (z - t)
        c, s = math.cos(chi), math.sin(chi)
        Ex, Ey = root * G * c, -root * G * s
        Bx, By = root * G * s, root * G * c
        u = 0.5 * (Ex * Ex + Ey * Ey + Bx * Bx + By * By)
        # E and B are transverse, so the Poynting flux is purely along z
        sz = Ex * By - Ey * Bx
        energy += wz[iz] * float(np.sum(u * wxy))
        momentum[2] += wz[iz] * float(np.sum(sz * wxy))
    return np.array([energy, *momentum])


def energy_expectation(psi: HelicityAmplitude) -> float:
    """Mean energy sum_lam int |psi_lam|^2 omega d^3k (momentum-space route)."""
    return float(expectation_momentum(psi, warn=False)[0])


def sipe_energy_integral(psi: HelicityAmplitude, grid: SpatialGrid, t: float = 0.0) -> float:
    """Spatial integral of the proposed density |sqrt(2) E^{(+)}|^2; equals <H>.

    Independent position-space route to the energy: compare with
    :func:`energy_expectation`.
    """
    Ep, _ = positive_frequency_grid(psi, grid, t)
    density = 2.0 * np.sum(np.abs(Ep) ** 2, axis=-1)
    wx, wy, wz = grid.trapezoid_weights()
    return float(np.einsum("xyz,x,y,z->", density, wx, wy, wz))


def bb_density_grid(psi: HelicityAmplitude, grid: SpatialGrid, t: float = 0.0) -> np.ndarray:
    """|E^{(+)}|^2 + |B^{(+)}|^2 on the grid (carrier-free, envelope-smooth)."""
    Ep, Bp = positive_frequency_grid(psi, grid, t)
    return np.sum(np.abs(Ep) ** 2 + np.abs(Bp) ** 2, axis=-1)


def bb_energy_integral(psi: HelicityAmplitude, grid: SpatialGrid, t: float = 0.0) -> float:
    """Spatial integral of the density above; also equals <H>."""
    rho = bb_density_grid(psi, grid, t)
    wx, wy, wz = grid.trapezoid_weights()
    return float(np.einsum("xyz,x,y,z->", rho, wx, wy, wz))


# -- differential residuals -------------------------------------------------------


def maxwell_residual(psi: HelicityAmplitude, x, h: float) -> tuple[float, float]:
    """(divergence, cyclic-identity) residuals of <F> at ``x`` by central differences.

    Both are normalized by the largest first derivative encountered, so exact
    fields give O(h^2) values that quarter when h halves.
    """
    x = np.asarray(x, dtype=float).reshape(4)
    dF = np.zeros((4, 4, 4))
    for mu in range(4):
        step = np.zeros(4)
        step[mu] = h
        dF[mu] = (
            field_expectation_exact(psi, x + step)
            - field_expectation_exact(psi, x - step)
        ) / (2.0 * h)
    scale = float(np.max(np.abs(dF)))
    if scale == 0.0:
        return 0.0, 0.0
    divergence = dF[0, 0, :] + dF[1, 1, :] + dF[2, 2, :] + dF[3, 3, :]
    gdiag = np.array([1.0, -1.0, -1.0, -1.0])
    dF_low = dF * gdiag[None, :, None] * gdiag[None, None, :]
    cyclic = [
        dF_low[l][m, n] + dF_low[m][n, l] + dF_low[n][l, m]
        for (l, m, n) in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    ]
    return (
        float(np.max(np.abs(divergence))) / scale,
        float(np.max(np.abs(cyclic))) / scale,
    )


def tensor_covariance_check(
    psi: HelicityAmplitude, x, beta=None, rotation: AxisAngle | None = None
) -> float:
    """Relative mismatch between transformed-state fields and tensor-mapped fields.

    Evaluates <F> of the boosted/rotated amplitude at ``x`` against
    L <F(L^{-1} x)> L^T of the original; local tensor covariance makes the two
    agree to quadrature accuracy.
    """
    if (beta is None) == (rotation is None):
        raise ValueError("specify exactly one of beta or rotation")
    if beta is not None:
        L = boost_matrix(beta)
        transformed = psi.boost(beta)
    else:
        L = rotation_matrix(rotation)
        transformed = psi.rotate(rotation)
    x = np.asarray(x, dtype=float).reshape(4)
    F1 = field_expectation_exact(transformed, x)
    F2 = L @ field_expectation_exact(psi, lorentz_inverse(L) @ x) @ L.T
    scale = max(float(np.max(np.abs(F2))), 1e-300)
    return float(np.max(np.abs(F1 - F2))) / scale


# -- unit conversion ------------------------------------------------------------


def localization_scale(kappa_ev: float, sigma_ratio: float) -> float:
    """Packet width sigma_x in micrometers for a photon of energy kappa_ev (eV).

    sigma_x = 1/(2 sigma_k) with sigma_k = sigma_ratio * kappa, converted via
    hbar c = 197.3269804 eV nm. A 3.3 eV photon at ratio 0.01 comes out at
    2.99 um.
    """
    if kappa_ev <= 0.0:
        raise ValueError("photon energy must be positive")
    if not 0.0 < sigma_ratio < 0.1:
        raise ValueError("sigma_ratio must lie in (0, 0.1)")
    sigma_x_inv_ev = 0.5 / (sigma_ratio * kappa_ev)
    return sigma_x_inv_ev * HBARC_EV_UM
