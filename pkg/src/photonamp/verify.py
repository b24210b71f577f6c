"""Seeded property-verification suites behind the CLI and the acceptance tests.

Each suite runs a set of named numerical properties and reports the worst
residual per property against its tolerance. All randomness flows from one
``numpy`` generator seeded by the caller, so reports are reproducible.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from . import lorentz
from .amplitudes import (
    HelicityAmplitude,
    expectation_momentum,
    gaussian_wavepacket,
    inner_product,
    norm_squared,
)
from .fields import (
    NarrowbandSpec,
    SpatialGrid,
    bb_density,
    bb_energy_integral,
    energy_expectation,
    field_expectation_exact,
    field_expectation_grid,
    localization_scale,
    maxwell_residual,
    narrowband_energy_momentum,
    narrowband_grid,
    sipe_energy_integral,
    tensor_covariance_check,
)
from .lorentz import AxisAngle, boost_matrix, metric_residual, rotation_matrix
from .little_group import (
    alpha_from_angles,
    ibr_generators,
    ibr_matrix,
    ibr_physical_factors,
    K0_NULL,
)
from .polarization import (
    covariance_residual,
    gauge_shift,
    polarization,
    reference_polarization,
    tensor_coeff,
)
from .quadrature import BoxQuadrature
from .wigner import (
    wigner_boost,
    wigner_phase_boost_closed,
    wigner_phase_rotation_closed,
    wigner_rotation,
)

SUITE_NAMES = ("little-group", "wigner", "amplitudes", "polarization", "fields")


@dataclass(frozen=True)
class PropertyResult:
    name: str
    max_residual: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tol


@dataclass
class VerifyReport:
    suite: str
    trials: int
    seed: int
    properties: list[PropertyResult] = field(default_factory=list)
    wall_time_s: float = 0.0

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.properties)

    def to_dict(self, include_time: bool = True) -> dict:
        out = {
            "schema": 1,
            "suite": self.suite,
            "trials": self.trials,
            "seed": self.seed,
            "passed": bool(self.passed),
            "properties": [
                {
                    "name": p.name,
                    "max_residual": float(p.max_residual),
                    "tol": float(p.tol),
                    "passed": bool(p.passed),
                }
                for p in self.properties
            ],
        }
        if include_time:
            out["wall_time_s"] = self.wall_time_s
        return out


def _random_unit(rng) -> np.ndarray:
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def _random_axis_angle(rng) -> AxisAngle:
    return AxisAngle(_random_unit(rng), rng.uniform(-math.pi, math.pi))


def _random_lightlike(rng) -> np.ndarray:
    d = _random_unit(rng)
    omega = rng.uniform(0.3, 3.0)
    return np.array([omega, *(omega * d)])


def _random_boost(rng, zeta_max: float = 2.0):
    zeta = rng.uniform(0.0, zeta_max) * _random_unit(rng)
    return boost_matrix(lorentz.beta_from_rapidity(zeta)), zeta


# -- suites -------------------------------------------------------------------


def _suite_little_group(rng, trials: int) -> list[PropertyResult]:
    worst_law = worst_conj = worst_fix = 0.0
    for _ in range(trials):
        a1 = rng.normal(scale=1.5, size=2)
        a2 = rng.normal(scale=1.5, size=2)
        law = np.max(np.abs(ibr_matrix(a1) @ ibr_matrix(a2) - ibr_matrix(a1 + a2)))
        worst_law = max(worst_law, float(law))
        gamma = rng.uniform(-math.pi, math.pi)
        Rz = lorentz.rotation_z(gamma)
        rot2 = np.array(
            [
                [math.cos(gamma), -math.sin(gamma)],
                [math.sin(gamma), math.cos(gamma)],
            ]
        )
        conj = np.max(
            np.abs(Rz @ ibr_matrix(a1) @ Rz.T - ibr_matrix(rot2 @ a1))
        )
        worst_conj = max(worst_conj, float(conj))
        worst_fix = max(
            worst_fix, float(np.max(np.abs(ibr_matrix(a1) @ K0_NULL - K0_NULL)))
        )

    # physical factorization sweep: rotation * isoenergetic boost against the
    # closed form. Polar angles near the poles are excluded (the boost speed
    # approaches 1 there and double precision cannot hold 1e-12).
    worst_phys = 0.0
    for theta in np.linspace(0.35, math.pi - 0.35, 41):
        for phi in np.linspace(0.0, 2.0 * math.pi, 25):
            rot, boost = ibr_physical_factors(theta, phi)
            resid = np.max(np.abs(rot @ boost - ibr_matrix(alpha_from_angles(theta, phi))))
            worst_phys = max(worst_phys, float(resid))

    # generators: exact algebra plus exponential vs closed form (nilpotency
    # terminates the series at the quadratic term)
    Lx, Ly = ibr_generators()
    commutator = float(np.max(np.abs(Lx @ Ly - Ly @ Lx)))
    nilpotency = float(
        max(np.max(np.abs(Lx @ Lx @ Lx)), np.max(np.abs(Ly @ Ly @ Ly)))
    )
    worst_exp = 0.0
    for _ in range(min(trials, 200)):
        a = rng.normal(scale=1.5, size=2)
        gen = a[0] * Lx + a[1] * Ly
        series = np.eye(4) + gen + 0.5 * (gen @ gen)
        worst_exp = max(worst_exp, float(np.max(np.abs(series - ibr_matrix(a)))))

    worst_metric = 0.0
    for _ in range(min(trials, 200)):
        m = np.eye(4)
        for _ in range(rng.integers(1, 9)):
            if rng.random() < 0.5:
                m = m @ rotation_matrix(_random_axis_angle(rng))
            else:
                m = m @ boost_matrix(
                    lorentz.beta_from_rapidity(rng.uniform(0, 0.8) * _random_unit(rng))
                )
        worst_metric = max(worst_metric, metric_residual(m))

    return [
        PropertyResult("group_addition_law", worst_law, 1e-12),
        PropertyResult("z_rotation_conjugation", worst_conj, 1e-12),
        PropertyResult("fixes_reference_momentum", worst_fix, 1e-12),
        PropertyResult("physical_factorization", worst_phys, 1e-12),
        PropertyResult("generator_commutator", commutator, 0.0),
        PropertyResult("generator_nilpotency", nilpotency, 0.0),
        PropertyResult("generator_exponential", worst_exp, 1e-10),
        PropertyResult("metric_preservation_products", worst_metric, 1e-12),
    ]


def _suite_wigner(rng, trials: int) -> list[PropertyResult]:
    worst_rot = worst_boost = worst_rec = worst_cocycle = worst_about_k = 0.0
    for _ in range(trials):
        r = _random_axis_angle(rng)
        k = _random_lightlike(rng)
        data = wigner_rotation(rotation_matrix(r), k)
        closed = wigner_phase_rotation_closed(r, k)
        worst_rot = max(worst_rot, abs(closed**2 - data.phase(1)))
        worst_rec = max(worst_rec, data.residual)

        Lam, zeta = _random_boost(rng)
        data = wigner_boost(Lam, k)
        closed = wigner_phase_boost_closed(zeta, k)
        worst_boost = max(worst_boost, abs(closed**2 - data.phase(1)))
        worst_rec = max(worst_rec, data.residual)

    for _ in range(min(trials, 200)):
        r1, r2 = _random_axis_angle(rng), _random_axis_angle(rng)
        k = _random_lightlike(rng)
        R1, R2 = rotation_matrix(r1), rotation_matrix(r2)
        w21 = wigner_rotation(R2 @ R1, k).w
        w1 = wigner_rotation(R1, k).w
        w2 = wigner_rotation(R2, R1 @ k).w
        worst_cocycle = max(
            worst_cocycle,
            abs(np.exp(-1j * w21) - np.exp(-1j * w2) * np.exp(-1j * w1)),
        )
        k = _random_lightlike(rng)
        angle = rng.uniform(-math.pi, math.pi)
        data = wigner_rotation(rotation_matrix(AxisAngle(k[1:], angle)), k)
        worst_about_k = max(
            worst_about_k, abs(np.exp(-1j * data.w) - np.exp(-1j * angle))
        )

    return [
        PropertyResult("dual_path_rotation_phase", worst_rot, 1e-9),
        PropertyResult("dual_path_boost_phase", worst_boost, 1e-9),
        PropertyResult("matrix_reconstruction", worst_rec, 1e-10),
        PropertyResult("phase_cocycle", worst_cocycle, 1e-9),
        PropertyResult("rotation_about_momentum", worst_about_k, 1e-9),
    ]


def _suite_amplitudes(rng, trials: int) -> list[PropertyResult]:
    kappa, sigma = 1.0, 0.05
    psi = gaussian_wavepacket([0.0, 0.0, kappa], sigma, 1)
    base_norm = norm_squared(psi, warn=False)

    results = [
        PropertyResult("gaussian_norm", abs(base_norm - 1.0), 1e-9),
    ]

    reps = max(1, min(trials // 250, 4))
    transforms = {
        "unitarity_translate": lambda p: p.translate(
            rng.uniform(-10.0 / sigma, 10.0 / sigma, size=4)
        ),
        "unitarity_rotate": lambda p: p.rotate(_random_axis_angle(rng)),
        "unitarity_boost": lambda p: p.boost(rng.uniform(0.1, 0.9) * _random_unit(rng)),
        "unitarity_parity": lambda p: p.parity(),
        "unitarity_time_reversal": lambda p: p.time_reverse(),
    }
    for name, op in transforms.items():
        worst = 0.0
        for _ in range(reps):
            worst = max(worst, abs(norm_squared(op(psi), warn=False) - base_norm))
        results.append(PropertyResult(name, worst, 1e-6))

    p_base = expectation_momentum(psi, warn=False)
    worst = 0.0
    for _ in range(reps):
        r = _random_axis_angle(rng)
        transformed = expectation_momentum(psi.rotate(r), warn=False)
        expected = rotation_matrix(r) @ p_base
        worst = max(worst, float(np.max(np.abs(transformed - expected))) / p_base[0])
    results.append(PropertyResult("momentum_covariance_rotation", worst, 1e-6))

    worst = 0.0
    for _ in range(reps):
        beta = rng.uniform(0.1, 0.9) * _random_unit(rng)
        transformed = expectation_momentum(psi.boost(beta), warn=False)
        expected = boost_matrix(beta) @ p_base
        worst = max(
            worst, float(np.max(np.abs(transformed - expected))) / expected[0]
        )
    results.append(PropertyResult("momentum_covariance_boost", worst, 1e-6))

    # overlap invariance under a common transformation (conjugated for the
    # antiunitary one)
    psi2 = gaussian_wavepacket([0.0, 0.3 * sigma, kappa], sigma, 1)
    base_ip = inner_product(psi, psi2)
    worst = 0.0
    r = _random_axis_angle(rng)
    beta = rng.uniform(0.1, 0.9) * _random_unit(rng)
    for op, conj in [
        (lambda p: p.rotate(r), False),
        (lambda p: p.boost(beta), False),
        (lambda p: p.parity(), False),
        (lambda p: p.time_reverse(), True),
    ]:
        ip = inner_product(op(psi), op(psi2))
        target = np.conj(base_ip) if conj else base_ip
        worst = max(worst, abs(ip - target))
    results.append(PropertyResult("inner_product_invariance", worst, 1e-6))
    return results


def _suite_polarization(rng, trials: int) -> list[PropertyResult]:
    worst_ortho = 0.0
    for l1 in (1, -1):
        for l2 in (1, -1):
            e1 = reference_polarization(l1).eps
            e2 = reference_polarization(l2).eps
            target = -1.0 if l1 == l2 else 0.0
            worst_ortho = max(
                worst_ortho,
                abs(np.conj(e1) @ (lorentz.METRIC @ e2) - target),
            )

    worst_lorentz = worst_norm = 0.0
    for _ in range(trials):
        k = _random_lightlike(rng)
        lam = 1 if rng.random() < 0.5 else -1
        p = polarization(k, lam)
        worst_lorentz = max(worst_lorentz, abs(lorentz.minkowski(k, p.eps)))
        worst_norm = max(
            worst_norm, abs(np.conj(p.eps) @ (lorentz.METRIC @ p.eps) + 1.0)
        )

    k0 = np.array([1.0, 0.0, 0.0, 1.0])
    worst_little = 0.0
    for _ in range(min(trials, 200)):
        gamma = rng.uniform(-math.pi, math.pi)
        alpha = rng.normal(scale=1.5, size=2)
        for lam in (1, -1):
            eps0 = reference_polarization(lam).eps
            zrot = lorentz.rotation_z(gamma).astype(complex) @ eps0
            worst_little = max(
                worst_little,
                float(np.max(np.abs(zrot - eps0 * np.exp(-1j * lam * gamma)))),
            )
            shifted = ibr_matrix(alpha).astype(complex) @ eps0
            expected = eps0 + (alpha @ eps0[1:3]) * k0
            worst_little = max(
                worst_little, float(np.max(np.abs(shifted - expected)))
            )

    worst_rotcov = 0.0
    for _ in range(min(trials, 300)):
        k = _random_lightlike(rng)
        r = _random_axis_angle(rng)
        R = rotation_matrix(r)
        w = wigner_rotation(R, k).w
        for lam in (1, -1):
            lhs = R.astype(complex) @ polarization(k, lam).eps
            rhs = polarization(R @ k, lam).eps * np.exp(-1j * lam * w)
            worst_rotcov = max(worst_rotcov, float(np.max(np.abs(lhs - rhs))))

    worst_boostcov = 0.0
    for _ in range(min(trials, 300)):
        k = _random_lightlike(rng)
        Lam, _ = _random_boost(rng)
        lam = 1 if rng.random() < 0.5 else -1
        _, resid = covariance_residual(Lam, k, lam)
        worst_boostcov = max(worst_boostcov, resid)

    worst_gauge = 0.0
    for _ in range(trials):
        k = _random_lightlike(rng)
        lam = 1 if rng.random() < 0.5 else -1
        p = polarization(k, lam)
        T = tensor_coeff(p).T
        f = complex(rng.normal(), rng.normal())
        T2 = tensor_coeff(gauge_shift(p, f)).T
        worst_gauge = max(worst_gauge, float(np.max(np.abs(T2 - T))))

    return [
        PropertyResult("reference_orthonormality", worst_ortho, 1e-12),
        PropertyResult("transversality", worst_lorentz, 1e-12),
        PropertyResult("unit_normalization", worst_norm, 1e-12),
        PropertyResult("little_group_actions", worst_little, 1e-12),
        PropertyResult("rotation_covariance_phase", worst_rotcov, 1e-10),
        PropertyResult("boost_covariance_residual", worst_boostcov, 1e-10),
        PropertyResult("gauge_invariance_of_coefficient", worst_gauge, 1e-12),
    ]


def _linear_wavepacket(kappa: float, sigma: float, npts: int = 48) -> HelicityAmplitude:
    """Equal-helicity superposition: linearly polarized packet along +z."""
    center = np.array([0.0, 0.0, kappa])
    norm_const = (2.0 * math.pi * sigma**2) ** (-0.75) / math.sqrt(2.0)

    def g(k):
        d = np.asarray(k, dtype=float) - center
        return norm_const * np.exp(-np.sum(d * d, axis=-1) / (4.0 * sigma**2)) + 0.0j

    quad = BoxQuadrature(center, 6.5 * sigma, npts)
    return HelicityAmplitude(g, g, quad)


def _suite_fields(rng, trials: int) -> list[PropertyResult]:
    kappa = 1.0
    results = []

    # narrowband closed form against the full momentum integral, three widths
    ratios = (0.03, 0.01, 0.003)[: max(1, min(trials, 3))]
    rel_diffs = []
    worst_margin = 0.0
    for ratio in ratios:
        sigma = ratio * kappa
        psi = gaussian_wavepacket([0.0, 0.0, kappa], sigma, 1)
        spec = NarrowbandSpec(kappa, sigma)
        grid = SpatialGrid.centered(3.7 * spec.sigma_x, 64)
        ftg = field_expectation_grid(psi, grid, 0.0)
        best = None
        for offset in (0.0, 0.5 * math.pi, -0.5 * math.pi, math.pi):
            nb = narrowband_grid(spec, grid, 0.0, phase_offset=offset)
            rel = math.sqrt(
                float(np.sum((ftg.E - nb.E) ** 2 + (ftg.B - nb.B) ** 2))
                / float(np.sum(nb.E**2 + nb.B**2))
            )
            if best is None or rel < best[0]:
                best = (rel, offset)
        rel, offset = best
        # strict phase-invariant cross-check: energy density field
        nb0 = narrowband_grid(spec, grid, 0.0)
        rel_u = math.sqrt(
            float(np.sum((ftg.energy_density() - nb0.energy_density()) ** 2))
            / float(np.sum(nb0.energy_density() ** 2))
        )
        worst_margin = max(worst_margin, rel / (3.0 * ratio), rel_u / (3.0 * ratio))
        if offset != 0.0:
            worst_margin = max(worst_margin, 2.0)  # convention slipped
        rel_diffs.append(rel)
    results.append(PropertyResult("narrowband_accuracy_margin", worst_margin, 1.0))
    if len(rel_diffs) == 3:
        scaled = [d / r for d, r in zip(rel_diffs, ratios)]
        spread = max(scaled) / min(scaled) - 1.0
        results.append(PropertyResult("narrowband_linear_scaling", spread, 0.5))

    # conservation integrals on a carrier-resolving grid
    spec = NarrowbandSpec(kappa, 0.01 * kappa)
    limit = (2.0 * math.pi / kappa) / 8.0
    n_req = math.ceil(12.0 * spec.sigma_x / limit) + 1
    grid = SpatialGrid.centered(6.0 * spec.sigma_x, n_req)
    P = narrowband_energy_momentum(spec, grid, 0.0)
    results.append(
        PropertyResult("energy_integral", abs(P[0] - kappa) / kappa, 0.01)
    )
    results.append(
        PropertyResult(
            "momentum_integral",
            float(np.max(np.abs(P[1:] - np.array([0.0, 0.0, kappa])))) / kappa,
            0.01,
        )
    )

    # position-space energy closures for the exact fields
    sigma = 0.01 * kappa
    psi = gaussian_wavepacket([0.0, 0.0, kappa], sigma, 1)
    H = energy_expectation(psi)
    close_grid = SpatialGrid.centered(5.0 / (2.0 * sigma), 72)
    sipe = sipe_energy_integral(psi, close_grid)
    bb = bb_energy_integral(psi, close_grid)
    results.append(PropertyResult("sipe_energy_closure", abs(sipe - H) / H, 5e-3))
    results.append(PropertyResult("bb_energy_closure", abs(bb - H) / H, 5e-3))

    # pointwise inequality of the two densities for a linearly polarized packet
    lin = _linear_wavepacket(kappa, 0.05 * kappa)
    zline = np.linspace(-1.5, 1.5, 25)
    rho = np.array([bb_density(lin, [0.0, 0.0, 0.0, z]) for z in zline])
    classical = []
    for z in zline:
        F = field_expectation_exact(lin, np.array([0.0, 0.0, 0.0, z]))
        E = -F[0, 1:]
        B = -np.array([F[2, 3], F[3, 1], F[1, 2]])
        classical.append(0.5 * (E @ E + B @ B))
    pointwise = float(np.max(np.abs(rho - np.array(classical))) / np.max(rho))
    # report so that "passed" means the difference exceeds 0.1
    results.append(PropertyResult("bb_differs_from_classical", 0.1 / pointwise, 1.0))

    # Maxwell residuals shrink at second order
    psi5 = gaussian_wavepacket([0.0, 0.0, kappa], 0.05 * kappa, 1)
    x = np.array([0.1, 0.5, -0.3, 2.0])
    residuals = [max(maxwell_residual(psi5, x, h)) for h in (0.2, 0.1, 0.05)]
    worst_ratio_err = max(
        abs(residuals[0] / residuals[1] - 4.0), abs(residuals[1] / residuals[2] - 4.0)
    )
    results.append(PropertyResult("maxwell_h2_convergence", worst_ratio_err, 0.5))

    # local tensor covariance for one rotation and one boost
    cov_rot = tensor_covariance_check(
        psi5, x, rotation=AxisAngle(_random_unit(rng), rng.uniform(0.2, 1.0))
    )
    cov_boost = tensor_covariance_check(psi5, x, beta=[0.0, 0.0, 0.3])
    results.append(PropertyResult("local_covariance_rotation", cov_rot, 1e-5))
    results.append(PropertyResult("local_covariance_boost", cov_boost, 1e-5))

    # laboratory-unit localization scale for a blue photon
    sigma_x_um = localization_scale(3.3, 0.01)
    results.append(
        PropertyResult("blue_photon_localization", abs(sigma_x_um - 3.0) / 3.0, 0.01)
    )
    return results


_SUITES = {
    "little-group": _suite_little_group,
    "wigner": _suite_wigner,
    "amplitudes": _suite_amplitudes,
    "polarization": _suite_polarization,
    "fields": _suite_fields,
}


def run_suite(
    suite: str, trials: int = 1000, seed: int = 7, tol: float | None = None
) -> VerifyReport:
    """Run one named suite (or 'all'); ``tol`` overrides every tolerance."""
    if suite != "all" and suite not in _SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {('all',) + SUITE_NAMES}")
    rng = np.random.default_rng(seed)
    names = SUITE_NAMES if suite == "all" else (suite,)
    start = time.perf_counter()
    properties: list[PropertyResult] = []
    for name in names:
        prefix = f"{name}/" if suite == "all" else ""
        for prop in _SUITES[name](rng, trials):
            properties.append(
                PropertyResult(
                    prefix + prop.name,
                    float(prop.max_residual),
                    float(tol if tol is not None else prop.tol),
                )
            )
    return VerifyReport(
        suite, trials, seed, properties, time.perf_counter() - start
    )
