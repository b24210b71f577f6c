"""Command-line front end.

Subcommands
-----------
verify     run a seeded property suite, JSON report to stdout
wigner     little-group angle/phase for one rotation or boost at one momentum
transform  apply symmetry operations to a wavepacket descriptor (JSON file)
fields     sample E/B on a grid (CSV) and report conservation integrals (JSON)
localize   packet width in micrometers from photon energy and relative bandwidth

Exit codes: 0 success, 1 numerical failure, 2 usage/parse error. Angles are
radians; energies cross the boundary in eV (natural units inside). JSON
output carries ``"schema": 1`` and, unless ``--no-timestamp`` is given, a
``generated_at`` field (excluded so reports can be compared byte for byte).
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
import time
from pathlib import Path

import numpy as np

from .amplitudes import (
    expectation_momentum,
    from_descriptor,
    gaussian_wavepacket,
    norm_squared,
    op_from_json,
)
from .fields import (
    HBARC_EV_UM,
    NarrowbandSpec,
    SpatialGrid,
    UnderResolvedGridError,
    energy_momentum_integrals,
    field_expectation_grid,
    localization_scale,
    narrowband_grid,
)
from .lorentz import AxisAngle, boost_matrix, rotation_matrix
from .verify import SUITE_NAMES, run_suite
from .wigner import wigner_boost, wigner_rotation


def _coerce(value):
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    if isinstance(value, np.bool_):
        return bool(value)
    raise TypeError(f"not JSON serializable: {type(value)!r}")


def _emit(payload: dict, args) -> None:
    if not args.no_timestamp:
        payload["generated_at"] = time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())
    json.dump(payload, sys.stdout, indent=2, sort_keys=True, default=_coerce)
    sys.stdout.write("\n")


def _parse_vec(text: str, n: int) -> list[float]:
    parts = [float(p) for p in text.split(",")]
    if len(parts) != n:
        raise argparse.ArgumentTypeError(f"expected {n} comma-separated numbers")
    return parts


def _cmd_verify(args) -> int:
    report = run_suite(args.suite, trials=args.trials, seed=args.seed, tol=args.tol)
    _emit(report.to_dict(include_time=not args.no_timestamp), args)
    return 0 if report.passed else 1


def _cmd_wigner(args) -> int:
    omega = args.omega_ev
    k = omega * np.array(
        [
            1.0,
            math.sin(args.theta) * math.cos(args.phi),
            math.sin(args.theta) * math.sin(args.phi),
            math.cos(args.theta),
        ]
    )
    if args.kind == "rotation":
        if args.axis is None or args.angle is None:
            print("rotation needs --axis and --angle", file=sys.stderr)
            return 2
        data = wigner_rotation(rotation_matrix(AxisAngle(np.array(args.axis), args.angle)), k)
    else:
        if args.beta is None:
            print("boost needs --beta", file=sys.stderr)
            return 2
        data = wigner_boost(boost_matrix(np.array(args.beta)), k)
    phase = data.phase(1)
    _emit(
        {
            "schema": 1,
            "kind": args.kind,
            "w": data.w,
            "phase_re": phase.real,
            "phase_im": phase.imag,
            "alpha": list(data.alpha),
        },
        args,
    )
    return 0


def _cmd_transform(args) -> int:
    try:
        descriptor = json.loads(Path(args.input).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        print(f"cannot read descriptor: {exc}", file=sys.stderr)
        return 2
    try:
        extra_ops = [op_from_json(json.loads(text)) for text in args.op]
        psi = from_descriptor(descriptor, npts=args.npts)
    except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
        print(f"malformed descriptor or op: {exc}", file=sys.stderr)
        return 2

    def summary(amp):
        p = expectation_momentum(amp, warn=False)
        return {"norm_squared": norm_squared(amp, warn=False), "momentum": list(p)}

    before = summary(psi)
    for op in extra_ops:
        psi = psi.apply(op)
    after = summary(psi)

    out_descriptor = dict(descriptor)
    out_descriptor["ops"] = list(descriptor.get("ops", [])) + [
        op.to_json() for op in extra_ops
    ]
    flips = sum(1 for op in psi.record if op.kind == "parity")
    _emit(
        {
            "schema": 1,
            "descriptor": out_descriptor,
            "helicity": int(descriptor["helicity"]) * (-1) ** flips,
            "before": before,
            "after": after,
        },
        args,
    )
    return 0


def _cmd_fields(args) -> int:
    kappa = args.kappa_ev
    sigma = args.sigma_ratio * kappa
    spec = NarrowbandSpec(kappa, sigma)
    grid = SpatialGrid.centered(args.extent * spec.sigma_x, args.n)
    try:
        if args.mode == "narrowband":
            ftg = narrowband_grid(spec, grid, args.time)
        else:
            psi = gaussian_wavepacket([0.0, 0.0, kappa], sigma, 1)
            ftg = field_expectation_grid(psi, grid, args.time)
        totals = energy_momentum_integrals(ftg)
    except UnderResolvedGridError as exc:
        print(f"grid too coarse: {exc}", file=sys.stderr)
        return 1

    scale = HBARC_EV_UM if args.units == "ev-um" else 1.0
    gx, gy, gz = grid.axes()
    with open(args.out, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["x", "y", "z", "Ex", "Ey", "Ez", "Bx", "By", "Bz"])
        for ix in range(grid.npts):
            for iy in range(grid.npts):
                for iz in range(grid.npts):
                    writer.writerow(
                        [
                            repr(float(gx[ix] * scale)),
                            repr(float(gy[iy] * scale)),
                            repr(float(gz[iz] * scale)),
                            *[repr(float(v)) for v in ftg.E[ix, iy, iz]],
                            *[repr(float(v)) for v in ftg.B[ix, iy, iz]],
                        ]
                    )
    _emit(
        {
            "schema": 1,
            "mode": args.mode,
            "kappa_ev": kappa,
            "sigma_ratio": args.sigma_ratio,
            "sigma_x_natural": spec.sigma_x,
            "grid": {
                "n": args.n,
                "extent_sigmas": args.extent,
                "spacing": float(grid.spacing[0]),
            },
            "time": args.time,
            "units": args.units,
            "energy": totals[0],
            "momentum": list(totals[1:]),
            "energy_over_kappa": totals[0] / kappa,
            "csv": str(args.out),
        },
        args,
    )
    return 0


def _cmd_localize(args) -> int:
    _emit(
        {
            "schema": 1,
            "kappa_ev": args.kappa_ev,
            "sigma_ratio": args.sigma_ratio,
            "sigma_x_um": localization_scale(args.kappa_ev, args.sigma_ratio),
        },
        args,
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="photonamp",
        description="Photon helicity-amplitude and field-expectation toolkit",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--no-timestamp",
        action="store_true",
        help="omit volatile fields so JSON output is byte-reproducible",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run a property-verification suite", parents=[common])
    p.add_argument("--suite", default="all", choices=("all",) + SUITE_NAMES)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--tol", type=float, default=None, help="override every tolerance")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("wigner", help="little-group angle for one transformation", parents=[common])
    p.add_argument("--kind", required=True, choices=("rotation", "boost"))
    p.add_argument("--axis", type=lambda s: _parse_vec(s, 3), help="rotation axis x,y,z")
    p.add_argument("--angle", type=float, help="rotation angle (radians)")
    p.add_argument("--beta", type=lambda s: _parse_vec(s, 3), help="boost velocity x,y,z")
    p.add_argument("--omega-ev", type=float, required=True, help="photon energy (eV)")
    p.add_argument("--theta", type=float, required=True, help="momentum polar angle")
    p.add_argument("--phi", type=float, required=True, help="momentum azimuth")
    p.set_defaults(func=_cmd_wigner)

    p = sub.add_parser("transform", help="apply operations to a wavepacket descriptor", parents=[common])
    p.add_argument("input", help="wavepacket descriptor JSON file")
    p.add_argument(
        "--op",
        action="append",
        default=[],
        help='operation as JSON, e.g. \'{"type":"boost","beta":[0,0,0.5]}\' (repeatable)',
    )
    p.add_argument("--npts", type=int, default=48, help="quadrature points per axis")
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("fields", help="sample E/B on a grid and integrate", parents=[common])
    p.add_argument("--kappa-ev", type=float, required=True)
    p.add_argument("--sigma-ratio", type=float, required=True)
    p.add_argument("--n", type=int, required=True, help="grid points per axis")
    p.add_argument(
        "--extent", type=float, default=6.0, help="half-extent in units of sigma_x"
    )
    p.add_argument("--time", type=float, default=0.0)
    p.add_argument("--mode", default="narrowband", choices=("exact", "narrowband"))
    p.add_argument("--out", required=True, help="CSV output path")
    p.add_argument("--units", default="natural", choices=("natural", "ev-um"))
    p.set_defaults(func=_cmd_fields)

    p = sub.add_parser("localize", help="packet width in micrometers", parents=[common])
    p.add_argument("--kappa-ev", type=float, required=True)
    p.add_argument("--sigma-ratio", type=float, required=True)
    p.set_defaults(func=_cmd_localize)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
