#!/usr/bin/env python3
"""Map the boost-induced little-group angle over momentum directions.

Sweeps the polar angle of a lightlike momentum for a fixed-rapidity boost and
prints the rotation angle w obtained from the matrix decomposition, together
with the residual against the closed-form half-angle phase. Boosts along z
give w = 0 for every direction; tilted boosts do not.

Usage: python scripts/wigner_angle_scan.py [--rapidity 1.0] [--tilt 0.5]
"""

import argparse
import sys

import numpy as np

sys.path.insert(0, str(__import__("pathlib").Path(__file__).resolve().parents[1] / "src"))

from photonamp.lorentz import beta_from_rapidity, boost_matrix
from photonamp.wigner import wigner_boost, wigner_phase_boost_closed


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--rapidity", type=float, default=1.0)
    parser.add_argument("--tilt", type=float, default=0.5, help="boost polar tilt from +z")
    parser.add_argument("--phi", type=float, default=0.7, help="momentum azimuth")
    parser.add_argument("--steps", type=int, default=13)
    args = parser.parse_args()

    zeta = args.rapidity * np.array([np.sin(args.tilt), 0.0, np.cos(args.tilt)])
    boost = boost_matrix(beta_from_rapidity(zeta))
    print(f"boost rapidity {args.rapidity}, tilt {args.tilt}; momentum azimuth {args.phi}")
    print(f"{'theta_k':>9} {'w':>12} {'|closed^2 - e^-iw|':>20}")
    for theta in np.linspace(0.1, np.pi - 0.1, args.steps):
        k = np.array(
            [
                1.0,
                np.sin(theta) * np.cos(args.phi),
                np.sin(theta) * np.sin(args.phi),
                np.cos(theta),
            ]
        )
        data = wigner_boost(boost, k)
        closed = wigner_phase_boost_closed(zeta, k)
        mismatch = abs(closed**2 - np.exp(-1j * data.w))
        print(f"{theta:9.4f} {data.w:12.6f} {mismatch:20.3e}")


if __name__ == "__main__":
    main()
