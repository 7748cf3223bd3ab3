#!/usr/bin/env python3
"""Print the sup-norm error table for the chirped-basis and classical-Haar
collocation fits of a target on [0, 1], for both preset matrices."""
import argparse

import numpy as np

from saftwave import approx
from saftwave.params import PRESETS

TARGETS = {"x2": lambda s: s * s, "sin2pix": lambda s: np.sin(2 * np.pi * s), "expx": np.exp}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--target", choices=sorted(TARGETS), default="x2")
    ap.add_argument("--jmax", type=int, default=6)
    args = ap.parse_args()
    target = TARGETS[args.target]
    for preset, params in PRESETS.items():
        print(f"\n{preset}: target {args.target}")
        print(f"{'J':>3} {'special_affine':>16} {'classical_haar':>16} {'ratio':>8}")
        for row in approx.error_table(params, target, args.jmax):
            print(f"{row['J']:>3} {row['special_affine_linf']:>16.8f} "
                  f"{row['classical_haar_linf']:>16.8f} {row['ratio']:>8.4f}")


if __name__ == "__main__":
    main()
