#!/usr/bin/env python3
"""Run every invariant suite for both presets and print a compact table."""
from saftwave import checks
from saftwave.params import PRESETS


def main() -> None:
    for preset, params in PRESETS.items():
        print(f"\n{preset}")
        for r in checks.run_all(params):
            flag = "PASS" if r["pass"] else "FAIL"
            print(f"  {flag} {r['name']:<36} defect={r['defect']:.3e} tol={r['tolerance']:.1e}")


if __name__ == "__main__":
    main()
