#!/usr/bin/env python3
"""Emit CSV traces of the box- and sinc-family mother wavelets for both
preset parameter matrices.  Output lands in ./out/ by default."""
import argparse
import pathlib

from saftwave import cli


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="out")
    ap.add_argument("--window", type=int, default=512, help="sinc-family synthesis window")
    args = ap.parse_args()
    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for preset in ("figure1", "figure2"):
        for kind in ("haar", "shannon"):
            dest = outdir / f"{preset}_{kind}.csv"
            argv = ["wavelet", "--preset", preset, "--kind", kind, "-o", str(dest)]
            if kind == "shannon":
                argv += ["--window", str(args.window)]
            code = cli.main(argv)
            print(f"{dest} (exit {code})")


if __name__ == "__main__":
    main()
