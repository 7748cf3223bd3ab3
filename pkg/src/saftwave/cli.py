"""Command-line surface: transforms, sampling demos, wavelet traces, the
approximation benchmark, and the invariant report.

Exit codes: 0 success, 1 invariant/quadrature failure, 2 configuration error.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import approx, checks, core, mra, sampling, wavelets
from .params import PRESETS, NonpositiveB, NotUnimodular, SaftParams, validate
from .signal import SampledFunction, UniformGrid

MATRIX_KEYS = ("A", "B", "C", "D", "p", "q")


def _fmt(v: float) -> str:
    return f"{v:.15g}"


def write_csv(path: str | None, header: list[str], rows) -> None:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_fmt(v) for v in row))
    text = "\n".join(lines) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def read_csv_columns(path: str) -> np.ndarray:
    data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    return data


def load_config(path: str) -> dict:
    cfg = {}
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"bad config line: {raw.rstrip()}")
            key, val = (part.strip() for part in line.split("=", 1))
            cfg[key] = val
    return cfg


def resolve_params(args, cfg: dict) -> SaftParams:
    preset = args.preset or cfg.get("preset") or "figure1"
    if preset not in PRESETS:
        raise ValueError(f"unknown preset {preset!r}")
    base = PRESETS[preset]
    entries = {}
    for key in MATRIX_KEYS:
        flag = getattr(args, key)
        if flag is not None:
            entries[key] = flag
        elif key in cfg:
            entries[key] = float(cfg[key])
        else:
            entries[key] = getattr(base, key)
    params = SaftParams(**entries)
    validate(params)
    return params


def _opt(args, cfg: dict, name: str, default, cast=float):
    val = getattr(args, name)
    if val is not None:
        return val
    if name in cfg:
        return cast(cfg[name])
    return default


def builtin_signal(name: str, params: SaftParams, grid: UniformGrid) -> SampledFunction:
    x = grid.points
    if name == "gaussian":
        return SampledFunction(grid, np.exp(-0.5 * x * x))
    if name == "chirped_sinc":
        return SampledFunction(grid, mra.phi_family(params, mra.SINC_SCALING, 0, 0, x))
    if name == "indicator":
        return SampledFunction(grid, mra.BOX_SCALING.evaluator(x))
    raise ValueError(f"unknown builtin signal {name!r}")


def cmd_transform(args, cfg) -> int:
    params = resolve_params(args, cfg)
    xgrid = UniformGrid.from_range(_opt(args, cfg, "xmin", -8.0), _opt(args, cfg, "xmax", 8.0),
                                   _opt(args, cfg, "xstep", 1 / 64))
    zgrid = UniformGrid.from_range(_opt(args, cfg, "zmin", -4.0), _opt(args, cfg, "zmax", 4.0),
                                   _opt(args, cfg, "zstep", 1 / 32))
    edge_tol = _opt(args, cfg, "edge_tol", core.DEFAULT_EDGE_TOL)
    signal = _opt(args, cfg, "signal", "gaussian", str)
    if signal.endswith(".csv"):
        data = read_csv_columns(signal)
        vals = data[:, 1] if data.shape[1] == 2 else data[:, 1] + 1j * data[:, 2]
        step = data[1, 0] - data[0, 0]
        ingrid = UniformGrid(data[0, 0], step, data.shape[0])
        f = SampledFunction(ingrid, vals)
    else:
        ingrid = zgrid if args.inverse else xgrid
        f = builtin_signal(signal, params, ingrid)
    if args.inverse:
        out = core.inverse(params, f, xgrid, edge_tol=edge_tol)
        header, axis = ["x", "re", "im"], xgrid.points
    else:
        out = core.forward(params, f, zgrid, edge_tol=edge_tol)
        header, axis = ["zeta", "re", "im"], zgrid.points
    write_csv(args.output, header, zip(axis, out.values.real, out.values.imag))
    return 0


def cmd_sample(args, cfg) -> int:
    params = resolve_params(args, cfg)
    window = int(_opt(args, cfg, "window", 64, int))
    oversample = bool(args.oversample or cfg.get("oversample", "").lower() == "true")
    omega = (2.0 if oversample else 1.0) * params.B * np.pi
    spec = sampling.BandlimitSpec.nyquist(params, omega)
    target_name = _opt(args, cfg, "target", "phi0", str)
    if target_name == "phi0":
        target = lambda x: mra.phi_family(params, mra.SINC_SCALING, 0, 0, x)
    elif target_name == "span":
        rng = np.random.default_rng(7)
        coeffs = rng.standard_normal(11) + 1j * rng.standard_normal(11)
        target = checks._span_element(params, coeffs)
    else:
        raise ValueError(f"unknown sampling target {target_name!r}")
    samples = sampling.from_function(target, spec.period, window)
    grid = UniformGrid.from_range(_opt(args, cfg, "xmin", -4.0), _opt(args, cfg, "xmax", 4.0),
                                  _opt(args, cfg, "xstep", 1 / 32))
    x = grid.points
    recon = sampling.reconstruct(params, samples, spec, x)
    err = np.abs(recon - target(x))
    write_csv(args.output, ["x", "re", "im", "abs_err"],
              zip(x, recon.real, recon.imag, err))
    return 0


def cmd_wavelet(args, cfg) -> int:
    params = resolve_params(args, cfg)
    kind = _opt(args, cfg, "kind", "haar", str)
    if kind == "haar":
        grid = UniformGrid.from_range(_opt(args, cfg, "xmin", -0.5), _opt(args, cfg, "xmax", 1.5),
                                      _opt(args, cfg, "xstep", 0.0025))
        vals = wavelets.haar_psi(params, grid.points)
    elif kind == "shannon":
        grid = UniformGrid.from_range(_opt(args, cfg, "xmin", -3.0), _opt(args, cfg, "xmax", 3.0),
                                      _opt(args, cfg, "xstep", 0.005))
        vals = wavelets.shannon_psi(params, int(_opt(args, cfg, "window", 512, int)), grid.points)
    else:
        raise ValueError(f"unknown wavelet kind {kind!r}")
    write_csv(args.output, ["x", "re", "im", "abs"],
              zip(grid.points, vals.real, vals.imag, np.abs(vals)))
    return 0


TARGETS = {
    "x2": lambda s: s * s,
    "sin2pix": lambda s: np.sin(2.0 * np.pi * s),
    "expx": np.exp,
}


def cmd_approx(args, cfg) -> int:
    params = resolve_params(args, cfg)
    name = _opt(args, cfg, "target", "x2", str)
    if name.endswith(".csv"):
        data = read_csv_columns(name)
        target = lambda s: np.interp(s, data[:, 0], data[:, 1])
    elif name in TARGETS:
        target = TARGETS[name]
    else:
        raise ValueError(f"unknown target {name!r}")
    jmax = int(_opt(args, cfg, "jmax", 6, int))
    grid_points = int(_opt(args, cfg, "grid_points", 2001, int))
    rows = approx.error_table(params, target, jmax, grid_points)
    write_csv(args.output, ["J", "special_affine_linf", "classical_haar_linf", "ratio"],
              ((r["J"], r["special_affine_linf"], r["classical_haar_linf"], r["ratio"])
               for r in rows))
    if args.coeffs:
        coeff_rows = []
        for J in range(1, jmax + 1):
            for basis in (approx.SPECIAL_AFFINE, approx.CLASSICAL_HAAR):
                res = approx.solve(approx.CollocationProblem(J, params, basis, target))
                for sigma, a in enumerate(res.coefficients, start=1):
                    coeff_rows.append((J, 0 if basis == approx.SPECIAL_AFFINE else 1, sigma, a))
        path = (args.output or "approx") + ".coeffs.csv"
        write_csv(path, ["J", "basis_is_classical", "sigma", "a"], coeff_rows)
    return 0


def cmd_check(args, cfg) -> int:
    params = resolve_params(args, cfg)
    tol = args.tol if args.tol is not None else (float(cfg["tol"]) if "tol" in cfg else None)
    results = checks.run_all(params, tol_override=tol)
    report = {"params": {k: getattr(params, k) for k in MATRIX_KEYS},
              "checks": results,
              "all_pass": all(r["pass"] for r in results)}
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if args.output is None:
        sys.stdout.write(text)
    else:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    return 0 if report["all_pass"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="saftwave")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp):
        for key in MATRIX_KEYS:
            sp.add_argument(f"--{key}", type=float, default=None)
        sp.add_argument("--preset", choices=sorted(PRESETS), default=None)
        sp.add_argument("--config", default=None, help="key=value config file")
        sp.add_argument("-o", "--output", default=None, help="output path (default stdout)")

    sp = sub.add_parser("transform", help="forward/inverse transform to CSV")
    add_common(sp)
    sp.add_argument("--signal", default=None,
                    help="gaussian | chirped_sinc | indicator | input CSV path")
    sp.add_argument("--inverse", action="store_true")
    for key in ("xmin", "xmax", "xstep", "zmin", "zmax", "zstep", "edge_tol"):
        sp.add_argument(f"--{key.replace('_', '-')}", dest=key, type=float, default=None)
    sp.set_defaults(func=cmd_transform)

    sp = sub.add_parser("sample", help="sampling-series reconstruction demo to CSV")
    add_common(sp)
    sp.add_argument("--target", default=None, help="phi0 | span")
    sp.add_argument("--window", type=int, default=None)
    sp.add_argument("--oversample", action="store_true")
    for key in ("xmin", "xmax", "xstep"):
        sp.add_argument(f"--{key}", type=float, default=None)
    sp.set_defaults(func=cmd_sample)

    sp = sub.add_parser("wavelet", help="mother wavelet trace to CSV")
    add_common(sp)
    sp.add_argument("--kind", choices=("haar", "shannon"), default=None)
    sp.add_argument("--window", type=int, default=None)
    for key in ("xmin", "xmax", "xstep"):
        sp.add_argument(f"--{key}", type=float, default=None)
    sp.set_defaults(func=cmd_wavelet)

    sp = sub.add_parser("approx", help="collocation error table to CSV")
    add_common(sp)
    sp.add_argument("--target", default=None, help="x2 | sin2pix | expx | CSV path")
    sp.add_argument("--jmax", type=int, default=None)
    sp.add_argument("--grid-points", dest="grid_points", type=int, default=None)
    sp.add_argument("--coeffs", action="store_true")
    sp.set_defaults(func=cmd_approx)

    sp = sub.add_parser("check", help="run invariant suites; JSON report")
    add_common(sp)
    sp.add_argument("--tol", type=float, default=None, help="override every tolerance")
    sp.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args.config) if args.config else {}
        return args.func(args, cfg)
    except core.EdgeMassTooLarge as exc:
        print(exc, file=sys.stderr)
        return 1
    except (NotUnimodular, NonpositiveB, ValueError, OSError) as exc:
        print(exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
