"""SAFT kernel, forward/inverse transforms, and chirp-dilation identities.

All quadrature is composite trapezoid with a fixed pairwise summation tree,
so outputs are bit-identical regardless of how evaluation is batched.
"""
from __future__ import annotations

from typing import Callable, Optional

import numpy as np

from .params import SaftParams, invert_params, prefactor, validate
from .signal import SampledFunction, UniformGrid

DEFAULT_EDGE_TOL = 1e-8


class EdgeMassTooLarge(ValueError):
    """Signal does not decay enough at the grid edges for safe truncation."""


class ZeroScale(ValueError):
    """Dilation scale must be nonzero."""


def pairwise_sum(values: np.ndarray, axis: int = 0) -> np.ndarray:
    """Sum along ``axis`` with a fixed adjacent-pair reduction tree."""
    a = np.moveaxis(np.asarray(values), axis, 0)
    while a.shape[0] > 1:
        tail = None
        if a.shape[0] % 2:
            tail = a[-1:]
            a = a[:-1]
        a = a[0::2] + a[1::2]
        if tail is not None:
            a = np.concatenate([a, tail], axis=0)
    return a[0]


def trapezoid(values: np.ndarray, step: float, axis: int = 0) -> np.ndarray:
    """Composite trapezoid rule with deterministic pairwise reduction."""
    a = np.moveaxis(np.asarray(values, dtype=np.complex128), axis, 0).copy()
    a[0] *= 0.5
    a[-1] *= 0.5
    return pairwise_sum(a, axis=0) * step


def kernel_raw(A: float, B: float, C: float, D: float, p: float, q: float,
               x, zeta) -> np.ndarray:
    """Kernel formula for arbitrary real entries with B != 0.

    The constant uses the principal complex square root, so for B > 0 it is
    exp(-i*pi/4)/sqrt(2*pi*B) and for B < 0 the conjugate constant.
    """
    x = np.asarray(x, dtype=np.float64)
    zeta = np.asarray(zeta, dtype=np.float64)
    c = 1.0 / np.sqrt(2j * np.pi * B)
    phase = (A * x * x + 2.0 * x * (p - zeta)
             - 2.0 * zeta * (D * p - B * q) + D * (zeta * zeta + p * p)) / (2.0 * B)
    return c * np.exp(1j * phase)


def kernel(params: SaftParams, x, zeta) -> np.ndarray:
    """Forward SAFT kernel; assumes ``validate(params)`` holds."""
    return kernel_raw(params.A, params.B, params.C, params.D, params.p, params.q, x, zeta)


def inverse_kernel(params: SaftParams, zeta, x) -> np.ndarray:
    """Kernel of the inverse transform, evaluated at (zeta, x).

    Uses the adjugate core matrix with *negated* offsets (Bq - Dp, Cp - Aq);
    this is the unique choice for which the inverse kernel equals
    conj(prefactor * kernel(x, zeta)).
    """
    inv = invert_params(params)
    return kernel_raw(inv.A, inv.B, inv.C, inv.D, -inv.p, -inv.q, zeta, x)


def _check_edge_mass(values: np.ndarray, edge_tol: float, what: str) -> None:
    peak = float(np.max(np.abs(values)))
    edge = max(abs(values[0]), abs(values[-1]))
    if edge > edge_tol * peak:
        raise EdgeMassTooLarge(
            f"{what} edge magnitude {edge:.3e} exceeds {edge_tol:.1e} of peak {peak:.3e}; "
            "widen the grid or relax edge_tol"
        )


def forward(params: SaftParams, f: SampledFunction, zeta_grid: UniformGrid,
            edge_tol: float = DEFAULT_EDGE_TOL) -> SampledFunction:
    """SAFT spectrum of ``f`` on ``zeta_grid`` by trapezoid quadrature."""
    validate(params)
    _check_edge_mass(f.values, edge_tol, "input signal")
    x = f.grid.points
    zeta = zeta_grid.points
    out = np.empty(zeta.size, dtype=np.complex128)
    # chunk over zeta to bound the kernel matrix; columns are independent so
    # chunking cannot change the result
    chunk = max(1, int(4_000_000 // max(x.size, 1)))
    for j0 in range(0, zeta.size, chunk):
        zblock = zeta[j0:j0 + chunk]
        integrand = f.values[:, None] * kernel(params, x[:, None], zblock[None, :])
        out[j0:j0 + chunk] = trapezoid(integrand, f.grid.step, axis=0)
    return SampledFunction(zeta_grid, out)


def inverse(params: SaftParams, F: SampledFunction, xgrid: UniformGrid,
            edge_tol: float = DEFAULT_EDGE_TOL) -> SampledFunction:
    """Inverse transform of a spectrum ``F`` evaluated on ``xgrid``.

    Computes prefactor * integral of F(zeta) * K_inv(zeta, x), which reduces
    to the adjoint form: integral of F(zeta) * conj(K(x, zeta)).
    """
    validate(params)
    _check_edge_mass(F.values, edge_tol, "spectrum")
    zeta = F.grid.points
    x = xgrid.points
    pf = prefactor(params)
    out = np.empty(x.size, dtype=np.complex128)
    chunk = max(1, int(4_000_000 // max(zeta.size, 1)))
    for j0 in range(0, x.size, chunk):
        xblock = x[j0:j0 + chunk]
        integrand = F.values[:, None] * inverse_kernel(params, zeta[:, None], xblock[None, :])
        out[j0:j0 + chunk] = pf * trapezoid(integrand, F.grid.step, axis=0)
    return SampledFunction(xgrid, out)


def energy(f: SampledFunction) -> float:
    """Trapezoid estimate of the squared L2 norm."""
    return float(trapezoid(np.abs(f.values) ** 2, f.grid.step).real)


def _sinc_resample(f: SampledFunction, at: np.ndarray) -> np.ndarray:
    h = f.grid.step
    t = (at[:, None] - f.grid.points[None, :]) / h
    return pairwise_sum(f.values[None, :] * np.sinc(t), axis=1)


def chirp_dilate(params: SaftParams, f: SampledFunction, a: float,
                 generator: Optional[Callable[[np.ndarray], np.ndarray]] = None) -> SampledFunction:
    """Chirp-modulated dilation x -> m(x) * f(a x) on the grid of ``f``.

    The modulation is exp(-(i/2B)(A x^2 (1-a^2) + 2 x p (1-a))).  Dilated
    samples come from ``generator`` when the analytic signal is known and
    from band-limited (sinc) interpolation otherwise.
    """
    if a == 0:
        raise ZeroScale("ZeroScale: dilation scale a must be nonzero")
    x = f.grid.points
    if generator is not None:
        dilated = np.asarray(generator(a * x), dtype=np.complex128)
    else:
        dilated = _sinc_resample(f, a * x)
    A, B, p = params.A, params.B, params.p
    mod = np.exp(-1j * (A * x * x * (1 - a * a) + 2 * x * p * (1 - a)) / (2 * B))
    return SampledFunction(f.grid, mod * dilated)
