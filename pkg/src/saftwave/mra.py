"""Special affine multiresolution machinery.

Chirp-modulated scaling families, the shift-orthonormality criterion,
low-pass filter extraction, transfer-function symbols, the quadrature-mirror
and cross-orthogonality identities, high-pass coefficients, and wavelet
synthesis from a scaling function.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .core import pairwise_sum, trapezoid
from .params import SaftParams
from .signal import UniformGrid

SQRT2 = np.sqrt(2.0)


@dataclass(frozen=True)
class FilterSequence:
    """Complex coefficients c_lo..c_hi on a finite integer window."""
    lo: int
    hi: int
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        c = np.asarray(self.coeffs, dtype=np.complex128)
        if self.lo > self.hi:
            raise ValueError("lo must not exceed hi")
        if c.shape != (self.hi - self.lo + 1,):
            raise ValueError("coefficient count must match index window")
        object.__setattr__(self, "coeffs", c)

    @property
    def indices(self) -> np.ndarray:
        return np.arange(self.lo, self.hi + 1)

    def coeff(self, n: int) -> complex:
        if self.lo <= n <= self.hi:
            return complex(self.coeffs[n - self.lo])
        return 0.0 + 0.0j

    @classmethod
    def from_function(cls, lo: int, hi: int, fn: Callable[[int], complex]) -> "FilterSequence":
        return cls(lo, hi, np.array([fn(n) for n in range(lo, hi + 1)], dtype=np.complex128))


@dataclass(frozen=True)
class ScalingFunction:
    """Base scaling function with optional closed-form Fourier transform.

    ``support`` bounds the effective support used for quadrature; ``fourier``
    if given is the unitary-convention transform (1/sqrt(2 pi)) * integral.
    """
    evaluator: Callable[[np.ndarray], np.ndarray]
    label: str
    fourier: Optional[Callable[[np.ndarray], np.ndarray]] = None
    support: tuple = (-300.0, 300.0)


def _sinc_ft(zeta):
    zeta = np.asarray(zeta, dtype=np.float64)
    return np.where(np.abs(zeta) < np.pi, 1.0 / np.sqrt(2.0 * np.pi), 0.0)


def _box_ft(zeta):
    zeta = np.asarray(zeta, dtype=np.float64)
    return np.exp(-0.5j * zeta) * np.sinc(zeta / (2.0 * np.pi)) / np.sqrt(2.0 * np.pi)


def _box(x):
    x = np.asarray(x, dtype=np.float64)
    return ((x >= 0.0) & (x < 1.0)).astype(np.float64)


SINC_SCALING = ScalingFunction(np.sinc, "sinc", fourier=_sinc_ft, support=(-300.0, 300.0))
BOX_SCALING = ScalingFunction(_box, "box", fourier=_box_ft, support=(0.0, 1.0))


def phi_family(params: SaftParams, phi: ScalingFunction, k: int, n: int, x):
    """Chirp-modulated dyadic dilation/translation of the scaling function."""
    A, B, p = params.A, params.B, params.p
    x = np.asarray(x, dtype=np.float64)
    shift = n / 2.0 ** k
    mod = np.exp(-1j * (A * (x * x - shift * shift) + 2.0 * p * (x - shift)) / (2.0 * B))
    return 2.0 ** (k / 2.0) * mod * np.asarray(phi.evaluator(2.0 ** k * x - n))


def scaling_fourier(phi: ScalingFunction, zeta) -> np.ndarray:
    """Fourier transform of the base function, closed form when available."""
    if phi.fourier is not None:
        return np.asarray(phi.fourier(zeta))
    lo, hi = phi.support
    grid = UniformGrid.from_range(lo, hi, (hi - lo) / 8192)
    x = grid.points
    vals = np.asarray(phi.evaluator(x), dtype=np.complex128)
    zeta = np.atleast_1d(np.asarray(zeta, dtype=np.float64))
    out = trapezoid(vals[:, None] * np.exp(-1j * zeta[None, :] * x[:, None]),
                    grid.step, axis=0) / np.sqrt(2.0 * np.pi)
    return out


def periodization_defect(phi: ScalingFunction, zeta: float, K: int = 10_000) -> float:
    """2 pi * truncated sum of |FT(zeta + 2 k pi)|^2, minus 1.

    Zero indicates orthonormal integer shifts.  The 2 pi factor compensates
    the unitary Fourier normalization so both reference scaling functions
    register zero defect.
    """
    ks = np.arange(-K, K + 1)
    vals = np.abs(scaling_fourier(phi, zeta + 2.0 * np.pi * ks)) ** 2
    return float(2.0 * np.pi * pairwise_sum(vals) - 1.0)


def gram_matrix(params: SaftParams, phi: ScalingFunction, shifts, step: float = 1 / 8,
                pad: float = 0.0) -> np.ndarray:
    """Quadrature Gram matrix of the level-0 chirped integer shifts.

    Uses the midpoint rule: the chirps cancel inside each product, so for
    piecewise-constant bases (box) the cell sums are exact, and for smooth
    bases it is second-order like the trapezoid rule.
    """
    shifts = list(shifts)
    lo, hi = phi.support
    a, b = lo + min(shifts) - pad, hi + max(shifts) + pad
    cells = int(round((b - a) / step))
    x = a + (np.arange(cells) + 0.5) * step
    fam = np.stack([phi_family(params, phi, 0, n, x) for n in shifts])
    G = np.empty((len(shifts), len(shifts)), dtype=np.complex128)
    for i in range(len(shifts)):
        for j in range(len(shifts)):
            G[i, j] = pairwise_sum(fam[i] * np.conj(fam[j])) * step
    return G


def lowpass_from_phi(params: SaftParams, phi: ScalingFunction, lo: int, hi: int,
                     step: float = 1 / 8) -> FilterSequence:
    """Refinement (low-pass) coefficients from shift-correlation integrals.

    h_n = sqrt(2) * exp(-(i/2B)(A n^2/4 + p n)) * integral phi(x) conj(phi(2x-n)) dx.

    The overlap integrals use the midpoint rule so that jump discontinuities
    on half-integer cell boundaries (box) are integrated exactly.
    """
    A, B, p = params.A, params.B, params.p
    slo, shi = phi.support
    cells = int(round((shi - slo) / step))
    x = slo + (np.arange(cells) + 0.5) * step
    base = np.asarray(phi.evaluator(x), dtype=np.complex128)
    coeffs = np.empty(hi - lo + 1, dtype=np.complex128)
    for idx, n in enumerate(range(lo, hi + 1)):
        overlap = pairwise_sum(base * np.conj(np.asarray(phi.evaluator(2.0 * x - n)))) * step
        phase = np.exp(-1j * (A * n * n / 4.0 + p * n) / (2.0 * B))
        coeffs[idx] = SQRT2 * phase * overlap
    return FilterSequence(lo, hi, coeffs)


@dataclass(frozen=True)
class SymbolFn:
    """2 pi periodic transfer function of a filter sequence."""
    params: SaftParams
    coefficients: FilterSequence

    def __call__(self, zeta) -> np.ndarray:
        return symbol(self.params, self.coefficients, zeta)


def symbol(params: SaftParams, coeffs: FilterSequence, zeta) -> np.ndarray:
    """(1/sqrt 2) sum_n c_n exp(-i n zeta) exp((i/2B)(A n^2/4 + p n))."""
    A, B, p = params.A, params.B, params.p
    zeta = np.asarray(zeta, dtype=np.float64)
    scalar = zeta.ndim == 0
    z = np.atleast_1d(zeta)
    n = coeffs.indices.astype(np.float64)
    chirp = np.exp(1j * (A * n * n / 4.0 + p * n) / (2.0 * B))
    terms = (coeffs.coeffs * chirp)[:, None] * np.exp(-1j * np.multiply.outer(n, z))
    out = pairwise_sum(terms, axis=0) / SQRT2
    return complex(out[0]) if scalar else out


def qmf_defect(params: SaftParams, h: FilterSequence, zeta: float) -> float:
    """|S0(z/2)|^2 + |S0(z/2 + pi)|^2 - 1; zero for a quadrature mirror filter."""
    s0 = symbol(params, h, np.array([zeta / 2.0, zeta / 2.0 + np.pi]))
    return float(np.abs(s0[0]) ** 2 + np.abs(s0[1]) ** 2 - 1.0)


def wavelet_coeffs(params: SaftParams, h: FilterSequence) -> FilterSequence:
    """High-pass coefficients from the canonical choice S1(z) = e^{-iz} conj(S0(z+pi)).

    d_k = (-1)^(1-k) conj(h_{1-k}) exp(-(i/2B)(A((1-k)^2 + k^2)/4 + p)).
    """
    A, B, p = params.A, params.B, params.p

    def d(k: int) -> complex:
        hbar = np.conj(h.coeff(1 - k))
        phase = np.exp(-1j * (A * ((1 - k) ** 2 + k * k) / 4.0 + p) / (2.0 * B))
        return complex((-1.0) ** (1 - k) * hbar * phase)

    return FilterSequence.from_function(1 - h.hi, 1 - h.lo, d)


def cross_defect(params: SaftParams, h: FilterSequence, d: FilterSequence, zeta: float) -> complex:
    """S0(z/2) conj(S1(z/2)) + S0(z/2+pi) conj(S1(z/2+pi)); zero iff the
    low/high-pass pair generates orthogonal subspaces."""
    zs = np.array([zeta / 2.0, zeta / 2.0 + np.pi])
    s0 = symbol(params, h, zs)
    s1 = symbol(params, d, zs)
    return complex(s0[0] * np.conj(s1[0]) + s0[1] * np.conj(s1[1]))


def highpass_symbol_check(params: SaftParams, h: FilterSequence, d: FilterSequence,
                          zeta: float) -> complex:
    """S1(z) - e^{-iz} conj(S0(z+pi)); zero for the canonical high-pass choice."""
    s1 = symbol(params, d, zeta)
    s0 = symbol(params, h, zeta + np.pi)
    return complex(s1 - np.exp(-1j * zeta) * np.conj(s0))


def synthesize_psi(params: SaftParams, phi: ScalingFunction, d: FilterSequence, x):
    """Mother wavelet from the wavelet equation, truncated to d's window."""
    A, B, p = params.A, params.B, params.p
    x = np.asarray(x, dtype=np.float64)
    acc = np.zeros(x.shape, dtype=np.complex128)
    for k in d.indices:
        dk = d.coeff(int(k))
        if dk == 0:
            continue
        mod = np.exp(-1j * (A * (x * x - k * k / 4.0) + 2.0 * p * (x - k / 2.0)) / (2.0 * B))
        acc = acc + dk * mod * np.asarray(phi.evaluator(2.0 * x - k))
    out = SQRT2 * acc
    return out if out.shape else complex(out)


def refinement_residual(params: SaftParams, phi: ScalingFunction, h: FilterSequence, x):
    """phi_{S,0,0}(x) minus its expansion in the level-1 family."""
    x = np.asarray(x, dtype=np.float64)
    rhs = np.zeros(x.shape, dtype=np.complex128)
    for n in h.indices:
        hn = h.coeff(int(n))
        if hn == 0:
            continue
        rhs = rhs + hn * phi_family(params, phi, 1, int(n), x)
    return phi_family(params, phi, 0, 0, x) - rhs
