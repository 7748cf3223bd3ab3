"""Closed-form special affine wavelet families (sinc-based and box-based)."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .mra import (BOX_SCALING, SINC_SCALING, FilterSequence, synthesize_psi,
                  wavelet_coeffs)
from .params import SaftParams

SQRT2 = np.sqrt(2.0)


def _chirp_arg(params: SaftParams, n: float) -> complex:
    return np.exp(-1j * (params.A * n * n / 4.0 + params.p * n) / (2.0 * params.B))


def shannon_lowpass(params: SaftParams, n: int) -> complex:
    """Closed-form sinc-family refinement coefficient."""
    if n == 0:
        return 1.0 / SQRT2
    if n % 2 == 0:
        return 0.0 + 0.0j
    return complex(SQRT2 / (np.pi * n) * _chirp_arg(params, n) * np.sin(n * np.pi / 2.0))


def shannon_highpass(params: SaftParams, n: int) -> complex:
    """Closed-form sinc-family wavelet coefficient."""
    A, B, p = params.A, params.B, params.p
    if n == 1:
        return complex(np.exp(-1j * (A / 4.0 + p) / (2.0 * B)) / SQRT2)
    if n % 2 != 0:
        return 0.0 + 0.0j
    return complex(SQRT2 / (np.pi * (n - 1)) * (-1.0) ** n
                   * np.cos(n * np.pi / 2.0) * _chirp_arg(params, n))


def shannon_filters(params: SaftParams, N: int) -> tuple[FilterSequence, FilterSequence]:
    """Sinc-family low/high-pass pair truncated to |n| <= N (d on 1-N..N+1)."""
    if N < 1:
        raise ValueError("window N must be >= 1")
    h = FilterSequence.from_function(-N, N, lambda n: shannon_lowpass(params, n))
    d = FilterSequence.from_function(1 - N, N + 1, lambda n: shannon_highpass(params, n))
    return h, d


def shannon_highpass_mismatch(params: SaftParams, N: int) -> float:
    """Max gap between the closed-form wavelet coefficients and the ones
    regenerated from the low-pass filter; diagnostic, expected ~0."""
    h, d = shannon_filters(params, N)
    d2 = wavelet_coeffs(params, h)
    return float(max(abs(d.coeff(int(k)) - d2.coeff(int(k)))
                     for k in range(min(d.lo, d2.lo), max(d.hi, d2.hi) + 1)))


def shannon_psi(params: SaftParams, N: int, x):
    """Sinc-family mother wavelet by truncated synthesis (|k| window from N)."""
    _, d = shannon_filters(params, N)
    return synthesize_psi(params, SINC_SCALING, d, x)


def haar_filters(params: SaftParams) -> tuple[FilterSequence, FilterSequence]:
    """Box-family two-tap filter pair; d regenerated from h."""
    A, B, p = params.A, params.B, params.p
    h = FilterSequence(0, 1, np.array([1.0 / SQRT2,
                                       np.exp(-1j * (A / 4.0 + p) / (2.0 * B)) / SQRT2]))
    return h, wavelet_coeffs(params, h)


def haar_psi(params: SaftParams, x):
    """Piecewise closed form of the box-family wavelet.

    The envelope phase is (A x^2 + p)/(2B); the synthesis route carries
    (A x^2 + 2 p x)/(2B) instead, so the two agree up to a global phase only
    when p = 0.
    """
    A, B, p = params.A, params.B, params.p
    x = np.asarray(x, dtype=np.float64)
    env = np.exp(-1j * (A * x * x + p) / (2.0 * B))
    sign = np.where((x >= 0.0) & (x < 0.5), -1.0,
                    np.where((x >= 0.5) & (x < 1.0), 1.0, 0.0))
    out = sign * env
    return out if out.shape else complex(out)


@dataclass(frozen=True)
class WaveletFamily:
    kind: str  # "shannon" | "haar"
    params: SaftParams
    h: FilterSequence
    d: FilterSequence

    @classmethod
    def shannon(cls, params: SaftParams, N: int = 512) -> "WaveletFamily":
        h, d = shannon_filters(params, N)
        return cls("shannon", params, h, d)

    @classmethod
    def haar(cls, params: SaftParams) -> "WaveletFamily":
        h, d = haar_filters(params)
        return cls("haar", params, h, d)

    def scaling(self):
        return SINC_SCALING if self.kind == "shannon" else BOX_SCALING

    def psi(self, x):
        return synthesize_psi(self.params, self.scaling(), self.d, x)
