"""Band-limitation in the SAFT domain and Shannon-type reconstruction."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

import numpy as np

from .core import pairwise_sum, trapezoid
from .params import SaftParams
from .signal import SampledFunction, UniformGrid


class PeriodMismatch(ValueError):
    """Sample set period disagrees with the band-limit spec."""


def sinc(t) -> np.ndarray:
    """Normalized cardinal sine sin(pi t)/(pi t) with sinc(0) = 1."""
    return np.sinc(t)


@dataclass(frozen=True)
class BandlimitSpec:
    """SAFT bandwidth (radians) and the matching Nyquist sampling period."""
    omega: float
    period: float

    @classmethod
    def nyquist(cls, params: SaftParams, omega: float) -> "BandlimitSpec":
        return cls(omega, params.B * np.pi / omega)


@dataclass(frozen=True)
class SampleSet:
    entries: Mapping[int, complex]
    period: float


def from_function(fn: Callable[[np.ndarray], np.ndarray], period: float, window: int) -> SampleSet:
    """Sample ``fn`` at n*period for |n| <= window."""
    ns = np.arange(-window, window + 1)
    vals = np.asarray(fn(ns * period), dtype=np.complex128)
    return SampleSet(dict(zip(ns.tolist(), vals.tolist())), period)


def gmap(params: SaftParams, F: SampledFunction, xgrid: UniformGrid) -> SampledFunction:
    """Dechirped spectrum integral; maps a SAFT spectrum supported in
    (-omega, omega) to a signal band-limited to (-omega/B, omega/B) in the
    classical Fourier domain."""
    A, B, D, p, q = params.A, params.B, params.D, params.p, params.q
    zeta = F.grid.points
    x = xgrid.points
    phase = -(-2.0 * x[None, :] * zeta[:, None]
              - 2.0 * zeta[:, None] * (D * p - B * q)
              + D * zeta[:, None] ** 2) / (2.0 * B)
    g = trapezoid(F.values[:, None] * np.exp(1j * phase), F.grid.step, axis=0)
    return SampledFunction(xgrid, g)


def truncation_tail(params: SaftParams, fn: Callable[[np.ndarray], np.ndarray],
                    spec: BandlimitSpec, x, window: int, extent: int = 4096) -> float:
    """Worst-case magnitude of the series terms omitted by a finite window.

    Sums |f(nT) * sinc(...)| over window < |n| <= extent and maximizes over
    ``x``.  For a signal whose samples decay like 1/n this bound is O(1/N),
    so it halves when the window doubles; the signed reconstruction error
    itself can decay faster through cancellation.
    """
    T = spec.period
    ns = np.concatenate([np.arange(-extent, -window), np.arange(window + 1, extent + 1)])
    vals = np.abs(np.asarray(fn(ns * T), dtype=np.complex128))
    xs = np.atleast_1d(np.asarray(x, dtype=np.float64))
    kern = np.abs(np.sinc(spec.omega * (xs[None, :] - ns[:, None] * T) / (params.B * np.pi)))
    return float(np.max(pairwise_sum(vals[:, None] * kern, axis=0)))


def reconstruct(params: SaftParams, samples: SampleSet, spec: BandlimitSpec, x):
    """Truncated sampling-series reconstruction at ``x`` (scalar or array).

    The per-sample modulation uses A(nT)^2 + 2 p nT; constant phases that
    cancel against the leading chirp are dropped analytically.
    """
    if abs(samples.period - spec.period) > 1e-12:
        raise PeriodMismatch(
            f"PeriodMismatch: samples.period={samples.period} != spec.period={spec.period}"
        )
    A, B, p = params.A, params.B, params.p
    T = spec.period
    xs = np.asarray(x, dtype=np.float64)
    acc = np.zeros(xs.shape, dtype=np.complex128)
    for n in sorted(samples.entries):
        fn = samples.entries[n]
        nT = n * T
        mod = np.exp(1j * (A * nT * nT + 2.0 * p * nT) / (2.0 * B))
        acc = acc + fn * mod * np.sinc(spec.omega * (xs - nT) / (params.B * np.pi))
    out = np.exp(-1j * (A * xs * xs + 2.0 * xs * p) / (2.0 * B)) * acc
    return out if out.shape else complex(out)
