"""Parameter matrices for the special affine Fourier transform (SAFT).

A transform is specified by an augmented matrix ``[A B; C D | p q]`` whose
2x2 core is unimodular and whose ``B`` entry is strictly positive.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DET_TOL = 1e-12


class NotUnimodular(ValueError):
    """Core matrix determinant differs from 1 beyond tolerance."""


class NonpositiveB(ValueError):
    """The B entry must be strictly positive."""


@dataclass(frozen=True)
class SaftParams:
    A: float
    B: float
    C: float
    D: float
    p: float = 0.0
    q: float = 0.0

    @property
    def det(self) -> float:
        return self.A * self.D - self.B * self.C


def validate(params: SaftParams) -> None:
    """Raise unless the matrix is unimodular with B > 0."""
    if not params.B > 0:
        raise NonpositiveB(f"NonpositiveB: B = {params.B}")
    if abs(params.det - 1.0) > DET_TOL:
        raise NotUnimodular(f"NotUnimodular: det = {params.det}")


def prefactor(params: SaftParams) -> complex:
    """Unit-modulus constant multiplying the inversion integral."""
    A, B, C, D, p, q = params.A, params.B, params.C, params.D, params.p, params.q
    return complex(np.exp(0.5j * (C * D * p * p + A * B * q * q - 2 * A * D * p * q)))


def invert_params(params: SaftParams) -> SaftParams:
    """Adjugate core matrix with the transformed offset pair.

    Note the returned B entry is negative; the result parametrises the
    inverse transform and is not itself a valid forward matrix.
    """
    A, B, C, D, p, q = params.A, params.B, params.C, params.D, params.p, params.q
    return SaftParams(D, -B, -C, A, D * p - B * q, A * q - C * p)


# The two parameter matrices used for all CSV-reproducible wavelet traces.
FIGURE1 = SaftParams(1.0, 1.0, -1.0, 0.0, 2.0, -1.0)
FIGURE2 = SaftParams(3.0, 2.0, 1.0, 1.0, 1.0, -2.0)

PRESETS = {"figure1": FIGURE1, "figure2": FIGURE2}
