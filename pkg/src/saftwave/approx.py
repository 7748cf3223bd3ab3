"""Function approximation on [0, 1] by truncated chirped-Haar wavelet series.

Coefficients are fixed by midpoint collocation on the 2M dyadic
sub-intervals; a classical Haar baseline shares the code path so the two
error columns are directly comparable.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .params import SaftParams

SPECIAL_AFFINE = "special_affine"
CLASSICAL_HAAR = "classical_haar"


class IndexOutOfRange(ValueError):
    """Basis index outside 1..2M."""


class SingularSystem(ValueError):
    """Collocation matrix is singular (degenerate chirp envelope)."""


class ConditionTooLarge(ValueError):
    """Collocation matrix condition estimate exceeds the configured bound."""


@dataclass(frozen=True)
class BasisIndex:
    """Flat index sigma >= 2 decomposed into level j and translation k."""
    sigma: int
    j: int
    k: int

    @property
    def m(self) -> int:
        return 2 ** self.j

    @classmethod
    def from_sigma(cls, sigma: int) -> "BasisIndex":
        if sigma < 2:
            raise IndexOutOfRange(f"sigma must be >= 2, got {sigma}")
        j = int(np.log2(sigma - 1))
        m = 2 ** j
        k = sigma - m - 1
        return cls(sigma, j, k)


def breakpoints(idx: BasisIndex, M: int) -> tuple[float, float, float]:
    """Support breakpoints (start, sign flip, end) of basis function sigma."""
    m = idx.m
    if idx.sigma > 2 * M:
        raise IndexOutOfRange(f"sigma {idx.sigma} exceeds 2M = {2 * M}")
    mu = M / m
    ds = 1.0 / (2.0 * M)
    return (2.0 * idx.k * mu * ds, (2.0 * idx.k + 1) * mu * ds, 2.0 * (idx.k + 1) * mu * ds)


def collocation_points(M: int) -> np.ndarray:
    """Midpoints of the 2M sub-intervals of [0, 1]."""
    cl = np.arange(1, 2 * M + 1)
    return (2.0 * cl - 1.0) / (4.0 * M)


@dataclass(frozen=True)
class CollocationProblem:
    J: int
    params: SaftParams
    basis: str = SPECIAL_AFFINE
    target: Callable[[np.ndarray], np.ndarray] = field(default=lambda s: s, repr=False)

    def __post_init__(self) -> None:
        if self.J < 0:
            raise ValueError("J must be non-negative")
        if self.basis not in (SPECIAL_AFFINE, CLASSICAL_HAAR):
            raise ValueError(f"unknown basis kind {self.basis!r}")

    @property
    def M(self) -> int:
        return 2 ** self.J


def _envelope(problem: CollocationProblem, s: np.ndarray) -> np.ndarray:
    if problem.basis == CLASSICAL_HAAR:
        return np.ones_like(s)
    A, B, p = problem.params.A, problem.params.B, problem.params.p
    return np.imag(np.exp(-1j * (A * s * s + p) / (2.0 * B)))


def basis_h(problem: CollocationProblem, sigma: int, s) -> np.ndarray:
    """Basis function sigma at points s in [0, 1].

    The domain endpoint s = 1 is evaluated as the limit from the left, so the
    reconstruction is defined on the closed interval.
    """
    M = problem.M
    if not 1 <= sigma <= 2 * M:
        raise IndexOutOfRange(f"sigma must lie in 1..{2 * M}, got {sigma}")
    s = np.asarray(s, dtype=np.float64)
    at_end = s == 1.0
    if sigma == 1:
        out = np.where((s >= 0.0) & ((s < 1.0) | at_end), 1.0, 0.0)
        return out if out.shape else float(out)
    b1, b2, b3 = breakpoints(BasisIndex.from_sigma(sigma), M)
    neg = (s >= b1) & (s < b2)
    pos = (s >= b2) & ((s < b3) | (at_end & (b3 == 1.0)))
    sign = np.where(neg, -1.0, np.where(pos, 1.0, 0.0))
    out = sign * _envelope(problem, s)
    return out if out.shape else float(out)


@dataclass(frozen=True)
class ApproxResult:
    problem: CollocationProblem
    coefficients: np.ndarray

    def reconstruct(self, s) -> np.ndarray:
        s = np.asarray(s, dtype=np.float64)
        acc = np.zeros(s.shape, dtype=np.float64)
        for sigma in range(1, 2 * self.problem.M + 1):
            acc = acc + self.coefficients[sigma - 1] * basis_h(self.problem, sigma, s)
        return acc if acc.shape else float(acc)


def solve(problem: CollocationProblem, cond_bound: float = 1e12) -> ApproxResult:
    """Fit the 2M coefficients by enforcing equality at the midpoints.

    The dense system is solved by LU with partial pivoting (LAPACK via
    numpy); 2M <= 128 for J <= 6 so nothing faster is warranted.
    """
    M = problem.M
    pts = collocation_points(M)
    if problem.basis == SPECIAL_AFFINE and float(np.max(np.abs(_envelope(problem, pts)))) < 1e-12:
        raise SingularSystem("SingularSystem: chirp envelope vanishes at all collocation points")
    H = np.column_stack([basis_h(problem, sigma, pts) for sigma in range(1, 2 * M + 1)])
    cond = float(np.linalg.cond(H))
    if not np.isfinite(cond):
        raise SingularSystem("SingularSystem: collocation matrix is singular")
    if cond > cond_bound:
        raise ConditionTooLarge(f"condition estimate {cond:.3e} exceeds bound {cond_bound:.1e}")
    rhs = np.asarray(problem.target(pts), dtype=np.float64)
    a = np.linalg.solve(H, rhs)
    return ApproxResult(problem, a)


def linf_error(result: ApproxResult, target: Callable[[np.ndarray], np.ndarray],
               grid_points: int = 2001) -> float:
    """Max abs deviation on a uniform closed grid over [0, 1].

    The grid includes both endpoints; the reconstruction at s = 1 uses the
    left-limit convention of ``basis_h`` so the supremum on the final cell
    is attained exactly.
    """
    if grid_points < 2:
        raise ValueError("grid_points must be >= 2")
    s = np.linspace(0.0, 1.0, grid_points)
    return float(np.max(np.abs(np.asarray(target(s), dtype=np.float64) - result.reconstruct(s))))


def error_table(params: SaftParams, target: Callable[[np.ndarray], np.ndarray],
                jmax: int, grid_points: int = 2001) -> list[dict]:
    """Rows of per-level sup-norm errors for both basis kinds."""
    rows = []
    for J in range(1, jmax + 1):
        row = {"J": J}
        for basis, key in ((SPECIAL_AFFINE, "special_affine_linf"),
                           (CLASSICAL_HAAR, "classical_haar_linf")):
            res = solve(CollocationProblem(J, params, basis, target))
            row[key] = linf_error(res, target, grid_points)
        row["ratio"] = row["special_affine_linf"] / row["classical_haar_linf"]
        rows.append(row)
    return rows
