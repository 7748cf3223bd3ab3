"""Uniform grids and complex-valued sampled functions."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np


@dataclass(frozen=True)
class UniformGrid:
    start: float
    step: float
    count: int

    def __post_init__(self) -> None:
        if not self.step > 0:
            raise ValueError(f"grid step must be positive, got {self.step}")
        if self.count < 2:
            raise ValueError(f"grid needs at least 2 points, got {self.count}")

    @property
    def points(self) -> np.ndarray:
        return self.start + self.step * np.arange(self.count)

    @property
    def stop(self) -> float:
        return self.start + self.step * (self.count - 1)

    @classmethod
    def from_range(cls, lo: float, hi: float, step: float) -> "UniformGrid":
        """Grid covering [lo, hi] with the given step; hi must be lo + k*step."""
        count = int(round((hi - lo) / step)) + 1
        return cls(lo, step, count)


@dataclass(frozen=True)
class SampledFunction:
    grid: UniformGrid
    values: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        vals = np.asarray(self.values, dtype=np.complex128)
        if vals.shape != (self.grid.count,):
            raise ValueError(
                f"values shape {vals.shape} does not match grid count {self.grid.count}"
            )
        if not np.all(np.isfinite(vals.view(np.float64))):
            raise ValueError("sampled values must be finite")
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_callable(cls, grid: UniformGrid, fn: Callable[[np.ndarray], np.ndarray]) -> "SampledFunction":
        return cls(grid, np.asarray(fn(grid.points), dtype=np.complex128))
