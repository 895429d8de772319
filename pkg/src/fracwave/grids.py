"""Uniform time and space grids and the sampled functions living on them."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .errors import DomainError

__all__ = ["TimeGrid", "SpaceGrid", "TimeSeries", "Field", "FracParams"]


@dataclass(frozen=True)
class TimeGrid:
    """Uniform grid t_j = j*dt on [0, t_end] with n_steps panels."""

    t_end: float
    n_steps: int

    def __post_init__(self):
        if not np.isfinite(self.t_end) or self.t_end <= 0:
            raise DomainError(f"t_end must be finite and positive, got {self.t_end}")
        if self.n_steps < 2:
            raise DomainError(f"n_steps must be >= 2, got {self.n_steps}")

    @property
    def dt(self) -> float:
        return self.t_end / self.n_steps

    @property
    def nodes(self) -> np.ndarray:
        return np.linspace(0.0, self.t_end, self.n_steps + 1)

    def refine(self, factor: int = 2) -> "TimeGrid":
        return TimeGrid(self.t_end, self.n_steps * factor)


@dataclass(frozen=True)
class SpaceGrid:
    """Uniform 1-D spatial grid, optionally periodic.

    Periodic grids store n_points nodes on [x_min, x_max) with spacing
    (x_max - x_min)/n_points; non-periodic grids include both endpoints.
    """

    x_min: float
    x_max: float
    n_points: int
    periodic: bool = True

    def __post_init__(self):
        if not (np.isfinite(self.x_min) and np.isfinite(self.x_max)):
            raise DomainError("grid endpoints must be finite")
        if self.x_max <= self.x_min:
            raise DomainError("x_max must exceed x_min")
        if self.n_points < 8:
            raise DomainError(f"n_points must be >= 8, got {self.n_points}")

    @property
    def length(self) -> float:
        return self.x_max - self.x_min

    @property
    def dx(self) -> float:
        if self.periodic:
            return self.length / self.n_points
        return self.length / (self.n_points - 1)

    @property
    def nodes(self) -> np.ndarray:
        if self.periodic:
            return self.x_min + self.dx * np.arange(self.n_points)
        return np.linspace(self.x_min, self.x_max, self.n_points)

    @property
    def wavenumbers(self) -> np.ndarray:
        """Angular frequencies of the FFT bins (periodic grids only)."""
        if not self.periodic:
            raise DomainError("wavenumbers are defined for periodic grids only")
        return 2.0 * np.pi * np.fft.fftfreq(self.n_points, d=self.dx)


@dataclass
class TimeSeries:
    """Scalar samples, one per node of a TimeGrid."""

    grid: TimeGrid
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values)
        if self.values.shape != (self.grid.n_steps + 1,):
            raise DomainError(
                f"expected {self.grid.n_steps + 1} values, got shape {self.values.shape}"
            )
        if not np.all(np.isfinite(self.values)):
            raise DomainError("time series contains non-finite entries")

    @classmethod
    def from_function(cls, grid: TimeGrid, fn) -> "TimeSeries":
        return cls(grid, np.asarray([fn(t) for t in grid.nodes], dtype=float))


@dataclass
class Field:
    """Sampled function of x on a SpaceGrid, optionally time-stamped."""

    grid: SpaceGrid
    values: np.ndarray
    time: float | None = None

    def __post_init__(self):
        self.values = np.asarray(self.values)
        if self.values.shape != (self.grid.n_points,):
            raise DomainError(
                f"expected {self.grid.n_points} values, got shape {self.values.shape}"
            )
        if not np.all(np.isfinite(self.values)):
            raise DomainError("field contains non-finite entries")

    @classmethod
    def from_function(cls, grid: SpaceGrid, fn, time: float | None = None) -> "Field":
        return cls(grid, fn(grid.nodes), time=time)

    def with_values(self, values: np.ndarray, time: float | None = None) -> "Field":
        return Field(self.grid, values, time=self.time if time is None else time)

    def copy(self) -> "Field":
        return Field(self.grid, self.values.copy(), time=self.time)


@dataclass(frozen=True)
class FracParams:
    """Order pair (alpha, beta) with damping h and wave speed c.

    alpha is the full order in (1, 2], beta in [alpha/2, alpha] the order
    attached to the second initial datum, h >= 0 the damping rate and c > 0
    the propagation speed.
    """

    alpha: float
    beta: float | None = None
    h: float = 0.0
    c: float = 1.0

    def __post_init__(self):
        if not (1.0 < self.alpha <= 2.0):
            raise DomainError(f"alpha must lie in (1, 2], got {self.alpha}")
        if self.beta is None:
            object.__setattr__(self, "beta", self.alpha / 2.0)
        if not (self.alpha / 2.0 - 1e-12 <= self.beta <= self.alpha + 1e-12):
            raise DomainError(
                f"beta must lie in [alpha/2, alpha] = [{self.alpha / 2}, {self.alpha}], got {self.beta}"
            )
        if self.h < 0:
            raise DomainError(f"h must be >= 0, got {self.h}")
        if self.c <= 0:
            raise DomainError(f"c must be > 0, got {self.c}")

    @property
    def half_order(self) -> float:
        return self.alpha / 2.0

    @property
    def degenerate(self) -> bool:
        """True when the half order is 1 and shifts are exact."""
        return self.alpha == 2.0

    def with_beta(self, beta: float) -> "FracParams":
        return replace(self, beta=beta)
