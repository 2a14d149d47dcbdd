"""Sampling grids on disks in the complex plane.

Grid sweeps never prove a property of an analytic function; they can only
refute one. Every sampled check in the package is therefore reported with
the grid it was evaluated on.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class DiskGrid:
    """Polar grid of points ``r_i exp(i theta_j)`` in a closed disk.

    The radii ``r_i = max_radius * i / radius_count`` for
    ``i = 1, ..., radius_count`` are equally spaced in
    ``(0, max_radius]`` and the angles ``theta_j = 2 pi j / angle_count``
    are equally spaced in ``[0, 2 pi)``. The origin is never a grid point.
    """

    #: Number of circles.
    radius_count: int

    #: Number of points on each circle.
    angle_count: int

    #: Radius of the outermost circle, in (0, 1).
    max_radius: float

    def __post_init__(self):
        if self.radius_count < 2:
            raise ValueError(
                f"radius_count must be at least 2, got {self.radius_count}"
            )
        if self.angle_count < 8:
            raise ValueError(
                f"angle_count must be at least 8, got {self.angle_count}"
            )
        if not 0 < self.max_radius < 1:
            raise ValueError(
                f"max_radius must be in (0, 1), got {self.max_radius}"
            )

    def radii(self) -> np.ndarray:
        return self.max_radius * np.arange(1, self.radius_count + 1) \
            / self.radius_count

    def angles(self) -> np.ndarray:
        return 2 * np.pi * np.arange(self.angle_count) / self.angle_count

    def points(self) -> np.ndarray:
        """Return the grid as a complex array of shape
        ``(radius_count, angle_count)``."""
        return self.radii()[:, np.newaxis] \
            * np.exp(1j * self.angles())[np.newaxis, :]

    def refined(self, factor: int = 4) -> DiskGrid:
        """Return a grid with `factor` times as many radii and angles."""
        return DiskGrid(self.radius_count * factor,
                        self.angle_count * factor,
                        self.max_radius)

    def with_radius(self, max_radius: float) -> DiskGrid:
        """Return a grid with the same resolution on a different disk."""
        return DiskGrid(self.radius_count, self.angle_count, max_radius)

    @classmethod
    def from_dict(cls, params: dict) -> DiskGrid:
        """Build a grid from a dict with keys ``radius_count``,
        ``angle_count`` and ``max_radius``."""
        missing = {"radius_count", "angle_count", "max_radius"} \
            - params.keys()
        if missing:
            raise ValueError("Invalid grid specification. Missing keys "
                             f"{sorted(missing)}.")
        return cls(int(params["radius_count"]),
                   int(params["angle_count"]),
                   float(params["max_radius"]))

    def to_dict(self) -> dict:
        return {"radius_count": self.radius_count,
                "angle_count": self.angle_count,
                "max_radius": self.max_radius}


#: Default sampling grid, 64 radii by 256 angles up to radius 0.99.
DEFAULT_GRID = DiskGrid(64, 256, 0.99)
