"""Training-time synthesis of change labels from existing building masks.

Removed buildings are simulated as rotated rectangles rasterized onto pure
background, without touching any existing building pixel; a share of unchanged
buildings is flipped to newly constructed (and erased from the historical
mask, since a new building cannot appear in the earlier epoch).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..core import (
    BACKGROUND,
    NEW,
    REMOVED,
    UNCHANGED,
    ChangeLabel,
    HistoricalMask,
    extract_instances,
)
from ..errors import DataError
from .convert import Sample

MAX_PLACEMENT_ATTEMPTS = 100


@dataclass(frozen=True)
class RsgParams:
    """Knobs for the simulated-change generator.

    Defaults (count range, area range, flip fraction) are configuration
    choices, tuned for 256-512 px tiles.
    """

    n_removed_range: tuple[int, int] = (0, 3)
    area_range_px: tuple[int, int] = (64, 400)
    aspect_range: tuple[float, float] = (0.5, 2.0)
    rotation_range_deg: tuple[float, float] = (0.0, 180.0)
    flip_to_new_fraction: float = 0.2
    seed: int = 0

    def __post_init__(self):
        for name in ("n_removed_range", "area_range_px", "aspect_range", "rotation_range_deg"):
            lo, hi = getattr(self, name)
            if lo > hi:
                raise DataError(f"{name} is degenerate: {lo} > {hi}")
        if self.n_removed_range[0] < 0 or self.area_range_px[0] <= 0:
            raise DataError("counts must be >= 0 and areas positive")
        if not 0.0 <= self.flip_to_new_fraction <= 1.0:
            raise DataError("flip_to_new_fraction must lie in [0, 1]")


def rasterize_rectangle(
    shape: tuple[int, int],
    center: tuple[float, float],
    height: float,
    width: float,
    angle_deg: float,
) -> np.ndarray:
    """Boolean raster of a rotated rectangle; pixels whose centers fall inside."""
    h, w = shape
    cy, cx = center
    half_diag = 0.5 * np.hypot(height, width)
    r0 = max(0, int(np.floor(cy - half_diag)))
    r1 = min(h - 1, int(np.ceil(cy + half_diag)))
    c0 = max(0, int(np.floor(cx - half_diag)))
    c1 = min(w - 1, int(np.ceil(cx + half_diag)))
    out = np.zeros(shape, dtype=bool)
    if r1 < r0 or c1 < c0:
        return out
    yy, xx = np.mgrid[r0 : r1 + 1, c0 : c1 + 1]
    theta = np.deg2rad(angle_deg)
    dy = yy - cy
    dx = xx - cx
    u = dx * np.cos(theta) + dy * np.sin(theta)
    v = -dx * np.sin(theta) + dy * np.cos(theta)
    inside = (np.abs(u) <= width / 2) & (np.abs(v) <= height / 2)
    out[r0 : r1 + 1, c0 : c1 + 1] = inside
    return out


def _place_rectangles(cat: np.ndarray, k: int, params: RsgParams, rng: np.random.Generator):
    """Draw up to k rectangles wholly on background pixels; silently fewer on failure."""
    h, w = cat.shape
    placed = []
    for _ in range(k):
        for _attempt in range(MAX_PLACEMENT_ATTEMPTS):
            area = rng.uniform(*params.area_range_px)
            aspect = rng.uniform(*params.aspect_range)
            angle = rng.uniform(*params.rotation_range_deg)
            rh = np.sqrt(area / aspect)
            rw = np.sqrt(area * aspect)
            center = (rng.uniform(0, h), rng.uniform(0, w))
            rect = rasterize_rectangle((h, w), center, rh, rw, angle)
            if rect.any() and (cat[rect] == BACKGROUND).all():
                cat[rect] = REMOVED
                placed.append(rect)
                break
    return placed


def simulate_changes(sample: Sample, params: RsgParams) -> Sample:
    """Simulated sample: synthetic removed rectangles plus flipped-to-new buildings.

    Deterministic given (sample, params); the label and mask stay consistent.
    """
    rng = np.random.default_rng(params.seed)
    cat = sample.label.categories.copy()
    mask = sample.mask.values.copy()

    lo, hi = params.n_removed_range
    k = int(rng.integers(lo, hi + 1))
    if (cat == BACKGROUND).any():
        for rect in _place_rectangles(cat, k, params, rng):
            mask[rect] = 1

    unchanged = extract_instances(ChangeLabel(categories=cat), UNCHANGED)
    n_flip = int(round(params.flip_to_new_fraction * len(unchanged)))
    if n_flip > 0:
        for idx in rng.choice(len(unchanged), size=n_flip, replace=False):
            rows, cols = unchanged[int(idx)].index_arrays()
            cat[rows, cols] = NEW
            mask[rows, cols] = 0

    return Sample(
        image=sample.image,
        mask=HistoricalMask(values=mask),
        label=ChangeLabel(categories=cat),
    )
