"""Raster domain types shared across the package.

All rasters are numpy arrays in (row, col) order. Feature maps may be numpy
arrays or torch tensors; the container does not care which.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import DataError

TILE_STRIDE = 32  # encoder downsamples 32x at the deepest stage
FEATURE_STRIDE = 4  # resolution of the fused feature map

BACKGROUND = 0
UNCHANGED = 1
NEW = 2
REMOVED = 3
CATEGORIES = (BACKGROUND, UNCHANGED, NEW, REMOVED)


@dataclass(frozen=True)
class ImageTile:
    """An up-to-date RGB image patch with H and W multiples of 32."""

    pixels: np.ndarray
    tile_id: str = ""
    resolution_m: float = 0.0

    def __post_init__(self):
        px = np.asarray(self.pixels)
        if px.ndim != 3 or px.shape[2] != 3:
            raise DataError(f"image tile must be HxWx3, got {px.shape}")
        h, w = px.shape[:2]
        if h <= 0 or w <= 0 or h % TILE_STRIDE or w % TILE_STRIDE:
            raise DataError(f"tile size {h}x{w} is not a positive multiple of {TILE_STRIDE}")
        if px.dtype != np.uint8:
            if px.min() < 0 or px.max() > 255:
                raise DataError("image values must lie in 0..255")
            px = px.astype(np.uint8)
        object.__setattr__(self, "pixels", px)

    @property
    def shape(self) -> tuple[int, int]:
        return self.pixels.shape[:2]


@dataclass(frozen=True)
class HistoricalMask:
    """Binary raster of building footprints at the earlier epoch (1 = building)."""

    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values)
        if v.ndim != 2:
            raise DataError(f"mask must be HxW, got shape {v.shape}")
        if not np.isin(v, (0, 1)).all():
            raise DataError("mask values must be 0 or 1")
        object.__setattr__(self, "values", v.astype(np.uint8))

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape


@dataclass(frozen=True)
class ChangeLabel:
    """Per-pixel change categories: 0 background, 1 unchanged, 2 new, 3 removed."""

    categories: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.categories)
        if c.ndim != 2:
            raise DataError(f"label must be HxW, got shape {c.shape}")
        if not np.isin(c, CATEGORIES).all():
            raise DataError("label values must be in {0,1,2,3}")
        object.__setattr__(self, "categories", c.astype(np.uint8))

    @property
    def shape(self) -> tuple[int, int]:
        return self.categories.shape


@dataclass(frozen=True)
class FeatureMap:
    """A C x h x w real-valued feature array at a fixed stride of the input grid."""

    values: object  # numpy array or torch tensor, (..., C, h, w)
    stride: int = FEATURE_STRIDE

    def __post_init__(self):
        if self.stride <= 0:
            raise DataError("feature stride must be positive")

    @property
    def spatial_shape(self) -> tuple[int, int]:
        return tuple(self.values.shape[-2:])


@dataclass(frozen=True)
class BuildingInstance:
    """One 4-connected building region of a category raster.

    ``bbox`` is the inclusive tight bound (row_min, col_min, row_max, col_max)
    of ``pixel_indices``.
    """

    pixel_indices: frozenset
    bbox: tuple[int, int, int, int]
    category: int
    instance_id: int

    def __post_init__(self):
        if not self.pixel_indices:
            raise DataError("instance pixel set must be non-empty")

    @property
    def area(self) -> int:
        return len(self.pixel_indices)

    def index_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Row and column index arrays for fancy-indexing rasters."""
        idx = np.array(sorted(self.pixel_indices), dtype=np.int64)
        return idx[:, 0], idx[:, 1]

    def feature_bbox(self, stride: int = FEATURE_STRIDE) -> tuple[int, int, int, int]:
        """Inclusive bbox in feature-grid coordinates; never smaller than 1x1."""
        r0, c0, r1, c1 = self.bbox
        return (r0 // stride, c0 // stride, r1 // stride, c1 // stride)


def all_ones(shape: tuple[int, ...]) -> np.ndarray:
    """The all-one matrix used by the mask-inversion identities."""
    return np.ones(shape, dtype=np.float64)
