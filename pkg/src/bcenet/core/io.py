"""PNG serialization of tiles, masks, and labels.

Conventions: 3-channel 8-bit PNG for images, single-channel 8-bit PNG with raw
category values for masks ({0,1}) and labels ({0,1,2,3}). A tile is stored as
three files named <tile_id>_img.png, <tile_id>_mask.png, <tile_id>_label.png.
"""
from __future__ import annotations

from pathlib import Path

import numpy as np
from PIL import Image

from ..errors import DataError
from .types import ChangeLabel, HistoricalMask, ImageTile

IMG_SUFFIX = "_img.png"
MASK_SUFFIX = "_mask.png"
LABEL_SUFFIX = "_label.png"


def tile_paths(directory: Path, tile_id: str) -> tuple[Path, Path, Path]:
    d = Path(directory)
    return (d / f"{tile_id}{IMG_SUFFIX}", d / f"{tile_id}{MASK_SUFFIX}", d / f"{tile_id}{LABEL_SUFFIX}")


def write_image(path: Path, tile: ImageTile) -> None:
    Image.fromarray(tile.pixels, mode="RGB").save(path)


def write_raster(path: Path, values: np.ndarray) -> None:
    Image.fromarray(np.asarray(values, dtype=np.uint8), mode="L").save(path)


def read_image(path: Path, tile_id: str = "", resolution_m: float = 0.0) -> ImageTile:
    arr = _read_array(path)
    if arr.ndim != 3 or arr.shape[2] != 3:
        raise DataError(f"{path}: expected a 3-channel image, got shape {arr.shape}")
    return ImageTile(pixels=arr, tile_id=tile_id, resolution_m=resolution_m)


def read_mask(path: Path) -> HistoricalMask:
    return HistoricalMask(values=_read_single_channel(path))


def read_label(path: Path) -> ChangeLabel:
    return ChangeLabel(categories=_read_single_channel(path))


def _read_array(path: Path) -> np.ndarray:
    p = Path(path)
    if not p.exists():
        raise DataError(f"missing file: {p}")
    return np.asarray(Image.open(p))


def _read_single_channel(path: Path) -> np.ndarray:
    arr = _read_array(path)
    if arr.ndim != 2:
        raise DataError(f"{path}: expected a single-channel raster, got shape {arr.shape}")
    return arr
