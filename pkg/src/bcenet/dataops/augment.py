"""Seeded geometric and photometric augmentation of samples.

Geometry (flips, quarter-turn rotations, scale jitter) is applied identically
to image, mask, and label; masks and labels are resampled nearest-neighbor so
categories survive. Photometric jitter touches the image only.
"""
from __future__ import annotations

import numpy as np
from PIL import Image

from ..core import ChangeLabel, HistoricalMask, ImageTile
from .convert import Sample

SCALE_RANGE = (0.8, 1.2)
P_HFLIP = 0.5
P_VFLIP = 0.5
P_SCALE = 0.5
P_PHOTOMETRIC = 0.8
BRIGHTNESS_RANGE = (0.8, 1.2)
CONTRAST_RANGE = (0.8, 1.2)


def rotate90(arr: np.ndarray, quarter_turns: int) -> np.ndarray:
    """Clockwise quarter turns: one turn maps pixel (r, c) to (c, H-1-r)."""
    return np.rot90(arr, k=-quarter_turns % 4, axes=(0, 1))


def _resize(arr: np.ndarray, hw: tuple[int, int], nearest: bool) -> np.ndarray:
    resample = Image.NEAREST if nearest else Image.BILINEAR
    img = Image.fromarray(arr)
    out = img.resize((hw[1], hw[0]), resample=resample)
    return np.asarray(out)


def _crop_or_pad(arr: np.ndarray, hw: tuple[int, int]) -> np.ndarray:
    """Center crop or zero-pad back to the target size."""
    h, w = arr.shape[:2]
    th, tw = hw
    if h > th:
        top = (h - th) // 2
        arr = arr[top : top + th]
    if w > tw:
        left = (w - tw) // 2
        arr = arr[:, left : left + tw]
    h, w = arr.shape[:2]
    if h < th or w < tw:
        pad = [((th - h) // 2, th - h - (th - h) // 2), ((tw - w) // 2, tw - w - (tw - w) // 2)]
        if arr.ndim == 3:
            pad.append((0, 0))
        arr = np.pad(arr, pad, mode="constant")
    return arr


def _scale_jitter(img: np.ndarray, mask: np.ndarray, label: np.ndarray, scale: float):
    hw = img.shape[:2]
    new_hw = (max(1, round(hw[0] * scale)), max(1, round(hw[1] * scale)))
    img = _crop_or_pad(_resize(img, new_hw, nearest=False), hw)
    mask = _crop_or_pad(_resize(mask, new_hw, nearest=True), hw)
    label = _crop_or_pad(_resize(label, new_hw, nearest=True), hw)
    return img, mask, label


def _photometric(img: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    out = img.astype(np.float64)
    out = out * rng.uniform(*BRIGHTNESS_RANGE)
    mean = out.mean(axis=(0, 1), keepdims=True)
    out = (out - mean) * rng.uniform(*CONTRAST_RANGE) + mean
    return np.clip(np.round(out), 0, 255).astype(np.uint8)


def augment(sample: Sample, seed: int) -> Sample:
    """One seeded draw of flips, rotation, scale jitter, and color jitter."""
    rng = np.random.default_rng(seed)
    img = sample.image.pixels
    mask = sample.mask.values
    label = sample.label.categories

    if rng.random() < P_HFLIP:
        img, mask, label = img[:, ::-1], mask[:, ::-1], label[:, ::-1]
    if rng.random() < P_VFLIP:
        img, mask, label = img[::-1], mask[::-1], label[::-1]
    turns = int(rng.integers(0, 4))
    img, mask, label = (rotate90(a, turns) for a in (img, mask, label))
    if rng.random() < P_SCALE:
        img, mask, label = _scale_jitter(img, mask, label, rng.uniform(*SCALE_RANGE))
    if rng.random() < P_PHOTOMETRIC:
        img = _photometric(img, rng)

    return Sample(
        image=ImageTile(
            pixels=np.ascontiguousarray(img),
            tile_id=sample.image.tile_id,
            resolution_m=sample.image.resolution_m,
        ),
        mask=HistoricalMask(values=np.ascontiguousarray(mask)),
        label=ChangeLabel(categories=np.ascontiguousarray(label)),
    )
