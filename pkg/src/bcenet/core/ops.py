"""Mask algebra and connected-component instance extraction.

The mask/feature operations work on plain numpy arrays and on torch tensors
alike (the model calls them on tensors so gradients flow through); rasters of
domain types can be passed via their array fields.
"""
from __future__ import annotations

import numpy as np
from scipy import ndimage
from scipy.special import expit

from ..errors import DataError
from .types import BuildingInstance, ChangeLabel, FeatureMap, HistoricalMask

PROB_EPS = 1e-7  # probabilities are clamped to [PROB_EPS, 1-PROB_EPS] before any log

FOUR_CONNECTED = np.array([[0, 1, 0], [1, 1, 1], [0, 1, 0]], dtype=np.uint8)


def _is_torch(x) -> bool:
    return type(x).__module__.split(".")[0] == "torch"


def sigmoid(x):
    """Logistic function for numpy arrays or torch tensors."""
    if _is_torch(x):
        import torch

        return torch.sigmoid(x)
    return expit(np.asarray(x, dtype=np.float64))


def clamp_probs(p, eps: float = PROB_EPS):
    """Clamp probabilities into [eps, 1-eps] for numerically safe logarithms."""
    if _is_torch(p):
        return p.clamp(eps, 1.0 - eps)
    return np.clip(p, eps, 1.0 - eps)


def invert_mask(mask):
    """Complement of a binary mask: the all-one matrix minus the mask."""
    m = mask.values if isinstance(mask, HistoricalMask) else mask
    return 1 - m


def downsample_mask(mask, factor: int):
    """Nearest-neighbor downsample of a raster by an integer factor.

    Samples the top-left pixel of each factor x factor cell, which keeps binary
    masks binary. Works on numpy arrays and torch tensors.
    """
    m = mask.values if isinstance(mask, HistoricalMask) else mask
    h, w = m.shape[-2:]
    if factor < 1 or h % factor or w % factor:
        raise DataError(f"cannot downsample {h}x{w} raster by factor {factor}")
    return m[..., ::factor, ::factor]


def _align_mask(feat, mask):
    """Broadcast-ready mask at the feature grid; hard error on bad shapes."""
    m = mask.values if isinstance(mask, HistoricalMask) else mask
    fh, fw = feat.shape[-2:]
    mh, mw = m.shape[-2:]
    if (mh, mw) != (fh, fw):
        if mh % fh or mw % fw or mh // fh != mw // fw:
            raise DataError(
                f"mask {mh}x{mw} does not align with feature grid {fh}x{fw}"
            )
        m = downsample_mask(m, mh // fh)
    if _is_torch(feat):
        import torch

        if not isinstance(m, torch.Tensor):
            m = torch.as_tensor(np.asarray(m))
        m = m.to(dtype=feat.dtype, device=feat.device)
    # insert channel axis so (..., h, w) masks broadcast over (..., C, h, w)
    if m.ndim == feat.ndim - 1:
        m = m[..., None, :, :]
    return m


def split_background(feat, mask):
    """Background features: zero everywhere the historical mask is set.

    The mask is nearest-neighbor downsampled to the feature grid when needed,
    then applied as a per-location product broadcast over channels.
    """
    f = feat.values if isinstance(feat, FeatureMap) else feat
    m = _align_mask(f, mask)
    return (1 - m) * f


def split_foreground(feat, mask):
    """Foreground features: sigmoid-normalized, reversed, and masked to footprints.

    Output values lie in [0, 1] inside the mask and are exactly 0 outside it.
    """
    f = feat.values if isinstance(feat, FeatureMap) else feat
    m = _align_mask(f, mask)
    return m * (1 - sigmoid(f))


def extract_instances(label, category: int) -> list[BuildingInstance]:
    """4-connected components of (label == category) with tight bounding boxes.

    Accepts a ChangeLabel, a HistoricalMask (use category=1), or a raw integer
    raster. Instances are ordered by (row_min, col_min) of their bbox and get
    sequential ids from 0. Returns an empty list when the category is absent.
    """
    if isinstance(label, ChangeLabel):
        raster = label.categories
    elif isinstance(label, HistoricalMask):
        raster = label.values
    else:
        raster = np.asarray(label)
    if category not in (1, 2, 3):
        raise DataError(f"category must be 1, 2, or 3, got {category}")
    binary = raster == category
    labeled, count = ndimage.label(binary, structure=FOUR_CONNECTED)
    found = []
    for lab in range(1, count + 1):
        rows, cols = np.nonzero(labeled == lab)
        bbox = (int(rows.min()), int(cols.min()), int(rows.max()), int(cols.max()))
        first = int(rows[0]) * raster.shape[1] + int(cols[0])
        pixels = frozenset(zip(rows.tolist(), cols.tolist()))
        found.append((bbox, first, pixels))
    found.sort(key=lambda t: (t[0][0], t[0][1], t[1]))
    return [
        BuildingInstance(pixel_indices=pixels, bbox=bbox, category=category, instance_id=i)
        for i, (bbox, _, pixels) in enumerate(found)
    ]
