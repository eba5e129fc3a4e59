"""Bi-temporal to single-temporal conversion and supervision-target derivation."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..core import (
    NEW,
    REMOVED,
    UNCHANGED,
    ChangeLabel,
    HistoricalMask,
    ImageTile,
    extract_instances,
)
from ..errors import DataError

# A change component "belongs" to the historical mask when more than half of
# its pixels overlap it.
MEMBERSHIP_OVERLAP = 0.5


@dataclass(frozen=True)
class Sample:
    """One training/inference unit: image, historical mask, and change label."""

    image: ImageTile
    mask: HistoricalMask
    label: ChangeLabel

    def __post_init__(self):
        if not (self.image.shape == self.mask.shape == self.label.shape):
            raise DataError(
                f"sample rasters disagree: image {self.image.shape}, "
                f"mask {self.mask.shape}, label {self.label.shape}"
            )
        derived = mask_plane(self.label)
        if not (derived == self.mask.values).all():
            raise DataError("historical mask does not match the label's unchanged+removed plane")

    @property
    def tile_id(self) -> str:
        return self.image.tile_id


def derive_targets(label: ChangeLabel) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Binary supervision planes (L_N, L_R, L_E, M) from a change label.

    New = category 2, removed = category 3, existing = unchanged or new,
    historical = unchanged or removed.
    """
    cat = label.categories if isinstance(label, ChangeLabel) else np.asarray(label)
    l_n = (cat == NEW).astype(np.uint8)
    l_r = (cat == REMOVED).astype(np.uint8)
    l_e = ((cat == UNCHANGED) | (cat == NEW)).astype(np.uint8)
    m = ((cat == UNCHANGED) | (cat == REMOVED)).astype(np.uint8)
    return l_n, l_r, l_e, m


def mask_plane(label: ChangeLabel) -> np.ndarray:
    """The historical-mask plane of a label (unchanged or removed pixels)."""
    return derive_targets(label)[3]


def label_from_planes(l_n: np.ndarray, l_r: np.ndarray, unchanged: np.ndarray) -> ChangeLabel:
    """Assemble a category raster from disjoint binary planes."""
    cat = np.zeros(l_n.shape, dtype=np.uint8)
    cat[unchanged == 1] = UNCHANGED
    cat[l_n == 1] = NEW
    cat[l_r == 1] = REMOVED
    return ChangeLabel(categories=cat)


def convert_bitemporal(
    image_t2: ImageTile, mask_t1: HistoricalMask, change_mask: np.ndarray
) -> Sample:
    """Build a single-temporal sample from the later image, the earlier mask,
    and a binary change raster.

    Every pixel under the historical mask starts as unchanged. Each 4-connected
    change component is relabeled removed when more than half of its pixels lie
    on the historical mask, and newly constructed otherwise.
    """
    change = np.asarray(change_mask)
    if change.shape != mask_t1.shape or image_t2.shape != mask_t1.shape:
        raise DataError(
            f"shape mismatch: image {image_t2.shape}, mask {mask_t1.shape}, change {change.shape}"
        )
    if not np.isin(change, (0, 1)).all():
        raise DataError("change mask must be binary")

    cat = np.where(mask_t1.values == 1, UNCHANGED, 0).astype(np.uint8)
    for comp in extract_instances(change.astype(np.uint8), 1):
        rows, cols = comp.index_arrays()
        overlap = mask_t1.values[rows, cols].sum() / comp.area
        cat[rows, cols] = REMOVED if overlap > MEMBERSHIP_OVERLAP else NEW

    # a component ruled "new" may spill over historical pixels; those pixels
    # leave the mask's unchanged plane, so rebuild the mask-consistent label
    label = ChangeLabel(categories=cat)
    mask = HistoricalMask(values=mask_plane(label))
    return Sample(image=image_t2, mask=mask, label=label)
