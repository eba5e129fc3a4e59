from .types import (
    BACKGROUND,
    CATEGORIES,
    FEATURE_STRIDE,
    NEW,
    REMOVED,
    TILE_STRIDE,
    UNCHANGED,
    BuildingInstance,
    ChangeLabel,
    FeatureMap,
    HistoricalMask,
    ImageTile,
    all_ones,
)
from .ops import (
    PROB_EPS,
    clamp_probs,
    downsample_mask,
    extract_instances,
    invert_mask,
    sigmoid,
    split_background,
    split_foreground,
)

__all__ = [
    "BACKGROUND",
    "CATEGORIES",
    "FEATURE_STRIDE",
    "NEW",
    "REMOVED",
    "TILE_STRIDE",
    "UNCHANGED",
    "BuildingInstance",
    "ChangeLabel",
    "FeatureMap",
    "HistoricalMask",
    "ImageTile",
    "all_ones",
    "PROB_EPS",
    "clamp_probs",
    "downsample_mask",
    "extract_instances",
    "invert_mask",
    "sigmoid",
    "split_background",
    "split_foreground",
]
