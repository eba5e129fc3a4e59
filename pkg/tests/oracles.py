"""Independent brute-force oracles used by the test suite.

These are deliberately naive implementations written before the package code
they check; keep them free of bcenet imports so they cannot share bugs with
the code under test.
"""
from __future__ import annotations

import math

import numpy as np


def flood_fill_components(binary: np.ndarray) -> list[set[tuple[int, int]]]:
    """4-connected components of a boolean raster via explicit flood fill."""
    binary = np.asarray(binary, dtype=bool)
    h, w = binary.shape
    seen = np.zeros_like(binary, dtype=bool)
    comps = []
    for r in range(h):
        for c in range(w):
            if not binary[r, c] or seen[r, c]:
                continue
            stack = [(r, c)]
            seen[r, c] = True
            comp = set()
            while stack:
                y, x = stack.pop()
                comp.add((y, x))
                for ny, nx in ((y - 1, x), (y + 1, x), (y, x - 1), (y, x + 1)):
                    if 0 <= ny < h and 0 <= nx < w and binary[ny, nx] and not seen[ny, nx]:
                        seen[ny, nx] = True
                        stack.append((ny, nx))
            comps.append(comp)
    return comps


def confusion_counts(pred: np.ndarray, truth: np.ndarray) -> tuple[int, int, int]:
    """(TP, FP, FN) of two boolean rasters counted pixel by pixel."""
    tp = fp = fn = 0
    pred = np.asarray(pred, dtype=bool)
    truth = np.asarray(truth, dtype=bool)
    for r in range(pred.shape[0]):
        for c in range(pred.shape[1]):
            if pred[r, c] and truth[r, c]:
                tp += 1
            elif pred[r, c] and not truth[r, c]:
                fp += 1
            elif not pred[r, c] and truth[r, c]:
                fn += 1
    return tp, fp, fn


def metrics_from_counts(tp: int, fp: int, fn: int) -> tuple[float, float, float, float]:
    """(precision, recall, f1, iou) with the empty-versus-empty convention = 1."""
    if tp + fp + fn == 0:
        return 1.0, 1.0, 1.0, 1.0
    precision = tp / (tp + fp) if tp + fp > 0 else 0.0
    recall = tp / (tp + fn) if tp + fn > 0 else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall > 0 else 0.0
    iou = tp / (tp + fp + fn)
    return precision, recall, f1, iou


def bce_scalar(p: list[float], l: list[int], eps: float = 1e-7) -> float:
    """Mean binary cross-entropy computed with math.log, element by element."""
    total = 0.0
    for pi, li in zip(p, l):
        pi = min(max(pi, eps), 1.0 - eps)
        total += -(li * math.log(pi) + (1 - li) * math.log(1.0 - pi))
    return total / len(p)


def dice_scalar(p: list[float], l: list[int], eps: float = 1.0) -> float:
    inter = sum(pi * li for pi, li in zip(p, l))
    return 1.0 - (2.0 * inter + eps) / (sum(p) + sum(l) + eps)


def cosine_scalar(a: list[float], b: list[float]) -> float:
    na = math.sqrt(sum(x * x for x in a))
    nb = math.sqrt(sum(x * x for x in b))
    if na == 0.0 or nb == 0.0:
        return 0.0
    return sum(x * y for x, y in zip(a, b)) / (na * nb)


def finite_difference_gradient(fn, x: np.ndarray, eps: float = 1e-6) -> np.ndarray:
    """Central finite differences of a scalar function at x (float64)."""
    x = np.asarray(x, dtype=np.float64)
    grad = np.zeros_like(x)
    flat = x.reshape(-1)
    gflat = grad.reshape(-1)
    for i in range(flat.size):
        orig = flat[i]
        flat[i] = orig + eps
        hi = fn(x)
        flat[i] = orig - eps
        lo = fn(x)
        flat[i] = orig
        gflat[i] = (hi - lo) / (2.0 * eps)
    return grad


def gradient_rel_error(analytic: np.ndarray, numeric: np.ndarray) -> float:
    """Max abs deviation normalized by the numeric gradient's scale."""
    analytic = np.asarray(analytic, dtype=np.float64)
    numeric = np.asarray(numeric, dtype=np.float64)
    scale = max(float(np.abs(numeric).max()), 1e-12)
    return float(np.abs(analytic - numeric).max()) / scale
