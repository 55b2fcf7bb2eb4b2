"""
File Name: score_fidelity.py
Last Modified: 2026-10-17

Overview:
Imperceptibility and robustness scores.

- mse / psnr: distortion between a reference and a test image (8-bit peak)
- nc: asymmetric normalized correlation sum(w * w') / sum(w * w), exactly as
  used by the robustness tables; nc(w, 2w) == 2
- ncc: symmetric normalized cross-correlation, bounded by 1 in magnitude

All functions accept GrayImage or plain 2-D arrays.
"""

from __future__ import annotations

import math

import numpy as np

from scripts.imagecore.gray_image import GrayImage
from scripts.utilities.config import PIXEL_MAX


def _as_pair(a, b) -> tuple[np.ndarray, np.ndarray]:
    left = a.pixels if isinstance(a, GrayImage) else np.asarray(a, dtype=np.float64)
    right = b.pixels if isinstance(b, GrayImage) else np.asarray(b, dtype=np.float64)

    if left.shape != right.shape:
        raise ValueError(f"dimension mismatch: {left.shape} vs {right.shape}")

    return left.astype(np.float64, copy=False), right.astype(np.float64, copy=False)


def mse(a, b) -> float:
    left, right = _as_pair(a, b)
    return float(np.mean((left - right) ** 2))


def psnr(a, b) -> float:
    """Peak signal-to-noise ratio in dB; inf for identical inputs."""
    error = mse(a, b)

    if error == 0.0:
        return math.inf

    return float(10.0 * math.log10(PIXEL_MAX ** 2 / error))


def nc(w, w_prime) -> float:
    reference, test = _as_pair(w, w_prime)
    energy = float(np.sum(reference * reference))

    if energy == 0.0:
        raise ValueError("undefined NC: reference watermark has zero energy")

    return float(np.sum(reference * test)) / energy


def ncc(w, w_prime) -> float:
    reference, test = _as_pair(w, w_prime)
    norm = float(np.linalg.norm(reference) * np.linalg.norm(test))

    if norm == 0.0:
        raise ValueError("undefined NCC: zero-energy input")

    return float(np.sum(reference * test)) / norm
