"""
File Name: synthetic_images.py
Last Modified: 2026-10-17

Overview:
Deterministic stand-ins for natural host images and logo watermarks, so tests,
bench rows and the generate verb never depend on external image files.

Inputs:
- side length and seed

Outputs:
- quantized GrayImage values

Notes:
- Hosts are a smooth scene (tilted gradient, soft discs, low-frequency waves)
  with fine grain, kept inside [16, 239] so embedding never clamps.
- Watermarks are a blurred ring, bar and square logo with coarser grain.
"""

from __future__ import annotations

import numpy as np
from scipy import ndimage

from scripts.attacks.seeded_rng import SeededRng
from scripts.imagecore.gray_image import GrayImage, quantize_array


HOST_FLOOR = 16.0
HOST_CEILING = 239.0
HOST_GRAIN_SIGMA = 1.8
HOST_DISC_COUNT = 3

WATERMARK_BACKGROUND = 40.0
WATERMARK_FOREGROUND = 215.0
WATERMARK_GRAIN_SIGMA = 12.0


def _validate_side(side: int) -> int:
    if int(side) != side or side < 2:
        raise ValueError(f"side out of domain: expected an integer >= 2, got {side!r}")
    return int(side)


def _unit_grid(side: int) -> tuple[np.ndarray, np.ndarray]:
    coords = (np.arange(side, dtype=np.float64) + 0.5) / side
    return np.meshgrid(coords, coords, indexing="ij")


def make_host_image(side: int, seed: int) -> GrayImage:
    side = _validate_side(side)
    rng = SeededRng(seed)
    y, x = _unit_grid(side)

    layout = rng.uniforms(4 + 3 * HOST_DISC_COUNT)
    phase_y, phase_x, tilt, wave_gain = layout[:4]

    scene = 128.0 + 36.0 * (tilt - 0.5) * (x - y)
    scene += 18.0 * (0.6 + 0.4 * wave_gain) * np.sin(2 * np.pi * (1.5 * y + phase_y)) * np.cos(2 * np.pi * (x + phase_x))

    for index in range(HOST_DISC_COUNT):
        cy, cx, radius = layout[4 + 3 * index:7 + 3 * index]
        radius = 0.08 + 0.12 * radius
        distance = np.hypot(y - (0.2 + 0.6 * cy), x - (0.2 + 0.6 * cx))
        edge = 1.0 / (1.0 + np.exp((distance - radius) * side / 4.0))
        scene += (30.0 if index % 2 == 0 else -30.0) * edge

    grain = HOST_GRAIN_SIGMA * rng.normals(side * side).reshape(side, side)
    return quantize_array(np.clip(scene + grain, HOST_FLOOR, HOST_CEILING))


def make_watermark_image(side: int, seed: int) -> GrayImage:
    side = _validate_side(side)
    rng = SeededRng(seed)
    y, x = _unit_grid(side)

    shift_y, shift_x = 0.1 * (rng.uniforms(2) - 0.5)
    cy = y - 0.5 - shift_y
    cx = x - 0.5 - shift_x
    radius = np.hypot(cy, cx)

    ring = (radius > 0.28) & (radius < 0.38)
    bar = (np.abs(cy) < 0.06) & (np.abs(cx) < 0.3)
    square = (np.abs(cy + 0.12) < 0.08) & (np.abs(cx - 0.12) < 0.08)
    logo = np.where(ring | bar | square, WATERMARK_FOREGROUND, WATERMARK_BACKGROUND)

    logo = ndimage.gaussian_filter(logo, sigma=max(side / 64.0, 0.5), mode="nearest")
    grain = WATERMARK_GRAIN_SIGMA * rng.normals(side * side).reshape(side, side)
    return quantize_array(logo + grain)
