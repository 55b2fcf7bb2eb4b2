"""
File Name: apply_attacks.py
Last Modified: 2026-10-17

Overview:
Deterministic, seedable attacks used to stress extraction.

Each handler maps a real-valued pixel grid to a real-valued grid; the result
is quantized once at the end of apply_attack. Stochastic handlers draw from a
SeededRng built from the spec's own seed, so attacks share no state and can
run in parallel.

Photoshop rows (Pixelate 2, Contrast-20, Sharpen 80) are approximated by a
block mean, a linear contrast about 128 and an unsharp mask.
"""

from __future__ import annotations

import logging
import math
from typing import Callable

import numpy as np
from scipy import ndimage

from scripts.attacks.attack_spec import AttackSpec
from scripts.attacks.composite_attacks import rewatermark_attack
from scripts.attacks.seeded_rng import SeededRng
from scripts.imagecore.gray_image import GrayImage, quantize_array, round_half_away
from scripts.transforms.cosine import block_dct2, block_idct2
from scripts.utilities.config import JPEG_BLOCK_SIZE, PIXEL_MAX
from scripts.utilities.synthetic_images import make_watermark_image


logger = logging.getLogger(__name__)


# -----------------------------------------------------------------------------
# Constants
# -----------------------------------------------------------------------------

JPEG_LUMINANCE_TABLE = np.array(
    [
        [16, 11, 10, 16, 24, 40, 51, 61],
        [12, 12, 14, 19, 26, 58, 60, 55],
        [14, 13, 16, 24, 40, 57, 69, 56],
        [14, 17, 22, 29, 51, 87, 80, 62],
        [18, 22, 37, 56, 68, 109, 103, 77],
        [24, 35, 55, 64, 81, 104, 113, 92],
        [49, 64, 78, 87, 103, 121, 120, 101],
        [72, 92, 95, 98, 112, 100, 103, 99],
    ],
    dtype=np.float64,
)

JPEG_LEVEL_SHIFT = 128.0
CONTRAST_PIVOT = 128.0
SHARPEN_KERNEL_SIZE = 3
SHARPEN_SIGMA = 1.0


# -----------------------------------------------------------------------------
# Shared Helpers
# -----------------------------------------------------------------------------

def gaussian_kernel(size: int, sigma: float) -> np.ndarray:
    """size x size sampled Gaussian normalised to sum 1."""
    offsets = np.arange(size, dtype=np.float64) - (size - 1) / 2.0
    profile = np.exp(-(offsets ** 2) / (2.0 * sigma ** 2))
    kernel = np.outer(profile, profile)
    return kernel / kernel.sum()


def jpeg_quantization_table(quality: int) -> np.ndarray:
    scale = 5000.0 / quality if quality < 50 else 200.0 - 2.0 * quality
    return np.clip(np.floor((JPEG_LUMINANCE_TABLE * scale + 50.0) / 100.0), 1, 255)


def resample_bilinear(pixels: np.ndarray, shape: tuple[int, int]) -> np.ndarray:
    """Bilinear resize with pixel-centre alignment and edge clamping."""
    rows, cols = pixels.shape
    out_rows, out_cols = shape

    row_coords = (np.arange(out_rows) + 0.5) * (rows / out_rows) - 0.5
    col_coords = (np.arange(out_cols) + 0.5) * (cols / out_cols) - 0.5
    grid = np.meshgrid(row_coords, col_coords, indexing="ij")

    return ndimage.map_coordinates(pixels, grid, order=1, mode="nearest")


def _block_sizes(length: int, block: int) -> np.ndarray:
    starts = np.arange(0, length, block)
    return np.diff(np.append(starts, length))


# -----------------------------------------------------------------------------
# Filtering and Compression
# -----------------------------------------------------------------------------

def _gaussian_blur(pixels: np.ndarray, spec: AttackSpec) -> np.ndarray:
    return ndimage.convolve(pixels, gaussian_kernel(spec["k"], spec["sigma"]), mode="nearest")


def _sharpen(pixels: np.ndarray, spec: AttackSpec) -> np.ndarray:
    blurred = ndimage.convolve(pixels, gaussian_kernel(SHARPEN_KERNEL_SIZE, SHARPEN_SIGMA), mode="nearest")
    return pixels + spec["s"] * (pixels - blurred)


def _jpeg_like(pixels: np.ndarray, spec: AttackSpec) -> np.ndarray:
    rows, cols = pixels.shape
    block = JPEG_BLOCK_SIZE
    pad_rows = -rows % block
    pad_cols = -cols % block

    padded = np.pad(pixels, ((0, pad_rows), (0, pad_cols)), mode="edge") - JPEG_LEVEL_SHIFT
    table = np.tile(jpeg_quantization_table(spec["q"]), (padded.shape[0] // block, padded.shape[1] // block))

    coefficients = block_dct2(padded, block)
    dequantized = round_half_away(coefficients / table) * table
    restored = block_idct2(dequantized, block) + JPEG_LEVEL_SHIFT

    return restored[:rows, :cols]


def _pixelate(pixels: np.ndarray, spec: AttackSpec) -> np.ndarray:
    block = spec["b"]
    row_sizes = _block_sizes(pixels.shape[0], block)
    col_sizes = _block_sizes(pixels.shape[1], block)

    sums = np.add.reduceat(pixels, np.arange(0, pixels.shape[0], block), axis=0)
    sums = np.add.reduceat(sums, np.arange(0, pixels.shape[1], block), axis=1)
    means = sums / np.outer(row_sizes, col_sizes)

    return np.repeat(np.repeat(means, row_sizes, axis=0), col_sizes, axis=1)


# -----------------------------------------------------------------------------
# Noise
# -----------------------------------------------------------------------------

def _gaussian_noise(pixels: np.ndarray, spec: AttackSpec) -> np.ndarray:
    if spec["var"] == 0:
        return pixels

    sigma = PIXEL_MAX * math.sqrt(spec["var"])
    noise = SeededRng(spec.seed).normals(pixels.size).reshape(pixels.shape)
    return pixels + sigma * noise


def _salt_pepper(pixels: np.ndarray, spec: AttackSpec) -> np.ndarray:
    density = spec["d"]
    draws = SeededRng(spec.seed).uniforms(pixels.size).reshape(pixels.shape)

    out = pixels.copy()
    out[draws < density / 2.0] = 0.0
    out[(draws >= density / 2.0) & (draws < density)] = PIXEL_MAX
    return out


def _speckle(pixels: np.ndarray, spec: AttackSpec) -> np.ndarray:
    half_width = math.sqrt(3.0 * spec["v"])
    draws = SeededRng(spec.seed).uniforms(pixels.size).reshape(pixels.shape)
    return pixels * (1.0 + (2.0 * draws - 1.0) * half_width)


def _poisson(pixels: np.ndarray, spec: AttackSpec) -> np.ndarray:
    return SeededRng(spec.seed).poisson_field(pixels).astype(np.float64)


# -----------------------------------------------------------------------------
# Geometry
# -----------------------------------------------------------------------------

def _rotate(pixels: np.ndarray, spec: AttackSpec) -> np.ndarray:
    return ndimage.rotate(pixels, spec["theta"], reshape=False, order=1, mode="constant", cval=0.0)


def _crop(pixels: np.ndarray, spec: AttackSpec) -> np.ndarray:
    rows, cols = pixels.shape
    scale = math.sqrt(spec["f"])
    keep_rows = max(1, int(round_half_away(rows * scale)))
    keep_cols = max(1, int(round_half_away(cols * scale)))
    top = (rows - keep_rows) // 2
    left = (cols - keep_cols) // 2

    out = np.zeros_like(pixels)
    out[top:top + keep_rows, left:left + keep_cols] = pixels[top:top + keep_rows, left:left + keep_cols]
    return out


def _resize_cycle(pixels: np.ndarray, spec: AttackSpec) -> np.ndarray:
    side = spec["s"]
    reduced = resample_bilinear(pixels, (side, side))
    return resample_bilinear(reduced, pixels.shape)


# -----------------------------------------------------------------------------
# Tone
# -----------------------------------------------------------------------------

def _hist_eq(pixels: np.ndarray, spec: AttackSpec) -> np.ndarray:
    levels = pixels.astype(np.intp)
    cdf = np.cumsum(np.bincount(levels.ravel(), minlength=PIXEL_MAX + 1))
    lookup = round_half_away(PIXEL_MAX * cdf / levels.size)
    return lookup[levels]


def _gamma(pixels: np.ndarray, spec: AttackSpec) -> np.ndarray:
    return PIXEL_MAX * (pixels / PIXEL_MAX) ** spec["g"]


def _contrast(pixels: np.ndarray, spec: AttackSpec) -> np.ndarray:
    return (pixels - CONTRAST_PIVOT) * spec["k"] + CONTRAST_PIVOT


def _intensity_adjust(pixels: np.ndarray, spec: AttackSpec) -> np.ndarray:
    lo_in, hi_in = spec["lo_in"], spec["hi_in"]
    lo_out, hi_out = spec["lo_out"], spec["hi_out"]

    normalized = np.clip(pixels / PIXEL_MAX, lo_in, hi_in)
    remapped = lo_out + (normalized - lo_in) * (hi_out - lo_out) / (hi_in - lo_in)
    return PIXEL_MAX * remapped


# -----------------------------------------------------------------------------
# Pipeline Attacks
# -----------------------------------------------------------------------------

def _rewatermark(pixels: np.ndarray, spec: AttackSpec) -> np.ndarray:
    image = GrayImage(pixels)
    second_wm = make_watermark_image(image.rows // 2, spec.seed)
    return rewatermark_attack(image, second_wm, spec["alpha"]).pixels


def _collusion(pixels: np.ndarray, spec: AttackSpec) -> np.ndarray:
    raise ValueError(
        "collusion needs several watermarked copies; use collusion_attack or a bench config"
    )


ATTACK_HANDLERS: dict[str, Callable[[np.ndarray, AttackSpec], np.ndarray]] = {
    "none": lambda pixels, spec: pixels,
    "gaussian_blur": _gaussian_blur,
    "jpeg_like": _jpeg_like,
    "gaussian_noise": _gaussian_noise,
    "salt_pepper": _salt_pepper,
    "speckle": _speckle,
    "poisson": _poisson,
    "rotate": _rotate,
    "crop": _crop,
    "resize_cycle": _resize_cycle,
    "hist_eq": _hist_eq,
    "gamma": _gamma,
    "contrast": _contrast,
    "sharpen": _sharpen,
    "pixelate": _pixelate,
    "intensity_adjust": _intensity_adjust,
    "rewatermark": _rewatermark,
    "collusion": _collusion,
}


def apply_attack(img: GrayImage, spec: AttackSpec) -> GrayImage:
    """Run one attack; the input must be quantized and so is the output."""
    if not img.is_quantized():
        raise ValueError("image not quantized: attacks operate on 8-bit images")

    handler = ATTACK_HANDLERS[spec.kind]
    attacked = handler(np.array(img.pixels), spec)

    logger.debug("Applied %s %s to %sx%s image", spec.kind, spec.params, img.rows, img.cols)
    return quantize_array(attacked)
