"""
File Name: gray_image.py
Last Modified: 2026-10-17

Overview:
Grayscale image value type and the single quantization rule used across the
toolkit. Pixels stay real-valued through the numerical pipeline; quantize()
is the only place they are forced back to 8-bit integers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from scripts.utilities.config import PIXEL_MAX, PIXEL_MIN


@dataclass(frozen=True)
class GrayImage:
    """Immutable rows x cols grid of real intensities (nominal range 0-255)."""

    pixels: np.ndarray

    def __post_init__(self) -> None:
        array = np.array(self.pixels, dtype=np.float64, copy=True)

        if array.ndim != 2:
            raise ValueError(f"GrayImage needs a 2-D pixel grid. Received ndim={array.ndim}")

        if array.shape[0] < 1 or array.shape[1] < 1:
            raise ValueError(f"GrayImage needs at least one row and column. Received {array.shape}")

        if not np.isfinite(array).all():
            raise ValueError("non-finite pixel in image")

        array.setflags(write=False)
        object.__setattr__(self, "pixels", array)

    @classmethod
    def from_array(cls, values) -> GrayImage:
        return cls(np.asarray(values, dtype=np.float64))

    @property
    def rows(self) -> int:
        return int(self.pixels.shape[0])

    @property
    def cols(self) -> int:
        return int(self.pixels.shape[1])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_quantized(self) -> bool:
        pixels = self.pixels
        return bool(
            np.all(pixels == np.floor(pixels))
            and pixels.min() >= PIXEL_MIN
            and pixels.max() <= PIXEL_MAX
        )

    def to_uint8(self) -> np.ndarray:
        if not self.is_quantized():
            raise ValueError("image not quantized")
        return self.pixels.astype(np.uint8)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GrayImage):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.pixels, other.pixels))

    def __hash__(self) -> int:
        return hash((self.shape, self.pixels.tobytes()))


def round_half_away(values) -> np.ndarray:
    """Round to the nearest integer, ties away from zero."""
    array = np.asarray(values, dtype=np.float64)
    whole = np.trunc(array)
    return whole + np.sign(array) * (np.abs(array - whole) >= 0.5)


def quantize(img: GrayImage) -> GrayImage:
    """Round half away from zero, then clamp to [0, 255]."""
    rounded = round_half_away(img.pixels)
    return GrayImage(np.clip(rounded, PIXEL_MIN, PIXEL_MAX))


def quantize_array(values) -> GrayImage:
    """Wrap a raw real-valued array and quantize it in one step."""
    array = np.asarray(values, dtype=np.float64)

    if not np.isfinite(array).all():
        raise ValueError("non-finite pixel in image")

    return quantize(GrayImage(array))
