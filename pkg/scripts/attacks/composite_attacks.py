"""
File Name: composite_attacks.py
Last Modified: 2026-10-17

Overview:
Attacks that go through the watermarking pipeline itself.

- rewatermark_attack: embed a second watermark on top of the first
- collusion_attack: pixelwise mean of several watermarked copies
- build_collusion_copies: the copies a colluder would hold, i.e. the first
  watermarked image plus the host marked with seed-derived watermarks
"""

from __future__ import annotations

import numpy as np

from scripts.imagecore.gray_image import GrayImage, quantize_array
from scripts.utilities.synthetic_images import make_watermark_image
from scripts.watermark.embed_watermark import embed


def rewatermark_attack(watermarked: GrayImage, second_wm: GrayImage, alpha: float) -> GrayImage:
    """Embed second_wm into an already-marked image; the new key is discarded."""
    if second_wm.rows * 2 != watermarked.rows or second_wm.cols * 2 != watermarked.cols:
        raise ValueError(
            f"dimension mismatch: second watermark {second_wm.rows}x{second_wm.cols} "
            f"does not fit a {watermarked.rows}x{watermarked.cols} image"
        )

    remarked, _ = embed(watermarked, second_wm, alpha)
    return remarked


def collusion_attack(copies) -> GrayImage:
    copies = list(copies)

    if len(copies) < 2:
        raise ValueError(f"collusion needs at least 2 copies. Received {len(copies)}")

    shapes = {copy.shape for copy in copies}
    if len(shapes) != 1:
        raise ValueError(f"dimension mismatch among collusion copies: {sorted(shapes)}")

    mean = np.mean(np.stack([copy.pixels for copy in copies]), axis=0)
    return quantize_array(mean)


def build_collusion_copies(
    host: GrayImage,
    watermarked: GrayImage,
    copies: int,
    alpha: float,
    seed: int,
) -> list[GrayImage]:
    side = host.rows // 2
    extra = [
        embed(host, make_watermark_image(side, seed + offset), alpha)[0]
        for offset in range(1, copies)
    ]
    return [watermarked, *extra]
