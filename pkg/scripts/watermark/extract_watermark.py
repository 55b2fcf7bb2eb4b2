"""
File Name: extract_watermark.py
Last Modified: 2026-10-17

Purpose:
    Recover one watermark estimate per zigzag quadrant from a (possibly
    attacked) watermarked image and its key.

    For quadrant i: S_w,i = (S_ii' - S_i) / alpha, rebuilt with the stored
    watermark bases, inverse DCT, then inverse DWT with the stored watermark
    LL, HL and LH bands. Negative estimates are kept; candidates stay
    real-valued so NC is computed before any clamping.

Inputs:
    - watermarked GrayImage (side == key.host_side)
    - WatermarkKey

Outputs:
    - ExtractionResult with four candidates, labelled 1..4
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from scripts.imagecore.gray_image import GrayImage
from scripts.metrics.score_fidelity import nc
from scripts.transforms.cosine import idct2
from scripts.transforms.singular import svd_reconstruct
from scripts.transforms.wavelet import SubbandSet, dwt2, idwt2
from scripts.watermark.embed_watermark import decompose_quadrants
from scripts.watermark.watermark_key import WatermarkKey


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExtractionResult:
    candidates: tuple[GrayImage, ...]
    source_quadrants: tuple[int, ...] = (1, 2, 3, 4)
    singular_estimates: tuple[np.ndarray, ...] = ()

    def __post_init__(self) -> None:
        if len(self.candidates) != len(self.source_quadrants):
            raise ValueError("each candidate needs a source quadrant label")

        if len({candidate.shape for candidate in self.candidates}) > 1:
            raise ValueError("dimension mismatch among extracted candidates")


def extract(watermarked: GrayImage, key: WatermarkKey, max_workers: int = 1) -> ExtractionResult:
    if key.alpha == 0:
        raise ValueError("degenerate key: alpha is 0, the watermark cannot be recovered")

    if watermarked.rows != watermarked.cols or watermarked.rows != key.host_side:
        raise ValueError(
            f"dimension mismatch: image {watermarked.rows}x{watermarked.cols}, key host side {key.host_side}"
        )

    attacked_bands = dwt2(watermarked.pixels)
    attacked_factors = decompose_quadrants(attacked_bands.hh, max_workers)

    estimates = []
    candidates = []

    for factors, host_singular in zip(attacked_factors, key.s_host):
        estimate = (factors.s - host_singular) / key.alpha
        hh_estimate = idct2(svd_reconstruct(key.u_w, estimate, key.vt_w))
        pixels = idwt2(SubbandSet(ll=key.wm_ll, hl=key.wm_hl, lh=key.wm_lh, hh=hh_estimate))

        estimates.append(estimate)
        candidates.append(GrayImage(pixels))

    logger.debug("Extracted %s candidates of side %s", len(candidates), key.wm_side)
    return ExtractionResult(
        candidates=tuple(candidates),
        source_quadrants=(1, 2, 3, 4),
        singular_estimates=tuple(estimates),
    )


def best_candidate(result: ExtractionResult, reference: GrayImage) -> tuple[int, float]:
    """Quadrant with the largest NC against reference; ties go to the lowest index."""
    best_index = 0
    best_score = -np.inf

    for label, candidate in zip(result.source_quadrants, result.candidates):
        if candidate.shape != reference.shape:
            raise ValueError(
                f"dimension mismatch: reference {reference.shape}, candidate {candidate.shape}"
            )

        score = nc(reference, candidate)
        if score > best_score:
            best_index, best_score = label, score

    return best_index, float(best_score)
