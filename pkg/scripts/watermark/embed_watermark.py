"""
File Name: embed_watermark.py
Last Modified: 2026-10-17

Purpose:
    Embed a grayscale watermark into a grayscale host.

    host -> Haar DWT -> DCT of HH -> zigzag quadrants q1..q4 -> SVD of each.
    watermark -> Haar DWT -> DCT of HH -> SVD (S_w).
    S_ii = S_i + alpha * S_w, quadrants rebuilt with the host's own U_i, V_i,
    then inverse zigzag, inverse DCT and inverse DWT with the host's
    untouched LL, HL and LH bands.

Inputs:
    - host: square GrayImage, side divisible by 4
    - watermark: square GrayImage, side exactly host_side / 2
    - alpha: embedding strength (0 reproduces the host)

Outputs:
    - quantized watermarked GrayImage
    - WatermarkKey carrying the side information extraction needs
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from scripts.imagecore.gray_image import GrayImage, quantize
from scripts.transforms.cosine import dct2, idct2
from scripts.transforms.singular import SvdFactors, svd, svd_reconstruct
from scripts.transforms.wavelet import SubbandSet, dwt2, idwt2
from scripts.transforms.zigzag import QuadrantSet, quadrants_to_matrix, zigzag_to_quadrants
from scripts.watermark.watermark_key import WatermarkKey


logger = logging.getLogger(__name__)


def validate_embedding_inputs(host: GrayImage, wm: GrayImage, alpha: float) -> None:
    if host.rows != host.cols:
        raise ValueError(f"host must be square. Received {host.rows}x{host.cols}")

    if host.rows % 4:
        raise ValueError(f"host side must be divisible by 4. Received {host.rows}")

    if wm.rows != wm.cols or wm.rows * 2 != host.rows:
        raise ValueError(
            f"watermark must be host_side/2: host {host.rows}x{host.cols}, watermark {wm.rows}x{wm.cols}"
        )

    if alpha is None or not np.isfinite(alpha):
        raise ValueError(f"alpha must be finite. Received {alpha}")

    if alpha < 0:
        raise ValueError(f"alpha must be >= 0. Received {alpha}")


def decompose_quadrants(hh: np.ndarray, max_workers: int = 1) -> list[SvdFactors]:
    """DCT the HH band, cut it into zigzag quadrants and factor each one."""
    quadrants = zigzag_to_quadrants(dct2(hh))
    return map_quadrants(svd, quadrants, max_workers)


def map_quadrants(function, quadrants: QuadrantSet, max_workers: int = 1) -> list:
    """Apply function to q1..q4 in order, optionally on a thread pool."""
    if max_workers <= 1:
        return [function(q) for q in quadrants]

    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        return list(pool.map(function, quadrants))


def watermark_factors(wm: GrayImage) -> tuple[SubbandSet, SvdFactors]:
    """Sub-bands of the watermark and the SVD of the DCT of its HH band."""
    subbands = dwt2(wm.pixels)
    return subbands, svd(dct2(subbands.hh))


def embed_subbands(
    host: GrayImage,
    wm: GrayImage,
    alpha: float,
    max_workers: int = 1,
) -> tuple[SubbandSet, WatermarkKey]:
    """Run the embedding up to (not including) the inverse DWT."""
    validate_embedding_inputs(host, wm, alpha)

    host_bands = dwt2(host.pixels)
    host_factors = decompose_quadrants(host_bands.hh, max_workers)

    wm_bands, wm_factors = watermark_factors(wm)

    marked_quadrants = QuadrantSet.from_sequence(
        svd_reconstruct(factors.u, factors.s + alpha * wm_factors.s, factors.vt)
        for factors in host_factors
    )
    marked_hh = idct2(quadrants_to_matrix(marked_quadrants))

    key = WatermarkKey(
        alpha=float(alpha),
        host_side=host.rows,
        wm_side=wm.rows,
        s_host=tuple(factors.s.copy() for factors in host_factors),
        u_w=wm_factors.u,
        vt_w=wm_factors.vt,
        wm_ll=wm_bands.ll,
        wm_hl=wm_bands.hl,
        wm_lh=wm_bands.lh,
    )

    logger.debug(
        "Leading singular values per quadrant: %s; watermark: %.4g",
        [round(float(factors.s[0]), 4) for factors in host_factors],
        float(wm_factors.s[0]),
    )
    return host_bands.replace_hh(marked_hh), key


def embed_unquantized(
    host: GrayImage,
    wm: GrayImage,
    alpha: float,
    max_workers: int = 1,
) -> tuple[GrayImage, WatermarkKey]:
    subbands, key = embed_subbands(host, wm, alpha, max_workers)
    return GrayImage(idwt2(subbands)), key


def embed(
    host: GrayImage,
    wm: GrayImage,
    alpha: float,
    max_workers: int = 1,
) -> tuple[GrayImage, WatermarkKey]:
    """Embed wm into host; returns the quantized image and its key."""
    watermarked, key = embed_unquantized(host, wm, alpha, max_workers)
    logger.info("Embedded %sx%s watermark into %sx%s host (alpha=%s)", wm.rows, wm.cols, host.rows, host.cols, alpha)
    return quantize(watermarked), key
