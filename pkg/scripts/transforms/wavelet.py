"""
File Name: wavelet.py
Last Modified: 2026-10-17

Overview:
Single-level orthonormal Haar analysis and synthesis.

Band convention (pinned by the worked example [[1,-1],[1,-1]] -> hl=[2]):
- ll: approximation along rows and columns
- hl: detail within each row, approximated down the columns
- lh: approximation within each row, detail down the columns
- hh: detail along both directions
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import pywt

from scripts.utilities.config import WAVELET_MODE, WAVELET_NAME


@dataclass(frozen=True)
class SubbandSet:
    ll: np.ndarray
    hl: np.ndarray
    lh: np.ndarray
    hh: np.ndarray

    def __post_init__(self) -> None:
        shapes = {np.shape(band) for band in (self.ll, self.hl, self.lh, self.hh)}
        if len(shapes) != 1:
            raise ValueError(f"sub-band size mismatch: {sorted(shapes)}")

    @property
    def shape(self) -> tuple[int, int]:
        return tuple(np.shape(self.ll))

    def replace_hh(self, hh: np.ndarray) -> SubbandSet:
        return SubbandSet(ll=self.ll, hl=self.hl, lh=self.lh, hh=hh)


def as_matrix(values, label: str = "matrix") -> np.ndarray:
    """Coerce to a finite float64 2-D array."""
    matrix = np.asarray(values, dtype=np.float64)

    if matrix.ndim != 2:
        raise ValueError(f"{label} must be 2-D. Received ndim={matrix.ndim}")

    if matrix.size == 0:
        raise ValueError(f"{label} must not be empty")

    if not np.isfinite(matrix).all():
        raise ValueError(f"{label} has non-finite entries")

    return matrix


def dwt2(matrix) -> SubbandSet:
    m = as_matrix(matrix)
    rows, cols = m.shape

    if rows % 2 or cols % 2:
        raise ValueError(f"odd dimension {rows}x{cols}; dwt2 needs even rows and cols")

    # pywt keys name axis 0 (down the columns) first, axis 1 (along rows) second
    coeffs = pywt.dwtn(m, WAVELET_NAME, mode=WAVELET_MODE, axes=(0, 1))
    return SubbandSet(
        ll=coeffs["aa"],
        hl=coeffs["ad"],
        lh=coeffs["da"],
        hh=coeffs["dd"],
    )


def idwt2(subbands: SubbandSet) -> np.ndarray:
    bands = [as_matrix(band, "sub-band") for band in (subbands.ll, subbands.hl, subbands.lh, subbands.hh)]

    if len({band.shape for band in bands}) != 1:
        raise ValueError(f"sub-band size mismatch: {[band.shape for band in bands]}")

    ll, hl, lh, hh = bands
    coeffs = {"aa": ll, "ad": hl, "da": lh, "dd": hh}
    return pywt.idwtn(coeffs, WAVELET_NAME, mode=WAVELET_MODE, axes=(0, 1))
