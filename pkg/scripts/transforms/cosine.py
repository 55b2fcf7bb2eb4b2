"""
File Name: cosine.py
Last Modified: 2026-10-17

Overview:
Orthonormal 2-D DCT-II and its inverse, for whole square matrices and for
tiled blocks (the block form backs the jpeg_like attack).

F(u,v) = C(u) C(v) sum_ij f(i,j) cos(pi(2i+1)u/2N) cos(pi(2j+1)v/2N),
C(0) = sqrt(1/N), C(u>0) = sqrt(2/N).
"""

from __future__ import annotations

import numpy as np
from scipy import fft

from scripts.transforms.wavelet import as_matrix
from scripts.utilities.config import JPEG_BLOCK_SIZE


def _require_square(matrix, label: str) -> np.ndarray:
    m = as_matrix(matrix, label)
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"non-square {label} {m.shape[0]}x{m.shape[1]}")
    return m


def dct2(matrix) -> np.ndarray:
    m = _require_square(matrix, "dct2 input")
    return fft.dctn(m, type=2, norm="ortho")


def idct2(matrix) -> np.ndarray:
    m = _require_square(matrix, "idct2 input")
    return fft.idctn(m, type=2, norm="ortho")


def _as_blocks(m: np.ndarray, block: int) -> np.ndarray:
    rows, cols = m.shape
    if rows % block or cols % block:
        raise ValueError(f"matrix {rows}x{cols} is not a multiple of block size {block}")
    return m.reshape(rows // block, block, cols // block, block)


def block_dct2(matrix, block: int = JPEG_BLOCK_SIZE) -> np.ndarray:
    """Orthonormal DCT of every block x block tile."""
    m = as_matrix(matrix)
    tiles = _as_blocks(m, block)
    return fft.dctn(tiles, type=2, norm="ortho", axes=(1, 3)).reshape(m.shape)


def block_idct2(matrix, block: int = JPEG_BLOCK_SIZE) -> np.ndarray:
    m = as_matrix(matrix)
    tiles = _as_blocks(m, block)
    return fft.idctn(tiles, type=2, norm="ortho", axes=(1, 3)).reshape(m.shape)
