"""
File Name: singular.py
Last Modified: 2026-10-17

Overview:
Square-matrix singular value decomposition and reconstruction.

Two backends share one contract (sorted non-negative singular values,
orthogonal U and V, bounded reconstruction residual):
- "lapack": numpy.linalg.svd, the default used by the watermark pipeline
- "jacobi": one-sided Hestenes Jacobi with a fixed cyclic pair order,
  relative off-diagonal threshold SVD_TOLERANCE and a cap of
  SVD_SWEEP_FACTOR * n sweeps
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from scripts.transforms.wavelet import as_matrix
from scripts.utilities.config import SVD_METHODS, SVD_SWEEP_FACTOR, SVD_TOLERANCE


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SvdFactors:
    u: np.ndarray
    s: np.ndarray
    vt: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return svd_reconstruct(self.u, self.s, self.vt)


def _require_square(matrix) -> np.ndarray:
    m = as_matrix(matrix, "svd input")
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"non-square svd input {m.shape[0]}x{m.shape[1]}; only square matrices are supported")
    return m


def _lapack_svd(m: np.ndarray) -> SvdFactors:
    try:
        u, s, vt = np.linalg.svd(m, full_matrices=True)
    except np.linalg.LinAlgError as exc:
        raise RuntimeError(f"SVD did not converge (LAPACK): {exc}") from exc
    return SvdFactors(u=u, s=s, vt=vt)


def _complete_basis(columns: np.ndarray, n: int) -> np.ndarray:
    """Extend orthonormal columns to a full n x n orthogonal basis."""
    if columns.shape[1] == n:
        return columns

    # QR of [columns | I] keeps the leading span and fills the remainder
    q, _ = np.linalg.qr(np.hstack([columns, np.eye(n)]))
    q[:, :columns.shape[1]] = columns
    return q[:, :n]


def _jacobi_svd(m: np.ndarray, tolerance: float, sweep_factor: int) -> SvdFactors:
    n = m.shape[0]
    work = m.copy()
    v = np.eye(n)
    max_sweeps = sweep_factor * n
    residual = np.inf

    for sweep in range(max_sweeps):
        residual = 0.0

        for p in range(n - 1):
            for q in range(p + 1, n):
                alpha = float(work[:, p] @ work[:, p])
                beta = float(work[:, q] @ work[:, q])
                gamma = float(work[:, p] @ work[:, q])

                if alpha == 0.0 or beta == 0.0:
                    continue

                correlation = abs(gamma) / np.sqrt(alpha * beta)
                residual = max(residual, correlation)

                if correlation <= tolerance:
                    continue

                zeta = (beta - alpha) / (2.0 * gamma)
                t = np.copysign(1.0, zeta) / (abs(zeta) + np.sqrt(1.0 + zeta * zeta))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = c * t

                column_p = work[:, p].copy()
                work[:, p] = c * column_p - s * work[:, q]
                work[:, q] = s * column_p + c * work[:, q]

                basis_p = v[:, p].copy()
                v[:, p] = c * basis_p - s * v[:, q]
                v[:, q] = s * basis_p + c * v[:, q]

        if residual <= tolerance:
            logger.debug("Jacobi SVD converged after %s sweeps (n=%s)", sweep + 1, n)
            break
    else:
        raise RuntimeError(
            f"SVD did not converge within {max_sweeps} sweeps; residual={residual:.3e}"
        )

    singular = np.linalg.norm(work, axis=0)
    order = np.argsort(-singular, kind="stable")
    singular = singular[order]
    work = work[:, order]
    v = v[:, order]

    scale = singular.max() if n else 0.0
    nonzero = singular > scale * n * np.finfo(np.float64).eps if scale > 0 else np.zeros(n, dtype=bool)
    rank = int(nonzero.sum())

    u_columns = work[:, :rank] / singular[:rank]
    u = _complete_basis(u_columns, n)

    return SvdFactors(u=u, s=singular, vt=v.T.copy())


def svd(matrix, method: str = "lapack") -> SvdFactors:
    """Factor a square matrix as U diag(s) V^T with s sorted descending."""
    m = _require_square(matrix)

    if method == "lapack":
        return _lapack_svd(m)

    if method == "jacobi":
        return _jacobi_svd(m, SVD_TOLERANCE, SVD_SWEEP_FACTOR)

    raise ValueError(f"unknown svd method {method!r}; expected one of {SVD_METHODS}")


def svd_reconstruct(u, s, vt) -> np.ndarray:
    """U diag(s) V^T; s may hold negative estimates."""
    u = np.asarray(u, dtype=np.float64)
    vt = np.asarray(vt, dtype=np.float64)
    s = np.asarray(s, dtype=np.float64)

    if u.ndim != 2 or vt.ndim != 2 or s.ndim != 1:
        raise ValueError(f"shape mismatch: u{u.shape}, s{s.shape}, vt{vt.shape}")

    n = s.shape[0]
    if u.shape != (n, n) or vt.shape != (n, n):
        raise ValueError(f"shape mismatch: u{u.shape}, s{s.shape}, vt{vt.shape}")

    return (u * s) @ vt
