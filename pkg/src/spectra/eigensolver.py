"""
Dense Hermitian eigenvalues.

The default backend works on the real symmetric doubling

    [[Re H, -Im H],
     [Im H,  Re H]]

whose spectrum is that of H with every eigenvalue repeated twice. A single
matrix is reduced to tridiagonal form with Householder reflections
(scipy.linalg.hessenberg) and finished by scipy.linalg.eigh_tridiagonal;
stacks of matrices go through the batched LAPACK driver of
numpy.linalg.eigvalsh. The sorted doubled spectrum must split into matching
pairs before the duplicates are dropped. The "lapack" backend skips the
doubling and solves the complex matrix directly.
"""
from __future__ import annotations

import logging
import time
from typing import Optional, Union

import numpy as np
from scipy.linalg import eigh, eigh_tridiagonal, hessenberg

from src.utils.config import settings
from src.utils.errors import EigensolverError, InvariantViolation, NonHermitianError
from src.utils.metrics import solve_metrics

from .assembly import HermitianMatrix
from .spectrum import Spectrum

logger = logging.getLogger(__name__)

MatrixLike = Union[HermitianMatrix, np.ndarray]
BOUND_TOL = 1e-9


def embed_real(h: np.ndarray) -> np.ndarray:
    """Real symmetric doubling of a complex Hermitian matrix (or a stack of them)."""
    h = np.asarray(h)
    top = np.concatenate([h.real, -h.imag], axis=-1)
    bottom = np.concatenate([h.imag, h.real], axis=-1)
    return np.concatenate([top, bottom], axis=-2)


def tridiagonalize(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Householder reduction of a real symmetric matrix: (diagonal, subdiagonal)."""
    t = hessenberg(a)
    return np.diag(t).copy(), np.diag(t, -1).copy()


def check_hermitian(h: np.ndarray) -> float:
    """Largest entry of |H - H*|; raises beyond the configured tolerance."""
    h = np.asarray(h)
    if h.ndim < 2 or h.shape[-1] != h.shape[-2]:
        raise NonHermitianError(f"expected square matrices, got shape {h.shape}")
    defect = float(np.max(np.abs(h - np.swapaxes(h.conj(), -1, -2)), initial=0.0))
    scale = max(1.0, float(np.max(np.abs(h), initial=0.0)))
    if defect > settings.hermitian_tol * scale:
        raise NonHermitianError(f"matrix is not Hermitian: max |H - H*| = {defect:.3e}")
    return defect


def _deduplicate(doubled: np.ndarray, scale: float) -> np.ndarray:
    """Collapse a sorted doubled spectrum (last axis) into its pair means."""
    pairs = doubled.reshape(doubled.shape[:-1] + (-1, 2))
    gap = float(np.max(pairs[..., 1] - pairs[..., 0], initial=0.0))
    if gap > settings.pairing_tol * max(1.0, scale):
        raise EigensolverError(f"doubled eigenvalues do not pair up (gap {gap:.3e})")
    return pairs.mean(axis=-1)


def _solve_single(h: np.ndarray) -> np.ndarray:
    if settings.eigensolver_backend == "lapack":
        return np.linalg.eigvalsh(h)
    diagonal, off = tridiagonalize(embed_real(h))
    doubled = eigh_tridiagonal(diagonal, off, eigvals_only=True)
    return _deduplicate(np.sort(doubled), float(np.max(np.abs(h), initial=0.0)))


def _solve_stack(stack: np.ndarray) -> np.ndarray:
    if settings.eigensolver_backend == "lapack":
        return np.linalg.eigvalsh(stack)
    doubled = np.linalg.eigvalsh(embed_real(stack))
    return _deduplicate(doubled, float(np.max(np.abs(stack), initial=0.0)))


def eigenvalues(h: MatrixLike, ambient_max: Optional[float] = None) -> Spectrum:
    """All eigenvalues of a Hermitian matrix, ascending.

    For a HermitianMatrix the ambient interval is [0, 2ρ∞] of its graph and
    the values are checked to lie inside it. For a bare array the ambient
    interval is the hull of 0 and the computed values unless given.
    """
    entries = h.entries if isinstance(h, HermitianMatrix) else np.asarray(h, dtype=complex)
    check_hermitian(entries)
    hermitian = 0.5 * (entries + entries.conj().T)

    started = time.perf_counter()
    values = _solve_single(hermitian)
    solve_metrics.record_solve(
        settings.eigensolver_backend, hermitian.shape[0], (time.perf_counter() - started) * 1e3
    )

    if isinstance(h, HermitianMatrix) and ambient_max is None:
        ambient_max = h.ambient_max
    if ambient_max is None:
        lo = min(0.0, float(values[0])) if values.size else 0.0
        hi = max(0.0, float(values[-1])) if values.size else 0.0
        return Spectrum(values, (lo, hi))
    if values.size and (values[0] < -BOUND_TOL or values[-1] > ambient_max + BOUND_TOL):
        raise InvariantViolation(
            f"eigenvalues [{values[0]:.6g}, {values[-1]:.6g}] escape [0, {ambient_max:.6g}]"
        )
    return Spectrum(values, (0.0, float(ambient_max)))


def batch_eigenvalues(stack: np.ndarray) -> np.ndarray:
    """Sorted eigenvalues of a (batch, n, n) stack of Hermitian matrices."""
    stack = np.asarray(stack, dtype=complex)
    check_hermitian(stack)
    stack = 0.5 * (stack + np.swapaxes(stack.conj(), -1, -2))
    started = time.perf_counter()
    values = _solve_stack(stack)
    solve_metrics.record_solve(
        settings.eigensolver_backend,
        stack.shape[-1],
        (time.perf_counter() - started) * 1e3,
        batch=stack.shape[0],
    )
    return values


def residual_check(h: MatrixLike, spectrum: Spectrum) -> float:
    """max_k ‖H x_k - λ_k x_k‖ / ‖H‖ using eigenvectors from scipy.linalg.eigh.

    On-demand diagnostic; the eigenvalue path itself never forms eigenvectors.
    """
    entries = h.entries if isinstance(h, HermitianMatrix) else np.asarray(h, dtype=complex)
    _, vectors = eigh(entries)
    norm = max(float(np.linalg.norm(entries, 2)), np.finfo(float).tiny)
    residual = entries @ vectors - vectors * spectrum.values[None, :]
    return float(np.max(np.linalg.norm(residual, axis=0)) / norm)


__all__ = [
    "embed_real",
    "tridiagonalize",
    "check_hermitian",
    "eigenvalues",
    "batch_eigenvalues",
    "residual_check",
]
