"""Jacobi matrix reconstruction from two strictly interlaced spectra."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .eig import eigenvalues
from .errors import DegenerateDataError, InterlacingError, SizeError
from .tridiag import SymmetricTridiagonal, leading_principal_submatrix

VARIANTS = ("plain", "full_reorth")

_EPS = np.finfo(float).eps


@dataclass(frozen=True, eq=False)
class SpectrumPair:
    """Spectrum ``lam`` of a matrix and ``mu`` of its leading principal submatrix."""

    lam: np.ndarray
    mu: np.ndarray

    @property
    def n(self) -> int:
        return self.lam.size

    def merged(self) -> np.ndarray:
        z = np.empty(2 * self.n - 1)
        z[0::2] = self.lam
        z[1::2] = self.mu
        return z


@dataclass(frozen=True, eq=False)
class LastComponents:
    weights: np.ndarray

    @property
    def squared(self) -> np.ndarray:
        return self.weights**2


def validate_interlacing(lam, mu) -> SpectrumPair:
    """Check ``lam[0] < mu[0] < lam[1] < ... < mu[n-2] < lam[n-1]``.

    Raises :class:`InterlacingError` carrying the first merged-sequence
    position where the strict ordering fails.
    """
    lam = np.array(lam, dtype=float).ravel()
    mu = np.array(mu, dtype=float).ravel()
    if lam.size < 2:
        raise SizeError("lambda needs at least two values")
    if mu.size != lam.size - 1:
        raise InterlacingError(
            f"mu has length {mu.size}, expected {lam.size - 1}"
        )
    if not (np.all(np.isfinite(lam)) and np.all(np.isfinite(mu))):
        raise InterlacingError("spectra must be finite")
    lam.setflags(write=False)
    mu.setflags(write=False)
    pair = SpectrumPair(lam, mu)
    bad = np.flatnonzero(np.diff(pair.merged()) <= 0)
    if bad.size:
        k = int(bad[0])
        raise InterlacingError(
            f"strict interlacing fails at merged index {k}", index=k
        )
    return pair


def _log_weights_squared(lam, mu):
    # Pair each mu_j with lam_j (j < i) or lam_{j+1} (j >= i) so every
    # factor lies in (0, 1); sum logs so nothing under- or overflows.
    n = lam.size
    out = np.empty(n)
    j = np.arange(n - 1)
    for i in range(n):
        partner = np.where(j < i, lam[:-1], lam[1:])
        ratios = (lam[i] - mu) / (lam[i] - partner)
        if np.any(ratios <= 0):
            raise InterlacingError("non-positive weight; spectra not interlaced")
        out[i] = np.sum(np.log(ratios))
    return out


def last_components(p: SpectrumPair) -> LastComponents:
    """Last entries of the unit eigenvectors, as positive numbers.

    ``w_i^2 = prod_j (lam_i - mu_j) / prod_{j != i} (lam_i - lam_j)``.
    """
    return LastComponents(np.exp(0.5 * _log_weights_squared(p.lam, p.mu)))


def reconstruct_jacobian(p: SpectrumPair, variant: str = "full_reorth") -> SymmetricTridiagonal:
    """Jacobi matrix with spectrum ``p.lam`` and leading submatrix spectrum ``p.mu``.

    Runs the Lanczos recurrence on ``diag(lam)`` from the last-component
    vector.  Step k yields the entries of row ``n-1-k``, so the matrix is
    filled from the bottom up.  ``variant="full_reorth"`` re-orthogonalizes
    each new vector against all previous ones (two Gram-Schmidt passes);
    ``"plain"`` uses the bare three-term recurrence.  Off-diagonals come
    out negative.
    """
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    reorth = variant == "full_reorth"
    lam = p.lam
    n = lam.size
    q = last_components(p).weights.copy()
    q /= np.linalg.norm(q)
    threshold = _EPS * max(abs(lam[0]), abs(lam[-1]))

    diag = np.empty(n)
    off = np.empty(n - 1)
    basis = np.zeros((n, n)) if reorth else None
    q_prev = np.zeros(n)
    beta = 0.0
    for k in range(n):
        if reorth:
            basis[:, k] = q
        v = lam * q
        alpha = float(q @ v)
        diag[n - 1 - k] = alpha
        if k == n - 1:
            break
        v -= alpha * q + beta * q_prev
        if reorth:
            block = basis[:, : k + 1]
            for _ in range(2):
                v -= block @ (block.T @ v)
        beta = float(np.linalg.norm(v))
        if not beta > threshold:
            raise DegenerateDataError(
                f"off-diagonal collapsed to {beta:.3e} at step {k + 1}",
                step=k + 1,
            )
        off[n - 2 - k] = -beta
        q_prev, q = q, v / beta
    return SymmetricTridiagonal(diag, off)


def reconstruction_residual(t: SymmetricTridiagonal, p: SpectrumPair, tol: float | None = None) -> tuple[float, float]:
    """Max deviation of the computed spectra of ``t`` and its submatrix from ``p``.

    Without ``tol`` the eigenvalues are bisected to ``1e-13 * max|lam|`` so
    the residual shows reconstruction error rather than bracket width.
    """
    if t.order != p.n:
        raise SizeError(f"matrix order {t.order} does not match spectrum length {p.n}")
    if tol is None:
        tol = 1e-13 * max(1.0, float(np.max(np.abs(p.lam))))
    lam_t = eigenvalues(t, tol).values
    mu_t = eigenvalues(leading_principal_submatrix(t), tol).values
    return (
        float(np.max(np.abs(lam_t - p.lam))),
        float(np.max(np.abs(mu_t - p.mu))),
    )
