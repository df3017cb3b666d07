"""Tridiagonal matrix types and the explicit test-matrix families.

Off-diagonals are stored as signed entry values.  For a Jacobi matrix
written with ``-b_i`` above and below the diagonal, ``offdiag[i]`` holds
``-b_i``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NotJacobianError, ParameterError, SizeError


def _frozen(values, name):
    arr = np.array(values, dtype=float)
    if arr.ndim != 1:
        raise SizeError(f"{name} must be one-dimensional")
    if not np.all(np.isfinite(arr)):
        raise ParameterError(f"{name} has non-finite entries")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class SymmetricTridiagonal:
    """Symmetric tridiagonal matrix of order ``len(diag)``."""

    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self):
        diag = _frozen(self.diag, "diag")
        offdiag = _frozen(self.offdiag, "offdiag")
        if diag.size < 1:
            raise SizeError("order must be at least 1")
        if offdiag.size != diag.size - 1:
            raise SizeError(
                f"offdiag has length {offdiag.size}, expected {diag.size - 1}"
            )
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "offdiag", offdiag)

    @property
    def order(self) -> int:
        return self.diag.size

    @property
    def is_jacobian(self) -> bool:
        return bool(np.all(self.offdiag != 0.0))

    def to_dense(self) -> np.ndarray:
        return (
            np.diag(self.diag)
            + np.diag(self.offdiag, 1)
            + np.diag(self.offdiag, -1)
        )

    def __eq__(self, other):
        if not isinstance(other, SymmetricTridiagonal):
            return NotImplemented
        return np.array_equal(self.diag, other.diag) and np.array_equal(
            self.offdiag, other.offdiag
        )

    def __repr__(self):
        return (
            f"SymmetricTridiagonal(diag={self.diag.tolist()}, "
            f"offdiag={self.offdiag.tolist()})"
        )


@dataclass(frozen=True, eq=False)
class GeneralTridiagonal:
    """Nonsymmetric tridiagonal matrix.

    ``superdiag[i]`` is entry ``(i, i+1)`` and ``subdiag[i]`` is entry
    ``(i+1, i)`` (0-based).
    """

    diag: np.ndarray
    superdiag: np.ndarray
    subdiag: np.ndarray

    def __post_init__(self):
        diag = _frozen(self.diag, "diag")
        sup = _frozen(self.superdiag, "superdiag")
        sub = _frozen(self.subdiag, "subdiag")
        if diag.size < 1:
            raise SizeError("order must be at least 1")
        if sup.size != diag.size - 1 or sub.size != diag.size - 1:
            raise SizeError("superdiag/subdiag must have length order - 1")
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "superdiag", sup)
        object.__setattr__(self, "subdiag", sub)

    @property
    def order(self) -> int:
        return self.diag.size

    def to_dense(self) -> np.ndarray:
        return (
            np.diag(self.diag)
            + np.diag(self.superdiag, 1)
            + np.diag(self.subdiag, -1)
        )

    def __eq__(self, other):
        if not isinstance(other, GeneralTridiagonal):
            return NotImplemented
        return (
            np.array_equal(self.diag, other.diag)
            and np.array_equal(self.superdiag, other.superdiag)
            and np.array_equal(self.subdiag, other.subdiag)
        )


@dataclass(frozen=True)
class TestMatrixSpec:
    """Parameters of the equally spaced family: order, smallest eigenvalue, half-gap."""

    __test__ = False  # not a pytest class

    n: int
    a0: float = 0.0
    c: float = 1.0

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 2:
            raise SizeError(f"n must be an integer >= 2, got {self.n}")
        if not math.isfinite(self.a0) or not math.isfinite(self.c):
            raise ParameterError("a0 and c must be finite")
        if self.c <= 0:
            raise ParameterError(f"c must be positive, got {self.c}")

    @property
    def center(self) -> float:
        """Common diagonal value ``a0 + c(n-1)``."""
        return self.a0 + self.c * (self.n - 1)

    def spectrum(self) -> np.ndarray:
        return self.a0 + 2.0 * self.c * np.arange(self.n)

    def submatrix_spectrum(self) -> np.ndarray:
        return self.a0 + self.c + 2.0 * self.c * np.arange(self.n - 1)


def _a_offdiag(n: int) -> np.ndarray:
    # integer products under the root are exact for every practical n
    off = [0.5 * math.sqrt(i * (2 * n - i - 1)) for i in range(1, n - 1)]
    off.append(math.sqrt(n * (n - 1) // 2))
    return np.array(off)


def _check_order(n, minimum=2):
    if int(n) != n or n < minimum:
        raise SizeError(f"n must be an integer >= {minimum}, got {n}")
    return int(n)


def build_A(n: int) -> SymmetricTridiagonal:
    """Order-n matrix with spectrum {0, 2, ..., 2n-2}.

    Its leading principal submatrix has spectrum {1, 3, ..., 2n-3}.  All
    off-diagonal entries are positive.
    """
    n = _check_order(n)
    return SymmetricTridiagonal(np.full(n, n - 1.0), _a_offdiag(n))


def build_B_spring(n: int) -> SymmetricTridiagonal:
    """``A(n) + I`` with negated off-diagonals (spectrum {1, 3, ..., 2n-1})."""
    n = _check_order(n)
    return SymmetricTridiagonal(np.full(n, float(n)), -_a_offdiag(n))


def build_W(spec: TestMatrixSpec) -> SymmetricTridiagonal:
    """Jacobi matrix with spectrum ``a0 + 2c*k`` and interlaced submatrix spectrum ``a0 + c + 2c*k``."""
    return SymmetricTridiagonal(
        np.full(spec.n, spec.center), -spec.c * _a_offdiag(spec.n)
    )


def build_kac(n: int, shift: float = 0.0) -> GeneralTridiagonal:
    """Kac-Sylvester (Clement) matrix of order n+1.

    With ``shift=0`` the diagonal is zero and the spectrum is
    ``{2k - n : k = 0..n}``; ``shift`` is added to every diagonal entry.
    """
    n = _check_order(n, minimum=1)
    k = np.arange(1, n + 1, dtype=float)
    return GeneralTridiagonal(np.full(n + 1, float(shift)), n + 1.0 - k, k)


def kac_spectrum(n: int, shift: float = 0.0) -> np.ndarray:
    return 2.0 * np.arange(n + 1) - n + shift


def symmetrize(g: GeneralTridiagonal) -> SymmetricTridiagonal:
    """Diagonally similar symmetric matrix, offdiag ``sqrt(sup*sub)``.

    Requires every product ``superdiag[i] * subdiag[i]`` to be positive.
    """
    prod = g.superdiag * g.subdiag
    if np.any(prod <= 0):
        raise NotJacobianError(
            "symmetrization needs superdiag*subdiag > 0 entrywise"
        )
    return SymmetricTridiagonal(g.diag, np.sqrt(prod))


def leading_principal_submatrix(t):
    """Delete the last row and column."""
    if t.order < 2:
        raise SizeError("a 1x1 matrix has no leading principal submatrix")
    if isinstance(t, GeneralTridiagonal):
        return GeneralTridiagonal(t.diag[:-1], t.superdiag[:-1], t.subdiag[:-1])
    return SymmetricTridiagonal(t.diag[:-1], t.offdiag[:-1])


def sign_flip(t: SymmetricTridiagonal, m: int) -> SymmetricTridiagonal:
    """Negate the m-th off-diagonal entry (1-based).

    This is the similarity by ``diag(1, ..., 1, -1, ..., -1)`` with m
    leading ones, so both spectra are unchanged.
    """
    if int(m) != m or not 1 <= m <= t.order - 1:
        raise IndexError(f"m must be in 1..{t.order - 1}, got {m}")
    off = t.offdiag.copy()
    off[int(m) - 1] = -off[int(m) - 1]
    return SymmetricTridiagonal(t.diag, off)


def normalize_signs(t: SymmetricTridiagonal) -> SymmetricTridiagonal:
    """Make every off-diagonal entry negative via sign flips."""
    if not t.is_jacobian:
        raise NotJacobianError("matrix has a zero off-diagonal entry")
    for m in np.flatnonzero(t.offdiag > 0):
        t = sign_flip(t, int(m) + 1)
    return t
