"""Explicit factor matrices behind the induction for ``A(n)`` and a numeric check of their identities.

For order n the factors are

* ``R`` (n x n, upper triangular): ``B R = R A`` with
  ``B = A°(n+1) - nI`` and ``A = A(n) - (n-1)I``;
* ``L`` ((n+1) x (n+1), lower bidiagonal): ``A(n+1) - 2nI = -L L^T``;
* ``D`` ((n+1) x (n+1)): ``2nI - L^T L = [[D°, 0], [0, 2n]]``;
* ``S`` (n x n, upper bidiagonal): ``S D° = A(n) S``.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import SizeError
from .tridiag import build_A


@dataclass(frozen=True, eq=False)
class ProofFactors:
    n: int
    R: np.ndarray
    L: np.ndarray
    D: np.ndarray
    S: np.ndarray


@dataclass(frozen=True)
class ProofReport:
    n: int
    residuals: tuple[float, float, float]
    d_mismatch: float
    tol: float

    @property
    def passed(self) -> bool:
        return all(r <= self.tol for r in self.residuals) and self.d_mismatch <= self.tol

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "residuals": list(self.residuals),
                "d_mismatch": self.d_mismatch,
                "pass": self.passed,
            }
        )


def _rising(lo, hi):
    return math.prod(range(lo, hi + 1))


def similarity_factor(n: int) -> np.ndarray:
    """``R`` with ``r_ij = sqrt(k (j-1)!(2n-j-1)! / ((i-1)!(2n-i+1)!))``.

    Nonzero only for ``j >= i`` with ``i + j`` even; ``k = 1`` in the last
    column and 2 elsewhere.
    """
    R = np.zeros((n, n))
    for i in range(1, n + 1):
        for j in range(i, n + 1, 2):
            k = 1 if j == n else 2
            # (j-1)!/(i-1)! = i..(j-1);  (2n-j-1)!/(2n-i+1)! = 1/((2n-j)..(2n-i+1))
            ratio = Fraction(k * _rising(i, j - 1), _rising(2 * n - j, 2 * n - i + 1))
            R[i - 1, j - 1] = math.sqrt(ratio)
    return R


def lower_factor(n: int) -> np.ndarray:
    """``L`` of order n+1 with ``A(n+1) - 2nI = -L L^T``; defined for n >= 1."""
    if n < 1:
        raise SizeError("lower_factor needs n >= 1")
    L = np.zeros((n + 1, n + 1))
    for i in range(1, n):
        L[i - 1, i - 1] = math.sqrt((2 * n - i + 1) / 2)
        L[i, i - 1] = -math.sqrt(i / 2)
    L[n - 1, n - 1] = math.sqrt((n + 1) / 2)
    L[n, n - 1] = -math.sqrt(n)
    return L


def listed_D(n: int) -> np.ndarray:
    """``D`` from its listed entries (not from ``L``)."""
    D = np.zeros((n + 1, n + 1))
    for i in range(1, n):
        D[i - 1, i - 1] = (2 * n - 1) / 2
        D[i, i - 1] = D[i - 1, i] = 0.5 * math.sqrt(i * (2 * n - i))
    D[n - 1, n - 1] = (n - 1) / 2
    D[n, n] = 2 * n
    return D


def bidiagonal_factor(n: int) -> np.ndarray:
    """``S``: ``s_ii = sqrt(2n-i)``, ``s_{i,i+1} = -sqrt(i)`` for i < n, ``s_nn = sqrt(2n)``."""
    S = np.zeros((n, n))
    for i in range(1, n):
        S[i - 1, i - 1] = math.sqrt(2 * n - i)
        S[i - 1, i] = -math.sqrt(i)
    # the override at i = n is taken verbatim; identity (3) arbitrates
    S[n - 1, n - 1] = math.sqrt(2 * n)
    return S


def build_proof_factors(n: int) -> ProofFactors:
    if int(n) != n or n < 2:
        raise SizeError(f"n must be an integer >= 2, got {n}")
    n = int(n)
    return ProofFactors(n, similarity_factor(n), lower_factor(n), listed_D(n), bidiagonal_factor(n))


def _rel(residual, reference):
    ref = np.linalg.norm(reference)
    return float(np.linalg.norm(residual) / ref) if ref > 0 else float(np.linalg.norm(residual))


def verify_proof_identities(n: int, tol: float = 1e-10) -> ProofReport:
    """Normalized Frobenius residuals of the three identities.

    Each residual is divided by the norm of the identity's left-hand
    side.  ``D`` for identity (3) is formed as ``2nI - L^T L``;
    ``d_mismatch`` is its max entrywise distance from the listed entries.
    """
    f = build_proof_factors(n)
    n = f.n
    a_next = build_A(n + 1).to_dense()
    b = a_next[:n, :n] - n * np.eye(n)
    a = build_A(n).to_dense() - (n - 1) * np.eye(n)
    r1 = _rel(b @ f.R - f.R @ a, b @ f.R)

    c = a_next - 2 * n * np.eye(n + 1)
    r2 = _rel(c + f.L @ f.L.T, c)

    d = 2 * n * np.eye(n + 1) - f.L.T @ f.L
    d_inner = d[:n, :n]
    a_n = build_A(n).to_dense()
    r3 = _rel(f.S @ d_inner - a_n @ f.S, f.S @ d_inner)

    mismatch = float(np.max(np.abs(d - f.D)))
    return ProofReport(n, (r1, r2, r3), mismatch, float(tol))
