"""Closed-form inverse solution of the fixed-free spring-mass chain.

The chain has masses ``m_1..m_n`` and springs ``k_1..k_n``; spring
``k_1`` ties ``m_1`` to the wall.  The closed forms give a chain whose
free-end frequencies (eigenvalues of ``M^-1/2 C M^-1/2``) are
``1, 3, ..., 2n-1`` and whose fixed-end frequencies are
``2, 4, ..., 2n-2``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .eig import Spectrum, eigenvalues
from .errors import ParameterError, RangeError, SizeError
from .tridiag import SymmetricTridiagonal, leading_principal_submatrix


class BoundaryCondition(enum.Enum):
    FREE_END = "free"
    FIXED_END = "fixed"


@dataclass(frozen=True, eq=False)
class SpringMassSystem:
    n: int
    alpha: float
    masses: np.ndarray
    stiffnesses: np.ndarray

    def __post_init__(self):
        masses = np.array(self.masses, dtype=float)
        stiff = np.array(self.stiffnesses, dtype=float)
        if masses.size != self.n or stiff.size != self.n:
            raise SizeError("masses and stiffnesses must both have length n")
        if not (np.all(masses > 0) and np.all(stiff > 0)):
            raise ParameterError("masses and stiffnesses must be positive")
        if not (np.all(np.isfinite(masses)) and np.all(np.isfinite(stiff))):
            raise RangeError("masses and stiffnesses must be finite")
        masses.setflags(write=False)
        stiff.setflags(write=False)
        object.__setattr__(self, "masses", masses)
        object.__setattr__(self, "stiffnesses", stiff)


def _prod(lo: int, hi: int) -> int:
    """lo * (lo+1) * ... * hi, or 1 when the range is empty."""
    return math.prod(range(lo, hi + 1))


def mass_ratio(n: int, i: int) -> Fraction:
    """``m_{n-i} / alpha^2 = 2 (n+i-1)! (n-i-1)! / ((n-1)!)^2`` for i >= 1; 1 at i = 0."""
    if i == 0:
        return Fraction(1)
    # (n+i-1)!/(n-1)! = n..(n+i-1);  (n-i-1)!/(n-1)! = 1/((n-i)..(n-1))
    return Fraction(2 * _prod(n, n + i - 1), _prod(n - i, n - 1))


def stiffness_ratio(n: int, i: int) -> Fraction:
    """``k_{i+1} / alpha^2 = i! (2n-i-1)! / ((n-1)!)^2``, i = 0..n-1."""
    # i!(2n-1-i)!/((n-1)!)^2 = (2n-1-i)!/(n-1)! / ((n-1)!/i!)
    return Fraction(_prod(n, 2 * n - 1 - i), _prod(i + 1, n - 1))


def _check(n, alpha):
    if int(n) != n or n < 2:
        raise SizeError(f"n must be an integer >= 2, got {n}")
    if not (math.isfinite(alpha) and alpha > 0):
        raise ParameterError(f"alpha must be positive and finite, got {alpha}")
    return int(n), float(alpha)


def _scaled(ratio: Fraction, alpha2: float) -> float:
    try:
        return float(ratio) * alpha2
    except OverflowError:
        return math.inf


def max_supported_n(alpha: float = 1.0) -> int:
    """Largest n whose masses and stiffnesses all fit in binary64."""
    alpha2 = float(alpha) ** 2
    # k_1 is the largest entry; it grows roughly like 4^n
    n = 1
    while math.isfinite(_scaled(stiffness_ratio(n + 1, 0), alpha2)):
        n += 1
    return n


def solve_inverse_spring_mass(n: int, alpha: float = 1.0) -> SpringMassSystem:
    """Masses and stiffnesses from the closed-form factorial ratios.

    ``m_n = alpha^2``; the factorial ratios are exact integer quotients
    rounded once to binary64, then scaled by ``alpha^2``.
    """
    n, alpha = _check(n, alpha)
    alpha2 = alpha * alpha
    masses = np.array([_scaled(mass_ratio(n, n - idx), alpha2) for idx in range(1, n + 1)])
    stiff = np.array([_scaled(stiffness_ratio(n, i), alpha2) for i in range(n)])
    if not (np.all(np.isfinite(masses)) and np.all(np.isfinite(stiff))):
        cap = max_supported_n(alpha)
        raise RangeError(
            f"n={n} overflows binary64 for alpha={alpha}; max supported n is {cap}",
            max_n=cap,
        )
    if not (np.all(masses > 0) and np.all(stiff > 0)):
        raise RangeError(f"alpha={alpha} underflows the smallest mass")
    return SpringMassSystem(n, alpha, masses, stiff)


def masses_by_recurrence(n: int, alpha: float = 1.0) -> np.ndarray:
    """Masses from the backward recurrence on square roots.

    Seeds ``sqrt(m_n) = alpha`` and ``sqrt(m_{n-1}) = alpha*sqrt(2n/(n-1))``
    come from the last row of ``B(n) u = k_1/sqrt(m_1) e_1``; row n-1 uses
    the special last off-diagonal, and rows i <= n-2 use

        sqrt(m_{i-1}) = (2n sqrt(m_i) - sqrt(i(2n-i-1)) sqrt(m_{i+1}))
                        / sqrt((i-1)(2n-i))
    """
    n, alpha = _check(n, alpha)
    u = np.empty(n + 1)  # 1-based
    u[n] = alpha
    u[n - 1] = alpha * math.sqrt(2.0 * n / (n - 1))
    if n >= 3:
        b_last = math.sqrt(n * (n - 1) / 2.0)
        b_prev = 0.5 * math.sqrt((n - 2) * (n + 1))
        u[n - 2] = (n * u[n - 1] - b_last * u[n]) / b_prev
    for i in range(n - 2, 1, -1):
        u[i - 1] = (
            2 * n * u[i] - math.sqrt(i * (2 * n - i - 1)) * u[i + 1]
        ) / math.sqrt((i - 1) * (2 * n - i))
    return u[1:] ** 2


def assemble_system_matrices(s: SpringMassSystem) -> tuple[SymmetricTridiagonal, np.ndarray]:
    """Stiffness matrix C (as tridiagonal) and the mass diagonal."""
    k = s.stiffnesses
    diag = np.empty(s.n)
    diag[:-1] = k[:-1] + k[1:]
    diag[-1] = k[-1]
    return SymmetricTridiagonal(diag, -k[1:]), s.masses.copy()


def mass_normalized(s: SpringMassSystem) -> SymmetricTridiagonal:
    """``M^-1/2 C M^-1/2``."""
    c, m = assemble_system_matrices(s)
    root = np.sqrt(m)
    return SymmetricTridiagonal(c.diag / m, c.offdiag / root[:-1] / root[1:])


def forward_frequencies(s: SpringMassSystem, bc: BoundaryCondition = BoundaryCondition.FREE_END, tol: float | None = None) -> Spectrum:
    """Eigenvalues of the mass-normalized stiffness matrix.

    ``FIXED_END`` drops the last mass (leading principal submatrix).
    """
    b = mass_normalized(s)
    if BoundaryCondition(bc) is BoundaryCondition.FIXED_END:
        b = leading_principal_submatrix(b)
    return eigenvalues(b, tol)


def growth_ratios(s: SpringMassSystem) -> tuple[float, float]:
    """``(m_n / m_1, k_n / k_1)``."""
    return (
        float(s.masses[-1] / s.masses[0]),
        float(s.stiffnesses[-1] / s.stiffnesses[0]),
    )
