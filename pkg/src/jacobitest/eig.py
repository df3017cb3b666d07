"""Eigenvalues of symmetric tridiagonal matrices by Sturm-count bisection."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParameterError, SizeError
from .tridiag import GeneralTridiagonal, SymmetricTridiagonal, symmetrize

_EPS = np.finfo(float).eps
_MAX_BISECTIONS = 200


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Ascending eigenvalues, each bracketed to width ``tol``."""

    values: np.ndarray
    tol: float

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        if values.size > 1 and np.any(np.diff(values) < 0):
            raise ParameterError("spectrum values must be sorted ascending")
        if not self.tol > 0:
            raise ParameterError("tol must be positive")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def __len__(self):
        return self.values.size

    def __iter__(self):
        return iter(self.values)


def _as_symmetric(t):
    if isinstance(t, GeneralTridiagonal):
        return symmetrize(t)
    return t


def gershgorin_bounds(t: SymmetricTridiagonal) -> tuple[float, float]:
    """Interval ``[lo, hi]`` containing every eigenvalue."""
    t = _as_symmetric(t)
    radius = np.zeros(t.order)
    off = np.abs(t.offdiag)
    radius[:-1] += off
    radius[1:] += off
    return float(np.min(t.diag - radius)), float(np.max(t.diag + radius))


def _pivot_floor(t):
    # magnitude substituted for an exactly zero pivot
    return _EPS * (1.0 + float(np.max(np.abs(t.offdiag), initial=0.0)))


def _pivots(b2, shifted, tiny=None):
    pivots = np.empty_like(shifted)
    d = shifted[0].copy()
    for i in range(shifted.shape[0]):
        if i:
            np.divide(b2[i - 1], d, out=d)
            np.subtract(shifted[i], d, out=d)
        if tiny is not None and not d.all():
            # +tiny perturbs the shift downward, so an eigenvalue
            # equal to x is not counted
            d[d == 0.0] = tiny
        pivots[i] = d
    return pivots


def _negcounts(t: SymmetricTridiagonal, xs: np.ndarray) -> np.ndarray:
    """Vectorised Sturm count: number of eigenvalues < x for every x in xs."""
    b2 = (t.offdiag**2).tolist()
    xs = np.asarray(xs, dtype=float).ravel()
    shifted = t.diag[:, None] - xs[None, :]
    with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
        # fast pass without the zero-pivot guard; exact zeros are rare, so
        # only the columns that hit one are recomputed with the guard
        pivots = _pivots(b2, shifted)
        hit = ~np.all(pivots, axis=0) | np.isnan(pivots).any(axis=0)
        if hit.any():
            pivots[:, hit] = _pivots(b2, shifted[:, hit], _pivot_floor(t))
    return np.count_nonzero(pivots < 0, axis=0)


def negcount(t: SymmetricTridiagonal, x: float) -> int:
    """Number of eigenvalues of ``t`` strictly less than ``x``.

    Counts negative pivots of the LDL^T factorization of ``t - x I``.
    """
    t = _as_symmetric(t)
    return int(_negcounts(t, np.array([float(x)]))[0])


def default_tol(t: SymmetricTridiagonal) -> float:
    lo, hi = gershgorin_bounds(t)
    return 1e-10 * max(1.0, abs(lo), abs(hi))


def eigenvalues(t, tol: float | None = None) -> Spectrum:
    """All eigenvalues of ``t``, ascending, each bracketed to width ``tol``.

    Every index is bisected at once: the bracket for the k-th eigenvalue
    keeps ``negcount(lo) <= k < negcount(hi)``.  A
    :class:`GeneralTridiagonal` is first symmetrized by diagonal
    similarity, which needs ``superdiag * subdiag > 0``.
    """
    t = _as_symmetric(t)
    if tol is None:
        tol = default_tol(t)
    if not tol > 0:
        raise ParameterError("tol must be positive")
    n = t.order
    glo, ghi = gershgorin_bounds(t)
    pad = 2.0 * _EPS * max(1.0, abs(glo), abs(ghi)) * n + tol
    lo = np.full(n, glo - pad)
    hi = np.full(n, ghi + pad)
    k = np.arange(n)
    for _ in range(_MAX_BISECTIONS):
        active = (hi - lo) > tol
        if not np.any(active):
            break
        mid = 0.5 * (lo + hi)
        stuck = (mid <= lo) | (mid >= hi)
        active &= ~stuck
        if not np.any(active):
            break
        counts = _negcounts(t, mid[active])
        above = counts >= k[active] + 1
        idx = np.flatnonzero(active)
        hi[idx[above]] = mid[idx[above]]
        lo[idx[~above]] = mid[idx[~above]]
    values = np.sort(0.5 * (lo + hi))
    return Spectrum(values, tol)


def char_poly_eval(t: SymmetricTridiagonal, x: float) -> float:
    """``det(t - x I)`` by the three-term recurrence.

    Intended as an oracle for small orders (<= ~20); no scaling is done,
    so large orders may overflow.
    """
    t = _as_symmetric(t)
    p_prev, p = 1.0, t.diag[0] - x
    for i in range(1, t.order):
        p_prev, p = p, (t.diag[i] - x) * p - t.offdiag[i - 1] ** 2 * p_prev
    return float(p)


def min_gap(s) -> float:
    """Smallest difference between consecutive sorted values."""
    values = np.sort(np.asarray(s.values if isinstance(s, Spectrum) else s, dtype=float))
    if values.size < 2:
        raise SizeError("min_gap needs at least two values")
    return float(np.min(np.diff(values)))
