"""Reconstruction round-off sweep over matrix order."""
from __future__ import annotations

import csv
import time
from dataclasses import astuple, dataclass

import numpy as np

from .eig import min_gap
from .errors import DegenerateDataError, ParameterError
from .iep import SpectrumPair, reconstruct_jacobian, reconstruction_residual, validate_interlacing
from .tridiag import TestMatrixSpec, build_A, build_W, normalize_signs

CSV_HEADER = "n,family,algorithm,max_entry_error,max_eig_residual,min_gap,runtime_ns"
FAMILIES = ("A", "W")


@dataclass(frozen=True)
class BenchRecord:
    n: int
    family: str
    algorithm: str
    max_entry_error: float
    max_eig_residual: float
    min_gap: float
    runtime_ns: int


def exact_case(family: str, n: int, a0: float = 0.0, c: float = 1.0):
    """Closed-form spectra and the sign-normalized exact matrix.

    Family ``A`` is ``A(n)``; family ``W`` is the (n, a0, c) member of the
    equally spaced family.  Spectra come from formulas, never from an
    eigensolver.
    """
    if family == "A":
        lam = 2.0 * np.arange(n)
        mu = 1.0 + 2.0 * np.arange(n - 1)
        exact = normalize_signs(build_A(n))
    elif family == "W":
        spec = TestMatrixSpec(n, a0, c)
        lam, mu = spec.spectrum(), spec.submatrix_spectrum()
        exact = build_W(spec)
    else:
        raise ParameterError(f"family must be one of {FAMILIES}, got {family!r}")
    return validate_interlacing(lam, mu), exact


def bench_one(pair: SpectrumPair, exact, family: str, algorithm: str, tol=None) -> BenchRecord:
    n = pair.n
    gap = min_gap(pair.lam)
    start = time.perf_counter_ns()
    try:
        t = reconstruct_jacobian(pair, algorithm)
    except DegenerateDataError:
        elapsed = time.perf_counter_ns() - start
        return BenchRecord(n, family, algorithm, float("inf"), float("inf"), gap, elapsed)
    elapsed = time.perf_counter_ns() - start
    entry_err = max(
        float(np.max(np.abs(t.diag - exact.diag))),
        float(np.max(np.abs(t.offdiag - exact.offdiag))),
    )
    eig_res = max(reconstruction_residual(t, pair, tol))
    return BenchRecord(n, family, algorithm, entry_err, eig_res, gap, elapsed)


def run_bench(family, ns, algorithms, a0=0.0, c=1.0, tol=None) -> list[BenchRecord]:
    """One record per (n, algorithm), ascending n, algorithms in given order."""
    records = []
    for n in ns:
        pair, exact = exact_case(family, n, a0, c)
        for algorithm in algorithms:
            records.append(bench_one(pair, exact, family, algorithm, tol))
    return records


def write_csv(records, fh) -> None:
    fh.write(CSV_HEADER + "\n")
    writer = csv.writer(fh, lineterminator="\n")
    for r in records:
        row = list(astuple(r))
        for idx in (3, 4, 5):
            row[idx] = repr(float(row[idx]))
        writer.writerow(row)
