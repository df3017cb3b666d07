"""Exit criteria.  Each test prints one PASS/FAIL line.

    pytest tests/test_acceptance.py -v
"""
import csv
import io
import time
from fractions import Fraction
from math import factorial

import numpy as np
import pytest

from jacobitest import (
    BoundaryCondition,
    SymmetricTridiagonal,
    TestMatrixSpec,
    build_A,
    build_B_spring,
    build_kac,
    build_W,
    char_poly_eval,
    eigenvalues,
    gershgorin_bounds,
    leading_principal_submatrix,
    masses_by_recurrence,
    negcount,
    normalize_signs,
    reconstruct_jacobian,
    solve_inverse_spring_mass,
    symmetrize,
    validate_interlacing,
    verify_proof_identities,
)
from jacobitest.cli import main
from jacobitest.tridiag import kac_spectrum

from oracles import exact_charpoly, poly_and_derivative, roots_below

GRID_A0 = (-3.0, 0.0, 2.5)
GRID_C = (0.5, 1.0, 4.0)


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
        assert ok, detail

    return emit


def test_1_spectra_of_A(report):
    start = time.perf_counter()
    worst = 0.0
    for n in range(2, 101):
        t = build_A(n)
        lam = eigenvalues(t, 1e-11).values
        mu = eigenvalues(leading_principal_submatrix(t), 1e-11).values
        worst = max(
            worst,
            np.max(np.abs(lam - 2.0 * np.arange(n))),
            np.max(np.abs(mu - (1.0 + 2.0 * np.arange(n - 1)))),
        )
    elapsed = time.perf_counter() - start
    report(1, worst <= 1e-8 and elapsed < 5.0,
           f"A(n) n=2..100 max deviation {worst:.2e} (<= 1e-8), {elapsed:.2f}s (< 5s)")


def test_2_equally_spaced_family(report):
    worst = 0.0  # deviation divided by (|a0| + c n)
    for a0 in GRID_A0:
        for c in GRID_C:
            for n in range(2, 61):
                spec = TestMatrixSpec(n, a0, c)
                scale = abs(a0) + c * n
                t = build_W(spec)
                lam = eigenvalues(t, 1e-12 * scale).values
                mu = eigenvalues(leading_principal_submatrix(t), 1e-12 * scale).values
                dev = max(
                    np.max(np.abs(lam - spec.spectrum())),
                    np.max(np.abs(mu - spec.submatrix_spectrum())),
                )
                worst = max(worst, dev / scale)
    report(2, worst <= 1e-8, f"W_n grid n=2..60 max scaled deviation {worst:.2e} (<= 1e-8)")


def test_3_kac_sylvester(report):
    worst = 0.0
    for n in range(1, 61):
        lam = eigenvalues(build_kac(n, 0.0), 1e-11).values
        worst = max(worst, np.max(np.abs(lam - kac_spectrum(n))))
    report(3, worst <= 1e-8, f"K_n n=1..60 max deviation {worst:.2e} (<= 1e-8)")


def _round_trip_error(lam, mu, exact):
    t = reconstruct_jacobian(validate_interlacing(lam, mu), "full_reorth")
    return max(np.max(np.abs(t.diag - exact.diag)), np.max(np.abs(t.offdiag - exact.offdiag)))


def test_4_inverse_round_trip(report):
    start = time.perf_counter()
    worst_a = max(
        _round_trip_error(2.0 * np.arange(n), 1.0 + 2.0 * np.arange(n - 1), normalize_signs(build_A(n)))
        for n in range(2, 51)
    )
    worst_w = 0.0
    for a0 in GRID_A0:
        for c in GRID_C:
            for n in range(2, 51):
                spec = TestMatrixSpec(n, a0, c)
                worst_w = max(worst_w, _round_trip_error(spec.spectrum(), spec.submatrix_spectrum(), build_W(spec)))
    elapsed = time.perf_counter() - start
    ok = worst_a <= 1e-8 and worst_w <= 1e-8 and elapsed < 10.0
    report(4, ok, f"round trip n<=50: A {worst_a:.2e}, W grid {worst_w:.2e} (<= 1e-8), {elapsed:.2f}s (< 10s)")


def test_5_spring_mass(report):
    freq_dev = rec_dev = 0.0
    exact_k1 = True
    for alpha in (1.0, 0.5, 3.0):
        for n in range(2, 31):
            s = solve_inverse_spring_mass(n, alpha)
            free = forward_frequencies_values(s, BoundaryCondition.FREE_END)
            fixed = forward_frequencies_values(s, BoundaryCondition.FIXED_END)
            freq_dev = max(
                freq_dev,
                np.max(np.abs(free - (1.0 + 2.0 * np.arange(n)))),
                np.max(np.abs(fixed - (2.0 + 2.0 * np.arange(n - 1)))),
            )
            rec_dev = max(rec_dev, np.max(np.abs(masses_by_recurrence(n, alpha) / s.masses - 1.0)))
            if n <= 25:
                k1 = float(Fraction(factorial(2 * n - 1), factorial(n - 1) ** 2)) * alpha**2
                exact_k1 &= s.stiffnesses[0] == k1
    s2, s3 = solve_inverse_spring_mass(2), solve_inverse_spring_mass(3)
    anchors = (
        s2.masses.tolist() == [4, 1] and s2.stiffnesses.tolist() == [6, 2]
        and s3.masses.tolist() == [12, 3, 1] and s3.stiffnesses.tolist() == [30, 6, 3]
    )
    ok = freq_dev <= 1e-8 and rec_dev <= 1e-12 and exact_k1 and anchors
    report(5, ok, f"frequencies {freq_dev:.2e} (<= 1e-8), recurrence rel {rec_dev:.2e} (<= 1e-12), "
                  f"k_1 exact {exact_k1}, anchors {anchors}")


def forward_frequencies_values(s, bc):
    from jacobitest import forward_frequencies

    return forward_frequencies(s, bc, 1e-11).values


def test_6_proof_identities(report):
    worst_r = worst_d = 0.0
    for n in range(2, 41):
        r = verify_proof_identities(n, 1e-10)
        worst_r = max(worst_r, *r.residuals)
        worst_d = max(worst_d, r.d_mismatch)
    report(6, worst_r <= 1e-10 and worst_d <= 1e-12,
           f"n=2..40 residuals {worst_r:.2e} (<= 1e-10), D listing mismatch {worst_d:.2e} (<= 1e-12)")


def test_7_conditioning_bench(report, tmp_path, capsys):
    path = tmp_path / "bench.csv"
    code = main(["bench", "--family", "A", "--n-min", "2", "--n-max", "100",
                 "--algorithms", "plain,full_reorth", "--out", str(path)])
    rows = list(csv.DictReader(io.StringIO(path.read_text())))
    gaps_ok = all(r["min_gap"] == "2.0" and float(r["min_gap"]) == 2.0 for r in rows)
    err = {}
    for r in rows:
        err.setdefault(int(r["n"]), {})[r["algorithm"]] = float(r["max_entry_error"])
    worse = sum(v["plain"] >= v["full_reorth"] for v in err.values())
    frac = worse / len(err)
    ok = code == 0 and len(err) == 99 and gaps_ok and frac >= 0.9
    report(7, ok, f"min_gap == 2.0 on all rows: {gaps_ok}; plain >= full_reorth for "
                  f"{worse}/{len(err)} n ({frac:.0%}, >= 90%)")


def _oracle_cases():
    cases = [(build_A(n), [n - 1] * n, [Fraction(i * (2 * n - i - 1), 4) for i in range(1, n - 1)]
              + [Fraction(n * (n - 1), 2)]) for n in range(2, 13)]
    spec = TestMatrixSpec(12, -3.0, 0.5)
    a_sq = cases[-1][2]
    cases.append((build_W(spec), [spec.center] * 12, [Fraction(1, 4) * v for v in a_sq]))
    n = 7
    cases.append((build_B_spring(n), [n] * n,
                  [Fraction(i * (2 * n - i - 1), 4) for i in range(1, n - 1)] + [Fraction(n * (n - 1), 2)]))
    n = 11
    cases.append((symmetrize(build_kac(n)), [0] * (n + 1), [i * (n + 1 - i) for i in range(1, n + 1)]))
    rng = np.random.default_rng(20140101)
    for order in (5, 9, 12):
        diag = [Fraction(int(v), 4) for v in rng.integers(-40, 40, order)]
        off_sq = [int(v) for v in rng.integers(1, 60, order - 1)]
        t = SymmetricTridiagonal([float(d) for d in diag], np.sqrt(np.array(off_sq, dtype=float)))
        cases.append((t, diag, off_sq))
    return cases


def test_8_oracle_equivalence(report):
    rng = np.random.default_rng(8)
    root_fail = count_fail = probes = 0
    cases = _oracle_cases()
    for t, diag, off_sq in cases:
        tol = 1e-11
        for lam in eigenvalues(t, tol).values:
            p, dp, err = poly_and_derivative(t, lam)
            root_fail += abs(char_poly_eval(t, lam)) > abs(dp) * tol + 2 * err
        poly = exact_charpoly(diag, off_sq)
        lo, hi = gershgorin_bounds(t)
        for x in rng.uniform(lo - 1.0, hi + 1.0, 100):
            probes += 1
            count_fail += negcount(t, x) != roots_below(poly, x)
    ok = root_fail == 0 and count_fail == 0
    report(8, ok, f"{len(cases)} matrices of order <= 12: root-residual failures {root_fail}, "
                  f"negcount/Sturm mismatches {count_fail} of {probes} probes")
