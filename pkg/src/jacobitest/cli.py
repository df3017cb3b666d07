"""Command-line interface.

Exit codes: 0 success, 2 usage or parameter error, 3 interlacing (data)
error, 4 numerical failure.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import sys

import numpy as np

from . import bench
from .eig import eigenvalues, min_gap
from .errors import (
    DegenerateDataError,
    FormatError,
    InterlacingError,
    NotJacobianError,
    ParameterError,
    RangeError,
    SizeError,
)
from .formats import dump_matrix, fmt_real, load_matrix, load_spectra
from .iep import VARIANTS, reconstruct_jacobian, reconstruction_residual
from .proofcheck import verify_proof_identities
from .springmass import BoundaryCondition, forward_frequencies, solve_inverse_spring_mass
from .tridiag import (
    TestMatrixSpec,
    build_A,
    build_W,
    build_kac,
    kac_spectrum,
    leading_principal_submatrix,
)

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_NUMERIC = 0, 2, 3, 4


def _fmt_values(values, tol=None) -> str:
    if tol is None:
        return " ".join(fmt_real(v) for v in values)
    # round to the bracketing resolution so exact integers print as such
    digits = max(0, min(15, math.floor(-math.log10(tol)) - 1))
    return " ".join(format(round(float(v), digits) + 0.0, ".15g") for v in values)


def _write(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _info(text, out):
    # target spectra / residuals go to stdout only when stdout isn't the payload
    print(text, file=sys.stdout if out is not None else sys.stderr)


def cmd_gen(args) -> int:
    if args.family == "A":
        t = build_A(args.n)
        lam = 2.0 * np.arange(args.n)
        mu = 1.0 + 2.0 * np.arange(args.n - 1)
    elif args.family == "W":
        spec = TestMatrixSpec(args.n, args.a0, args.c)
        t = build_W(spec)
        lam, mu = spec.spectrum(), spec.submatrix_spectrum()
    else:
        t = build_kac(args.n, args.shift)
        lam, mu = kac_spectrum(args.n, args.shift), None
    _write(dump_matrix(t), args.out)
    _info("spectrum: " + _fmt_values(lam), args.out)
    if mu is not None:
        _info("submatrix spectrum: " + _fmt_values(mu), args.out)
    return EXIT_OK


def cmd_eig(args) -> int:
    with open(args.input) as fh:
        t = load_matrix(fh.read())
    full = eigenvalues(t, args.tol)
    lines = [_fmt_values(full.values, full.tol)]
    gaps = [fmt_real(min_gap(full)) if len(full) > 1 else "-"]
    if t.order > 1:
        sub = eigenvalues(leading_principal_submatrix(t), args.tol)
        lines.append(_fmt_values(sub.values, sub.tol))
        gaps.append(fmt_real(min_gap(sub)) if len(sub) > 1 else "-")
    else:
        lines.append("")
        gaps.append("-")
    print(lines[0])
    print(lines[1])
    print("min_gap " + " ".join(gaps))
    return EXIT_OK


def cmd_inverse(args) -> int:
    with open(args.input) as fh:
        pair = load_spectra(fh.read())
    t = reconstruct_jacobian(pair, args.variant)
    r_lam, r_mu = reconstruction_residual(t, pair, args.tol)
    _write(dump_matrix(t), args.out)
    _info(f"residual lambda {fmt_real(r_lam)}\nresidual mu {fmt_real(r_mu)}", args.out)
    return EXIT_OK


def cmd_springmass(args) -> int:
    s = solve_inverse_spring_mass(args.n, args.alpha)
    if args.json:
        print(json.dumps({
            "n": s.n,
            "alpha": s.alpha,
            "masses": s.masses.tolist(),
            "stiffnesses": s.stiffnesses.tolist(),
        }))
        return EXIT_OK
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["i", "m_i", "k_i"])
    for i, (m, k) in enumerate(zip(s.masses, s.stiffnesses), start=1):
        writer.writerow([i, fmt_real(m), fmt_real(k)])
    free = forward_frequencies(s, BoundaryCondition.FREE_END, args.tol)
    fixed = forward_frequencies(s, BoundaryCondition.FIXED_END, args.tol)
    dev_free = float(np.max(np.abs(free.values - (1.0 + 2.0 * np.arange(s.n)))))
    dev_fixed = float(np.max(np.abs(fixed.values - (2.0 + 2.0 * np.arange(s.n - 1)))))
    print("free " + _fmt_values(free.values, free.tol))
    print("fixed " + _fmt_values(fixed.values, fixed.tol))
    print(f"max_deviation {fmt_real(max(dev_free, dev_fixed))}")
    return EXIT_OK


def cmd_bench(args) -> int:
    if args.n_min < 2 or args.n_max < args.n_min:
        raise ParameterError("need 2 <= n-min <= n-max")
    if args.step < 1:
        raise ParameterError("step must be >= 1")
    algorithms = [a.strip() for a in args.algorithms.split(",") if a.strip()]
    unknown = [a for a in algorithms if a not in VARIANTS]
    if not algorithms or unknown:
        raise ParameterError(f"algorithms must be drawn from {VARIANTS}")
    records = bench.run_bench(
        args.family, range(args.n_min, args.n_max + 1, args.step),
        algorithms, args.a0, args.c, args.tol,
    )
    if args.out is None:
        bench.write_csv(records, sys.stdout)
    else:
        with open(args.out, "w", newline="") as fh:
            bench.write_csv(records, fh)
    return EXIT_OK


def cmd_verify_proof(args) -> int:
    report = verify_proof_identities(args.n, args.tol)
    print(report.to_json())
    return EXIT_OK if report.passed else EXIT_NUMERIC


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jacobitest",
        description="Jacobi test matrices with equally spaced, interlaced spectra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a test matrix as JSON")
    p.add_argument("--family", choices=["A", "W", "kac"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a0", type=float, default=0.0)
    p.add_argument("--c", type=float, default=1.0)
    p.add_argument("--shift", type=float, default=0.0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("eig", help="eigenvalues of a matrix file and its leading submatrix")
    p.add_argument("input")
    p.add_argument("--tol", type=float)
    p.set_defaults(func=cmd_eig)

    p = sub.add_parser("inverse", help="reconstruct a Jacobi matrix from a spectra file")
    p.add_argument("input")
    p.add_argument("--variant", choices=VARIANTS, default="full_reorth")
    p.add_argument("--tol", type=float)
    p.add_argument("--out")
    p.set_defaults(func=cmd_inverse)

    p = sub.add_parser("springmass", help="closed-form spring-mass chain")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--tol", type=float)
    p.add_argument("--json", action="store_true", help="emit the system as JSON only")
    p.set_defaults(func=cmd_springmass)

    p = sub.add_parser("bench", help="reconstruction error sweep, CSV output")
    p.add_argument("--family", choices=bench.FAMILIES, default="A")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=50)
    p.add_argument("--step", type=int, default=1)
    p.add_argument("--a0", type=float, default=0.0)
    p.add_argument("--c", type=float, default=1.0)
    p.add_argument("--tol", type=float)
    p.add_argument("--algorithms", default="plain,full_reorth")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("verify-proof", help="check the factor identities for A(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(func=cmd_verify_proof)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InterlacingError as exc:
        index = "" if exc.index is None else f" (index {exc.index})"
        print(f"error: {exc}{index}", file=sys.stderr)
        return EXIT_DATA
    except (DegenerateDataError, NotJacobianError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (FormatError, SizeError, ParameterError, RangeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
