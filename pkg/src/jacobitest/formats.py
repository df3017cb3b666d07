"""Matrix and spectra JSON documents.

Reals are written with 17 significant digits, which round-trips every
binary64 value.
"""
from __future__ import annotations

import json
import math

from .errors import FormatError, InterlacingError, SizeError
from .iep import SpectrumPair, validate_interlacing
from .tridiag import GeneralTridiagonal, SymmetricTridiagonal


def fmt_real(x: float) -> str:
    x = float(x)
    if x == 0.0 and math.copysign(1.0, x) < 0:
        return "-0.0"  # "-0" would parse back as integer zero
    s = format(x, ".17g")
    # JSON has no bare "inf"/"nan"
    if s in ("inf", "-inf", "nan"):
        raise FormatError(f"cannot serialize non-finite value {x}")
    return s


def _array(values) -> str:
    return "[" + ", ".join(fmt_real(v) for v in values) + "]"


def dump_matrix(t) -> str:
    if isinstance(t, SymmetricTridiagonal):
        parts = [
            '"kind": "symmetric_tridiagonal"',
            f'"order": {t.order}',
            f'"diag": {_array(t.diag)}',
            f'"offdiag": {_array(t.offdiag)}',
        ]
    elif isinstance(t, GeneralTridiagonal):
        parts = [
            '"kind": "general_tridiagonal"',
            f'"order": {t.order}',
            f'"diag": {_array(t.diag)}',
            f'"superdiag": {_array(t.superdiag)}',
            f'"subdiag": {_array(t.subdiag)}',
        ]
    else:
        raise TypeError(f"cannot serialize {type(t).__name__}")
    return "{" + ", ".join(parts) + "}\n"


def _reals(doc, key):
    try:
        values = doc[key]
    except KeyError:
        raise FormatError(f"missing key {key!r}") from None
    if not isinstance(values, list) or not all(
        isinstance(v, (int, float)) and not isinstance(v, bool) for v in values
    ):
        raise FormatError(f"{key!r} must be a list of numbers")
    return [float(v) for v in values]


def _load(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise FormatError("document must be a JSON object")
    return doc


def load_matrix(text: str):
    doc = _load(text)
    kind = doc.get("kind")
    try:
        if kind == "symmetric_tridiagonal":
            t = SymmetricTridiagonal(_reals(doc, "diag"), _reals(doc, "offdiag"))
        elif kind == "general_tridiagonal":
            t = GeneralTridiagonal(
                _reals(doc, "diag"), _reals(doc, "superdiag"), _reals(doc, "subdiag")
            )
        else:
            raise FormatError(f"unknown matrix kind {kind!r}")
    except (SizeError, ValueError) as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(str(exc)) from None
    if "order" in doc and doc["order"] != t.order:
        raise FormatError(f"order {doc['order']} does not match array lengths")
    return t


def dump_spectra(p: SpectrumPair) -> str:
    return f'{{"lambda": {_array(p.lam)}, "mu": {_array(p.mu)}}}\n'


def load_spectra(text: str) -> SpectrumPair:
    """Parse and validate; interlacing failures raise :class:`InterlacingError`."""
    doc = _load(text)
    lam = _reals(doc, "lambda")
    mu = _reals(doc, "mu")
    try:
        return validate_interlacing(lam, mu)
    except SizeError as exc:
        raise InterlacingError(str(exc)) from None
