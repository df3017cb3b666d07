import json

import numpy as np
import pytest
from hypothesis import given, strategies as st

from jacobitest import FormatError, InterlacingError, SymmetricTridiagonal, build_A, build_kac
from jacobitest.formats import dump_matrix, dump_spectra, load_matrix, load_spectra
from jacobitest.iep import validate_interlacing

reals = st.floats(allow_nan=False, allow_infinity=False)


@given(st.integers(1, 8).flatmap(lambda n: st.tuples(
    st.lists(reals, min_size=n, max_size=n), st.lists(reals, min_size=n - 1, max_size=n - 1))))
def test_symmetric_round_trip_bitwise(arrays):
    t = SymmetricTridiagonal(*arrays)
    back = load_matrix(dump_matrix(t))
    assert back == t
    assert np.array_equal(np.signbit(back.diag), np.signbit(t.diag))


def test_general_round_trip():
    k = build_kac(5, 0.25)
    assert load_matrix(dump_matrix(k)) == k


def test_document_shape():
    doc = json.loads(dump_matrix(build_A(3)))
    assert doc == {"kind": "symmetric_tridiagonal", "order": 3,
                   "diag": [2, 2, 2], "offdiag": [1, 1.7320508075688772]}
    assert "1.7320508075688772" in dump_matrix(build_A(3))


@pytest.mark.parametrize("text", [
    '{"kind": "symmetric_tridiagonal", "diag": [1, 2',
    '[1, 2]',
    '{"kind": "banded", "diag": [1]}',
    '{"kind": "symmetric_tridiagonal", "diag": [1, 2], "offdiag": [1, 2]}',
    '{"kind": "symmetric_tridiagonal", "diag": [1, "x"], "offdiag": [1]}',
    '{"kind": "symmetric_tridiagonal", "order": 3, "diag": [1, 2], "offdiag": [1]}',
    '{"kind": "symmetric_tridiagonal", "diag": [1, 2]}',
])
def test_malformed(text):
    with pytest.raises(FormatError):
        load_matrix(text)


def test_spectra_round_trip():
    p = validate_interlacing([0.1, 2, 4], [1, 3.3])
    q = load_spectra(dump_spectra(p))
    assert np.array_equal(q.lam, p.lam) and np.array_equal(q.mu, p.mu)


def test_spectra_interlacing_error():
    with pytest.raises(InterlacingError):
        load_spectra('{"lambda": [0, 2], "mu": [2]}')
    with pytest.raises(FormatError):
        load_spectra('{"lambda": [0, 2]}')
