import numpy as np
from hypothesis import strategies as st

from jacobitest import SymmetricTridiagonal

finite = st.floats(min_value=-50, max_value=50, allow_nan=False, allow_infinity=False)
nonzero = st.floats(min_value=0.05, max_value=20).flatmap(
    lambda v: st.sampled_from([v, -v])
)


@st.composite
def tridiagonals(draw, min_order=1, max_order=12, jacobian=False):
    n = draw(st.integers(min_order, max_order))
    diag = draw(st.lists(finite, min_size=n, max_size=n))
    off_elem = nonzero if jacobian else finite
    off = draw(st.lists(off_elem, min_size=n - 1, max_size=n - 1))
    return SymmetricTridiagonal(np.array(diag), np.array(off))


def dense_eigs(t):
    return np.linalg.eigvalsh(t.to_dense())
