import numpy as np
import pytest
from fractions import Fraction
from hypothesis import given, settings, strategies as st

from qhalg import _kernels
from qhalg.exactla import GF, QQ, InconsistentSystemError, PrimeField, kernel_basis, rank, rref, solve_linear

small = st.integers(min_value=-5, max_value=5)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def test_rank_of_known_matrix():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[1, 0], [0, 1]]) == 2


def test_rref_exact_fractions():
    r, piv = rref([[2, 1], [4, 3]])
    assert piv == [0, 1]
    assert r[0, 0] == 1 and isinstance(r[0, 0], Fraction)


def test_solve_and_inconsistent():
    x = solve_linear([[1, 1], [1, -1]], [[2], [0]])
    assert list(x[:, 0]) == [1, 1]
    with pytest.raises(InconsistentSystemError):
        solve_linear([[1, 1], [1, 1]], [[1], [2]])


def test_prime_field_rank_differs_from_rationals():
    m = [[1, 1], [1, 4]]
    assert rank(m) == 2
    assert rank(m, GF(3)) == 1


def test_prime_field_rejects_composites():
    with pytest.raises(ValueError):
        PrimeField(15)


@given(matrices())
def test_rank_plus_nullity(rows):
    cols = len(rows[0])
    assert rank(rows) + len(kernel_basis(rows)) == cols


@given(matrices())
def test_rref_idempotent(rows):
    r, piv = rref(rows)
    r2, piv2 = rref(r)
    assert piv == piv2
    assert (r == r2).all()


@given(matrices(), st.sampled_from([QQ, GF(7), GF(32003)]))
def test_kernel_vectors_are_annihilated(rows, field):
    m = field.asarray(rows)
    for v in kernel_basis(m, field):
        assert field.is_zero(field.matmul(m, v.reshape(-1, 1)))


@settings(max_examples=50)
@given(matrices(6, 6), st.sampled_from([2, 3, 101, 32003]))
def test_numba_and_numpy_kernels_agree(rows, p):
    m = np.array(rows, dtype=np.int64) % p
    r1, piv1 = _kernels.rref_modp_numpy(m, p)
    r2, piv2 = _kernels.rref_modp(m.copy(), p)
    assert (r1 == r2).all()
    assert list(piv1) == list(piv2)


def test_env_flag_selects_numpy_fallback():
    import os
    import subprocess
    import sys

    code = (
        "from qhalg import _kernels, paper_example, GF, enumerate_qh\n"
        "assert not _kernels.HAVE_NUMBA\n"
        "print(len(enumerate_qh(paper_example(GF(32003)))))\n"
    )
    env = dict(os.environ, QHALG_NUMBA="0")
    proc = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.strip() == "16"
