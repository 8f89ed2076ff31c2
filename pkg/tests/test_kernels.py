"""The compiled GF(p) kernel, the pure-Python fallback and exact elimination must agree."""
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from kronecker import _kernels, linalg
from kronecker.linalg import PRIMES, ExactMatrix, nullspace, rank_exact, rank_mod_p

compiled = pytest.mark.skipif(linalg.BACKEND != "compiled", reason="compiled kernel not built")


@st.composite
def sparse_systems(draw, max_rows=8, max_cols=8, entries=st.integers(-5, 5)):
    nrows = draw(st.integers(0, max_rows))
    ncols = draw(st.integers(1, max_cols))
    rows = []
    for _ in range(nrows):
        dense = [draw(entries) for _ in range(ncols)]
        rows.append({k: v for k, v in enumerate(dense) if v})
    return rows, ncols


def to_sympy(rows, ncols):
    return sympy.Matrix(len(rows), ncols, lambda i, j: rows[i].get(j, 0))


@settings(max_examples=80, deadline=None)
@given(sparse_systems())
def test_exact_rank_matches_sympy(system):
    rows, ncols = system
    expected = to_sympy(rows, ncols).rank() if rows else 0
    assert rank_exact(rows, ncols) == expected
    for p in PRIMES:
        assert rank_mod_p(rows, ncols, p, backend="python") == expected


@compiled
@settings(max_examples=80, deadline=None)
@given(sparse_systems(max_rows=12, max_cols=12, entries=st.integers(-(2**40), 2**40)))
def test_compiled_matches_python(system):
    rows, ncols = system
    for p in (*PRIMES, 3, 7):
        assert rank_mod_p(rows, ncols, p, backend="compiled") == rank_mod_p(rows, ncols, p, backend="python")


def test_small_prime_rank_drop():
    # det 6: full rank over Q, rank 1 over GF(2) and GF(3)
    rows = [{0: 2, 1: 0}, {0: 0, 1: 3}]
    assert rank_exact(rows, 2) == 2
    assert _kernels.rank_mod_p(rows, 2, 2) == 1
    assert _kernels.rank_mod_p(rows, 2, 3) == 1


@compiled
def test_compiled_small_prime():
    rows = [{0: 2, 1: 0}, {0: 0, 1: 3}]
    assert rank_mod_p(rows, 2, 2, backend="compiled") == 1


def test_rational_rows_are_scaled():
    from fractions import Fraction
    rows = [{0: Fraction(1, 2), 1: Fraction(1, 3)}, {0: 3, 1: 2}]
    assert rank_exact(rows, 2) == 1


@settings(max_examples=40, deadline=None)
@given(sparse_systems(max_rows=5, max_cols=6))
def test_nullspace_is_kernel(system):
    rows, ncols = system
    if not rows:
        return
    m = ExactMatrix.from_rows([[r.get(j, 0) for j in range(ncols)] for r in rows], cols=ncols)
    ker = nullspace(m)
    assert ker.rows == ncols - to_sympy(rows, ncols).rank()
    if ker.rows:
        assert (m @ ker.T).is_zero()


def test_empty_shapes():
    assert rank_exact([], 5) == 0
    assert rank_mod_p([], 5) == 0
    z = ExactMatrix.zeros(0, 3)
    assert z.T.shape == (3, 0)
    assert nullspace(ExactMatrix.zeros(2, 3)).rows == 3


def test_pure_backend_selected_by_environment():
    import os
    import subprocess
    import sys
    code = "from kronecker import linalg; from kronecker.reps import *; " \
           "print(linalg.BACKEND, end_dim(projective_source(3)))"
    env = dict(os.environ, KRONECKER_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "1"]
