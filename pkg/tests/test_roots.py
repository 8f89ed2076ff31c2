import pytest
from hypothesis import given, strategies as st

from kronecker.errors import InvalidParameter
from kronecker.roots import (
    DimVector, Tag, classify, compare_holds, coxeter_apply, coxeter_inverse, coxeter_matrix,
    euler_form, imaginary_roots, is_root, preinjective_dim, preprojective_dim, quadratic_form,
    sum_shift_holds, tau_power_dim,
)
from kronecker.sequences import get_cache

vectors = st.tuples(st.integers(0, 200), st.integers(0, 200)).filter(lambda v: v != (0, 0))


def test_classify_examples():
    assert str(classify(3, (5, 1))) == "NonRoot q=11"
    assert classify(3, (1, 1)).tag is Tag.IMAGINARY
    assert classify(3, (1, 0)).tag is Tag.REAL
    assert classify(3, (3, 1)).tag is Tag.REAL


@pytest.mark.parametrize("bad", [(0, 0), (-1, 2)])
def test_classify_rejects(bad):
    with pytest.raises(InvalidParameter):
        classify(3, bad)


def test_parse():
    assert DimVector.parse("21,39") == DimVector(21, 39)
    big = 10**40
    assert DimVector.parse(f"{big},1").a == big
    for bad in ("5", "a,b", "1,2,3"):
        with pytest.raises(InvalidParameter):
            DimVector.parse(bad)


def test_coxeter_matrices():
    n = 3
    assert coxeter_matrix(n) == ((8, 3), (-3, -1))
    phi, inv = coxeter_matrix(n), coxeter_inverse(n)
    prod = [[sum(phi[i][k] * inv[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    assert prod == [[1, 0], [0, 1]]


def test_tau_examples():
    assert coxeter_apply(3, (8, 7), 1) == DimVector(43, 17)
    assert coxeter_apply(3, (8, 7), -1) == DimVector(13, 32)
    assert coxeter_apply(3, (1, 1), 1) == DimVector(5, 2)


@given(st.integers(3, 9), vectors, st.integers(-6, 6))
def test_orbit_round_trip_and_q_invariance(n, v, i):
    w = coxeter_apply(n, v, i)
    assert coxeter_apply(n, w, -i) == DimVector(*v)
    assert quadratic_form(n, w) == quadratic_form(n, v)


@given(st.integers(3, 9), vectors, st.integers(1, 8))
def test_closed_form_tau_power(n, v, i):
    # tau^i (a,b) = (A_{2i+1} a - A_{2i} b, A_{2i} a - A_{2i-1} b); the matrix power is the oracle
    assert tau_power_dim(n, v, i) == coxeter_apply(n, v, i)


def test_closed_form_rejects_nonpositive_shift():
    with pytest.raises(InvalidParameter):
        tau_power_dim(3, (1, 1), 0)


@given(st.integers(3, 9), vectors, vectors)
def test_euler_form_symmetrises_to_q(n, v, w):
    assert euler_form(n, v, v) == quadratic_form(n, v)
    # <x, y> = -<y, x Phi>
    assert euler_form(n, v, w) == -euler_form(n, w, coxeter_apply(n, v, 1))


def test_preprojective_and_preinjective():
    A = get_cache(4).a
    for i in range(1, 8):
        p = preprojective_dim(4, i)
        assert quadratic_form(4, p) == 1
    for j in range(0, 8):
        assert preinjective_dim(4, j) == DimVector(A(j + 1), A(j))
        assert quadratic_form(4, preinjective_dim(4, j)) == 1


def test_is_root():
    assert is_root(3, (1, 1))
    assert is_root(2, (1, 1))
    assert not is_root(3, (5, 1))


def test_imaginary_roots_enumeration():
    brute = sorted(
        (DimVector(a, b) for a in range(1, 30) for b in range(1, 30)
         if a + b <= 30 and a * a + b * b - 3 * a * b < 0),
        key=lambda v: (v.length, v.a))
    assert imaginary_roots(3, 30) == brute


@pytest.mark.parametrize("n", range(3, 9))
def test_compare_lemma(n):
    assert all(compare_holds(n, v) for v in imaginary_roots(n, 60))


def test_sum_shift_requires_positive_shift():
    assert sum_shift_holds(3, (1, 2), 1) is True
    assert sum_shift_holds(3, (8, 7), 1) is None
    with pytest.raises(InvalidParameter):
        sum_shift_holds(3, (1, 2), 0)
