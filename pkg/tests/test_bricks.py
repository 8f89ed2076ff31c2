import pytest
from hypothesis import given, settings, strategies as st

from kronecker.bricks import (
    construct_brick, indecomposable_dim_for_quasilength, quasi_length_options, verify_bricks,
    verify_quasilength,
)
from kronecker.errors import InvalidParameter
from kronecker.reps import end_dim, hom_dim
from kronecker.roots import DimVector, coxeter_apply, imaginary_roots


def case_path(cert):
    return [step.get("case", step.get("step")) for step in cert.case_trace]


@pytest.mark.parametrize("n,root,path", [
    (3, (1, 1), [1]),
    (3, (5, 3), [2]),
    (3, (2, 3), [5, 2, "dual"]),
    (3, (7, 3), [6, 5, 2, "dual", "tau"]),
    (4, (6, 3), [3]),
    (5, (7, 3), [4]),
    (4, (3, 10), [7, 6]),
])
def test_case_traces(n, root, path):
    cert = construct_brick(n, root)
    assert case_path(cert)[:len(path)] == path
    assert cert.rep.dim == DimVector(*root)
    assert cert.end_dim == 1 and cert.verified


def test_every_case_is_exercised():
    seen = set()
    for n in (3, 4, 5):
        for root in imaginary_roots(n, 24):
            seen.add(construct_brick(n, root).case)
    assert seen == {1, 2, 3, 4, 5, 6, 7}


@pytest.mark.parametrize("bad", [(1, 0), (3, 1), (5, 1), (0, 0)])
def test_rejects_non_imaginary(bad):
    with pytest.raises(InvalidParameter):
        construct_brick(3, bad)


@settings(max_examples=20, deadline=None)
@given(st.integers(3, 6), st.integers(1, 14), st.integers(1, 14))
def test_exact_and_modular_agree(n, a, b):
    if a * a + b * b - n * a * b >= 0:
        return
    cert = construct_brick(n, (a, b))
    assert hom_dim(cert.rep, cert.rep, method="exact").dimension == 1


def test_certificate_json():
    cert = construct_brick(3, (7, 3))
    data = cert.to_json()
    assert data["root"] == [7, 3] and data["end_dim"] == 1 and data["verified"] is True
    assert data["case_trace"][0] == {"case": 6, "dim": [7, 3], "shift": 1, "shifted_dim": [2, 3]}


def test_quasi_length_examples():
    assert quasi_length_options(3, (100, 100)) == [1]
    assert quasi_length_options(3, (21, 39)) == [1, 2]
    assert indecomposable_dim_for_quasilength(3, (21, 39), 2) == (DimVector(7, 13), DimVector(39, 96))
    assert indecomposable_dim_for_quasilength(3, (24, 21), 2) == (DimVector(8, 7), DimVector(21, 39))
    with pytest.raises(InvalidParameter):
        indecomposable_dim_for_quasilength(3, (100, 100), 2)


@pytest.mark.parametrize("n", [3, 4])
def test_even_layer_is_orbit_sum(n):
    for root in imaginary_roots(n, 80):
        for r in quasi_length_options(n, root):
            seed, layer = indecomposable_dim_for_quasilength(n, root, r)
            total = DimVector(0, 0)
            for l in range(r):
                total = total + coxeter_apply(n, seed, l - r // 2)
            assert layer == total


def test_suites():
    rep = verify_bricks([3, 4], 16)
    assert rep.ok, rep.first_failure
    assert rep.cases == len(imaginary_roots(3, 16)) + len(imaginary_roots(4, 16))
    rep = verify_quasilength(3, 30)
    assert rep.ok, rep.first_failure
