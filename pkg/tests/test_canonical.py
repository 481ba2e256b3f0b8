from fractions import Fraction

import pytest

from sphericalweights.canonical import (
    ReductionError, UnsupportedCase, check_steps, evaluate_template, two_column_expected,
    two_column_reduce, reconstruct_check, reduce_slice, reduce_to_canonical, template_strings,
)
from sphericalweights.cases import get_case
from sphericalweights.exact import Matrix, omega
from sphericalweights.groups import check_invariant_form, make_rng, random_element
from sphericalweights.laurent import parse_monomial
from sphericalweights.weights import Sp


def test_two_column_example():
    for b, d in [(0, 5), (2, -3), (Fraction(1, 2), 0)]:
        P = Matrix([[0, -1], [0, b], [0, 1], [1, d]])
        u, R = two_column_reduce(P, 1)
        assert R == Matrix([[0, -1], [0, 0], [0, 1], [1, d]])
        assert u.is_upper_unitriangular() and check_invariant_form(u, Sp(4))
        assert u @ P == R


def test_two_column_fixed_point():
    R = Matrix([[0, -1], [0, 0], [0, 1], [1, 7]])
    u, R2 = two_column_reduce(R, 1)
    assert u == Matrix.identity(4) and R2 == R


def test_two_column_preconditions():
    with pytest.raises(ReductionError):
        two_column_reduce(Matrix([[1, 0], [0, 0], [0, 1], [0, 1]]), 1)
    with pytest.raises(ReductionError):
        two_column_reduce(Matrix([[0, 0], [0, 1], [0, 0], [1, 0]]), 1)  # columns pair to 0
    with pytest.raises(ValueError):
        two_column_reduce(Matrix([[0, 1], [1, 0]]), 1)


@pytest.mark.parametrize("m", [2, 3, 4])
@pytest.mark.parametrize("variant", [1, 2])
def test_two_column_random_slices(m, variant):
    rng = make_rng(5, m, variant)
    done = 0
    for _ in range(30):
        Q = random_element(Sp(2 * m), rng)
        P = Q.columns([0, 2 * m - 1])
        N = 2 * m
        if P[N - 1, 0] == 0 or P[N - 2, 0] * P[N - 1, 1] - P[N - 2, 1] * P[N - 1, 0] == 0:
            continue
        assert (P.columns([0]).T @ omega(m) @ P.columns([1]))[0, 0] == 1
        u, R = two_column_reduce(P, variant)
        assert R == two_column_expected(P, variant) == u @ P
        nonzero = {(i, j) for i in range(N) for j in range(2) if R[i, j] != 0}
        allowed = {(0, 1) if variant == 1 else (1, 0), (N - 2, 1), (N - 1, 0), (N - 1, 1)}
        assert nonzero <= allowed
        done += 1
    assert done >= 5


def test_reduce_slice_rejects_unknown_shape():
    with pytest.raises(ValueError):
        reduce_slice(Matrix([[1, 0], [0, 1]]), "v3")


def test_case5_example():
    spec = get_case(5, n=1, m=1)
    g = (Matrix.identity(2), Matrix([[1, 1], [-1, 0]]))
    slices, final, steps = reduce_to_canonical(spec, g)
    assert slices["Qbar"] == Matrix([[0, 1], [-1, 0]])
    assert not check_steps(spec, steps)
    assert evaluate_template(spec, spec.evaluate_all(g)) == slices


def test_case6_template():
    t = template_strings(get_case(6, n=4))
    entries = {parse_monomial(e) for M in t.values() for row in M for e in row}
    expected = ["-1/Δ1", "Δ1/Δ2", "D/Δ3", "-Δ4/Δ3", "Δ3/Δ2", "F/(Δ1*Δ2)", "-Δ2/Δ1", "D/Δ1", "Δ1"]
    assert entries >= {parse_monomial(e) for e in expected}


def test_case7_template():
    t = template_strings(get_case(7, n=2, m=2, l=2))
    entries = {parse_monomial(e) for M in t.values() for row in M for e in row}
    expected = ["Δ1/D1", "Δ1*Δ2/D1", "-D1/Δ1", "Δ1/D3", "Δ1*Δ3/D3", "-D3/Δ1", "-D2*Δ1/D1"]
    assert entries >= {parse_monomial(e) for e in expected}


def test_unsupported_and_outside_m():
    with pytest.raises(UnsupportedCase):
        reduce_to_canonical(get_case(1, n=2), None)
    with pytest.raises(UnsupportedCase):
        reconstruct_check(2, trials=1, n=4)
    spec = get_case(5, n=1, m=1)
    with pytest.raises(ReductionError):
        reduce_to_canonical(spec, (Matrix.identity(2), Matrix([[1, 0], [0, 1]])))


@pytest.mark.parametrize("case, params", [
    (3, {"n": 3, "m": 1}), (3, {"n": 5, "m": 2}), (4, {"n": 6, "m": 2}), (4, {"n": 7, "m": 1}),
    (5, {"n": 1, "m": 3}), (6, {"n": 3}), (6, {"n": 5}), (7, {"n": 1, "m": 2, "l": 1}),
    (8, {"n": 2, "m": 3}),
])
def test_reconstruction(case, params):
    rep = reconstruct_check(case, trials=2, seed=9, **params)
    assert rep["pass"], rep["failures"]
