from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sphericalweights.exact import Matrix, format_rational, omega, parse_rational, rank, solve_integer, solve_rational

small = st.integers(-4, 4)


def square(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)


def test_rational_round_trip():
    for s in ("0", "-3", "7/2", "-1/6"):
        assert format_rational(parse_rational(s)) == s
    assert isinstance(parse_rational("4/2"), int)


def test_det_and_inverse_small():
    M = Matrix([[2, 1], [1, 1]])
    assert M.det() == 1
    assert M.inv() == Matrix([[1, -1], [-1, 2]])
    assert M @ M.inv() == Matrix.identity(2)


@settings(max_examples=40, deadline=None)
@given(square(3))
def test_inverse_is_exact(rows):
    M = Matrix(rows)
    if M.det() == 0:
        with pytest.raises(ZeroDivisionError):
            M.inv()
        return
    assert M @ M.inv() == Matrix.identity(3)
    assert (M @ M).det() == M.det() ** 2


def test_omega_is_skew_and_squares_to_minus_one():
    for m in (1, 2, 3):
        W = omega(m)
        assert W.T == W.scale(-1)
        assert W @ W == Matrix.identity(2 * m).scale(-1)


def test_minor_is_one_based_and_ordered():
    M = Matrix([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
    assert M.minor([1, 2], [1, 2]) == -3
    assert M.minor([2, 1], [1, 2]) == 3
    assert M.minor([1, 2, 3], [1, 2, 3]) == M.det() == -3


def test_rank_and_solvers():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[1, 0, 1], [0, 1, 1], [1, 1, 2]]) == 2
    x, ker = solve_rational([[2, 0], [0, 3]], [1, 1])
    assert x == [Fraction(1, 2), Fraction(1, 3)] and ker == []
    assert solve_rational([[1], [1]], [1, 2]) is None
    x, ker = solve_integer([[1, 1]], [3])
    assert sum(x) == 3 and len(ker) == 1 and sum(ker[0]) == 0
    sol = solve_integer([[2, 0], [0, 3]], [4, 9])
    assert sol is not None and list(sol[0]) == [2, 3]
    assert solve_integer([[2]], [3]) is None
