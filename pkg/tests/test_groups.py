import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sphericalweights.exact import Matrix, omega
from sphericalweights.groups import (
    _elementary_type1, central_sp_embed, check_invariant_form, gram_columns_check, make_rng,
    random_antisym_c, random_element, random_torus, random_unipotent, so_root_element,
    symplectic_type1, symplectic_type2,
)
from sphericalweights.weights import SL, SO, Sp

FACTORS = [SL(2), SL(3), SL(5), Sp(2), Sp(4), Sp(6), SO(3), SO(4), SO(5), SO(6), SO(7)]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(FACTORS), st.integers(0, 10**6))
def test_random_elements_lie_in_the_group(F, seed):
    rng = make_rng(seed)
    assert check_invariant_form(random_element(F, rng), F)
    u = random_unipotent(F, rng)
    assert u.is_upper_unitriangular() and check_invariant_form(u, F)
    t = random_torus((F,), rng).matrices()[0]
    assert check_invariant_form(t, F)


def test_same_seed_same_element():
    assert random_element(Sp(6), 7) == random_element(Sp(6), 7)
    assert make_rng(1, "a", 2).random() == make_rng(1, "a", 2).random()
    assert make_rng(1, "a", 2).random() != make_rng(1, "a", 3).random()


def test_symplectic_types():
    P = Matrix([[2, 1], [1, 1]])
    assert check_invariant_form(symplectic_type1(P), Sp(4))
    C = random_antisym_c(3, make_rng(0))
    assert C.antitranspose() == C
    assert check_invariant_form(symplectic_type2(C), Sp(6))
    with pytest.raises(ValueError):
        symplectic_type2(Matrix([[1, 2], [3, 4]]))
    with pytest.raises(ValueError):
        symplectic_type1(Matrix([[1, 1], [1, 1]]))


def test_elementary_type1_closed_form():
    for i, j in [(0, 1), (1, 0), (0, 2), (2, 1)]:
        E = Matrix.identity(3)
        E = E.replace({(i, j): 5})
        assert _elementary_type1(3, i, j, 5) == symplectic_type1(E)


def test_so_root_elements():
    g = so_root_element(5, 0, 2, 3)
    assert check_invariant_form(g, SO(5)) and g.is_upper_unitriangular()
    with pytest.raises(ValueError):
        so_root_element(4, 0, 3, 1)


def test_gram_columns_and_central_embedding():
    rng = make_rng(3)
    for m in (2, 3):
        Q = random_element(Sp(2 * m), rng)
        for k in range(1, m + 1):
            assert gram_columns_check(Q, k)
        X = random_element(Sp(2 * m - 2), rng)
        assert check_invariant_form(central_sp_embed(m, 1, X), Sp(2 * m))
    assert not gram_columns_check(Matrix.identity(4).replace({(0, 0): 2, (3, 3): 2}), 1)
    assert omega(2).T @ omega(2) == Matrix.identity(4)
