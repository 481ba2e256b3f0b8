from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sphericalweights.branching import (
    branch_sl, branch_spin_even, branch_spin_odd, dual_coeffs, weyl_dim, weyl_dim_coeffs,
)
from sphericalweights.spectrum import Chain
from sphericalweights.weights import SL, SO, Sp, weight_from_fundamental


@pytest.mark.parametrize("F, c, dim", [
    (SL(3), (1, 1), 8), (SL(4), (0, 1, 0), 6), (Sp(4), (1, 0), 4), (Sp(4), (0, 1), 5),
    (SO(5), (0, 1), 4), (SO(7), (1, 0, 0), 7), (SO(7), (0, 0, 1), 8),
    (SO(8), (0, 0, 0, 1), 8), (SO(6), (0, 1, 1), 15),
])
def test_weyl_dimension_table(F, c, dim):
    assert weyl_dim_coeffs(F, c) == dim
    assert weyl_dim(F, weight_from_fundamental(F, c)) == dim


def test_known_restrictions():
    assert Chain("sl", 3).branch((1, 0, 0)) == Counter({(1, 0): 1, (0, 0): 1})
    assert Chain("spin", 6).branch((0, 0, 1)) == Counter({(0, 1, 0): 1, (0, 0, 1): 1})
    assert Chain("spin", 5).branch((0, 1, 1)) == Counter({(1, 0): 1, (0, 2): 1})
    assert Chain("spin", 5).branch((1, 0, 0)) == Counter({(1, 0): 1, (0, 0): 1})


def test_weight_level_wrappers_agree():
    lam = weight_from_fundamental(SL(4), (1, 2, 0))
    assert sum(branch_sl(3, lam).values()) == sum(Chain("sl", 3).branch((1, 2, 0)).values())
    assert set(branch_spin_odd(3, (0, 1, 1))) == {weight_from_fundamental(SO(6), c)
                                                   for c in Chain("spin", 6).branch((0, 1, 1))}
    assert set(branch_spin_even(2, (1, 0, 1))) == {weight_from_fundamental(SO(5), c)
                                                    for c in Chain("spin", 5).branch((1, 0, 1))}


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        branch_sl(3, (1, -1, 0))
    with pytest.raises(ValueError):
        branch_sl(3, (1, 0))


def test_dual_coefficients():
    assert dual_coeffs(SL(4), (1, 2, 0)) == (0, 2, 1)
    assert dual_coeffs(SO(8), (0, 0, 1, 0)) == (0, 0, 1, 0)
    assert dual_coeffs(SO(6), (0, 1, 0)) == (0, 0, 1)
    assert dual_coeffs(Sp(4), (1, 1)) == (1, 1)


chains = st.sampled_from([Chain("sl", n) for n in range(2, 7)] + [Chain("spin", n) for n in range(3, 8)])


@settings(max_examples=80, deadline=None)
@given(chains, st.data())
def test_dimension_is_conserved(chain, data):
    c = tuple(data.draw(st.lists(st.integers(0, 3), min_size=chain.K.rank, max_size=chain.K.rank)))
    parts = chain.branch(c)
    assert sum(weyl_dim_coeffs(chain.L, mu) * m for mu, m in parts.items()) == weyl_dim_coeffs(chain.K, c)
