from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sphericalweights.groups import make_rng, random_torus
from sphericalweights.weights import (
    SL, SO, ExtendedWeight, Sp, Weight, eval_on_torus, factor_from_epsilon, factor_to_epsilon,
    rank_of_weights, weight_from_json,
)

FACTORS = [SL(2), SL(4), Sp(2), Sp(6), SO(5), SO(6), SO(7), SO(8)]


def test_ranks():
    assert [F.rank for F in FACTORS] == [1, 3, 1, 3, 2, 3, 3, 4]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(FACTORS), st.data())
def test_epsilon_round_trip(F, data):
    c = tuple(data.draw(st.lists(st.integers(-3, 3), min_size=F.rank, max_size=F.rank)))
    assert factor_from_epsilon(F, factor_to_epsilon(F, c)) == c


def test_spin_weights_have_half_integer_coordinates():
    assert factor_to_epsilon(SO(5), (0, 1)) == (Fraction(1, 2), Fraction(1, 2))
    assert factor_to_epsilon(SO(6), (0, 1, 0)) == (Fraction(1, 2), Fraction(1, 2), Fraction(-1, 2))


def test_formatting_and_json():
    fs = (SL(3), Sp(4))
    w = ExtendedWeight(Weight.fundamental(fs, 0, 2) + 2 * Weight.fundamental(fs, 1, 1), -1)
    assert str(w) == "(π2+2φ1, -χ0)"
    assert weight_from_json(fs, w.to_json()) == w
    assert str(ExtendedWeight.zero(fs)) == "0"


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_torus_character_is_multiplicative(seed):
    fs = (SL(3), Sp(4), SO(5))
    rng = make_rng(seed)

    def draw():  # the spin coefficient must be even to give a torus character
        flat = [rng.randint(-2, 2) for _ in range(6)]
        flat[-1] *= 2
        return Weight.from_flat(fs, flat)

    a, b = draw(), draw()
    t, s = random_torus(fs, rng), random_torus(fs, rng)
    assert eval_on_torus(a + b, t) == eval_on_torus(a, t) * eval_on_torus(b, t)
    assert eval_on_torus(a, t * s) == eval_on_torus(a, t) * eval_on_torus(a, s)


def test_spin_weight_is_not_a_torus_character():
    fs = (SO(5),)
    t = random_torus(fs, make_rng(0))
    with pytest.raises(ValueError):
        eval_on_torus(Weight.fundamental(fs, 0, 2), t)


def test_rank_of_weights():
    fs = (SL(3),)
    p1, p2 = Weight.fundamental(fs, 0, 1), Weight.fundamental(fs, 0, 2)
    assert rank_of_weights([ExtendedWeight(p1), ExtendedWeight(p2), ExtendedWeight(p1, 1)]) == 3
    assert rank_of_weights([ExtendedWeight(p1), ExtendedWeight(p1 * 2)]) == 1
