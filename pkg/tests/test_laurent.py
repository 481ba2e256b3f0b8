from fractions import Fraction

import pytest

from sphericalweights.laurent import parse_monomial


@pytest.mark.parametrize("text", ["-D/Δ", "F/(Δ1*Δ2)", "δ2^2", "-2*Δ2*Φ", "Δ1", "1", "0", "-1/Δ"])
def test_round_trip(text):
    m = parse_monomial(text)
    assert parse_monomial(str(m)) == m


def test_evaluate():
    vals = {"D": 6, "Δ": 4, "Δ1": 2, "Δ2": 3, "F": 12}
    assert parse_monomial("-D/Δ").evaluate(vals) == Fraction(-3, 2)
    assert parse_monomial("F/(Δ1*Δ2)").evaluate(vals) == 2
    assert parse_monomial("Δ1^2").evaluate(vals) == 4
    assert parse_monomial("0").evaluate(vals) == 0
    with pytest.raises(ZeroDivisionError):
        parse_monomial("1/Δ").evaluate({"Δ": 0})


def test_weight_is_additive():
    m = parse_monomial("a^2/b")
    assert m.weight({"a": 5, "b": 3}, 0) == 7
    assert m.names == ("a", "b")


def test_bad_input():
    with pytest.raises(ValueError):
        parse_monomial("a**b")
