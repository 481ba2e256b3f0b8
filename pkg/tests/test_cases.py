import pytest

from sphericalweights.cases import (
    CANONICAL_CASES, CONSTRAINTS, PARAM_NAMES, CaseParameterError, get_case, parameter_grid,
    parse_weight, table_generators,
)
from sphericalweights.weights import SL, Sp


def names(ws):
    return {str(w) for w in ws}


@pytest.mark.parametrize("case, params", [
    (1, {"n": 1}), (2, {"n": 2}), (3, {"n": 2, "m": 1}), (4, {"n": 4, "m": 1}),
    (5, {"n": 0, "m": 1}), (6, {"n": 2}), (7, {"n": 1, "m": 1, "l": 0}), (8, {"n": 1, "m": 0}),
    (9, {"n": 3}), (3, {"n": 3}), (1, {"n": 3, "m": 1}),
])
def test_invalid_parameters(case, params):
    with pytest.raises(CaseParameterError):
        get_case(case, **params)


@pytest.mark.parametrize("case", range(1, 9))
def test_grid_points_are_admissible(case):
    grid = parameter_grid(case)
    assert grid
    for p in grid:
        assert set(p) == set(PARAM_NAMES[case])
        spec = get_case(case, **p)
        assert spec.case == case and spec.params == p
    assert CONSTRAINTS[case]


def test_table_examples():
    assert names(table_generators(5, n=1, m=1)) == {"π1+φ1"}
    assert len(table_generators(7, n=2, m=2, l=2)) == 6
    assert len(table_generators(1, n=2)) == 4
    assert names(table_generators(2, n=3)) == {"φ1+φ2", "π1+φ1", "π1+φ2"}


def test_inclusion_rules_grow_with_parameters():
    small = table_generators(5, n=1, m=1)
    big = table_generators(5, n=2, m=2)
    assert len(big) > len(small)
    assert len(table_generators(8, n=1, m=1)) < len(table_generators(8, n=2, m=2))


def test_parse_weight():
    fs = (SL(3), Sp(4))
    w = parse_weight(fs, "π1+2φ2", 1)
    assert str(w) == "(π1+2φ2, χ0)"
    assert parse_weight(fs, "π0+π3").weight.is_zero
    assert parse_weight(fs, "0").weight.is_zero
    with pytest.raises(ValueError):
        parse_weight(fs, "x1")


def test_catalog_shapes():
    for case in CANONICAL_CASES:
        for p in parameter_grid(case)[:3]:
            spec = get_case(case, **p)
            assert set(spec.generators) <= set(spec.functions)
            assert set(spec.lattice) | set(spec.semigroup) <= set(spec.functions)
            g = spec.random_g(__import__("random").Random(0))
            spec.check_shape(g)
            assert set(spec.evaluate_all(g)) == set(spec.functions)


def test_case3_n3_weights():
    spec = get_case(3, n=3, m=2)
    w = {k: str(f.weight) for k, f in spec.functions.items()}
    assert w["Δ"] == "(π1, 2χ0)" and w["δ"] == "(π2, -2χ0)" and w["Φ1"] == "π1+π2"
    assert [str(r) for r in spec.relations] == ["Φ1 = -δ*Δ"]
