import pytest

from sphericalweights.cases import case2_phi_columns, case2_with_phi_column, get_case
from sphericalweights.exact import Matrix
from sphericalweights.functions import (
    SamplingExhausted, act, evaluate_function, relation_weight_balance, sample_nonvanishing,
    verify_catalog, verify_central_invariance, verify_constants, verify_equivariance,
    verify_invariances, verify_relations,
)
from sphericalweights.groups import make_rng

POINTS = [(1, {"n": 3}), (2, {"n": 4}), (2, {"n": 5}), (3, {"n": 3, "m": 2}), (4, {"n": 5, "m": 2}),
          (5, {"n": 2, "m": 2}), (6, {"n": 3}), (6, {"n": 4}), (7, {"n": 2, "m": 1, "l": 2}),
          (8, {"n": 2, "m": 2})]


@pytest.mark.parametrize("case, params", POINTS)
def test_catalog_spot_check(case, params):
    rep = verify_catalog(case, trials=3, seed=11, **params)
    assert rep["pass"], rep


@pytest.mark.parametrize("case, params", POINTS)
def test_invariances_and_constants(case, params):
    spec = get_case(case, **params)
    assert verify_invariances(spec, trials=3, seed=2)["pass"]
    assert verify_constants(spec)["pass"]


def test_wrong_weight_is_detected():
    spec = get_case(5, n=1, m=1)
    f = spec.functions["Δ"]
    wrong = type(f)(f.case, f.name, f.rule, spec.functions["D"].weight, f.description, f.constant)
    assert not verify_equivariance(spec, wrong, trials=5, seed=0)["pass"]


def test_identity_values():
    spec = get_case(5, n=1, m=1)
    g = (Matrix.identity(2), Matrix([[1, 1], [-1, 0]]))
    assert spec.evaluate_all(g) == {"Δ": 1, "δ": 1, "D": 1}
    assert evaluate_function(spec, "D", act(spec, g)) == 1


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_case2_relations(n):
    spec = get_case(2, n=n)
    assert all(relation_weight_balance(spec, r) for r in spec.relations)
    assert verify_relations(spec, trials=5, seed=0)["pass"]


@pytest.mark.parametrize("n", [5, 7, 9])
def test_case2_literal_phi_column_vanishes(n):
    literal = case2_phi_columns(n // 2)[1]
    spec = case2_with_phi_column(n, literal)
    with pytest.raises(SamplingExhausted):
        sample_nonvanishing(spec, ["Φ"], make_rng(0))


def test_relations_of_small_cases():
    for case, params in [(3, {"n": 3, "m": 1}), (6, {"n": 3}), (8, {"n": 2, "m": 1}), (5, {"n": 1, "m": 1})]:
        rep = verify_relations(get_case(case, **params), trials=5, seed=4)
        assert rep["pass"] and rep["relations"]


@pytest.mark.parametrize("case, params", [(5, {"n": 2, "m": 3}), (7, {"n": 2, "m": 3, "l": 2}),
                                          (8, {"n": 3, "m": 2})])
def test_central_invariance(case, params):
    rep = verify_central_invariance(get_case(case, **params), trials=3, seed=0)
    assert rep["pass"] and rep["factors"]


def test_trials_must_be_positive():
    with pytest.raises(ValueError):
        verify_equivariance(get_case(5, n=1, m=1), "Δ", trials=0)
