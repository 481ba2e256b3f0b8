import pytest

from sphericalweights.spectrum import (
    Chain, case1_table, case2_table, case12_generators, diag_spectrum, indecomposables_up_to_degree,
    multiplicity_free, sl_extended_spectrum,
)
from sphericalweights.weights import SL, rank_of_weights


def names(ws):
    return {str(w) for w in ws}


def test_sl2_in_sl3_spectrum():
    entries = diag_spectrum(Chain("sl", 2), 1)
    assert names(e.weight for e in entries) == {"0", "φ1", "φ2", "π1+φ1", "π1+φ2"}
    assert multiplicity_free(entries)


def test_diagonal_chain_and_trivial_bound():
    assert names(e.weight for e in diag_spectrum(Chain("diag", factor=SL(2)), 1)) == {"0", "π1+φ1"}
    only = diag_spectrum(Chain("spin", 3), 0)
    assert len(only) == 1 and only[0].weight.is_zero and only[0].multiplicity == 1


def test_case1_n2():
    assert names(e.weight for e in diag_spectrum(Chain("sl", 2), 3)) >= {"π1+φ2", "φ1", "φ2", "π1+φ1"}
    assert names(w.weight for w in case12_generators(1, 2)) == {"π1+φ2", "φ1", "φ2", "π1+φ1"}


def test_case2_n3():
    assert names(case12_generators(2, 3)) == {"φ1+φ2", "π1+φ1", "π1+φ2"}


def test_case2_n4_matches_even_list():
    assert names(case2_table(4)) == {"φ1", "π1+π2+φ1", "π1+φ2", "π2+φ2"}
    assert names(case12_generators(2, 4)) == names(case2_table(4))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_case1_lifts_are_unique_and_free(n):
    gens = case12_generators(1, n, check_bound=4)
    assert len(gens) == 2 * n
    assert rank_of_weights(gens) == 2 * n
    assert multiplicity_free(sl_extended_spectrum(n, 3))


def test_case1_characters():
    assert [str(w) for w in case1_table(3)] == [
        "(φ1, 3χ0)", "(π2+φ2, 2χ0)", "(π1+φ3, χ0)", "(π2+φ1, -χ0)", "(π1+φ2, -2χ0)", "(φ3, -3χ0)"]


def test_indecomposables_of_free_monoid():
    entries = diag_spectrum(Chain("diag", factor=SL(3)), 3)
    assert names(indecomposables_up_to_degree(entries)) == {"π1+φ2", "π2+φ1"}


def test_bad_chains():
    with pytest.raises(ValueError):
        Chain("sl", 1)
    with pytest.raises(ValueError):
        Chain("gl", 3)
    with pytest.raises(ValueError):
        case12_generators(3, 4)
