import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sphericalweights.cases import get_case
from sphericalweights.irreducibility import certify_case, presentation
from sphericalweights.semigroup import (
    DependentGenerators, SemigroupPresentation, SigmaSet, analyse_splits, check_irreducible_a1,
    enumerate_splits, sigma_set, solve_in_basis, split_solutions,
)
from sphericalweights.weights import SL, ExtendedWeight, Weight

FS = (SL(3),)
P1, P2 = Weight.fundamental(FS, 0, 1), Weight.fundamental(FS, 0, 2)


def test_membership_in_basis():
    pres = SemigroupPresentation([ExtendedWeight(P1, 1)], [ExtendedWeight(P2, 2)])
    assert solve_in_basis(ExtendedWeight(P1 * -1 + P2 * 3, 5), pres) == [-1, 3]
    assert solve_in_basis(ExtendedWeight(P2 * -1, -2), pres) is None
    assert solve_in_basis(ExtendedWeight(P1, 0), pres) is None


def test_dependent_generators_rejected():
    with pytest.raises(DependentGenerators):
        SemigroupPresentation([], [ExtendedWeight(P1), ExtendedWeight(P1 * 2)])


def test_sigma_set_progression():
    pres = SemigroupPresentation([ExtendedWeight(P1, 1)], [ExtendedWeight(P1 + P2, 3)])
    s = sigma_set(P1, pres)
    assert s == SigmaSet.single(1)
    assert sigma_set(P2, pres) == SigmaSet.progression(2, 0, 0, 0)
    assert sigma_set(P2 * -1, pres).is_empty


def test_sigma_progression_canonical_forms():
    s = SigmaSet.progression(4, -6, None, 0)
    assert (s.base, s.step, s.lo, s.hi) == (4, 6, 0, None)
    assert 10 in s and 4 in s and -2 not in s
    assert SigmaSet.progression(0, 3, None, None).base == 0
    assert SigmaSet.progression(0, 3, 2, 1).is_empty
    assert SigmaSet.progression(5, 2, 3, 3) == SigmaSet.single(11)


def bounded(draw_from):
    return st.builds(lambda b, s, lo, n: SigmaSet.progression(b, s, lo, lo + n),
                     st.integers(-10, 10), st.integers(-4, 4), st.integers(-5, 5), st.integers(0, 6))


@settings(max_examples=200, deadline=None)
@given(bounded(None), bounded(None), st.integers(-40, 40))
def test_split_solutions_matches_enumeration(s1, s2, total):
    def members(s):
        if s.is_empty:
            return set()
        if s.step == 0:
            return {s.base}
        return {s.base + s.step * t for t in range(s.lo, s.hi + 1)}

    found = sorted(x for x in members(s1) if total - x in members(s2))
    count, example = split_solutions(s1, s2, total)
    assert count == min(len(found), 2)
    if found:
        assert example in found


def test_enumerate_splits_counts():
    lam = P1 * 2 + P2
    splits = list(enumerate_splits(lam))
    assert len(splits) == 2  # four ordered nonzero splits, paired up
    for a, b in splits:
        assert a + b == lam and not a.is_zero and not b.is_zero


def test_irreducibility_depends_on_characters():
    gens = [ExtendedWeight(P1), ExtendedWeight(P2), ExtendedWeight(P1 + P2, 1)]
    assert check_irreducible_a1(2, SemigroupPresentation([], gens)).irreducible
    # with (pi1, 2) invertible, (pi1 + pi2, 5) = (pi1, 2) + (pi2, 3)
    pres = SemigroupPresentation([ExtendedWeight(P1, 2)], [ExtendedWeight(P2), ExtendedWeight(P1 + P2, 5)])
    v = check_irreducible_a1(2, pres)
    assert not v.irreducible
    assert [s.count for s in v.splits] == [1]


def test_lattice_generators_enable_splits():
    # (pi1 + pi2, 0) = (pi1, 1) + (pi2, -1) once (pi1, 1) is invertible
    pres = SemigroupPresentation([ExtendedWeight(P1, 1)], [ExtendedWeight(P2), ExtendedWeight(P1 + P2)])
    assert sigma_set(P2, pres) == SigmaSet.progression(0, 1, -1, 0)
    assert not check_irreducible_a1(2, pres).irreducible


def test_case3_n3_progressions():
    spec = get_case(3, n=3, m=1)
    pres = presentation(spec)
    rec = analyse_splits(pres.index("D"), pres)
    assert len(rec) == 1
    r = rec[0]
    p_side = r.set1 if str(r.mu1) == "π2" else r.set2
    q_side = r.set2 if str(r.mu1) == "π2" else r.set1
    # sigma = 6p - 2 with p <= 0, and sigma = -6q + 3 with q >= 1
    assert all((6 * p - 2) in p_side for p in range(-5, 1)) and (4 not in p_side)
    assert all((-6 * q + 3) in q_side for q in range(1, 6)) and (3 not in q_side)
    assert r.count == 0


def test_case3_n3_certificate():
    rep = certify_case(get_case(3, n=3, m=1))
    assert rep["pass"]
    assert rep["witnesses"] == [{"generator": "Φ2", "through": "Δ", "values": {"Δ": "0", "Φ2": "-1"},
                                 "expected": {"Δ": "0", "Φ2": "-1"}, "pass": True}]
