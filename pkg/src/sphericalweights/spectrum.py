"""Spectra of C[L x K]^L for diagonal L inside K, and indecomposable weights.

For ``L`` embedded in ``K`` and ``L`` sitting diagonally in ``G = L x K``, the
module C[G]^L is the sum of ``V_{mu + lambda*}(G)`` over dominant ``lambda``
of K and constituents ``mu`` of ``V_lambda(K)`` restricted to L.  Weights of G
are written with pi for the L factor and phi for the K factor.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional, Sequence

from .branching import (
    branch_sl_coeffs,
    branch_spin_even_coeffs,
    branch_spin_odd_coeffs,
    dual_coeffs,
)
from .weights import SL, SO, ExtendedWeight, FactorType, Weight

DEFAULT_DEGREE_BOUND = 3


@dataclass(frozen=True)
class Chain:
    """A pair ``L < K`` with a coefficient-level branching rule.

    ``kind`` is ``"sl"`` (SL_n < SL_{n+1}), ``"spin"`` (Spin_n < Spin_{n+1})
    or ``"diag"`` (L = K, the factor given by ``factor``).
    """

    kind: str
    n: int = 0
    factor: Optional[FactorType] = None

    def __post_init__(self):
        if self.kind == "sl" and self.n < 2:
            raise ValueError("the SL chain needs n >= 2")
        if self.kind == "spin" and self.n < 3:
            raise ValueError("the Spin chain needs n >= 3")
        if self.kind == "diag" and self.factor is None:
            raise ValueError("the diagonal chain needs a factor")
        if self.kind not in ("sl", "spin", "diag"):
            raise ValueError(f"unsupported chain {self.kind!r}")

    @property
    def L(self) -> FactorType:
        if self.kind == "sl":
            return SL(self.n)
        if self.kind == "spin":
            return SO(self.n)
        return self.factor

    @property
    def K(self) -> FactorType:
        if self.kind == "sl":
            return SL(self.n + 1)
        if self.kind == "spin":
            return SO(self.n + 1)
        return self.factor

    def branch(self, c: tuple[int, ...]) -> Counter:
        if self.kind == "sl":
            return branch_sl_coeffs(self.n, c)
        if self.kind == "diag":
            return Counter({c: 1})
        k, odd = divmod(self.n, 2)
        return branch_spin_even_coeffs(k, c) if odd else branch_spin_odd_coeffs(k, c)

    def __str__(self) -> str:
        if self.kind == "diag":
            return f"{self.factor} diagonal"
        name = "SL" if self.kind == "sl" else "Spin"
        return f"{name}{self.n} < {name}{self.n + 1}"


@dataclass(frozen=True)
class SpectrumEntry:
    """A highest weight of G with its multiplicity; ``char`` is set for extended spectra."""

    weight: Weight
    multiplicity: int
    char: Optional[int] = None

    @property
    def extended(self) -> ExtendedWeight:
        return ExtendedWeight(self.weight, self.char or 0)


def dominant_weights(rank: int, bound: int) -> Iterable[tuple[int, ...]]:
    """All nonnegative vectors of length ``rank`` with coordinate sum at most ``bound``."""
    for c in product(range(bound + 1), repeat=rank):
        if sum(c) <= bound:
            yield c


def _sort_key(e: SpectrumEntry):
    return (sum(e.weight.coeffs[1]), e.weight.coeffs[1], e.weight.coeffs[0], e.char or 0)


def diag_spectrum(chain: Chain, degree_bound: int = DEFAULT_DEGREE_BOUND) -> list[SpectrumEntry]:
    """Spectrum of C[L x K]^L, restricted to lambda with coefficient sum at most ``degree_bound``."""
    if degree_bound < 0:
        raise ValueError("degree bound must be nonnegative")
    factors = (chain.L, chain.K)
    acc: Counter = Counter()
    for lam in dominant_weights(chain.K.rank, degree_bound):
        ld = dual_coeffs(chain.K, lam)
        for mu, m in chain.branch(lam).items():
            acc[(mu, ld)] += m
    entries = [SpectrumEntry(Weight(factors, key), m) for key, m in acc.items()]
    return sorted(entries, key=_sort_key)


def sl_extended_spectrum(n: int, degree_bound: int = DEFAULT_DEGREE_BOUND) -> list[SpectrumEntry]:
    """Spectrum of SL_n x SL_{n+1} modulo diagonal SL_n, graded by the C^x character.

    The torus ``t -> (t E_n, t^-n)`` acts on the GL_n constituent with
    interlacing partition ``nu`` of ``lambda`` by ``t^((n+1)|nu| - n|lambda|)``.
    """
    K = SL(n + 1)
    factors = (SL(n), K)
    acc: Counter = Counter()
    for lam in dominant_weights(n, degree_bound):
        parts = [sum(lam[j:]) for j in range(n)] + [0]  # lambda_1 >= ... >= lambda_{n+1} = 0
        size = sum(parts)
        ld = dual_coeffs(K, lam)
        for b in product(*(range(c + 1) for c in lam)):
            nu = [parts[j + 1] + b[j] for j in range(n)]
            mu = tuple(nu[j] - nu[j + 1] for j in range(n - 1))
            chi = (n + 1) * sum(nu) - n * size
            acc[(mu, ld, chi)] += 1
    entries = [SpectrumEntry(Weight(factors, (mu, ld)), m, chi) for (mu, ld, chi), m in acc.items()]
    return sorted(entries, key=_sort_key)


def indecomposables_up_to_degree(entries: Sequence[SpectrumEntry], bound: Optional[int] = None,
                                 extended: bool = False) -> list:
    """Present weights that are not a sum of two nonzero present weights.

    ``bound`` (if given) drops entries whose K-part exceeds it.  With
    ``extended`` the characters take part and extended weights are returned.
    """
    def key(e):
        return e.extended if extended else e.weight

    pres = [e for e in entries if bound is None or sum(e.weight.coeffs[1]) <= bound]
    present = {key(e) for e in pres}
    nonzero = [w for w in present if not (w.weight if extended else w).is_zero]
    by_k = defaultdict(list)
    for w in nonzero:
        by_k[(w.weight if extended else w).coeffs[1]].append(w)
    out = []
    for w in nonzero:
        kw = (w.weight if extended else w).coeffs[1]
        decomposable = False
        for kv, vs in by_k.items():
            if kv == kw or any(a > b for a, b in zip(kv, kw)):
                continue
            if any((w - v) in present for v in vs):
                decomposable = True
                break
        if not decomposable:
            out.append(w)
    wt = (lambda x: x.weight) if extended else (lambda x: x)
    return sorted(out, key=lambda x: (sum(wt(x).coeffs[1]), wt(x).coeffs[1], wt(x).coeffs[0],
                                      x.char if extended else 0))


# ---------------------------------------------------------------------------
# the two spectrally computed cases

def case1_table(n: int) -> list[ExtendedWeight]:
    """Generators of the extended semigroup for SL_n x SL_{n+1} > SL_n x C^x (listed order)."""
    factors = (SL(n), SL(n + 1))

    def w(pi: int, phi: int, chi: int) -> ExtendedWeight:
        x = Weight.zero(factors)
        if pi:
            x = x + Weight.fundamental(factors, 0, pi)
        return ExtendedWeight(x + Weight.fundamental(factors, 1, phi), chi)

    out = [w(0, 1, n)] + [w(n + 1 - j, j, n + 1 - j) for j in range(2, n + 1)]
    out += [w(n - j, j, -j) for j in range(1, n)] + [w(0, n, -n)]
    return out


def case2_table(n: int) -> list[ExtendedWeight]:
    """Generators of the weight semigroup for Spin_n x Spin_{n+1} > Spin_n (listed order)."""
    if n < 3:
        raise ValueError("n >= 3 required")
    factors = (SO(n), SO(n + 1))

    def w(pis: Sequence[int], phis: Sequence[int]) -> ExtendedWeight:
        x = Weight.zero(factors)
        for i in pis:
            if i:
                x = x + Weight.fundamental(factors, 0, i)
        for i in phis:
            x = x + Weight.fundamental(factors, 1, i)
        return ExtendedWeight(x)

    k = n // 2
    if n == 3:
        return [w([], [1, 2]), w([1], [1]), w([1], [2])]
    if n % 2 == 0:
        out = []
        for i in range(1, k):
            out.append(w([i - 1], [i]))
            out.append(w([i], [i]) if i <= k - 2 else w([k - 1, k], [k - 1]))
        return out + [w([k - 1], [k]), w([k], [k])]
    out = []
    for i in range(1, k):
        out += [w([i - 1], [i]), w([i], [i])]
    return out + [w([k - 1], [k, k + 1]), w([k], [k]), w([k], [k + 1])]


def case12_generators(case: int, n: int, degree_bound: int = DEFAULT_DEGREE_BOUND,
                      check_bound: Optional[int] = None) -> list[ExtendedWeight]:
    """Compute the generators of the extended semigroup for case 1 or 2 from spectra.

    The computed indecomposables (and, for case 1, their unique character
    lifts) are checked against the listed generators; a mismatch raises
    ``AssertionError``.  ``check_bound`` repeats the computation at a larger
    bound and demands the same answer.
    """
    if case == 1:
        if n < 2:
            raise ValueError("case 1 needs n >= 2")
        entries = sl_extended_spectrum(n, degree_bound)
        lifts = defaultdict(set)
        for e in entries:
            lifts[e.weight].add(e.char)
        plain = [SpectrumEntry(w, 1) for w in lifts]
        indec = indecomposables_up_to_degree(plain)
        computed = []
        for w in indec:
            chis = lifts[w]
            if len(chis) != 1:
                raise AssertionError(f"weight {w} has several character lifts {sorted(chis)}")
            computed.append(ExtendedWeight(w, next(iter(chis))))
        table = case1_table(n)
    elif case == 2:
        if n < 3:
            raise ValueError("case 2 needs n >= 3")
        indec = indecomposables_up_to_degree(diag_spectrum(Chain("spin", n), degree_bound))
        computed = [ExtendedWeight(w) for w in indec]
        table = case2_table(n)
    else:
        raise ValueError("only cases 1 and 2 are computed from spectra")
    if set(computed) != set(table):
        raise AssertionError(
            f"case {case}, n={n}: computed {[str(x) for x in computed]} "
            f"differs from listed {[str(x) for x in table]}")
    if check_bound is not None:
        again = case12_generators(case, n, check_bound)
        if set(again) != set(table):
            raise AssertionError("generator set changed when the degree bound was raised")
    return table


def multiplicity_free(entries: Sequence[SpectrumEntry]) -> bool:
    return all(e.multiplicity == 1 for e in entries)


def spectrum_for_case(case: int, n: int, degree_bound: int) -> list[SpectrumEntry]:
    if case == 1:
        return sl_extended_spectrum(n, degree_bound)
    if case == 2:
        return diag_spectrum(Chain("spin", n), degree_bound)
    raise ValueError("spectra are defined for cases 1 and 2 only")
