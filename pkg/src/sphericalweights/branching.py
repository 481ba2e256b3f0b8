"""Restriction rules for SL_{n+1} > SL_n and Spin_{n+1} > Spin_n, with a Weyl-dimension oracle.

Results are multisets (``collections.Counter``) of single-factor weights;
multiplicities count the splitting tuples that produce each weight.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Sequence

from .weights import SL, SO, FactorType, Weight, factor_to_epsilon, weight_from_fundamental


def _coeffs(lam, factor: FactorType) -> tuple[int, ...]:
    c = tuple(lam.coeffs[0]) if isinstance(lam, Weight) else tuple(int(x) for x in lam)
    if len(c) != factor.rank:
        raise ValueError(f"{factor} has rank {factor.rank}, got {len(c)} coefficients")
    if any(x < 0 for x in c):
        raise ValueError(f"weight {c} is not dominant")
    return c


def _to_result(factor: FactorType, counts: Counter) -> Counter:
    return Counter({weight_from_fundamental(factor, mu): m for mu, m in counts.items()})


@lru_cache(maxsize=None)
def branch_sl_coeffs(n: int, c: tuple[int, ...]) -> Counter:
    """Coefficient-level SL_{n+1} > SL_n rule; keys are length n-1 tuples."""
    out: Counter = Counter()
    for b in product(*(range(ci + 1) for ci in c)):
        mu = [0] * (n + 1)  # slots pi_0 .. pi_n; pi_0 and pi_n are dropped
        for i, (ci, bi) in enumerate(zip(c, b), start=1):
            mu[i - 1] += ci - bi
            mu[i] += bi
        out[tuple(mu[1:n])] += 1
    return out


def branch_sl(n: int, lam) -> Counter:
    """Restrict the SL_{n+1} module with highest weight ``lam`` to SL_n."""
    if n < 2:
        raise ValueError("branch_sl needs n >= 2")
    return _to_result(SL(n), branch_sl_coeffs(n, _coeffs(lam, SL(n + 1))))


@lru_cache(maxsize=None)
def branch_spin_odd_coeffs(k: int, c: tuple[int, ...]) -> Counter:
    """Coefficient-level Spin_{2k+1} > Spin_{2k} rule; keys are length k tuples."""
    out: Counter = Counter()
    for b in product(*(range(ci + 1) for ci in c)):
        mu = [0] * (k + 1)  # slots pi_0 .. pi_k
        for i, (ci, bi) in enumerate(zip(c, b), start=1):
            mu[i - 1] += ci - bi
            mu[i] += bi
            if i == k - 1:
                mu[k] += bi
        out[tuple(mu[1:])] += 1
    return out


def branch_spin_odd(k: int, lam) -> Counter:
    """Restrict the Spin_{2k+1} module with highest weight ``lam`` to Spin_{2k}."""
    if k < 2:
        raise ValueError("branch_spin_odd needs k >= 2")
    return _to_result(SO(2 * k), branch_spin_odd_coeffs(k, _coeffs(lam, SO(2 * k + 1))))


def spin_even_normal_form(c: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Write a D_{k+1} weight as ``c' + d (pi_k + pi_{k+1})`` with ``min(c'_k, c'_{k+1}) = 0``."""
    d = min(c[-2], c[-1])
    return tuple(c[:-2]) + (c[-2] - d, c[-1] - d), d


@lru_cache(maxsize=None)
def branch_spin_even_coeffs(k: int, c: tuple[int, ...]) -> Counter:
    """Coefficient-level Spin_{2k+2} > Spin_{2k+1} rule; keys are length k tuples."""
    cn, d = spin_even_normal_form(c)
    out: Counter = Counter()
    for b in product(*(range(ci + 1) for ci in cn[:k - 1]), range(d + 1)):
        mu = [0] * (k + 1)  # slots pi_0 .. pi_k
        for i in range(1, k):
            bi = b[i - 1]
            mu[i - 1] += cn[i - 1] - bi
            mu[i] += bi
        mu[k] += cn[k - 1] + cn[k]
        bd = b[-1]
        mu[k - 1] += d - bd
        mu[k] += 2 * bd
        out[tuple(mu[1:])] += 1
    return out


def branch_spin_even(k: int, lam) -> Counter:
    """Restrict the Spin_{2k+2} module with highest weight ``lam`` to Spin_{2k+1}."""
    if k < 1:
        raise ValueError("branch_spin_even needs k >= 1")
    return _to_result(SO(2 * k + 1), branch_spin_even_coeffs(k, _coeffs(lam, SO(2 * k + 2))))


def positive_roots(factor: FactorType) -> list[tuple[int, ...]]:
    """Positive roots in epsilon coordinates (length n for SL_n, rank otherwise)."""
    t = factor.root_type
    size = factor.n if t == "A" else factor.rank
    roots = []

    def vec(pairs):
        v = [0] * size
        for idx, s in pairs:
            v[idx] += s
        return tuple(v)

    for i in range(size):
        for j in range(i + 1, size):
            roots.append(vec([(i, 1), (j, -1)]))
            if t != "A":
                roots.append(vec([(i, 1), (j, 1)]))
        if t == "B":
            roots.append(vec([(i, 1)]))
        elif t == "C":
            roots.append(vec([(i, 2)]))
    return roots


def rho(factor: FactorType) -> tuple[Fraction, ...]:
    t, r = factor.root_type, factor.rank
    if t == "A":
        return tuple(Fraction(factor.n - 1 - i) for i in range(factor.n))
    shift = {"B": Fraction(1, 2), "C": Fraction(1), "D": Fraction(0)}[t]
    return tuple(r - 1 - i + shift for i in range(r))


@lru_cache(maxsize=None)
def weyl_dim_coeffs(factor: FactorType, c: tuple[int, ...]) -> int:
    lam = factor_to_epsilon(factor, c)
    r = rho(factor)
    num = den = Fraction(1)
    for a in positive_roots(factor):
        num *= sum((x + y) * z for x, y, z in zip(lam, r, a))
        den *= sum(y * z for y, z in zip(r, a))
    val = num / den
    assert val.denominator == 1
    return int(val)


def weyl_dim(factor: FactorType, lam) -> int:
    """Dimension of the irreducible module with dominant highest weight ``lam``.

    SO factors are treated as their spin covers, so spin weights are allowed.
    """
    return weyl_dim_coeffs(factor, _coeffs(lam, factor))


def dual_coeffs(factor: FactorType, c: Sequence[int]) -> tuple[int, ...]:
    """Highest weight of the dual module (action of -w_0)."""
    c = tuple(c)
    t = factor.root_type
    if t == "A":
        return c[::-1]
    if t == "D" and factor.rank % 2:
        return c[:-2] + (c[-1], c[-2])
    return c
