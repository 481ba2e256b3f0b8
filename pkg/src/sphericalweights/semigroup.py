"""Membership in the monoid Z = (lattice span) + (semigroup span) and irreducibility checks.

Generators are linearly independent extended weights.  The first block is
inverted (integer coefficients of any sign), the second block only admits
nonnegative integer coefficients.  Irreducibility of a generator is decided
by enumerating all splits of its weight into two nonzero dominant parts and
testing whether both parts can lie in Z.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Any, Callable, Optional, Sequence

from .exact import rank, solve_integer, solve_rational
from .exact import _ext_gcd
from .weights import ExtendedWeight, Weight


class DependentGenerators(ValueError):
    """Raised when a presentation's generators are linearly dependent."""


@dataclass(frozen=True)
class SemigroupPresentation:
    lattice_gens: tuple[ExtendedWeight, ...]
    semigroup_gens: tuple[ExtendedWeight, ...]
    names: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "lattice_gens", tuple(self.lattice_gens))
        object.__setattr__(self, "semigroup_gens", tuple(self.semigroup_gens))
        gens = self.gens
        if not self.names:
            object.__setattr__(self, "names", tuple(f"g{i + 1}" for i in range(len(gens))))
        if len(self.names) != len(gens):
            raise ValueError("one name per generator expected")
        if rank([g.vector() for g in gens]) != len(gens):
            raise DependentGenerators("generators are linearly dependent")

    @property
    def gens(self) -> tuple[ExtendedWeight, ...]:
        return self.lattice_gens + self.semigroup_gens

    @property
    def k(self) -> int:
        return len(self.lattice_gens)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def _weight_matrix(self, with_char: bool):
        gens = self.gens
        rows = list(zip(*(g.weight.flat() for g in gens)))
        if with_char:
            rows.append(tuple(g.char for g in gens))
        return [list(r) for r in rows]


def solve_in_basis(target: ExtendedWeight, pres: SemigroupPresentation) -> Optional[list[int]]:
    """Coefficients of ``target`` in the generators if it lies in Z, else ``None``."""
    A = pres._weight_matrix(with_char=True)
    sol = solve_rational(A, list(target.vector()))
    if sol is None:
        return None
    x, kernel = sol
    if kernel:
        raise DependentGenerators("generators are linearly dependent")
    if any(Fraction(c).denominator != 1 for c in x):
        return None
    x = [int(c) for c in x]
    if any(c < 0 for c in x[pres.k:]):
        return None
    return x


# ---------------------------------------------------------------------------
# sets of admissible characters

def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


@dataclass(frozen=True)
class SigmaSet:
    """``{base + step * t : lo <= t <= hi}``; ``lo``/``hi`` of ``None`` mean unbounded.

    The empty set has ``base = None``; a single value has ``step = 0``.  In
    canonical form ``step > 0`` and ``base`` is the maximum if the set is
    bounded above, else the minimum if bounded below, else the residue in
    ``[0, step)``.
    """

    base: Optional[int]
    step: int = 0
    lo: Optional[int] = 0
    hi: Optional[int] = 0

    @classmethod
    def empty(cls) -> "SigmaSet":
        return cls(None, 0, 0, 0)

    @classmethod
    def single(cls, v: int) -> "SigmaSet":
        return cls(v, 0, 0, 0)

    @classmethod
    def progression(cls, base: int, step: int, lo: Optional[int], hi: Optional[int]) -> "SigmaSet":
        if lo is not None and hi is not None and lo > hi:
            return cls.empty()
        if step == 0:
            return cls.single(base)
        if step < 0:
            base, step, lo, hi = base, -step, (None if hi is None else -hi), (None if lo is None else -lo)
        if lo is not None and lo == hi:
            return cls.single(base + step * lo)
        if hi is not None:
            base, lo, hi = base + step * hi, (None if lo is None else lo - hi), 0
        elif lo is not None:
            base, lo, hi = base + step * lo, 0, None
        else:
            base = base % step
        return cls(base, step, lo, hi)

    @property
    def is_empty(self) -> bool:
        return self.base is None

    @property
    def is_single(self) -> bool:
        return self.base is not None and self.step == 0

    @property
    def maximum(self) -> Optional[int]:
        if self.is_empty:
            return None
        if self.step == 0:
            return self.base
        return None if self.hi is None else self.base + self.step * self.hi

    @property
    def minimum(self) -> Optional[int]:
        if self.is_empty:
            return None
        if self.step == 0:
            return self.base
        return None if self.lo is None else self.base + self.step * self.lo

    def __contains__(self, sigma: int) -> bool:
        if self.is_empty:
            return False
        if self.step == 0:
            return sigma == self.base
        q, r = divmod(sigma - self.base, self.step)
        if r:
            return False
        return (self.lo is None or q >= self.lo) and (self.hi is None or q <= self.hi)

    def describe(self) -> str:
        if self.is_empty:
            return "empty"
        if self.step == 0:
            return f"{{{self.base}}}"
        rng = []
        if self.lo is not None:
            rng.append(f"t>={self.lo}")
        if self.hi is not None:
            rng.append(f"t<={self.hi}")
        return f"{{{self.base}{self.step:+d}t : {', '.join(rng) or 't in Z'}}}"

    def to_json(self) -> dict:
        if self.is_empty:
            return {"kind": "empty"}
        if self.step == 0:
            return {"kind": "single", "value": self.base}
        return {"kind": "progression", "base": self.base, "step": self.step,
                "lo": self.lo, "hi": self.hi}


def _t_interval(x0: Sequence[int], kvec: Sequence[int], k: int):
    """Range of t with ``x0 + t*kvec`` nonnegative on semigroup indices (>= k)."""
    lo, hi = None, None
    for a, c in zip(x0[k:], kvec[k:]):
        if c > 0:
            b = _ceil_div(-a, c)
            lo = b if lo is None else max(lo, b)
        elif c < 0:
            b = a // (-c)
            hi = b if hi is None else min(hi, b)
        elif a < 0:
            return 1, 0
    return lo, hi


def sigma_set(mu: Weight, pres: SemigroupPresentation) -> SigmaSet:
    """All characters ``sigma`` (multiples of chi_0) with ``(mu, sigma)`` in Z."""
    A = pres._weight_matrix(with_char=False)
    if not A:
        A = [[0] * len(pres.gens)]
        b = [0]
    else:
        b = list(mu.flat())
    if not pres.gens:
        return SigmaSet.single(0) if mu.is_zero else SigmaSet.empty()
    sol = solve_integer(A, b)
    if sol is None:
        return SigmaSet.empty()
    x0, kernel = sol
    chars = [g.char for g in pres.gens]
    if len(kernel) > 1:
        raise ValueError("character part of rank > 1 is not supported")
    sigma0 = sum(a * c for a, c in zip(x0, chars))
    if not kernel:
        if any(a < 0 for a in x0[pres.k:]):
            return SigmaSet.empty()
        return SigmaSet.single(sigma0)
    kv = kernel[0]
    step = sum(a * c for a, c in zip(kv, chars))
    if step == 0:
        raise DependentGenerators("generators are linearly dependent")
    lo, hi = _t_interval(x0, kv, pres.k)
    return SigmaSet.progression(sigma0, step, lo, hi)


def _params(s: SigmaSet):
    if s.step == 0:
        return s.base, 0, 0, 0
    return s.base, s.step, s.lo, s.hi


def _r_range(t0: int, c: int, lo, hi):
    """Range of integers r with lo <= t0 + c*r <= hi (None bounds are infinite)."""
    if c == 0:
        ok = (lo is None or t0 >= lo) and (hi is None or t0 <= hi)
        return (None, None) if ok else (1, 0)
    rlo = rhi = None
    if c > 0:
        if lo is not None:
            rlo = _ceil_div(lo - t0, c)
        if hi is not None:
            rhi = (hi - t0) // c
    else:
        if lo is not None:
            rhi = (t0 - lo) // (-c)
        if hi is not None:
            rlo = _ceil_div(t0 - hi, -c)
    return rlo, rhi


def split_solutions(s1: SigmaSet, s2: SigmaSet, total: int):
    """Characters ``sigma`` with ``sigma in s1`` and ``total - sigma in s2``.

    Returns ``(count, example)`` where ``count`` is 0, 1 or 2 (2 meaning at
    least two solutions) and ``example`` is some solution or ``None``.
    """
    if s1.is_empty or s2.is_empty:
        return 0, None
    a, sa, alo, ahi = _params(s1)
    b, sb, blo, bhi = _params(s2)
    d = total - a - b  # need sa*t + sb*u = d
    if sa == 0 and sb == 0:
        return (1, a) if d == 0 else (0, None)
    g, x, y = _ext_gcd(sa, sb)
    if d % g:
        return 0, None
    t0, u0 = x * (d // g), y * (d // g)
    ct, cu = sb // g, -(sa // g)
    lo1, hi1 = _r_range(t0, ct, alo, ahi)
    lo2, hi2 = _r_range(u0, cu, blo, bhi)
    los = [v for v in (lo1, lo2) if v is not None]
    his = [v for v in (hi1, hi2) if v is not None]
    rlo = max(los) if los else None
    rhi = min(his) if his else None
    if rlo is not None and rhi is not None and rlo > rhi:
        return 0, None
    r = rlo if rlo is not None else (rhi if rhi is not None else 0)
    example = a + sa * (t0 + ct * r)
    if sa * ct == 0:
        return 1, example
    if rlo is not None and rlo == rhi:
        return 1, example
    return 2, example


# ---------------------------------------------------------------------------
# irreducibility

@dataclass
class SplitRecord:
    mu1: Weight
    mu2: Weight
    set1: SigmaSet
    set2: SigmaSet
    count: int
    example: Optional[int]

    def to_json(self) -> dict:
        return {"mu1": str(self.mu1), "mu2": str(self.mu2), "sigma1": self.set1.describe(),
                "sigma2": self.set2.describe(), "solutions": self.count, "example": self.example}


@dataclass
class IrreducibilityVerdict:
    generator: str
    method: str
    irreducible: bool
    splits: list = field(default_factory=list)
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"generator": self.generator, "method": self.method,
                "irreducible": self.irreducible, "detail": self.detail,
                "splits": [s.to_json() for s in self.splits]}


def enumerate_splits(lam: Weight):
    """Unordered splits ``lam = mu1 + mu2`` into nonzero dominant weights."""
    flat = lam.flat()
    seen = set()
    for c in product(*(range(x + 1) for x in flat)):
        other = tuple(x - y for x, y in zip(flat, c))
        if not any(c) or not any(other):
            continue
        key = min(c, other)
        if key in seen:
            continue
        seen.add(key)
        yield Weight.from_flat(lam.factors, c), Weight.from_flat(lam.factors, other)


def analyse_splits(i: int, pres: SemigroupPresentation) -> list[SplitRecord]:
    g = pres.gens[i]
    cache: dict = {}

    def sset(mu):
        if mu not in cache:
            cache[mu] = sigma_set(mu, pres)
        return cache[mu]

    out = []
    for mu1, mu2 in enumerate_splits(g.weight):
        s1, s2 = sset(mu1), sset(mu2)
        count, ex = split_solutions(s1, s2, g.char)
        out.append(SplitRecord(mu1, mu2, s1, s2, count, ex))
    return out


def check_irreducible_a1(i: int, pres: SemigroupPresentation) -> IrreducibilityVerdict:
    """True iff no split of generator ``i`` has both parts in Z."""
    splits = analyse_splits(i, pres)
    ok = all(s.count == 0 for s in splits)
    return IrreducibilityVerdict(pres.names[i], "a1", ok, splits)


def check_irreducible_a2(i: int, j: int, pres: SemigroupPresentation, witness: Any,
                         evaluate: Callable[[int, Any], Any]) -> IrreducibilityVerdict:
    """Uniqueness of the split through generator ``j`` plus a non-divisibility witness.

    ``evaluate(index, witness)`` must return the value of the function of
    generator ``index`` at the witness point.
    """
    if i == j:
        raise ValueError("a2 needs two distinct generators")
    gi, gj = pres.gens[i], pres.gens[j]
    splits = analyse_splits(i, pres)
    feasible = [s for s in splits if s.count > 0]
    rest = gi.weight - gj.weight
    unique = (
        len(feasible) == 1
        and feasible[0].count == 1
        and {feasible[0].mu1, feasible[0].mu2} == {gj.weight, rest}
    )
    if unique:
        s = feasible[0]
        sigma_j = s.example if s.mu1 == gj.weight else gi.char - s.example
        unique = sigma_j == gj.char
    fi = evaluate(i, witness)
    fj = evaluate(j, witness)
    divisibility_blocked = fj == 0 and fi != 0
    detail = {"through": pres.names[j], "unique_split": unique,
              "f_i(witness)": str(fi), "f_j(witness)": str(fj)}
    return IrreducibilityVerdict(pres.names[i], "a2", unique and divisibility_blocked, splits, detail)
