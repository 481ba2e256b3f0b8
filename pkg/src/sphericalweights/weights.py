"""Weights, extended weights and torus elements for products of classical groups.

Weights are stored in fundamental-weight coordinates.  The epsilon view uses
the standard tables for types A, B, C, D; for SL_n the gl-convention
``pi_i = e_1 + ... + e_i`` with ``e_n = 0`` is used, so that
``pi_i(diag(t)) = t_1 ... t_i``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import Matrix, rank

KINDS = ("SL", "Sp", "SO")
FACTOR_LETTERS = ("π", "φ", "ψ")
HALF = Fraction(1, 2)


@dataclass(frozen=True)
class FactorType:
    """A classical factor ``SL_n``, ``Sp_n`` (n even) or ``SO_n``; ``n`` is the matrix size."""

    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown factor kind {self.kind!r}")
        if self.kind == "SL" and self.n < 2:
            raise ValueError("SL_n needs n >= 2")
        if self.kind == "Sp" and (self.n < 2 or self.n % 2):
            raise ValueError("Sp_n needs even n >= 2")
        if self.kind == "SO" and self.n < 3:
            raise ValueError("SO_n needs n >= 3")

    @property
    def rank(self) -> int:
        return self.n - 1 if self.kind == "SL" else self.n // 2

    @property
    def root_type(self) -> str:
        if self.kind == "SL":
            return "A"
        if self.kind == "Sp":
            return "C"
        return "B" if self.n % 2 else "D"

    def __str__(self) -> str:
        return f"{self.kind}{self.n}"


def SL(n: int) -> FactorType:
    return FactorType("SL", n)


def Sp(n: int) -> FactorType:
    """Symplectic group of matrix size ``n`` (so ``Sp(4)`` is Sp_4)."""
    return FactorType("Sp", n)


def SO(n: int) -> FactorType:
    return FactorType("SO", n)


@dataclass(frozen=True)
class Weight:
    """A weight of a product of classical groups, in fundamental coordinates."""

    factors: tuple[FactorType, ...]
    coeffs: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.factors) != len(self.coeffs):
            raise ValueError("one coefficient vector per factor expected")
        for f, c in zip(self.factors, self.coeffs):
            if len(c) != f.rank:
                raise ValueError(f"{f} has rank {f.rank}, got {len(c)} coefficients")

    @classmethod
    def zero(cls, factors: Sequence[FactorType]) -> "Weight":
        factors = tuple(factors)
        return cls(factors, tuple((0,) * f.rank for f in factors))

    @classmethod
    def fundamental(cls, factors: Sequence[FactorType], factor: int, i: int) -> "Weight":
        """The ``i``-th fundamental weight (1-based) of factor ``factor`` (0-based)."""
        w = cls.zero(factors)
        f = w.factors[factor]
        if not 1 <= i <= f.rank:
            raise ValueError(f"fundamental weight {i} out of range for {f}")
        coeffs = [list(c) for c in w.coeffs]
        coeffs[factor][i - 1] = 1
        return cls(w.factors, tuple(map(tuple, coeffs)))

    @property
    def is_dominant(self) -> bool:
        return all(x >= 0 for c in self.coeffs for x in c)

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for c in self.coeffs for x in c)

    def flat(self) -> tuple[int, ...]:
        return tuple(x for c in self.coeffs for x in c)

    @classmethod
    def from_flat(cls, factors: Sequence[FactorType], flat: Sequence[int]) -> "Weight":
        factors = tuple(factors)
        out, pos = [], 0
        for f in factors:
            out.append(tuple(int(x) for x in flat[pos:pos + f.rank]))
            pos += f.rank
        if pos != len(flat):
            raise ValueError("flat vector length does not match the factor ranks")
        return cls(factors, tuple(out))

    def _check(self, other: "Weight"):
        if self.factors != other.factors:
            raise ValueError("weights of different groups")

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(self.factors, tuple(
            tuple(a + b for a, b in zip(c, d)) for c, d in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Weight") -> "Weight":
        return self + (-other)

    def __neg__(self) -> "Weight":
        return Weight(self.factors, tuple(tuple(-a for a in c) for c in self.coeffs))

    def __mul__(self, k: int) -> "Weight":
        return Weight(self.factors, tuple(tuple(k * a for a in c) for c in self.coeffs))

    __rmul__ = __mul__

    def __str__(self) -> str:
        return format_weight(self)

    def to_json(self) -> dict:
        return {str(i): list(c) for i, c in enumerate(self.coeffs)}


@dataclass(frozen=True)
class ExtendedWeight:
    """A weight together with an integer multiple of the basis character chi_0."""

    weight: Weight
    char: int = 0

    @classmethod
    def zero(cls, factors: Sequence[FactorType]) -> "ExtendedWeight":
        return cls(Weight.zero(factors), 0)

    def __add__(self, other: "ExtendedWeight") -> "ExtendedWeight":
        return ExtendedWeight(self.weight + other.weight, self.char + other.char)

    def __sub__(self, other: "ExtendedWeight") -> "ExtendedWeight":
        return ExtendedWeight(self.weight - other.weight, self.char - other.char)

    def __mul__(self, k: int) -> "ExtendedWeight":
        return ExtendedWeight(self.weight * k, self.char * k)

    __rmul__ = __mul__

    def vector(self) -> tuple[int, ...]:
        return self.weight.flat() + (self.char,)

    def __str__(self) -> str:
        w = format_weight(self.weight)
        if self.char == 0:
            return w
        c = {1: "χ0", -1: "-χ0"}.get(self.char, f"{self.char}χ0")
        return f"({w}, {c})"

    def to_json(self) -> dict:
        d = self.weight.to_json()
        d["char"] = self.char
        return d


def weight_from_fundamental(factor: FactorType, coeffs: Sequence[int]) -> Weight:
    """Single-factor weight ``sum coeffs[i] * (i+1)-th fundamental weight``."""
    if len(coeffs) != factor.rank:
        raise ValueError(f"{factor} has rank {factor.rank}, got {len(coeffs)} coefficients")
    return Weight((factor,), (tuple(int(c) for c in coeffs),))


def weight_from_json(factors: Sequence[FactorType], data: dict) -> ExtendedWeight:
    factors = tuple(factors)
    coeffs = tuple(tuple(int(x) for x in data[str(i)]) for i in range(len(factors)))
    return ExtendedWeight(Weight(factors, coeffs), int(data.get("char", 0)))


def format_weight(w: Weight) -> str:
    terms = []
    for fi, c in enumerate(w.coeffs):
        letter = FACTOR_LETTERS[fi] if fi < len(FACTOR_LETTERS) else f"w{fi}_"
        for i, a in enumerate(c, start=1):
            if a == 0:
                continue
            coef = "" if a == 1 else ("-" if a == -1 else str(a))
            terms.append(f"{coef}{letter}{i}")
    if not terms:
        return "0"
    return "+".join(terms).replace("+-", "-")


# ---------------------------------------------------------------------------
# epsilon coordinates

def _fundamental_eps(factor: FactorType, i: int) -> list[Fraction]:
    """Epsilon coordinates of the i-th fundamental weight (1-based)."""
    r = factor.rank
    size = factor.n if factor.kind == "SL" else r
    v = [Fraction(0)] * size
    t = factor.root_type
    if t == "B" and i == r:
        return [HALF] * r
    if t == "D" and i >= r - 1:
        v = [HALF] * r
        if i == r - 1:
            v[-1] = -HALF
        return v
    for j in range(i):
        v[j] = Fraction(1)
    return v


def factor_to_epsilon(factor: FactorType, coeffs: Sequence[int], traceless: bool = False):
    size = factor.n if factor.kind == "SL" else factor.rank
    v = [Fraction(0)] * size
    for i, a in enumerate(coeffs, start=1):
        if a:
            v = [x + a * y for x, y in zip(v, _fundamental_eps(factor, i))]
    if traceless and factor.kind == "SL":
        s = sum(v) / size
        v = [x - s for x in v]
    return tuple(v)


def factor_from_epsilon(factor: FactorType, eps: Sequence) -> tuple[int, ...]:
    e = [Fraction(x) for x in eps]
    r = factor.rank
    t = factor.root_type
    c = [e[i] - e[i + 1] for i in range(r - 1)]
    if t == "A":
        c.append(e[r - 1] - e[r])
    elif t == "C":
        c.append(e[r - 1])
    elif t == "B":
        c.append(2 * e[r - 1])
    else:
        c.append(e[r - 2] + e[r - 1])
    for x in c:
        if x.denominator != 1:
            raise ValueError(f"epsilon vector {eps} is not in the weight lattice of {factor}")
    return tuple(int(x) for x in c)


def to_epsilon_coords(w: Weight, traceless: bool = False) -> tuple[tuple[Fraction, ...], ...]:
    """Per-factor epsilon coordinates (SL factors in the gl-convention unless ``traceless``)."""
    return tuple(factor_to_epsilon(f, c, traceless) for f, c in zip(w.factors, w.coeffs))


def from_epsilon_coords(factors: Sequence[FactorType], eps) -> Weight:
    factors = tuple(factors)
    return Weight(factors, tuple(factor_from_epsilon(f, e) for f, e in zip(factors, eps)))


# ---------------------------------------------------------------------------
# torus

@dataclass(frozen=True)
class TorusElement:
    """Diagonal torus element; ``params[i]`` holds the free parameters of factor i.

    SL_n stores ``t_1..t_{n-1}`` (``t_n`` is forced by det = 1); Sp_2m and SO_n
    store ``t_1..t_rank``.
    """

    factors: tuple[FactorType, ...]
    params: tuple[tuple, ...]

    def __post_init__(self):
        for f, p in zip(self.factors, self.params):
            if len(p) != f.rank:
                raise ValueError(f"{f} needs {f.rank} torus parameters")
            if any(x == 0 for x in p):
                raise ValueError("torus parameters must be nonzero")

    def full_diagonal(self, idx: int) -> tuple:
        f, p = self.factors[idx], [Fraction(x) for x in self.params[idx]]
        if f.kind == "SL":
            prod = Fraction(1)
            for x in p:
                prod *= x
            return tuple(p) + (1 / prod,)
        inv = tuple(1 / x for x in reversed(p))
        mid = (Fraction(1),) if f.n % 2 else ()
        return tuple(p) + mid + inv

    def matrices(self) -> tuple[Matrix, ...]:
        return tuple(Matrix.diag(self.full_diagonal(i)) for i in range(len(self.factors)))

    def __mul__(self, other: "TorusElement") -> "TorusElement":
        return TorusElement(self.factors, tuple(
            tuple(Fraction(a) * b for a, b in zip(p, q)) for p, q in zip(self.params, other.params)))


def eval_on_torus(w: Weight, t: TorusElement):
    """Value of the character ``w`` at ``t`` (exact); rejects half-integral SO weights."""
    if w.factors != t.factors:
        raise ValueError("weight and torus element belong to different groups")
    val = Fraction(1)
    for f, c, p in zip(w.factors, w.coeffs, t.params):
        eps = factor_to_epsilon(f, c)
        if f.kind == "SL":
            eps = eps[:-1]  # gl-convention: last coordinate is 0
        for e, x in zip(eps, p):
            if e.denominator != 1:
                raise ValueError(f"weight {format_weight(w)} is not a character of the {f} torus")
            val *= Fraction(x) ** int(e)
    return val.numerator if val.denominator == 1 else val


def rank_of_weights(ws: Sequence[ExtendedWeight]) -> int:
    """Rank over Q of the extended weights (fundamental coordinates plus character)."""
    return rank([w.vector() for w in ws])
