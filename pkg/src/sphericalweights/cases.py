"""Registry of the eight spherical pairs: groups, subgroups, weight functions, generators.

A group element is a tuple of exact matrices, one per factor of G.  An
element of H is an :class:`HElement` (matrices for the factors of H plus an
optional torus parameter ``t``); :meth:`CaseSpec.embed` maps it into G.

Function names use plain subscripts (``Δ1``, ``δ2``, ``Φ``) so they can be
used directly in relation and template strings.  A minor "on rows I and
columns J" always takes I and J in increasing order.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional, Sequence

from .exact import Matrix, _norm, omega
from .groups import (
    central_sp_embed,
    embed_block,
    random_element,
    random_torus_param,
)
from .spectrum import case1_table, case2_table
from .weights import SL, SO, ExtendedWeight, FactorType, Sp, Weight

CASES = tuple(range(1, 9))
CANONICAL_CASES = tuple(range(3, 9))
H_SAMPLE_LENGTH = 6
G_SAMPLE_LENGTH = 8

GroupElement = tuple  # tuple[Matrix, ...]


class CaseParameterError(ValueError):
    """Parameters outside a case's admissible range."""


@dataclass(frozen=True)
class HElement:
    parts: tuple  # Matrix per H factor, None for trivial factors
    t: object = None


@dataclass(frozen=True)
class WeightFunction:
    case: int
    name: str
    rule: Callable[[dict], object]
    weight: ExtendedWeight
    description: str = ""
    constant: Optional[int] = None  # identically this value for the current parameters

    def __call__(self, ctx: dict):
        return _norm(Fraction(self.rule(ctx)))


@dataclass(frozen=True)
class RelationSpec:
    case: int
    name: str
    lhs: str
    rhs: str
    condition: str = ""

    def __str__(self) -> str:
        return f"{self.lhs} = {self.rhs}"


@dataclass(frozen=True)
class A2Witness:
    generator: str
    through: str
    point: tuple
    expected: dict  # function name -> value at the point


@dataclass
class CaseSpec:
    case: int
    n: int
    m: Optional[int]
    l: Optional[int]
    factors: tuple
    h_factors: tuple  # FactorType or None (trivial factor)
    has_torus: bool
    chi0_exponent: int
    embed_fn: Callable[["CaseSpec", HElement], GroupElement]
    context_fn: Callable[[GroupElement], dict]
    functions: dict = field(default_factory=dict)
    generators: tuple = ()
    lattice: tuple = ()
    semigroup: tuple = ()
    relations: tuple = ()
    central: tuple = ()  # (factor index, k): Sp_{2m-2k} sits centrally in that factor
    a2: tuple = ()
    table_weights: tuple = ()  # generator weights when they do not come from functions

    # -- labels -------------------------------------------------------------
    @property
    def params(self) -> dict:
        out = {"n": self.n}
        if self.m is not None:
            out["m"] = self.m
        if self.l is not None:
            out["l"] = self.l
        return out

    @property
    def label(self) -> str:
        return f"case {self.case} " + " ".join(f"{k}={v}" for k, v in self.params.items())

    # -- H ------------------------------------------------------------------
    def identity_h(self) -> HElement:
        parts = tuple(None if f is None else Matrix.identity(f.n) for f in self.h_factors)
        return HElement(parts, 1 if self.has_torus else None)

    def random_h(self, rng: random.Random, character_trivial: bool = False) -> HElement:
        parts = tuple(None if f is None else random_element(f, rng, H_SAMPLE_LENGTH)
                      for f in self.h_factors)
        t = None
        if self.has_torus:
            t = 1 if character_trivial else random_torus_param(rng)
        return HElement(parts, t)

    def embed(self, h: HElement) -> GroupElement:
        return self.embed_fn(self, h)

    def chi0(self, h: HElement):
        if not self.has_torus:
            return 1
        return _norm(Fraction(h.t) ** self.chi0_exponent)

    # -- G ------------------------------------------------------------------
    def random_g(self, rng: random.Random) -> GroupElement:
        return tuple(random_element(f, rng, G_SAMPLE_LENGTH + f.n) for f in self.factors)

    def check_shape(self, g: GroupElement) -> None:
        if len(g) != len(self.factors):
            raise ValueError(f"{self.label} expects {len(self.factors)} matrices, got {len(g)}")
        for M, f in zip(g, self.factors):
            if M.shape != (f.n, f.n):
                raise ValueError(f"{self.label}: expected a {f.n}x{f.n} matrix for {f}, got {M.shape}")

    def context(self, g: GroupElement) -> dict:
        self.check_shape(g)
        return self.context_fn(tuple(g))

    def evaluate(self, name: str, g: GroupElement):
        return self.functions[name](self.context(g))

    def evaluate_all(self, g: GroupElement) -> dict:
        ctx = self.context(g)
        return {name: f(ctx) for name, f in self.functions.items()}

    # -- generators ---------------------------------------------------------
    def generator_weights(self) -> list:
        if self.table_weights:
            return list(self.table_weights)
        return [self.functions[g].weight for g in self.generators]

    def generator_names(self) -> list:
        if self.table_weights:
            return [str(w) for w in self.table_weights]
        return list(self.generators)

    def zero_weight(self) -> ExtendedWeight:
        return ExtendedWeight.zero(self.factors)


# ---------------------------------------------------------------------------
# weight strings such as "2π1+φ2"

_LETTERS = "πφψ"
_TERM = re.compile(r"^(\d*)([πφψ])(\d+)$")


def parse_weight(factors: Sequence[FactorType], text: str, char: int = 0) -> ExtendedWeight:
    """Parse ``"π1+2φ2"``; ``π0`` and indices equal to the SL size count as zero."""
    factors = tuple(factors)
    w = Weight.zero(factors)
    text = text.replace(" ", "")
    if text and text != "0":
        for term in text.split("+"):
            mt = _TERM.match(term)
            if not mt:
                raise ValueError(f"bad weight term {term!r}")
            k = int(mt.group(1) or 1)
            fi = _LETTERS.index(mt.group(2))
            i = int(mt.group(3))
            f = factors[fi]
            if i == 0 or (f.kind == "SL" and i == f.n):
                continue
            w = w + Weight.fundamental(factors, fi, i) * k
    return ExtendedWeight(w, char)


# ---------------------------------------------------------------------------
# shared helpers

def _corner(M: Matrix):
    """``m_{N-1,1} m_{N,N} - m_{N-1,N} m_{N,1}`` for a matrix of order N."""
    N = M.nrows
    return M.e(N - 1, 1) * M.e(N, N) - M.e(N - 1, N) * M.e(N, 1)


def _pair(M: Matrix, N: Matrix):
    """``m_{last,1} n_{last,last} - m_{last,last} n_{last,1}``."""
    a, b = M.nrows, N.nrows
    return M.e(a, 1) * N.e(b, b) - M.e(a, a) * N.e(b, 1)


def _last_rows(N: int, i: int) -> list:
    return list(range(N - i + 1, N + 1))


def _place(n: int, blocks) -> Matrix:
    """Identity of order ``n`` with commuting blocks placed at disjoint 0-based index sets."""
    M = Matrix.identity(n)
    for idx, X in blocks:
        if X is not None:
            M = M @ embed_block(n, idx, X)
    return M


def _sp_with_corner(N: int, central: Optional[Matrix], B: Matrix) -> Matrix:
    """Element of Sp_N with ``B`` on indices {1, N} and ``central`` in between."""
    blocks = [([0, N - 1], B)]
    if central is not None:
        blocks.append((list(range(1, N - 1)), central))
    return _place(N, blocks)


def _sp_or_none(size: int) -> Optional[FactorType]:
    return Sp(size) if size >= 2 else None


def _sl_or_none(size: int) -> Optional[FactorType]:
    return SL(size) if size >= 2 else None


def _wf(case, name, rule, weight, description="", constant=None) -> WeightFunction:
    return WeightFunction(case, name, rule, weight, description, constant)


def _require(cond: bool, msg: str):
    if not cond:
        raise CaseParameterError(msg)


# ---------------------------------------------------------------------------
# case 1: SL_n x SL_{n+1} > SL_n x C^x

def _case1(n: int) -> CaseSpec:
    _require(n >= 2, "case 1 needs n >= 2")
    factors = (SL(n), SL(n + 1))

    def embed(spec, h):
        A, t = h.parts[0], h.t
        return (A, Matrix.block_diag(A.scale(t), Matrix([[Fraction(t) ** -n]])))

    def context(g):
        P, Q = g
        return {"P": P, "Q": Q, "R": Q @ Matrix.block_diag(P, Matrix([[1]])).inv()}

    funcs = {}
    rows = lambda i: _last_rows(n + 1, i)
    for i in range(1, n + 1):
        funcs[f"Δ{i}"] = _wf(1, f"Δ{i}", lambda c, i=i: c["R"].minor(rows(i), list(range(1, i + 1))),
                             parse_weight(factors, f"π{i}+φ{n + 1 - i}", i),
                             f"last {i} rows, first {i} columns of R")
    for i in range(1, n + 1):
        funcs[f"δ{i}"] = _wf(1, f"δ{i}",
                             lambda c, i=i: c["R"].minor(rows(i), list(range(1, i)) + [n + 1]),
                             parse_weight(factors, f"π{i - 1}+φ{n + 1 - i}", -(n + 1 - i)),
                             f"last {i} rows, columns 1..{i - 1}, n+1 of R")
    gens = tuple(f"Δ{i}" for i in range(n, 0, -1)) + tuple(f"δ{i}" for i in range(n, 0, -1))
    return CaseSpec(1, n, None, None, factors, (SL(n),), True, 1, embed, context, funcs, gens)


# ---------------------------------------------------------------------------
# case 2: SO_n x SO_{n+1} > SO_n (functions at the SO level)

@lru_cache(maxsize=None)
def _case2_odd_frame(k: int):
    """Change of basis realizing SO_{2k+1} inside SO_{2k+2} (F-forms on both sides)."""
    N = 2 * k + 2
    cols = []
    for i in range(k):
        cols.append([int(r == i) for r in range(N)])
    cols.append([int(r in (k, k + 1)) for r in range(N)])  # e_{k+1} + e_{k+2}
    for i in range(k + 2, N):
        cols.append([int(r == i) for r in range(N)])
    cols.append([int(r == k + 1) - int(r == k) for r in range(N)])  # e_{k+2} - e_{k+1}
    S = Matrix(cols).T
    C = Matrix.diag([2] * k + [1] * (k + 1))
    return S, S.inv(), C, C.inv()


def case2_tau(n: int, P: Matrix) -> Matrix:
    """The embedding SO_n -> SO_{n+1} used for case 2."""
    if n % 2 == 0:
        k = n // 2
        idx = list(range(k)) + list(range(k + 1, 2 * k + 1))
        return embed_block(n + 1, idx, P)
    k = n // 2
    S, Si, C, Ci = _case2_odd_frame(k)
    return S @ Matrix.block_diag(C @ P @ Ci, Matrix([[1]])) @ Si


def case2_phi_columns(k: int) -> tuple:
    """Both readings of Φ's extra column when n = 2k+1; the first is the one in use.

    ``2[k/2]+2`` counted from the right is column ``2k+1-2[k/2]`` from the
    left; counted from the left it gives a minor that vanishes identically.
    """
    literal = 2 * (k // 2) + 2
    return 2 * k + 3 - literal, literal


def _case2_odd_phi_rule(k: int, col: int):
    rows = [k + 1] + list(range(k + 3, 2 * k + 3))
    cols = list(range(1, k + 1)) + [col]
    return lambda c: c["R"].minor(rows, cols)


def _case2(n: int, phi_column: Optional[int] = None) -> CaseSpec:
    _require(n >= 3, "case 2 needs n >= 3")
    factors = (SO(n), SO(n + 1))
    k = n // 2
    N = n + 1

    def embed(spec, h):
        P = h.parts[0]
        return (P, case2_tau(n, P))

    def context(g):
        P, Q = g
        return {"P": P, "Q": Q, "R": Q @ case2_tau(n, P).inv()}

    W = lambda s: parse_weight(factors, s)
    funcs = {}
    if n % 2 == 0:
        for i in range(1, k + 1):
            w = f"π{i}+φ{i}" if i <= k - 2 else (f"π{k - 1}+π{k}+φ{k - 1}" if i == k - 1
                                                 else f"2π{k}+2φ{k}")
            funcs[f"Δ{i}"] = _wf(2, f"Δ{i}", lambda c, i=i: c["R"].minor(_last_rows(N, i), list(range(1, i + 1))),
                                 W(w), f"last {i} rows, first {i} columns of R")
        for i in range(1, k + 1):
            w = f"π{i - 1}+φ{i}" if i <= k - 1 else f"π{k - 1}+π{k}+2φ{k}"
            funcs[f"δ{i}"] = _wf(2, f"δ{i}",
                                 lambda c, i=i: c["R"].minor(_last_rows(N, i), list(range(1, i)) + [k + 1]),
                                 W(w), f"last {i} rows, columns 1..{i - 1}, k+1 of R")
        funcs["Φ"] = _wf(2, "Φ", lambda c: c["R"].minor(_last_rows(N, k), list(range(1, k)) + [k + 2]),
                         W(f"2π{k - 1}+2φ{k}"), "last k rows, columns 1..k-1, k+2 of R")
        rels = (RelationSpec(2, "δk^2", f"δ{k}^2", f"-2*Δ{k}*Φ", "n = 2k"),)
    else:
        for i in range(1, k + 1):
            w = f"π{i}+φ{i}" if i <= k - 1 else f"2π{k}+φ{k}+φ{k + 1}"
            funcs[f"Δ{i}"] = _wf(2, f"Δ{i}", lambda c, i=i: c["R"].minor(_last_rows(N, i), list(range(1, i + 1))),
                                 W(w), f"last {i} rows, first {i} columns of R")
        for i in range(1, k + 2):
            if i <= k - 1:
                w = f"π{i - 1}+φ{i}"
            elif i == k:
                w = f"π{k - 1}+φ{k}+φ{k + 1}"
            else:
                w = f"2π{k}+2φ{k + 1}"
            funcs[f"δ{i}"] = _wf(
                2, f"δ{i}",
                lambda c, i=i: (c["R"].minor(_last_rows(N, i), list(range(1, i)) + [k + 1])
                                - c["R"].minor(_last_rows(N, i), list(range(1, i)) + [k + 2])),
                W(w), f"difference of the minors on the last {i} rows with leading column k+1 or k+2")
        col = phi_column if phi_column is not None else case2_phi_columns(k)[0]
        funcs["Φ"] = _wf(2, "Φ", _case2_odd_phi_rule(k, col), W(f"2π{k}+2φ{k}"),
                         f"rows k+1, k+3..2k+2 and columns 1..k, {col} of R")
        sign = "" if (k + 1) % 2 == 0 else "-"
        rels = (RelationSpec(2, "Δk^2", f"Δ{k}^2", f"{sign}δ{k + 1}*Φ", "n = 2k+1"),)
    return CaseSpec(2, n, None, None, factors, (SO(n),), False, 0, embed, context, funcs,
                    relations=rels, table_weights=tuple(case2_table(n)))


# ---------------------------------------------------------------------------
# cases 3 and 4: SL_n x Sp_2m > C^x x SL_{n-2} x SL_2 x Sp_{2m-2} (case 4 without C^x)

def _case34(case: int, n: int, m: int) -> CaseSpec:
    if case == 3:
        _require(n >= 3 and m >= 1, "case 3 needs n >= 3, m >= 1")
    else:
        _require(n >= 5 and m >= 1, "case 4 needs n >= 5, m >= 1")
    factors = (SL(n), Sp(2 * m))
    torus = case == 3
    a, b, chi_exp = (-2, n - 2, n - 2) if n % 2 else (-1, (n - 2) // 2, (n - 2) // 2)

    def embed(spec, h):
        A, B, C = h.parts
        G1 = _place(n, [(list(range(n - 2)), A), ([n - 2, n - 1], B)])
        if torus:
            t = Fraction(h.t)
            G1 = G1 @ Matrix.diag([t ** a] * (n - 2) + [t ** b] * 2)
        return (G1, _sp_with_corner(2 * m, C, B))

    def context(g):
        P, Q = g
        return {"P": P, "Q": Q, "Pi": P.inv()}

    def cof(c, i, j):  # cofactor P_{ij} = (P^-1)_{ji}
        return c["Pi"].e(j, i)

    ch = (lambda x: x) if torus else (lambda x: 0)
    W = lambda s, x=0: parse_weight(factors, s, ch(x))
    last2 = lambda c: (c["P"].e(n, n - 1), c["P"].e(n, n))
    qrow = lambda c: (c["Q"].e(2 * m, 1), c["Q"].e(2 * m, 2 * m))
    prow2 = lambda c: (c["P"].e(n - 1, n - 1), c["P"].e(n - 1, n))
    funcs = {
        "Δ": _wf(case, "Δ", lambda c: prow2(c)[0] * last2(c)[1] - prow2(c)[1] * last2(c)[0],
                 W(f"π{n - 2}", 2), "lower right 2x2 minor of P"),
        "W": _wf(case, "W", lambda c: _corner(c["Q"]), W("φ2" if m >= 2 else "0"),
                 "minor of Q on rows 2m-1, 2m and columns 1, 2m", 1 if m == 1 else None),
        "D": _wf(case, "D", lambda c: last2(c)[0] * qrow(c)[1] - last2(c)[1] * qrow(c)[0],
                 W(f"π{n - 1}+φ1", 1), "p_{n,n-1} q_{2m,2m} - p_{nn} q_{2m,1}"),
        "Φ1": _wf(case, "Φ1", lambda c: last2(c)[0] * cof(c, 1, n - 1) + last2(c)[1] * cof(c, 1, n),
                  W(f"π1+π{n - 1}", 0), "p_{n,n-1} P_{1,n-1} + p_{nn} P_{1,n} (cofactors)"),
        "Φ2": _wf(case, "Φ2", lambda c: qrow(c)[0] * cof(c, 1, n - 1) + qrow(c)[1] * cof(c, 1, n),
                  W("π1+φ1", -1), "q_{2m,1} P_{1,n-1} + q_{2m,2m} P_{1,n} (cofactors)"),
        "δ": _wf(case, "δ", lambda c: c["P"].minor(list(range(3, n + 1)), list(range(1, n - 1))),
                 W("π2", -2), "minor of P on rows 3..n and columns 1..n-2"),
    }
    rels = []
    if n == 3:
        rels.append(RelationSpec(case, "Φ1", "Φ1", "-δ*Δ", "n = 3"))
    if m == 1:
        rels.append(RelationSpec(case, "W", "W", "1", "m = 1"))
    w_gen = ("W",) if m >= 2 else ()
    if n == 3:
        lattice, semigroup = ("Δ", "D"), ("Φ2", "δ") + w_gen
        gens = ("Δ", "D", "Φ2", "δ") + w_gen
    else:
        lattice, semigroup = ("Δ", "D", "Φ1", "δ"), ("Φ2",) + w_gen
        gens = ("Δ", "D", "Φ1", "Φ2", "δ") + w_gen
    a2 = ()
    if n == 3:
        pt = (-Matrix.antidiag_ones(3), Matrix.identity(2 * m))
        a2 = (A2Witness("Φ2", "Δ", pt, {"Δ": 0, "Φ2": -1}),)
    h_factors = (_sl_or_none(n - 2), SL(2), _sp_or_none(2 * m - 2))
    return CaseSpec(case, n, m, None, factors, h_factors, torus, chi_exp if torus else 0, embed,
                    context, funcs, gens, lattice, semigroup, tuple(rels), ((1, 1),), a2)


# ---------------------------------------------------------------------------
# case 5: Sp_2n x Sp_2m > Sp_{2n-2} x Sp_2 x Sp_{2m-2}

def _case5(n: int, m: int) -> CaseSpec:
    _require(n >= 1 and m >= 1, "case 5 needs n, m >= 1")
    factors = (Sp(2 * n), Sp(2 * m))

    def embed(spec, h):
        A, B, C = h.parts
        return (_sp_with_corner(2 * n, A, B), _sp_with_corner(2 * m, C, B))

    W = lambda s: parse_weight(factors, s)
    funcs = {
        "Δ": _wf(5, "Δ", lambda c: _corner(c["P"]), W("π2" if n >= 2 else "0"),
                 "minor of P on rows 2n-1, 2n and columns 1, 2n", 1 if n == 1 else None),
        "δ": _wf(5, "δ", lambda c: _corner(c["Q"]), W("φ2" if m >= 2 else "0"),
                 "minor of Q on rows 2m-1, 2m and columns 1, 2m", 1 if m == 1 else None),
        "D": _wf(5, "D", lambda c: _pair(c["P"], c["Q"]), W("π1+φ1"),
                 "p_{2n,1} q_{2m,2m} - p_{2n,2n} q_{2m,1}"),
    }
    rels = []
    if n == 1:
        rels.append(RelationSpec(5, "Δ", "Δ", "1", "n = 1"))
    if m == 1:
        rels.append(RelationSpec(5, "δ", "δ", "1", "m = 1"))
    lattice = (("Δ",) if n >= 2 else ()) + ("D",)
    semigroup = ("δ",) if m >= 2 else ()
    return CaseSpec(5, n, m, None, factors, (_sp_or_none(2 * n - 2), Sp(2), _sp_or_none(2 * m - 2)),
                    False, 0, embed, lambda g: {"P": g[0], "Q": g[1]}, funcs,
                    lattice + semigroup, lattice, semigroup, tuple(rels), ((0, 1), (1, 1)))


# ---------------------------------------------------------------------------
# case 6: Sp_2n x Sp_4 > Sp_{2n-4} x Sp_4

def case6_iota(n: int, X: Matrix) -> Matrix:
    """Sp_4 on the indices {1, 2, 2n-1, 2n} of Sp_2n."""
    return embed_block(2 * n, [0, 1, 2 * n - 2, 2 * n - 1], X)


def _case6(n: int) -> CaseSpec:
    _require(n >= 3, "case 6 needs n >= 3")
    factors = (Sp(2 * n), Sp(4))
    N = 2 * n
    slice_cols = [0, 1, N - 2, N - 1]

    def embed(spec, h):
        A, B = h.parts
        G1 = case6_iota(n, B)
        if A is not None:
            G1 = G1 @ central_sp_embed(n, 2, A)
        return (G1, B)

    def context(g):
        P, Q = g
        R = P @ case6_iota(n, Q.inv())
        return {"P": P, "Q": Q, "R": R, "Rb": R.columns(slice_cols)}

    def d_rule(c):
        r = c["R"].e
        return (r(N, 1) * r(N - 1, N) - r(N - 1, 1) * r(N, N)
                + r(N, 2) * r(N - 1, N - 1) - r(N - 1, 2) * r(N, N - 1))

    def delta(i):
        return lambda c: c["Rb"].minor(_last_rows(N, i), list(range(1, i + 1)))

    def phi(c):
        return c["Rb"].minor(_last_rows(N, 3), [1, 2, 4])

    W = lambda s: parse_weight(factors, s)
    funcs = {
        "Δ1": _wf(6, "Δ1", delta(1), W("π1+φ1"), "last row, first column of the slice of R"),
        "Δ2": _wf(6, "Δ2", delta(2), W("π2+φ2"), "last 2 rows, first 2 slice columns of R"),
        "Δ3": _wf(6, "Δ3", delta(3), W("π3+φ1"), "last 3 rows, first 3 slice columns of R"),
        "Δ4": _wf(6, "Δ4", delta(4), W("π4" if n >= 4 else "π2"), "last 4 rows of the slice of R"),
        "D": _wf(6, "D", d_rule, W("π2"), "symplectic pairing of the last two rows of the slice"),
        "F": _wf(6, "F", lambda c: delta(1)(c) * phi(c) + c["R"].e(N, 2) * delta(3)(c),
                 W("π1+π3+φ2"), "Δ1 Φ + r_{2n,2} Δ3, Φ the slice minor on the last 3 rows and columns 1, 2, 4"),
    }
    lattice = ("Δ1", "Δ2", "Δ3")
    semigroup = (("Δ4",) if n >= 4 else ()) + ("D", "F")
    rels = (RelationSpec(6, "Δ4", "Δ4", "-D", "n = 3"),) if n == 3 else ()
    return CaseSpec(6, n, None, None, factors, (_sp_or_none(2 * n - 4), Sp(4)), False, 0, embed,
                    context, funcs, lattice + semigroup, lattice, semigroup, rels, ((0, 2),))


# ---------------------------------------------------------------------------
# case 7: Sp_2n x Sp_2m x Sp_2l > Sp_{2n-2} x Sp_{2m-2} x Sp_{2l-2} x Sp_2

def _case7(n: int, m: int, l: int) -> CaseSpec:
    _require(n >= 1 and m >= 1 and l >= 1, "case 7 needs n, m, l >= 1")
    factors = (Sp(2 * n), Sp(2 * m), Sp(2 * l))

    def embed(spec, h):
        A1, A2, A3, B = h.parts
        return (_sp_with_corner(2 * n, A1, B), _sp_with_corner(2 * m, A2, B),
                _sp_with_corner(2 * l, A3, B))

    W = lambda s: parse_weight(factors, s)
    sizes = {"Δ1": n, "Δ2": m, "Δ3": l}
    funcs = {
        "Δ1": _wf(7, "Δ1", lambda c: _corner(c["P"]), W("π2" if n >= 2 else "0"),
                  "corner minor of P", 1 if n == 1 else None),
        "Δ2": _wf(7, "Δ2", lambda c: _corner(c["Q"]), W("φ2" if m >= 2 else "0"),
                  "corner minor of Q", 1 if m == 1 else None),
        "Δ3": _wf(7, "Δ3", lambda c: _corner(c["R"]), W("ψ2" if l >= 2 else "0"),
                  "corner minor of R", 1 if l == 1 else None),
        "D1": _wf(7, "D1", lambda c: _pair(c["P"], c["Q"]), W("π1+φ1"), "p_{2n,1} q_{2m,2m} - p_{2n,2n} q_{2m,1}"),
        "D2": _wf(7, "D2", lambda c: _pair(c["Q"], c["R"]), W("φ1+ψ1"), "q_{2m,1} r_{2l,2l} - q_{2m,2m} r_{2l,1}"),
        "D3": _wf(7, "D3", lambda c: _pair(c["P"], c["R"]), W("π1+ψ1"), "p_{2n,1} r_{2l,2l} - p_{2n,2n} r_{2l,1}"),
    }
    rels = tuple(RelationSpec(7, k, k, "1", f"size {v}") for k, v in sizes.items() if v == 1)
    lattice = (("Δ1",) if n >= 2 else ()) + ("D1", "D3")
    semigroup = (("Δ2",) if m >= 2 else ()) + (("Δ3",) if l >= 2 else ()) + ("D2",)
    return CaseSpec(7, n, m, l, factors,
                    (_sp_or_none(2 * n - 2), _sp_or_none(2 * m - 2), _sp_or_none(2 * l - 2), Sp(2)),
                    False, 0, embed, lambda g: {"P": g[0], "Q": g[1], "R": g[2]}, funcs,
                    lattice + semigroup, lattice, semigroup, rels, ((0, 1), (1, 1), (2, 1)))


# ---------------------------------------------------------------------------
# case 8: Sp_2n x Sp_4 x Sp_2m > Sp_{2n-2} x Sp_2 x Sp_2 x Sp_{2m-2}

def _case8(n: int, m: int) -> CaseSpec:
    _require(n >= 1 and m >= 1, "case 8 needs n, m >= 1")
    factors = (Sp(2 * n), Sp(4), Sp(2 * m))

    def embed(spec, h):
        A1, B2, B3, A4 = h.parts
        return (_sp_with_corner(2 * n, A1, B2), _place(4, [([0, 3], B2), ([1, 2], B3)]),
                _sp_with_corner(2 * m, A4, B3))

    def d1(c):
        q = c["Q"].e
        return q(3, 1) * q(4, 4) - q(3, 4) * q(4, 1)

    def d2(c):
        q = c["Q"].e
        return q(3, 2) * q(4, 3) - q(3, 3) * q(4, 2)

    def e1(c):
        p, q, N = c["P"].e, c["Q"].e, 2 * n
        return p(N, 1) * q(4, 4) - p(N, N) * q(4, 1)

    def e2(c):
        r, q, M = c["R"].e, c["Q"].e, 2 * m
        return r(M, 1) * q(4, 3) - r(M, M) * q(4, 2)

    def big(c):
        p, q, r, N, M = c["P"].e, c["Q"].e, c["R"].e, 2 * n, 2 * m
        return (e2(c) * (p(N, 1) * q(3, 4) - p(N, N) * q(3, 1))
                - e1(c) * (r(M, 1) * q(3, 3) - r(M, M) * q(3, 2)))

    W = lambda s: parse_weight(factors, s)
    funcs = {
        "Δ1": _wf(8, "Δ1", d1, W("φ2"), "q31 q44 - q34 q41"),
        "Δ2": _wf(8, "Δ2", d2, W("φ2"), "q32 q43 - q33 q42"),
        "δ1": _wf(8, "δ1", e1, W("π1+φ1"), "p_{2n,1} q44 - p_{2n,2n} q41"),
        "δ2": _wf(8, "δ2", e2, W("φ1+ψ1"), "r_{2m,1} q43 - r_{2m,2m} q42"),
        "D1": _wf(8, "D1", lambda c: _corner(c["P"]), W("π2" if n >= 2 else "0"),
                  "corner minor of P", 1 if n == 1 else None),
        "D2": _wf(8, "D2", lambda c: _corner(c["R"]), W("ψ2" if m >= 2 else "0"),
                  "corner minor of R", 1 if m == 1 else None),
        "Δ": _wf(8, "Δ", big, W("π1+φ2+ψ1"),
                 "δ2 (p_{2n,1} q34 - p_{2n,2n} q31) - δ1 (r_{2m,1} q33 - r_{2m,2m} q32)"),
    }
    rels = [RelationSpec(8, "Δ2", "Δ2", "-Δ1")]
    if n == 1:
        rels.append(RelationSpec(8, "D1", "D1", "1", "n = 1"))
    if m == 1:
        rels.append(RelationSpec(8, "D2", "D2", "1", "m = 1"))
    lattice = ("Δ1", "δ1", "δ2")
    semigroup = (("D1",) if n >= 2 else ()) + (("D2",) if m >= 2 else ()) + ("Δ",)
    pt = (Matrix.identity(2 * n), omega(2), Matrix.identity(2 * m))
    a2 = (A2Witness("Δ", "Δ1", pt, {"Δ1": 0, "Δ": -1}),)
    return CaseSpec(8, n, m, None, factors,
                    (_sp_or_none(2 * n - 2), Sp(2), Sp(2), _sp_or_none(2 * m - 2)),
                    False, 0, embed, lambda g: {"P": g[0], "Q": g[1], "R": g[2]}, funcs,
                    lattice + semigroup, lattice, semigroup, tuple(rels), ((0, 1), (2, 1)), a2)


# ---------------------------------------------------------------------------

PARAM_NAMES = {1: ("n",), 2: ("n",), 3: ("n", "m"), 4: ("n", "m"), 5: ("n", "m"),
               6: ("n",), 7: ("n", "m", "l"), 8: ("n", "m")}

CONSTRAINTS = {1: "n >= 2", 2: "n >= 3", 3: "n >= 3, m >= 1", 4: "n >= 5, m >= 1",
               5: "n, m >= 1", 6: "n >= 3", 7: "n, m, l >= 1", 8: "n, m >= 1"}


def get_case(case: int, n: Optional[int] = None, m: Optional[int] = None,
             l: Optional[int] = None) -> CaseSpec:
    """Build the registry entry for ``case`` with the given parameters."""
    if case not in CASES:
        raise CaseParameterError(f"unknown case {case}; expected 1..8")
    given = {"n": n, "m": m, "l": l}
    for name in PARAM_NAMES[case]:
        if given[name] is None:
            raise CaseParameterError(f"case {case} needs --{name}")
    for name in ("n", "m", "l"):
        if name not in PARAM_NAMES[case] and given[name] is not None:
            raise CaseParameterError(f"case {case} takes no parameter {name}")
    builders = {
        1: lambda: _case1(n), 2: lambda: _case2(n), 3: lambda: _case34(3, n, m),
        4: lambda: _case34(4, n, m), 5: lambda: _case5(n, m), 6: lambda: _case6(n),
        7: lambda: _case7(n, m, l), 8: lambda: _case8(n, m),
    }
    return builders[case]()


def case2_with_phi_column(n: int, column: int) -> CaseSpec:
    """Case 2 registry entry with an explicit choice of Φ's last column (odd n only)."""
    if n % 2 == 0:
        raise ValueError("the column choice only exists for odd n")
    return _case2(n, column)


def parameter_grid(case: int, bound: int = 4) -> list:
    """Admissible parameter dicts with every parameter at most ``bound``.

    Case 4 has no admissible point with n <= 4; its grid uses n in {5, 6}.
    """
    out = []
    if case == 1:
        out = [{"n": n} for n in range(2, bound + 2)]
    elif case == 2:
        out = [{"n": n} for n in range(3, 9)]
    elif case == 3:
        out = [{"n": n, "m": m} for n in range(3, bound + 1) for m in range(1, bound + 1)]
    elif case == 4:
        out = [{"n": n, "m": m} for n in (5, 6) for m in range(1, bound + 1)]
    elif case in (5, 8):
        out = [{"n": n, "m": m} for n in range(1, bound + 1) for m in range(1, bound + 1)]
    elif case == 6:
        out = [{"n": n} for n in range(3, bound + 1)]
    elif case == 7:
        out = [{"n": n, "m": m, "l": l} for n in range(1, bound + 1)
               for m in range(1, bound + 1) for l in range(1, bound + 1)]
    return out


def table_generators(case: int, **params) -> list:
    """Generator weights of the extended weight semigroup, inclusion rules applied."""
    spec = get_case(case, **params)
    if case == 1:
        return case1_table(spec.n)
    return spec.generator_weights()
