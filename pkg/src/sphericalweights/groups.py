"""Exact matrix realizations of SL_n, Sp_2m and SO_n with random sampling.

Sp_2m preserves ``omega(m)`` and SO_n preserves the antidiagonal form F_n,
so upper triangular matrices form a Borel subgroup in every factor.
"""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .exact import Matrix, omega
from .weights import FactorType, TorusElement

PARAM_RANGE = (-3, 3)


def make_rng(seed, *labels) -> random.Random:
    """Deterministic stream keyed by ``seed`` and any labels (trial index, case, ...)."""
    return random.Random(":".join(str(x) for x in (seed,) + labels))


def _nonzero(rng: random.Random) -> int:
    lo, hi = PARAM_RANGE
    while True:
        s = rng.randint(lo, hi)
        if s:
            return s


def unit(n: int, i: int, j: int, s=1) -> Matrix:
    """Matrix unit ``s * E_ij`` (0-based)."""
    rows = [[0] * n for _ in range(n)]
    rows[i][j] = s
    return Matrix(rows)


def form_matrix(factor: FactorType) -> Matrix:
    if factor.kind == "Sp":
        return omega(factor.n // 2)
    if factor.kind == "SO":
        return Matrix.antidiag_ones(factor.n)
    raise ValueError(f"{factor} has no invariant bilinear form")


def check_invariant_form(M: Matrix, factor: FactorType) -> bool:
    """True iff ``M`` satisfies the defining equations of ``factor`` exactly."""
    if M.shape != (factor.n, factor.n):
        raise ValueError(f"size mismatch: {M.shape} for {factor}")
    if factor.kind == "SL":
        return M.det() == 1
    F = form_matrix(factor)
    if M.T @ F @ M != F:
        return False
    return factor.kind == "Sp" or M.det() == 1


def symplectic_type1(P: Matrix) -> Matrix:
    """``diag(P, (P^-1)^#)``, symplectic for every invertible ``P``."""
    if P.det() == 0:
        raise ValueError("symplectic_type1 needs an invertible matrix")
    return Matrix.block_diag(P, P.inv().antitranspose())


def symplectic_type2(C: Matrix) -> Matrix:
    """``[[E, C], [0, E]]``; symplectic iff ``C`` is symmetric about the antidiagonal."""
    if C.antitranspose() != C:
        raise ValueError("symplectic_type2 needs an antidiagonally symmetric matrix")
    m = C.nrows
    rows = [[int(i == j) for j in range(2 * m)] for i in range(2 * m)]
    for i in range(m):
        for j in range(m):
            rows[i][m + j] = C[i, j]
    return Matrix(rows)


def _elementary_type1(m: int, i: int, j: int, s) -> Matrix:
    """``symplectic_type1(E + s E_ij)`` without a matrix inversion."""
    rows = [[int(a == b) for b in range(2 * m)] for a in range(2 * m)]
    rows[i][j] = s
    rows[2 * m - 1 - j][2 * m - 1 - i] = -s
    return Matrix(rows)


def random_antisym_c(m: int, rng: random.Random) -> Matrix:
    """Random integer matrix symmetric about the antidiagonal."""
    lo, hi = PARAM_RANGE
    rows = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(m - i):
            v = rng.randint(lo, hi)
            rows[i][j] = v
            rows[m - 1 - j][m - 1 - i] = v
    return Matrix(rows)


def random_upper_unitriangular(n: int, rng: random.Random) -> Matrix:
    lo, hi = PARAM_RANGE
    return Matrix([[1 if i == j else (rng.randint(lo, hi) if j > i else 0) for j in range(n)]
                   for i in range(n)])


def so_root_element(n: int, i: int, j: int, s) -> Matrix:
    """``exp(s X)`` for the F_n-skew root vector ``X = E_ij - E_{j'i'}`` (0-based, ``i' = n-1-i``)."""
    ip, jp = n - 1 - i, n - 1 - j
    if i == j or j == ip:
        raise ValueError("not a root vector")
    X = unit(n, i, j) - unit(n, jp, ip)
    X2 = X @ X
    return Matrix.identity(n) + X.scale(s) + X2.scale(Fraction(s * s, 2))


def _so_pairs(n: int):
    """One (i, j) with i < j per positive root vector of SO_n."""
    return [(i, j) for i in range(n) for j in range(i + 1, n) if i + j < n - 1]


def _generator(factor: FactorType, rng: random.Random) -> Matrix:
    n = factor.n
    if factor.kind == "SL":
        i, j = rng.sample(range(n), 2)
        return Matrix.identity(n) + unit(n, i, j, _nonzero(rng))
    if factor.kind == "Sp":
        m = n // 2
        kind = rng.randrange(4)
        if kind < 2:
            if m == 1:
                g = symplectic_type2(Matrix([[_nonzero(rng)]]))
            else:
                i, j = rng.sample(range(m), 2)
                g = _elementary_type1(m, i, j, _nonzero(rng))
        else:
            g = symplectic_type2(random_antisym_c(m, rng))
        return g if kind % 2 == 0 else g.T
    upper = rng.random() < 0.5
    i, j = rng.choice(_so_pairs(n))
    g = so_root_element(n, i, j, _nonzero(rng))
    return g if upper else g.T


def random_element(factor: FactorType, seed_or_rng, length: int = 8) -> Matrix:
    """Product of ``length`` random generators of ``factor`` (upper and lower unipotents)."""
    rng = seed_or_rng if isinstance(seed_or_rng, random.Random) else make_rng(seed_or_rng)
    M = Matrix.identity(factor.n)
    for _ in range(length):
        M = M @ _generator(factor, rng)
    return M


def random_unipotent(factor: FactorType, rng: random.Random) -> Matrix:
    """Random element of the upper unitriangular subgroup of ``factor``."""
    n = factor.n
    if factor.kind == "SL":
        return random_upper_unitriangular(n, rng)
    if factor.kind == "Sp":
        m = n // 2
        return symplectic_type1(random_upper_unitriangular(m, rng)) @ symplectic_type2(
            random_antisym_c(m, rng))
    M = Matrix.identity(n)
    for i, j in _so_pairs(n):
        if rng.random() < 0.7:
            M = M @ so_root_element(n, i, j, rng.randint(*PARAM_RANGE))
    return M


_TORUS_VALUES = (1, -1, 2, -2, 3, -3, Fraction(1, 2), Fraction(-2, 3), Fraction(3, 2))


def random_torus_param(rng: random.Random):
    return rng.choice(_TORUS_VALUES)


def random_torus(factors: Sequence[FactorType], rng: random.Random) -> TorusElement:
    factors = tuple(factors)
    return TorusElement(factors, tuple(
        tuple(random_torus_param(rng) for _ in range(f.rank)) for f in factors))


def gram_columns_check(Q: Matrix, k: int) -> bool:
    """True iff the first ``k`` and last ``k`` columns of ``Q`` have Gram matrix Omega_2k."""
    n = Q.nrows
    m = n // 2
    if not 1 <= k <= m:
        raise ValueError("need 1 <= k <= m")
    C = Q.columns(list(range(k)) + list(range(n - k, n)))
    return C.T @ omega(m) @ C == omega(k)


def embed_block(n: int, idx: Sequence[int], X: Matrix) -> Matrix:
    """Identity of order ``n`` with ``X`` placed at rows/columns ``idx`` (0-based)."""
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    for a, i in enumerate(idx):
        for b, j in enumerate(idx):
            rows[i][j] = X[a, b]
    return Matrix(rows)


def central_sp_embed(m: int, k: int, X: Matrix) -> Matrix:
    """Sp_{2m-2k} placed as the central block of Sp_2m."""
    return embed_block(2 * m, list(range(k, 2 * m - k)), X)
