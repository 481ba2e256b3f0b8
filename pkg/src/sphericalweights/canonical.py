"""Canonical forms for cases 3 to 8 and their reconstruction from function values.

A reduction is a list of steps.  Each step multiplies one factor on the left
by an upper unitriangular element of that factor (kind ``U``), or multiplies
the whole tuple on the right by an embedded element of the character-trivial
part of H (kind ``H``).  Unitriangular multipliers are found by solving the
affine system "these entries must vanish" in the free parameters of a
unipotent family; the free parameters left over are set to zero.

Symplectic factors with a centrally embedded subgroup are only normalized on
the columns that subgroup cannot touch (``1`` and ``2m``, or
``1, 2, 2n-1, 2n`` in case 6); these column slices are what gets returned.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .cases import CANONICAL_CASES, CaseSpec, HElement, case6_iota, get_case
from .exact import Matrix, omega, solve_rational
from .functions import SamplingExhausted, act, sample_nonvanishing
from .groups import (
    check_invariant_form,
    make_rng,
    random_unipotent,
    symplectic_type1,
    symplectic_type2,
)
from .laurent import parse_monomial


class ReductionError(ValueError):
    """The input violates a precondition of the reduction (it lies outside M)."""


class UnsupportedCase(ValueError):
    """No canonical form is available for this case."""


# ---------------------------------------------------------------------------
# affine solving in unipotent families

def solve_affine(family: Callable[[list], Matrix], nparams: int,
                 apply: Callable[[Matrix], Matrix], targets: dict):
    """Find parameters with ``apply(family(x))[i, j] == v`` for all ``(i, j): v`` in ``targets``.

    ``apply(family(x))`` must be affine in ``x`` on the targeted entries.
    Returns ``(multiplier, result)``.
    """
    zero = [0] * nparams
    base_mult = family(zero)
    base = apply(base_mult)
    if not targets:
        return base_mult, base
    keys = sorted(targets)
    cols = []
    for k in range(nparams):
        e = list(zero)
        e[k] = 1
        Mk = apply(family(e))
        cols.append([Mk[i, j] - base[i, j] for i, j in keys])
    A = [[cols[k][r] for k in range(nparams)] for r in range(len(keys))]
    b = [targets[key] - base[key] for key in keys]
    sol = solve_rational(A, b) if nparams else (None if any(b) else ([], []))
    if sol is None:
        raise ReductionError(f"no unipotent solution for targets {keys}")
    mult = family(sol[0])
    res = apply(mult)
    bad = [key for key in keys if res[key] != targets[key]]
    if bad:
        raise ReductionError(f"targets {bad} not reached (non-affine family?)")
    return mult, res


def _upper_entries(n: int) -> list:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def sl_unipotent_family(n: int, positions):
    positions = list(positions)

    def build(x):
        rows = [[int(i == j) for j in range(n)] for i in range(n)]
        for (i, j), v in zip(positions, x):
            rows[i][j] = v
        return Matrix(rows)
    return build, len(positions)


def sp_type1_family(m: int):
    """Type-1 unipotents of Sp_2m parametrized by their (linear) lower diagonal block W."""
    pos = _upper_entries(m)

    def build(x):
        rows = [[int(i == j) for j in range(m)] for i in range(m)]
        for (i, j), v in zip(pos, x):
            rows[i][j] = v
        W = Matrix(rows)
        return symplectic_type1(W.antitranspose().inv())
    return build, len(pos)


def sp_type2_family(m: int):
    """Type-2 unipotents ``[[E, C], [0, E]]`` with C antidiagonally symmetric."""
    pos = [(i, j) for i in range(m) for j in range(m) if i + j <= m - 1]

    def build(x):
        rows = [[0] * m for _ in range(m)]
        for (i, j), v in zip(pos, x):
            rows[i][j] = v
            rows[m - 1 - j][m - 1 - i] = v
        return symplectic_type2(Matrix(rows))
    return build, len(pos)


# ---------------------------------------------------------------------------
# two-column slices of symplectic matrices

_SURVIVOR = {"v1": (0, 1), "v2": (1, 0), "pair": (1, 1)}


def reduce_slice(X: Matrix, shape: str):
    """Normalize a ``2m x 2`` slice by an upper unitriangular element of Sp_2m.

    ``v1`` and ``v2`` are the two normal forms of ``two_column_reduce``; ``pair``
    is the shape used after the lower corner block has been brought to
    ``[[1, *], [0, Δ]]`` (the second column then survives in row 2).
    Returns ``(u, u X)``.
    """
    N = X.nrows
    m = N // 2
    if X.shape != (N, 2) or N % 2:
        raise ValueError("expected a 2m x 2 slice")
    if shape not in _SURVIVOR:
        raise ValueError(f"unknown slice shape {shape!r}")
    if m == 1:
        if shape == "v2":
            raise ReductionError("variant 2 needs m >= 2")
        fam, k = sp_type2_family(1)
        target = {(0, 0): 0} if shape == "v1" else {(0, 1): 0}
        return solve_affine(fam, k, lambda u: u @ X, target)
    col = 1 if shape == "pair" else 0
    if X[N - 1, col] == 0:
        raise ReductionError("the pivot entry of the last row vanishes")
    stage1 = {(r, c): 0 for r in range(m, N - 2) for c in (0, 1)}
    stage1[(N - 2, col)] = 0
    fam1, k1 = sp_type1_family(m)
    u1, X1 = solve_affine(fam1, k1, lambda u: u @ X, stage1)
    keep = _SURVIVOR[shape]
    stage2 = {(r, c): 0 for r in range(m) for c in (0, 1) if (r, c) != keep}
    fam2, k2 = sp_type2_family(m)
    u2, X2 = solve_affine(fam2, k2, lambda u: u @ X1, stage2)
    return u2 @ u1, X2


def two_column_expected(P: Matrix, variant: int) -> Matrix:
    """The two-column normal form predicted from ``p_{2m,1}``, ``p_{2m,2}`` and Δ."""
    N = P.nrows
    p, q = Fraction(P[N - 1, 0]), P[N - 1, 1]
    delta = P[N - 2, 0] * P[N - 1, 1] - P[N - 2, 1] * P[N - 1, 0]
    rows = [[0, 0] for _ in range(N)]
    if variant == 1:
        rows[0][1] = -1 / p
    else:
        rows[1][0] = -p / delta
    rows[N - 2][1] = -delta / p
    rows[N - 1] = [p, q]
    return Matrix(rows)


def two_column_reduce(P: Matrix, variant: int):
    """Bring a ``2m x 2`` matrix (m >= 2) to normal form 1 or 2 by a unitriangular symplectic u.

    Requires ``p_{2m,1} != 0``, ``Δ = p_{2m-1,1} p_{2m,2} - p_{2m-1,2} p_{2m,1} != 0``
    and ``P_1^T Ω P_2 = 1``.  Returns ``(u, u P)``.
    """
    N = P.nrows
    if P.ncols != 2 or N % 2 or N < 4:
        raise ValueError("two_column_reduce needs a 2m x 2 matrix with m >= 2")
    if variant not in (1, 2):
        raise ValueError("variant must be 1 or 2")
    delta = P[N - 2, 0] * P[N - 1, 1] - P[N - 2, 1] * P[N - 1, 0]
    if P[N - 1, 0] == 0:
        raise ReductionError("p_{2m,1} vanishes")
    if delta == 0:
        raise ReductionError("the lower 2x2 minor vanishes")
    c1, c2 = P.columns([0]), P.columns([1])
    if (c1.T @ omega(N // 2) @ c2)[0, 0] != 1:
        raise ReductionError("the columns do not pair to 1 under Ω")
    u, R = reduce_slice(P, "v1" if variant == 1 else "v2")
    if R != two_column_expected(P, variant):
        raise AssertionError("reduced slice differs from the expected normal form")
    return u, R


# ---------------------------------------------------------------------------
# pipelines

@dataclass
class Step:
    name: str
    kind: str  # "U" (left, one factor) or "H" (right, embedded subgroup element)
    factor: Optional[int]
    matrices: tuple  # U: (u,), H: the embedded tuple

    def to_json(self) -> dict:
        return {"step": self.name, "kind": self.kind, "factor": self.factor,
                "matrices": [M.to_json() for M in self.matrices]}


class _Run:
    def __init__(self, spec: CaseSpec, g):
        self.spec = spec
        self.g = list(g)
        self.steps: list = []

    def left(self, name: str, fi: int, u: Matrix):
        self.g[fi] = u @ self.g[fi]
        self.steps.append(Step(name, "U", fi, (u,)))

    def right(self, name: str, h: HElement):
        emb = self.spec.embed(h)
        self.g = [M @ E for M, E in zip(self.g, emb)]
        self.steps.append(Step(name, "H", None, emb))

    def h_element(self, **parts) -> HElement:
        """H element with the given parts (by position ``p0, p1, ...``), identity elsewhere."""
        base = self.spec.identity_h()
        new = list(base.parts)
        for key, X in parts.items():
            new[int(key[1:])] = X
        return HElement(tuple(new), base.t)

    def slice_step(self, name: str, fi: int, cols, shape: str):
        X = self.g[fi].columns(cols)
        u, _ = reduce_slice(X, shape)
        self.left(name, fi, u)


def _pair_h(L: Matrix, row: tuple) -> Matrix:
    """``h = L^-1 [[1, x], [0, det L]]`` with x chosen so that ``row @ h`` ends in 0."""
    d = L.det()
    if d == 0:
        raise ReductionError("singular corner block")
    Li = L.inv()
    a = row[0] * Li[0, 0] + row[1] * Li[1, 0]
    b = row[0] * Li[0, 1] + row[1] * Li[1, 1]
    if a == 0:
        raise ReductionError("partner row degenerates")
    x = -Fraction(b) * d / a
    return Li @ Matrix([[1, x], [0, d]])


def _corner_cols(N: int) -> list:
    return [0, N - 1]


def _last_row(M: Matrix) -> tuple:
    N = M.nrows
    return (M[N - 1, 0], M[N - 1, N - 1])


def _pipeline_34(run: _Run):
    spec = run.spec
    n, m = spec.n, spec.m
    P, Q = run.g
    L = P.submatrix([n - 2, n - 1], [n - 2, n - 1])
    run.right("H: SL2 block", run.h_element(p1=_pair_h(L, _last_row(Q))))
    run.slice_step("U2: two-column normal form of Q", 1, _corner_cols(2 * m), "v1")
    # clear columns n-1, n of P above the corner block
    pos = [(i, j) for i in range(n - 2) for j in (n - 2, n - 1)] + [(n - 2, n - 1)]
    targets = {(i, j): 0 for j in (n - 2, n - 1) for i in range(n) if i != j}
    fam, k = sl_unipotent_family(n, pos)
    P = run.g[0]
    u, _ = solve_affine(fam, k, lambda x: x @ P, targets)
    run.left("U1: clear the last two columns", 0, u)
    if n >= 4:
        P = run.g[0]
        B = P.submatrix(list(range(2, n)), list(range(n - 2)))
        d = B.det()
        if d == 0:
            raise ReductionError("δ vanishes")
        h1 = B.inv() @ Matrix.diag([1] * (n - 3) + [d])
        run.right("H: SL_{n-2} block", run.h_element(p0=h1))
        pos = [(0, j) for j in range(1, n - 2)] + [(1, j) for j in range(2, n - 2)]
        targets = {(0, j): 0 for j in range(n - 3)}
        targets.update({(1, j): 0 for j in range(n - 4)})
        fam, k = sl_unipotent_family(n, pos)
        P = run.g[0]
        u, _ = solve_affine(fam, k, lambda x: x @ P, targets)
        run.left("U1: clear the first two rows", 0, u)
    return {"P": run.g[0], "Qbar": run.g[1].columns(_corner_cols(2 * m))}


def _pipeline_5(run: _Run):
    spec = run.spec
    N, M = 2 * spec.n, 2 * spec.m
    P, Q = run.g
    L = P.submatrix([N - 2, N - 1], _corner_cols(N))
    run.right("H: Sp2 corner", run.h_element(p1=_pair_h(L, _last_row(Q))))
    run.slice_step("U1: slice of P", 0, _corner_cols(N), "pair")
    run.slice_step("U2: slice of Q", 1, _corner_cols(M), "v1")
    return {"Pbar": run.g[0].columns(_corner_cols(N)), "Qbar": run.g[1].columns(_corner_cols(M))}


def _pipeline_7(run: _Run):
    spec = run.spec
    N, M, K = 2 * spec.n, 2 * spec.m, 2 * spec.l
    P, Q, R = run.g
    L = P.submatrix([N - 2, N - 1], _corner_cols(N))
    run.right("H: Sp2 corner", run.h_element(p3=_pair_h(L, _last_row(Q))))
    run.slice_step("U1: slice of P", 0, _corner_cols(N), "pair")
    run.slice_step("U2: slice of Q", 1, _corner_cols(M), "v1")
    run.slice_step("U3: slice of R", 2, _corner_cols(K), "v1")
    return {"Pbar": run.g[0].columns(_corner_cols(N)), "Qbar": run.g[1].columns(_corner_cols(M)),
            "Rbar": run.g[2].columns(_corner_cols(K))}


def _pipeline_8(run: _Run):
    spec = run.spec
    N, M = 2 * spec.n, 2 * spec.m
    P, Q, R = run.g
    run.right("H: Sp2 on columns 1, 4 of Q",
              run.h_element(p1=_pair_h(Q.submatrix([2, 3], [0, 3]), _last_row(P))))
    P, Q, R = run.g
    run.right("H: Sp2 on columns 2, 3 of Q",
              run.h_element(p2=_pair_h(Q.submatrix([2, 3], [1, 2]), _last_row(R))))
    run.slice_step("U1: slice of P", 0, _corner_cols(N), "v1")
    run.slice_step("U3: slice of R", 2, _corner_cols(M), "v1")
    Q = run.g[1]
    fam, k = sp_type1_family(2)
    u, Q = solve_affine(fam, k, lambda x: x @ Q, {(2, 2): 0})
    run.left("U2: type 1", 1, u)
    fam, k = sp_type2_family(2)
    u, Q = solve_affine(fam, k, lambda x: x @ Q, {(0, 1): 0, (0, 3): 0, (1, 0): 0, (1, 1): 0, (1, 3): 0})
    run.left("U2: type 2", 1, u)
    return {"Pbar": run.g[0].columns(_corner_cols(N)), "Q": run.g[1],
            "Rbar": run.g[2].columns(_corner_cols(M))}


def _pipeline_6(run: _Run):
    spec = run.spec
    n = spec.n
    N = 2 * n
    S = [0, 1, N - 2, N - 1]
    run.right("H: Sp4 turns Q into E4", run.h_element(p1=run.g[1].inv()))
    # lower half of the slice
    targets = {}
    for r in range(n, N):
        width = {N - 4: 3, N - 3: 2, N - 2: 1, N - 1: 0}.get(r, 4)
        targets.update({(r, S[c]): 0 for c in range(width)})
    fam, k = sp_type1_family(n)
    P = run.g[0]
    u, _ = solve_affine(fam, k, lambda x: x @ P, targets)
    run.left("U1: type 1", 0, u)
    # right action of U2 through the embedding (Q stays E4)
    for label, (fam, k), tg in (
            ("type 1", _sp4_type1_family(), {(N - 1, 1): 0}),
            ("type 2", sp_type2_family(2), {(N - 1, N - 2): 0, (N - 1, N - 1): 0, (N - 2, N - 2): 0})):
        P = run.g[0]
        V, _ = solve_affine(fam, k, lambda x: P @ case6_iota(n, x), tg)
        run.left(f"U2: {label} (absorbed)", 1, V.inv())
        run.right(f"H: Sp4 {label}", run.h_element(p1=V))
    keep = {(0, 3), (1, 2), (2, 3)}
    targets = {(r, S[c]): 0 for r in range(n) for c in range(4) if (r, c) not in keep}
    fam, k = sp_type2_family(n)
    P = run.g[0]
    u, _ = solve_affine(fam, k, lambda x: x @ P, targets)
    run.left("U1: type 2", 0, u)
    return {"Rbar": run.g[0].columns(S), "Q": run.g[1]}


def _sp4_type1_family():
    def build(x):
        return symplectic_type1(Matrix([[1, x[0]], [0, 1]]))
    return build, 1


_PIPELINES = {3: _pipeline_34, 4: _pipeline_34, 5: _pipeline_5, 6: _pipeline_6,
              7: _pipeline_7, 8: _pipeline_8}


# ---------------------------------------------------------------------------
# templates (1-based positions; every other entry is 0)

def _v1_slice(N: int, p: str, top: str, mid: str, q: str = "0") -> dict:
    """Normal form 1 of a two-column slice: last row (p, q), (1,2) = top, (N-1,2) = mid."""
    if N == 2:
        return {(1, 2): top, (2, 1): p, (2, 2): q}
    return {(1, 2): top, (N - 1, 2): mid, (N, 1): p, (N, 2): q}


def _pair_slice(N: int, delta: str) -> dict:
    if N == 2:
        return {(1, 1): "1", (2, 2): delta}
    return {(2, 2): "-1", (N - 1, 1): "1", (N, 2): delta}


def _case34_p(n: int) -> dict:
    if n == 3:
        return {(1, 1): "1/Δ", (2, 1): "Φ2/D", (2, 2): "1", (3, 1): "δ", (3, 3): "Δ"}
    t = {(n - 1, n - 1): "1", (n, n): "Δ", (n, n - 2): "δ"}
    for i in range(3, n):
        t[(i, i - 2)] = "1"
    t.update({(1, n - 2): "-δ/Φ1", (2, n - 3): "Φ1/(Δ*δ)", (2, n - 2): "Φ2/D"})
    return t


def templates(spec: CaseSpec) -> dict:
    """Pattern of every canonical slice as ``{name: (shape, {(i, j): monomial})}``."""
    c, n, m = spec.case, spec.n, spec.m
    if c in (3, 4):
        return {"P": ((n, n), _case34_p(n)),
                "Qbar": ((2 * m, 2), _v1_slice(2 * m, "-D/Δ", "Δ/D", "W*Δ/D"))}
    if c == 5:
        return {"Pbar": ((2 * n, 2), _pair_slice(2 * n, "Δ")),
                "Qbar": ((2 * m, 2), _v1_slice(2 * m, "-D/Δ", "Δ/D", "δ*Δ/D"))}
    if c == 7:
        K = 2 * spec.l
        return {"Pbar": ((2 * n, 2), _pair_slice(2 * n, "Δ1")),
                "Qbar": ((2 * m, 2), _v1_slice(2 * m, "-D1/Δ1", "Δ1/D1", "Δ2*Δ1/D1")),
                "Rbar": ((K, 2), _v1_slice(K, "-D3/Δ1", "Δ1/D3", "Δ1*Δ3/D3", "-D2*Δ1/D1"))}
    if c == 8:
        return {"Pbar": ((2 * n, 2), _v1_slice(2 * n, "δ1/Δ1", "-Δ1/δ1", "-D1*Δ1/δ1")),
                "Q": ((4, 4), {(1, 1): "1/Δ1", (1, 3): "Δ/(δ1*δ2)", (2, 3): "-1",
                               (3, 1): "1", (3, 2): "1", (3, 4): "Δ1*Δ/(δ1*δ2)",
                               (4, 3): "Δ2", (4, 4): "Δ1"}),
                "Rbar": ((2 * m, 2), _v1_slice(2 * m, "δ2/Δ2", "-Δ2/δ2", "-D2*Δ2/δ2"))}
    if c == 6:
        N = 2 * n
        t = {(1, 4): "-1/Δ1", (2, 3): "Δ1/Δ2", (3, 4): "D/Δ3",
             (N - 2, 3): "Δ3/Δ2", (N - 2, 4): "F/(Δ1*Δ2)",
             (N - 1, 2): "-Δ2/Δ1", (N - 1, 4): "D/Δ1", (N, 1): "Δ1"}
        if n >= 4:
            t[(N - 3, 4)] = "-Δ4/Δ3"
        return {"Rbar": ((N, 4), t),
                "Q": ((4, 4), {(i, i): "1" for i in range(1, 5)})}
    raise UnsupportedCase(f"case {c} has no canonical form; cases 1 and 2 are handled by spectra")


def template_strings(spec: CaseSpec) -> dict:
    """Templates as full matrices of strings (for display)."""
    out = {}
    for name, ((r, c), entries) in templates(spec).items():
        out[name] = [[entries.get((i, j), "0") for j in range(1, c + 1)] for i in range(1, r + 1)]
    return out


def evaluate_template(spec: CaseSpec, values: dict) -> dict:
    out = {}
    for name, ((r, c), entries) in templates(spec).items():
        rows = [[0] * c for _ in range(r)]
        for (i, j), text in entries.items():
            rows[i - 1][j - 1] = parse_monomial(text).evaluate(values)
        out[name] = Matrix(rows)
    return out


def template_names(spec: CaseSpec) -> set:
    names = set()
    for _, entries in templates(spec).values():
        for text in entries.values():
            names.update(parse_monomial(text).names)
    return names


# ---------------------------------------------------------------------------
# public entry points

def _check_supported(spec: CaseSpec):
    if spec.case not in CANONICAL_CASES:
        raise UnsupportedCase(f"case {spec.case} has no canonical form; cases 1 and 2 are handled by spectra")


def localized_functions(spec: CaseSpec) -> list:
    """Functions required to be nonzero on M."""
    return [x for x, f in spec.functions.items() if f.constant is None]


def reduce_to_canonical(spec: CaseSpec, g):
    """Run the case's pipeline on ``g``.

    Returns ``(slices, final, steps)``: the canonical slices, the full reduced
    tuple and the list of :class:`Step` multipliers applied.
    """
    _check_supported(spec)
    spec.check_shape(g)
    vals = spec.evaluate_all(g)
    zero = [x for x in localized_functions(spec) if vals[x] == 0]
    if zero:
        raise ReductionError(f"g lies outside M: {', '.join(zero)} vanish")
    run = _Run(spec, g)
    slices = _PIPELINES[spec.case](run)
    return slices, tuple(run.g), run.steps


def check_steps(spec: CaseSpec, steps) -> list:
    """Problems with the multipliers of a transcript (empty when all are in U or in H)."""
    problems = []
    for s in steps:
        if s.kind == "U":
            F = spec.factors[s.factor]
            u = s.matrices[0]
            if not (u.is_upper_unitriangular() and check_invariant_form(u, F)):
                problems.append(f"{s.name}: multiplier not in U of {F}")
        else:
            for F, M in zip(spec.factors, s.matrices):
                if not check_invariant_form(M, F):
                    problems.append(f"{s.name}: multiplier not in {F}")
    return problems


def reconstruct_check(case: int, trials: int = 20, seed: int = 0, **params) -> dict:
    """Compare canonical slices with their templates on random points of M.

    Each trial also checks that every function value survives each pipeline
    step, that every multiplier lies in U or in H, that reducing the output
    again changes nothing, and that a second point of the same orbit (under
    U and the character-trivial part of H) gives the same slices.
    """
    spec = get_case(case, **params)
    _check_supported(spec)
    if trials < 1:
        raise ValueError("trials must be >= 1")
    loc = localized_functions(spec)
    missing = template_names(spec) - set(spec.functions)
    if missing:
        raise KeyError(f"template uses unknown functions {sorted(missing)}")
    failures = []
    for k in range(trials):
        rng = make_rng(seed, "canonical", spec.label, k)
        g, vals = sample_nonvanishing(spec, loc, rng)
        slices, final, steps = reduce_to_canonical(spec, g)
        problems = check_steps(spec, steps)
        cur = g
        for s in steps:
            if s.kind == "U":
                cur = tuple(s.matrices[0] @ M if i == s.factor else M for i, M in enumerate(cur))
            else:
                cur = tuple(M @ E for M, E in zip(cur, s.matrices))
            if spec.evaluate_all(cur) != vals:
                problems.append(f"{s.name}: function values changed")
        expected = evaluate_template(spec, vals)
        for name, M in slices.items():
            if M != expected[name]:
                problems.append(f"slice {name} differs from its template")
        again, final2, steps2 = reduce_to_canonical(spec, final)
        if again != slices or final2 != final:
            problems.append("reduction is not idempotent")
        if any(any(M != Matrix.identity(M.nrows) for M in s.matrices) for s in steps2):
            problems.append("second reduction used non-identity multipliers")
        u = tuple(random_unipotent(F, rng) for F in spec.factors)
        h0 = spec.random_h(rng, character_trivial=True)
        other, _, _ = reduce_to_canonical(spec, act(spec, g, u=u, h=h0))
        if other != slices:
            problems.append("orbit representative differs")
        if problems:
            failures.append({"trial": k, "problems": problems})
    return {"check": "canonical", "case": case, "params": spec.params, "trials": trials,
            "failures": failures, "pass": not failures}


def canonical_report(spec: CaseSpec, g) -> dict:
    slices, _, steps = reduce_to_canonical(spec, g)
    return {"slices": {k: v.to_json() for k, v in slices.items()},
            "templates": template_strings(spec),
            "transcript": [s.to_json() for s in steps]}


__all__ = [
    "ReductionError", "SamplingExhausted", "Step", "UnsupportedCase", "canonical_report",
    "check_steps", "evaluate_template", "reconstruct_check", "reduce_slice",
    "reduce_to_canonical", "solve_affine", "template_strings", "templates",
    "two_column_expected", "two_column_reduce",
]
