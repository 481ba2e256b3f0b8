"""Evaluation and exact verification of the weight-function catalog.

Every check draws its randomness from ``make_rng(seed, ...)`` keyed by the
case label, the function name and the trial index, so reports are
reproducible and independent of evaluation order.
"""
from __future__ import annotations

from fractions import Fraction

from .cases import CaseSpec, RelationSpec, WeightFunction, get_case
from .groups import (
    central_sp_embed,
    gram_columns_check,
    make_rng,
    random_element,
    random_torus,
    random_unipotent,
)
from .laurent import parse_monomial
from .weights import Sp, eval_on_torus

MAX_RESAMPLES = 50


class SamplingExhausted(RuntimeError):
    """Every sampled group element was a zero of the function under test."""


def evaluate_function(spec: CaseSpec, f, g) -> object:
    """Exact value of ``f`` (a WeightFunction or its name) at the group element ``g``."""
    if isinstance(f, str):
        f = spec.functions[f]
    return f(spec.context(g))


def act(spec: CaseSpec, g, t=None, u=None, h=None):
    """``t^-1 u^-1 g h`` factorwise; ``None`` arguments act trivially."""
    out = []
    emb = spec.embed(h) if h is not None else None
    tm = t.matrices() if t is not None else None
    for i, M in enumerate(g):
        if u is not None:
            M = u[i].inv() @ M
        if tm is not None:
            M = tm[i].inv() @ M
        if emb is not None:
            M = M @ emb[i]
        out.append(M)
    return tuple(out)


def sample_nonvanishing(spec: CaseSpec, names, rng):
    """Random g with every function in ``names`` nonzero."""
    for _ in range(MAX_RESAMPLES):
        g = spec.random_g(rng)
        vals = spec.evaluate_all(g)
        if all(vals[x] != 0 for x in names):
            return g, vals
    raise SamplingExhausted(f"{spec.label}: no sample with {', '.join(names)} nonzero "
                            f"after {MAX_RESAMPLES} tries")


def _trial_report(trial, ok, **extra):
    d = {"trial": trial, "pass": bool(ok)}
    d.update({k: str(v) for k, v in extra.items()})
    return d


def verify_equivariance(spec: CaseSpec, f, trials: int = 20, seed: int = 0) -> dict:
    """Check ``f(t^-1 u^-1 g h) = λ(t) χ0(h)^c f(g)`` exactly on random samples."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if isinstance(f, str):
        f = spec.functions[f]
    results = []
    for k in range(trials):
        rng = make_rng(seed, "equivariance", spec.label, f.name, k)
        g, vals = sample_nonvanishing(spec, [f.name], rng)
        u = tuple(random_unipotent(F, rng) for F in spec.factors)
        t = random_torus(spec.factors, rng)
        h = spec.random_h(rng)
        lhs = evaluate_function(spec, f, act(spec, g, t, u, h))
        rhs = eval_on_torus(f.weight.weight, t) * Fraction(spec.chi0(h)) ** f.weight.char * vals[f.name]
        results.append(_trial_report(k, lhs == rhs, lhs=lhs, rhs=rhs))
    return {"check": "equivariance", "function": f.name, "weight": str(f.weight),
            "trials": len(results), "failures": [r for r in results if not r["pass"]],
            "pass": all(r["pass"] for r in results)}


def verify_invariances(spec: CaseSpec, trials: int = 20, seed: int = 0) -> dict:
    """Left U-invariance and right H_0-invariance of every catalog function."""
    failures = []
    for k in range(trials):
        rng = make_rng(seed, "invariance", spec.label, k)
        g = spec.random_g(rng)
        base = spec.evaluate_all(g)
        u = tuple(random_unipotent(F, rng) for F in spec.factors)
        h0 = spec.random_h(rng, character_trivial=True)
        for label, g2 in (("left U", act(spec, g, u=u)), ("right H0", act(spec, g, h=h0))):
            vals = spec.evaluate_all(g2)
            bad = [x for x in base if vals[x] != base[x]]
            if bad:
                failures.append({"trial": k, "action": label, "functions": bad})
    return {"check": "invariance", "trials": trials, "failures": failures, "pass": not failures}


def relation_weight_balance(spec: CaseSpec, rel: RelationSpec) -> bool:
    weights = {x: f.weight for x, f in spec.functions.items()}
    zero = spec.zero_weight()
    lhs, rhs = parse_monomial(rel.lhs), parse_monomial(rel.rhs)
    return lhs.weight(weights, zero) == rhs.weight(weights, zero)


def verify_relations(spec: CaseSpec, trials: int = 20, seed: int = 0) -> dict:
    """Each relation is weight-balanced and holds exactly at random points.

    Points are resampled until every nonconstant function in the relation is
    nonzero, so the identity is never checked as ``0 = 0``.
    """
    out = []
    for rel in spec.relations:
        balanced = relation_weight_balance(spec, rel)
        lhs, rhs = parse_monomial(rel.lhs), parse_monomial(rel.rhs)
        unknown = [x for x in lhs.names + rhs.names if x not in spec.functions]
        if unknown:
            raise KeyError(f"relation {rel} uses unknown functions {unknown}")
        nonconstant = [x for x in sorted(set(lhs.names + rhs.names))
                       if spec.functions[x].constant is None]
        failures = []
        for k in range(trials):
            rng = make_rng(seed, "relation", spec.label, rel.name, k)
            _, vals = sample_nonvanishing(spec, nonconstant, rng)
            a, b = lhs.evaluate(vals), rhs.evaluate(vals)
            if a != b:
                failures.append(_trial_report(k, False, lhs=a, rhs=b))
        out.append({"relation": str(rel), "condition": rel.condition, "weight_balanced": balanced,
                    "trials": trials, "failures": failures, "pass": balanced and not failures})
    return {"check": "relations", "relations": out, "pass": all(r["pass"] for r in out)}


def verify_constants(spec: CaseSpec) -> dict:
    """Functions flagged as constant must carry the zero weight."""
    bad = [x for x, f in spec.functions.items()
           if f.constant is not None and f.weight != spec.zero_weight()]
    return {"check": "constant weights", "failures": bad, "pass": not bad}


def verify_central_invariance(spec: CaseSpec, trials: int = 20, seed: int = 0) -> dict:
    """Invariance under the centrally embedded symplectic factors, plus the Gram check."""
    failures = []
    gram_failures = []
    checked = []
    for fi, k in spec.central:
        N = spec.factors[fi].n
        if N - 2 * k < 2:
            continue
        checked.append({"factor": fi, "k": k})
        for trial in range(trials):
            rng = make_rng(seed, "central", spec.label, fi, trial)
            g = spec.random_g(rng)
            base = spec.evaluate_all(g)
            X = random_element(Sp(N - 2 * k), rng)
            g2 = tuple(M @ central_sp_embed(N // 2, k, X) if i == fi else M
                       for i, M in enumerate(g))
            vals = spec.evaluate_all(g2)
            bad = [x for x in base if vals[x] != base[x]]
            if bad:
                failures.append({"factor": fi, "trial": trial, "functions": bad})
            if not gram_columns_check(random_element(Sp(N), rng), k):
                gram_failures.append({"factor": fi, "trial": trial})
    return {"check": "central invariance", "factors": checked, "trials": trials,
            "failures": failures, "gram_failures": gram_failures,
            "pass": not failures and not gram_failures}


def verify_catalog(case: int, trials: int = 20, seed: int = 0, **params) -> dict:
    """Equivariance of every function plus relation identities for one parameter point."""
    spec = get_case(case, **params)
    eq = [verify_equivariance(spec, f, trials, seed) for f in spec.functions.values()]
    rel = verify_relations(spec, trials, seed)
    return {"case": case, "params": spec.params, "equivariance": eq, "relations": rel,
            "pass": all(r["pass"] for r in eq) and rel["pass"]}


__all__ = [
    "MAX_RESAMPLES", "SamplingExhausted", "WeightFunction", "act", "evaluate_function",
    "relation_weight_balance", "sample_nonvanishing", "verify_catalog",
    "verify_central_invariance", "verify_constants", "verify_equivariance",
    "verify_invariances", "verify_relations",
]
