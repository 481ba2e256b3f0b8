"""Irreducibility certificates for the generators of a case.

The generators split into a lattice part (inverted in the localization) and
a semigroup part; both parts enter the set Z of admissible weights.  Every
generator is certified either by the splitting test (``a1``) or, where a
registry witness exists, by the unique split plus a non-divisibility
witness (``a2``).  Irreducibility of all generators yields freeness of the
algebra of weight functions on these generators.
"""
from __future__ import annotations

from .cases import CaseSpec
from .semigroup import SemigroupPresentation, check_irreducible_a1, check_irreducible_a2


def presentation(spec: CaseSpec) -> SemigroupPresentation:
    fw = {x: spec.functions[x].weight for x in spec.functions}
    return SemigroupPresentation(tuple(fw[x] for x in spec.lattice),
                                 tuple(fw[x] for x in spec.semigroup),
                                 tuple(spec.lattice) + tuple(spec.semigroup))


def certify_case(spec: CaseSpec) -> dict:
    """Run the a1/a2 checks for every generator of ``spec``."""
    if not spec.semigroup and not spec.lattice:
        raise ValueError(f"{spec.label} has no generator functions to certify")
    pres = presentation(spec)
    witnesses = {w.generator: w for w in spec.a2}
    verdicts = []
    witness_reports = []
    for name in pres.names:
        i = pres.index(name)
        if name in witnesses:
            w = witnesses[name]
            j = pres.index(w.through)
            v = check_irreducible_a2(i, j, pres, w.point,
                                     lambda idx, pt: spec.evaluate(pres.names[idx], pt))
            values = {x: spec.evaluate(x, w.point) for x in w.expected}
            ok = all(values[x] == w.expected[x] for x in w.expected)
            witness_reports.append({"generator": name, "through": w.through,
                                    "values": {x: str(v_) for x, v_ in values.items()},
                                    "expected": {x: str(v_) for x, v_ in w.expected.items()},
                                    "pass": ok})
        else:
            v = check_irreducible_a1(i, pres)
        verdicts.append(v)
    return {"check": "irreducibility", "case": spec.case, "params": spec.params,
            "lattice": list(spec.lattice), "semigroup": list(spec.semigroup),
            "verdicts": [v.to_json() for v in verdicts], "witnesses": witness_reports,
            "pass": all(v.irreducible for v in verdicts) and all(w["pass"] for w in witness_reports)}
