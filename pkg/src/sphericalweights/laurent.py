"""Laurent monomials in named functions, e.g. ``-D/Δ`` or ``F/(Δ1*Δ2)``.

Syntax: an optional sign and integer coefficient, factors separated by
``*`` (each optionally raised to ``^k``), then optionally ``/`` and a single
factor or a parenthesized product.  ``0`` and plain integers are allowed.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

_FACTOR = re.compile(r"^(?P<name>[^\s*/^()]+?)(\^(?P<exp>-?\d+))?$")


@dataclass(frozen=True)
class Monomial:
    coef: Fraction
    exps: tuple[tuple[str, int], ...] = ()

    def evaluate(self, values: Mapping[str, object]):
        if self.coef == 0:
            return 0
        v = Fraction(self.coef)
        for name, e in self.exps:
            x = Fraction(values[name])
            if e < 0 and x == 0:
                raise ZeroDivisionError(f"{name} vanishes")
            v *= x ** e
        return v.numerator if v.denominator == 1 else v

    def weight(self, weights: Mapping[str, object], zero):
        """Sum of ``exp * weight(name)``; ``zero`` is the additive identity."""
        w = zero
        for name, e in self.exps:
            w = w + weights[name] * e
        return w

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.exps)

    def __str__(self) -> str:
        if self.coef == 0:
            return "0"
        num = [n if e == 1 else f"{n}^{e}" for n, e in self.exps if e > 0]
        den = [n if e == -1 else f"{n}^{-e}" for n, e in self.exps if e < 0]
        c = self.coef
        sign = "-" if c < 0 else ""
        c = abs(c)
        head = "*".join(([str(c.numerator)] if c.numerator != 1 or not num else []) + num)
        den_c = [str(c.denominator)] if c.denominator != 1 else []
        den = den_c + den
        if not den:
            return sign + head
        d = den[0] if len(den) == 1 else "(" + "*".join(den) + ")"
        return f"{sign}{head}/{d}"


def _parse_product(s: str, sign: int, acc: dict) -> Fraction:
    coef = Fraction(1)
    for tok in s.split("*"):
        tok = tok.strip()
        if not tok:
            raise ValueError(f"empty factor in {s!r}")
        if re.fullmatch(r"-?\d+", tok):
            coef *= int(tok)
            continue
        m = _FACTOR.match(tok)
        if not m:
            raise ValueError(f"bad factor {tok!r}")
        e = int(m.group("exp") or 1)
        acc[m.group("name")] = acc.get(m.group("name"), 0) + sign * e
    return coef


def parse_monomial(text: str) -> Monomial:
    s = text.replace(" ", "")
    sign = 1
    while s.startswith(("-", "+")):
        if s[0] == "-":
            sign = -sign
        s = s[1:]
    if s == "0":
        return Monomial(Fraction(0))
    acc: dict = {}
    if "/" in s:
        num, den = s.split("/", 1)
        if den.startswith("(") and den.endswith(")"):
            den = den[1:-1]
        c = _parse_product(num, 1, acc) / _parse_product(den, -1, acc)
    else:
        c = _parse_product(s, 1, acc)
    exps = tuple(sorted((k, v) for k, v in acc.items() if v))
    return Monomial(sign * Fraction(c), exps)
