"""Pairing tables over the universal coefficient ring.

Before a group is chosen, the sigma_j are integer polynomials in the symbols
``V*``, ``lambda^k(V*)`` (2 <= k < n) and ``delta* = lambda^n(V*)``.  Running
the same row recursion as :mod:`ktdual.ktheory` over that ring yields every
pairing ``<y^i, y^j>`` as a polynomial, which is then written ``1 - delta* * P``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import sympy as sp

from .ktheory import lambda_rows, sigma_from_exterior_powers

__all__ = [
    "DELTA",
    "VSTAR",
    "exterior_symbol",
    "universal_sigma",
    "universal_lambda_rows",
    "GenericEntry",
    "generic_entry",
    "generic_table",
    "general_inner_term",
    "format_poly",
]

DELTA = sp.Symbol("delta*")
VSTAR = sp.Symbol("V*")


@lru_cache(maxsize=None)
def exterior_symbol(k: int) -> sp.Symbol:
    if k == 1:
        return VSTAR
    return sp.Symbol(f"lambda{k}(V*)")


def _generators(n: int) -> list[sp.Symbol]:
    return [VSTAR] + [exterior_symbol(k) for k in range(2, n)] + [DELTA]


@lru_cache(maxsize=None)
def universal_sigma(n: int) -> tuple[sp.Expr, ...]:
    lam = [sp.Integer(1), VSTAR] + [exterior_symbol(k) for k in range(2, n)] + [DELTA]
    lam = lam[: n + 1] if n > 1 else [sp.Integer(1), DELTA]
    return tuple(sp.expand(s) for s in sigma_from_exterior_powers(lam, n, sp.Integer(1)))


@lru_cache(maxsize=None)
def universal_lambda_rows(n: int, count: int) -> tuple[tuple[sp.Expr, ...], ...]:
    sigma = universal_sigma(n)
    rows: list[list[sp.Expr]] = []
    for s in range(count):
        rows = lambda_rows(sigma, s + 1, rows)
        rows[-1] = [sp.expand(x) for x in rows[-1]]
    return tuple(tuple(r) for r in rows)


def general_inner_term(n: int, s: int) -> sp.Expr:
    """1 + lam[0][n-1] + ... + lam[s-1][n-1] over the universal ring."""
    rows = universal_lambda_rows(n, max(s, 1))
    return sp.expand(1 + sum((rows[t][n - 1] for t in range(s)), sp.Integer(0)))




def _weight(sym: sp.Symbol, n: int) -> int:
    if sym == VSTAR:
        return 1
    if sym == DELTA:
        return n
    return int(sym.name[len("lambda"):].split("(")[0])


def _mono_text(powers: dict, latex: bool) -> str:
    out = []
    for sym, e in powers.items():
        if sym == VSTAR:
            base = "V^*" if latex else "V*"
            out.append(base if e == 1 else f"({base})^{e}" if not latex else f"({base})^{{{e}}}")
        elif sym == DELTA:
            base = "\\delta^*" if latex else "δ*"
            out.append(base if e == 1 else (f"({base})^{{{e}}}" if latex else f"({base})^{e}"))
        else:
            k = sym.name[len("lambda"):].split("(")[0]
            base = f"\\lambda^{{{k}}}(V^*)" if latex else f"λ^{k}(V*)"
            out.append(base if e == 1 else (f"({base})^{{{e}}}" if latex else f"({base})^{e}"))
    return "".join(out)


def format_poly(expr: sp.Expr, n: int, latex: bool = False) -> str:
    """Constant first, then monomials by total exterior degree, higher V* powers first."""
    expr = sp.expand(expr)
    if expr == 0:
        return "0"
    gens = _generators(n)
    poly = sp.Poly(expr, *gens)
    terms = []
    for exps, coeff in poly.terms():
        weight = sum(e * _weight(g, n) for g, e in zip(gens, exps))
        terms.append(((weight, tuple(-e for e in exps)), exps, int(coeff)))
    terms.sort()
    out = ""
    for _, exps, c in terms:
        powers = {g: e for g, e in zip(gens, exps) if e}
        mono = _mono_text(powers, latex)
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}{mono}"
        if not out:
            out = ("-" if c < 0 else "") + body
        else:
            out += ("-" if c < 0 else "+") + body
    return out


@dataclass(frozen=True)
class GenericEntry:
    """A pairing value 1 - delta* * inner (inner is None if no such factorisation exists)."""

    n: int
    power: int
    epsilon: sp.Expr
    inner: sp.Expr | None

    def text(self, latex: bool = False) -> str:
        if self.inner is None:
            return format_poly(self.epsilon, self.n, latex)
        d = "\\delta^*" if latex else "δ*"
        inner = sp.expand(self.inner)
        if inner == 0:
            return "1"
        if inner == 1:
            return f"1-{d}"
        return f"1-{d}({format_poly(inner, self.n, latex)})"


@lru_cache(maxsize=None)
def generic_entry(n: int, i: int, j: int) -> GenericEntry:
    """<y^i, y^j> = epsilon(y^(i+j)) over the universal ring."""
    m = i + j
    if m < n:
        eps = sp.Integer(1)
    else:
        eps = sp.expand(sum(universal_lambda_rows(n, m - n + 1)[m - n], sp.Integer(0)))
    q, r = sp.div(sp.expand(1 - eps), DELTA, *_generators(n))
    inner = sp.expand(q) if r == 0 else None
    return GenericEntry(n, m, eps, inner)


def generic_table(n: int) -> list[list[GenericEntry]]:
    return [[generic_entry(n, i, j) for j in range(n)] for i in range(n)]
