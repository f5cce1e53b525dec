"""Brute-force cross-checks for the main K-theory path.

These routines deliberately re-derive things the long way (explicit polynomial
long division, product expansions over one-dimensional summands, floating-point
evaluation) and share nothing with ``ktheory`` beyond R(G) arithmetic.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import Sequence

from .cyclo import CyclotomicNumber
from .ktheory import KClass, KContext, LaurentPolynomial
from .repring import VirtualCharacter
from . import linalg

__all__ = [
    "OracleReport",
    "divide_reduce",
    "product_euler",
    "sigma_by_splitting",
    "elementary_symmetric",
    "numeric_crosscheck",
    "exact_report",
]


@dataclass
class OracleReport:
    """lhs/rhs hold the exact values; they are rendered when serialized."""

    subject: str
    matches: bool
    lhs: object
    rhs: object
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "matches": self.matches,
            "lhs": _render(self.lhs),
            "rhs": _render(self.rhs),
            "detail": self.detail,
        }

    def to_line(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, ensure_ascii=False)


def _render(x) -> object:
    if isinstance(x, VirtualCharacter):
        try:
            return x.format()
        except ArithmeticError:
            return x.to_json()
    if isinstance(x, KClass):
        return [c.format() for c in x.coords]
    if isinstance(x, (list, tuple)):
        return [_render(v) for v in x]
    if hasattr(x, "coords"):
        return [_render(c) for c in x.coords]
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if hasattr(x, "format"):
        return x.format()
    return str(x)


def exact_report(subject: str, lhs, rhs, detail: str = "") -> OracleReport:
    return OracleReport(subject, lhs == rhs, lhs, rhs, detail)


def _poly_mul(a: list, b: list, zero) -> list:
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def _z_to_y(coeffs: dict[int, VirtualCharacter], zero: VirtualCharacter) -> list[VirtualCharacter]:
    deg = max(coeffs, default=0)
    out = [zero] * (deg + 1)
    for e, c in coeffs.items():
        for k in range(e + 1):
            out[k] = out[k] + ((-1) ** k * comb(e, k)) * c
    return out


def _long_divide(num: list[VirtualCharacter], monic: list[VirtualCharacter]) -> list[VirtualCharacter]:
    """Remainder of num by a monic divisor (coefficient lists, low degree first)."""
    n = len(monic) - 1
    rem = list(num)
    for top in range(len(rem) - 1, n - 1, -1):
        c = rem[top]
        if not c:
            continue
        for i in range(n + 1):
            rem[top - n + i] = rem[top - n + i] - c * monic[i]
    zero = monic[0] * 0
    rem = rem[:n] + [zero] * max(0, n - len(rem))
    return rem


def divide_reduce(ctx: KContext, p: LaurentPolynomial) -> KClass:
    """Remainder of p modulo y^n + sigma_1 y^(n-1) + ... + sigma_n, by explicit division.

    Negative powers: with q = z^k p, the answer r solves z^k r = q in the quotient;
    that linear system is solved class by class over the cyclotomic field.
    """
    g = ctx.group
    n = ctx.n
    zero = VirtualCharacter.zero(g)
    one = VirtualCharacter.trivial(g)
    monic = [ctx.sigma[n - 1 - i] for i in range(n)] + [one]
    k = max(0, -min(p.terms, default=0))
    shifted = {e + k: c for e, c in p.terms.items()}
    rq = _long_divide(_z_to_y(shifted, zero), monic)
    if k == 0:
        return KClass(ctx, rq)
    zk = _z_to_y({k: one}, zero)
    cols = []
    for j in range(n):
        yj = [zero] * j + [one]
        cols.append(_long_divide(_poly_mul(zk, yj, zero), monic))
    mat = [[cols[j][i] for j in range(n)] for i in range(n)]
    c1, c0 = CyclotomicNumber.coerce(1), CyclotomicNumber.coerce(0)
    per_class = []
    for c in range(g.num_classes):
        m = [[mat[i][j].values[c] for j in range(n)] for i in range(n)]
        per_class.append(linalg.solve(m, [rq[i].values[c] for i in range(n)], c1, c0))
    coords = [VirtualCharacter(g, [per_class[c][i] for c in range(g.num_classes)]) for i in range(n)]
    return KClass(ctx, coords)


def product_euler(summands: Sequence[VirtualCharacter]) -> LaurentPolynomial:
    """prod_i (1 - alpha_i z) over one-dimensional summands."""
    if not summands:
        raise ValueError("need at least one summand")
    g = summands[0].group
    coeffs = [VirtualCharacter.trivial(g)]
    for a in summands:
        if a.group != g:
            raise ValueError("summands over different groups")
        if not a.is_line():
            raise ValueError(f"{a!r} is not one-dimensional")
        coeffs = _poly_mul(coeffs, [VirtualCharacter.trivial(g), -a], VirtualCharacter.zero(g))
    return LaurentPolynomial(g, dict(enumerate(coeffs)))


def elementary_symmetric(xs: Sequence[VirtualCharacter]) -> list[VirtualCharacter]:
    """[e_0, e_1, ..., e_n] of the given ring elements, via prod (1 + x_i t)."""
    g = xs[0].group
    e = [VirtualCharacter.trivial(g)]
    for x in xs:
        e = _poly_mul(e, [VirtualCharacter.trivial(g), x], VirtualCharacter.zero(g))
    return e


def sigma_by_splitting(summands: Sequence[VirtualCharacter]) -> list[VirtualCharacter]:
    """sigma_j = e_j(-e(alpha_i^-1)) = e_j(alpha_i^-1 - 1), j = 1..n."""
    return elementary_symmetric([a.dual() - 1 for a in summands])[1:]


def _as_values(x) -> list[complex]:
    if isinstance(x, VirtualCharacter):
        return [v.to_complex() for v in x.values]
    if isinstance(x, dict) and "values" in x:
        return [CyclotomicNumber.coerce(v).to_complex() for v in x["values"]]
    if isinstance(x, (list, tuple)):
        return [CyclotomicNumber.coerce(v).to_complex() for v in x]
    return [CyclotomicNumber.coerce(x).to_complex()]


def numeric_crosscheck(subject: str, lhs, rhs, tol: float = 1e-9) -> OracleReport:
    """Compare two class functions numerically at every conjugacy class.

    Advisory only: a floating-point agreement never overrides an exact mismatch.
    """
    a, b = _as_values(lhs), _as_values(rhs)
    if len(a) != len(b):
        return OracleReport(subject, False, lhs, rhs, "different number of classes")
    diff = max((abs(x - y) for x, y in zip(a, b)), default=0.0)
    return OracleReport(subject, diff < tol, lhs, rhs, f"max abs difference {diff:.3e}")
