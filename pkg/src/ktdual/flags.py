"""Flag bases of K^0_A(CP(V)) for abelian A.

Ordering the one-dimensional summands ``alpha_1, ..., alpha_n`` of V gives the
basis ``1, y^{V^1}, ..., y^{V^(n-1)}`` with ``y^{V^i} = prod_{j<=i} (1 - alpha_j z)``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .groups import FiniteGroupData
from .ktheory import KClass, KContext, KHomologyClass, LaurentPolynomial, reduce
from .repring import NotGenuineError, VirtualCharacter

__all__ = [
    "NonAbelianError",
    "Flag",
    "FlagReport",
    "decompose_abelian",
    "flag_basis",
    "flag_change_of_basis",
    "flag_dual_sum",
    "flag_coordinates",
    "enumerate_flags",
    "verify_flag_independence",
]


class NonAbelianError(ValueError):
    """Flags of one-dimensional summands need an abelian group."""


def _require_abelian(g: FiniteGroupData):
    if not g.is_abelian():
        raise NonAbelianError(f"{g.name} is not abelian; V need not split into lines and no flag exists")


def decompose_abelian(v: VirtualCharacter) -> list[VirtualCharacter]:
    """The one-dimensional summands of V with multiplicity, in character-table order."""
    _require_abelian(v.group)
    if not v.is_genuine():
        raise NotGenuineError(f"{v!r} is not a genuine representation")
    out = []
    for idx, m in enumerate(v.multiplicities()):
        out.extend([VirtualCharacter.irreducible(v.group, idx)] * m)
    return out


@dataclass(frozen=True)
class Flag:
    context: KContext
    order: tuple[VirtualCharacter, ...]

    def __post_init__(self):
        _require_abelian(self.context.group)
        if len(self.order) != self.context.n:
            raise ValueError("a flag orders exactly n one-dimensional summands")
        total = VirtualCharacter.zero(self.context.group)
        for a in self.order:
            if not a.is_line():
                raise ValueError(f"{a!r} is not one-dimensional")
            total = total + a
        if total != self.context.v:
            raise ValueError("flag summands do not add up to V")

    def labels(self) -> tuple[str, ...]:
        return tuple(a.format(one=None) for a in self.order)


def flag_basis(f: Flag) -> list[KClass]:
    ctx = f.context
    g = ctx.group
    out = [ctx.one()]
    p = LaurentPolynomial(g, {0: 1})
    for a in f.order[:-1]:
        p = p * LaurentPolynomial(g, {0: 1, 1: -a})
        out.append(reduce(ctx, p))
    return out


def flag_change_of_basis(f: Flag) -> list[list[VirtualCharacter]]:
    """Row i holds the {y^j}-coordinates of y^{V^i}; lower triangular with unit diagonal."""
    return [list(b.coords) for b in flag_basis(f)]


def _triangular_solve(M: list[list[VirtualCharacter]], rhs: list[VirtualCharacter]) -> list[VirtualCharacter]:
    n = len(M)
    x: list[VirtualCharacter] = []
    for i in range(n):
        for j in range(i + 1, n):
            if M[i][j]:
                raise ArithmeticError("flag change-of-basis matrix is not lower triangular")
        acc = rhs[i]
        for j in range(i):
            acc = acc - M[i][j] * x[j]
        d = M[i][i]
        try:
            x.append(acc * d.line_inverse())
        except ArithmeticError as exc:
            raise ArithmeticError(f"diagonal entry {d!r} is not a unit") from exc
    return x


def flag_coordinates(f: Flag, x: KClass) -> list[VirtualCharacter]:
    """Coordinates of x in the flag basis."""
    M = flag_change_of_basis(f)
    n = len(M)
    # x = sum_i c_i b_i with b_i = sum_j M[i][j] y^j, so M^T c = coords(x)
    Mt = [[M[j][i] for j in range(n)] for i in range(n)]
    rev = [row[::-1] for row in Mt[::-1]]
    c = _triangular_solve(rev, list(x.coords)[::-1])
    return c[::-1]


def flag_dual_sum(f: Flag) -> KHomologyClass:
    """beta_0^F + ... + beta_(n-1)^F in the coordinates dual to {y^i}.

    The sum S takes the value 1 on every flag basis element, so its coordinates s
    solve M s = (1, ..., 1).
    """
    ctx = f.context
    M = flag_change_of_basis(f)
    ones = [VirtualCharacter.trivial(ctx.group)] * ctx.n
    return KHomologyClass(ctx, _triangular_solve(M, ones))


def enumerate_flags(ctx: KContext) -> list[Flag]:
    """All orderings of the summands of V, identifying swaps of equal characters."""
    summands = decompose_abelian(ctx.v)
    seen = {}
    for perm in itertools.permutations(range(len(summands))):
        key = tuple(summands[i].values for i in perm)
        if key not in seen:
            seen[key] = Flag(ctx, tuple(summands[i] for i in perm))
    return list(seen.values())


@dataclass(frozen=True)
class FlagReport:
    flag_count: int
    independent: bool
    equals_fundamental: bool
    sum_coordinates: tuple[VirtualCharacter, ...]

    @property
    def passed(self) -> bool:
        return self.independent and self.equals_fundamental

    def to_json(self) -> dict:
        return {
            "flag_count": self.flag_count,
            "independent": self.independent,
            "equals_fundamental": self.equals_fundamental,
            "sum_coordinates": [c.format() for c in self.sum_coordinates],
        }


def verify_flag_independence(ctx: KContext) -> FlagReport:
    flags = enumerate_flags(ctx)
    sums = [flag_dual_sum(f) for f in flags]
    first = sums[0]
    independent = all(s == first for s in sums[1:])
    ones = KHomologyClass(ctx, [1] * ctx.n)
    return FlagReport(
        flag_count=len(flags),
        independent=independent,
        equals_fundamental=all(s == ones for s in sums),
        sum_coordinates=first.coords,
    )
