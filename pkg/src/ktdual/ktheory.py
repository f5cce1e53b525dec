"""K^0_G(CP(V)) = R(G)[z]/chi(V z), its augmentation, pairing and duality.

Classes are stored in the basis ``1, y, ..., y^(n-1)`` with ``y = 1 - z``.  The
relation is ``y^n = -(sigma_n + sigma_(n-1) y + ... + sigma_1 y^(n-1))`` and
higher powers ``y^(n+s) = sum_j lam[s][j] y^j`` come from the row recursion
``lam[s+1][j] = lam[s][j-1] - lam[s][n-1] * sigma_(n-j)``.

K-homology is modelled as the R(G)-dual module, with coordinates in the basis
dual to ``{y^i}``; the fundamental class ``1/chi(V z)`` is the all-ones vector.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence, TypeVar

from .cyclo import CyclotomicNumber
from .groups import FiniteGroupData, SubgroupEmbedding
from .repring import (
    GroupMismatchError,
    IntegralityError,
    NotGenuineError,
    VirtualCharacter,
    det_rep,
    exterior,
    restrict,
)
from . import linalg

__all__ = [
    "ContextMismatchError",
    "PerfectionError",
    "LaurentPolynomial",
    "KContext",
    "KClass",
    "KHomologyClass",
    "PerfectionCertificate",
    "euler_class",
    "sigma_coefficients",
    "sigma_from_exterior_powers",
    "lambda_rows",
    "lambda_row",
    "reduce",
    "epsilon",
    "pairing",
    "gram_matrix",
    "poincare_dual",
    "fundamental_class",
    "verify_perfect",
    "restrict_kclass",
    "restrict_khomology",
    "context_for",
    "normalized_euler_y_coeffs",
]

T = TypeVar("T")


class ContextMismatchError(ValueError):
    pass


class PerfectionError(ArithmeticError):
    """The Gram matrix has no inverse over R(G)."""


class LaurentPolynomial:
    """An element of R(G)[z, 1/z]."""

    __slots__ = ("group", "terms")

    def __init__(self, group: FiniteGroupData, terms: dict[int, VirtualCharacter] | None = None):
        self.group = group
        clean = {}
        for e, c in (terms or {}).items():
            if isinstance(c, int):
                c = VirtualCharacter.constant(group, c)
            if c.group != group:
                raise GroupMismatchError(f"coefficient over {c.group.name} in a polynomial over {group.name}")
            if c:
                clean[int(e)] = c
        self.terms = clean

    @classmethod
    def constant(cls, c: VirtualCharacter) -> LaurentPolynomial:
        return cls(c.group, {0: c})

    @classmethod
    def monomial(cls, group: FiniteGroupData, e: int, c: VirtualCharacter | int = 1) -> LaurentPolynomial:
        return cls(group, {e: c})

    @classmethod
    def z(cls, group: FiniteGroupData, e: int = 1) -> LaurentPolynomial:
        return cls(group, {e: 1})

    @classmethod
    def y(cls, group: FiniteGroupData) -> LaurentPolynomial:
        return cls(group, {0: 1, 1: -1})

    @classmethod
    def from_y_coeffs(cls, group: FiniteGroupData, coeffs: Sequence[VirtualCharacter]) -> LaurentPolynomial:
        """sum_i coeffs[i] * (1 - z)^i"""
        out: dict[int, VirtualCharacter] = {}
        for i, c in enumerate(coeffs):
            for k in range(i + 1):
                b = comb(i, k) * (-1) ** k
                out[k] = out[k] + b * c if k in out else b * c
        return cls(group, out)

    def min_degree(self) -> int:
        return min(self.terms, default=0)

    def max_degree(self) -> int:
        return max(self.terms, default=0)

    def coeff(self, e: int) -> VirtualCharacter:
        return self.terms.get(e, VirtualCharacter.zero(self.group))

    def to_y_coeffs(self) -> list[VirtualCharacter]:
        """Coefficients in y = 1 - z of a polynomial (no negative powers)."""
        if self.min_degree() < 0:
            raise ValueError("negative powers of z have no expansion in y")
        d = self.max_degree()
        out = [VirtualCharacter.zero(self.group) for _ in range(d + 1)]
        for e, c in self.terms.items():
            # z^e = (1 - y)^e
            for k in range(e + 1):
                out[k] = out[k] + (comb(e, k) * (-1) ** k) * c
        return out

    def _coerce(self, other) -> LaurentPolynomial:
        if isinstance(other, LaurentPolynomial):
            if other.group != self.group:
                raise GroupMismatchError(f"{self.group.name} vs {other.group.name}")
            return other
        if isinstance(other, (int, VirtualCharacter)):
            return LaurentPolynomial(self.group, {0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return LaurentPolynomial(self.group, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(self.group, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, VirtualCharacter] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                out[e] = out[e] + c1 * c2 if e in out else c1 * c2
        return LaurentPolynomial(self.group, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers of a Laurent polynomial are not defined here")
        out = LaurentPolynomial(self.group, {0: 1})
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        other = self._coerce(other) if not isinstance(other, LaurentPolynomial) else other
        if other is NotImplemented:
            return NotImplemented
        return self.group == other.group and self.terms == other.terms

    def __hash__(self):
        return hash((self.group, frozenset(self.terms.items())))

    def format(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e].format()
            mono = "" if e == 0 else ("z" if e == 1 else f"z^{e}")
            if not mono:
                parts.append(c)
            elif c == "1":
                parts.append(mono)
            elif c == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"({c})*{mono}")
        s = "+".join(parts)
        return s.replace("+-", "-")

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.group.name}: {self.format()})"


def _require_genuine(v: VirtualCharacter) -> int:
    if not v.is_genuine():
        raise NotGenuineError(f"{v!r} is not a genuine representation")
    n = v.dim
    if n < 1:
        raise NotGenuineError("representation must have dimension >= 1")
    return n


def euler_class(v: VirtualCharacter) -> LaurentPolynomial:
    """chi(V z) = sum_i (-1)^i lambda^i(V) z^i."""
    n = _require_genuine(v)
    return LaurentPolynomial(v.group, {i: (-1) ** i * exterior(v, i) for i in range(n + 1)})


def sigma_from_exterior_powers(lam_dual: Sequence[T], n: int, one: T) -> list[T]:
    """sigma_1..sigma_n from lambda^0..lambda^n of V* by the alternating binomial formula.

    Works over any commutative ring whose elements accept integer scaling.
    """
    out = []
    for m in range(1, n + 1):
        acc = None
        for k in range(m + 1):
            term = ((-1) ** k * comb(n - m + k, n - m)) * (lam_dual[m - k] if m - k else one)
            acc = term if acc is None else acc + term
        out.append(acc)
    return out


def sigma_coefficients(v: VirtualCharacter) -> list[VirtualCharacter]:
    n = _require_genuine(v)
    vd = v.dual()
    lam = [exterior(vd, k) for k in range(n + 1)]
    return sigma_from_exterior_powers(lam, n, VirtualCharacter.trivial(v.group))


def lambda_rows(sigma: Sequence[T], count: int, start: list[list[T]] | None = None) -> list[list[T]]:
    """Rows lam[0..count-1]; lam[s][j] is the y^j coordinate of y^(n+s).

    ``sigma`` is (sigma_1, ..., sigma_n); any ring with + - * is fine.  Passing
    previously computed rows in ``start`` continues the recursion.
    """
    n = len(sigma)
    rows = [list(r) for r in start] if start else []
    if not rows and count > 0:
        rows.append([-sigma[n - j - 1] for j in range(n)])
    while len(rows) < count:
        prev = rows[-1]
        top = prev[n - 1]
        row = [-(top * sigma[n - 1])]
        for j in range(1, n):
            row.append(prev[j - 1] - top * sigma[n - j - 1])
        rows.append(row)
    return rows[:count] if count < len(rows) else rows


class KContext:
    """The presentation data of K^0_G(CP(V)) for a genuine representation V."""

    def __init__(self, v: VirtualCharacter, smax: int | None = None):
        self.n = _require_genuine(v)
        self.group = v.group
        self.v = v
        self.sigma = tuple(sigma_coefficients(v))
        self.det = det_rep(v)
        self.det_inv = self.det.dual()
        self._one = VirtualCharacter.trivial(self.group)
        self._zero = VirtualCharacter.zero(self.group)
        self._lock = threading.Lock()
        # rows s = 0..smax
        self._rows: list[list[VirtualCharacter]] = lambda_rows(
            self.sigma, (2 * self.n if smax is None else max(0, smax)) + 1
        )
        self._zinv: KClass | None = None

    @property
    def smax(self) -> int:
        return len(self._rows) - 1

    @property
    def lambda_table(self) -> tuple[tuple[VirtualCharacter, ...], ...]:
        return tuple(tuple(r) for r in self._rows)

    def lambda_row(self, s: int) -> list[VirtualCharacter]:
        if s < 0:
            raise ValueError("row index must be non-negative")
        if s >= len(self._rows):
            with self._lock:
                if s >= len(self._rows):
                    self._rows = lambda_rows(self.sigma, s + 1, self._rows)
        return list(self._rows[s])

    def sigma_at(self, j: int) -> VirtualCharacter:
        """sigma_j with sigma_0 = 1 and sigma_j = 0 beyond n."""
        if j == 0:
            return self._one
        if 1 <= j <= self.n:
            return self.sigma[j - 1]
        return self._zero

    # -- element constructors -------------------------------------------

    def kclass(self, coords: Sequence[VirtualCharacter | int]) -> KClass:
        return KClass(self, coords)

    def one(self) -> KClass:
        return KClass(self, [self._one] + [self._zero] * (self.n - 1))

    def zero(self) -> KClass:
        return KClass(self, [self._zero] * self.n)

    def y_power(self, m: int) -> KClass:
        if m < 0:
            raise ValueError("use reduce() for negative powers")
        if m < self.n:
            return KClass(self, [self._one if j == m else self._zero for j in range(self.n)])
        return KClass(self, self.lambda_row(m - self.n))

    def from_y_coeffs(self, coeffs: Sequence[VirtualCharacter]) -> KClass:
        n = self.n
        acc = [self._zero] * n
        for m, c in enumerate(coeffs):
            if not c:
                continue
            if m < n:
                acc[m] = acc[m] + c
            else:
                row = self.lambda_row(m - n)
                acc = [a + c * r for a, r in zip(acc, row)]
        return KClass(self, acc)

    def z_inverse(self) -> KClass:
        """1/z in the quotient: from chi(V z) = 0, 1/z = sum_{i>=1} (-1)^(i+1) lambda^i(V) z^(i-1)."""
        if self._zinv is None:
            terms = {i - 1: (-1) ** (i + 1) * exterior(self.v, i) for i in range(1, self.n + 1)}
            self._zinv = self.from_y_coeffs(LaurentPolynomial(self.group, terms).to_y_coeffs())
        return self._zinv

    def _check(self, other: KContext):
        if other is not self and not (other.v == self.v and other.group == self.group):
            raise ContextMismatchError("classes belong to different projective spaces")

    def __eq__(self, other):
        if not isinstance(other, KContext):
            return NotImplemented
        return self.v == other.v

    def __hash__(self):
        return hash(self.v)

    def __repr__(self) -> str:
        return f"KContext({self.group.name}, V={self.v.format(one=None)}, n={self.n})"


@lru_cache(maxsize=512)
def context_for(v: VirtualCharacter) -> KContext:
    return KContext(v)


class KClass:
    """An element of K^0_G(CP(V)) in the basis 1, y, ..., y^(n-1)."""

    __slots__ = ("context", "coords")

    def __init__(self, context: KContext, coords: Iterable[VirtualCharacter | int]):
        g = context.group
        cs = tuple(VirtualCharacter.constant(g, c) if isinstance(c, int) else c for c in coords)
        if len(cs) != context.n:
            raise ValueError(f"expected {context.n} coordinates, got {len(cs)}")
        self.context = context
        self.coords = cs

    def _coerce(self, other):
        if isinstance(other, KClass):
            self.context._check(other.context)
            return other
        if isinstance(other, (int, VirtualCharacter)):
            return self.context.one() * other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return KClass(self.context, [a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return KClass(self.context, [-a for a in self.coords])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return KClass(self.context, [a - b for a, b in zip(self.coords, other.coords)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, VirtualCharacter)):
            return KClass(self.context, [other * a for a in self.coords])
        if not isinstance(other, KClass):
            return NotImplemented
        self.context._check(other.context)
        n = self.context.n
        zero = self.context._zero
        prod = [zero] * (2 * n - 1)
        for i, a in enumerate(self.coords):
            if not a:
                continue
            for j, b in enumerate(other.coords):
                if b:
                    prod[i + j] = prod[i + j] + a * b
        return self.context.from_y_coeffs(prod)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = self.context.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, KClass):
            return NotImplemented
        return self.context == other.context and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def format(self) -> str:
        parts = []
        for i, c in enumerate(self.coords):
            if not c:
                continue
            s = c.format()
            mono = "" if i == 0 else ("y" if i == 1 else f"y^{i}")
            if not mono:
                parts.append(s)
            elif s == "1":
                parts.append(mono)
            else:
                parts.append(f"({s})*{mono}")
        return "+".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"KClass({self.format()})"


class KHomologyClass:
    """A functional on K^0, with coordinates in the basis dual to {y^i}."""

    __slots__ = ("context", "coords")

    def __init__(self, context: KContext, coords: Iterable[VirtualCharacter | int]):
        g = context.group
        cs = tuple(VirtualCharacter.constant(g, c) if isinstance(c, int) else c for c in coords)
        if len(cs) != context.n:
            raise ValueError(f"expected {context.n} coordinates, got {len(cs)}")
        self.context = context
        self.coords = cs

    def __call__(self, x: KClass) -> VirtualCharacter:
        return self.evaluate(x)

    def evaluate(self, x: KClass) -> VirtualCharacter:
        """Kronecker pairing: sum_i a_i c_i for x = sum a_i y^i."""
        self.context._check(x.context)
        acc = self.context._zero
        for a, c in zip(x.coords, self.coords):
            acc = acc + a * c
        return acc

    def __add__(self, other):
        if not isinstance(other, KHomologyClass):
            return NotImplemented
        self.context._check(other.context)
        return KHomologyClass(self.context, [a + b for a, b in zip(self.coords, other.coords)])

    def __mul__(self, r):
        if not isinstance(r, (int, VirtualCharacter)):
            return NotImplemented
        return KHomologyClass(self.context, [r * a for a in self.coords])

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, KHomologyClass):
            return NotImplemented
        return self.context == other.context and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self) -> str:
        return "KHomologyClass(" + ", ".join(c.format() for c in self.coords) + ")"


def lambda_row(ctx: KContext, s: int) -> list[VirtualCharacter]:
    return ctx.lambda_row(s)


def reduce(ctx: KContext, p: LaurentPolynomial) -> KClass:
    """Image of a Laurent polynomial in K^0_G(CP(V))."""
    if p.group != ctx.group:
        raise GroupMismatchError(f"{p.group.name} vs {ctx.group.name}")
    k = max(0, -p.min_degree())
    q = p * LaurentPolynomial.z(ctx.group, k) if k else p
    x = ctx.from_y_coeffs(q.to_y_coeffs())
    if k:
        x = x * (ctx.z_inverse() ** k)
    return x


def epsilon(x: KClass) -> VirtualCharacter:
    acc = x.context._zero
    for c in x.coords:
        acc = acc + c
    return acc


def pairing(x: KClass, w: KClass) -> VirtualCharacter:
    x.context._check(w.context)
    return epsilon(x * w)


def gram_matrix(ctx: KContext) -> list[list[VirtualCharacter]]:
    n = ctx.n
    eps = [epsilon(ctx.y_power(m)) for m in range(2 * n - 1)]
    return [[eps[i + j] for j in range(n)] for i in range(n)]


def poincare_dual(x: KClass) -> KHomologyClass:
    """The functional w -> <x w, 1/chi(V z)>."""
    ctx = x.context
    G = gram_matrix(ctx)
    coords = []
    for row in G:
        acc = ctx._zero
        for g, a in zip(row, x.coords):
            acc = acc + g * a
        coords.append(acc)
    return KHomologyClass(ctx, coords)


def fundamental_class(ctx: KContext) -> KHomologyClass:
    """1/chi(V z), the sum of the functionals dual to 1, y, ..., y^(n-1)."""
    return KHomologyClass(ctx, [1] * ctx.n)


@dataclass(frozen=True)
class PerfectionCertificate:
    context: KContext
    gram: tuple[tuple[VirtualCharacter, ...], ...]
    inverse: tuple[tuple[VirtualCharacter, ...], ...]

    def check(self) -> bool:
        n = self.context.n
        for i in range(n):
            for j in range(n):
                acc = self.context._zero
                for k in range(n):
                    acc = acc + self.gram[i][k] * self.inverse[k][j]
                if acc != (1 if i == j else 0):
                    return False
        return all(h.is_virtual_character() for row in self.inverse for h in row)


def verify_perfect(ctx: KContext) -> PerfectionCertificate:
    """Invert the Gram matrix class by class over Q(zeta_N) and certify integrality."""
    G = gram_matrix(ctx)
    n = ctx.n
    g = ctx.group
    one, zero = CyclotomicNumber.coerce(1), CyclotomicNumber.coerce(0)
    per_class = []
    for c in range(g.num_classes):
        m = [[G[i][j].values[c] for j in range(n)] for i in range(n)]
        try:
            per_class.append(linalg.inverse(m, one, zero))
        except linalg.SingularMatrixError as exc:
            raise PerfectionError(f"Gram matrix is singular at class {g.classes[c].label!r}") from exc
    H = []
    for i in range(n):
        row = []
        for j in range(n):
            vals = [per_class[c][i][j] for c in range(g.num_classes)]
            try:
                row.append(VirtualCharacter(g, vals))
            except IntegralityError as exc:
                raise PerfectionError(f"inverse Gram entry ({i},{j}) is not in R(G): {exc}") from exc
        H.append(tuple(row))
    cert = PerfectionCertificate(ctx, tuple(tuple(r) for r in G), tuple(H))
    if not cert.check():
        raise PerfectionError("G * H differs from the identity")
    return cert


def restrict_kclass(x: KClass, e: SubgroupEmbedding) -> KClass:
    ctx = x.context
    if ctx.group != e.ambient:
        raise GroupMismatchError(f"class over {ctx.group.name} restricted along an embedding into {e.ambient.name}")
    target = context_for(restrict(ctx.v, e))
    return KClass(target, [restrict(c, e) for c in x.coords])


def restrict_khomology(h: KHomologyClass, e: SubgroupEmbedding) -> KHomologyClass:
    ctx = h.context
    if ctx.group != e.ambient:
        raise GroupMismatchError(f"class over {ctx.group.name} restricted along an embedding into {e.ambient.name}")
    target = context_for(restrict(ctx.v, e))
    return KHomologyClass(target, [restrict(c, e) for c in h.coords])


def normalized_euler_y_coeffs(ctx: KContext) -> list[VirtualCharacter]:
    """y-coefficients of det(V)^-1 chi(V z), computed directly from exterior powers."""
    p = LaurentPolynomial.constant(ctx.det_inv) * euler_class(ctx.v)
    return p.to_y_coeffs()
