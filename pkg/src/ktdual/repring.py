"""The representation ring R(G) as exact class functions."""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .cyclo import CyclotomicNumber
from .groups import FiniteGroupData, SubgroupEmbedding, cyclic_subgroup_embeddings
from . import linalg

__all__ = [
    "GroupMismatchError",
    "IntegralityError",
    "NotGenuineError",
    "VirtualCharacter",
    "tensor",
    "dual",
    "adams",
    "exterior",
    "exterior_powers",
    "det_rep",
    "restrict",
    "parse_rep",
    "joint_restriction_rank",
]

_ZERO = CyclotomicNumber.coerce(0)
_ONE = CyclotomicNumber.coerce(1)


class GroupMismatchError(ValueError):
    pass


class IntegralityError(ArithmeticError):
    """A class function that should lie in R(G) has a non-integral multiplicity."""


class NotGenuineError(ValueError):
    pass


class VirtualCharacter:
    """An element of R(G), stored as its values on conjugacy classes."""

    __slots__ = ("group", "values", "_mult", "_hash")

    def __init__(self, group: FiniteGroupData, values: Iterable, *, check: bool = True):
        self.group = group
        self.values = tuple(CyclotomicNumber.coerce(v) for v in values)
        self._mult = None
        self._hash = None
        if len(self.values) != group.num_classes:
            raise ValueError(f"{len(self.values)} values for {group.num_classes} classes of {group.name}")
        if check:
            self.multiplicities()

    @classmethod
    def _raw(cls, group, values) -> VirtualCharacter:
        obj = object.__new__(cls)
        obj.group = group
        obj.values = tuple(values)
        obj._mult = None
        obj._hash = None
        return obj

    # -- constructors --------------------------------------------------

    @classmethod
    def trivial(cls, group: FiniteGroupData) -> VirtualCharacter:
        return cls._raw(group, (_ONE,) * group.num_classes)

    @classmethod
    def zero(cls, group: FiniteGroupData) -> VirtualCharacter:
        return cls._raw(group, (_ZERO,) * group.num_classes)

    @classmethod
    def irreducible(cls, group: FiniteGroupData, which: int | str) -> VirtualCharacter:
        idx = group.irrep_index(which) if isinstance(which, str) else which
        return cls._raw(group, group.irreducibles[idx])

    @classmethod
    def from_multiplicities(cls, group: FiniteGroupData, mults: Sequence[int]) -> VirtualCharacter:
        vals = [_ZERO] * group.num_classes
        for m, row in zip(mults, group.irreducibles):
            if m:
                vals = [v + m * x for v, x in zip(vals, row)]
        obj = cls._raw(group, vals)
        mults = tuple(int(m) for m in mults)
        if len(mults) == group.num_classes:
            obj._mult = mults
        return obj

    @classmethod
    def constant(cls, group: FiniteGroupData, k: int) -> VirtualCharacter:
        c = CyclotomicNumber.coerce(k)
        return cls._raw(group, (c,) * group.num_classes)

    # -- ring structure ------------------------------------------------

    def _other(self, other) -> VirtualCharacter:
        if isinstance(other, VirtualCharacter):
            if other.group != self.group:
                raise GroupMismatchError(f"{self.group.name} vs {other.group.name}")
            return other
        if isinstance(other, int):
            return VirtualCharacter.constant(self.group, other)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return VirtualCharacter._raw(self.group, [a + b for a, b in zip(self.values, other.values)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return VirtualCharacter._raw(self.group, [a - b for a, b in zip(self.values, other.values)])

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return VirtualCharacter._raw(self.group, [-a for a in self.values])

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return VirtualCharacter.zero(self.group)
            return VirtualCharacter._raw(self.group, [other * a for a in self.values])
        other = self._other(other)
        if other is NotImplemented:
            return other
        return VirtualCharacter._raw(self.group, [a * b for a, b in zip(self.values, other.values)])

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.line_inverse() ** (-k)
        result = VirtualCharacter.trivial(self.group)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = VirtualCharacter.constant(self.group, other)
        if not isinstance(other, VirtualCharacter):
            return NotImplemented
        return self.group == other.group and self.values == other.values

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.group, self.values))
        return self._hash

    def __bool__(self) -> bool:
        return any(self.values)

    # -- decomposition -------------------------------------------------

    def multiplicities(self) -> tuple[int, ...]:
        """Integer multiplicities of the irreducibles; raises IntegralityError otherwise."""
        if self._mult is None:
            out = []
            for r, row in enumerate(self.group.irreducibles):
                ip = self.group.inner(self.values, row)
                q = ip.is_rational()
                if q is None or q.denominator != 1:
                    raise IntegralityError(
                        f"class function {self.values} has multiplicity {ip} on {self.group.labels[r]}"
                    )
                out.append(int(q))
            self._mult = tuple(out)
        return self._mult

    def is_virtual_character(self) -> bool:
        try:
            self.multiplicities()
        except IntegralityError:
            return False
        return True

    def is_genuine(self) -> bool:
        return all(m >= 0 for m in self.multiplicities())

    @property
    def dim(self) -> int:
        q = self.values[self.group.identity].is_rational()
        if q is None or q.denominator != 1:
            raise IntegralityError(f"virtual dimension {self.values[self.group.identity]} is not an integer")
        return int(q)

    def is_line(self) -> bool:
        """Genuine and one-dimensional, hence a unit with inverse its dual."""
        return self.dim == 1 and self.is_genuine()

    def line_inverse(self) -> VirtualCharacter:
        # (+-alpha)^-1 = +-alpha*, i.e. the dual in both cases
        if not (self.is_line() or (self.dim == -1 and (-self).is_line())):
            raise ArithmeticError("only one-dimensional characters (up to sign) are inverted here")
        return self.dual()

    # -- lambda-ring operations ----------------------------------------

    def dual(self) -> VirtualCharacter:
        return VirtualCharacter._raw(self.group, [v.conjugate() for v in self.values])

    def adams(self, k: int) -> VirtualCharacter:
        g = self.group
        return VirtualCharacter._raw(g, [self.values[g.power(c, k)] for c in range(g.num_classes)])

    def exterior(self, k: int) -> VirtualCharacter:
        return exterior_powers(self, k)[k]

    def restrict(self, e: SubgroupEmbedding) -> VirtualCharacter:
        return restrict(self, e)

    # -- presentation --------------------------------------------------

    def format(self, one: str | None = "1") -> str:
        """Render as an integer combination of irreducible labels (the trivial one as ``one``)."""
        parts = []
        for m, lbl, row in zip(self.multiplicities(), self.group.labels, self.group.irreducibles):
            if not m:
                continue
            is_triv = all(v == 1 for v in row)
            name = one if (is_triv and one is not None) else lbl
            if name == one and is_triv:
                term = str(abs(m))
            elif abs(m) == 1:
                term = name
            else:
                term = f"{abs(m)}*{name}"
            parts.append(("-" if m < 0 else "+") + term)
        if not parts:
            return "0"
        s = "".join(parts)
        return s[1:] if s[0] == "+" else s

    def to_json(self) -> dict:
        return {"group": self.group.name, "values": [v.to_json() for v in self.values]}

    @classmethod
    def from_json(cls, group: FiniteGroupData, doc: dict) -> VirtualCharacter:
        if doc.get("group", group.name) != group.name:
            raise GroupMismatchError(f"document is for {doc['group']}, not {group.name}")
        return cls(group, [CyclotomicNumber.coerce(v) for v in doc["values"]])

    def __repr__(self) -> str:
        try:
            body = self.format(one=None)
        except IntegralityError:
            body = "class function " + ", ".join(map(str, self.values))
        return f"VirtualCharacter({self.group.name}: {body})"

    __str__ = format


def tensor(a: VirtualCharacter, b: VirtualCharacter) -> VirtualCharacter:
    return a * b


def dual(a: VirtualCharacter) -> VirtualCharacter:
    return a.dual()


def adams(a: VirtualCharacter, k: int) -> VirtualCharacter:
    if k < 0:
        raise ValueError("Adams operations are indexed by non-negative integers")
    return a.adams(k)


@lru_cache(maxsize=8192)
def exterior_powers(a: VirtualCharacter, k: int) -> tuple[VirtualCharacter, ...]:
    """(lambda^0 a, ..., lambda^k a) by Newton's identity, checking exact divisibility."""
    if k < 0:
        raise ValueError("exterior powers are indexed by non-negative integers")
    g = a.group
    if k == 0:
        return (VirtualCharacter.trivial(g),)
    prev = exterior_powers(a, k - 1)
    acc = VirtualCharacter.zero(g)
    for m in range(1, k + 1):
        term = a.adams(m) * prev[k - m]
        acc = acc + term if m % 2 else acc - term
    mults = acc.multiplicities()
    if any(x % k for x in mults):
        raise IntegralityError(f"Newton sum for lambda^{k} has multiplicities {mults} not divisible by {k}")
    inv_k = Fraction(1, k)
    lam = VirtualCharacter._raw(g, [v * inv_k for v in acc.values])
    lam._mult = tuple(x // k for x in mults)
    return prev + (lam,)


def exterior(a: VirtualCharacter, k: int) -> VirtualCharacter:
    return exterior_powers(a, k)[k]


def det_rep(v: VirtualCharacter) -> VirtualCharacter:
    """lambda^n of a genuine n-dimensional representation: a one-dimensional character."""
    if not v.is_genuine():
        raise NotGenuineError(f"{v!r} is not a genuine representation")
    n = v.dim
    if n < 1:
        raise NotGenuineError("determinant needs dimension >= 1")
    d = exterior(v, n)
    if not d.is_line():
        raise IntegralityError(f"top exterior power {d!r} is not one-dimensional")
    return d


def restrict(a: VirtualCharacter, e: SubgroupEmbedding) -> VirtualCharacter:
    if a.group != e.ambient:
        raise GroupMismatchError(f"character of {a.group.name} restricted along an embedding into {e.ambient.name}")
    return VirtualCharacter._raw(e.subgroup, [a.values[c] for c in e.class_map])


_TERM = re.compile(r"^(?:(\d+)\*)?([A-Za-z_][\w.^]*)$")


def parse_rep(group: FiniteGroupData, spec: str) -> VirtualCharacter:
    """Parse ``k*label + label + ...`` (whitespace-insensitive; ``-`` allowed for virtual terms)."""
    s = re.sub(r"\s+", "", spec)
    if not s:
        raise ValueError("empty representation spec")
    total = VirtualCharacter.zero(group)
    for sign, body in re.findall(r"([+-]?)([^+-]+)", s):
        if re.fullmatch(r"\d+", body):
            term = VirtualCharacter.constant(group, int(body))
        else:
            m = _TERM.match(body)
            if not m:
                raise ValueError(f"cannot parse term {body!r} in {spec!r}")
            k = int(m.group(1) or 1)
            term = k * VirtualCharacter.irreducible(group, m.group(2))
        total = total - term if sign == "-" else total + term
    if re.sub(r"([+-]?)([^+-]+)", "", s):
        raise ValueError(f"cannot parse {spec!r}")
    return total


def joint_restriction_rank(group: FiniteGroupData, embeddings: Sequence[SubgroupEmbedding] | None = None) -> int:
    """Exact rank of R(G) -> prod_H R(H) over cyclic H, on the span of irreducibles."""
    embs = cyclic_subgroup_embeddings(group) if embeddings is None else embeddings
    rows = []
    for e in embs:
        for c in e.class_map:
            rows.append([row[c] for row in group.irreducibles])
    return linalg.rank(rows)
