"""Finite groups described by class data, power maps and character tables.

Nothing here multiplies group elements.  A group is its conjugacy classes
(with sizes), for each class the power map ``k -> class of g^k`` for
``k = 0 .. exponent-1``, and an exact table of irreducible characters.
"""
from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd, lcm
from pathlib import Path
from typing import Sequence

from .cyclo import CyclotomicNumber, zeta

__all__ = [
    "CharacterTableError",
    "ConjugacyClass",
    "FiniteGroupData",
    "SubgroupEmbedding",
    "make_cyclic",
    "make_product",
    "make_dihedral",
    "make_symmetric3",
    "make_symmetric4",
    "make_quaternion",
    "load_character_table",
    "cyclic_subgroup_embeddings",
    "resolve_group",
]

TABLE_PATH_ENV = "KTDUAL_TABLE_PATH"

_ZERO = CyclotomicNumber.coerce(0)
_ONE = CyclotomicNumber.coerce(1)


class CharacterTableError(ValueError):
    """A character table document or constructed table failed validation."""


@dataclass(frozen=True)
class ConjugacyClass:
    label: str = field(compare=False)
    size: int
    power_map: tuple[int, ...]


@dataclass(frozen=True, eq=False)
class FiniteGroupData:
    """Class data and character table of a finite group.

    Equality compares class sizes, power maps and the table itself; names and
    labels are presentation only.
    """

    name: str
    order: int
    exponent: int
    classes: tuple[ConjugacyClass, ...]
    irreducibles: tuple[tuple[CyclotomicNumber, ...], ...]
    labels: tuple[str, ...]
    aliases: dict = field(default_factory=dict)

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    @property
    def identity(self) -> int:
        return self.classes[0].power_map[0]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(c.size for c in self.classes)

    def power(self, c: int, k: int) -> int:
        return self.classes[c].power_map[k % self.exponent]

    def class_order(self, c: int) -> int:
        k = 1
        while self.power(c, k) != self.identity:
            k += 1
        return k

    def dims(self) -> list[int]:
        return [int(row[self.identity].is_rational()) for row in self.irreducibles]

    def is_abelian(self) -> bool:
        return len(self.classes) == self.order

    def inner(self, a: Sequence[CyclotomicNumber], b: Sequence[CyclotomicNumber]) -> CyclotomicNumber:
        """(1/|G|) sum_c |c| a(c) conj(b(c))"""
        acc = _ZERO
        for cls, x, y in zip(self.classes, a, b):
            if x and y:
                acc = acc + cls.size * x * y.conjugate()
        return acc / self.order

    def irrep_index(self, label: str) -> int:
        if label in self.aliases:
            return self.aliases[label]
        try:
            return self.labels.index(label)
        except ValueError:
            pass
        m = re.fullmatch(r"chi(\d+)", label)
        if m and 1 <= int(m.group(1)) <= len(self.irreducibles):
            return int(m.group(1)) - 1
        raise KeyError(f"group {self.name} has no irreducible labelled {label!r}; known: {', '.join(self.labels)}")

    def _key(self):
        return (self.order, self.exponent, self.classes, self.irreducibles)

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, FiniteGroupData):
            return NotImplemented
        return self._key() == other._key()

    @cached_property
    def _hash(self) -> int:
        return hash(self._key())

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"<FiniteGroupData {self.name}: order {self.order}, {self.num_classes} classes>"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "order": self.order,
            "exponent": self.exponent,
            "classes": [
                {"label": c.label, "size": c.size, "power_map": list(c.power_map)} for c in self.classes
            ],
            "irreducibles": [[v.to_json() for v in row] for row in self.irreducibles],
            "labels": list(self.labels),
        }


def validate(g: FiniteGroupData) -> FiniteGroupData:
    """Check every structural invariant of a character table, raising on the first failure."""
    n_cls = len(g.classes)
    N = g.exponent
    if n_cls == 0:
        raise CharacterTableError(f"{g.name}: no conjugacy classes")
    if sum(c.size for c in g.classes) != g.order:
        raise CharacterTableError(f"{g.name}: class sizes sum to {sum(g.sizes)}, order is {g.order}")
    for i, c in enumerate(g.classes):
        if c.size < 1 or g.order % c.size:
            raise CharacterTableError(f"{g.name}: class {c.label!r} has size {c.size} not dividing {g.order}")
        if len(c.power_map) != N:
            raise CharacterTableError(
                f"{g.name}: power map of class {c.label!r} has length {len(c.power_map)}, exponent is {N}"
            )
        if any(not 0 <= p < n_cls for p in c.power_map):
            raise CharacterTableError(f"{g.name}: power map of class {c.label!r} has an out-of-range index")
        if c.power_map[1 % N] != i:
            raise CharacterTableError(f"{g.name}: power map of class {c.label!r} does not fix it at k=1")
    e = g.classes[0].power_map[0]
    for c in g.classes:
        if c.power_map[0] != e:
            raise CharacterTableError(f"{g.name}: class {c.label!r} sends k=0 to a different identity class")
    if g.classes[e].size != 1:
        raise CharacterTableError(f"{g.name}: identity class {g.classes[e].label!r} has size != 1")
    for i, c in enumerate(g.classes):
        for j in range(N):
            for k in range(N):
                if g.classes[c.power_map[j]].power_map[k] != c.power_map[(j * k) % N]:
                    raise CharacterTableError(
                        f"{g.name}: power maps of class {c.label!r} are incoherent at j={j}, k={k}"
                    )
    orders = [g.class_order(i) for i in range(n_cls)]
    if lcm(*orders) != N:
        raise CharacterTableError(f"{g.name}: exponent {N} differs from lcm of element orders {lcm(*orders)}")

    if len(g.irreducibles) != n_cls:
        raise CharacterTableError(f"{g.name}: {len(g.irreducibles)} irreducibles for {n_cls} classes")
    if len(g.labels) != n_cls or len(set(g.labels)) != n_cls:
        raise CharacterTableError(f"{g.name}: irreducible labels must be {n_cls} distinct strings")
    dims = []
    for r, row in enumerate(g.irreducibles):
        if len(row) != n_cls:
            raise CharacterTableError(f"{g.name}: row {g.labels[r]!r} has {len(row)} entries, expected {n_cls}")
        for c, v in enumerate(row):
            if N % v.conductor:
                raise CharacterTableError(
                    f"{g.name}: value of row {g.labels[r]!r} at class {g.classes[c].label!r} is not in Q(zeta_{N})"
                )
        d = row[e].is_rational()
        if d is None or d.denominator != 1 or d < 1:
            raise CharacterTableError(f"{g.name}: row {g.labels[r]!r} has non-positive-integer degree {row[e]}")
        dims.append(int(d))
    if sum(d * d for d in dims) != g.order:
        raise CharacterTableError(f"{g.name}: sum of squared degrees is {sum(d * d for d in dims)}, order is {g.order}")
    for r, row in enumerate(g.irreducibles):
        for c in range(n_cls):
            for k in range(2, N):
                if gcd(k, N) == 1 and row[g.power(c, k)] != row[c].galois(k % row[c].conductor or 1):
                    raise CharacterTableError(
                        f"{g.name}: row {g.labels[r]!r} is not Galois-compatible with the power map"
                        f" at class {g.classes[c].label!r}, k={k}"
                    )
    for r in range(n_cls):
        for s in range(r, n_cls):
            ip = g.inner(g.irreducibles[r], g.irreducibles[s])
            if ip != (1 if r == s else 0):
                raise CharacterTableError(
                    f"{g.name}: rows {g.labels[r]!r} and {g.labels[s]!r} fail orthogonality (inner product {ip})"
                )
    for c in range(n_cls):
        for d in range(c, n_cls):
            acc = _ZERO
            for row in g.irreducibles:
                acc = acc + row[c] * row[d].conjugate()
            want = Fraction(g.order, g.classes[c].size) if c == d else 0
            if acc != want:
                raise CharacterTableError(
                    f"{g.name}: columns {g.classes[c].label!r} and {g.classes[d].label!r} fail orthogonality"
                )
    return g


def _build(name, classes, rows, labels, aliases=None) -> FiniteGroupData:
    exponent = len(classes[0][2])
    cls = tuple(ConjugacyClass(lbl, size, tuple(pm)) for lbl, size, pm in classes)
    irr = tuple(tuple(CyclotomicNumber.coerce(v) for v in row) for row in rows)
    g = FiniteGroupData(
        name=name,
        order=sum(c.size for c in cls),
        exponent=exponent,
        classes=cls,
        irreducibles=irr,
        labels=tuple(labels),
        aliases=dict(aliases or {}),
    )
    return validate(g)


@lru_cache(maxsize=None)
def make_cyclic(n: int) -> FiniteGroupData:
    """Cyclic group of order n; class j is g^j, irreducible i is g^j -> zeta_n^(ij)."""
    if n < 1:
        raise ValueError("cyclic group order must be positive")
    classes = []
    for j in range(n):
        lbl = "1" if j == 0 else ("g" if j == 1 else f"g^{j}")
        classes.append((lbl, 1, [(j * k) % n for k in range(n)]))
    rows = [[zeta(n, i * j) for j in range(n)] for i in range(n)]
    labels = ["triv"] + ["z" if i == 1 else f"z{i}" for i in range(1, n)]
    aliases = {}
    if n == 2:
        labels[1] = "sigma"
        aliases["z"] = 1
    if n == 3:
        aliases.update(omega=1, omega2=2)
    return _build(f"C{n}", classes, rows, labels, aliases)


def make_product(g: FiniteGroupData, h: FiniteGroupData) -> FiniteGroupData:
    """Direct product; classes and irreducibles are ordered lexicographically by pairs."""
    N = lcm(g.exponent, h.exponent)
    nh = h.num_classes
    classes = []
    for a in g.classes:
        for b in h.classes:
            pm = [a.power_map[k % g.exponent] * nh + b.power_map[k % h.exponent] for k in range(N)]
            classes.append((f"({a.label},{b.label})", a.size * b.size, pm))
    rows, labels = [], []
    for ra, la in zip(g.irreducibles, g.labels):
        for rb, lb in zip(h.irreducibles, h.labels):
            rows.append([x * y for x in ra for y in rb])
            labels.append(f"{la}.{lb}")
    aliases = {}
    triv = labels.index(f"{g.labels[0]}.{h.labels[0]}")
    if "triv" not in labels:
        aliases["triv"] = triv
    return _build(f"{g.name}x{h.name}", classes, rows, labels, aliases)


def _rotation_class(m: int, n: int, first_rot: int) -> int:
    m %= n
    if m == 0:
        return 0
    return first_rot + min(m, n - m) - 1


def make_dihedral(n: int) -> FiniteGroupData:
    """Dihedral group of order 2n: identity, reflection class(es), then rotations r^k, k = 1..n//2."""
    if n < 1:
        raise ValueError("dihedral groups need n >= 1")
    N = lcm(n, 2)
    refl_pm = lambda idx: [0 if k % 2 == 0 else idx for k in range(N)]  # noqa: E731
    classes = [("1", 1, [0] * N)]
    if n % 2:
        classes.append(("s", n, refl_pm(1)))
        first_rot = 2
    else:
        classes.append(("s", n // 2, refl_pm(1)))
        classes.append(("sr", n // 2, refl_pm(2)))
        first_rot = 3
    for k in range(1, n // 2 + 1):
        size = 1 if 2 * k == n else 2
        lbl = "r" if k == 1 else f"r^{k}"
        classes.append((lbl, size, [_rotation_class(k * j, n, first_rot) for j in range(N)]))
    rots = range(1, n // 2 + 1)

    def two_dim(h):
        return [2] + [0] * (first_rot - 1) + [zeta(n, h * k) + zeta(n, -h * k) for k in rots]

    if n % 2:
        rows = [[1, 1] + [1] * len(rots), [1, -1] + [1] * len(rots)]
        labels = ["triv", "sign"]
    else:
        rows = [
            [1, 1, 1] + [1] * len(rots),
            [1, -1, -1] + [1] * len(rots),
            [1, 1, -1] + [(-1) ** k for k in rots],
            [1, -1, 1] + [(-1) ** k for k in rots],
        ]
        labels = ["triv", "sign", "chi_s", "chi_sr"]
    for h in range(1, (n - 1) // 2 + 1):
        rows.append(two_dim(h))
        labels.append(f"rho{h}")
    aliases = {"std": labels.index("rho1")} if "rho1" in labels else {}
    return _build(f"D{n}", classes, rows, labels, aliases)


def make_symmetric3() -> FiniteGroupData:
    d = make_dihedral(3)
    classes = [(lbl, c.size, c.power_map) for lbl, c in zip(("1", "(12)", "(123)"), d.classes)]
    return _build("S3", classes, d.irreducibles, ("triv", "sign", "std"))


def make_symmetric4() -> FiniteGroupData:
    N = 12
    classes = [
        ("1", 1, [0] * N),
        ("(12)", 6, [0 if k % 2 == 0 else 1 for k in range(N)]),
        ("(12)(34)", 3, [0 if k % 2 == 0 else 2 for k in range(N)]),
        ("(123)", 8, [0 if k % 3 == 0 else 3 for k in range(N)]),
        ("(1234)", 6, [(0, 4, 2, 4)[k % 4] for k in range(N)]),
    ]
    rows = [
        [1, 1, 1, 1, 1],
        [1, -1, 1, 1, -1],
        [2, 0, 2, -1, 0],
        [3, 1, -1, 0, -1],
        [3, -1, -1, 0, 1],
    ]
    return _build("S4", classes, rows, ("triv", "sign", "rho2", "std", "std_sign"))


def make_quaternion() -> FiniteGroupData:
    classes = [
        ("1", 1, [0, 0, 0, 0]),
        ("-1", 1, [0, 1, 0, 1]),
        ("i", 2, [0, 2, 1, 2]),
        ("j", 2, [0, 3, 1, 3]),
        ("k", 2, [0, 4, 1, 4]),
    ]
    rows = [
        [1, 1, 1, 1, 1],
        [1, 1, 1, -1, -1],
        [1, 1, -1, 1, -1],
        [1, 1, -1, -1, 1],
        [2, -2, 0, 0, 0],
    ]
    return _build("Q8", classes, rows, ("triv", "chi_i", "chi_j", "chi_k", "rho"))


_TABLE_SCHEMA = {
    "type": "object",
    "required": ["name", "order", "exponent", "classes", "irreducibles"],
    "properties": {
        "name": {"type": "string"},
        "order": {"type": "integer", "minimum": 1},
        "exponent": {"type": "integer", "minimum": 1},
        "classes": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["label", "size", "power_map"],
                "properties": {
                    "label": {"type": "string"},
                    "size": {"type": "integer", "minimum": 1},
                    "power_map": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                },
            },
        },
        "irreducibles": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {
                    "anyOf": [
                        {"type": "integer"},
                        {"type": "string"},
                        {
                            "type": "object",
                            "required": ["conductor", "coeffs"],
                            "properties": {
                                "conductor": {"type": "integer", "minimum": 1},
                                "coeffs": {"type": "array", "items": {"type": ["string", "integer"]}},
                            },
                        },
                    ]
                },
            },
        },
        "labels": {"type": "array", "items": {"type": "string"}},
    },
}


def load_character_table(document) -> FiniteGroupData:
    """Build a validated group from a parsed JSON document, a JSON string, or a path."""
    import jsonschema

    if isinstance(document, (str, os.PathLike)):
        p = Path(document)
        document = json.loads(p.read_text()) if p.exists() else json.loads(str(document))
    try:
        jsonschema.validate(document, _TABLE_SCHEMA)
    except jsonschema.ValidationError as exc:
        path = "/".join(str(x) for x in exc.absolute_path)
        raise CharacterTableError(f"schema violation at {path or '<root>'}: {exc.message}") from None
    n_cls = len(document["classes"])
    classes = tuple(
        ConjugacyClass(c["label"], c["size"], tuple(c["power_map"])) for c in document["classes"]
    )
    try:
        irr = tuple(tuple(CyclotomicNumber.coerce(v) for v in row) for row in document["irreducibles"])
    except (ValueError, ZeroDivisionError) as exc:
        raise CharacterTableError(f"bad character value: {exc}") from None
    labels = document.get("labels") or [f"chi{i + 1}" for i in range(len(irr))]
    g = FiniteGroupData(
        name=document["name"],
        order=document["order"],
        exponent=document["exponent"],
        classes=classes,
        irreducibles=irr,
        labels=tuple(labels),
    )
    if len(irr) != n_cls:
        raise CharacterTableError(f"{g.name}: {len(irr)} irreducibles for {n_cls} classes")
    return validate(g)


@dataclass(frozen=True)
class SubgroupEmbedding:
    subgroup: FiniteGroupData
    ambient: FiniteGroupData
    class_map: tuple[int, ...]

    def __post_init__(self):
        sub, amb = self.subgroup, self.ambient
        if len(self.class_map) != sub.num_classes:
            raise CharacterTableError("class map length differs from number of subgroup classes")
        if self.class_map[sub.identity] != amb.identity:
            raise CharacterTableError("class map does not send identity to identity")
        for j, c in enumerate(self.class_map):
            for k in range(lcm(sub.exponent, amb.exponent)):
                if self.class_map[sub.power(j, k)] != amb.power(c, k):
                    raise CharacterTableError(
                        f"class map does not commute with power maps at subgroup class {sub.classes[j].label!r}, k={k}"
                    )

    @property
    def image(self) -> frozenset[int]:
        return frozenset(self.class_map)


def cyclic_subgroup_embeddings(g: FiniteGroupData) -> list[SubgroupEmbedding]:
    """One cyclic subgroup per distinct set of generated classes, ordered by subgroup order."""
    seen: dict[frozenset, SubgroupEmbedding] = {}
    for c in range(g.num_classes):
        o = g.class_order(c)
        cmap = tuple(g.power(c, j) for j in range(o))
        key = frozenset(cmap)
        if key not in seen:
            seen[key] = SubgroupEmbedding(make_cyclic(o), g, cmap)
    return sorted(seen.values(), key=lambda e: e.subgroup.order)


_BUILTIN = re.compile(r"c(\d+)|d(\d+)|s3|s4|q8")


def _builtin_factor(tok: str) -> FiniteGroupData | None:
    m = _BUILTIN.fullmatch(tok)
    if not m:
        return None
    if m.group(1):
        return make_cyclic(int(m.group(1)))
    if m.group(2):
        n = int(m.group(2))
        return make_dihedral(n)
    return {"s3": make_symmetric3, "s4": make_symmetric4, "q8": make_quaternion}[tok]()


def resolve_group(spec: str, search_path: str | None = None) -> FiniteGroupData:
    """Resolve a builtin name (``c5``, ``d4``, ``s3``, ``s4``, ``q8``, ``c2xc3``) or a table file."""
    tok = spec.strip().lower()
    factors = [_builtin_factor(t) for t in tok.split("x")]
    if factors and all(f is not None for f in factors):
        g = factors[0]
        for f in factors[1:]:
            g = make_product(g, f)
        return g
    candidates = [Path(spec)]
    search = search_path if search_path is not None else os.environ.get(TABLE_PATH_ENV)
    if search:
        for d in search.split(os.pathsep):
            candidates += [Path(d) / spec, Path(d) / f"{spec}.json"]
    for p in candidates:
        if p.is_file():
            return load_character_table(json.loads(p.read_text()))
    raise LookupError(f"unknown group {spec!r}: not a builtin and no table file found")
