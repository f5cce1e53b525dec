"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in the power basis ``1, z, ..., z^(phi(N)-1)`` of
``Q[z]/Phi_N(z)`` as integer numerators over one positive common
denominator.  Every value is kept at its minimal conductor, so two equal
numbers always have identical internal state and hash alike.
"""
from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from numbers import Rational

__all__ = [
    "CyclotomicNumber",
    "zeta",
    "cyclotomic_polynomial",
    "euler_phi",
]


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


@lru_cache(maxsize=None)
def _prime_power(n: int) -> int:
    """p if n = p^k with k >= 1, else 0."""
    ps = _prime_factors(n)
    return ps[0] if len(ps) == 1 else 0


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    result = n
    for p in _prime_factors(n):
        result -= result // p
    return result


def _poly_divexact(a: list[int], b: tuple[int, ...]) -> list[int]:
    # b monic, exact division over Z
    a = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    if any(a[:db]):
        raise ArithmeticError("inexact polynomial division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("conductor must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row j is z^j reduced mod Phi_n, for j = 0..n-1."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(deg):
                cur[i] -= top * phi[i]
    return tuple(rows)


def _reduce(n: int, coeffs: list[int]) -> list[int]:
    """Reduce an integer coefficient list (any length) modulo Phi_n."""
    deg = euler_phi(n)
    if len(coeffs) <= deg:
        return coeffs + [0] * (deg - len(coeffs))
    table = _power_table(n)
    out = coeffs[:deg]
    for k in range(deg, len(coeffs)):
        c = coeffs[k]
        if c:
            row = table[k % n]
            for i in range(deg):
                if row[i]:
                    out[i] += c * row[i]
    return out


@lru_cache(maxsize=None)
def _embed_columns(small: int, big: int) -> tuple[tuple[int, ...], ...]:
    """Images of zeta_small^i (i < phi(small)) in the power basis of conductor big."""
    table = _power_table(big)
    step = big // small
    return tuple(table[(step * i) % big] for i in range(euler_phi(small)))


@lru_cache(maxsize=None)
def _projector(big: int, small: int) -> tuple[tuple[int, ...], tuple[tuple[Fraction, ...], ...]]:
    """Pivot rows and a left inverse of the embedding Q(zeta_small) -> Q(zeta_big).

    Returns ``(pivots, inv)`` with ``inv`` a phi(small) x phi(small) matrix such that
    the coordinates of an embedded element are ``inv`` applied to its entries at
    ``pivots``.
    """
    cols = _embed_columns(small, big)
    m, k = euler_phi(big), euler_phi(small)
    # rows of E (m x k)
    rows = [[Fraction(cols[j][i]) for j in range(k)] for i in range(m)]
    pivots = []
    work = []
    for i in range(m):
        r = rows[i][:]
        for (pi, pr), p_col in zip(work, _pivot_cols(work)):
            if r[p_col]:
                f = r[p_col] / pr[p_col]
                r = [a - f * b for a, b in zip(r, pr)]
        if any(r):
            work.append((i, r))
            pivots.append(i)
            if len(pivots) == k:
                break
    sub = [rows[i] for i in pivots]
    inv = _invert_fraction_matrix(sub)
    return tuple(pivots), tuple(tuple(r) for r in inv)


def _pivot_cols(work):
    return [next(j for j, v in enumerate(r) if v) for _, r in work]


def _invert_fraction_matrix(a: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(a)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        p = next(r for r in range(c, n) if aug[r][c])
        aug[c], aug[p] = aug[p], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


@lru_cache(maxsize=None)
def _int_projector(big: int, small: int):
    pivots, inv = _projector(big, small)
    d = 1
    for row in inv:
        for f in row:
            d = lcm(d, f.denominator)
    return pivots, tuple(tuple(int(f * d) for f in row) for row in inv), d


def _try_project(big: int, small: int, num: tuple[int, ...], den: int):
    """Coordinates over Q(zeta_small) if the element lies there, else None."""
    pivots, inv, d = _int_projector(big, small)
    sub = [num[i] for i in pivots]
    coords = [sum(f * s for f, s in zip(row, sub)) for row in inv]
    cols = _embed_columns(small, big)
    k = len(coords)
    for i in range(len(num)):
        if sum(coords[j] * cols[j][i] for j in range(k)) != num[i] * d:
            return None
    return coords, den * d


def _make(n: int, num: list[int], den: int) -> CyclotomicNumber:
    obj = object.__new__(CyclotomicNumber)
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = den
    for c in num:
        g = gcd(g, c)
        if g == 1:
            break
    if g > 1:
        num = [c // g for c in num]
        den //= g
    if not any(num[1:]):
        n, num = 1, num[:1]
    elif _prime_power(n):
        # Q(zeta_{p^k}) contains Q(zeta_{p^(k-1)}) as the span of the powers divisible by p
        p = _prime_power(n)
        while n % (p * p) == 0 and not any(c for i, c in enumerate(num) if i % p):
            num = num[::p]
            n //= p
    else:
        changed = True
        while changed:
            changed = False
            for p in _prime_factors(n):
                m = n // p
                hit = _try_project(n, m, tuple(num), den)
                if hit is not None:
                    num, den2 = hit
                    g = den2
                    for c in num:
                        g = gcd(g, c)
                    num = [c // g for c in num]
                    den = den2 // g
                    n = m
                    changed = True
                    break
    obj._n = n
    obj._num = tuple(num)
    obj._den = den
    obj._hash = None
    return obj


def _make_known(n: int, num: list[int], den: int) -> CyclotomicNumber:
    """Like _make, for results already known to have conductor exactly n."""
    g = den
    for c in num:
        g = gcd(g, c)
        if g == 1:
            break
    if g > 1:
        num = [c // g for c in num]
        den //= g
    obj = object.__new__(CyclotomicNumber)
    obj._n = n
    obj._num = tuple(num)
    obj._den = den
    obj._hash = None
    return obj


def _embed(a: CyclotomicNumber, big: int) -> list[int]:
    if a._n == big:
        return list(a._num)
    cols = _embed_columns(a._n, big)
    out = [0] * euler_phi(big)
    for c, col in zip(a._num, cols):
        if c:
            for i, v in enumerate(col):
                if v:
                    out[i] += c * v
    return out


def _parse_rational(x) -> Fraction:
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


class CyclotomicNumber:
    """An exact element of Q(zeta_N).

    ``CyclotomicNumber(conductor, coeffs)`` builds ``sum coeffs[i] * zeta_N^i``; the
    coefficients may be any rationals (or ``"p/q"`` strings) and any number of
    them, the polynomial is reduced modulo Phi_N.
    """

    __slots__ = ("_n", "_num", "_den", "_hash")

    def __new__(cls, conductor: int = 1, coeffs=(0,)):
        if conductor < 1:
            raise ValueError("conductor must be a positive integer")
        fr = [_parse_rational(c) for c in coeffs] or [Fraction(0)]
        den = 1
        for c in fr:
            den = lcm(den, c.denominator)
        num = [int(c * den) for c in fr]
        return _make(conductor, _reduce(conductor, num), den)

    @classmethod
    def coerce(cls, x) -> CyclotomicNumber:
        if isinstance(x, CyclotomicNumber):
            return x
        if isinstance(x, (int, Rational, str)):
            q = _parse_rational(x)
            return _make(1, [q.numerator], q.denominator)
        if isinstance(x, dict):
            return cls.from_json(x)
        raise TypeError(f"cannot interpret {x!r} as a cyclotomic number")

    # -- accessors -----------------------------------------------------

    @property
    def conductor(self) -> int:
        return self._n

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    def coeffs_at(self, conductor: int) -> tuple[Fraction, ...]:
        """Power-basis coordinates after embedding into Q(zeta_conductor)."""
        if conductor % self._n:
            raise ValueError(f"Q(zeta_{self._n}) does not embed in Q(zeta_{conductor})")
        return tuple(Fraction(c, self._den) for c in _embed(self, conductor))

    def is_rational(self) -> Fraction | None:
        if self._n == 1:
            return Fraction(self._num[0], self._den)
        return None

    def is_zero(self) -> bool:
        return self._n == 1 and self._num[0] == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic ----------------------------------------------------

    def _binary(self, other, op):
        if type(other) is int:
            # an integer never changes the conductor of the other operand
            if op is CyclotomicNumber._mul:
                if not other:
                    return _ZERO
                return _make_known(self._n, [c * other for c in self._num], self._den)
            k = other * self._den if op is CyclotomicNumber._add else -other * self._den
            return _make_known(self._n, [self._num[0] + k, *self._num[1:]], self._den)
        try:
            other = CyclotomicNumber.coerce(other)
        except TypeError:
            return NotImplemented
        if self._n == 1 and other._n == 1:
            a, da, b, db = self._num[0], self._den, other._num[0], other._den
            if op is CyclotomicNumber._mul:
                num, den = a * b, da * db
            elif op is CyclotomicNumber._add:
                num, den = a * db + b * da, da * db
            else:
                num, den = a * db - b * da, da * db
            if den != 1:
                g = gcd(num, den)
                if g > 1:
                    num //= g
                    den //= g
            obj = object.__new__(CyclotomicNumber)
            obj._n, obj._num, obj._den, obj._hash = 1, (num,), den, None
            return obj
        n = self._n if self._n == other._n else lcm(self._n, other._n)
        a, b = _embed(self, n), _embed(other, n)
        return op(n, a, self._den, b, other._den)

    @staticmethod
    def _add(n, a, da, b, db):
        return _make(n, [x * db + y * da for x, y in zip(a, b)], da * db)

    @staticmethod
    def _sub(n, a, da, b, db):
        return _make(n, [x * db - y * da for x, y in zip(a, b)], da * db)

    @staticmethod
    def _mul(n, a, da, b, db):
        if n == 1:
            return _make(1, [a[0] * b[0]], da * db)
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return _make(n, _reduce(n, prod), da * db)

    def __add__(self, other):
        return self._binary(other, self._add)

    def __radd__(self, other):
        return self._binary(other, self._add)

    def __sub__(self, other):
        return self._binary(other, self._sub)

    def __rsub__(self, other):
        res = self._binary(other, self._sub)
        return res if res is NotImplemented else -res

    def __mul__(self, other):
        return self._binary(other, self._mul)

    def __rmul__(self, other):
        return self._binary(other, self._mul)

    def __neg__(self):
        return _make(self._n, [-c for c in self._num], self._den)

    def __pos__(self):
        return self

    def __truediv__(self, other):
        try:
            other = CyclotomicNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return CyclotomicNumber.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CyclotomicNumber.coerce(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def galois(self, k: int) -> CyclotomicNumber:
        """Apply the automorphism zeta_N -> zeta_N^k (k coprime to N)."""
        n = self._n
        if gcd(k, n) != 1:
            raise ValueError(f"{k} is not a unit modulo {n}")
        table = _power_table(n)
        out = [0] * len(self._num)
        for i, c in enumerate(self._num):
            if c:
                row = table[(i * k) % n]
                for j, v in enumerate(row):
                    if v:
                        out[j] += c * v
        return _make(n, out, self._den)

    def conjugate(self) -> CyclotomicNumber:
        return self.galois(-1)

    def norm(self) -> Fraction:
        """Field norm down to Q."""
        return (self * self._conjugate_product()).is_rational()

    def _conjugate_product(self) -> CyclotomicNumber:
        n = self._n
        prod = CyclotomicNumber.coerce(1)
        for k in range(2, n):
            if gcd(k, n) == 1:
                prod = prod * self.galois(k)
        return prod

    def inverse(self) -> CyclotomicNumber:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self._n == 1:
            return _make(1, [self._den], self._num[0])
        rest = self._conjugate_product()
        nrm = (self * rest).is_rational()
        return _make(self._n, [c * nrm.denominator for c in rest._num], rest._den * nrm.numerator)

    # -- comparison / hashing ------------------------------------------

    def __eq__(self, other) -> bool:
        try:
            other = CyclotomicNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self._n == other._n and self._den == other._den and self._num == other._num

    def __hash__(self) -> int:
        if self._hash is None:
            if self._n == 1:
                self._hash = hash(Fraction(self._num[0], self._den))
            else:
                self._hash = hash((self._n, self._num, self._den))
        return self._hash

    # -- conversion ----------------------------------------------------

    def to_complex(self) -> complex:
        n = self._n
        return sum(
            (c / self._den) * cmath.exp(2j * cmath.pi * i / n) for i, c in enumerate(self._num)
        ) + 0j

    def to_json(self) -> dict:
        return {"conductor": self._n, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, doc: dict) -> CyclotomicNumber:
        return cls(int(doc["conductor"]), doc["coeffs"])

    def __repr__(self) -> str:
        return f"CyclotomicNumber({self._n}, {[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        q = self.is_rational()
        if q is not None:
            return str(q)
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                mono = ""
            elif i == 1:
                mono = f"ζ{self._n}"
            else:
                mono = f"ζ{self._n}^{i}"
            if not mono:
                term = str(abs(c))
            elif abs(c) == 1:
                term = mono
            else:
                term = f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+", term))
        s = "".join(f"{sgn}{t}" for sgn, t in parts)
        return s[1:] if s.startswith("+") else s


def zeta(n: int, k: int = 1) -> CyclotomicNumber:
    """The root of unity exp(2*pi*i*k/n)."""
    k %= n
    coeffs = [0] * (k + 1)
    coeffs[k] = 1
    return CyclotomicNumber(n, coeffs)


_ZERO = _make(1, [0], 1)
