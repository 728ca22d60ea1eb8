"""
Exact arithmetic in the cyclotomic field Q(zeta_n).

Elements are stored in the power basis 1, z, ..., z^(phi(n)-1) reduced
modulo the n-th cyclotomic polynomial, as a tuple of integer numerators
over one positive common denominator.  The representation is canonical,
so equality is a plain comparison and zero-testing is exact.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Sequence, Union

from .errors import OrderMismatch

RationalLike = Union[int, Fraction, str]


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _exact_div(num: list[int], den: Sequence[int]) -> list[int]:
    # den is monic with integer coefficients, lowest degree first
    num = list(num)
    dn = len(den) - 1
    quot = [0] * (len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        if c:
            quot[k - dn] = c
            for j, dj in enumerate(den):
                num[k - dn + j] -= c * dj
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, constant term first."""
    if n < 1:
        raise ValueError(f"cyclotomic order must be positive, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _exact_div(poly, cyclotomic_poly(d))
    return tuple(poly)


def totient(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """x^k mod Phi_n for 0 <= k < max(n, 2*phi - 1)."""
    phi_poly = cyclotomic_poly(n)
    phi = len(phi_poly) - 1
    size = max(n, 2 * phi - 1, 1)
    table = []
    cur = [1] + [0] * (phi - 1)
    for _ in range(size):
        table.append(tuple(cur))
        # multiply by x, then fold the overflow coefficient back using Phi_n
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(phi):
                cur[j] -= top * phi_poly[j]
    return tuple(table)


def _normalize(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = math.gcd(den, *num)
    if g > 1:
        num = [c // g for c in num]
        den //= g
    if not any(num):
        den = 1
    return tuple(num), den


class CycNum:
    """An element of Q(zeta_n).

    >>> q = root(5, 1)
    >>> q * root(5, 4) == 1
    True
    """

    __slots__ = ("order", "_num", "_den", "_hash")

    def __init__(self, order: int, coeffs: Iterable[RationalLike]):
        fr = [Fraction(c) for c in coeffs]
        phi = totient(order)
        if len(fr) != phi:
            raise ValueError(f"expected {phi} coefficients for order {order}, got {len(fr)}")
        den = 1
        for c in fr:
            den = den * c.denominator // math.gcd(den, c.denominator)
        num = [c.numerator * (den // c.denominator) for c in fr]
        self._set(order, *_normalize(num, den))

    def _set(self, order: int, num: tuple[int, ...], den: int) -> None:
        self.order = order
        self._num = num
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, order: int, num: list[int], den: int = 1) -> "CycNum":
        obj = cls.__new__(cls)
        obj._set(order, *_normalize(num, den))
        return obj

    # -- inspection ---------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    def is_zero(self) -> bool:
        return not any(self._num)

    def __bool__(self) -> bool:
        return any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    # -- coercion -----------------------------------------------------------

    def _coerce(self, other) -> "CycNum":
        if isinstance(other, CycNum):
            if other.order != self.order:
                raise OrderMismatch(f"cannot combine Q(zeta_{self.order}) with Q(zeta_{other.order})")
            return other
        if isinstance(other, (int, Rational)):
            return from_rational(Fraction(other), self.order)
        return NotImplemented

    # -- field operations ---------------------------------------------------

    def __add__(self, other) -> "CycNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d1, d2 = self._den, other._den
        if d1 == d2:
            return CycNum._raw(self.order, [a + b for a, b in zip(self._num, other._num)], d1)
        return CycNum._raw(self.order, [a * d2 + b * d1 for a, b in zip(self._num, other._num)], d1 * d2)

    __radd__ = __add__

    def __neg__(self) -> "CycNum":
        out = CycNum.__new__(CycNum)
        out._set(self.order, tuple(-c for c in self._num), self._den)
        return out

    def __sub__(self, other) -> "CycNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "CycNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other) -> "CycNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._num, other._num
        phi = len(a)
        if not any(a[1:]) or not any(b[1:]):
            # rational factor: scale coefficientwise
            if not any(a[1:]):
                s, v = a[0], b
            else:
                s, v = b[0], a
            return CycNum._raw(self.order, [s * c for c in v], self._den * other._den)
        prod = [0] * (2 * phi - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        res = prod[:phi]
        table = _power_table(self.order)
        for k in range(phi, 2 * phi - 1):
            c = prod[k]
            if c:
                row = table[k]
                for j in range(phi):
                    res[j] += c * row[j]
        return CycNum._raw(self.order, res, self._den * other._den)

    __rmul__ = __mul__

    def inv(self) -> "CycNum":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return CycNum._raw(self.order, [self._den] + [0] * (len(self._num) - 1), self._num[0])
        s = _poly_inverse_mod(list(self._num), cyclotomic_poly(self.order))
        return CycNum(self.order, [c * self._den for c in s])

    def __truediv__(self, other) -> "CycNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other) -> "CycNum":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inv()

    def __pow__(self, k: int) -> "CycNum":
        if k < 0:
            return self.inv() ** (-k)
        acc = from_rational(1, self.order)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            k >>= 1
            if k:
                base = base * base
        return acc

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, CycNum):
            return self.order == other.order and self._den == other._den and self._num == other._num
        if isinstance(other, (int, Rational)):
            return self.is_rational() and Fraction(self._num[0], self._den) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self._num[0], self._den))
            else:
                self._hash = hash((self.order, self._num, self._den))
        return self._hash

    # -- presentation -------------------------------------------------------

    def apply_automorphism(self, k: int) -> "CycNum":
        """Image under z -> z^k (k coprime to the order)."""
        if math.gcd(k, self.order) != 1:
            raise ValueError(f"{k} is not a unit mod {self.order}")
        out = from_rational(0, self.order)
        for j, c in enumerate(self._num):
            if c:
                out = out + root(self.order, j * k) * c
        return out / self._den

    def pretty(self, var: str = "q", exponent: int = 1) -> str:
        """Render as a polynomial in ``var`` = z^exponent, ascending powers.

        >>> (1 - root(7, 2) + Fraction(1, 2) * root(7, 3)).pretty()
        '1 - q^2 + (1/2)q^3'
        """
        x = self
        if exponent % self.order != 1 % self.order:
            x = self.apply_automorphism(pow(exponent, -1, self.order))
        parts = []
        for k, c in enumerate(x.coeffs):
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            c = abs(c)
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if not mono:
                body = str(c)
            elif c == 1:
                body = mono
            elif c.denominator == 1:
                body = f"{c}{mono}"
            else:
                body = f"({c}){mono}"
            parts.append((sign, body))
        if not parts:
            return "0"
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"CycNum({self.order}, {self.pretty('z')})"

    __str__ = pretty

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [_fmt_rational(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "CycNum":
        return cls(int(obj["order"]), [Fraction(c) for c in obj["coeffs"]])


def _fmt_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _poly_trim(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = c
        for j, bj in enumerate(b):
            a[shift + j] -= c * bj
        a.pop()
        _poly_trim(a)
    return q, a


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _poly_trim([Fraction(c) for c in out])


def _poly_inverse_mod(a: Sequence[int], modulus: Sequence[int]) -> list[Fraction]:
    """s with s*a = 1 mod modulus, by the extended Euclidean algorithm over Q."""
    phi = len(modulus) - 1
    r0, r1 = [Fraction(c) for c in modulus], _poly_trim([Fraction(c) for c in a])
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        quo, rem = _poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_sub(s0, _poly_mul(quo, s1))
    if not r1:
        raise ZeroDivisionError("element is not invertible")
    c = r1[0]
    s = [x / c for x in s1]
    _, s = _poly_divmod(s, [Fraction(x) for x in modulus])
    return s + [Fraction(0)] * (phi - len(s))


@lru_cache(maxsize=None)
def _unit(order: int, k: int) -> CycNum:
    return CycNum._raw(order, list(_power_table(order)[k]))


def from_rational(x: RationalLike, n: int) -> CycNum:
    """The constant x embedded in Q(zeta_n)."""
    x = Fraction(x)
    phi = totient(n)
    return CycNum._raw(n, [x.numerator] + [0] * (phi - 1), x.denominator)


def root(n: int, e: int = 1) -> CycNum:
    """zeta_n ** e in canonical form."""
    if n < 1:
        raise ValueError(f"cyclotomic order must be positive, got {n}")
    return _unit(n, e % n)


def zero(n: int) -> CycNum:
    return from_rational(0, n)


def one(n: int) -> CycNum:
    return from_rational(1, n)


def as_cyc(x, n: int) -> CycNum:
    if isinstance(x, CycNum):
        if x.order != n:
            raise OrderMismatch(f"expected Q(zeta_{n}), got Q(zeta_{x.order})")
        return x
    return from_rational(x, n)
