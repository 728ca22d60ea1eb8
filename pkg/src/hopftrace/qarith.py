"""
q-combinatorics at a root of unity.

Two families of q-analogues are used: the balanced integers
``[i] = (q^i - q^-i)/(q - q^-1)`` with their factorials and binomials,
and the one-sided ``(i)_q = 1 + q + ... + q^(i-1)`` with the structure
constants ``alpha_i(l) = (i)_q (1 - q^(i-l))`` of the Taft-double modules.
Everything is evaluated straight from its defining formula.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cyclo import CycNum, one, root, zero
from .errors import Unsupported


@dataclass(frozen=True)
class QContext:
    """A cyclotomic order n together with the primitive root q = zeta_n^e."""

    n: int
    e: int = 1

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if math.gcd(self.e, self.n) != 1:
            raise ValueError(f"exponent {self.e} is not coprime to n={self.n}; q would not be primitive")
        object.__setattr__(self, "e", self.e % self.n if self.n > 1 else 0)

    @property
    def q(self) -> CycNum:
        return root(self.n, self.e)

    def power(self, k: int) -> CycNum:
        return root(self.n, self.e * k)

    def one(self) -> CycNum:
        return one(self.n)

    def zero(self) -> CycNum:
        return zero(self.n)

    def squared(self) -> "QContext":
        """Context whose root is q^2 (primitive only for odd n)."""
        if self.n % 2 == 0:
            raise Unsupported(f"q^2 is not a primitive {self.n}-th root for even n")
        return QContext(self.n, 2 * self.e)

    def square_root(self) -> "QContext":
        """Inverse of ``squared``: the base root s^((n+1)/2)."""
        if self.n % 2 == 0:
            raise Unsupported("square-root context needs odd n")
        return QContext(self.n, self.e * (self.n + 1) // 2)


def q_int(ctx: QContext, i: int) -> CycNum:
    q = ctx.q
    return (ctx.power(i) - ctx.power(-i)) / (q - q.inv())


def q_factorial(ctx: QContext, k: int) -> CycNum:
    if k < 0:
        raise ValueError("q_factorial needs k >= 0")
    out = ctx.one()
    for j in range(1, k + 1):
        out = out * q_int(ctx, j)
    return out


def q_binomial(ctx: QContext, i: int, k: int) -> CycNum:
    if not 0 <= k <= i:
        raise ValueError(f"q_binomial needs 0 <= k <= i, got i={i}, k={k}")
    den = q_factorial(ctx, k) * q_factorial(ctx, i - k)
    if den.is_zero():
        raise ZeroDivisionError(f"[{k}]![{i - k}]! vanishes at n={ctx.n}")
    return q_factorial(ctx, i) / den


def paren_q(ctx: QContext, i: int) -> CycNum:
    """(i)_q = (q^i - 1)/(q - 1)."""
    if i < 0:
        raise ValueError("paren_q needs i >= 0")
    return (ctx.power(i) - 1) / (ctx.q - 1)


def paren_factorial(ctx: QContext, i: int) -> CycNum:
    out = ctx.one()
    for j in range(1, i + 1):
        out = out * paren_q(ctx, j)
    return out


def alpha(ctx: QContext, i: int, l: int) -> CycNum:
    """Coefficient of the d-action on V(l, r); alpha_0(l) is 0."""
    if not 1 <= l <= ctx.n:
        raise ValueError(f"alpha needs 1 <= l <= n={ctx.n}, got l={l}")
    if not 0 <= i <= l - 1:
        raise ValueError(f"alpha needs 0 <= i <= l-1, got i={i}, l={l}")
    return paren_q(ctx, i) * (1 - ctx.power(i - l))
