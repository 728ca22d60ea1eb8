"""
The small quantum group u_q(sl2) at an odd root of unity and its simple modules.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .cyclo import CycNum
from .errors import Unsupported
from .exactla import CMatrix
from .presentation import HopfData, NCExpr, relation, unit_relations
from .qarith import QContext, q_int
from .repcore import Rep

GENERATORS = ("E", "F", "K", "Kinv")


@dataclass(frozen=True)
class UqLabel:
    """V_i for 0 <= i <= n-2, or the n-dimensional V(q^-1) when ``i`` is None."""

    i: Optional[int] = None

    @classmethod
    def Vi(cls, i: int) -> "UqLabel":
        return cls(i)

    @classmethod
    def Vqinv(cls) -> "UqLabel":
        return cls(None)

    @property
    def is_vqinv(self) -> bool:
        return self.i is None

    def highest_weight(self, n: int) -> int:
        return n - 1 if self.i is None else self.i

    def dim(self, n: int) -> int:
        return self.highest_weight(n) + 1

    def validate(self, n: int) -> None:
        _require_odd(n)
        if self.i is not None and not 0 <= self.i <= n - 2:
            raise ValueError(f"V_i needs 0 <= i <= n-2 = {n - 2}, got i={self.i}")

    def to_json(self) -> dict:
        return {"family": "Vqinv"} if self.i is None else {"family": "Vi", "i": self.i}

    def __str__(self) -> str:
        return "V(q^-1)" if self.i is None else f"V_{self.i}"


def _require_odd(n: int) -> None:
    if n < 3 or n % 2 == 0:
        raise Unsupported(f"u_q(sl2) modules are classified here only for odd n >= 3, got n={n}")


def uq_labels(n: int) -> list[UqLabel]:
    """All simple modules, ordered by dimension."""
    _require_odd(n)
    return [UqLabel.Vi(i) for i in range(n - 1)] + [UqLabel.Vqinv()]


def uq_presentation(ctx: QContext) -> HopfData:
    n = ctx.n
    _require_odd(n)
    q = ctx.q
    E, F, K, Ki = (NCExpr.gen(n, s) for s in GENERATORS)
    rels = unit_relations(n, [("K", "Kinv")])
    rels += [
        relation(K * E * Ki, E * (q * q)),
        relation(K * F * Ki, F * (q * q).inv()),
        relation(E * F - F * E, (K - Ki) * (q - q.inv()).inv()),
        relation(E ** n, 0),
        relation(F ** n, 0),
        relation(K ** n, 1),
    ]
    antipode = {
        "E": -(E * Ki),
        "F": -(K * F),
        "K": Ki,
        "Kinv": K,
    }
    counit = {"E": ctx.zero(), "F": ctx.zero(), "K": ctx.one(), "Kinv": ctx.one()}
    one = ctx.one()
    coproduct = {
        "E": ((one, (), ("E",)), (one, ("E",), ("K",))),
        "F": ((one, ("Kinv",), ("F",)), (one, ("F",), ())),
        "K": ((one, ("K",), ("K",)),),
        "Kinv": ((one, ("Kinv",), ("Kinv",)),),
    }
    return HopfData(
        name="u_q(sl2)",
        order=n,
        generators=GENERATORS,
        relations=tuple(rels),
        antipode=antipode,
        counit=counit,
        coproduct=coproduct,
        grouplike="K",
        params={"n": n, "e": ctx.e},
    )


def _rep(ctx: QContext, K, E, F, label: UqLabel, hopf: Optional[HopfData]) -> Rep:
    n = ctx.n
    hopf = hopf or uq_presentation(ctx)
    Kinv = CMatrix.diag(n, [x.inv() for x in K])
    mats = {
        "E": CMatrix.from_sparse(n, len(K), len(K), E),
        "F": CMatrix.from_sparse(n, len(K), len(K), F),
        "K": CMatrix.diag(n, K),
        "Kinv": Kinv,
    }
    return Rep(hopf, ctx, mats, label.to_json())


def build_Vi(ctx: QContext, i: int, hopf: Optional[HopfData] = None) -> Rep:
    """Basis v_0..v_i: K v_j = q^(i-2j) v_j, E v_j = [i-j+1] v_(j-1), F v_(j-1) = [j] v_j."""
    label = UqLabel.Vi(i)
    label.validate(ctx.n)
    K = [ctx.power(i - 2 * j) for j in range(i + 1)]
    E = {(j - 1, j): q_int(ctx, i - j + 1) for j in range(1, i + 1)}
    F = {(j, j - 1): q_int(ctx, j) for j in range(1, i + 1)}
    return _rep(ctx, K, E, F, label, hopf)


def build_Vqinv(ctx: QContext, hopf: Optional[HopfData] = None) -> Rep:
    n = ctx.n
    _require_odd(n)
    q = ctx.q
    K = [ctx.power(-1 - 2 * j) for j in range(n)]
    # E v_(j+1) = (q^(-j-1) - q^(j+1))/(q - q^-1) [j+1] v_j, F v_j = v_(j+1)
    E = {
        (j, j + 1): (ctx.power(-j - 1) - ctx.power(j + 1)) / (q - q.inv()) * q_int(ctx, j + 1)
        for j in range(n - 1)
    }
    F = {(j + 1, j): 1 for j in range(n - 1)}
    return _rep(ctx, K, E, F, UqLabel.Vqinv(), hopf)


def build_uq(ctx: QContext, label: UqLabel, hopf: Optional[HopfData] = None) -> Rep:
    if label.is_vqinv:
        return build_Vqinv(ctx, hopf)
    return build_Vi(ctx, label.i, hopf)


def mu_closed_form(ctx: QContext, label: UqLabel) -> CycNum:
    """sum_{j=0}^{i} (-q)^(i-2j), with i = n-1 for V(q^-1)."""
    label.validate(ctx.n)
    i = label.highest_weight(ctx.n)
    out = ctx.zero()
    for j in range(i + 1):
        k = i - 2 * j
        out = out + ctx.power(k) * (-1) ** (k % 2)
    return out


def quantum_dim(ctx: QContext, label: UqLabel) -> CycNum:
    """Tr of the K-action on the module."""
    label.validate(ctx.n)
    if label.is_vqinv:
        weights = [-1 - 2 * j for j in range(ctx.n)]
    else:
        weights = [label.i - 2 * j for j in range(label.i + 1)]
    out = ctx.zero()
    for k in weights:
        out = out + ctx.power(k)
    return out
