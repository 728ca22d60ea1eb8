"""
H_n(1,q), a presentation of the Drinfeld double of the Taft algebra.

Simple modules are V(l, r) with 1 <= l <= n and r taken mod n.  For odd n
the projection psi : H_n(1,q^2) -> u_q(sl2) pulls every simple u_q-module
back to one of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .cyclo import CycNum
from .errors import Unsupported
from .exactla import CMatrix
from .presentation import HopfData, NCExpr, relation, unit_relations
from .qarith import QContext, alpha
from .repcore import Rep
from .uqsl2 import UqLabel, build_uq

GENERATORS = ("a", "b", "c", "d", "binv", "cinv")


@dataclass(frozen=True, order=True)
class VlrLabel:
    l: int
    r: int

    def to_json(self) -> dict:
        return {"family": "Vlr", "l": self.l, "r": self.r}

    def __str__(self) -> str:
        return f"V({self.l},{self.r})"


def vlr_label(n: int, l: int, r: int) -> VlrLabel:
    """Label with r reduced to its representative in 1..n."""
    if not 1 <= l <= n:
        raise ValueError(f"V(l,r) needs 1 <= l <= n={n}, got l={l}")
    return VlrLabel(l, (r - 1) % n + 1)


def all_labels(n: int) -> list[VlrLabel]:
    return [VlrLabel(l, r) for l in range(1, n + 1) for r in range(1, n + 1)]


def hn1q_presentation(ctx: QContext) -> HopfData:
    n = ctx.n
    q = ctx.q
    a, b, c, d, bi, ci = (NCExpr.gen(n, s) for s in GENERATORS)
    rels = unit_relations(n, [("b", "binv"), ("c", "cinv")])
    rels += [
        relation(a ** n, 0),
        relation(b ** n, 1),
        relation(c ** n, 1),
        relation(d ** n, 0),
        relation(b * a, a * b * q),
        relation(d * b, b * d * q),
        relation(c * a, a * c * q),
        relation(d * c, c * d * q),
        relation(b * c, c * b),
        relation(d * a - a * d * q, 1 - b * c),
    ]
    antipode = {
        "a": -(a * bi),
        "b": bi,
        "c": ci,
        "d": -(d * ci),
        "binv": b,
        "cinv": c,
    }
    counit = {"a": ctx.zero(), "d": ctx.zero(), "b": ctx.one(), "c": ctx.one(),
              "binv": ctx.one(), "cinv": ctx.one()}
    return HopfData(
        name="H_n(1,q)",
        order=n,
        generators=GENERATORS,
        relations=tuple(rels),
        antipode=antipode,
        counit=counit,
        params={"n": n, "e": ctx.e},
    )


def build_Vlr(ctx: QContext, label: VlrLabel, hopf: Optional[HopfData] = None) -> Rep:
    """Basis v_1..v_l: a v_i = v_(i+1), b v_i = q^(r+i-1) v_i,
    c v_i = q^(i-(r+l)) v_i, d v_i = alpha_(i-1)(l) v_(i-1)."""
    n = ctx.n
    l, r = label.l, label.r
    if not 1 <= l <= n:
        raise ValueError(f"V(l,r) needs 1 <= l <= n={n}, got l={l}")
    hopf = hopf or hn1q_presentation(ctx)
    bdiag = [ctx.power(r + i - 1) for i in range(1, l + 1)]
    cdiag = [ctx.power(i - (r + l)) for i in range(1, l + 1)]
    # 0-based: a sends column i-1 to row i; d sends column i-1 to row i-2
    amat = CMatrix.from_sparse(n, l, l, {(i, i - 1): 1 for i in range(1, l)})
    dmat = CMatrix.from_sparse(n, l, l, {(i - 2, i - 1): alpha(ctx, i - 1, l) for i in range(2, l + 1)})
    mats = {
        "a": amat,
        "b": CMatrix.diag(n, bdiag),
        "c": CMatrix.diag(n, cdiag),
        "d": dmat,
        "binv": CMatrix.diag(n, [x.inv() for x in bdiag]),
        "cinv": CMatrix.diag(n, [x.inv() for x in cdiag]),
    }
    return Rep(hopf, ctx, mats, vlr_label(n, l, r).to_json())


def dual_label(n: int, label: VlrLabel) -> VlrLabel:
    """V(l, r)* is isomorphic to V(l, 1 - (r + l))."""
    return vlr_label(n, label.l, 1 - (label.r + label.l))


def is_self_dual(n: int, label: VlrLabel) -> bool:
    return (2 * label.r + label.l - 1) % n == 0


def self_dual_catalog(n: int) -> list[VlrLabel]:
    if n < 2:
        raise ValueError("n >= 2 required")
    return [lab for lab in all_labels(n) if is_self_dual(n, lab)]


def correspondence_label(n: int, label: UqLabel) -> VlrLabel:
    """The V(l, r) over H_n(1,q^2) that a simple u_q-module pulls back to."""
    if n % 2 == 0:
        raise Unsupported("the projection onto u_q(sl2) needs odd n")
    label.validate(n)
    if label.is_vqinv:
        return vlr_label(n, n, (n + 1) // 2)
    i = label.i
    if i % 2 == 0:
        return vlr_label(n, i + 1, n - i // 2)
    return vlr_label(n, i + 1, (n - i) // 2)


def pullback_along_psi(ctx_base: QContext, label: UqLabel) -> Rep:
    """H_n(1,q^2)-module through a -> E, b -> K, c -> K, d -> ((q - q^-1)/q^2) F K."""
    n = ctx_base.n
    if n % 2 == 0:
        raise Unsupported("the projection onto u_q(sl2) needs odd n")
    ctx_sq = ctx_base.squared()
    V = build_uq(ctx_base, label)
    q = ctx_base.q
    coef = (q - q.inv()) / (q * q)
    mats = {
        "a": V["E"],
        "b": V["K"],
        "c": V["K"],
        "d": (V["F"] @ V["K"]).scale(coef),
        "binv": V["Kinv"],
        "cinv": V["Kinv"],
    }
    hopf = hn1q_presentation(ctx_sq)
    return Rep(hopf, ctx_sq, mats, {"family": "pullback", "of": label.to_json()})


def mu_closed_form_double(ctx_base: QContext, label: VlrLabel) -> CycNum:
    """For V(l, r) over H_n(1,q^2): sum_{j=1}^{l} (-q)^(l-2j+1) if 2r = 1-l mod n, else 0."""
    n = ctx_base.n
    if n % 2 == 0:
        raise Unsupported("closed form is stated for odd n only")
    l, r = label.l, label.r
    out = ctx_base.zero()
    if (2 * r - (1 - l)) % n != 0:
        return out
    for j in range(1, l + 1):
        k = l - 2 * j + 1
        out = out + ctx_base.power(k) * (-1) ** (k % 2)
    return out
