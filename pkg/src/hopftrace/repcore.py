"""
Representations of presented Hopf algebras and the antipode trace.

For a simple self-dual module V with representation phi, the antipode
induces S_V on End(V) by S_V(phi(h)) = phi(S(h)).  Skolem-Noether gives an
invertible Q with S_V(X) = Q X^T Q^-1; with U = Q (Q^-1)^T the invariant is
mu(V) = Tr(S_V) = Tr(U).  ``mu`` follows that route, ``mu_oracle`` builds
S_V directly from preimages of matrix units and never looks at Q.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from .cyclo import CycNum, from_rational
from .errors import (
    Degenerate,
    DimensionMismatch,
    NotScalar,
    NotSelfDual,
    NotSimple,
    SingularMatrix,
    SpanNotReached,
)
from .exactla import CMatrix, Echelon, sylvester_nullspace
from .presentation import HopfData, NCExpr, Word
from .qarith import QContext


@dataclass(frozen=True, eq=False)
class Rep:
    """A finite-dimensional representation: one matrix per generator."""

    hopf: HopfData
    ctx: QContext
    matrices: Mapping[str, CMatrix]
    label: Mapping[str, object] = field(default_factory=lambda: {"family": "custom"})

    def __post_init__(self):
        missing = [g for g in self.hopf.generators if g not in self.matrices]
        if missing:
            raise ValueError(f"no matrix for generators {missing}")
        dims = {m.shape for m in self.matrices.values()}
        if len(dims) != 1 or next(iter(dims))[0] != next(iter(dims))[1]:
            raise DimensionMismatch(f"generator matrices must share one square shape, got {dims}")

    @property
    def dim(self) -> int:
        return next(iter(self.matrices.values())).rows

    @property
    def order(self) -> int:
        return self.hopf.order

    def __getitem__(self, symbol: str) -> CMatrix:
        return self.matrices[symbol]

    def to_json(self) -> dict:
        return {
            "hopf": self.hopf.name,
            "n": self.ctx.n,
            "exponent": self.ctx.e,
            "dim": self.dim,
            "label": dict(self.label),
            "matrices": {g: self.matrices[g].to_json() for g in self.hopf.generators},
        }


def rep_from_json(obj: dict, hopf: HopfData) -> Rep:
    if obj["hopf"] != hopf.name:
        raise ValueError(f"serialized rep belongs to {obj['hopf']!r}, not {hopf.name!r}")
    mats = {g: CMatrix.from_json(m) for g, m in obj["matrices"].items()}
    rep = Rep(hopf, QContext(obj["n"], obj["exponent"]), mats, obj.get("label", {"family": "custom"}))
    if rep.dim != obj["dim"]:
        raise DimensionMismatch("declared dim disagrees with matrices")
    return rep


@dataclass(frozen=True)
class MuReport:
    self_dual: bool
    mu: CycNum
    Q: Optional[CMatrix] = None
    U: Optional[CMatrix] = None
    oracle_mu: Optional[CycNum] = None
    pivot_scalar: Optional[CycNum] = None

    def to_json(self) -> dict:
        out = {"self_dual": self.self_dual, "mu": self.mu.to_json()}
        for key in ("Q", "U", "oracle_mu", "pivot_scalar"):
            val = getattr(self, key)
            if val is not None:
                out[key] = val.to_json()
        return out


@dataclass
class FormReport:
    """Outcome of ``bilinear_form_checks``; truthy iff nothing failed."""

    violations: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


# -- evaluation --------------------------------------------------------------

def eval_word(rep: Rep, word: Word) -> CMatrix:
    out = CMatrix.identity(rep.order, rep.dim)
    for g in word:
        if g not in rep.matrices:
            raise KeyError(f"unknown generator symbol {g!r}")
        out = out @ rep.matrices[g]
    return out


def evaluate(rep: Rep, expr: NCExpr) -> CMatrix:
    """Sum of coeff * (product of generator matrices in word order)."""
    out = CMatrix.zeros(rep.order, rep.dim)
    for w, c in expr.terms.items():
        out = out + eval_word(rep, w).scale(c)
    return out


def eval_antipode(rep: Rep, g: str) -> CMatrix:
    return evaluate(rep, rep.hopf.antipode[g])


def check_relations(rep: Rep) -> list[str]:
    """Descriptions of every relation that fails on rep (empty when valid)."""
    bad = []
    for k, (lhs, rhs) in enumerate(rep.hopf.relations):
        if evaluate(rep, lhs) != evaluate(rep, rhs):
            bad.append(f"relation {k}: {lhs.pretty()} = {rhs.pretty()}")
    return bad


def dual_rep(rep: Rep) -> Rep:
    """h acts on the dual basis by the transpose of phi(S(h))."""
    mats = {g: eval_antipode(rep, g).T for g in rep.hopf.generators}
    return Rep(rep.hopf, rep.ctx, mats, {"family": "custom", "kind": "dual", "of": dict(rep.label)})


def conjugate_rep(rep: Rep, P: CMatrix) -> Rep:
    """The same module in the basis given by the columns of P^-1."""
    Pinv = P.inverse()
    mats = {g: P @ m @ Pinv for g, m in rep.matrices.items()}
    return Rep(rep.hopf, rep.ctx, mats, {"family": "custom", "kind": "conjugate", "of": dict(rep.label)})


def intertwiners(rep1: Rep, rep2: Rep) -> list[CMatrix]:
    """Basis of {T : T rep1(g) = rep2(g) T for all generators g}."""
    if rep1.order != rep2.order:
        raise DimensionMismatch("representations live over different fields")
    gens = rep1.hopf.generators
    return sylvester_nullspace((rep2[g], rep1[g]) for g in gens)


# -- Skolem-Noether route ----------------------------------------------------

def skolem_noether_Q(rep: Rep) -> CMatrix:
    """Normalized Q with phi(S(g)) Q = Q phi(g)^T for every generator."""
    basis = sylvester_nullspace((eval_antipode(rep, g), rep[g].T) for g in rep.hopf.generators)
    if not basis:
        raise NotSelfDual(f"{dict(rep.label)} admits no Skolem-Noether matrix")
    if len(basis) > 1:
        raise NotSimple(f"solution space of dimension {len(basis)}; module is not simple")
    Q = basis[0]
    if Q.det().is_zero():
        raise Degenerate("Skolem-Noether solution is singular")
    return Q


def u_matrix(Q: CMatrix) -> CMatrix:
    """U = Q (Q^-1)^T."""
    return Q @ Q.inverse().T


def pivotal_scalar(rep: Rep, U: CMatrix, grouplike: str) -> CycNum:
    """lambda with U = lambda * phi(grouplike)."""
    lam = (U @ rep[grouplike].inverse()).scalar_value()
    if lam is None:
        raise NotScalar(f"U is not a scalar multiple of phi({grouplike})")
    return lam


def mu(rep: Rep, *, oracle: bool = False, grouplike: Optional[str] = None) -> MuReport:
    """The antipode trace of a simple module; zero when it is not self-dual."""
    homs = intertwiners(rep, dual_rep(rep))
    if not homs:
        return MuReport(self_dual=False, mu=from_rational(0, rep.order))
    if len(homs) > 1:
        raise NotSimple(f"dim Hom(V, V*) = {len(homs)}")
    Q = skolem_noether_Q(rep)
    U = u_matrix(Q)
    lam = None
    if grouplike is None:
        grouplike = rep.hopf.grouplike
    if grouplike is not None:
        lam = pivotal_scalar(rep, U, grouplike)
    return MuReport(
        self_dual=True,
        mu=U.trace(),
        Q=Q,
        U=U,
        oracle_mu=mu_oracle(rep) if oracle else None,
        pivot_scalar=lam,
    )


# -- direct route ------------------------------------------------------------

def word_basis(rep: Rep, max_len: Optional[int] = None) -> list[tuple[Word, CMatrix, CMatrix, dict]]:
    """Greedy spanning set of End(V) among words ordered by (length, lex).

    Returns (word, phi(word), phi(S(word)), echelon-row) data used by
    ``mu_oracle``.  Only extensions of kept words are explored: if phi(w)
    lies in the span of earlier words then so does phi(w g).
    """
    l = rep.dim
    size = l * l
    if max_len is None:
        max_len = 2 * (l - 1) + 2
    gens = rep.hopf.generators
    gmat = {g: rep[g] for g in gens}
    smat = {g: eval_antipode(rep, g) for g in gens}
    ech = Echelon(rep.order)
    kept: list[tuple[Word, CMatrix, CMatrix]] = []
    unit = from_rational(1, rep.order)

    def offer(word, m, s):
        vec = m.vectorize()
        vec[size + len(kept)] = unit
        if ech.insert(vec, limit=size):
            kept.append((word, m, s))
            return True
        return False

    ident = CMatrix.identity(rep.order, l)
    frontier = [((), ident, ident)] if offer((), ident, ident) else []
    length = 0
    while len(ech) < size and frontier and length < max_len:
        length += 1
        nxt = []
        for word, m, s in frontier:
            for g in gens:
                w2, m2, s2 = word + (g,), m @ gmat[g], smat[g] @ s
                if offer(w2, m2, s2):
                    nxt.append((w2, m2, s2))
                if len(ech) == size:
                    break
            if len(ech) == size:
                break
        frontier = nxt
    if len(ech) < size:
        raise SpanNotReached(f"words of length <= {max_len} span only {len(ech)} of {size} dimensions")
    return [(w, m, s, ech.rows) for (w, m, s) in kept]


def mu_oracle(rep: Rep, max_len: Optional[int] = None) -> CycNum:
    """Tr(S_V) from S_V(phi(w)) = phi(S(w)), without Skolem-Noether.

    Each matrix unit E_p is written as sum_w c_w phi(w) over a spanning set
    of words; then Tr(S_V) = sum_p sum_w c_w phi(S(w))[p].
    """
    basis = word_basis(rep, max_len)
    l = rep.dim
    size = l * l
    rows = basis[0][3]
    images = [s for (_, _, s, _) in basis]
    total = from_rational(0, rep.order)
    for p, row in rows.items():
        i, j = divmod(p, l)
        for col, c in row.items():
            if col >= size:
                x = images[col - size][i, j]
                if x:
                    total = total + c * x
    return total


def antipode_trace_on_units(Q: CMatrix) -> CycNum:
    """sum_ij [Q E_ji Q^-1]_ij, the trace of X -> Q X^T Q^-1 on matrix units."""
    Qi = Q.inverse()
    l = Q.rows
    total = from_rational(0, Q.order)
    for i in range(l):
        for j in range(l):
            # [Q E_ji Q^-1]_ij = Q_ij * (Q^-1)_ij
            total = total + Q[i, j] * Qi[i, j]
    return total


def bilinear_form_checks(rep: Rep, Q: CMatrix) -> FormReport:
    """Check the form <v, w> = v^T Q^-1 w.

    Non-degeneracy, the adjoint law Q^-1 phi(S g) = phi(g)^T Q^-1, the
    u-law Q^-1 U = Q^-T and, when a coproduct is present,
    sum phi(h1)^T Q^-1 phi(h2) = eps(h) Q^-1.
    """
    violations = []
    try:
        Qi = Q.inverse()
    except SingularMatrix:
        return FormReport(["Q is singular"])
    hopf = rep.hopf
    for g in hopf.generators:
        if Qi @ eval_antipode(rep, g) != rep[g].T @ Qi:
            violations.append(f"adjoint law fails for {g}")
    if Qi @ u_matrix(Q) != Qi.T:
        violations.append("u-law fails")
    if hopf.coproduct is not None:
        for g in hopf.generators:
            acc = CMatrix.zeros(rep.order, rep.dim)
            for c, left, right in hopf.coproduct[g]:
                acc = acc + (eval_word(rep, left).T @ Qi @ eval_word(rep, right)).scale(c)
            if acc != Qi.scale(hopf.counit[g]):
                violations.append(f"invariance under {g} fails")
    return FormReport(violations)


def antipode_squared_checks(rep: Rep, Q: CMatrix) -> list[str]:
    """S_V^2 is conjugation by U, and X -> Q X^T Q^-1 reverses products."""
    bad = []
    Qi = Q.inverse()
    U = u_matrix(Q)
    Ui = U.inverse()
    hopf = rep.hopf
    for g in hopf.generators:
        ss = evaluate(rep, hopf.apply_antipode(hopf.antipode[g]))
        if U @ rep[g] @ Ui != ss:
            bad.append(f"S^2({g}) is not conjugation by U")
    for g in hopf.generators:
        for h in hopf.generators:
            lhs = Q @ (rep[g] @ rep[h]).T @ Qi
            if lhs != eval_antipode(rep, h) @ eval_antipode(rep, g):
                bad.append(f"anti-homomorphism fails on ({g}, {h})")
    return bad


def is_isomorphic(rep1: Rep, rep2: Rep) -> bool:
    """For simple modules: a nonzero intertwiner exists and it is invertible."""
    if rep1.dim != rep2.dim:
        return False
    homs = intertwiners(rep1, rep2)
    return any(not T.det().is_zero() for T in homs)


def custom_rep(hopf: HopfData, ctx: QContext, matrices: Mapping[str, Sequence], label=None) -> Rep:
    mats = {g: m if isinstance(m, CMatrix) else CMatrix(hopf.order, m) for g, m in matrices.items()}
    return Rep(hopf, ctx, mats, label or {"family": "custom"})
