"""
Executable property suites behind ``hopftrace verify``.

Each suite yields ``Check`` records; a suite passes when every check does.
Randomized checks use a fixed seed so runs are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterator

from .cyclo import CycNum, cyclotomic_poly, from_rational, root, totient
from .errors import Unsupported
from .exactla import CMatrix
from .qarith import QContext, alpha, paren_q, q_binomial, q_int
from .repcore import (
    antipode_squared_checks,
    antipode_trace_on_units,
    bilinear_form_checks,
    check_relations,
    dual_rep,
    intertwiners,
    is_isomorphic,
    mu,
    pivotal_scalar,
)
from .taftdouble import (
    all_labels,
    build_Vlr,
    correspondence_label,
    dual_label,
    hn1q_presentation,
    is_self_dual,
    mu_closed_form_double,
    pullback_along_psi,
    self_dual_catalog,
)
from .uqsl2 import build_uq, mu_closed_form, quantum_dim, uq_labels, uq_presentation

SUITES = ("all", "core", "uq", "double", "double-labels")
N_RANGE = (3, 13)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed}
        if self.detail:
            out["detail"] = self.detail
        return out


def random_cyc(rng: random.Random, n: int, span: int = 3) -> CycNum:
    return CycNum(n, [rng.randint(-span, span) for _ in range(totient(n))])


def random_matrix(rng: random.Random, n: int, size: int) -> CMatrix:
    return CMatrix(n, [[random_cyc(rng, n) for _ in range(size)] for _ in range(size)])


def random_invertible(rng: random.Random, n: int, size: int) -> CMatrix:
    while True:
        P = random_matrix(rng, n, size)
        if not P.det().is_zero():
            return P


def _eval_poly(coeffs, x: CycNum) -> CycNum:
    out = from_rational(0, x.order)
    for c in reversed(coeffs):
        out = out * x + c
    return out


def core_checks(n: int, trials: int = 10, seed: int = 0) -> Iterator[Check]:
    rng = random.Random(seed)
    for m in range(1, n + 1):
        z = root(m, 1)
        yield Check(f"root({m},1)^{m} = 1", z ** m == 1)
        yield Check(f"Phi_{m}(root({m},1)) = 0", _eval_poly(cyclotomic_poly(m), z).is_zero())
    axioms = True
    for _ in range(trials):
        a, b, c = (random_cyc(rng, n) for _ in range(3))
        axioms &= (a * b) * c == a * (b * c)
        axioms &= a * (b + c) == a * b + a * c
        axioms &= (a - a).is_zero()
        if a:
            axioms &= a * a.inv() == 1
    yield Check(f"field axioms on {trials} random triples in Q(zeta_{n})", axioms)
    det_ok = inv_ok = True
    for _ in range(max(trials // 2, 1)):
        A, B = random_matrix(rng, n, 3), random_matrix(rng, n, 3)
        det_ok &= (A @ B).det() == A.det() * B.det()
        P = random_invertible(rng, n, 3)
        I = CMatrix.identity(n, 3)
        Pi = P.inverse()
        inv_ok &= P @ Pi == I and Pi @ P == I
    yield Check("det is multiplicative on random 3x3 pairs", det_ok)
    yield Check("inverse law on random invertible 3x3", inv_ok)
    if n % 2:
        ctx, ctx2 = QContext(n), QContext(n).squared()
        ok = all(paren_q(ctx2, i) == ctx.power(i - 1) * q_int(ctx, i) for i in range(1, n))
        yield Check("(i)_{q^2} = q^(i-1) [i]", ok)
    ctx = QContext(n)
    rec = lemma = True
    for l in range(1, n + 1):
        for i in range(1, l):
            rec &= alpha(ctx, i, l) == 1 - ctx.power(2 * i - 1 - l) + ctx.q * alpha(ctx, i - 1, l)
        for i in range(2, l):
            lemma &= alpha(ctx, l - (i - 1), l) * ctx.power(2 * (i - 1) - l) == alpha(ctx, i - 1, l)
    yield Check("alpha recurrence", rec)
    yield Check("alpha reflection lemma", lemma)
    if n % 2:
        sym = all(q_binomial(ctx, i, k) == q_binomial(ctx, i, i - k) for i in range(n) for k in range(i + 1))
        yield Check("q-binomial symmetry", sym)


def uq_checks(n: int) -> Iterator[Check]:
    if n % 2 == 0:
        raise Unsupported(f"u_q(sl2) suite needs odd n, got {n}")
    ctx = QContext(n)
    hopf = uq_presentation(ctx)
    for label in uq_labels(n):
        V = build_uq(ctx, label, hopf)
        name = str(label)
        yield Check(f"{name}: relations", not check_relations(V), "; ".join(check_relations(V)))
        report = mu(V, oracle=True)
        closed = mu_closed_form(ctx, label)
        yield Check(f"{name}: self-dual", report.self_dual)
        if not report.self_dual:
            continue
        yield Check(f"{name}: mu = closed form", report.mu == closed, report.mu.pretty())
        yield Check(f"{name}: mu = oracle", report.oracle_mu == report.mu)
        qdim = quantum_dim(ctx, label)
        i = label.highest_weight(n)
        expected = from_rational(0, n) if label.is_vqinv else qdim * (-1) ** i
        yield Check(f"{name}: mu = (-1)^i dim_q", report.mu == expected)
        K = V["K"]
        yield Check(f"{name}: det K = 1", K.det() == 1)
        yield Check(f"{name}: Tr K = [i+1]", K.trace() == q_int(ctx, i + 1))
        Q, U = report.Q, report.U
        l = V.dim
        ratio = all(Q[r - 1, l - r] / Q[l - r, r - 1] == (-ctx.q) ** (l - 2 * r + 1) for r in range(1, l + 1))
        yield Check(f"{name}: Q antidiagonal", Q.is_antidiagonal())
        yield Check(f"{name}: Q ratio law", ratio)
        sign = 1 if i % 2 == 0 else -1
        yield Check(f"{name}: Tr U = +-Tr K", U.trace() == K.trace() * sign)
        yield Check(f"{name}: pivotal scalar = (-1)^i", pivotal_scalar(V, U, "K") == sign)
        form = bilinear_form_checks(V, Q)
        yield Check(f"{name}: bilinear form", form.ok, "; ".join(form.violations))
        sq = antipode_squared_checks(V, Q)
        yield Check(f"{name}: S_V^2 and anti-homomorphism", not sq, "; ".join(sq))
        yield Check(f"{name}: Tr U = trace on matrix units", antipode_trace_on_units(Q) == report.mu)


def double_label_checks(n: int) -> Iterator[Check]:
    ctx = QContext(n)
    hopf = hn1q_presentation(ctx)
    labels = all_labels(n)
    reps = {lab: build_Vlr(ctx, lab, hopf) for lab in labels}
    bad = [str(lab) for lab, V in reps.items() if check_relations(V)]
    yield Check(f"V(l,r) relations for all {len(labels)} labels", not bad, ", ".join(bad))
    wrong = []
    for lab1 in labels:
        for lab2 in labels:
            if lab1.l != lab2.l:
                continue
            d = len(intertwiners(reps[lab1], reps[lab2]))
            if d != (1 if lab1 == lab2 else 0):
                wrong.append(f"{lab1}->{lab2}:{d}")
    yield Check("intertwiner dimensions reproduce the classification", not wrong, ", ".join(wrong))
    dual_bad, sd_bad, rel_bad = [], [], []
    for lab, V in reps.items():
        D = dual_rep(V)
        if check_relations(D):
            rel_bad.append(str(lab))
        if not is_isomorphic(D, reps[dual_label(n, lab)]):
            dual_bad.append(str(lab))
        if (len(intertwiners(V, D)) == 1) != is_self_dual(n, lab):
            sd_bad.append(str(lab))
    yield Check("dual modules satisfy the relations", not rel_bad, ", ".join(rel_bad))
    yield Check("V(l,r)* = V(l, 1-(r+l))", not dual_bad, ", ".join(dual_bad))
    yield Check("self-duality test agrees with n | 2r+l-1", not sd_bad, ", ".join(sd_bad))
    cat = self_dual_catalog(n)
    if n % 2:
        ok = len(cat) == n and sorted(lab.l for lab in cat) == list(range(1, n + 1))
    else:
        ok = len(cat) == n and all(lab.l % 2 == 1 for lab in cat) and all(
            sum(1 for x in cat if x.l == l) == 2 for l in range(1, n + 1, 2))
    yield Check("self-dual catalog counts", ok, ", ".join(map(str, cat)))


def double_mu_checks(n: int) -> Iterator[Check]:
    if n % 2 == 0:
        # no closed form: engine against oracle only
        ctx = QContext(n)
        hopf = hn1q_presentation(ctx)
        for lab in all_labels(n):
            report = mu(build_Vlr(ctx, lab, hopf), oracle=True)
            if report.self_dual:
                yield Check(f"{lab}: mu = oracle (no closed form)", report.mu == report.oracle_mu)
            else:
                yield Check(f"{lab}: mu = 0", report.mu.is_zero())
        return
    base = QContext(n)
    sq = base.squared()
    hopf = hn1q_presentation(sq)
    for lab in all_labels(n):
        V = build_Vlr(sq, lab, hopf)
        report = mu(V, oracle=is_self_dual(n, lab))
        closed = mu_closed_form_double(base, lab)
        ok = report.mu == closed and (not report.self_dual or report.oracle_mu == report.mu)
        yield Check(f"{lab} over H_n(1,q^2): mu = closed form", ok, report.mu.pretty())
    for ul in uq_labels(n):
        P = pullback_along_psi(base, ul)
        target = correspondence_label(n, ul)
        yield Check(f"pullback of {ul}: relations", not check_relations(P))
        yield Check(f"pullback of {ul} = {target}", is_isomorphic(P, build_Vlr(sq, target, hopf)))
        yield Check(f"pullback of {ul}: mu preserved",
                    mu(P).mu == mu_closed_form(base, ul) == mu_closed_form_double(base, target))


SUITE_RUNNERS: dict[str, list[Callable[[int], Iterator[Check]]]] = {
    "core": [core_checks],
    "uq": [uq_checks],
    "double-labels": [double_label_checks],
    "double": [double_label_checks, double_mu_checks],
}


def suite_names(n: int, suite: str = "all") -> list[str]:
    """Validate the request and expand ``all`` into concrete suites."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    if not N_RANGE[0] <= n <= N_RANGE[1]:
        raise Unsupported(f"verify supports {N_RANGE[0]} <= n <= {N_RANGE[1]}, got {n}")
    if suite == "all":
        names = ["core", "uq", "double"] if n % 2 else ["core", "double"]
    else:
        names = [suite]
    if "uq" in names and n % 2 == 0:
        raise Unsupported(f"u_q(sl2) suite needs odd n, got {n}")
    return names


def run_suite(n: int, suite: str = "all") -> list[Check]:
    out = []
    for name in suite_names(n, suite):
        for fn in SUITE_RUNNERS[name]:
            out.extend(fn(n))
    return out
