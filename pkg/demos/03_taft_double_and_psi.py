# Simple modules V(l, r) of H_n(1,q), their duals, and the modules that
# u_q(sl2) induces through the projection psi : H_n(1,q^2) -> u_q(sl2).
from hopftrace.qarith import QContext
from hopftrace.repcore import dual_rep, is_isomorphic, mu
from hopftrace.taftdouble import (
    all_labels,
    build_Vlr,
    correspondence_label,
    dual_label,
    hn1q_presentation,
    mu_closed_form_double,
    pullback_along_psi,
    self_dual_catalog,
)
from hopftrace.uqsl2 import mu_closed_form, uq_labels

n = 5
base = QContext(n)
sq = base.squared()            # the algebra is built over s = q^2
hopf = hn1q_presentation(sq)

# the dual of V(l,r) is computed from the antipode, then identified by Hom
for lab in all_labels(n)[:6]:
    D = dual_rep(build_Vlr(sq, lab, hopf))
    target = dual_label(n, lab)
    print(f"{lab}* ~ {target}: {is_isomorphic(D, build_Vlr(sq, target, hopf))}")

print("\nself-dual labels at n=5:", [str(x) for x in self_dual_catalog(n)])
print("self-dual labels at n=4:", [str(x) for x in self_dual_catalog(4)])

# every simple u_q-module pulls back to a self-dual V(l,r) with the same mu
print(f"\n{'u_q module':10} {'pulls back to':14} mu")
for label in uq_labels(n):
    P = pullback_along_psi(base, label)
    target = correspondence_label(n, label)
    assert is_isomorphic(P, build_Vlr(sq, target, hopf))
    value = mu(P).mu
    assert value == mu_closed_form(base, label) == mu_closed_form_double(base, target)
    print(f"{str(label):10} {str(target):14} {value.pretty()}")

# non-self-dual modules have mu = 0 by definition
print("\nmu of V(3,2):", mu(build_Vlr(sq, all_labels(n)[11], hopf)).mu)
