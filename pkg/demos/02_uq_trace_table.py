# The antipode trace mu(V) = Tr(S_V) for every simple module of u_q(sl2)
# at an odd root of unity, computed three ways.
from hopftrace.qarith import QContext
from hopftrace.repcore import mu, mu_oracle, skolem_noether_Q, u_matrix
from hopftrace.uqsl2 import build_uq, build_Vi, mu_closed_form, quantum_dim, uq_labels, uq_presentation

n = 7
ctx = QContext(n)
hopf = uq_presentation(ctx)

print(f"u_q(sl2), q = zeta_{n}")
print(f"{'module':8} {'dim':>3}  {'lambda':>6}  mu")
for label in uq_labels(n):
    V = build_uq(ctx, label, hopf)
    r = mu(V)
    # intertwiner route, closed form and word-basis oracle must agree exactly
    assert r.mu == mu_closed_form(ctx, label) == mu_oracle(V)
    print(f"{str(label):8} {V.dim:>3}  {r.pivot_scalar.pretty():>6}  {r.mu.pretty()}")

# mu is the quantum dimension up to the sign (-1)^i
for label in uq_labels(n)[:-1]:
    assert mu_closed_form(ctx, label) == quantum_dim(ctx, label) * (-1) ** label.i

# The matrix Q with S_V(X) = Q X^T Q^-1 is antidiagonal
V = build_Vi(ctx, 3, hopf)
Q = skolem_noether_Q(V)
print("\nQ for V_3 (first nonzero entry scaled to 1):")
print(Q.pretty())
print("\nU = Q Q^-T, a scalar multiple of K:")
print(u_matrix(Q).pretty())
print("\nK:")
print(V["K"].pretty())
