# Exact arithmetic in Q(zeta_n): every value is a polynomial in zeta of
# degree < phi(n), so equality is literal comparison of coefficients.
from fractions import Fraction

from hopftrace.cyclo import CycNum, cyclotomic_poly, root
from hopftrace.qarith import QContext, q_binomial, q_int

print("Phi_12 coefficients (constant term first):", cyclotomic_poly(12))

z = root(5)
print("zeta_5 + zeta_5^2 + zeta_5^3 + zeta_5^4 =", z + z ** 2 + z ** 3 + z ** 4)

# inverses come from the extended Euclidean algorithm modulo Phi_n
w = 1 - root(3)
print("1/(1 - zeta_3) =", w.inv().pretty("zeta"))
assert w * w.inv() == 1

# balanced q-integers and Gaussian binomials at q = zeta_7
ctx = QContext(7)
for i in range(1, 7):
    print(f"[{i}] =", q_int(ctx, i).pretty())
print("[6 choose 3] =", q_binomial(ctx, 6, 3).pretty())

# [n] vanishes at a primitive n-th root, which is why V_i stops at i = n-2
print("[7] at q = zeta_7:", q_int(ctx, 7))

# rational coefficients survive every operation exactly
x = CycNum(7, [Fraction(1, 3), 0, -2, 0, 0, 0])
print("x =", x.pretty(), "  x^-1 * x =", x.inv() * x)

# JSON form used by the CLI
print(x.to_json())
