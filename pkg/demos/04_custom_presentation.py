# The engine only needs generators, relations and an antipode.  For a group
# algebra S(g) = g^-1, and mu(V) is the Frobenius-Schur indicator times dim V.
from hopftrace.cyclo import root
from hopftrace.presentation import HopfData, NCExpr, relation
from hopftrace.qarith import QContext
from hopftrace.repcore import check_relations, custom_rep, mu


def group_algebra(name, order, gens, rels, inverse_words):
    one = root(order, 0)
    return HopfData(
        name=name,
        order=order,
        generators=tuple(gens),
        relations=tuple(rels),
        antipode={g: NCExpr.gen(order, *inverse_words[g]) for g in gens},
        counit={g: one for g in gens},
        coproduct={g: ((one, (g,), (g,)),) for g in gens},
    )


# S3 = <s, t | s^2, t^3, s t s = t^2>, scalars in Q(zeta_3)
s, t = NCExpr.gen(3, "s"), NCExpr.gen(3, "t")
s3 = group_algebra("k[S3]", 3, ["s", "t"],
                   [relation(s * s, 1), relation(t ** 3, 1), relation(s * t * s, t * t)],
                   {"s": ("s",), "t": ("t", "t")})
w = root(3)
std = custom_rep(s3, QContext(3), {"s": [[0, 1], [1, 0]], "t": [[w, 0], [0, w * w]]})
assert check_relations(std) == []
r = mu(std, oracle=True)
print("S3 standard rep: mu =", r.mu, " oracle =", r.oracle_mu)

# Q8 = <x, y | x^4, y^2 = x^2, y x y^-1 = x^-1>, scalars in Q(i)
x, y = NCExpr.gen(4, "x"), NCExpr.gen(4, "y")
q8 = group_algebra("k[Q8]", 4, ["x", "y"],
                   [relation(x ** 4, 1), relation(y * y, x * x), relation(y * x * y ** 3, x ** 3)],
                   {"x": ("x",) * 3, "y": ("y",) * 3})
i = root(4)
spin = custom_rep(q8, QContext(4), {"x": [[i, 0], [0, -i]], "y": [[0, 1], [-1, 0]]})
r = mu(spin, oracle=True)
print("Q8 spin rep:     mu =", r.mu, " oracle =", r.oracle_mu)
print("U =")
print(r.U.pretty("i"))

# a character of C3 with values in zeta_3 is not self-dual
c3 = group_algebra("k[C3]", 3, ["t"], [relation(t ** 3, 1)], {"t": ("t", "t")})
chi = custom_rep(c3, QContext(3), {"t": [[w]]})
print("C3 character:    self-dual =", mu(chi).self_dual, " mu =", mu(chi).mu)
