import pytest

from hopftrace.cyclo import root
from hopftrace.presentation import HopfData, NCExpr, relation
from hopftrace.qarith import QContext
from hopftrace.repcore import custom_rep


def group_algebra(name, order, gens, rels, inverses):
    """Group algebra with grouplike generators; inverses maps g -> word of g^-1."""
    one = root(order, 0)
    antipode = {g: NCExpr.gen(order, *inverses[g]) for g in gens}
    counit = {g: one for g in gens}
    coproduct = {g: ((one, (g,), (g,)),) for g in gens}
    return HopfData(name, order, tuple(gens), tuple(rels), antipode, counit, coproduct)


@pytest.fixture(scope="session")
def make_group_algebra():
    return group_algebra


@pytest.fixture(scope="session")
def s3():
    n = 3
    s, t = NCExpr.gen(n, "s"), NCExpr.gen(n, "t")
    rels = [relation(s * s, 1), relation(t ** 3, 1), relation(s * t * s, t * t)]
    return group_algebra("k[S3]", n, ["s", "t"], rels, {"s": ("s",), "t": ("t", "t")})


@pytest.fixture(scope="session")
def s3_standard(s3):
    w = root(3, 1)
    return custom_rep(s3, QContext(3), {"s": [[0, 1], [1, 0]], "t": [[w, 0], [0, w * w]]})


@pytest.fixture(scope="session")
def q8():
    n = 4
    x, y = NCExpr.gen(n, "x"), NCExpr.gen(n, "y")
    rels = [relation(x ** 4, 1), relation(y * y, x * x), relation(y * x * y ** 3, x ** 3)]
    return group_algebra("k[Q8]", n, ["x", "y"], rels, {"x": ("x",) * 3, "y": ("y",) * 3})


@pytest.fixture(scope="session")
def q8_spin(q8):
    i = root(4, 1)
    return custom_rep(q8, QContext(4), {"x": [[i, 0], [0, -i]], "y": [[0, 1], [-1, 0]]})
