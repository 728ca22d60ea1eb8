import random

import pytest

from hopftrace.cyclo import root
from hopftrace.errors import DimensionMismatch, SingularMatrix
from hopftrace.exactla import CMatrix, sylvester_nullspace
from hopftrace.qarith import QContext, q_int
from hopftrace.verify import random_invertible, random_matrix


def brute_det(A: CMatrix):
    """Laplace expansion along the first row; independent of the elimination path."""
    n = A.rows
    if n == 1:
        return A[0, 0]
    total = A[0, 0] * 0
    for j in range(n):
        minor = CMatrix(A.order, [[A[i, k] for k in range(n) if k != j] for i in range(1, n)])
        total = total + A[0, j] * brute_det(minor) * (-1) ** j
    return total


def test_basic_ops():
    rng = random.Random(1)
    A = random_matrix(rng, 5, 3)
    B = random_matrix(rng, 5, 3)
    I = CMatrix.identity(5, 3)
    assert I @ A == A and A @ I == A
    assert A.T.T == A
    assert (A @ B).trace() == (B @ A).trace()
    assert (A + B) - B == A
    assert A.scale(2) == A + A
    with pytest.raises(DimensionMismatch):
        A @ CMatrix.identity(5, 2)


def test_inverse_examples():
    I = CMatrix.identity(5, 3)
    assert I.inverse() == I
    J = CMatrix.antidiag(5, [1, 1])
    assert J.inverse() == J
    q = root(5, 1)
    assert CMatrix.diag(5, [q, q * q]).inverse() == CMatrix.diag(5, [q.inv(), (q * q).inv()])
    with pytest.raises(SingularMatrix):
        CMatrix(5, [[1, 2], [2, 4]]).inverse()


@pytest.mark.parametrize("seed", range(5))
def test_inverse_law_random(seed):
    rng = random.Random(seed)
    P = random_invertible(rng, 7, 4)
    I = CMatrix.identity(7, 4)
    assert P @ P.inverse() == I
    assert P.inverse() @ P == I


def test_det_examples():
    assert CMatrix.identity(5, 3).det() == 1
    q = root(5, 1)
    assert CMatrix.diag(5, [q, q ** 4]).det() == 1
    ctx = QContext(7)
    for i in range(6):
        K = CMatrix.diag(7, [ctx.power(i - 2 * j) for j in range(i + 1)])
        assert K.det() == 1
        assert K.trace() == q_int(ctx, i + 1)
    K2 = CMatrix.diag(5, [q ** 2, 1, q ** -2])
    assert K2.trace() == q ** 2 + 1 + q ** -2


@pytest.mark.parametrize("seed", range(6))
def test_det_matches_laplace_and_is_multiplicative(seed):
    rng = random.Random(seed)
    A, B = random_matrix(rng, 5, 3), random_matrix(rng, 5, 3)
    assert A.det() == brute_det(A)
    assert (A @ B).det() == A.det() * B.det()


def test_singular_det():
    assert CMatrix(3, [[1, 2], [2, 4]]).det() == 0


def test_sylvester_examples():
    I2 = CMatrix.identity(5, 2)
    assert len(sylvester_nullspace([(I2, I2)])) == 4
    basis = sylvester_nullspace([(CMatrix.diag(5, [1, 2]), CMatrix.diag(5, [1, 3]))])
    assert basis == [CMatrix.from_sparse(5, 2, 2, {(0, 0): 1})]


def test_sylvester_rectangular_and_empty():
    A = CMatrix.diag(5, [1, 2, 3])
    B = CMatrix.diag(5, [4, 5])
    assert sylvester_nullspace([(A, B)]) == []
    basis = sylvester_nullspace([(A, CMatrix.diag(5, [3, 9]))])
    assert basis == [CMatrix.from_sparse(5, 3, 2, {(2, 0): 1})]


@pytest.mark.parametrize("seed", range(4))
def test_sylvester_solutions_satisfy_constraints(seed):
    rng = random.Random(seed)
    P = random_invertible(rng, 5, 3)
    D1 = CMatrix.diag(5, [1, 1, 2])
    D2 = CMatrix.diag(5, [root(5, 1), root(5, 1), 3])
    # A = P D P^-1 and B = D share a 5-dimensional commutant shifted by P
    cons = [(P @ D1 @ P.inverse(), D1), (P @ D2 @ P.inverse(), D2)]
    basis = sylvester_nullspace(cons)
    assert len(basis) == 5
    for Q in basis:
        for A, B in cons:
            assert A @ Q == Q @ B
        first = next(x for x in Q.entries if x)
        assert first == 1
    assert sylvester_nullspace(cons) == basis


def test_json_roundtrip():
    rng = random.Random(3)
    A = random_matrix(rng, 7, 3)
    assert CMatrix.from_json(A.to_json()) == A
    js = CMatrix.identity(3, 1).to_json()
    assert js == {"rows": 1, "cols": 1, "entries": [[{"order": 3, "coeffs": ["1", "0"]}]]}


def test_scalar_and_antidiagonal():
    q = root(5, 1)
    assert CMatrix.identity(5, 3).scale(q).scalar_value() == q
    assert CMatrix.diag(5, [1, 2]).scalar_value() is None
    assert CMatrix.antidiag(5, [1, 2, 3]).is_antidiagonal()
    assert not CMatrix.identity(5, 2).is_antidiagonal()
