import random
from fractions import Fraction

from cherednik.cyclotomic import Cyc
from cherednik.linalg import (ONE, ZERO, ExactMatrix, kernel_basis, mat_vec,
                              matrix_kernel, rank, rref, solve)

F = Fraction


def test_kernel_identity_is_trivial():
    assert matrix_kernel(ExactMatrix.identity(3)) == []


def test_kernel_zero_map():
    assert len(matrix_kernel([[ZERO] * 3, [ZERO] * 3])) == 3


def test_kernel_rank_one():
    ker = matrix_kernel([[ONE, ONE], [ONE, ONE]])
    assert len(ker) == 1
    v = ker[0]
    # proportional to (1, -1)
    assert v[0] * (-1) == v[1]
    assert all(a + b == 0 for a, b in [(v[0], v[1])])


def test_kernel_count_matches_rank():
    rows = [[F(1), F(2), F(3)], [F(2), F(4), F(6)], [F(0), F(1), F(1)]]
    r = rank(rows, 3)
    ker = kernel_basis(rows, 3)
    assert r + len(ker) == 3
    for v in ker:
        assert all(not x for x in mat_vec(rows, v))


def test_solve_resubstitutes_exactly():
    rng = random.Random(5)
    for _ in range(10):
        a = [[F(rng.randrange(-5, 6)) for _ in range(4)] for _ in range(4)]
        x = [F(rng.randrange(-5, 6), rng.randrange(1, 4)) for _ in range(4)]
        b = mat_vec(a, x)
        sol = solve(a, b)
        assert sol is not None
        assert mat_vec(a, sol) == b


def test_solve_inconsistent_returns_none():
    assert solve([[F(1), F(1)], [F(1), F(1)]], [F(0), F(1)]) is None


def test_cyclotomic_entries():
    z = Cyc.zeta(4)
    rows = [[z, ONE], [ONE, -z]]
    # determinant = -z^2 - 1 = 0, so a kernel vector exists
    ker = kernel_basis(rows, 2)
    assert len(ker) == 1
    assert all(not v for v in mat_vec(rows, ker[0]))


def test_rref_pivots():
    red, piv = rref([[F(0), F(2)], [F(3), F(0)]], 2)
    assert piv == [0, 1]
    assert red == [[F(1), F(0)], [F(0), F(1)]]


def test_exact_matrix_api():
    m = ExactMatrix([[F(1), F(2)], [F(3), F(4)]])
    assert m.rank() == 2
    assert m.kernel() == []
    sol = m.solve([F(5), F(11)])
    assert m.mul_vec(sol) == [F(5), F(11)]
