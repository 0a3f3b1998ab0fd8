import random
from fractions import Fraction

from altdef.linalg import (
    Matrix,
    column_space_basis,
    kernel_basis,
    quotient_representatives,
    rank,
    rref,
    solve,
)

F = Fraction


def test_rref_identity():
    m = Matrix.identity(2)
    r, pivots = rref(m)
    assert r == m
    assert pivots == [0, 1]


def test_rref_zero():
    m = Matrix.zero(3, 3)
    r, pivots = rref(m)
    assert r == m
    assert pivots == []


def test_rref_rank_one():
    m = Matrix.from_rows([[2, 4], [1, 2]])
    r, pivots = rref(m)
    assert r == Matrix.from_rows([[1, 2], [0, 0]])
    assert pivots == [0]


def test_kernel_zero_matrix():
    basis = kernel_basis(Matrix.zero(2, 3))
    assert basis == [
        [F(1), F(0), F(0)],
        [F(0), F(1), F(0)],
        [F(0), F(0), F(1)],
    ]


def test_kernel_identity():
    assert kernel_basis(Matrix.identity(2)) == []


def test_kernel_hand_example():
    basis = kernel_basis(Matrix.from_rows([[1, 1, 0], [0, 0, 1]]))
    assert basis == [[F(-1), F(1), F(0)]]


def test_column_space_identity():
    assert column_space_basis(Matrix.identity(3)) == [
        [F(1), F(0), F(0)],
        [F(0), F(1), F(0)],
        [F(0), F(0), F(1)],
    ]


def test_column_space_zero():
    assert column_space_basis(Matrix.zero(2, 2)) == []


def test_column_space_rank_one():
    assert column_space_basis(Matrix.from_rows([[1, 2], [2, 4]])) == [[F(1), F(2)]]


def test_solve_identity():
    assert solve(Matrix.identity(2), [F(3), F(5)]) == [F(3), F(5)]


def test_solve_unsolvable():
    assert solve(Matrix.zero(2, 2), [F(1), F(0)]) is None


def test_solve_pivot_only():
    x = solve(Matrix.from_rows([[1, 1], [2, 2]]), [F(1), F(2)])
    assert x == [F(1), F(0)]


def test_quotient_full_space():
    space = [[F(1), F(0)], [F(0), F(1)]]
    reps = quotient_representatives(space, [])
    assert reps == space


def test_quotient_trivial():
    space = [[F(1), F(0)], [F(0), F(1)]]
    assert quotient_representatives(space, list(space)) == []


def test_quotient_codim_one():
    space = [[F(1), F(0), F(0)], [F(0), F(1), F(0)], [F(0), F(0), F(1)]]
    reps = quotient_representatives(space, [[F(1), F(1), F(0)]])
    assert len(reps) == 2


def test_quotient_rejects_outside_vector():
    space = [[F(1), F(0), F(0)]]
    try:
        quotient_representatives(space, [[F(0), F(1), F(0)]])
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError for vector outside the span")


def _random_matrix(rng, rows, cols):
    return Matrix.from_rows(
        [[F(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(cols)] for _ in range(rows)]
    )


def test_rank_nullity_randomized():
    rng = random.Random(7)
    for _ in range(25):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        m = _random_matrix(rng, rows, cols)
        assert rank(m) + len(kernel_basis(m)) == cols


def test_rref_idempotent_randomized():
    rng = random.Random(11)
    for _ in range(20):
        m = _random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        r1, p1 = rref(m)
        r2, p2 = rref(r1)
        assert r1 == r2
        assert p1 == p2


def test_kernel_vectors_annihilate_randomized():
    rng = random.Random(13)
    for _ in range(20):
        m = _random_matrix(rng, rng.randint(1, 5), rng.randint(1, 6))
        for v in kernel_basis(m):
            assert all(not x for x in m.mul_vector(v))


def test_solve_satisfies_system_randomized():
    rng = random.Random(17)
    hits = 0
    for _ in range(30):
        m = _random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        x0 = [F(rng.randint(-2, 2)) for _ in range(m.cols)]
        b = m.mul_vector(x0)
        x = solve(m, b)
        assert x is not None
        assert m.mul_vector(x) == b
        hits += 1
    assert hits == 30


def test_results_are_canonical_fractions():
    m = Matrix.from_rows([[2, 4], [6, 9]])
    r, _ = rref(m)
    for row in r.data:
        for x in row:
            assert x.denominator > 0
            # Fraction keeps lowest terms by construction; spot-check anyway
            from math import gcd

            assert gcd(x.numerator, x.denominator) == 1
