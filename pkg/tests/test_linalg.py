import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from heckecenter.linalg import (Matrix, UnderdeterminedError, bareiss_det,
                                clear_denominators, cofactor_det, frac_nullspace,
                                frac_solve, mat_mul, rank, rank_at)
from heckecenter.ring import LaurentPoly, RatFunc, variables
from strategies import laurent, poly_matrix

u1, u2, u3 = variables(3)
x, y = variables(2)


def identity(n, k=2):
    return Matrix.identity(n, k)


def frac_det(A):
    """Oracle: plain Gaussian elimination over Frac(R)."""
    M = [[RatFunc(e) for e in r] for r in A.rows]
    n = len(M)
    det = RatFunc(1, k=A.k)
    for c in range(n):
        p = next((i for i in range(c, n) if not M[i][c].is_zero()), None)
        if p is None:
            return RatFunc(0, k=A.k)
        if p != c:
            M[p], M[c] = M[c], M[p]
            det = -det
        det = det * M[c][c]
        for i in range(c + 1, n):
            f = M[i][c] / M[c][c]
            if not f.is_zero():
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return det


# -- multiplication -------------------------------------------------------

@given(poly_matrix(3, max_terms=2, span=1, coeff=3))
def test_identity_is_neutral(A):
    assert mat_mul(A, identity(3)) == A
    assert mat_mul(identity(3), A) == A


@settings(max_examples=30)
@given(poly_matrix(3, max_terms=2, span=1, coeff=3), poly_matrix(3, max_terms=2, span=1, coeff=3),
       poly_matrix(3, max_terms=2, span=1, coeff=3))
def test_product_associative(A, B, C):
    assert (A @ B) @ C == A @ (B @ C)


def test_shape_mismatch():
    with pytest.raises(ValueError):
        mat_mul(Matrix.zeros(2, 3, 2), Matrix.zeros(2, 3, 2))


# -- determinants ----------------------------------------------------------

def test_det_examples():
    assert bareiss_det(identity(5)).is_one()
    D = Matrix([[u1, 0, 0], [0, u2, 0], [0, 0, -u3 ** -1]], 3)
    assert bareiss_det(D) == -u1 * u2 * u3 ** -1
    with pytest.raises(ValueError):
        bareiss_det(Matrix.zeros(2, 3, 2))


@given(poly_matrix(4, max_terms=3, span=2, coeff=4))
def test_bareiss_matches_cofactor_4x4(A):
    assert bareiss_det(A) == cofactor_det(A)


@settings(max_examples=25)
@given(poly_matrix(4, max_terms=2, span=1, coeff=3))
def test_bareiss_matches_fraction_field_elimination(A):
    """Every division inside Bareiss is exact (it would raise otherwise) and the result agrees."""
    assert frac_det(A) == bareiss_det(A)


@settings(max_examples=30)
@given(poly_matrix(3, max_terms=2, span=1, coeff=3), poly_matrix(3, max_terms=2, span=1, coeff=3))
def test_det_multiplicative(A, B):
    assert bareiss_det(A @ B) == bareiss_det(A) * bareiss_det(B)


def test_det_of_singular():
    A = Matrix([[x, y], [x * x, x * y]], 2)
    assert bareiss_det(A).is_zero()


# -- nullspace and rank ------------------------------------------------------

def test_nullspace_of_zero_matrix():
    ns = frac_nullspace(Matrix.zeros(2, 2, 2))
    assert [[e == (1 if i == j else 0) for i, e in enumerate(v)] for j, v in enumerate(ns)] == \
        [[True, True], [True, True]]


def test_nullspace_of_invertible_matrix():
    assert frac_nullspace(Matrix([[x, 1], [0, y]], 2)) == []


def test_nullspace_pivot_shape():
    A = Matrix([[x, y, x + y, 1], [x * x, x * y, x * (x + y), x]], 2)
    ns = frac_nullspace(A)
    assert len(ns) == A.ncols - rank(A) == 3
    free = []
    for v in ns:
        ones = [i for i, e in enumerate(v) if e == 1]
        free.append(ones[-1])
    for v, f in zip(ns, free):
        for g in free:
            assert v[g] == (1 if g == f else 0)


@settings(max_examples=40)
@given(st.integers(1, 4), st.integers(1, 5), st.randoms(use_true_random=False))
def test_nullspace_sound_and_complete(nrows, ncols, rnd):
    rows = [[LaurentPoly({(rnd.randint(-1, 1), rnd.randint(-1, 1)): rnd.randint(-2, 2)}, 2)
             for _ in range(ncols)] for _ in range(nrows)]
    if nrows > 1 and rnd.random() < 0.5:
        rows[-1] = [a + x * b for a, b in zip(rows[0], rows[1 % nrows])]
    A = Matrix(rows, 2)
    ns = frac_nullspace(A)
    r = rank(A)
    assert r + len(ns) == ncols
    for v in ns:
        for row in A.rows:
            acc = RatFunc(0, k=2)
            for a, b in zip(row, v):
                acc = acc + b * a
            assert acc.is_zero()
    points = [(Fraction(3), Fraction(-5, 2)), (Fraction(7, 3), Fraction(2)), (Fraction(-4), Fraction(11))]
    assert max(rank_at(A, p) for p in points) == r


# -- solving ----------------------------------------------------------------

def test_solve_identity():
    b = [RatFunc(x), RatFunc(y, x + 1)]
    assert frac_solve(identity(2), b) == b


def test_solve_random_5x5_round_trip():
    rnd = random.Random(5)
    while True:
        A = Matrix([[LaurentPoly({(rnd.randint(-1, 1), rnd.randint(-1, 1)): rnd.randint(-3, 3)}, 2)
                     for _ in range(5)] for _ in range(5)], 2)
        if not bareiss_det(A).is_zero():
            break
    b = [LaurentPoly({(i, 1 - i): i + 1}, 2) for i in range(5)]
    sol = frac_solve(A, b)
    for row, rhs in zip(A.rows, b):
        acc = RatFunc(0, k=2)
        for a, s in zip(row, sol):
            acc = acc + s * a
        assert acc == rhs


def test_solve_inconsistent_and_underdetermined():
    A = Matrix([[x, y], [2 * x, 2 * y], [x, x]], 2)
    assert frac_solve(A, [RatFunc(1, k=2), RatFunc(1, k=2), RatFunc(0, k=2)]) is None
    with pytest.raises(UnderdeterminedError):
        frac_solve(Matrix([[x, y]], 2), [RatFunc(1, k=2)])


def test_solve_multiple_right_hand_sides():
    A = Matrix([[x, 1], [1, y]], 2)
    X = frac_solve(A, identity(2))
    assert (A.map(RatFunc) @ X) == identity(2).map(RatFunc)


# -- denominators ---------------------------------------------------------------

def test_clear_denominators_examples():
    w, s = clear_denominators([RatFunc(1, x), RatFunc(1, k=2)])
    assert w == [LaurentPoly.constant(1, 2), x] and s == RatFunc(x)
    w, s = clear_denominators([x + 1, 2 * y])
    assert s == 1 and w == [x + 1, 2 * y]


@given(st.lists(st.builds(RatFunc, laurent(2, max_terms=2, span=2),
                          laurent(2, max_terms=2, span=2).filter(lambda p: not p.is_zero())),
                min_size=1, max_size=4))
def test_clear_denominators_is_idempotent(v):
    w, s = clear_denominators(v)
    for a, b in zip(v, w):
        assert a * s == b
    w2, s2 = clear_denominators(w)
    assert w2 == w and s2 == 1


def test_rank_at_detects_specialisation_drop():
    A = Matrix([[x - 1, 0], [0, y]], 2)
    assert rank(A) == 2
    assert rank_at(A, (1, 5)) == 1
