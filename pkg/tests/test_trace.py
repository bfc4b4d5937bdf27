import dataclasses
from fractions import Fraction

import pytest

from heckecenter.hecke import basis_element, multiply, parse_word, word_to_element
from heckecenter.linalg import Matrix, frac_solve
from heckecenter.ring import LaurentPoly, is_unit, specialize, variables
from heckecenter.trace import (CertificationError, certify_gram, gram, mm_condition_check,
                               tau, trace_property_check)

x, y = variables(2)
c, d = x + y, -x * y

# A2 basis T1, Ts, Tt, Tst, Tts, Tsts: lengths and inverses
LENGTH = [0, 1, 1, 2, 2, 3]
INVERSE = [0, 1, 2, 4, 3, 5]


def a2_gram_oracle():
    """tau(T_v T_w) = d^l(v) when w = v^-1, else 0."""
    zero = LaurentPoly.constant(0, 2)
    rows = [[d ** LENGTH[v] if w == INVERSE[v] else zero for w in range(6)] for v in range(6)]
    return Matrix(rows, 2)


def numeric_gram(spec, point):
    """Gram matrix over Q from the generator matrices specialised at ``point``."""
    gens = [spec.generator_matrix(g).specialize(point) for g in range(spec.generator_count)]
    invs = [spec.generator_inverse(g).specialize(point) for g in range(spec.generator_count)]
    n = spec.dim

    def apply(vec, word):
        for g, ex in word:
            M = gens[g] if ex > 0 else invs[g]
            for _ in range(abs(ex)):
                vec = [sum(vec[t] * M[t][j] for t in range(n)) for j in range(n)]
        return vec

    e0 = [Fraction(int(i == 0)) for i in range(n)]
    return [[apply(e0, spec.basis_words[i] + spec.basis_words[j])[0] for j in range(n)]
            for i in range(n)]


def q_det(M):
    M = [list(r) for r in M]
    n, det = len(M), Fraction(1)
    for col in range(n):
        p = next((i for i in range(col, n) if M[i][col] != 0), None)
        if p is None:
            return Fraction(0)
        if p != col:
            M[p], M[col] = M[col], M[p]
            det = -det
        det *= M[col][col]
        for i in range(col + 1, n):
            f = M[i][col] / M[col][col]
            M[i] = [a - f * b for a, b in zip(M[i], M[col])]
    return det


# -- tau ------------------------------------------------------------------

def test_tau_on_basis(g4):
    assert tau(basis_element(g4, 0)).is_one()
    assert all(tau(basis_element(g4, j)).is_zero() for j in range(1, 24))


def test_tau_ts_squared(a2):
    Ts = basis_element(a2, 1)
    assert tau(multiply(a2, Ts, Ts)) == d


def test_tau_of_golden_word_vanishes(g4):
    assert tau(word_to_element(g4, parse_word("s1^2 s2^2"))).is_zero()


# -- Gram matrix -------------------------------------------------------------

def test_a2_gram_matches_length_oracle(a2):
    gd = gram(a2)
    assert gd.A == a2_gram_oracle()
    ok, _ = is_unit(gd.det)
    assert ok
    # det is a signed power of d
    assert gd.det in (d ** 9, -(d ** 9))
    assert (gd.det * gd.det_inverse).is_one()


def test_a2_gram_det_at_a_point(a2):
    point = (2, -3)
    assert q_det(numeric_gram(a2, point)) == specialize(gram(a2).det, point)


def test_g4_gram_certified(g4, g4_gram):
    A = g4_gram.A
    assert A.shape == (24, 24)
    assert A == A.transpose()
    assert is_unit(g4_gram.det)[0]
    assert (g4_gram.det * g4_gram.det_inverse).is_one()


def test_g4_gram_numerically(g4, g4_gram):
    point = (2, -3, 5)
    N = numeric_gram(g4, point)
    assert g4_gram.A.specialize(point) == N


def test_mutated_gram_fails_certification(a2):
    A = gram(a2).A
    rows = [list(r) for r in A.rows]
    zero = LaurentPoly.constant(0, 2)
    rows[3][4] = rows[4][3] = zero
    with pytest.raises(CertificationError):
        certify_gram(Matrix(rows, 2))
    rows = [list(r) for r in A.rows]
    rows[1][1] = rows[1][1] + 1
    with pytest.raises(CertificationError):
        certify_gram(Matrix(rows, 2))


def test_gram_symmetry_failure_reported():
    one, zero = LaurentPoly.constant(1, 1), LaurentPoly.constant(0, 1)
    with pytest.raises(CertificationError, match="symmetric"):
        certify_gram(Matrix([[one, one], [zero, one]], 1))


# -- trace property -----------------------------------------------------------

def test_trace_property_random_g4_pairs(g4):
    rep = trace_property_check(g4, samples=100, seed=0)
    assert rep.ok and rep.samples == 100


def test_trace_property_with_identity(g4):
    h = word_to_element(g4, parse_word("s2 s1^-1 s2^2"))
    one = basis_element(g4, 0)
    assert tau(multiply(g4, h, one)) == tau(multiply(g4, one, h)) == tau(h)


def test_trace_of_ts_tt(a2):
    Ts, Tt = basis_element(a2, 1), basis_element(a2, 2)
    assert tau(multiply(a2, Ts, Tt)).is_zero()
    assert tau(multiply(a2, Tt, Ts)).is_zero()


def test_tau_vanishes_on_basis_commutators(g4):
    b = [basis_element(g4, j) for j in range(24)]
    for i in range(24):
        for j in range(i + 1, 24):
            assert tau(multiply(g4, b[i], b[j]) - multiply(g4, b[j], b[i])).is_zero()


# -- dual basis ------------------------------------------------------------------

def test_a2_dual_basis_is_scaled_inverse_words(a2, a2_duals):
    for w in range(6):
        expected = (d ** -LENGTH[w]) * basis_element(a2, INVERSE[w])
        assert a2_duals.vectors[w] == expected


def test_duality_all_pairs(g4, g4_duals, a2, a2_duals):
    for spec, duals in ((g4, g4_duals), (a2, a2_duals)):
        for i in range(spec.dim):
            bi = basis_element(spec, i)
            for j in range(spec.dim):
                assert tau(multiply(spec, bi, duals.vectors[j])) == (1 if i == j else 0)


def test_dual_pairing_matrix_is_gram_inverse(a2, a2_duals):
    A = gram(a2).A
    dv = a2_duals.vectors
    P = Matrix([[tau(multiply(a2, dv[i], dv[j])) for j in range(6)] for i in range(6)], 2)
    assert frac_solve(A, Matrix.identity(6, 2)) == P


def test_g4_duals_lie_over_r(g4_duals):
    assert all(isinstance(x, LaurentPoly) for v in g4_duals.vectors for x in v.coeffs)


# -- MM condition ------------------------------------------------------------------

def test_mm_condition_g4(g4):
    rep = mm_condition_check(g4)
    assert rep.ok
    assert len(rep.values) == 24
    assert all(v.is_zero() for v in rep.values[1:])
    # tau(pi) is reported as computed
    assert not rep.tau_pi.is_zero()


def test_mm_condition_a2(a2):
    rep = mm_condition_check(a2)
    assert rep.ok and len(rep.values) == 6
    assert rep.tau_pi == tau(word_to_element(a2, a2.pi_word))


def test_mm_condition_needs_pi(a2):
    with pytest.raises(ValueError):
        mm_condition_check(dataclasses.replace(a2, pi_word=None))
