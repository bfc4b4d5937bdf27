"""
End-to-end acceptance criteria.

Each test prints one ``[PASS]``/``[FAIL]`` line (visible with ``pytest -s``;
the lines are also repeated in the terminal summary) and then asserts.  All
comparisons are exact.  Groups are loaded fresh inside each timed test so
cached matrices from other tests do not flatter the runtimes.
"""

import random
import time

import pytest

from heckecenter.center import (CenterBasis, build_center, centrality_check, class_coeffs,
                                commutant_center, span_compare)
from heckecenter.groupdata import load_group
from heckecenter.hecke import HeckeElement, basis_element, multiply, parse_word, word_to_element
from heckecenter.linalg import Matrix, bareiss_det, cofactor_det, mat_mul
from heckecenter.ring import LaurentPoly, is_unit, specialize, variables
from heckecenter.trace import (dual_basis, gram, mm_condition_check, random_element, tau,
                               trace_property_check)

RESULTS = []


def report(number, title, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else "")
    RESULTS.append(line)
    print(line)
    assert ok, line


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


u1, u2, u3 = variables(3)
A_, B_, C_ = u1 + u2 + u3, -(u1 * u2 + u1 * u3 + u2 * u3), u1 * u2 * u3


@pytest.fixture(scope="module")
def shared_g4():
    return load_group("g4")


def test_criterion_1_relations():
    with Timer() as t:
        g4 = load_group("g4")
        S1, S2 = g4.generator_matrix(0), g4.generator_matrix(1)
        braid = mat_mul(mat_mul(S1, S2), S1) == mat_mul(mat_mul(S2, S1), S2)
        I = Matrix.identity(24, 3)
        cubic = []
        for S in (S1, S2):
            S2_ = mat_mul(S, S)
            cubic.append(mat_mul(S2_, S) == S2_.scale(A_) + S.scale(B_) + I.scale(C_))
    ok = S1.shape == (24, 24) and braid and all(cubic) and t.seconds < 5
    report(1, "G4 braid and cubic Hecke relations", ok, f"{t.seconds:.2f}s")


def test_criterion_2_golden_expansion():
    g4 = load_group("g4")
    g4.generator_matrix(0), g4.generator_matrix(1)
    with Timer() as t:
        got = word_to_element(g4, parse_word("s1^2 s2^2"))
    ci = C_ ** -1
    zero = LaurentPoly.constant(0, 3)
    want = [zero] * 24
    want[8], want[12], want[16], want[18], want[21] = -B_ * ci, -A_ * ci, -B_ * ci ** 2, -A_ * ci ** 2, ci ** 2
    ok = got == HeckeElement(tuple(want)) and t.seconds < 1
    report(2, "golden expansion of s1^2 s2^2", ok, f"{t.seconds:.3f}s")


def test_criterion_3_gram():
    with Timer() as t:
        g4 = load_group("g4")
        gd = gram(g4)
    g4_ok = gd.A == gd.A.transpose() and is_unit(gd.det)[0]
    a2 = load_group("a2")
    ga = gram(a2)
    x, y = variables(2)
    d = -x * y
    exps = list(ga.det.terms)
    n = exps[0][0] if len(exps) == 1 else None
    a2_ok = n is not None and ga.det in (d ** n, -(d ** n)) and ga.A == ga.A.transpose()
    ok = g4_ok and a2_ok and t.seconds < 60
    report(3, "Gram matrices symmetric with unit determinant", ok,
           f"G4 {t.seconds:.1f}s, A2 det = {ga.det}")


def test_criterion_4_duality():
    with Timer() as t:
        checked = 0
        ok = True
        for name in ("g4", "a2"):
            spec = load_group(name)
            duals = dual_basis(spec)
            for i in range(spec.dim):
                bi = basis_element(spec, i)
                for j in range(spec.dim):
                    ok &= tau(multiply(spec, bi, duals.vectors[j])) == (1 if i == j else 0)
                    checked += 1
    ok = ok and checked == 576 + 36 and t.seconds < 120
    report(4, "tau(b_i b_j^vee) = delta_ij", ok, f"{checked} pairs, {t.seconds:.1f}s")


def test_criterion_5_mm_condition(shared_g4):
    rep = mm_condition_check(shared_g4)
    zeros = sum(v.is_zero() for v in rep.values[1:])
    report(5, "tau(x^-1 pi) = 0 for non-identity basis words", rep.ok and zeros == 23,
           f"{zeros}/23 vanish, tau(pi) = {rep.tau_pi}")


def test_criterion_6_center_dimension(shared_g4):
    dims = (len(commutant_center(shared_g4)), len(commutant_center(load_group("a2"))))
    report(6, "center dimensions", dims == (7, 3), f"G4 {dims[0]}, A2 {dims[1]}")


def test_criterion_7_g4_center():
    with Timer() as t:
        g4 = load_group("g4")
        basis = commutant_center(g4)
        ref = CenterBasis(list(g4.reference_center), "reference")
        rep = span_compare(g4, basis, ref)
    ok = (all(basis.integral) and rep.equal_F_span and rep.X_in_R_span_of_Y
          and rep.Y_in_R_span_of_X and t.seconds < 600)
    report(7, "G4 center integral and equal to the reference span over R", ok,
           f"{t.seconds:.1f}s")


def _a2_expected():
    x, y = variables(2)
    c, d = x + y, -x * y
    one, zero = LaurentPoly.constant(1, 2), LaurentPoly.constant(0, 2)

    def el(**kw):
        idx = {"T1": 0, "Ts": 1, "Tt": 2, "Tst": 3, "Tts": 4, "Tsts": 5}
        v = [zero] * 6
        for k, val in kw.items():
            v[idx[k]] = val
        return HeckeElement(tuple(v))

    return {
        ("f_on_basis", "minimal"): [el(T1=one), el(Ts=d ** -1, Tt=d ** -1, Tsts=d ** -2),
                                    el(Tst=d ** -2, Tts=d ** -2, Tsts=c * d ** -3)],
        ("f_on_basis", "maximal"): [el(T1=one), el(Ts=d ** -2, Tt=d ** -2, Tsts=d ** -3),
                                    el(Ts=-c * d ** -2, Tt=-c * d ** -2, Tst=d ** -2, Tts=d ** -2)],
        ("g_on_duals", "minimal"): [el(T1=one), el(Ts=one, Tt=one, Tsts=d ** -1),
                                    el(Tst=one, Tts=one, Tsts=c * d ** -1)],
        ("g_on_duals", "maximal"): [el(T1=one), el(Ts=d, Tt=d, Tsts=one),
                                    el(Ts=-c, Tt=-c, Tst=one, Tts=one)],
    }


def test_criterion_8_a2_theorems():
    a2 = load_group("a2")
    duals = dual_basis(a2)
    matches = 0
    fourth_polynomial = False
    for (mode, reps_name), expected in _a2_expected().items():
        cc = class_coeffs(a2, a2.representations, a2.class_reps[reps_name], mode, duals)
        if mode == "f_on_basis":
            basis = build_center(a2, cc, "y_from_duals", duals)
        else:
            basis = build_center(a2, cc, "z_from_basis")
        matches += basis.vectors == expected
        if (mode, reps_name) == ("g_on_duals", "maximal"):
            polys = [c if isinstance(c, LaurentPoly) else c.as_poly() for v in basis.vectors for c in v.coeffs]
            fourth_polynomial = all(p is not None and all(e >= 0 for exp in p.terms for e in exp)
                                    for p in polys)
    report(8, "A2 theorem bases reproduced coefficient for coefficient",
           matches == 4 and fourth_polynomial, f"{matches}/4 bases, fourth in Z[u1,u2]: {fourth_polynomial}")


def _rand_poly(rnd, k, terms=3, span=2):
    return LaurentPoly({tuple(rnd.randint(-span, span) for _ in range(k)): rnd.randint(-4, 4)
                        for _ in range(rnd.randint(0, terms))}, k)


def test_criterion_9_property_suites(shared_g4):
    g4 = shared_g4
    rnd = random.Random(2024)
    N = 100
    outcomes = {}

    ok = True
    for _ in range(N):
        p, q, r = (_rand_poly(rnd, 3) for _ in range(3))
        ok &= (p + q) - q == p and (p * q) * r == p * (q * r) and p * (q + r) == p * q + p * r \
            and p * q == q * p
    outcomes["ring axioms"] = ok

    ok = True
    for _ in range(N):
        p, q = _rand_poly(rnd, 3), _rand_poly(rnd, 3)
        pt = tuple(rnd.choice([-3, -2, -1, 2, 3, 5]) / rnd.choice([1, 2, 3]) for _ in range(3))
        ok &= specialize(p * q, pt) == specialize(p, pt) * specialize(q, pt)
        ok &= specialize(p + q, pt) == specialize(p, pt) + specialize(q, pt)
    outcomes["specialization homomorphism"] = ok

    ok = True
    for _ in range(N):
        M = Matrix([[_rand_poly(rnd, 2, terms=2, span=1) for _ in range(4)] for _ in range(4)], 2)
        ok &= bareiss_det(M) == cofactor_det(M)
    outcomes["Bareiss vs cofactor 4x4"] = ok

    outcomes["trace property"] = trace_property_check(g4, samples=N, seed=2024).ok

    ok = True
    for _ in range(N):
        h1, h2, h3 = (random_element(g4, rnd, nonzero=2, span=1, max_terms=1) for _ in range(3))
        ok &= multiply(g4, multiply(g4, h1, h2), h3) == multiply(g4, h1, multiply(g4, h2, h3))
    outcomes["associativity"] = ok

    center = commutant_center(g4).vectors
    ok = True
    for _ in range(N):
        i, j = rnd.randrange(7), rnd.randrange(7)
        a, b = _rand_poly(rnd, 3, terms=2, span=1), _rand_poly(rnd, 3, terms=2, span=1)
        z1 = center[i] + a * center[rnd.randrange(7)]
        z2 = b * center[j]
        ok &= centrality_check(g4, multiply(g4, z1, z2))
    outcomes["centrality of products"] = ok

    failed = [k for k, v in outcomes.items() if not v]
    report(9, "seeded property suites, 100 cases each", not failed,
           "failed: " + ", ".join(failed) if failed else f"{len(outcomes)} suites")
