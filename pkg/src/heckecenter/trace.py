"""
The b_0-coefficient trace, its Gram matrix, and the dual basis.

``tau`` is defined as the coefficient of b_0 = 1 and then *certified* to be
symmetrising: the Gram matrix ``A[i][j] = tau(b_i b_j)`` must be symmetric with
determinant a unit of R.  Bad group data fails loudly here.
"""

from dataclasses import dataclass, field
import random

from .hecke import (HeckeElement, basis_element, inverse_word, multiply,
                    word_to_element)
from .linalg import Matrix, bareiss_det, frac_solve
from .ring import LaurentPoly, is_unit

__all__ = ["CertificationError", "GramData", "DualBasis", "TraceReport",
           "MMReport", "tau", "gram", "certify_gram", "trace_property_check", "dual_basis",
           "mm_condition_check", "random_element"]


class CertificationError(ArithmeticError):
    """tau failed to certify as a symmetrising trace for this basis."""


@dataclass
class GramData:
    A: Matrix
    det: LaurentPoly
    det_inverse: LaurentPoly

    def to_json(self):
        return {"matrix": self.A.to_json(), "det": self.det.to_json(),
                "det_inverse": self.det_inverse.to_json(), "symmetric": True,
                "det_is_unit": True}


@dataclass
class DualBasis:
    vectors: list

    def to_json(self):
        return [v.to_json() for v in self.vectors]


def tau(h):
    """Coefficient of b_0."""
    return h.coeffs[0]


def gram(spec):
    """Gram matrix of tau, certified symmetric with unit determinant."""
    R = spec.right_basis_matrices()
    n = spec.dim
    # tau(b_i b_j) is the b_0-entry of row i of R[j]
    A = Matrix([[R[j].rows[i][0] for j in range(n)] for i in range(n)], spec.k)
    return certify_gram(A)


def certify_gram(A):
    """Check symmetry and a unit determinant; return the certified data."""
    n = A.nrows
    bad = [(i, j) for i in range(n) for j in range(i + 1, n) if A.rows[i][j] != A.rows[j][i]]
    if bad:
        raise CertificationError(f"Gram matrix not symmetric at {bad[:5]}")
    det = bareiss_det(A)
    unit, inv = is_unit(det)
    if not unit:
        raise CertificationError(f"Gram determinant {det} is not a unit of R")
    return GramData(A, det, inv)


@dataclass
class TraceReport:
    samples: int
    counterexamples: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.counterexamples

    def to_json(self):
        return {"samples": self.samples, "ok": self.ok,
                "counterexamples": [[a.to_json(), b.to_json()] for a, b in self.counterexamples]}


def random_element(spec, rng, nonzero=3, span=2, max_terms=3):
    """Sparse element: ``nonzero`` random basis positions, each with 1..``max_terms`` random monomials."""
    k, n = spec.k, spec.dim
    coeffs = [LaurentPoly.constant(0, k)] * n
    for j in rng.sample(range(n), min(nonzero, n)):
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            exp = tuple(rng.randint(-span, span) for _ in range(k))
            terms[exp] = terms.get(exp, 0) + rng.choice([-3, -2, -1, 1, 2, 3])
        coeffs[j] = LaurentPoly(terms, k)
    return HeckeElement(tuple(coeffs))


def trace_property_check(spec, samples=100, seed=0):
    """tau(h1 h2) == tau(h2 h1) on random sparse pairs, through the full multiplication."""
    rng = random.Random(seed)
    rep = TraceReport(samples)
    for _ in range(samples):
        h1, h2 = random_element(spec, rng), random_element(spec, rng)
        if tau(multiply(spec, h1, h2)) != tau(multiply(spec, h2, h1)):
            rep.counterexamples.append((h1, h2))
    return rep


def dual_basis(spec, gram_data=None):
    """
    b_i^vee = column i of A^-1, by exact solve; every coefficient must lie in R.
    The pairing tau(b_i b_j^vee) = delta_ij is checked with :func:`multiply`.
    """
    gd = gram_data or gram(spec)
    n, k = spec.dim, spec.k
    X = frac_solve(gd.A, Matrix.identity(n, k))
    vectors = []
    for i in range(n):
        col = X.column(i)
        polys = []
        for x in col:
            p = x.as_poly()
            if p is None:
                raise ArithmeticError(f"dual basis coefficient {x} not in R despite unit determinant")
            polys.append(p)
        vectors.append(HeckeElement(tuple(polys)))
    for i in range(n):
        bi = basis_element(spec, i)
        for j in range(n):
            t = tau(multiply(spec, bi, vectors[j]))
            if t != (1 if i == j else 0):
                raise ArithmeticError(f"tau(b_{i} b_{j}^vee) = {t}")
    return DualBasis(vectors)


@dataclass
class MMReport:
    values: list
    tau_pi: object

    @property
    def failures(self):
        return [j for j, v in enumerate(self.values) if j > 0 and not v.is_zero()]

    @property
    def ok(self):
        return not self.failures

    def to_json(self):
        return {"ok": self.ok, "tau_pi": self.tau_pi.to_json(),
                "nonzero_indices": self.failures,
                "values": [v.to_json() for v in self.values]}


def mm_condition_check(spec):
    """tau(x^-1 pi) for every basis word x; must vanish for x != 1, tau(pi) is reported."""
    if spec.pi_word is None:
        raise ValueError(f"group {spec.name} has no pi_word")
    values = []
    for w in spec.basis_words:
        h = word_to_element(spec, inverse_word(w) + tuple(spec.pi_word))
        values.append(tau(h))
    return MMReport(values, values[0])

