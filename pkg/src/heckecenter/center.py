"""
The center Z(H), computed two independent ways.

1. Commutant: stack ``L_g - R_g`` for every generator and take the nullspace
   over Frac(R); denominators are then cleared.
2. Class coefficients: express the character column of each basis element
   (or dual basis element) through the columns of a chosen set of class
   representatives.  With coefficients f (on the basis) the elements
   ``y_C = sum_w f[w, C] b_w^vee`` are central; with coefficients g (on the
   dual basis) so are ``z_C = sum_w g[w, C] b_w``.

The second route needs irreducible representations over Frac(R), which are
shipped only for A2.
"""

from dataclasses import dataclass, field

from .hecke import HeckeElement, basis_element, format_word, mul_matrix
from .linalg import (Matrix, UnderdeterminedError, clear_denominators,
                     frac_nullspace, frac_solve, rank, mat_mul)
from .ring import RatFunc, exact_div

__all__ = [
    "CenterBasis", "ClassCoeffs", "SpanReport", "SeparationError",
    "commutant_center", "centrality_check", "char_values", "class_coeffs",
    "build_center", "span_compare", "verify_representations", "rep_matrix",
]


class SeparationError(ValueError):
    """The chosen representatives do not separate the classes."""


@dataclass
class CenterBasis:
    vectors: list
    provenance: str

    @property
    def integral(self):
        return [v.is_integral() for v in self.vectors]

    def __len__(self):
        return len(self.vectors)

    def to_json(self):
        return {"provenance": self.provenance,
                "integral": self.integral,
                "vectors": [v.to_json() for v in self.vectors]}


@dataclass
class ClassCoeffs:
    """``values[w][C]``: rows indexed by basis index, columns by class."""
    values: list
    mode: str
    reps: tuple

    def to_json(self):
        return {"mode": self.mode, "reps": list(self.reps),
                "values": [[x.to_json() for x in row] for row in self.values]}


def _generator_gap(spec, g):
    return spec._cached(("comm", g), lambda: mul_matrix(spec, g, "left") - mul_matrix(spec, g, "right"))


def _integral_vector(h):
    """Scale a vector over Frac(R) into R (the scaling does not affect membership in a kernel)."""
    if h.is_integral():
        return [x.as_poly() if isinstance(x, RatFunc) else x for x in h.coeffs]
    w, _ = clear_denominators(h.coeffs)
    return w


def centrality_check(spec, h):
    """True iff ``(L_g - R_g) h == 0`` for every generator g."""
    w = _integral_vector(h)
    col = Matrix.from_columns([w], spec.k)
    return all(mat_mul(_generator_gap(spec, g), col).is_zero()
               for g in range(spec.generator_count))


def commutant_center(spec, column_order=None):
    """
    Nullspace of the stacked ``L_g - R_g`` system, denominators cleared.

    Vectors come sorted by their free (pivot) coordinate.  The dimension must
    equal the number of classes declared by ``spec.class_reps``.
    """
    stacked = None
    for g in range(spec.generator_count):
        D = _generator_gap(spec, g)
        stacked = D if stacked is None else stacked.vstack(D)
    basis = frac_nullspace(stacked, column_order)
    if spec.class_reps and len(basis) != spec.class_count:
        raise ArithmeticError(
            f"center has dimension {len(basis)}, expected {spec.class_count} classes")
    vectors = []
    for v in basis:
        w, _ = clear_denominators(v)
        h = HeckeElement(tuple(w))
        if not centrality_check(spec, h):
            raise ArithmeticError("commutant vector is not central")
        vectors.append(h)
    return CenterBasis(vectors, "commutant")


# -- representations ------------------------------------------------------

def rep_matrix(spec, rep, word):
    """Matrix of a braid word in a representation (inverse generators by exact solve)."""
    k = spec.k
    d = rep.dim
    one, zero = RatFunc(1, k=k), RatFunc(0, k=k)
    M = Matrix([[one if i == j else zero for j in range(d)] for i in range(d)], k)
    for g, ex in word:
        G = Matrix(rep.matrices[g], k)
        if ex < 0:
            G = frac_solve(G, Matrix([[one if i == j else zero for j in range(d)] for i in range(d)], k))
        for _ in range(abs(ex)):
            M = mat_mul(M, G)
    return M


def verify_representations(spec, reps):
    """Braid and Hecke relations in every representation, and sum of d^2 == |W|."""
    problems = []
    if sum(r.dim ** 2 for r in reps) != spec.dim:
        problems.append("sum of squared dimensions differs from |W|")
    for rep in reps:
        for lhs, rhs in spec.braid_relations:
            if rep_matrix(spec, rep, lhs) != rep_matrix(spec, rep, rhs):
                problems.append(f"{rep.name}: braid relation {format_word(lhs)} fails")
        for g in range(spec.generator_count):
            rel = spec.relation_of(g)
            G = Matrix(rep.matrices[g], spec.k)
            pw = [rep_matrix(spec, rep, ())]
            for _ in range(len(rel)):
                pw.append(mat_mul(pw[-1], G))
            acc = pw[-1]
            for j, a in enumerate(rel):
                acc = acc - pw[j].scale(RatFunc(a))
            if not acc.is_zero():
                problems.append(f"{rep.name}: Hecke relation for s{g + 1} fails")
    if problems:
        raise ValueError("; ".join(problems))


def _basis_rep_matrices(spec, rep):
    return spec._cached(("repbasis", rep.name),
                        lambda: [rep_matrix(spec, rep, w) for w in spec.basis_words])


def char_values(spec, reps, elements):
    """``out[chi][t] = trace of elements[t] in representation chi``."""
    out = []
    for rep in reps:
        mats = _basis_rep_matrices(spec, rep)
        row = []
        for h in elements:
            tr = RatFunc(0, k=spec.k)
            for j, c in enumerate(h.coeffs):
                if c.is_zero():
                    continue
                M = mats[j]
                diag = RatFunc(0, k=spec.k)
                for i in range(rep.dim):
                    diag = diag + M.rows[i][i]
                tr = tr + diag * c
            row.append(tr)
        out.append(row)
    return out


def class_coeffs(spec, reps, reps_of_classes, mode, duals=None):
    """
    ``mode="f_on_basis"``: chi(b_w) = sum_C f[w, C] chi(b_{w_C}).
    ``mode="g_on_duals"``: chi(b_w^vee) = sum_C g[w, C] chi(b_{w_C}^vee).
    """
    n = spec.dim
    if mode == "f_on_basis":
        elems = [basis_element(spec, j) for j in range(n)]
    elif mode == "g_on_duals":
        if duals is None:
            raise ValueError("g_on_duals needs the dual basis")
        elems = list(duals.vectors)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    Y = char_values(spec, reps, elems)  # [chi][w]
    X = Matrix([[row[c] for c in reps_of_classes] for row in Y], spec.k)
    try:
        F = frac_solve(X, Matrix(Y, spec.k))
    except UnderdeterminedError:
        raise SeparationError("chosen representatives do not separate classes") from None
    if F is None:
        raise SeparationError("character columns are not spanned by the representatives")
    values = [F.column(w) for w in range(n)]
    for ci, w in enumerate(reps_of_classes):
        for cj, x in enumerate(values[w]):
            if x != (1 if ci == cj else 0):
                raise ArithmeticError(f"row of representative b{w + 1} is not an indicator")
    return ClassCoeffs(values, mode, tuple(reps_of_classes))


def build_center(spec, coeffs, mode, duals=None):
    """
    ``mode="y_from_duals"``: y_C = sum_w f[w, C] b_w^vee.
    ``mode="z_from_basis"``: z_C = sum_w g[w, C] b_w.
    """
    n, k = spec.dim, spec.k
    ncls = len(coeffs.reps)
    vectors = []
    for C in range(ncls):
        if mode == "y_from_duals":
            if duals is None:
                raise ValueError("y_from_duals needs the dual basis")
            acc = [RatFunc(0, k=k)] * n
            for w in range(n):
                f = coeffs.values[w][C]
                if f.is_zero():
                    continue
                acc = [a + f * x for a, x in zip(acc, duals.vectors[w].coeffs)]
        elif mode == "z_from_basis":
            acc = [coeffs.values[w][C] for w in range(n)]
        else:
            raise ValueError(f"unknown mode {mode!r}")
        h = HeckeElement(tuple(acc))
        if not centrality_check(spec, h):
            raise ArithmeticError(f"class {C}: assembled element is not central")
        vectors.append(h)
    prov = "theorem_T1" if mode == "y_from_duals" else "theorem_T2"
    return CenterBasis(vectors, prov)


# -- comparison -----------------------------------------------------------

@dataclass
class SpanReport:
    equal_F_span: bool
    X_in_R_span_of_Y: bool
    Y_in_R_span_of_X: bool
    details: dict = field(default_factory=dict)

    def to_json(self):
        return {"equal_F_span": self.equal_F_span,
                "X_in_R_span_of_Y": self.X_in_R_span_of_Y,
                "Y_in_R_span_of_X": self.Y_in_R_span_of_X}


def _as_frac_columns(B):
    return [[x if isinstance(x, RatFunc) else RatFunc(x) for x in v.coeffs] for v in B.vectors]


def _in_R_span(spec, X, Y):
    """Every vector of X is an R-combination of Y (Y assumed independent)."""
    Ymat = Matrix.from_columns(_as_frac_columns(Y), spec.k)
    Xmat = Matrix.from_columns(_as_frac_columns(X), spec.k)
    try:
        C = frac_solve(Ymat, Xmat)
    except UnderdeterminedError:
        return False
    if C is None:
        return False
    return all(_in_R(x) for r in C.rows for x in r)


def _in_R(x):
    if x.is_polynomial():
        return True
    return exact_div(x.num, x.den) is not None


def span_compare(spec, X, Y):
    Xm = Matrix.from_columns(_as_frac_columns(X), spec.k)
    Ym = Matrix.from_columns(_as_frac_columns(Y), spec.k)
    both = Matrix([rx + ry for rx, ry in zip(Xm.rows, Ym.rows)], spec.k)
    rx, ry, rb = rank(Xm), rank(Ym), rank(both)
    equal = rx == ry == rb
    return SpanReport(
        equal_F_span=equal,
        X_in_R_span_of_Y=equal and _in_R_span(spec, X, Y),
        Y_in_R_span_of_X=equal and _in_R_span(spec, Y, X),
        details={"rank_X": rx, "rank_Y": ry, "rank_XY": rb},
    )

