"""
Hecke algebras as free R-modules through a coset-table matrix model.

A group is described by a :class:`GroupSpec`.  One generator sigma_0 is
distinguished; it generates the parabolic subalgebra H' = R[sigma_0], which is
free over R with basis 1, sigma_0, ..., sigma_0^(e-1).  H is free over H' on
the coset representatives x_1 = 1, ..., x_m, and the right action of each
generator on that H'-basis is an m x m matrix ``rho[g]`` with entries in H'.
Replacing every H' entry by the e x e matrix of left multiplication on
{1, sigma_0, ...} (:func:`flatten`) turns ``rho[g]`` into an |W| x |W| matrix
over R in the R-basis

    b[e*i + p] = sigma_0^p x_{i+1}       (0-based indices)

Elements of H are coefficient *row* vectors in this basis, and the element
represented by a braid word is ``e_0 @ rho[g1]^k1 @ rho[g2]^k2 ...``.
Multiplication matrices returned by :func:`mul_matrix` use the column
convention instead: ``mul_matrix(spec, g, "left") @ h`` is the coefficient
vector of ``g h``.
"""

from dataclasses import dataclass, field
from functools import cached_property
import re
import threading

from .linalg import Matrix, mat_mul
from .ring import LaurentPoly, RatFunc, dot, variables, elementary_symmetric

__all__ = [
    "Family", "HPrime", "HPrimeElement", "GroupSpec", "HeckeElement",
    "ValidationError", "RelationReport", "hp_mul", "hp_sigma_inverse",
    "flatten", "verify_relations", "word_to_element", "word_matrix",
    "mul_matrix", "multiply", "parse_word", "format_word", "basis_element",
]


class ValidationError(ValueError):
    """A group spec violates one of its defining relations."""

    def __init__(self, report):
        self.report = report
        super().__init__("; ".join(report.failures) or "invalid group spec")


# -- H' = R[sigma_0] -------------------------------------------------------

@dataclass(frozen=True)
class Family:
    """A conjugacy family of generators: its order e_s and parameter indices u_{s,j}."""
    order: int
    parameters: tuple

    def hecke_coefficients(self, k):
        """``(a_0, ..., a_{e-1})`` with ``sigma^e = sum_j a_j sigma^j``."""
        u = variables(k)
        us = [u[i] for i in self.parameters]
        e = self.order
        # a_{e-j} = (-1)^(j-1) f_j(u)
        coeffs = [None] * e
        for j in range(1, e + 1):
            f = elementary_symmetric(us, j)
            coeffs[e - j] = f if j % 2 == 1 else -f
        return tuple(coeffs)


class HPrime:
    """The commutative algebra R[sigma]/(sigma^e - a_{e-1} sigma^{e-1} - ... - a_0)."""

    def __init__(self, relation, k):
        self.relation = tuple(relation)
        self.e = len(relation)
        self.k = k

    def element(self, coeffs):
        coeffs = list(coeffs)
        if len(coeffs) > self.e:
            raise ValueError("too many coefficients; reduce first")
        coeffs = [LaurentPoly.constant(c, self.k) if isinstance(c, int) else c for c in coeffs]
        zero = LaurentPoly.constant(0, self.k)
        coeffs += [zero] * (self.e - len(coeffs))
        return HPrimeElement(self, tuple(coeffs))

    def scalar(self, c):
        if isinstance(c, int):
            c = LaurentPoly.constant(c, self.k)
        return self.element([c])

    def one(self):
        return self.scalar(1)

    def zero(self):
        return self.scalar(0)

    def sigma(self):
        if self.e == 1:
            return self.scalar(self.relation[0])
        return self.element([LaurentPoly.constant(0, self.k), LaurentPoly.constant(1, self.k)])

    def reduce(self, coeffs):
        """Reduce a coefficient list of any length with the positive Hecke relation."""
        coeffs = list(coeffs)
        e = self.e
        for d in range(len(coeffs) - 1, e - 1, -1):
            top = coeffs[d]
            if top.is_zero():
                continue
            for j, a in enumerate(self.relation):
                if not a.is_zero():
                    coeffs[d - e + j] = coeffs[d - e + j] + top * a
            coeffs[d] = LaurentPoly.constant(0, self.k)
        return self.element(coeffs[:e])

    def __eq__(self, other):
        return isinstance(other, HPrime) and self.relation == other.relation

    def __hash__(self):
        return hash(self.relation)


@dataclass(frozen=True)
class HPrimeElement:
    alg: HPrime
    coeffs: tuple

    def _check(self, other):
        if not isinstance(other, HPrimeElement):
            if isinstance(other, (LaurentPoly, int)):
                return self.alg.scalar(other)
            return NotImplemented
        if other.alg != self.alg:
            raise ValueError("elements of different parabolic algebras")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return HPrimeElement(self.alg, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return HPrimeElement(self.alg, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (LaurentPoly, int)):
            return HPrimeElement(self.alg, tuple(x * other for x in self.coeffs))
        return hp_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (LaurentPoly, int)):
            return HPrimeElement(self.alg, tuple(other * x for x in self.coeffs))
        return NotImplemented

    def __pow__(self, n):
        if n < 0:
            return hp_sigma_power_inverse(self, -n)
        out = self.alg.one()
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self):
        return all(x.is_zero() for x in self.coeffs)

    def regular_matrix(self):
        """e x e matrix whose row r holds the coefficients of sigma^r * self."""
        rows = []
        cur = self
        s = self.alg.sigma()
        for r in range(self.alg.e):
            rows.append(list(cur.coeffs))
            if r + 1 < self.alg.e:
                cur = s * cur
        return rows

    def to_json(self):
        if self.is_zero():
            return None
        return [c.to_json() for c in self.coeffs]

    def __repr__(self):
        parts = []
        for p, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            mono = "" if p == 0 else ("s" if p == 1 else f"s^{p}")
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts) or "0"


def hp_mul(a, b):
    """Product in H', reduced below degree e by the positive Hecke relation."""
    if a.alg != b.alg:
        raise ValueError("elements of different parabolic algebras")
    e = a.alg.e
    zero = LaurentPoly.constant(0, a.alg.k)
    prod = [zero] * (2 * e - 1)
    for i, x in enumerate(a.coeffs):
        if x.is_zero():
            continue
        for j, y in enumerate(b.coeffs):
            if not y.is_zero():
                prod[i + j] = prod[i + j] + x * y
    return a.alg.reduce(prod)


def hp_sigma_inverse(alg):
    """
    sigma^-1 from the inverse Hecke relation
    ``sigma^-1 = a_0^-1 (sigma^{e-1} - a_{e-1} sigma^{e-2} - ... - a_1)``.
    """
    a = alg.relation
    inv = a[0] ** -1  # a_0 is a signed monomial
    coeffs = [-(inv * a[j + 1]) for j in range(alg.e - 1)] + [inv]
    return alg.element(coeffs)


def hp_sigma_power_inverse(x, n):
    if x != x.alg.sigma():
        raise ValueError("only powers of sigma are invertible here")
    return hp_sigma_inverse(x.alg) ** n


# -- braid words ----------------------------------------------------------

def parse_word(text):
    """
    Parse whitespace separated ``s<k>^<e>`` tokens (``^1`` optional) into
    ``[(generator, exponent), ...]`` with 0-based generators.

    >>> parse_word("s1^2 s2^-1 s1")
    [(0, 2), (1, -1), (0, 1)]
    """
    word = []
    for tok in text.split():
        m = re.fullmatch(r"s(\d+)(?:\^(-?\d+))?", tok)
        if not m:
            raise ValueError(f"malformed word token {tok!r}")
        g, ex = int(m.group(1)), int(m.group(2) or 1)
        if g < 1:
            raise ValueError(f"generators are numbered from 1: {tok!r}")
        if ex == 0:
            raise ValueError(f"zero exponent in {tok!r}")
        word.append((g - 1, ex))
    return word


def format_word(word):
    return " ".join(f"s{g + 1}" if ex == 1 else f"s{g + 1}^{ex}" for g, ex in word) or "1"


def _norm_word(word):
    out = []
    for g, ex in word:
        g, ex = int(g), int(ex)
        if ex == 0:
            raise ValueError("braid word exponents must be nonzero")
        out.append((g, ex))
    return tuple(out)


def inverse_word(word):
    return tuple((g, -ex) for g, ex in reversed(word))


# -- group spec -----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class GroupSpec:
    """
    Everything needed to realise one Hecke algebra.

    ``rho[g][i][j]`` is the H' coefficient of x_j in ``x_i . sigma_g``.
    ``class_reps`` maps a name (e.g. ``"minimal"``) to one basis index per
    conjugacy class.
    """
    name: str
    k: int
    families: tuple
    generator_family: tuple
    distinguished: int
    braid_relations: tuple
    coset_words: tuple
    rho: tuple
    group_order: int
    class_reps: dict = field(default_factory=dict)
    pi_word: tuple = None
    central_words: dict = field(default_factory=dict)
    reference_center: tuple = None
    basis_labels: tuple = None
    variable_names: tuple = None
    representations: tuple = None
    notes: str = ""

    def __post_init__(self):
        object.__setattr__(self, "_lock", threading.RLock())
        if self.variable_names is None:
            object.__setattr__(self, "variable_names", tuple(f"u{i + 1}" for i in range(self.k)))

    @property
    def generator_count(self):
        return len(self.generator_family)

    @cached_property
    def hprime(self):
        fam = self.families[self.generator_family[self.distinguished]]
        return HPrime(fam.hecke_coefficients(self.k), self.k)

    @property
    def e(self):
        return self.hprime.e

    @property
    def m(self):
        return len(self.coset_words)

    @property
    def dim(self):
        return self.e * self.m

    @property
    def class_count(self):
        counts = {len(v) for v in self.class_reps.values()}
        if len(counts) != 1:
            raise ValueError("class representative sets disagree on the number of classes")
        return counts.pop()

    def relation_of(self, g):
        return self.families[self.generator_family[g]].hecke_coefficients(self.k)

    def label(self, j):
        if self.basis_labels:
            return self.basis_labels[j]
        return f"b{j + 1}"

    @cached_property
    def basis_words(self):
        words = []
        for i, x in enumerate(self.coset_words):
            for p in range(self.e):
                head = ((self.distinguished, p),) if p else ()
                words.append(head + tuple(x))
        return tuple(words)

    # -- cached matrix model (single initialisation under a lock) --

    def _cached(self, key, build):
        cache = self.__dict__.setdefault("_matrix_cache", {})
        if key in cache:
            return cache[key]
        with self._lock:
            if key not in cache:
                cache[key] = build()
            return cache[key]

    def generator_matrix(self, g):
        return self._cached(("rho", g), lambda: flatten(self.rho[g]))

    def generator_inverse(self, g):
        def build():
            M = self.generator_matrix(g)
            rel = self.relation_of(g)
            e = len(rel)
            inv0 = rel[0] ** -1
            # sigma^-1 = a_0^-1 (sigma^{e-1} - sum_{j>=1} a_j sigma^{j-1})
            n = self.dim
            powers = [Matrix.identity(n, self.k)]
            for _ in range(e - 1):
                powers.append(mat_mul(powers[-1], M))
            acc = powers[e - 1].scale(inv0)
            for j in range(1, e):
                acc = acc - powers[j - 1].scale(inv0 * rel[j])
            return acc
        return self._cached(("rho_inv", g), build)

    def right_basis_matrices(self):
        """``R[j]`` with ``e_i @ R[j]`` the coefficients of ``b_i b_j``."""
        def build():
            coset = [word_matrix(self, x) for x in self.coset_words]
            s0 = self.generator_matrix(self.distinguished)
            pw = [Matrix.identity(self.dim, self.k)]
            for _ in range(self.e - 1):
                pw.append(mat_mul(pw[-1], s0))
            return tuple(mat_mul(pw[p], coset[i]) if p else coset[i]
                         for i in range(self.m) for p in range(self.e))
        return self._cached("right_basis", build)


# -- flattening -----------------------------------------------------------

def flatten(M):
    """Replace each H' entry of an m x m matrix by its e x e regular block."""
    m = len(M)
    alg = next(x.alg for row in M for x in row if x is not None)
    e, k = alg.e, alg.k
    zero = LaurentPoly.constant(0, k)
    out = [[zero] * (e * m) for _ in range(e * m)]
    for i, row in enumerate(M):
        for j, x in enumerate(row):
            if x is None or x.is_zero():
                continue
            block = x.regular_matrix()
            for r in range(e):
                for c in range(e):
                    out[e * i + r][e * j + c] = block[r][c]
    return Matrix(out, k)


# -- Hecke elements -------------------------------------------------------

@dataclass(frozen=True, eq=False)
class HeckeElement:
    """Coefficient vector (LaurentPoly or RatFunc entries) in the basis b_0, b_1, ..."""
    coeffs: tuple

    @classmethod
    def zero(cls, n, k):
        return cls((LaurentPoly.constant(0, k),) * n)

    @property
    def k(self):
        return self.coeffs[0].k

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, j):
        return self.coeffs[j]

    def __add__(self, other):
        return HeckeElement(tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return HeckeElement(tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return HeckeElement(tuple(-x for x in self.coeffs))

    def __rmul__(self, c):
        return HeckeElement(tuple(c * x for x in self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return len(self) == len(other) and all(x == y for x, y in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def is_zero(self):
        return all(x.is_zero() for x in self.coeffs)

    def is_integral(self):
        return all(isinstance(x, LaurentPoly) or x.is_polynomial() for x in self.coeffs)

    def as_poly(self):
        """Same element with every coefficient a LaurentPoly (raises if not integral)."""
        out = []
        for x in self.coeffs:
            if isinstance(x, RatFunc):
                p = x.as_poly()
                if p is None:
                    raise ValueError(f"coefficient {x} is not in R")
                x = p
            out.append(x)
        return HeckeElement(tuple(out))

    def support(self):
        return [j for j, x in enumerate(self.coeffs) if not x.is_zero()]

    def to_string(self, spec=None):
        parts = []
        for j in self.support():
            lab = spec.label(j) if spec else f"b{j + 1}"
            names = spec.variable_names if spec else None
            parts.append(f"({self.coeffs[j].to_string(names)})*{lab}")
        return " + ".join(parts) or "0"

    def __repr__(self):
        return self.to_string()

    def to_json(self):
        return [x.to_json() for x in self.coeffs]

    @classmethod
    def from_json(cls, data, k):
        out = []
        for x in data:
            out.append(RatFunc.from_json(x, k) if isinstance(x, dict) else LaurentPoly.from_json(x, k))
        return cls(tuple(out))


def basis_element(spec, j):
    z, o = LaurentPoly.constant(0, spec.k), LaurentPoly.constant(1, spec.k)
    return HeckeElement(tuple(o if i == j else z for i in range(spec.dim)))


def _vec_mat(vec, M):
    """Row vector times matrix, skipping zeros."""
    n = M.ncols
    if all(isinstance(a, LaurentPoly) for a in vec) and M.rows and isinstance(M.rows[0][0], LaurentPoly):
        k = M.k
        support = [t for t, a in enumerate(vec) if not a.is_zero()]
        out = []
        for j in range(n):
            xs = [vec[t] for t in support]
            ys = [M.rows[t][j] for t in support]
            out.append(dot(xs, ys, k))
        return out
    acc = [None] * n
    for t, a in enumerate(vec):
        if a.is_zero():
            continue
        for j, b in enumerate(M.rows[t]):
            if b.is_zero():
                continue
            p = a * b
            acc[j] = p if acc[j] is None else acc[j] + p
    zero = vec[0] * 0 if vec else None
    return [zero if x is None else x for x in acc]


def word_to_element(spec, word):
    """Coefficients of the image of a braid word in the basis b."""
    word = _norm_word(word)
    vec = list(basis_element(spec, 0).coeffs)
    for g, ex in word:
        if not 0 <= g < spec.generator_count:
            raise IndexError(f"generator {g} out of range")
        M = spec.generator_matrix(g) if ex > 0 else spec.generator_inverse(g)
        for _ in range(abs(ex)):
            vec = _vec_mat(vec, M)
    return HeckeElement(tuple(vec))


def word_matrix(spec, word):
    """Right-multiplication matrix (row convention) of a braid word."""
    word = _norm_word(word)
    M = Matrix.identity(spec.dim, spec.k)
    for g, ex in word:
        G = spec.generator_matrix(g) if ex > 0 else spec.generator_inverse(g)
        for _ in range(abs(ex)):
            M = mat_mul(M, G)
    return M


def _as_element(spec, g):
    if isinstance(g, HeckeElement):
        return g
    if isinstance(g, int):
        return word_to_element(spec, [(g, 1)])
    return word_to_element(spec, g)


def _combine(vectors, weights, zero):
    acc = None
    for w, v in zip(weights, vectors):
        if w.is_zero():
            continue
        term = [w * x for x in v]
        acc = term if acc is None else [x + y for x, y in zip(acc, term)]
    return acc if acc is not None else [zero] * len(vectors[0])


def multiply(spec, h1, h2):
    """Product h1 h2 in H."""
    R = spec.right_basis_matrices()
    zero = (h1.coeffs[0] * h2.coeffs[0]) * 0
    out = [zero] * spec.dim
    for j, c in enumerate(h2.coeffs):
        if c.is_zero():
            continue
        row = _vec_mat(list(h1.coeffs), R[j])
        out = [x + c * y for x, y in zip(out, row)]
    return HeckeElement(tuple(out))


def mul_matrix(spec, g, side):
    """
    Matrix of ``h -> g h`` (side="left") or ``h -> h g`` (side="right") in the
    column convention.  ``g`` is a generator index, a braid word or a HeckeElement.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    h = _as_element(spec, g)
    R = spec.right_basis_matrices()
    n = spec.dim
    zero = h.coeffs[0] * 0
    cols = []
    for j in range(n):
        if side == "left":
            # g b_j = sum_i g_i (b_i b_j) = sum_i g_i R[j][i]
            cols.append(_combine(R[j].rows, h.coeffs, zero))
        else:
            # b_j g = sum_t g_t (b_j b_t) = sum_t g_t R[t][j]
            cols.append(_combine([R[t].rows[j] for t in range(n)], h.coeffs, zero))
    return Matrix.from_columns(cols, spec.k)


# -- validation -----------------------------------------------------------

@dataclass
class RelationReport:
    checks: list = field(default_factory=list)

    def add(self, name, ok):
        self.checks.append((name, bool(ok)))

    @property
    def failures(self):
        return [n for n, ok in self.checks if not ok]

    @property
    def ok(self):
        return not self.failures

    def to_json(self):
        return {"ok": self.ok, "checks": [{"check": n, "passed": ok} for n, ok in self.checks]}


def verify_relations(spec, raise_on_failure=True):
    """
    Prove the matrix model: braid relations, Hecke relations, invertibility,
    centrality of the declared central words and the basis convention.
    """
    rep = RelationReport()
    n, k = spec.dim, spec.k
    rep.add(f"|W| = e*m = {n} equals group order {spec.group_order}", n == spec.group_order)
    rep.add("x_1 is the empty word", len(spec.coset_words[0]) == 0)
    I = Matrix.identity(n, k)
    gens = [spec.generator_matrix(g) for g in range(spec.generator_count)]
    for lhs, rhs in spec.braid_relations:
        ok = word_matrix(spec, lhs) == word_matrix(spec, rhs)
        rep.add(f"braid relation {format_word(lhs)} = {format_word(rhs)}", ok)
    for g, M in enumerate(gens):
        rel = spec.relation_of(g)
        e = len(rel)
        powers = [I]
        for _ in range(e):
            powers.append(mat_mul(powers[-1], M))
        acc = powers[e]
        for j, a in enumerate(rel):
            acc = acc - powers[j].scale(a)
        rep.add(f"Hecke relation of order {e} for s{g + 1}", acc.is_zero())
        Minv = spec.generator_inverse(g)
        rep.add(f"s{g + 1} invertible over R",
                mat_mul(M, Minv) == I and mat_mul(Minv, M) == I)
    for name, w in spec.central_words.items():
        Z = word_matrix(spec, w)
        ok = all(mat_mul(Z, M) == mat_mul(M, Z) for M in gens)
        rep.add(f"central word {name} = {format_word(w)} commutes with generators", ok)
    for j, w in enumerate(spec.basis_words):
        if word_to_element(spec, w) != basis_element(spec, j):
            rep.add(f"basis word of {spec.label(j)} evaluates to the unit vector", False)
            break
    else:
        rep.add("every basis word evaluates to its unit vector", True)
    if raise_on_failure and not rep.ok:
        raise ValidationError(rep)
    return rep
