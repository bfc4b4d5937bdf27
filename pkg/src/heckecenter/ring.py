"""
Exact arithmetic in R = Z[u1^+-1, ..., uk^+-1] and its fraction field.

A :class:`LaurentPoly` is a sparse map from integer exponent vectors (negative
entries allowed) to nonzero Python integers.  Terms are ordered by graded
lexicographic order on the exponent vectors: total degree first, then the
vectors themselves lexicographically.  This order is compatible with
multiplication, so the leading (trailing) term of a product is the product of
the leading (trailing) terms.  Rendering, exact division and the normal form of
:class:`RatFunc` all depend on it.

Units of R are the signed monomials ``+-u^e``.  Multivariate gcd is not
implemented; a :class:`RatFunc` is normalised only up to integer content,
monomial factors and exact divisibility of the numerator by the denominator.
Equality of rational functions is therefore decided by cross-multiplication.

>>> u1, u2 = variables(2)
>>> (u1 + u1**-1) * u1
1*u1^2 + 1
>>> exact_div(u1**2 - u2**2, u1 - u2)
1*u1 + 1*u2
>>> RatFunc(1, u1) + RatFunc(1, u2)    # monomials are units
RatFunc(1*u2^-1 + 1*u1^-1, 1)
>>> RatFunc(u1, u1 + u2) + RatFunc(u2, u1 + u2)
RatFunc(1, 1)
"""

from fractions import Fraction
from math import gcd
import re

__all__ = [
    "LaurentPoly", "RatFunc", "DimensionError", "variables", "monomial",
    "is_unit", "exact_div", "specialize", "term_key", "elementary_symmetric", "dot",
]


class DimensionError(ValueError):
    """Operands live in rings with different numbers of indeterminates."""


def term_key(exp):
    """Sort key realising the graded lexicographic term order."""
    return (sum(exp), exp)


class LaurentPoly:
    """Immutable Laurent polynomial with integer coefficients."""

    __slots__ = ("_terms", "_k", "_hash", "_pk")

    def __init__(self, terms=None, k=None):
        if k is None:
            if not terms:
                raise ValueError("number of variables required for an empty polynomial")
            k = len(next(iter(terms)))
        clean = {}
        if terms:
            for exp, c in terms.items():
                if len(exp) != k:
                    raise DimensionError(f"exponent {exp} has length != {k}")
                if c:
                    clean[tuple(exp)] = int(c)
        self._terms = clean
        self._k = k
        self._hash = None
        self._pk = None

    @classmethod
    def _raw(cls, terms, k):
        # terms already canonical: tuple keys, no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._k = k
        obj._hash = None
        obj._pk = None
        return obj

    def _packed(self):
        """Terms as ``(packed exponent, coefficient)`` pairs, computed once."""
        if self._pk is None:
            self._pk = _pack(self._terms)
        return self._pk

    @classmethod
    def constant(cls, c, k):
        return cls._raw({(0,) * k: int(c)} if c else {}, k)

    @property
    def k(self):
        return self._k

    @property
    def terms(self):
        """A copy of the exponent -> coefficient mapping."""
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def is_one(self):
        return len(self._terms) == 1 and self._terms.get((0,) * self._k) == 1

    def is_constant(self):
        return not self._terms or (len(self._terms) == 1 and (0,) * self._k in self._terms)

    def sorted_terms(self, descending=True):
        return sorted(self._terms.items(), key=lambda t: term_key(t[0]), reverse=descending)

    def leading_term(self):
        exp = max(self._terms, key=term_key)
        return exp, self._terms[exp]

    def trailing_term(self):
        exp = min(self._terms, key=term_key)
        return exp, self._terms[exp]

    def content(self):
        """gcd of the integer coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self._terms.values():
            g = gcd(g, c)
            if g == 1:
                break
        return g

    def degree_box(self):
        """Per-variable (min, max) exponents."""
        lo = [min(e[i] for e in self._terms) for i in range(self._k)]
        hi = [max(e[i] for e in self._terms) for i in range(self._k)]
        return lo, hi

    # -- coercion -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other._k != self._k:
                raise DimensionError(f"{self._k} vs {other._k} variables")
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self._k)
        return NotImplemented

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for exp, c in other._terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                del out[exp]
        return LaurentPoly._raw(out, self._k)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()}, self._k)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if not a or not b:
            return LaurentPoly._raw({}, self._k)
        if len(a) > len(b):
            a, b = b, a
        if len(a) == 1:
            (ea, c), = a.items()
            return LaurentPoly._raw(
                {tuple(x + y for x, y in zip(ea, eb)): c * d for eb, d in b.items()}, self._k)
        return dot([self], [other], self._k)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            unit, inv = is_unit(self)
            if not unit:
                raise ValueError(f"{self!r} is not a unit of R")
            return inv ** (-n)
        result = LaurentPoly.constant(1, self._k)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, exp, scale=1):
        """Multiply by the term ``scale * u^exp``."""
        return LaurentPoly._raw(
            {tuple(x + y for x, y in zip(e, exp)): c * scale for e, c in self._terms.items()},
            self._k)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._k == other._k and self._terms == other._terms
        if isinstance(other, int):
            return self._terms == LaurentPoly.constant(other, self._k)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._k, frozenset(self._terms.items())))
        return self._hash

    # -- rendering ----------------------------------------------------------

    def to_string(self, names=None):
        if not self._terms:
            return "0"
        names = names or [f"u{i + 1}" for i in range(self._k)]
        parts = []
        for idx, (exp, c) in enumerate(self.sorted_terms()):
            mono = "*".join(
                n if e == 1 else f"{n}^{e}" for n, e in zip(names, exp) if e)
            if idx == 0:
                body = f"{c}*{mono}" if mono else str(c)
            else:
                sign = " - " if c < 0 else " + "
                body = sign + (f"{abs(c)}*{mono}" if mono else str(abs(c)))
            parts.append(body)
        return "".join(parts)

    __str__ = to_string

    def __repr__(self):
        return self.to_string()

    def to_json(self):
        """List of ``[exponent-vector, coefficient-string]`` pairs in descending order."""
        return [[list(e), str(c)] for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data, k):
        return cls({tuple(e): int(c) for e, c in data}, k)

    @classmethod
    def parse(cls, text, k, names=None):
        """Inverse of :meth:`to_string`."""
        names = names or [f"u{i + 1}" for i in range(k)]
        index = {n: i for i, n in enumerate(names)}
        s = text.replace(" ", "")
        if s in ("", "0"):
            return cls({}, k)
        if s[0] not in "+-":
            s = "+" + s
        terms = {}
        pieces = re.split(r"(?<!\^)([+-])", s)[1:]
        for sign, body in zip(pieces[::2], pieces[1::2]):
            coef = 1
            exp = [0] * k
            for factor in body.split("*"):
                if re.fullmatch(r"\d+", factor):
                    coef *= int(factor)
                    continue
                m = re.fullmatch(r"([A-Za-z_]\w*)(?:\^(-?\d+))?", factor)
                if not m or m.group(1) not in index:
                    raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
                exp[index[m.group(1)]] += int(m.group(2) or 1)
            if sign == "-":
                coef = -coef
            key = tuple(exp)
            terms[key] = terms.get(key, 0) + coef
        return cls(terms, k)


# Kronecker substitution: an exponent vector (e_1, ..., e_k) is packed into the
# single integer sum e_i * BASE^(k-i) with balanced digits.  Adding packed keys
# adds exponent vectors as long as no digit leaves (-BASE/2, BASE/2), which the
# bound on stored exponents guarantees for sums of two monomials.
_BASE = 2 ** 20 + 1
_HALF = _BASE // 2
_EXP_BOUND = 2 ** 18


def _pack(terms):
    out = []
    for e, c in terms.items():
        key = 0
        for x in e:
            if not -_EXP_BOUND < x < _EXP_BOUND:
                raise OverflowError(f"exponent {x} too large for packed arithmetic")
            key = key * _BASE + x
        out.append((key, c))
    return out


def _unpack(key, k):
    exp = [0] * k
    for i in range(k - 1, -1, -1):
        key, r = divmod(key, _BASE)
        if r > _HALF:
            r -= _BASE
            key += 1
        exp[i] = r
    return tuple(exp)


def dot(xs, ys, k):
    """``sum(x * y for x, y in zip(xs, ys))``, accumulated in one pass."""
    out = {}
    get = out.get
    for x, y in zip(xs, ys):
        if not x._terms or not y._terms:
            continue
        pa, pb = x._packed(), y._packed()
        if len(pa) > len(pb):
            pa, pb = pb, pa
        for ka, c in pa:
            for kb, d in pb:
                key = ka + kb
                out[key] = get(key, 0) + c * d
    return LaurentPoly._raw({_unpack(key, k): c for key, c in out.items() if c}, k)


def variables(k):
    """The k indeterminates u1, ..., uk as LaurentPoly values."""
    return [LaurentPoly._raw({tuple(int(i == j) for j in range(k)): 1}, k) for i in range(k)]


def monomial(exp, coeff=1):
    return LaurentPoly({tuple(exp): coeff}, len(exp))


def elementary_symmetric(polys, j):
    """The j-th elementary symmetric polynomial of ``polys``."""
    k = polys[0].k
    # coefficients of prod (1 + p_i t)
    coeffs = [LaurentPoly.constant(1, k)]
    for p in polys:
        nxt = coeffs + [LaurentPoly.constant(0, k)]
        for i in range(len(coeffs), 0, -1):
            nxt[i] = nxt[i] + coeffs[i - 1] * p
        coeffs = nxt
    return coeffs[j]


def is_unit(a):
    """Return ``(True, a^-1)`` for a signed monomial, else ``(False, None)``."""
    if len(a) != 1:
        return False, None
    (exp, c), = a.items()
    if c not in (1, -1):
        return False, None
    return True, LaurentPoly._raw({tuple(-e for e in exp): c}, a.k)


def exact_div(a, b):
    """
    Return q with ``a == q * b``, or ``None`` if b does not divide a in R.

    Long division by leading terms.  Every term of a true quotient lies in the
    box between ``lo(a) - lo(b)`` and ``hi(a) - hi(b)`` (per variable), so a
    quotient term outside it proves non-divisibility and guarantees termination.
    """
    if isinstance(b, int):
        b = LaurentPoly.constant(b, a.k)
    if a.k != b.k:
        raise DimensionError(f"{a.k} vs {b.k} variables")
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return a
    k = a.k
    if len(b) == 1:
        (eb, cb), = b.items()
        out = {}
        for e, c in a.items():
            q, r = divmod(c, cb)
            if r:
                return None
            out[tuple(x - y for x, y in zip(e, eb))] = q
        return LaurentPoly._raw(out, k)
    alo, ahi = a.degree_box()
    blo, bhi = b.degree_box()
    lo = [x - y for x, y in zip(alo, blo)]
    hi = [x - y for x, y in zip(ahi, bhi)]
    if any(l > h for l, h in zip(lo, hi)):
        return None
    eb, cb = b.leading_term()
    bterms = list(b.items())
    r = dict(a.items())
    q = {}
    while r:
        er = max(r, key=term_key)
        cr = r[er]
        qc, rem = divmod(cr, cb)
        if rem:
            return None
        qe = tuple(x - y for x, y in zip(er, eb))
        if any(v < l or v > h for v, l, h in zip(qe, lo, hi)):
            return None
        q[qe] = qc
        for e, c in bterms:
            t = tuple(x + y for x, y in zip(qe, e))
            v = r.get(t, 0) - qc * c
            if v:
                r[t] = v
            else:
                r.pop(t, None)
    return LaurentPoly._raw(q, k)


def specialize(a, point):
    """Exact value of a at a point with nonzero rational coordinates."""
    if len(point) != a.k:
        raise DimensionError(f"point has {len(point)} coordinates, ring has {a.k}")
    pt = [Fraction(x) for x in point]
    if any(x == 0 for x in pt):
        raise ValueError("specialisation point must have nonzero coordinates")
    total = Fraction(0)
    for exp, c in a.items():
        v = Fraction(c)
        for x, e in zip(pt, exp):
            if e:
                v *= x ** e
        total += v
    return total


class RatFunc:
    """
    Element num/den of Frac(R).

    The denominator is normalised so that its trailing term sits at exponent
    zero and its leading coefficient is positive; the integer content common
    to numerator and denominator is removed, and the fraction collapses to a
    polynomial whenever the denominator divides the numerator exactly.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, k=None):
        if isinstance(num, RatFunc):
            if den is not None:
                raise TypeError("cannot give a denominator with a RatFunc numerator")
            self.num, self.den = num.num, num.den
            return
        if k is None:
            k = num.k if isinstance(num, LaurentPoly) else den.k
        if isinstance(num, int):
            num = LaurentPoly.constant(num, k)
        if den is None:
            den = LaurentPoly.constant(1, k)
        elif isinstance(den, int):
            den = LaurentPoly.constant(den, k)
        if num.k != den.k:
            raise DimensionError(f"{num.k} vs {den.k} variables")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = _normalize(num, den)

    @property
    def k(self):
        return self.num.k

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.is_one()

    def as_poly(self):
        """The numerator, if the denominator is 1; else ``None``."""
        return self.num if self.den.is_one() else None

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.k != self.k:
                raise DimensionError(f"{self.k} vs {other.k} variables")
            return other
        if isinstance(other, (LaurentPoly, int)):
            return RatFunc(other, k=self.k)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        out = RatFunc.__new__(RatFunc)
        out.num, out.den = -self.num, self.den
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("division by zero in Frac(R)")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, n):
        if n < 0:
            return RatFunc(1, k=self.k) / (self ** -n)
        return RatFunc(self.num ** n, self.den ** n)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def specialize(self, point):
        d = specialize(self.den, point)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at the specialisation point")
        return specialize(self.num, point) / d

    def to_string(self, names=None):
        if self.den.is_one():
            return self.num.to_string(names)
        return f"({self.num.to_string(names)})/({self.den.to_string(names)})"

    __str__ = to_string

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data, k):
        if isinstance(data, list):
            return cls(LaurentPoly.from_json(data, k))
        return cls(LaurentPoly.from_json(data["num"], k), LaurentPoly.from_json(data["den"], k))


def _normalize(num, den):
    k = num.k
    if num.is_zero():
        return num, LaurentPoly.constant(1, k)
    texp, _ = den.trailing_term()
    _, lc = den.leading_term()
    sign = -1 if lc < 0 else 1
    shift = tuple(-e for e in texp)
    if any(shift) or sign < 0:
        den = den.shift(shift, sign)
        num = num.shift(shift, sign)
    g = gcd(num.content(), den.content())
    if g > 1:
        den = LaurentPoly._raw({e: c // g for e, c in den.items()}, k)
        num = LaurentPoly._raw({e: c // g for e, c in num.items()}, k)
    if not den.is_one():
        q = exact_div(num, den)
        if q is not None:
            return q, LaurentPoly.constant(1, k)
    return num, den
