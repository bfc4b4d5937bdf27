"""
Exact arithmetic in Z[u1^+-1, u2^+-1, u3^+-1].

The Hecke algebras in this package live over a Laurent polynomial ring, and
every later computation (matrix products, determinants, solving) reduces to
the handful of operations shown here.  Units of the ring are exactly the
signed monomials, which is what makes a determinant like -(u1 u2 u3)^96 an
invertible scalar.
"""

from heckecenter.ring import LaurentPoly, RatFunc, exact_div, is_unit, specialize, variables

u1, u2, u3 = variables(3)

a = u1 + u2 + u3
b = -(u1 * u2 + u1 * u3 + u2 * u3)
c = u1 * u2 * u3
print("a =", a)
print("b =", b)
print("c =", c)

# (sigma - u1)(sigma - u2)(sigma - u3) = sigma^3 - a sigma^2 - b sigma - c
print("a*b =", a * b)

ok, inv = is_unit(-c)
print("-c is a unit:", ok, "with inverse", inv)
print("u1 + u2 is a unit:", is_unit(u1 + u2)[0])

print("(u1^2 - u2^2) / (u1 - u2) =", exact_div(u1 ** 2 - u2 ** 2, u1 - u2))
print("(u1 + 1) / (u2 + 1) divisible:", exact_div(u1 + 1, u2 + 1) is not None)

# Fractions are kept without gcd computation; equality is by cross-multiplication.
r = RatFunc(u1, u1 + u2) + RatFunc(u2, u1 + u2)
print("u1/(u1+u2) + u2/(u1+u2) =", r)
print("1/u1 + 1/u2 =", RatFunc(1, u1) + RatFunc(1, u2), "(monomials are units)")

# Specialisation is a ring homomorphism into Q; handy for spot checks.
print("a*b at (2, -3, 1/2):", specialize(a * b, (2, -3, 0.5)))

text = (a * b).to_string()
print("round trip through text:", LaurentPoly.parse(text, 3) == a * b)
