"""
Braid words in the Hecke algebra of G4.

H is realised as a free module of rank 24 over R through a coset-table matrix
model: each generator acts on the basis b_{3i+p} = sigma_1^p x_{i+1} by a
24 x 24 matrix over R.  A braid word is evaluated by pushing the identity
vector through those matrices, negative exponents going through the inverse
Hecke relation.
"""

from heckecenter.groupdata import load_group
from heckecenter.hecke import (mul_matrix, multiply, parse_word, verify_relations,
                               word_matrix, word_to_element)
from heckecenter.linalg import mat_mul

g4 = load_group("g4")
report = verify_relations(g4)
print(f"{len(report.checks)} relation checks passed for {g4.name}:")
for name, _ in report.checks:
    print("  ", name)

h = word_to_element(g4, parse_word("s1^2 s2^2"))
print("\ns1^2 s2^2 =")
for j in h.support():
    print(f"   ({h.coeffs[j]}) * b{j + 1}")

# z = (s1 s2)^3 is central and equals w^2 for w = s1 s2 s1; w itself is not central.
z, w = parse_word("s1 s2 s1 s2 s1 s2"), parse_word("s1 s2 s1")
print("\nz == w^2:", word_to_element(g4, z) == word_to_element(g4, w + w))
gens = [g4.generator_matrix(g) for g in range(2)]
for name, word in (("z", z), ("w", w)):
    M = word_matrix(g4, word)
    print(f"{name} commutes with both generators:", all(mat_mul(M, G) == mat_mul(G, M) for G in gens))

# Left and right multiplication operators always commute with each other.
L, R = mul_matrix(g4, 0, "left"), mul_matrix(g4, 1, "right")
print("L_s1 R_s2 == R_s2 L_s1:", mat_mul(L, R) == mat_mul(R, L))

x = word_to_element(g4, parse_word("s2^-1 s1"))
y = word_to_element(g4, parse_word("s1 s2"))
print("(s2^-1 s1)(s1 s2) == s2^-1 s1^2 s2:",
      multiply(g4, x, y) == word_to_element(g4, parse_word("s2^-1 s1^2 s2")))
