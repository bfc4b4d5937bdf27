"""
The coefficient-of-one trace and its dual basis for G4.

tau(h) is simply the b_1 coefficient of h.  That it is a symmetrising trace
is certified, not assumed: the Gram matrix (tau(b_i b_j)) must be symmetric
with a unit determinant.  Once certified, its inverse gives the dual basis,
and the condition tau(x^-1 pi) = 0 for x != 1 (pi = z^2) is checked as well.
"""

import time

from heckecenter.groupdata import load_group
from heckecenter.trace import dual_basis, gram, mm_condition_check, trace_property_check

g4 = load_group("g4")

t = time.perf_counter()
gd = gram(g4)
print(f"Gram matrix {gd.A.nrows}x{gd.A.ncols}, symmetric, det = {gd.det}  ({time.perf_counter() - t:.1f}s)")

t = time.perf_counter()
duals = dual_basis(g4, gd)
print(f"dual basis verified on all 576 pairs ({time.perf_counter() - t:.1f}s)")
print("b1^vee =", duals.vectors[0].to_string(g4)[:160], "...")

rep = trace_property_check(g4, samples=25, seed=1)
print("tau(h1 h2) == tau(h2 h1) on 25 random pairs:", rep.ok)

mm = mm_condition_check(g4)
print("tau(x^-1 pi) vanishes for all 23 non-identity basis words:", mm.ok)
print("tau(pi) =", mm.tau_pi)
