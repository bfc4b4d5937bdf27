"""
Centers from characters: the A2 bases.

For the Hecke algebra of type A2 (T_s^2 = c T_s + d with c = u1 + u2 and
d = -u1 u2) the three irreducible representations are written down over R.
Expressing each character column through the columns of chosen class
representatives gives coefficients f (on the basis) or g (on the dual basis),
and from them two families of central elements:

    y_C = sum_w f[w, C] T_w^vee        z_C = sum_w g[w, C] T_w

Both are computed for minimal and maximal length representatives.
"""

from heckecenter.center import build_center, class_coeffs, commutant_center, span_compare
from heckecenter.groupdata import load_group
from heckecenter.trace import dual_basis

a2 = load_group("a2")
duals = dual_basis(a2)
reps = a2.representations
print("representations:", ", ".join(f"{r.name} (dim {r.dim})" for r in reps))

comm = commutant_center(a2)
for reps_name, classes in a2.class_reps.items():
    f = class_coeffs(a2, reps, classes, "f_on_basis")
    y = build_center(a2, f, "y_from_duals", duals)
    g = class_coeffs(a2, reps, classes, "g_on_duals", duals)
    z = build_center(a2, g, "z_from_basis")
    for label, basis in (("y", y), ("z", z)):
        print(f"\n{label}_C with {reps_name} representatives "
              f"{[a2.label(j) for j in classes]}:")
        for v in basis.vectors:
            print("   ", v.to_string(a2))
        rep = span_compare(a2, basis, comm)
        print("    same R-module as the commutant:", rep.X_in_R_span_of_Y and rep.Y_in_R_span_of_X)
