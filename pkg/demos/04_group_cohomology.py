"""Finite-group cohomology on F_p^2, exactly.

H^1 comes from the cocycle identity f(gh) = f(g) + g f(h), reduced to the
values of f on generators; H^0 is the common fixed space.  Two structural
facts drive the certified bounds: irreducible subgroups of GL_2(F_p) have
vanishing cohomology (via a central scalar), and the order-p unipotent
subgroup has one-dimensional H^0 and H^1.

Run:  python3 demos/04_group_cohomology.py
"""

from shaclass import central_scalar_shortcut, close_group, h0, h1, h1_cyclic
from shaclass.cohom import gl2_generators, sl2_generators

for p in (3, 5):
    GL = close_group(gl2_generators(p), p)
    SL = close_group(sl2_generators(p), p)
    print(f"GL2(F_{p}): order {len(GL):4d}  h0 = {h0(GL)}  h1 = {h1(GL)}")
    print(f"SL2(F_{p}): order {len(SL):4d}  h0 = {h0(SL)}  h1 = {h1(SL)}")

# The unipotent subgroup of order p: this is the inertia image at a
# multiplicative prime in T, and its H^1 has rank exactly one.
print("\ncyclic inertia images:")
for p in (3, 5, 7):
    U = close_group([(1, 1, 0, 1)], p)
    print(
        f"  order-{p} unipotent over F_{p}: h0 = {h0(U)}, h1 = {h1(U)}, "
        f"norm-quotient h1 = {h1_cyclic((1, 1, 0, 1), p, p)}"
    )

# Groups of order prime to p have no cohomology at all.
print("  <-I> over F_5: h1 =", h1_cyclic((4, 0, 0, 4), 2, 5))
print("  order-3 element over F_5: h1 =", h1_cyclic((0, -1, 1, -1), 3, 5))

# Any subgroup containing a non-identity scalar has vanishing H^*: the
# shortcut spots the scalar, and the linear system confirms it.
B = close_group([(2, 0, 0, 1), (1, 0, 0, 2), (1, 1, 0, 1)], 5)  # Borel of GL2(F5)
print(f"\nBorel subgroup of GL2(F_5): order {len(B)}")
print("  central scalar found:", central_scalar_shortcut(B))
print("  h0, h1 by elimination:", h0(B), h1(B))
