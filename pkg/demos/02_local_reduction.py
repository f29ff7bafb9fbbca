"""Tate's algorithm at every bad prime, and the rank-one prime set T.

Run:  python3 demos/02_local_reduction.py
"""

from shaclass import CurveModel, bad_primes, compute_t_set, local_data

EXAMPLES = {
    "11a1 (split I5)": CurveModel(0, -1, 1, -10, -20),
    "15a1 (I4 at 3 and 5)": CurveModel(1, 1, 1, -10, -10),
    "36a1 (additive at 2, 3)": CurveModel(0, 0, 0, 0, 1),
    "1058d1": CurveModel(1, -1, 0, -332311, -73733731),
    "423801ci1": CurveModel(0, 0, 1, -17034726259173, -27061436852750306309),
}

for name, model in EXAMPLES.items():
    print(name)
    for q, d in local_data(model).items():
        print(
            f"  v = {q:3d}: {d.kodaira:5s} {d.reduction_class:32s} "
            f"c_v = {d.c_v}  v(disc) = {d.val_delta_min}  f = {d.conductor_exponent}"
        )
    print()

# Synthetic families make every Kodaira type to order: y^2 = x^3 + 7^k
# walks through II, IV, IV*, II* as k = 1, 2, 4, 5.
print("the y^2 = x^3 + 7^k family at v = 7:")
for k in (1, 2, 4, 5):
    d = local_data(CurveModel(0, 0, 0, 0, 7**k), 7)
    print(f"  k = {k}: {d.kodaira}, c = {d.c_v}")

# The set T feeding the upper bound: multiplicative primes v with
# p not dividing v(disc).  For 1058d1 at p = 5 the multiplicative prime 2
# has v(disc) = 7, so T = {2}; for 423801ci1 every bad prime is additive
# and p = 5 >= 5, so T is empty.
print()
for name in ("1058d1", "423801ci1"):
    t = compute_t_set(EXAMPLES[name], 5)
    print(f"T({name}, p=5): members = {sorted(t.members)}, provisional = {sorted(t.provisional_members)}")

# p = 3 is subtler: additive potentially good primes v >= 5 enter exactly
# for Kodaira types IV and IV* (tame inertia of order 3).
t3 = compute_t_set(CurveModel(0, 0, 0, 0, 49), 3)  # IV at 7
print("T(y^2 = x^3 + 49, p=3):", sorted(t3.members), "(IV at 7 has order-3 inertia)")
print("bad primes of that curve:", bad_primes(CurveModel(0, 0, 0, 0, 49)))
