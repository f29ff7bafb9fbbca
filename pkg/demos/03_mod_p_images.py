"""Certifying surjectivity of the mod-p Galois representation.

The certificate is one-sided: witnesses (a_ell mod p, ell mod p) rule out
each conjugacy class of maximal subgroups, and SurjectiveCertified is only
ever emitted with a complete set of witnesses.  Failure modes stay honest:
a curve with a rational 5-isogeny or with CM is reported as
SmallImageCertified, never as surjective.

Run:  python3 demos/03_mod_p_images.py
"""

from shaclass import CurveModel, certify_image, division_polynomial
from shaclass.curve import classify_good_prime
from shaclass.galrep import ordinary_shape, wild_ramification_status

E = CurveModel(1, -1, 0, -332311, -73733731)  # 1058d1
cert = certify_image(E, 5, sample_bound=1000)
print("1058d1, p = 5:", cert.status)
print("  ruled out:", sorted(cert.ruled_out))
print("  witnesses (ell, a_ell mod 5, ell mod 5):", cert.witnesses)

# 11a1 has a rational 5-isogeny, visible as a quadratic factor of the
# 5-division polynomial; the certifier reports a proper image.
E11 = CurveModel(0, -1, 1, -10, -20)
cert11 = certify_image(E11, 5, sample_bound=1000)
print("\n11a1, p = 5:", cert11.status, "- first unruled class:", cert11.first_unruled)
psi5 = division_polynomial(E11, 5)
print("  psi_5 factors into degrees", sorted(f.degree() for f, _ in psi5.factor_list()[1]))

# CM curves always have proper image for odd p.
print("\n27a1 (j = 0), p = 5:", certify_image(CurveModel(0, 0, 1, 0, -7), 5).status)

# At p = 3 trace statistics cannot separate the nonsplit Cartan normalizer
# from the full group; certification goes through the 3-division quartic
# (Galois group S4 plus full determinant).
print("\n389a1, p = 3:", certify_image(CurveModel(0, 1, 1, -2, 0), 3).status)

# The ordinary local shape at p and the wild-ramification ledger entry.
profile = classify_good_prime(E, 5)
shape = ordinary_shape(profile)
print("\nordinary shape of 1058d1 at 5:")
print("  Frobenius eigenvalue on the unramified quotient:", shape.psi_frobenius_eigenvalue)
print("  kernel character:", shape.kernel_character_note)
print("  off-diagonal class nonzero:", shape.star_nonzero)
wild = wild_ramification_status(E, profile)
print("  wild ramification hypothesis:", wild.status, "(a_5 = 2 != 1 mod 5)")
