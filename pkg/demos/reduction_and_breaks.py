"""
From a raw vector to its ramification break profile
===================================================

Reduces a length-2 vector over F_2((t)) to pole orders prime to p, verifies
the reduction certificate by hand, then reads off upper/lower breaks and the
piecewise-linear transition function between the two numberings.
"""

from fractions import Fraction

from wittbreaks import (
    FqField,
    LaurentRing,
    WittVec,
    full_profile,
    hasse_herbrand,
    is_reduced,
    print_laurent,
    reduce_vector,
)

ring = LaurentRing(FqField(2))
t_inv = ring.monomial(-1)

# a = (t^-4 + t^-3, t^-10 + t^-5): both leading pole orders are divisible
# by p = 2, so the vector needs reducing before any break can be read off
a = WittVec(
    2, 2, ring,
    (ring.monomial(-4) + ring.monomial(-3), ring.monomial(-10) + ring.monomial(-5)),
)
print("a  =", [print_laurent(c) for c in a.comps])
print("reduced already?", is_reduced(a))

cert = reduce_vector(a)
print("a' =", [print_laurent(c) for c in cert.reduced.comps])
print("witness c =", [print_laurent(c) for c in cert.witness.comps])

# the certificate says a' = a + F(c) - c; recheck it from scratch
c = cert.witness
assert a + (c.frobenius() - c) == cert.reduced
print("certificate re-verified: a + F(c) - c == a'")

# ---------------------------------------------------------------------------
# Break profile of the reduced vector
# ---------------------------------------------------------------------------
prof = full_profile(cert.reduced)
print("\npole orders m_i:", prof.ms)
print("upper breaks:   ", prof.upper)
print("lower breaks:   ", prof.lower)
print("residue degree %d, ramification index %d" % (prof.residue_degree, prof.ram_index))

# ---------------------------------------------------------------------------
# The transition function and its inverse
# ---------------------------------------------------------------------------
phi, psi = hasse_herbrand(prof)
print("\nx -> phi(x) on a few sample points:")
for x in (0, 1, Fraction(3, 2), prof.lower[0], prof.lower[-1], prof.lower[-1] + 4):
    print("  phi(%s) = %s" % (x, phi(x)))
for b, u in zip(prof.lower, prof.upper):
    assert phi(b) == u and psi(u) == b
print("phi maps every lower break to its upper break; psi inverts it.")
