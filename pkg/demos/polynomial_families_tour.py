"""
A tour of the integer polynomial families behind truncated Witt arithmetic
==========================================================================

Generates the sum/product/negation families for small primes, shows the
ghost-map identities that pin them down, and looks at the two-variable
collapse polynomials that drive the valuation bookkeeping downstream.
"""

from wittbreaks import (
    check_phantom_identities,
    gen_witt_polys,
    phantom_poly,
    sum_poly_first_components,
)
from wittbreaks.wittpoly import ZZ, IntPolyRing


def names(k):
    return ["X_%d" % j for j in range(k)] + ["Y_%d" % j for j in range(k)]


# ---------------------------------------------------------------------------
# The families for p = 2, vectors of length 3
# ---------------------------------------------------------------------------
p, n = 2, 3
polys = gen_witt_polys(p, n)
print("p = %d, length %d" % (p, n))
for i in range(n):
    print("  S_%d = %s" % (i, polys.sum_polys[i].to_text(names(i + 1))))
print("  I_2 = %s" % polys.neg_polys[2].to_text(names(3)[:3]))

# Every intermediate division by p^i was exact or generation would have
# raised; the ghost identities certify the result.
summary = check_phantom_identities(p, n, trials=25, seed=0)
print("ghost identities:", summary)

# ---------------------------------------------------------------------------
# The ghost polynomials themselves
# ---------------------------------------------------------------------------
phi2 = phantom_poly(2, 2)
print("\nphi_2 at p=2:", phi2.to_text(["X_0", "X_1", "X_2"]))
print("phi_1(2, 3) =", phantom_poly(2, 1).evaluate([2, 3], ZZ))

# ---------------------------------------------------------------------------
# Collapse to the first components: f_j(X_0, Y_0)
# ---------------------------------------------------------------------------
# Setting every higher variable to zero in S_j leaves a 2-variable polynomial
# whose cross term -X_0*Y_0^(p^j - 1) controls pole growth up the tower.
for p in (2, 3):
    for j in (1, 2):
        f = sum_poly_first_components(p, j)
        q = p**j
        print(
            "p=%d j=%d: f_j = %s  (degree %d, X_0 Y_0^%d coeff %d)"
            % (p, j, f.to_text(["X_0", "Y_0"]), f.total_degree(), q - 1, f.coefficient((1, q - 1)))
        )

# The shift identity: S_j reappears inside S_{j+1} with zeros slipped in
# front of both blocks.
p, j = 3, 1
polys = gen_witt_polys(p, j + 2)
ring = IntPolyRing(2 * (j + 1))
args = (
    [ring.zero()]
    + [ring.variable(k) for k in range(j + 1)]
    + [ring.zero()]
    + [ring.variable(j + 1 + k) for k in range(j + 1)]
)
assert polys.sum_polys[j + 1].evaluate(args, ring) == polys.sum_polys[j]
print("\nshift identity S_%d = S_%d(0, X, 0, Y): ok" % (j, j + 1))
