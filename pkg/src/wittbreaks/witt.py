"""Truncated Witt vectors over any commutative ring.

A length-n vector holds components in a coefficient ring R; the ring is any
object exposing zero(), one(), from_int(k) and a characteristic attribute,
with elements supporting +, -, * (the tower levels, Laurent rings, finite
fields, plain integers and integer polynomial rings all qualify).  Sum,
product and negation evaluate the universal polynomial families, so they are
valid over every such ring at once.

head(a, i) zeroes components i..n-1 (keeps the first i); tail(a, i) zeroes
components 0..i-1.  Their calculus:

    a == head(a, i) + tail(a, i)
    head(a + b, i) == head(head(a, i) + head(b, i), i)

and the free-variable identity used to restrict characters,

    a + m - head(head(a, i) + m, i) == tail(a + m, i)   whenever m == head(m, i),

are consequences of the polynomial recursion; check_structural_identities
exercises them on random samples.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CutOutOfRange, IdentityViolation, ShapeMismatch
from .wittpoly import witt_poly_set


@dataclass(frozen=True)
class WittVec:
    p: int
    n: int
    ring: object
    comps: tuple

    def __post_init__(self):
        if self.n < 1:
            raise ShapeMismatch("vector length must be >= 1")
        if len(self.comps) != self.n:
            raise ShapeMismatch("expected %d components, got %d" % (self.n, len(self.comps)))

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zeros(cls, p: int, n: int, ring) -> "WittVec":
        return cls(p, n, ring, tuple(ring.zero() for _ in range(n)))

    @classmethod
    def one(cls, p: int, n: int, ring) -> "WittVec":
        return cls(p, n, ring, tuple(ring.one() if i == 0 else ring.zero() for i in range(n)))

    @classmethod
    def single(cls, p: int, n: int, ring, slot: int, value) -> "WittVec":
        comps = [ring.zero()] * n
        comps[slot] = value
        return cls(p, n, ring, tuple(comps))

    # -- ring operations --------------------------------------------------------

    def _check(self, other: "WittVec"):
        if not isinstance(other, WittVec):
            raise ShapeMismatch("not a Witt vector")
        if (self.p, self.n) != (other.p, other.n) or self.ring != other.ring:
            raise ShapeMismatch("mixed Witt vector shapes or rings")

    def __add__(self, other: "WittVec") -> "WittVec":
        self._check(other)
        polys = witt_poly_set(self.p, self.n).sum_polys
        comps = []
        for i in range(self.n):
            values = list(self.comps[: i + 1]) + list(other.comps[: i + 1])
            comps.append(polys[i].evaluate(values, self.ring))
        return WittVec(self.p, self.n, self.ring, tuple(comps))

    def __mul__(self, other: "WittVec") -> "WittVec":
        self._check(other)
        polys = witt_poly_set(self.p, self.n).prod_polys
        comps = []
        for i in range(self.n):
            values = list(self.comps[: i + 1]) + list(other.comps[: i + 1])
            comps.append(polys[i].evaluate(values, self.ring))
        return WittVec(self.p, self.n, self.ring, tuple(comps))

    def __neg__(self) -> "WittVec":
        polys = witt_poly_set(self.p, self.n).neg_polys
        comps = [polys[i].evaluate(list(self.comps[: i + 1]), self.ring) for i in range(self.n)]
        return WittVec(self.p, self.n, self.ring, tuple(comps))

    def __sub__(self, other: "WittVec") -> "WittVec":
        return self + (-other)

    def scalar(self, k: int) -> "WittVec":
        """k-fold sum of self (k >= 0), by binary doubling."""
        if k < 0:
            return (-self).scalar(-k)
        acc = WittVec.zeros(self.p, self.n, self.ring)
        base = self
        while k:
            if k & 1:
                acc = acc + base
            base = base + base
            k >>= 1
        return acc

    # -- characteristic-p operations ------------------------------------------------

    def frobenius(self) -> "WittVec":
        """Componentwise p-th power; a ring endomorphism when char(R) = p."""
        assert getattr(self.ring, "characteristic", 0) == self.p, (
            "frobenius needs a characteristic-p coefficient ring"
        )
        return WittVec(self.p, self.n, self.ring, tuple(self._pth(c) for c in self.comps))

    def times_p(self) -> "WittVec":
        """Multiplication by p in W_n(R) for char-p R: shift and raise,
        (a_0, ..., a_(n-1)) -> (0, a_0^p, ..., a_(n-2)^p)."""
        assert getattr(self.ring, "characteristic", 0) == self.p, (
            "times_p needs a characteristic-p coefficient ring"
        )
        comps = (self.ring.zero(),) + tuple(self._pth(c) for c in self.comps[:-1])
        return WittVec(self.p, self.n, self.ring, comps)

    def _pth(self, c):
        f = getattr(self.ring, "pth_power", None)
        return f(c) if f is not None else c**self.p

    # -- utilities -----------------------------------------------------------------

    def map_components(self, fn, new_ring) -> "WittVec":
        return WittVec(self.p, self.n, new_ring, tuple(fn(c) for c in self.comps))

    def __eq__(self, other):
        return (
            isinstance(other, WittVec)
            and (self.p, self.n) == (other.p, other.n)
            and self.ring == other.ring
            and self.comps == other.comps
        )


def head(a: WittVec, i: int) -> WittVec:
    """Keep components 0..i-1, zero the rest.  1 <= i <= n-1."""
    _check_cut(a, i)
    comps = tuple(a.comps[j] if j < i else a.ring.zero() for j in range(a.n))
    return WittVec(a.p, a.n, a.ring, comps)


def tail(a: WittVec, i: int) -> WittVec:
    """Zero components 0..i-1, keep the rest.  1 <= i <= n-1."""
    _check_cut(a, i)
    comps = tuple(a.ring.zero() if j < i else a.comps[j] for j in range(a.n))
    return WittVec(a.p, a.n, a.ring, comps)


def _check_cut(a: WittVec, i: int):
    if not 1 <= i <= a.n - 1:
        raise CutOutOfRange("cut index %d outside 1..%d" % (i, a.n - 1))


def check_structural_identities(p: int, n: int, samples: int, ring, seed: int = 0) -> dict:
    """Random-sample the head/tail calculus and the shift identity.

    The index-j sum polynomial equals the index-(j+1) sum polynomial with a
    zero slipped in front of each block; that is checked symbolically in the
    polynomial module's tests, here we check its vector-level consequence
    plus the truncation identities over the given ring.  Raises
    IdentityViolation on failure, returns a count summary otherwise.
    """
    from .sampling import random_ring_element

    import random

    rng = random.Random(seed)
    checked = 0
    for _ in range(samples):
        a = WittVec(p, n, ring, tuple(random_ring_element(ring, rng) for _ in range(n)))
        b = WittVec(p, n, ring, tuple(random_ring_element(ring, rng) for _ in range(n)))
        for i in range(1, n):
            if head(a, i) + tail(a, i) != a:
                raise IdentityViolation("head/tail do not recompose at i=%d" % i)
            lhs = head(a + b, i)
            rhs = head(head(a, i) + head(b, i), i)
            if lhs != rhs:
                raise IdentityViolation("head fails to respect addition at i=%d" % i)
            m = head(b, i)
            free = a + m - head(head(a, i) + m, i)
            if free != tail(a + m, i):
                raise IdentityViolation("restriction identity fails at i=%d" % i)
            checked += 1
    return {"p": p, "n": n, "samples": samples, "identities": checked, "ok": True}
