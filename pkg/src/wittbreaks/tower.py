"""Ground-truth ramification data from explicit degree-p tower extensions.

This module never consults the break formulas.  It builds the cyclic
extension cut out by a vector as a chain of degree-p steps
L_(i+1) = L_i(x), x^p - x = g with v(g) < 0 prime to p, computes valuations
from the defining relations, realizes the Galois action on generators, and
reads the lower ramification breaks straight from their definition:
b = v(sigma(pi) - pi) - 1 for sigma of the right exact order and pi a
uniformizer of the top field.

Representation: a level-l element is a polynomial of degree < p in the
level-l generator with level-(l-1) coefficients (level-0 elements are exact
Laurent polynomials).  Valuations extend by

    v(sum_j c_j x^j) = min_j ( p * v(c_j) + j * v(x) )

and the minimum is attained exactly once: v(x) is prime to p, so the p
candidate residues j * v(x) mod p are pairwise distinct.  The construction
keeps every right-hand side in that regime by subtracting c^p - c for
monomial combinations c of the generators already present.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    InternalError,
    NoCancellingCoefficient,
    NonIncreasingBreaks,
    NotReduced,
    NotTotallyRamified,
    PrecisionPresent,
    ShapeMismatch,
    UnsupportedDepth,
    ZeroElement,
)
from .field import FqField, LaurentPoly, LaurentRing
from .reduction import is_reduced, subextension_vector
from .witt import WittVec

MAX_DEPTH = 3


class TowerLevel:
    """Ring descriptor for one level of the tower (level 0 is the base field)."""

    def __init__(self, tower: "Tower", index: int, rhs, gen_valuation: int | None):
        self.tower = tower
        self.index = index  # 0 for the base field
        self.rhs = rhs  # reduced right-hand side g, an element one level down
        self.gen_valuation = gen_valuation  # v of this level's generator
        self.p = tower.p
        self.characteristic = tower.p

    @property
    def prev(self) -> "TowerLevel | None":
        return self.tower.levels[self.index - 1] if self.index else None

    # -- ring interface --------------------------------------------------------

    def zero(self):
        if self.index == 0:
            return self.tower.base.zero()
        return TowerElement(self, (self.prev.zero(),) * self.p)

    def one(self):
        if self.index == 0:
            return self.tower.base.one()
        return TowerElement(self, (self.prev.one(),) + (self.prev.zero(),) * (self.p - 1))

    def from_int(self, c: int):
        if self.index == 0:
            return self.tower.base.from_int(c)
        return TowerElement(
            self, (self.prev.from_int(c),) + (self.prev.zero(),) * (self.p - 1)
        )

    def gen(self) -> "TowerElement":
        assert self.index > 0, "the base level has no generator"
        coeffs = [self.prev.zero()] * self.p
        coeffs[1] = self.prev.one()
        return TowerElement(self, tuple(coeffs))

    def embed(self, x) -> "TowerElement":
        """A level-(index-1) element viewed at this level."""
        if self.index == 0:
            raise ShapeMismatch("cannot embed below the base level")
        return TowerElement(self, (x,) + (self.prev.zero(),) * (self.p - 1))

    def embed_from_base(self, x: LaurentPoly):
        cur = x
        for lvl in self.tower.levels[1 : self.index + 1]:
            cur = lvl.embed(cur)
        return cur

    def random_element(self, rng):
        from .sampling import random_laurent

        if self.index == 0:
            return random_laurent(self.tower.base, rng)
        return TowerElement(
            self, tuple(self.prev.random_element(rng) for _ in range(self.p))
        )

    def __eq__(self, other):
        return self is other

    def __hash__(self):
        return id(self)

    def __repr__(self):
        return "TowerLevel(%d of depth %d)" % (self.index, self.tower.depth)


class TowerElement:
    """Polynomial of degree < p in the level generator."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: TowerLevel, coeffs: tuple):
        assert len(coeffs) == ring.p
        self.ring = ring
        self.coeffs = tuple(coeffs)

    def _check(self, other):
        if not isinstance(other, TowerElement) or other.ring is not self.ring:
            raise ShapeMismatch("mixed tower levels")

    def __add__(self, other):
        self._check(other)
        return TowerElement(
            self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        return TowerElement(self.ring, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        p = self.ring.p
        zero = self.ring.prev.zero()
        raw = [zero] * (2 * p - 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                raw[i + j] = raw[i + j] + a * b
        # fold x^k for k >= p using x^p = x + g
        g = self.ring.rhs
        for k in range(2 * p - 2, p - 1, -1):
            c = raw[k]
            if _is_zero(c):
                continue
            raw[k - p + 1] = raw[k - p + 1] + c
            raw[k - p] = raw[k - p] + c * g
        return TowerElement(self.ring, tuple(raw[:p]))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers not supported in towers")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return all(_is_zero(c) for c in self.coeffs)

    def valuation(self) -> int:
        return tower_valuation(self)

    def __eq__(self, other):
        return (
            isinstance(other, TowerElement)
            and other.ring is self.ring
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((id(self.ring), self.coeffs))

    def __repr__(self):
        return "TowerElement(level=%d, %r)" % (self.ring.index, list(self.coeffs))


def _is_zero(x) -> bool:
    return x.is_zero()


def _val_or_none(x):
    """Valuation at the element's own level; None for zero."""
    if isinstance(x, LaurentPoly):
        if x.precision is not None:
            raise PrecisionPresent("towers are exact; got a precision-bounded value")
        if x.is_zero():
            return None
        return x.exact_valuation()
    if x.is_zero():
        return None
    return tower_valuation(x)


def tower_valuation(z) -> int:
    """Normalized valuation of a nonzero element at its own level.

    Level l is normalized so v(t) = p^l; level-0 inputs (plain Laurent
    polynomials) get their ordinary t-adic valuation.
    """
    if isinstance(z, LaurentPoly):
        if z.is_zero():
            raise ZeroElement("valuation of zero")
        return z.exact_valuation()
    p = z.ring.p
    vx = z.ring.gen_valuation
    best = None
    for j, c in enumerate(z.coeffs):
        vc = _val_or_none(c)
        if vc is None:
            continue
        cand = p * vc + j * vx
        if best is None or cand < best:
            best = cand
    if best is None:
        raise ZeroElement("valuation of zero")
    return best


def _monomial_of_valuation(level: TowerLevel, target: int):
    """A monomial in the generators and t with the exact requested valuation.

    Solved greedily from the top: the generator's valuation is prime to p, so
    its exponent is forced mod p; divide out and recurse.  Always solvable,
    generator exponents stay in 0..p-1.
    """
    if level.index == 0:
        return level.tower.base.monomial(target)
    p = level.p
    vx = level.gen_valuation
    s = (target * pow(vx % p, -1, p)) % p
    rest = target - s * vx
    assert rest % p == 0, "greedy valuation arithmetic broke"
    lower = _monomial_of_valuation(level.prev, rest // p)
    return level.embed(lower) * (level.gen() ** s)


def _scale(level: TowerLevel, x, u):
    """Multiply by a residue-field constant."""
    if level.index == 0:
        return x * level.tower.base.constant(u)
    return x * level.embed_from_base(level.tower.base.constant(u))


def reduce_rhs(level: TowerLevel, g):
    """Bring a prospective right-hand side into the prime-to-p regime.

    While v(g) is negative and divisible by p, subtract (u*theta)^p - u*theta
    where theta is a monomial of valuation v(g)/p and the unit u is found by
    searching the residue field; each step strictly raises the valuation.
    Returns (g_reduced, witness) with witness the sum of the u*theta used, so
    g_reduced = g - (witness^p - witness).

    Raises NotTotallyRamified if the valuation climbs to >= 0 and
    NoCancellingCoefficient if no unit works; both mean the input was outside
    the totally ramified regime (or a bug upstream).
    """
    fq: FqField = level.tower.base.field
    p = level.p
    witness = level.zero()
    while True:
        if _is_zero(g):
            raise NotTotallyRamified("right-hand side vanished during reduction")
        v = tower_valuation(g)
        if v >= 0:
            raise NotTotallyRamified("right-hand side reached valuation %d >= 0" % v)
        if v % p != 0:
            return g, witness
        theta = _monomial_of_valuation(level, v // p)
        hit = None
        for u in fq.elements():
            if u.is_zero():
                continue
            cand = _scale(level, theta, u)
            trial = g - (cand**p - cand)
            if _is_zero(trial) or tower_valuation(trial) > v:
                hit = (cand, trial)
                break
        if hit is None:
            raise NoCancellingCoefficient(
                "no unit cancels the leading term at v = %d" % v
            )
        cand, g = hit
        witness = witness + cand


@dataclass(frozen=True)
class GaloisElt:
    """Automorphism labeled by k mod p^d; k = 1 shifts the solution vector of
    the defining equations by the multiplicative unit vector."""

    k: int
    modulus: int  # p^d

    def __post_init__(self):
        object.__setattr__(self, "k", self.k % self.modulus)

    def order(self) -> int:
        return self.modulus // math.gcd(self.k, self.modulus)


class Tower:
    """The explicit chain K = L_0 < L_1 < ... < L_d cut out by a vector."""

    def __init__(self, base: LaurentRing, p: int, depth: int, vector: WittVec):
        self.base = base
        self.p = p
        self.depth = depth
        self.vector = vector
        self.levels = [TowerLevel(self, 0, None, None)]
        # filled in level by level during construction:
        self.witt_gens: list = []  # solution-vector components, in tower coordinates
        self.witnesses: list = []  # reduction witnesses, one per level
        self._galois_cache: dict = {}

    def level(self, i: int) -> TowerLevel:
        return self.levels[i]

    @property
    def top(self) -> TowerLevel:
        return self.levels[-1]

    def galois(self, k: int) -> GaloisElt:
        return GaloisElt(k, self.p**self.depth)

    def uniformizer(self):
        """pi = x_top^alpha * t^beta with alpha * v(x_top) + beta * p^d = 1."""
        lvl = self.top
        vx = lvl.gen_valuation
        pd = self.p**self.depth
        alpha = pow(vx % pd, -1, pd)
        beta = (1 - alpha * vx) // pd
        pi = (lvl.gen() ** alpha) * lvl.embed_from_base(self.base.monomial(beta))
        assert tower_valuation(pi) == 1, "uniformizer valuation is off"
        return pi

    def _unit_vector_multiple(self, k: int) -> list:
        """Components of k * (1, 0, ..., 0) over the prime field, as ints."""
        fp = FqField(self.p)
        vec = WittVec.one(self.p, self.depth, fp).scalar(k)
        return [c.coeffs[0] for c in vec.comps]

    def _sigma_gen_images(self, k: int) -> list:
        """Images of each level's generator under sigma_k; images[i] lives at
        level i+1.  Cached per k."""
        k = k % (self.p**self.depth)
        cached = self._galois_cache.get(k)
        if cached is not None:
            return cached
        from .wittpoly import witt_poly_set

        ks = self._unit_vector_multiple(k)
        sum_polys = witt_poly_set(self.p, self.depth).sum_polys
        images: list = []
        for i in range(self.depth):
            lvl = self.levels[i + 1]
            xs = []
            for j in range(i + 1):
                xj = self.witt_gens[j]  # lives at level j+1
                for up in range(j + 2, i + 2):
                    xj = self.levels[up].embed(xj)
                xs.append(xj)
            ys = [lvl.from_int(ks[j]) for j in range(i + 1)]
            sigma_witt = sum_polys[i].evaluate(xs + ys, lvl)
            # this level's generator differs from the solution-vector
            # component by the reduction witness, which lives one level down
            # and only involves generators whose images are already known
            w = self.witnesses[i]
            sigma_w = lvl.embed(_substitute(w, images))
            images.append(sigma_witt - sigma_w)
        self._galois_cache[k] = images
        return images


def _substitute(z, images):
    """Replace each level's generator by images[level-1], recursively."""
    if isinstance(z, LaurentPoly):
        return z
    lvl = z.ring
    image = images[lvl.index - 1]
    acc = lvl.zero()
    pw = lvl.one()
    for j, c in enumerate(z.coeffs):
        cc = lvl.embed(_substitute(c, images))
        acc = acc + cc * pw
        if j < len(z.coeffs) - 1:
            pw = pw * image
    return acc


def apply_galois(tower: Tower, z, sigma: GaloisElt):
    """sigma applied to an element of any level of the tower."""
    return _substitute(z, tower._sigma_gen_images(sigma.k))


def build_tower(a: WittVec, depth: int) -> Tower:
    """Construct the tower for a reduced vector with v(a_0) < 0.

    Level i+1 adjoins a root of x^p - x = g_i, where g_i is the in-tower
    reduction of the lead component of the vector restricted to the subgroup
    fixing level i; the solution-vector coordinate at that level is the new
    generator plus the reduction witness.
    """
    if not isinstance(depth, int) or depth < 1 or depth > MAX_DEPTH:
        raise UnsupportedDepth("depth must be 1..%d, got %r" % (MAX_DEPTH, depth))
    if depth > a.n:
        raise UnsupportedDepth("depth %d exceeds vector length %d" % (depth, a.n))
    if not is_reduced(a):
        raise NotReduced("tower construction needs a reduced vector")
    v0 = a.comps[0].valuation()
    if not isinstance(v0, int) or v0 >= 0:
        raise NotReduced("totally ramified tower needs v(a_0) < 0")

    tower = Tower(a.ring, a.p, depth, a)
    for i in range(depth):
        lvl_i = tower.levels[i]
        if i == 0:
            raw = a.comps[0]
        else:
            a_up = a.map_components(lvl_i.embed_from_base, lvl_i)
            prefix = []
            for j in range(i):
                xj = tower.witt_gens[j]
                for up in range(j + 2, i + 1):
                    xj = tower.levels[up].embed(xj)
                prefix.append(xj)
            raw = subextension_vector(a_up, prefix, i).comps[i]
        g, witness = reduce_rhs(lvl_i, raw)
        v = tower_valuation(g)
        if v >= 0 or v % a.p == 0:
            raise InternalError("reduced right-hand side has impossible valuation %d" % v)
        new_lvl = TowerLevel(tower, i + 1, g, v)
        tower.levels.append(new_lvl)
        tower.witnesses.append(witness)
        tower.witt_gens.append(new_lvl.gen() + new_lvl.embed(witness))
    return tower


def filtration_breaks(tower: Tower) -> list:
    """Lower breaks of the tower read from the ramification filtration.

    For each i, every Galois element of exact order p^(d-i+1) sits in the
    same filtration step, giving v(sigma(pi) - pi) - 1 as the i-th lower
    break.  Up to two witnesses per order are sampled and must agree; the
    full sequence must strictly increase.
    """
    d = tower.depth
    p = tower.p
    pi = tower.uniformizer()
    bs = []
    for i in range(1, d + 1):
        want_order = p ** (d - i + 1)
        ks = [k for k in range(1, p**d) if GaloisElt(k, p**d).order() == want_order]
        vals = []
        for k in ks[:2]:
            sigma = tower.galois(k)
            delta = apply_galois(tower, pi, sigma) - pi
            if delta.is_zero():
                raise InternalError("sigma fixed the uniformizer; order bookkeeping broke")
            vals.append(tower_valuation(delta) - 1)
        if len(set(vals)) != 1:
            raise InternalError("same-order elements gave different breaks: %r" % (vals,))
        bs.append(vals[0])
    for x, y in zip(bs, bs[1:]):
        if y <= x:
            raise NonIncreasingBreaks("filtration breaks not increasing: %r" % (bs,))
    return bs


@dataclass(frozen=True)
class CompareVerdict:
    """Side-by-side of formula lower breaks and tower filtration breaks."""

    formula_lower: tuple
    tower_lower: tuple
    equal: bool
    depth: int


def compare(a: WittVec, depth: int | None = None) -> CompareVerdict:
    """Formula lower breaks vs filtration breaks, prefix of length depth."""
    from .breaks import full_profile

    profile = full_profile(a)
    d = depth if depth is not None else min(a.n, MAX_DEPTH)
    tower = build_tower(a, d)
    got = filtration_breaks(tower)
    want = list(profile.lower[:d])
    return CompareVerdict(
        formula_lower=tuple(want),
        tower_lower=tuple(got),
        equal=got == want,
        depth=d,
    )
