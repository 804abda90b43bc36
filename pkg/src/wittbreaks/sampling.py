"""Deterministic random generators for tests and the CLI's random modes.

Everything takes an explicit random.Random so identical seeds give identical
objects; nothing here touches the global RNG state.
"""

from __future__ import annotations

from .field import FqElement, FqField, LaurentPoly, LaurentRing
from .witt import WittVec
from .wittpoly import IntegerRing


def random_fq(field: FqField, rng, nonzero: bool = False) -> FqElement:
    while True:
        x = field.element([rng.randrange(field.p) for _ in range(field.e)])
        if not nonzero or not x.is_zero():
            return x


def random_laurent(
    ring: LaurentRing,
    rng,
    min_exp: int = -6,
    max_exp: int = 4,
    max_terms: int = 3,
    nonzero: bool = False,
) -> LaurentPoly:
    while True:
        n_terms = rng.randint(0, max_terms)
        exps = rng.sample(range(min_exp, max_exp + 1), min(n_terms, max_exp - min_exp + 1))
        cs = {e: random_fq(ring.field, rng, nonzero=True) for e in exps}
        x = ring.poly(cs)
        if not nonzero or not x.is_zero():
            return x


def random_ring_element(ring, rng):
    """Dispatch on the ring kind; small integers for char-0 rings."""
    if isinstance(ring, LaurentRing):
        return random_laurent(ring, rng)
    if isinstance(ring, FqField):
        return random_fq(ring, rng)
    if isinstance(ring, IntegerRing):
        return rng.randint(-9, 9)
    sampler = getattr(ring, "random_element", None)
    if sampler is not None:
        return sampler(rng)
    raise TypeError("no sampler for ring %r" % (ring,))


def random_witt_vector(p: int, n: int, ring: LaurentRing, rng, **kw) -> WittVec:
    return WittVec(p, n, ring, tuple(random_laurent(ring, rng, **kw) for _ in range(n)))


def random_valuation(rng, p: int, max_m: int) -> int:
    """A random m in 1..max_m with p not dividing m."""
    while True:
        m = rng.randint(1, max_m)
        if m % p != 0:
            return m


def random_strongly_reduced_vector(
    p: int, n: int, ring: LaurentRing, rng, max_m: int = 9, max_tail: int = 2
) -> WittVec:
    """Components with valuation -m_i, p never dividing m_i, 1 <= m_i <= max_m,
    plus a short random tail above the leading term."""
    comps = []
    for _ in range(n):
        m = random_valuation(rng, p, max_m)
        cs = {-m: random_fq(ring.field, rng, nonzero=True)}
        for _ in range(rng.randint(0, max_tail)):
            e = rng.randint(-m + 1, 3)
            c = random_fq(ring.field, rng, nonzero=True)
            if e in cs:
                continue
            cs[e] = c
        comps.append(ring.poly(cs))
    return WittVec(p, n, ring, tuple(comps))


def random_unit_nonzero_trace(ring: LaurentRing, rng, max_tail: int = 2) -> LaurentPoly:
    """A unit of the valuation ring whose residue has nonzero trace to F_p."""
    field = ring.field
    choices = [x for x in field.elements() if x.trace_to_prime() != 0]
    cs = {0: rng.choice(choices)}
    for _ in range(rng.randint(0, max_tail)):
        e = rng.randint(1, 4)
        if e in cs:
            continue
        cs[e] = random_fq(field, rng, nonzero=True)
    return ring.poly(cs)
