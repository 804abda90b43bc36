"""Reduction of Witt vectors over K = F_q((t)) up to Artin-Schreier range.

Adding F(c) - c to a vector (F the Frobenius) does not change the cyclic
extension it cuts out, so vectors can be normalized before break formulas
apply.  A vector is *reduced* when every component has valuation >= 0 or
valuation prime to p, and *strongly reduced* when every component is zero or
has valuation prime to p.

reduce_vector eliminates negative p-divisible valuations exactly and returns
a certificate that is re-verified on construction.  strongly_reduce goes on
to kill nonnegative-valuation components too; that requires solving
c^p - c = unit, which may need the degree-p unramified extension of the
residue field and is only possible modulo a chosen t-adic precision.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import (
    IdentityViolation,
    InternalError,
    NegativeValuation,
    NotReduced,
    PrecisionPresent,
    PrecisionRequired,
)
from .field import (
    FqField,
    LaurentPoly,
    LaurentRing,
    default_modulus,
    wp_inverse_positive,
)
from .witt import WittVec

# A Witt vector over the Laurent ring, regarded as the data of a character
# of the absolute Galois group (componentwise, via the ASW pairing).
CharacterVec = WittVec


def _component_views(a: WittVec, allow_precision: bool):
    for c in a.comps:
        if not allow_precision and c.precision is not None:
            raise PrecisionPresent("reducedness of a precision-bounded vector is undefined")
        yield c


def is_reduced(a: WittVec, allow_precision: bool = False) -> bool:
    """Every component has v >= 0 (zero counts) or v prime to p."""
    p = a.p
    for c in _component_views(a, allow_precision):
        if c.is_zero_mod_precision() if allow_precision else c.is_zero():
            continue
        if not c.coeffs:
            continue
        v = min(c.coeffs)
        if v < 0 and v % p == 0:
            return False
    return True


def is_strongly_reduced(a: WittVec, allow_precision: bool = False) -> bool:
    """Every component is zero or has v prime to p."""
    p = a.p
    for c in _component_views(a, allow_precision):
        if c.is_zero_mod_precision() if allow_precision else c.is_zero():
            continue
        if not c.coeffs:
            continue
        if min(c.coeffs) % p == 0:
            return False
    return True


def _wp_shift(step: WittVec) -> WittVec:
    """F(step) - step, the vector added to a by the substitution a -> a'."""
    return step.frobenius() - step


@dataclass(frozen=True)
class ReductionCertificate:
    """original + F(witness) - witness == reduced, re-verified exactly."""

    original: WittVec
    reduced: WittVec
    witness: WittVec

    def __post_init__(self):
        if not is_reduced(self.reduced):
            raise InternalError("certificate target is not reduced")
        check = self.original + self.witness.frobenius() - self.witness
        if check != self.reduced:
            raise IdentityViolation("reduction certificate identity failed")


def reduce_vector(a: WittVec) -> ReductionCertificate:
    """Clear every negative p-divisible component valuation, left to right.

    Each step subtracts F(c) - c for a single-slot c whose p-th power matches
    the offending leading term; the slot valuation strictly increases, so the
    loop terminates.  Components left of the working slot are never touched
    again.  Exact (no precision involved).
    """
    ring: LaurentRing = a.ring
    p, n = a.p, a.n
    for c in a.comps:
        if c.precision is not None:
            raise PrecisionPresent("reduce_vector needs exact components")
    cur = a
    witness = WittVec.zeros(p, n, ring)
    for i in range(n):
        while True:
            comp = cur.comps[i]
            if comp.is_zero():
                break
            v = comp.exact_valuation()
            if v >= 0 or v % p != 0:
                break
            m = -v // p
            w = ring.monomial(-m, comp.leading_coeff().pth_root())
            step = WittVec.single(p, n, ring, i, w)
            nxt = cur - _wp_shift(step)
            nv = nxt.comps[i].valuation()
            if isinstance(nv, int) and nv <= v:
                raise InternalError("reduction step failed to raise valuation")
            assert nxt.comps[:i] == cur.comps[:i], "lower slots moved during reduction"
            cur = nxt
            witness = witness + (-step)
    return ReductionCertificate(original=a, reduced=cur, witness=witness)


@dataclass(frozen=True)
class StrongReductionResult:
    """Strong reduction is only defined modulo t^precision and may move to
    the degree-p unramified extension (bigger residue field)."""

    original: WittVec  # embedded into the final field
    reduced: WittVec
    witness: WittVec
    ring: LaurentRing
    precision: int
    extended: bool

    def __post_init__(self):
        if not is_strongly_reduced(self.reduced, allow_precision=True):
            raise InternalError("strong reduction target is not strongly reduced")
        check = self.original + self.witness.frobenius() - self.witness
        for got, want in zip(check.comps, self.reduced.comps):
            if not got.congruent(want):
                raise IdentityViolation("strong reduction certificate failed mod t^N")


def _solve_wp_in_field(fq: FqField, alpha):
    """Exhaustive c with c^p - c = alpha, or None.  Desk-scale fields only."""
    for c in fq.elements():
        if (c**fq.p - c) == alpha:
            return c
    return None


def _extend_setting(ring: LaurentRing):
    """The degree-p unramified extension: same t, residue field F_(q^p)."""
    fq = ring.field
    big = FqField(fq.p, fq.e * fq.p, default_modulus(fq.p, fq.e * fq.p))
    emb = fq.embedding_into(big)
    big_ring = LaurentRing(big)
    return big_ring, emb


def strongly_reduce(a: WittVec, precision: int | None) -> StrongReductionResult:
    """Strong reduction modulo t^precision, extending the residue field when
    a unit component is not an Artin-Schreier image.

    Input must already be reduced (exact).  Nonnegative-valuation components
    are killed by one wp-preimage step each: the residue-field part by search
    (extending to F_(q^p) when the trace obstruction is nonzero, where the
    trace to F_p of anything from F_q vanishes), the positive part by the
    convergent series.  Later slots pick up precision-bounded debris, which
    subsequent passes handle; earlier slots are never revisited.
    """
    if precision is None or precision < 1:
        raise PrecisionRequired("strong reduction needs a precision >= 1")
    if not is_reduced(a):
        raise NotReduced("strongly_reduce expects a reduced input")
    ring: LaurentRing = a.ring
    p, n = a.p, a.n
    cur = a
    original = a
    witness = WittVec.zeros(p, n, ring)
    extended = False
    i = 0
    while i < n:
        comp = cur.comps[i]
        if comp.is_zero_mod_precision():
            i += 1
            continue
        v = min(comp.coeffs)
        if v < 0 and v % p != 0:
            i += 1
            continue
        if v < 0:
            # p-divisible negative valuation from earlier debris: plain step
            m = -v // p
            w = ring.monomial(-m, comp.leading_coeff().pth_root())
        else:
            alpha = comp.coefficient(0)
            w = ring.zero()
            if not alpha.is_zero():
                c_sol = _solve_wp_in_field(ring.field, alpha)
                if c_sol is None:
                    # move everything to the unramified extension and retry
                    big_ring, emb = _extend_setting(ring)
                    lift = lambda x: x.map_coeffs(emb, big_ring)
                    cur = cur.map_components(lift, big_ring)
                    original = original.map_components(lift, big_ring)
                    witness = witness.map_components(lift, big_ring)
                    ring = big_ring
                    extended = True
                    continue
                w = ring.constant(c_sol)
            tail_part = ring.poly(
                {e: c for e, c in comp.coeffs.items() if e > 0}, comp.precision
            )
            if not tail_part.is_zero():
                w = w + wp_inverse_positive(tail_part, precision)
        step = WittVec.single(p, n, ring, i, w)
        cur = cur - _wp_shift(step)
        witness = witness + (-step)
    return StrongReductionResult(
        original=original,
        reduced=cur,
        witness=witness,
        ring=ring,
        precision=precision,
        extended=extended,
    )


def in_wp_image(a0: LaurentPoly) -> bool:
    """Whether a0 = c^p - c for some c in K, for v(a0) >= 0.

    Everything of positive valuation is an image (convergent series), so only
    the residue matters: a unit is an image iff its residue has trace zero.
    """
    v = a0.valuation()
    if isinstance(v, int) and v < 0:
        raise NegativeValuation("membership test defined for v >= 0 only")
    if a0.is_zero_mod_precision() or (isinstance(v, int) and v > 0):
        return True
    return a0.coefficient(0).trace_to_prime() == 0


def shift_to_length(c: WittVec, n: int) -> WittVec:
    """Prepend zero components to reach length n; the attached character
    factors through the longer vector unchanged."""
    if n < c.n:
        raise ValueError("target length shorter than the vector")
    pad = tuple(c.ring.zero() for _ in range(n - c.n))
    return WittVec(c.p, n, c.ring, pad + c.comps)


def subextension_vector(a: WittVec, x_prefix, i: int) -> WittVec:
    """The vector (over the extension ring) cutting out the same character
    restricted to the degree-p^(n-i) subgroup: tail(head(x, i) + a, i) with x
    the solution vector, of which only the first i components enter.

    a must already be mapped into the ring where x_prefix lives.  i == n is
    the trivial restriction and returns the zero vector.
    """
    if not 0 <= i <= a.n:
        raise ValueError("restriction index out of range")
    if i == a.n:
        return WittVec.zeros(a.p, a.n, a.ring)
    if i == 0:
        return a
    if len(x_prefix) < i:
        raise ValueError("need %d prefix components, got %d" % (i, len(x_prefix)))
    comps = list(x_prefix[:i]) + [a.ring.zero()] * (a.n - i)
    x_head = WittVec(a.p, a.n, a.ring, tuple(comps))
    summed = x_head + a
    from .witt import tail

    return tail(summed, i)
