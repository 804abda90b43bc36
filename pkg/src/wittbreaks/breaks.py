"""Ramification break profiles for cyclic p^n-extensions of F_q((t)).

For a reduced vector a with m_i = -v(a_i) and m_0 > 0, the extension it cuts
out is totally ramified of degree p^n and its upper breaks are

    u_i = max(p^(i-1) * m_0, p^(i-2) * m_1, ..., m_(i-1)),     i = 1..n.

Lower breaks follow from b_1 = u_1 and b_(i+1) - b_i = p^i (u_(i+1) - u_i).
When instead m_0 = 0 and a_0 is not of the form c^p - c, the extension picks
up an unramified part: with r maximal such that m_i <= 0 for all i < r, the
residue degree is p^r, the ramification index p^(n-r), the positive upper
breaks come from the same max formula applied to (m_r, ..., m_(n-1)), and -1
joins the upper breaks.  Components that are exactly zero at the head of the
vector are stripped first (the character factors through the shorter length).

The Hasse-Herbrand function of a profile is piecewise linear with slope 1 up
to b_1 and slope p^(-i) between b_i and b_(i+1); it maps lower breaks to
upper breaks, and all arithmetic here is exact rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegenerateCharacter,
    IdentityViolation,
    NotIncreasing,
    NotReduced,
    NotTotallyRamifiedProfile,
    OutOfRange,
)
from .reduction import in_wp_image, is_reduced
from .witt import WittVec


def upper_breaks(p: int, ms) -> list:
    """Upper breaks from depth values; ms[i] is -v(a_i), None for a_i = 0.

    Entries <= 0 (components of nonnegative valuation) never attain the max
    because m_0 > 0 always supplies a positive candidate; they are skipped.
    Raises NotTotallyRamifiedProfile unless m_0 > 0.
    """
    if not ms or ms[0] is None or ms[0] <= 0:
        raise NotTotallyRamifiedProfile("first depth must be positive, got %r" % (ms and ms[0],))
    us = []
    for i in range(1, len(ms) + 1):
        cands = [
            p ** (i - 1 - j) * ms[j]
            for j in range(i)
            if ms[j] is not None and ms[j] > 0
        ]
        us.append(max(cands))
    for a, b in zip(us, us[1:]):
        if b <= a:
            raise IdentityViolation("upper breaks failed to increase: %r" % (us,))
    return us


def lower_from_upper(p: int, us) -> list:
    """b_1 = u_1, then b_(i+1) = b_i + p^i (u_(i+1) - u_i)."""
    _check_increasing(us)
    bs = []
    for i, u in enumerate(us):
        if i == 0:
            bs.append(u)
        else:
            bs.append(bs[-1] + p**i * (u - us[i - 1]))
    return bs


def upper_from_lower(p: int, bs) -> list:
    """Inverse of lower_from_upper; requires exact divisibility."""
    _check_increasing(bs)
    us = []
    for i, b in enumerate(bs):
        if i == 0:
            us.append(b)
        else:
            diff = b - bs[i - 1]
            q, r = divmod(diff, p**i)
            if r:
                raise NotIncreasing(
                    "lower gaps must be multiples of p^i; got %d at i=%d" % (diff, i)
                )
            us.append(us[-1] + q)
    return us


def _check_increasing(xs):
    if not xs:
        return
    if xs[0] <= 0:
        raise NotIncreasing("breaks must be positive")
    for a, b in zip(xs, xs[1:]):
        if b <= a:
            raise NotIncreasing("breaks must strictly increase: %r" % (xs,))


@dataclass(frozen=True)
class BreakProfile:
    """Break data of the extension cut out by a reduced vector.

    n is the effective length after stripping zero head components; ms holds
    the depths -v(a_i) (None for zero components); upper/lower hold the s =
    n - r positive breaks; residue_degree = p^r, ram_index = p^(n-r);
    minus_one_break records the extra upper break -1 present iff r >= 1.
    """

    p: int
    n: int
    ms: tuple
    upper: tuple
    lower: tuple
    residue_degree: int
    ram_index: int
    minus_one_break: bool

    def __post_init__(self):
        _check_increasing(list(self.upper))
        _check_increasing(list(self.lower))
        s = len(self.upper)
        if len(self.lower) != s:
            raise NotIncreasing("upper and lower break counts differ")
        if self.residue_degree * self.ram_index != self.p**self.n:
            raise OutOfRange("residue degree times ramification index must be p^n")
        if self.ram_index != self.p**s:
            raise OutOfRange("expected %d positive breaks" % (self.ram_index,))
        if list(self.lower) != lower_from_upper(self.p, list(self.upper)):
            raise IdentityViolation("lower breaks inconsistent with upper breaks")
        if self.minus_one_break != (self.residue_degree > 1):
            raise IdentityViolation("-1 break flag inconsistent with residue degree")

    @property
    def r(self) -> int:
        f = self.residue_degree
        r = 0
        while f > 1:
            f //= self.p
            r += 1
        return r


def full_profile(a: WittVec) -> BreakProfile:
    """Classify a reduced vector and compute its complete break profile.

    Strips exact-zero head components first.  Rejects with
    DegenerateCharacter when the character cannot have full order: all
    components zero, or the leading nonzero component has positive valuation
    or is an Artin-Schreier image unit.
    """
    if not is_reduced(a):
        raise NotReduced("break formulas need a reduced vector")
    comps = list(a.comps)
    k = 0
    while k < len(comps) and comps[k].is_zero():
        k += 1
    if k == len(comps):
        raise DegenerateCharacter("zero vector cuts out the trivial extension")
    comps = comps[k:]
    n = len(comps)
    p = a.p
    ms = tuple(None if c.is_zero() else -c.exact_valuation() for c in comps)

    if ms[0] is not None and ms[0] > 0:
        r = 0
    else:
        if in_wp_image(comps[0]):
            raise DegenerateCharacter(
                "leading component is c^p - c for some c; order drops"
            )
        r = 1
        while r < n and (ms[r] is None or ms[r] <= 0):
            r += 1
    tail_ms = list(ms[r:])
    us = upper_breaks(p, tail_ms) if tail_ms else []
    bs = lower_from_upper(p, us)
    return BreakProfile(
        p=p,
        n=n,
        ms=ms,
        upper=tuple(us),
        lower=tuple(bs),
        residue_degree=p**r,
        ram_index=p ** (n - r),
        minus_one_break=r >= 1,
    )


@dataclass(frozen=True)
class PLFunction:
    """Increasing piecewise-linear function through exact rational points.

    breakpoints: ((x_0, y_0), ..., (x_k, y_k)) with x strictly increasing,
    starting at the origin; final_slope applies beyond the last breakpoint.
    """

    breakpoints: tuple
    final_slope: Fraction

    def __post_init__(self):
        xs = [x for x, _ in self.breakpoints]
        if xs != sorted(set(xs)):
            raise NotIncreasing("breakpoint abscissae must strictly increase")

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        pts = self.breakpoints
        if x < pts[0][0]:
            raise OutOfRange("argument %s below domain start" % x)
        for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
            if x <= x1:
                return Fraction(y0) + (x - x0) * (Fraction(y1 - y0) / (x1 - x0))
        x0, y0 = pts[-1]
        return Fraction(y0) + (x - x0) * self.final_slope

    def inverse(self) -> "PLFunction":
        pts = tuple((y, x) for x, y in self.breakpoints)
        return PLFunction(pts, 1 / self.final_slope)


def hasse_herbrand(profile: BreakProfile):
    """The (phi, psi) pair of the profile, built honestly from the lower
    breaks and the slope rule (integrating 1/[G_0 : G_t]), not from the upper
    breaks; that phi maps b_i to u_i is an independent fact the tests
    re-check."""
    p = Fraction(profile.p)
    pts = [(Fraction(0), Fraction(0))]
    x, y = Fraction(0), Fraction(0)
    for i, b in enumerate(profile.lower):
        slope = p**-i
        y += (b - x) * slope
        x = Fraction(b)
        pts.append((x, y))
    final = p ** -len(profile.lower)
    phi = PLFunction(tuple(pts), final)
    return phi, phi.inverse()


def subextension_profile(profile: BreakProfile, i: int):
    """Profile of the subextension containing the full unramified part and
    the first i positive breaks, plus the remaining lower breaks of the top
    piece (valid as numbered in the full extension).

    1 <= i <= s where s is the number of positive breaks.
    """
    s = len(profile.upper)
    if not 1 <= i <= s:
        raise OutOfRange("subextension index %d outside 1..%d" % (i, s))
    us = list(profile.upper[:i])
    bs = lower_from_upper(profile.p, us)
    r = profile.r
    sub = BreakProfile(
        p=profile.p,
        n=r + i,
        ms=profile.ms[: r + i],
        upper=tuple(us),
        lower=tuple(bs),
        residue_degree=profile.residue_degree,
        ram_index=profile.p**i,
        minus_one_break=profile.minus_one_break,
    )
    top_lower = tuple(profile.lower[i:])
    return sub, top_lower
