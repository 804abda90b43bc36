"""Exact arithmetic in F_q and in the local field K = F_q((t)).

Elements of K are finite-support Laurent polynomials in the uniformizer t.
A value may optionally carry a precision bound N, meaning: coefficients at
exponents >= N are unknown (the value is a coset mod t^N).  Exact values have
precision None.  Arithmetic propagates bounds pessimistically:

    add: min of the operand bounds
    mul: min over (valuation of one operand + bound of the other)

so a result never claims more knowledge than its inputs support.

F_q with q = p^e is realized as F_p[g]/(modulus); the modulus is stored
constant-coefficient first and validated monic and irreducible by brute-force
trial division (desk scale: p <= 7, e <= 4).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from .errors import (
    DivisionByZero,
    FieldMismatch,
    NegativeValuation,
    NoRootFound,
    NotAPthPower,
    ParseError,
    PrecisionRequired,
    ValidationError,
    ZeroOperand,
)

INF = math.inf


@dataclass(frozen=True)
class BoundedBelow:
    """Valuation report for a value that is zero modulo its precision bound:
    the true valuation is unknown but >= bound."""

    bound: int


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# -- F_p[x] helpers on coefficient lists (constant first, no trailing zeros) --

def _ptrim(cs):
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return _ptrim(out)


def _pmod(a, b, p):
    # b monic; returns a mod b
    a = list(a)
    db = len(b) - 1
    inv_lead = 1  # monic
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        c = (a[-1] * inv_lead) % p
        for j in range(len(b)):
            a[shift + j] = (a[shift + j] - c * b[j]) % p
        _ptrim(a)
    return a


def _is_irreducible(mod, p) -> bool:
    e = len(mod) - 1
    if e <= 1:
        return e == 1
    for d in range(1, e // 2 + 1):
        for tail in product(range(p), repeat=d):
            div = list(tail) + [1]  # monic degree-d candidate
            if not _pmod(mod, div, p):
                return False
    return True


def default_modulus(p: int, e: int) -> tuple:
    """Lexicographically smallest monic irreducible of degree e over F_p."""
    for tail in product(range(p), repeat=e):
        cand = list(tail) + [1]
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise ValidationError("no irreducible modulus found (impossible)")


class FqField:
    """The finite field F_q, q = p^e, with a fixed generator g."""

    def __init__(self, p: int, e: int = 1, modulus=None):
        if not is_prime(p):
            raise ValidationError("%d is not prime" % p)
        if e < 1:
            raise ValidationError("extension degree must be >= 1")
        self.p = p
        self.e = e
        self.q = p**e
        self.characteristic = p
        if e == 1:
            if modulus is not None:
                raise ValidationError("prime field takes no modulus")
            self.modulus = None
        else:
            mod = tuple(int(c) % p for c in modulus) if modulus else default_modulus(p, e)
            if len(mod) != e + 1:
                raise ValidationError("modulus must have degree e = %d" % e)
            if mod[-1] != 1:
                raise ValidationError("modulus must be monic")
            if not _is_irreducible(list(mod), p):
                raise ValidationError("modulus %r is reducible over F_%d" % (list(mod), p))
            self.modulus = mod
        # reduction table: g^(e+k) as a coefficient vector, k = 0..e-2
        self._red = []
        if e > 1:
            cur = [(-c) % p for c in self.modulus[:e]]  # g^e
            self._red.append(tuple(cur))
            for _ in range(e - 2):
                cur = [0] + cur
                top = cur.pop()
                if top:
                    cur = [(cv + top * rv) % p for cv, rv in zip(cur, self._red[0])]
                self._red.append(tuple(cur))

    # -- construction ------------------------------------------------------

    def element(self, coeffs) -> "FqElement":
        if isinstance(coeffs, int):
            coeffs = [coeffs]
        cs = [int(c) % self.p for c in coeffs]
        if len(cs) > self.e:
            raise ValidationError("too many coefficients for degree %d" % self.e)
        cs += [0] * (self.e - len(cs))
        return FqElement(self, tuple(cs))

    def zero(self) -> "FqElement":
        return self.element(0)

    def one(self) -> "FqElement":
        return self.element(1)

    def gen(self) -> "FqElement":
        if self.e == 1:
            raise ValidationError("prime field has no generator g")
        return self.element([0, 1])

    def from_int(self, c: int) -> "FqElement":
        return self.element(c)

    def elements(self):
        """All q elements, in a fixed lexicographic order."""
        for cs in product(range(self.p), repeat=self.e):
            yield FqElement(self, cs)

    def embedding_into(self, big: "FqField") -> "FqEmbedding":
        return FqEmbedding(self, big)

    # -- structure -----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, FqField)
            and self.p == other.p
            and self.e == other.e
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        if self.e == 1:
            return "FqField(%d)" % self.p
        return "FqField(%d^%d, mod=%r)" % (self.p, self.e, list(self.modulus))


class FqElement:
    """Element of F_q as a coefficient vector over the g-power basis."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FqField, coeffs: tuple):
        self.field = field
        self.coeffs = tuple(coeffs)

    def _check(self, other):
        if not isinstance(other, FqElement) or other.field != self.field:
            raise FieldMismatch("mixed field elements")

    def __add__(self, other):
        self._check(other)
        p = self.field.p
        return FqElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        p = self.field.p
        return FqElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        p, e = self.field.p, self.field.e
        if e == 1:
            return FqElement(self.field, ((self.coeffs[0] * other.coeffs[0]) % p,))
        out = [0] * (2 * e - 1)
        for i, ca in enumerate(self.coeffs):
            if ca:
                for j, cb in enumerate(other.coeffs):
                    out[i + j] = (out[i + j] + ca * cb) % p
        red = self.field._red
        cs = out[:e]
        for k in range(e - 1):
            c = out[e + k]
            if c:
                cs = [(cv + c * rv) % p for cv, rv in zip(cs, red[k])]
        return FqElement(self.field, tuple(cs))

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "FqElement":
        if self.is_zero():
            raise DivisionByZero("inverse of 0 in F_q")
        return self ** (self.field.q - 2)

    def pth_root(self) -> "FqElement":
        """Unique p-th root; x -> x^p is an automorphism of F_q."""
        return self ** (self.field.p ** (self.field.e - 1))

    def trace_to_prime(self) -> int:
        """Trace down to F_p, returned as an integer in 0..p-1."""
        acc = self.field.zero()
        cur = self
        for _ in range(self.field.e):
            acc = acc + cur
            cur = cur**self.field.p
        assert all(c == 0 for c in acc.coeffs[1:]), "trace landed outside F_p"
        return acc.coeffs[0]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        return (
            isinstance(other, FqElement)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return print_fq(self)


class FqEmbedding:
    """Field embedding F_(p^e) -> F_(p^d), e | d, by mapping g to a fixed
    root of the small modulus; the root choice is deterministic (first in
    the big field's enumeration order), so embeds are reproducible."""

    def __init__(self, small: FqField, big: FqField):
        if small.p != big.p or big.e % small.e != 0:
            raise NoRootFound("no embedding F_%d -> F_%d" % (small.q, big.q))
        self.small = small
        self.big = big
        if small.e == 1:
            self.gen_image = big.one()
        else:
            self.gen_image = None
            for cand in big.elements():
                acc = big.zero()
                powc = big.one()
                for c in small.modulus:
                    if c:
                        acc = acc + powc * big.from_int(c)
                    powc = powc * cand
                if acc.is_zero():
                    self.gen_image = cand
                    break
            if self.gen_image is None:
                raise NoRootFound("modulus has no root in the target field")

    def __call__(self, x: FqElement) -> FqElement:
        if x.field != self.small:
            raise FieldMismatch("element not from the source field")
        acc = self.big.zero()
        powg = self.big.one()
        for c in x.coeffs:
            if c:
                acc = acc + powg * self.big.from_int(c)
            powg = powg * self.gen_image
        return acc


# -- element text syntax -------------------------------------------------------

def print_fq(x: FqElement) -> str:
    """Canonical form: digit-coefficient polynomial in g, highest power first.

    Examples: "0", "2", "g", "g+1", "2g^2+g+2".
    """
    parts = []
    for k in range(x.field.e - 1, -1, -1):
        c = x.coeffs[k]
        if not c:
            continue
        if k == 0:
            parts.append(str(c))
        else:
            head = "" if c == 1 else str(c)
            parts.append(head + ("g" if k == 1 else "g^%d" % k))
    return "+".join(parts) if parts else "0"


def parse_fq(field: FqField, text: str) -> FqElement:
    """Inverse of print_fq; tolerates spaces and explicit '*'."""
    s = text.replace(" ", "").replace("*", "")
    if not s:
        raise ParseError("empty field element")
    coeffs = [0] * field.e
    for term in s.split("+"):
        if not term:
            raise ParseError("empty term in %r" % text)
        digits = ""
        rest = term
        while rest and rest[0].isdigit():
            digits += rest[0]
            rest = rest[1:]
        if not rest:
            c, k = int(digits), 0
        elif rest == "g":
            c, k = int(digits) if digits else 1, 1
        elif rest.startswith("g^"):
            exp = rest[2:]
            if not exp.isdigit():
                raise ParseError("bad exponent in %r" % term)
            c, k = int(digits) if digits else 1, int(exp)
        else:
            raise ParseError("cannot parse term %r" % term)
        if k >= field.e:
            raise ParseError("power g^%d exceeds field degree %d" % (k, field.e))
        coeffs[k] = (coeffs[k] + c) % field.p
    return field.element(coeffs)


# -- Laurent polynomials -------------------------------------------------------

class LaurentRing:
    """Ring descriptor for K = F_q((t)) restricted to finite-support values."""

    def __init__(self, field: FqField):
        self.field = field
        self.characteristic = field.p
        self.p = field.p

    def poly(self, coeffs: dict, precision: int | None = None) -> "LaurentPoly":
        return LaurentPoly(self, coeffs, precision)

    def zero(self) -> "LaurentPoly":
        return LaurentPoly(self, {})

    def one(self) -> "LaurentPoly":
        return LaurentPoly(self, {0: self.field.one()})

    def from_int(self, c: int) -> "LaurentPoly":
        return LaurentPoly(self, {0: self.field.from_int(c)})

    def constant(self, c: FqElement) -> "LaurentPoly":
        return LaurentPoly(self, {0: c})

    def t(self) -> "LaurentPoly":
        return LaurentPoly(self, {1: self.field.one()})

    def monomial(self, exp: int, coeff: FqElement | int = 1) -> "LaurentPoly":
        if isinstance(coeff, int):
            coeff = self.field.from_int(coeff)
        return LaurentPoly(self, {exp: coeff})

    def pth_power(self, x: "LaurentPoly") -> "LaurentPoly":
        return x.pth_power()

    def __eq__(self, other):
        return isinstance(other, LaurentRing) and self.field == other.field

    def __hash__(self):
        return hash(("LaurentRing", self.field))

    def __repr__(self):
        return "LaurentRing(%r)" % self.field


def _combine_precision(na, nb):
    if na is None:
        return nb
    if nb is None:
        return na
    return min(na, nb)


class LaurentPoly:
    """Finite-support Laurent polynomial over F_q, optionally mod t^N."""

    __slots__ = ("ring", "coeffs", "precision")

    def __init__(self, ring: LaurentRing, coeffs: dict, precision: int | None = None):
        if precision is not None:
            coeffs = {e: c for e, c in coeffs.items() if e < precision}
        self.ring = ring
        self.coeffs = {e: c for e, c in coeffs.items() if not c.is_zero()}
        self.precision = precision

    def _check(self, other):
        if not isinstance(other, LaurentPoly) or other.ring != self.ring:
            raise FieldMismatch("mixed Laurent rings")

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        cs = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = cs.get(e, self.ring.field.zero()) + c
            if s.is_zero():
                cs.pop(e, None)
            else:
                cs[e] = s
        return LaurentPoly(self.ring, cs, _combine_precision(self.precision, other.precision))

    def __neg__(self):
        return LaurentPoly(self.ring, {e: -c for e, c in self.coeffs.items()}, self.precision)

    def __sub__(self, other):
        return self + (-other)

    def _val_floor(self):
        # lower bound for the valuation, used only for precision bookkeeping
        if self.coeffs:
            return min(self.coeffs)
        if self.precision is not None:
            return self.precision
        return INF

    def __mul__(self, other):
        self._check(other)
        bounds = []
        if self.precision is not None:
            vb = other._val_floor()
            if vb is INF:  # exact zero: product is exact zero
                return self.ring.zero()
            bounds.append(vb + self.precision)
        if other.precision is not None:
            va = self._val_floor()
            if va is INF:
                return self.ring.zero()
            bounds.append(va + other.precision)
        precision = min(bounds) if bounds else None
        cs: dict = {}
        zero = self.ring.field.zero()
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = cs.get(e, zero) + c1 * c2
                if s.is_zero():
                    cs.pop(e, None)
                else:
                    cs[e] = s
        return LaurentPoly(self.ring, cs, precision)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a Laurent polynomial")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def pth_power(self) -> "LaurentPoly":
        """Frobenius: acts coefficientwise and multiplies exponents by p.
        Precision improves to p*N since the unknown tail is also raised."""
        p = self.ring.p
        cs = {p * e: c**p for e, c in self.coeffs.items()}
        precision = None if self.precision is None else p * self.precision
        return LaurentPoly(self.ring, cs, precision)

    def pth_root(self) -> "LaurentPoly":
        """Inverse of pth_power on exact values; every exponent must be
        divisible by p (coefficients always have roots, F_q is perfect)."""
        assert self.precision is None, "p-th root of a precision-bounded value"
        p = self.ring.p
        cs = {}
        for e, c in self.coeffs.items():
            if e % p != 0:
                raise NotAPthPower("exponent %d not divisible by %d" % (e, p))
            cs[e // p] = c.pth_root()
        return LaurentPoly(self.ring, cs)

    # -- inspection ------------------------------------------------------------

    def valuation(self):
        """Exact int for nonzero support; INF for exact zero; BoundedBelow(N)
        when the value is zero modulo its precision bound."""
        if self.coeffs:
            return min(self.coeffs)
        if self.precision is not None:
            return BoundedBelow(self.precision)
        return INF

    def exact_valuation(self) -> int:
        v = self.valuation()
        if not isinstance(v, int):
            raise ZeroOperand("valuation of zero (or zero mod precision) requested")
        return v

    def leading_coeff(self) -> FqElement:
        if not self.coeffs:
            raise ZeroOperand("leading coefficient of 0")
        return self.coeffs[min(self.coeffs)]

    def coefficient(self, e: int) -> FqElement:
        return self.coeffs.get(e, self.ring.field.zero())

    def is_zero(self) -> bool:
        """Exactly zero (no support, no precision bound)."""
        return not self.coeffs and self.precision is None

    def is_zero_mod_precision(self) -> bool:
        return not self.coeffs

    def truncate(self, n: int) -> "LaurentPoly":
        return LaurentPoly(self.ring, self.coeffs, _combine_precision(self.precision, n))

    def congruent(self, other) -> bool:
        """Equality modulo the coarser of the two precision bounds."""
        self._check(other)
        n = _combine_precision(self.precision, other.precision)
        if n is None:
            return self.coeffs == other.coeffs
        return {e: c for e, c in self.coeffs.items() if e < n} == {
            e: c for e, c in other.coeffs.items() if e < n
        }

    def map_coeffs(self, fn, new_ring: LaurentRing) -> "LaurentPoly":
        """Base change through a coefficient map (e.g. a field embedding)."""
        return LaurentPoly(new_ring, {e: fn(c) for e, c in self.coeffs.items()}, self.precision)

    def support(self) -> list:
        return sorted(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, LaurentPoly)
            and self.ring == other.ring
            and self.coeffs == other.coeffs
            and self.precision == other.precision
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.coeffs.items()), self.precision))

    def __repr__(self):
        return print_laurent(self)


def print_laurent(x: LaurentPoly) -> str:
    parts = []
    for e in x.support():
        c = print_fq(x.coeffs[e])
        c = "(%s)" % c if "+" in c else c
        if e == 0:
            parts.append(c)
        else:
            tpow = "t" if e == 1 else "t^%d" % e
            parts.append(tpow if c == "1" else "%s*%s" % (c, tpow))
    body = " + ".join(parts) if parts else "0"
    if x.precision is not None:
        body += " + O(t^%d)" % x.precision
    return body


def laurent_to_pairs(x: LaurentPoly) -> list:
    """[[exponent, coefficient-string], ...] with exponents ascending."""
    return [[e, print_fq(x.coeffs[e])] for e in x.support()]


def laurent_from_pairs(ring: LaurentRing, pairs, precision: int | None = None) -> LaurentPoly:
    cs = {}
    last = None
    for item in pairs:
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise ParseError("component term must be [exponent, coefficient]")
        e, text = item
        if not isinstance(e, int) or isinstance(e, bool):
            raise ParseError("exponent must be an integer, got %r" % (e,))
        if last is not None and e <= last:
            raise ValidationError("exponents must be strictly increasing")
        last = e
        c = parse_fq(ring.field, text) if isinstance(text, str) else None
        if c is None:
            raise ParseError("coefficient must be a string, got %r" % (text,))
        if not c.is_zero():
            cs[e] = c
    return LaurentPoly(ring, cs, precision)


def wp_inverse_positive(a: LaurentPoly, n: int | None) -> LaurentPoly:
    """Solve c^p - c = a mod t^n for v(a) >= 1, by the convergent series
    c = -(a + a^p + a^(p^2) + ...); the result carries precision n.

    The identity is exact termwise: (c)^p - c telescopes back to a."""
    if n is None:
        raise PrecisionRequired("wp inverse needs a working precision")
    if a.is_zero():
        return a
    if a.precision is not None:
        n = min(n, a.precision)
    v = a.exact_valuation()
    if v < 1:
        raise NegativeValuation("wp inverse series needs valuation >= 1, got %r" % v)
    acc = a.ring.zero()
    cur = a.truncate(n)
    while cur.coeffs:
        acc = acc + cur
        cur = cur.pth_power().truncate(n)
    return (-acc).truncate(n)
