"""Universal Witt polynomials over the integers.

The ghost (phantom) polynomial of index i in variables X_0..X_i is

    X_0^(p^i) + p*X_1^(p^(i-1)) + ... + p^(i-1)*X_(i-1)^p + p^i*X_i.

The sum family S_i, product family M_i and negation family I_i are the unique
integer polynomials with

    ghost_i(S_0..S_i) = ghost_i(X) + ghost_i(Y)
    ghost_i(M_0..M_i) = ghost_i(X) * ghost_i(Y)
    ghost_i(I_0..I_i) = -ghost_i(X)

Generation solves the recursion index by index; every division by p^i must be
exact, and exactness is asserted at runtime (InexactDivision otherwise).

S_i and M_i live in 2(i+1) variables (X-block then Y-block), I_i in i+1.
A polynomial stores its own arity; exponent vectors are dense tuples of that
arity and terms never carry a zero coefficient, so dict equality is structural
equality.  The canonical term order used for display and serialization is
graded lexicographic with X_0 ahead of X_1 ahead of ... ahead of Y_0.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .errors import InexactDivision, UnassignedVariable


class IntPolynomial:
    """Sparse multivariate polynomial with integer coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        # strip zeros so representation is canonical
        self.terms = {e: c for e, c in (terms or {}).items() if c != 0}

    # -- constructors ---------------------------------------------------

    @classmethod
    def constant(cls, c: int, nvars: int) -> "IntPolynomial":
        if c == 0:
            return cls(nvars)
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, j: int, nvars: int) -> "IntPolynomial":
        exps = [0] * nvars
        exps[j] = 1
        return cls(nvars, {tuple(exps): 1})

    # -- ring operations -------------------------------------------------

    def _check(self, other: "IntPolynomial"):
        if self.nvars != other.nvars:
            raise ValueError("arity mismatch: %d vs %d" % (self.nvars, other.nvars))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return IntPolynomial(self.nvars, terms)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        self._check(other)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        return IntPolynomial(self.nvars, terms)

    def __pow__(self, k: int) -> "IntPolynomial":
        if k < 0:
            raise ValueError("negative power")
        result = IntPolynomial.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: int) -> "IntPolynomial":
        if c == 0:
            return IntPolynomial(self.nvars)
        return IntPolynomial(self.nvars, {e: c * v for e, v in self.terms.items()})

    def exact_divide(self, d: int) -> "IntPolynomial":
        """Divide every coefficient by d; remainder anywhere is a hard error."""
        terms = {}
        for e, c in self.terms.items():
            q, r = divmod(c, d)
            if r != 0:
                raise InexactDivision(
                    "coefficient %d not divisible by %d at exponents %r" % (c, d, e)
                )
            terms[e] = q
        return IntPolynomial(self.nvars, terms)

    # -- structure -------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntPolynomial)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Max total degree over terms; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def coefficient(self, exps: tuple) -> int:
        return self.terms.get(tuple(exps), 0)

    def sorted_terms(self) -> list:
        """Terms in canonical order: graded lex, leading term first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def embed(self, nvars: int, var_map: dict) -> "IntPolynomial":
        """Reindex variables into a larger arity via var_map (old -> new)."""
        terms = {}
        for e, c in self.terms.items():
            out = [0] * nvars
            for j, k in enumerate(e):
                if k:
                    out[var_map[j]] = k
            terms[tuple(out)] = c
        return IntPolynomial(nvars, terms)

    # -- evaluation -------------------------------------------------------

    def evaluate(self, values, ring):
        """Evaluate over any commutative ring.

        values: sequence or dict of ring elements indexed by variable; every
        variable occurring in a term must be assigned.  Integer coefficients
        are mapped through ring.from_int, so characteristic reduction happens
        here and nowhere else.
        """
        getter = values.get if isinstance(values, dict) else None
        pows: dict = {}  # var index -> list of powers, pows[j][k] = x_j^k

        def power(j: int, k: int):
            if getter is not None:
                x = getter(j)
            else:
                x = values[j] if j < len(values) else None
            if x is None:
                raise UnassignedVariable("variable %d unassigned" % j)
            cache = pows.setdefault(j, [ring.one(), x])
            while len(cache) <= k:
                cache.append(cache[-1] * x)
            return cache[k]

        acc = ring.zero()
        for e, c in self.terms.items():
            term = ring.from_int(c)
            for j, k in enumerate(e):
                if k:
                    term = term * power(j, k)
            acc = acc + term
        return acc

    # -- display ----------------------------------------------------------

    def to_text(self, var_names) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for j, k in enumerate(e):
                if k == 1:
                    factors.append(var_names[j])
                elif k > 1:
                    factors.append("%s^%d" % (var_names[j], k))
            body = "*".join(factors)
            if not body:
                frag = str(abs(c))
            elif abs(c) == 1:
                frag = body
            else:
                frag = "%d*%s" % (abs(c), body)
            parts.append(("- " if c < 0 else "+ ") + frag)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def term_records(self) -> list:
        """Canonical JSON-friendly term list; coefficients as decimal strings
        so arbitrary-precision integers survive any JSON reader."""
        return [{"vars": list(e), "coeff": str(c)} for e, c in self.sorted_terms()]

    def __repr__(self):
        names = ["x%d" % j for j in range(self.nvars)]
        return "IntPolynomial(%s)" % self.to_text(names)


class IntPolyRing:
    """Ring descriptor so IntPolynomial can sit on either side of evaluate()."""

    characteristic = 0

    def __init__(self, nvars: int):
        self.nvars = nvars

    def zero(self):
        return IntPolynomial(self.nvars)

    def one(self):
        return IntPolynomial.constant(1, self.nvars)

    def from_int(self, c: int):
        return IntPolynomial.constant(c, self.nvars)

    def variable(self, j: int):
        return IntPolynomial.variable(j, self.nvars)

    def __eq__(self, other):
        return isinstance(other, IntPolyRing) and self.nvars == other.nvars

    def __hash__(self):
        return hash(("IntPolyRing", self.nvars))


class IntegerRing:
    """Plain integers behind the same ring interface."""

    characteristic = 0

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, c: int):
        return c

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("IntegerRing")


ZZ = IntegerRing()


def phantom_poly(p: int, i: int) -> IntPolynomial:
    """Ghost polynomial of index i in variables X_0..X_i (arity i+1)."""
    return _phantom(p, i, i + 1, 0)


def _phantom(p: int, i: int, nvars: int, offset: int) -> IntPolynomial:
    acc = IntPolynomial(nvars)
    for j in range(i + 1):
        mono = IntPolynomial.variable(offset + j, nvars) ** (p ** (i - j))
        acc = acc + mono.scale(p**j)
    return acc


@dataclass(frozen=True)
class WittPolySet:
    """Sum/product/negation polynomial families for one (p, length) pair.

    sum_polys[i] and prod_polys[i] have arity 2(i+1) with the X-block at
    indices 0..i and the Y-block at i+1..2i+1; neg_polys[i] has arity i+1.
    """

    p: int
    n: int
    sum_polys: tuple
    prod_polys: tuple
    neg_polys: tuple


def gen_witt_polys(p: int, n: int) -> WittPolySet:
    """Generate S_0..S_(n-1), M_0..M_(n-1), I_0..I_(n-1) for the prime p.

    Deterministic; every intermediate division by p^i is checked exact.
    """
    sums: list = []
    prods: list = []
    negs: list = []
    for i in range(n):
        nv = 2 * (i + 1)
        xmap = {k: k for k in range(i + 1)}

        phi_x = _phantom(p, i, nv, 0)
        phi_y = _phantom(p, i, nv, i + 1)

        t_sum = phi_x + phi_y
        t_prod = phi_x * phi_y
        for j in range(i):
            lift_map = dict(xmap)
            lift_map.update({(j + 1) + k: (i + 1) + k for k in range(j + 1)})
            # reindex the arity-2(j+1) polynomial into arity 2(i+1)
            s_j = sums[j].embed(nv, lift_map)
            m_j = prods[j].embed(nv, lift_map)
            t_sum = t_sum - (s_j ** (p ** (i - j))).scale(p**j)
            t_prod = t_prod - (m_j ** (p ** (i - j))).scale(p**j)
        sums.append(t_sum.exact_divide(p**i))
        prods.append(t_prod.exact_divide(p**i))

        t_neg = -_phantom(p, i, i + 1, 0)
        for j in range(i):
            i_j = negs[j].embed(i + 1, {k: k for k in range(j + 1)})
            t_neg = t_neg - (i_j ** (p ** (i - j))).scale(p**j)
        negs.append(t_neg.exact_divide(p**i))
    return WittPolySet(p, n, tuple(sums), tuple(prods), tuple(negs))


_cache: dict = {}
_cache_lock = threading.Lock()


def witt_poly_set(p: int, n: int) -> WittPolySet:
    """Memoized accessor; safe under concurrent first use."""
    key = (p, n)
    got = _cache.get(key)
    if got is not None:
        return got
    with _cache_lock:
        got = _cache.get(key)
        if got is None:
            got = gen_witt_polys(p, n)
            _cache[key] = got
        return got


def sum_poly_first_components(p: int, j: int) -> IntPolynomial:
    """Two-variable collapse of the sum polynomial: index-j sum polynomial
    with only X_0 and Y_0 kept, every other variable set to zero.

    Returned with arity 2: variable 0 is X_0, variable 1 is Y_0.
    """
    s_j = witt_poly_set(p, j + 1).sum_polys[j]
    terms = {}
    for e, c in s_j.terms.items():
        if any(e[k] for k in range(1, j + 1)) or any(
            e[k] for k in range(j + 2, 2 * (j + 1))
        ):
            continue
        key = (e[0], e[j + 1])
        terms[key] = terms.get(key, 0) + c
    return IntPolynomial(2, terms)


def check_phantom_identities(p: int, n: int, trials: int = 50, seed: int = 0) -> dict:
    """Assert the defining identities both symbolically and on random ints.

    Symbolically: compose each family back through the ghost map over a
    polynomial ring and compare exactly.  Numerically: evaluate both sides on
    random small integers.  Raises IdentityViolation on any failure; returns
    a summary dict for reporting.
    """
    import random

    from .errors import IdentityViolation

    polys = witt_poly_set(p, n)
    for i in range(n):
        nv = 2 * (i + 1)
        ring2 = IntPolyRing(nv)
        x_vars = [ring2.variable(j) for j in range(i + 1)]
        y_vars = [ring2.variable(i + 1 + j) for j in range(i + 1)]
        phi = phantom_poly(p, i)
        phi_x = phi.evaluate(x_vars, ring2)
        phi_y = phi.evaluate(y_vars, ring2)

        s_prefix = [polys.sum_polys[j].embed(nv, _prefix_map(j, i)) for j in range(i + 1)]
        m_prefix = [polys.prod_polys[j].embed(nv, _prefix_map(j, i)) for j in range(i + 1)]
        if phi.evaluate(s_prefix, ring2) != phi_x + phi_y:
            raise IdentityViolation("sum family fails ghost identity at p=%d i=%d" % (p, i))
        if phi.evaluate(m_prefix, ring2) != phi_x * phi_y:
            raise IdentityViolation("product family fails ghost identity at p=%d i=%d" % (p, i))

        ring1 = IntPolyRing(i + 1)
        xs = [ring1.variable(j) for j in range(i + 1)]
        i_prefix = [
            polys.neg_polys[j].embed(i + 1, {k: k for k in range(j + 1)})
            for j in range(i + 1)
        ]
        if phi.evaluate(i_prefix, ring1) != -phi.evaluate(xs, ring1):
            raise IdentityViolation("negation family fails ghost identity at p=%d i=%d" % (p, i))

    rng = random.Random(seed)
    for _ in range(trials):
        a = [rng.randint(-9, 9) for _ in range(n)]
        b = [rng.randint(-9, 9) for _ in range(n)]
        for i in range(n):
            phi = phantom_poly(p, i)
            s_vals = [
                polys.sum_polys[j].evaluate(a[: j + 1] + b[: j + 1], ZZ)
                for j in range(i + 1)
            ]
            m_vals = [
                polys.prod_polys[j].evaluate(a[: j + 1] + b[: j + 1], ZZ)
                for j in range(i + 1)
            ]
            i_vals = [polys.neg_polys[j].evaluate(a[: j + 1], ZZ) for j in range(i + 1)]
            pa = phi.evaluate(a, ZZ)
            pb = phi.evaluate(b, ZZ)
            if phi.evaluate(s_vals, ZZ) != pa + pb:
                raise IdentityViolation("sum ghost value mismatch at %r %r" % (a, b))
            if phi.evaluate(m_vals, ZZ) != pa * pb:
                raise IdentityViolation("product ghost value mismatch at %r %r" % (a, b))
            if phi.evaluate(i_vals, ZZ) != -pa:
                raise IdentityViolation("negation ghost value mismatch at %r" % (a,))
    return {"p": p, "n": n, "trials": trials, "symbolic": True, "ok": True}


def _prefix_map(j: int, i: int) -> dict:
    m = {k: k for k in range(j + 1)}
    m.update({(j + 1) + k: (i + 1) + k for k in range(j + 1)})
    return m


def var_names(n: int) -> list:
    """Display names for arity-2n polynomials: X-block then Y-block."""
    return ["X_%d" % j for j in range(n)] + ["Y_%d" % j for j in range(n)]
