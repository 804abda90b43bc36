"""Command-line front end.

Subcommands
-----------
witt-polys      dump the structure polynomial families for a given (p, n)
reduce          reduce the vector in a problem file (certificate included)
breaks          closed-form break data for the vector in a problem file
oracle-compare  formula breaks vs explicit-tower breaks, file or random batch
verify          run the randomized identity suites with a fixed seed
hh              piecewise-linear numbering-change table for a profile

Problem files are JSON: {"p": prime, "residue_field": {"degree": e,
"modulus": [c_0..c_e]?}, "n": length, "components": [[[exp, "coeff"], ...],
...]} with the modulus constant-term first over the prime field and
coefficients written in the residue-field generator g ("g+1", "2g^2+2").

Exit codes: 0 success, 1 parse error, 2 validation error, 3 mathematical
precondition violated, 4 internal invariant violated, 5 oracle mismatch.
Identical inputs (and seeds, for randomized commands) produce byte-identical
output.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from .breaks import full_profile, hasse_herbrand
from .errors import (
    InternalError,
    ParseError,
    PreconditionError,
    ValidationError,
    exit_code_for,
)
from .field import (
    FqField,
    LaurentRing,
    is_prime,
    laurent_from_pairs,
    laurent_to_pairs,
    print_laurent,
)
from .reduction import reduce_vector, strongly_reduce
from .tower import MAX_DEPTH, compare
from .witt import WittVec
from .wittpoly import witt_poly_set

MISMATCH_EXIT = 5


# -- problem files -------------------------------------------------------------


@dataclass(frozen=True)
class ProblemFile:
    """Canonicalized contents of a problem file.

    components holds ((exponent, coefficient-string), ...) per slot, with
    exponents strictly increasing and coefficient strings in canonical form,
    so parse(print(f)) == f bit-exactly.
    """

    p: int
    degree: int
    modulus: tuple | None
    n: int
    components: tuple

    def field(self) -> FqField:
        return FqField(self.p, self.degree, self.modulus)

    def ring(self) -> LaurentRing:
        return LaurentRing(self.field())

    def vector(self) -> WittVec:
        ring = self.ring()
        comps = tuple(laurent_from_pairs(ring, list(pairs)) for pairs in self.components)
        return WittVec(self.p, self.n, ring, comps)


def _expect_int(obj, what: str) -> int:
    if not isinstance(obj, int) or isinstance(obj, bool):
        raise ValidationError("%s must be an integer, got %r" % (what, obj))
    return obj


def parse_problem(text: str) -> ProblemFile:
    """Parse and validate problem-file text; canonicalizes as it goes."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            "line %d, column %d: %s" % (exc.lineno, exc.colno, exc.msg)
        ) from exc
    if not isinstance(doc, dict):
        raise ValidationError("top level must be an object")
    unknown = set(doc) - {"p", "residue_field", "n", "components"}
    if unknown:
        raise ValidationError("unknown keys: %s" % ", ".join(sorted(unknown)))
    for key in ("p", "residue_field", "n", "components"):
        if key not in doc:
            raise ValidationError("missing key %r" % key)

    p = _expect_int(doc["p"], "p")
    if not is_prime(p):
        raise ValidationError("p must be prime, got %d" % p)

    rf = doc["residue_field"]
    if not isinstance(rf, dict) or set(rf) - {"degree", "modulus"}:
        raise ValidationError("residue_field must be {degree, modulus?}")
    degree = _expect_int(rf.get("degree"), "residue_field.degree")
    modulus = rf.get("modulus")
    if modulus is not None:
        if not isinstance(modulus, list):
            raise ValidationError("modulus must be a list of integers")
        modulus = tuple(_expect_int(c, "modulus coefficient") % p for c in modulus)
    field = FqField(p, degree, modulus)  # validates degree and irreducibility
    ring = LaurentRing(field)

    n = _expect_int(doc["n"], "n")
    if n < 1:
        raise ValidationError("n must be >= 1")
    comps = doc["components"]
    if not isinstance(comps, list) or len(comps) != n:
        raise ValidationError("components must be a list of n = %d entries" % n)
    canonical = []
    for slot, pairs in enumerate(comps):
        if not isinstance(pairs, list):
            raise ValidationError("component %d must be a list of pairs" % slot)
        poly = laurent_from_pairs(ring, pairs)
        canonical.append(tuple((e, c) for e, c in laurent_to_pairs(poly)))
    return ProblemFile(p, degree, modulus, n, tuple(canonical))


def print_problem(f: ProblemFile) -> str:
    """Canonical problem-file text; inverse of parse_problem."""
    rf: dict = {"degree": f.degree}
    if f.modulus is not None:
        rf["modulus"] = list(f.modulus)
    doc = {
        "p": f.p,
        "residue_field": rf,
        "n": f.n,
        "components": [[[e, c] for e, c in pairs] for pairs in f.components],
    }
    return _json(doc)


def _read_problem(path: str) -> ProblemFile:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError("cannot read %s: %s" % (path, exc.strerror)) from exc
    return parse_problem(text)


# -- output helpers ------------------------------------------------------------


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _frac_json(x: Fraction):
    return int(x) if x.denominator == 1 else str(x)


def _pairs(x) -> list:
    return [[e, c] for e, c in laurent_to_pairs(x)]


def _vector_pairs(a: WittVec) -> list:
    return [_pairs(c) for c in a.comps]


# -- subcommand handlers ---------------------------------------------------------


def _cmd_witt_polys(args) -> tuple:
    if not is_prime(args.p):
        raise ValidationError("p must be prime, got %d" % args.p)
    if args.n < 1:
        raise ValidationError("n must be >= 1")
    ps = witt_poly_set(args.p, args.n)
    if args.format == "json":
        doc = {
            "p": args.p,
            "n": args.n,
            "S": [poly.term_records() for poly in ps.sum_polys],
            "M": [poly.term_records() for poly in ps.prod_polys],
            "I": [poly.term_records() for poly in ps.neg_polys],
        }
        return _json(doc), 0
    lines = []
    for label, family in (("S", ps.sum_polys), ("M", ps.prod_polys), ("I", ps.neg_polys)):
        for i, poly in enumerate(family):
            xs = ["X_%d" % j for j in range(i + 1)]
            names = xs + ["Y_%d" % j for j in range(i + 1)] if label != "I" else xs
            lines.append("%s_%d = %s" % (label, i, poly.to_text(names)))
    return "\n".join(lines) + "\n", 0


def _cmd_reduce(args) -> tuple:
    f = _read_problem(args.file)
    a = f.vector()
    if args.precision is not None:
        pre = reduce_vector(a)
        res = strongly_reduce(pre.reduced, args.precision)
        w1 = pre.witness
        if res.extended:
            emb = f.field().embedding_into(res.ring.field)
            w1 = w1.map_components(lambda c: c.map_coeffs(emb, res.ring), res.ring)
        witness = w1 + res.witness  # wp is additive, so witnesses compose by +
        reduced = res.reduced
        extended = res.extended
        degree = res.ring.field.e
        precision = args.precision
    else:
        cert = reduce_vector(a)
        witness, reduced = cert.witness, cert.reduced
        extended, degree, precision = False, f.degree, None
    if args.format == "json":
        doc = {
            "p": f.p,
            "n": f.n,
            "residue_degree": degree,
            "reduced": _vector_pairs(reduced),
            "witness": _vector_pairs(witness),
            "verified": True,
            "extended": extended,
        }
        if precision is not None:
            doc["precision"] = precision
        return _json(doc), 0
    lines = []
    for i, c in enumerate(reduced.comps):
        lines.append("reduced[%d] = %s" % (i, print_laurent(c)))
    for i, c in enumerate(witness.comps):
        lines.append("witness[%d] = %s" % (i, print_laurent(c)))
    lines.append("verified: true")
    if extended:
        lines.append("extended: residue field degree %d" % degree)
    return "\n".join(lines) + "\n", 0


def _profile_doc(profile) -> dict:
    phi, _psi = hasse_herbrand(profile)
    return {
        "p": profile.p,
        "n": profile.n,
        "m": [m for m in profile.ms],
        "upper": list(profile.upper),
        "lower": list(profile.lower),
        "residue_degree": profile.residue_degree,
        "ram_index": profile.ram_index,
        "minus_one_break": profile.minus_one_break,
        "phi_breakpoints": [
            [_frac_json(Fraction(x)), _frac_json(Fraction(y))]
            for x, y in phi.breakpoints
        ],
    }


def _cmd_breaks(args) -> tuple:
    f = _read_problem(args.file)
    profile = full_profile(f.vector())
    if args.format == "json":
        return _json(_profile_doc(profile)), 0
    doc = _profile_doc(profile)
    lines = [
        "p = %d, effective length n = %d" % (doc["p"], doc["n"]),
        "depths m = %s" % (doc["m"],),
        "upper breaks: %s" % (doc["upper"],),
        "lower breaks: %s" % (doc["lower"],),
        "residue degree f = %d, ramification index e = %d"
        % (doc["residue_degree"], doc["ram_index"]),
        "extra upper break at -1: %s" % ("yes" if doc["minus_one_break"] else "no"),
        "phi breakpoints: %s" % (doc["phi_breakpoints"],),
    ]
    return "\n".join(lines) + "\n", 0


def _cmd_hh(args) -> tuple:
    f = _read_problem(args.file)
    profile = full_profile(f.vector())
    phi, psi = hasse_herbrand(profile)
    if args.format == "json":
        doc = {
            "phi_breakpoints": [
                [_frac_json(Fraction(x)), _frac_json(Fraction(y))]
                for x, y in phi.breakpoints
            ],
            "phi_final_slope": _frac_json(phi.final_slope),
            "psi_breakpoints": [
                [_frac_json(Fraction(x)), _frac_json(Fraction(y))]
                for x, y in psi.breakpoints
            ],
            "psi_final_slope": _frac_json(psi.final_slope),
        }
        return _json(doc), 0
    lines = ["x -> phi(x) (lower to upper numbering)"]
    for x, y in phi.breakpoints:
        lines.append("  %s -> %s" % (x, y))
    lines.append("  final slope %s" % phi.final_slope)
    lines.append("x -> psi(x) (upper to lower numbering)")
    for x, y in psi.breakpoints:
        lines.append("  %s -> %s" % (x, y))
    lines.append("  final slope %s" % psi.final_slope)
    return "\n".join(lines) + "\n", 0


def _oracle_vectors(args) -> list:
    if (args.file is None) == (args.random is None):
        raise ValidationError("need exactly one of: a problem file, or --random")
    if args.file is not None:
        return [_read_problem(args.file).vector()]
    for name in ("p", "q", "n"):
        if getattr(args, name) is None:
            raise ValidationError("--random requires --p, --q and --n")
    if not is_prime(args.p):
        raise ValidationError("p must be prime, got %d" % args.p)
    e, q = 0, 1
    while q < args.q:
        q *= args.p
        e += 1
    if q != args.q or e < 1:
        raise ValidationError("q must be a positive power of p")
    if args.n < 1:
        raise ValidationError("n must be >= 1")
    from .sampling import random_strongly_reduced_vector

    ring = LaurentRing(FqField(args.p, e))
    rng = random.Random(args.seed)
    return [
        random_strongly_reduced_vector(args.p, args.n, ring, rng, max_m=args.max_m)
        for _ in range(args.random)
    ]


def _cmd_oracle_compare(args) -> tuple:
    vectors = _oracle_vectors(args)
    cases = []
    mismatches = 0
    for idx, a in enumerate(vectors):
        verdict = compare(a, args.depth)
        if not verdict.equal:
            mismatches += 1
        cases.append(
            {
                "index": idx,
                "components": _vector_pairs(a),
                "formula_lower": list(verdict.formula_lower),
                "tower_lower": list(verdict.tower_lower),
                "equal": verdict.equal,
            }
        )
    code = 0 if mismatches == 0 else MISMATCH_EXIT
    if args.format == "json":
        doc = {"cases": cases, "count": len(cases), "mismatches": mismatches}
        return _json(doc), code
    lines = []
    for case in cases:
        lines.append(
            "case %d: formula=%s tower=%s %s"
            % (
                case["index"],
                case["formula_lower"],
                case["tower_lower"],
                "ok" if case["equal"] else "MISMATCH",
            )
        )
    lines.append("summary: %d cases, %d mismatches" % (len(cases), mismatches))
    return "\n".join(lines) + "\n", code


def _cmd_verify(args) -> tuple:
    from .reduction import reduce_vector as _reduce
    from .sampling import random_witt_vector
    from .witt import check_structural_identities
    from .wittpoly import check_phantom_identities

    lines = []
    for p, n in ((2, 3), (3, 2), (5, 1)):
        check_phantom_identities(p, n, trials=20, seed=args.seed)
        lines.append("phantom identities p=%d n=%d: ok" % (p, n))
    for p in (2, 3):
        ring = LaurentRing(FqField(p))
        check_structural_identities(p, 3, samples=25, ring=ring, seed=args.seed)
        lines.append("structural identities p=%d n=3: ok" % p)
    for p, e in ((2, 1), (3, 1), (2, 2)):
        ring = LaurentRing(FqField(p, e))
        rng = random.Random(args.seed + 100 * p + e)
        for _ in range(20):
            a = random_witt_vector(p, 2, ring, rng)
            _reduce(a)  # certificate self-verifies on construction
        lines.append("reduction certificates p=%d e=%d: ok" % (p, e))
    lines.append("all suites pass")
    return "\n".join(lines) + "\n", 0


# -- parser ---------------------------------------------------------------------


def _add_format(sp):
    sp.add_argument("--format", choices=("text", "json"), default="text")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wittbreaks",
        description="Exact ramification breaks of cyclic p^n extensions of F_q((t)), "
        "with an explicit-tower cross-check.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("witt-polys", help="dump the structure polynomials")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    _add_format(sp)
    sp.set_defaults(handler=_cmd_witt_polys)

    sp = sub.add_parser("reduce", help="reduce the vector in a problem file")
    sp.add_argument("file")
    sp.add_argument(
        "--precision",
        type=int,
        default=None,
        help="also strongly reduce, truncating at t^N",
    )
    _add_format(sp)
    sp.set_defaults(handler=_cmd_reduce)

    sp = sub.add_parser("breaks", help="closed-form break data for a problem file")
    sp.add_argument("file")
    _add_format(sp)
    sp.set_defaults(handler=_cmd_breaks)

    sp = sub.add_parser(
        "oracle-compare", help="formula breaks vs explicit-tower filtration breaks"
    )
    sp.add_argument("file", nargs="?", default=None)
    sp.add_argument("--random", type=int, default=None, metavar="COUNT")
    sp.add_argument("--p", type=int, default=None)
    sp.add_argument("--q", type=int, default=None)
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--max-m", type=int, default=9, dest="max_m")
    sp.add_argument("--depth", type=int, choices=(1, 2, 3), default=None)
    sp.add_argument("--seed", type=int, default=0)
    _add_format(sp)
    sp.set_defaults(handler=_cmd_oracle_compare)

    sp = sub.add_parser("verify", help="run the randomized identity suites")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(handler=_cmd_verify)

    sp = sub.add_parser("hh", help="numbering-change table for a profile")
    sp.add_argument("file")
    _add_format(sp)
    sp.set_defaults(handler=_cmd_hh)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = args.handler(args)
    except (ParseError, ValidationError, PreconditionError, InternalError) as exc:
        sys.stderr.write("error: %s: %s\n" % (type(exc).__name__, exc))
        return exit_code_for(exc)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
