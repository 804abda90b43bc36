"""Acceptance gate: nine numbered end-to-end checks.

Each test prints exactly one "criterion N: PASS/FAIL" line (run with
``pytest -s`` to see the lines as they happen; without ``-s`` pytest still
reports one verdict per criterion through the test names).  All equalities
are exact — integer, polynomial, or field-element identity; no tolerances.
"""

import functools
import io
import json
import random
import time
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction

import pytest

from wittbreaks.breaks import (
    full_profile,
    hasse_herbrand,
    lower_from_upper,
    upper_from_lower,
)
from wittbreaks.cli import main, parse_problem, print_problem
from wittbreaks.field import FqField, LaurentRing, laurent_to_pairs
from wittbreaks.reduction import is_reduced, reduce_vector, shift_to_length
from wittbreaks.sampling import (
    random_strongly_reduced_vector,
    random_unit_nonzero_trace,
    random_valuation,
    random_witt_vector,
)
from wittbreaks.tower import build_tower, compare, tower_valuation
from wittbreaks.witt import WittVec, check_structural_identities
from wittbreaks.wittpoly import (
    IntPolyRing,
    check_phantom_identities,
    gen_witt_polys,
    sum_poly_first_components,
)


def criterion(num, label):
    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kw):
            try:
                fn(*args, **kw)
            except BaseException:
                print("criterion %d: FAIL — %s" % (num, label), flush=True)
                raise
            print("criterion %d: PASS — %s" % (num, label), flush=True)

        return wrapper

    return deco


@pytest.fixture(scope="module")
def central_results():
    """Shared corpus for criteria 6 and 7: (vector, verdict, profile) triples."""
    out = []
    for p in (2, 3):
        for e in (1, 2):
            ring = LaurentRing(FqField(p, e))
            rng = random.Random(1000 * p + e)
            for _ in range(50):
                a = random_strongly_reduced_vector(p, 2, ring, rng)
                out.append((a, compare(a), full_profile(a)))
    for p in (2, 3, 5):
        ring = LaurentRing(FqField(p))
        rng = random.Random(7 * p)
        for _ in range(20):
            a = random_strongly_reduced_vector(p, 1, ring, rng)
            out.append((a, compare(a), full_profile(a)))
    return out


@criterion(1, "polynomial families generate with exact division; ghost identities hold")
def test_criterion_1_generation_and_ghost_identities():
    t0 = time.monotonic()
    for p, n_max in ((2, 4), (3, 3), (5, 2), (7, 2)):
        for n in range(1, n_max + 1):
            gen_witt_polys(p, n)
            summary = check_phantom_identities(p, n, trials=10, seed=n)
            assert summary["ok"]
    elapsed = time.monotonic() - t0
    assert elapsed < 60.0, "took %.1fs" % elapsed


@criterion(2, "shift identity holds symbolically; times_p equals p-fold sum")
def test_criterion_2_shift_identity_and_times_p():
    for p in (2, 3):
        polys = gen_witt_polys(p, 4)
        for j in range(3):
            nv = 2 * (j + 1)
            ring = IntPolyRing(nv)
            zero = ring.zero()
            args = (
                [zero]
                + [ring.variable(k) for k in range(j + 1)]
                + [zero]
                + [ring.variable(j + 1 + k) for k in range(j + 1)]
            )
            assert polys.sum_polys[j + 1].evaluate(args, ring) == polys.sum_polys[j]

    for p in (2, 3):
        ring = LaurentRing(FqField(p))
        for n in range(1, 5):
            rng = random.Random(100 * p + n)
            for _ in range(100):
                a = random_witt_vector(p, n, ring, rng)
                acc = a
                for _ in range(p - 1):
                    acc = acc + a
                assert a.times_p() == acc


@criterion(3, "first-component collapse: shape claims and level-1 valuation law")
def test_criterion_3_collapse_polynomials():
    for p in (2, 3):
        for j in (1, 2, 3):
            f = sum_poly_first_components(p, j)
            q = p**j
            assert f.coefficient((1, q - 1)) == -1
            assert f.total_degree() == q
            assert f.coefficient((0, q)) == 0

    # v(f_j(x_0, a_0)) = -(p^(j+1) - p + 1) * m_0, computed at level 1 of a
    # depth-2 tower where v(t) = p
    for p in (2, 3):
        ring = LaurentRing(FqField(p))
        rng = random.Random(31 * p)
        for _ in range(10):
            m0 = random_valuation(rng, p, 9)
            m1 = random_valuation(rng, p, 9)
            a = WittVec(p, 2, ring, (ring.monomial(-m0), ring.monomial(-m1)))
            tw = build_tower(a, 2)
            lvl1 = tw.levels[1]
            x0 = lvl1.gen()
            a0 = lvl1.embed(a.comps[0])
            for j in (1, 2, 3):
                f = sum_poly_first_components(p, j)
                got = tower_valuation(f.evaluate([x0, a0], lvl1))
                assert got == -(p ** (j + 1) - p + 1) * m0


@criterion(4, "head/tail truncation and restriction identities on random vectors")
def test_criterion_4_truncation_identity_suite():
    for p in (2, 3):
        ring = LaurentRing(FqField(p))
        # each sample exercises every cut position i in 1..n-1; n=1 is vacuous
        for n in (2, 3, 4):
            summary = check_structural_identities(p, n, samples=100, ring=ring, seed=n)
            assert summary["ok"]
            assert summary["identities"] == 100 * (n - 1)


@criterion(5, "reduction output is reduced and its certificate re-verifies")
def test_criterion_5_reduction_certificates():
    for p in (2, 3):
        for e in (1, 2):
            ring = LaurentRing(FqField(p, e))
            for n in (1, 2, 3):
                rng = random.Random(p * 100 + e * 10 + n)
                for _ in range(100):
                    a = random_witt_vector(p, n, ring, rng)
                    cert = reduce_vector(a)
                    assert is_reduced(cert.reduced)
                    c = cert.witness
                    assert a + (c.frobenius() - c) == cert.reduced


@criterion(6, "formula lower breaks equal tower filtration breaks in 100% of cases")
def test_criterion_6_formula_matches_tower_oracle(central_results):
    assert len(central_results) == 4 * 50 + 3 * 20
    mismatches = [v for _, v, _ in central_results if not v.equal]
    assert mismatches == []
    for a, verdict, profile in central_results:
        assert verdict.formula_lower == profile.lower[: verdict.depth]


@criterion(7, "transition function maps lower breaks to upper breaks and inverts")
def test_criterion_7_transition_function_coherence(central_results):
    rng = random.Random(4242)
    for _, _, prof in central_results:
        phi, psi = hasse_herbrand(prof)
        for b, u in zip(prof.lower, prof.upper):
            assert phi(b) == u
            assert psi(u) == b
            assert psi(phi(Fraction(b))) == b
        for _ in range(10):
            x = Fraction(rng.randint(0, 10 * (prof.lower[-1] + 1)), rng.randint(1, 7))
            assert psi(phi(x)) == x
        assert upper_from_lower(prof.p, list(prof.lower)) == list(prof.upper)
        assert lower_from_upper(prof.p, list(prof.upper)) == list(prof.lower)


@criterion(8, "unit head with nonzero trace gives unramified part and shifted breaks")
def test_criterion_8_mixed_unit_pole_profiles():
    p = 2
    for e in (1, 2):
        ring = LaurentRing(FqField(p, e))
        rng = random.Random(50 + e)
        for _ in range(20):
            u = random_unit_nonzero_trace(ring, rng)
            m = rng.choice([1, 3, 5, 7, 9])
            a = WittVec(p, 2, ring, (u, ring.monomial(-m)))
            prof = full_profile(a)
            assert prof.residue_degree == p
            assert prof.ram_index == p
            assert prof.upper == (m,)
            assert prof.lower == (m,)
            assert prof.minus_one_break

            single = WittVec(p, 1, ring, (ring.monomial(-m),))
            assert full_profile(shift_to_length(single, 2)) == full_profile(single)


def _run_cli(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue()


@criterion(9, "problem files round-trip through parse/print; seeded CLI reruns match")
def test_criterion_9_cli_round_trip_and_determinism():
    configs = [(2, 1, 1), (2, 1, 2), (2, 1, 3), (2, 2, 1), (2, 2, 2),
               (3, 1, 1), (3, 1, 2), (3, 1, 3), (3, 2, 2), (5, 1, 1)]
    rng = random.Random(909)
    corpus = []
    for rep in range(2):
        for p, e, n in configs:
            field = FqField(p, e)
            ring = LaurentRing(field)
            a = random_witt_vector(p, n, ring, rng)
            doc = {
                "p": p,
                "residue_field": {"degree": e},
                "n": n,
                "components": [laurent_to_pairs(c) for c in a.comps],
            }
            if e > 1 and rep == 0:
                doc["residue_field"]["modulus"] = list(field.modulus)
            corpus.append(json.dumps(doc))
    assert len(corpus) == 20

    for text in corpus:
        f = parse_problem(text)
        printed = print_problem(f)
        assert parse_problem(printed) == f
        assert print_problem(parse_problem(printed)) == printed

    for argv in (
        ["oracle-compare", "--random", "4", "--p", "2", "--q", "4", "--n", "2",
         "--seed", "11", "--format", "json"],
        ["verify", "--seed", "3"],
    ):
        code1, out1 = _run_cli(list(argv))
        code2, out2 = _run_cli(list(argv))
        assert code1 == 0 and code2 == 0
        assert out1 == out2
