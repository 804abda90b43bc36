"""Explicit-tower oracle: valuations, Galois action, filtration breaks."""

import random

import pytest

from wittbreaks.errors import (
    NotReduced,
    ShapeMismatch,
    UnsupportedDepth,
    ZeroElement,
)
from wittbreaks.field import FqField, LaurentRing
from wittbreaks.sampling import random_strongly_reduced_vector
from wittbreaks.tower import (
    GaloisElt,
    apply_galois,
    build_tower,
    compare,
    filtration_breaks,
    reduce_rhs,
    tower_valuation,
)
from wittbreaks.witt import WittVec
from wittbreaks.wittpoly import sum_poly_first_components


def _vec(ring, p, exps):
    return WittVec(p, len(exps), ring, tuple(ring.monomial(e) for e in exps))


@pytest.fixture
def worked_tower():
    """Depth-2 tower over F_2((t)) for the vector (t^-1, t^-3)."""
    ring = LaurentRing(FqField(2))
    a = _vec(ring, 2, [-1, -3])
    return a, build_tower(a, 2)


class TestWorkedExample:
    def test_generator_valuations(self, worked_tower):
        _, tw = worked_tower
        assert [lvl.gen_valuation for lvl in tw.levels[1:]] == [-1, -5]

    def test_level2_rhs_and_witness(self, worked_tower):
        _, tw = worked_tower
        lvl1 = tw.levels[1]
        x0 = lvl1.gen()
        t_inv = lvl1.embed(tw.base.monomial(-1))
        t_inv2 = lvl1.embed(tw.base.monomial(-2))
        # raw rhs t^-3 + x_0 t^-1 reduces to x_0 t^-2 with witness x_0 t^-1
        assert tw.levels[2].rhs == x0 * t_inv2
        assert tw.witnesses[1] == x0 * t_inv

    def test_defining_relation_for_witt_generator(self, worked_tower):
        # the solution-vector component X_1 = x_1' + w satisfies
        # X_1^p - X_1 = raw rhs = t^-3 + x_0 t^-1, lifted to level 2
        _, tw = worked_tower
        lvl2 = tw.levels[2]
        x1 = tw.witt_gens[1]
        lhs = x1 * x1 - x1
        lvl1 = tw.levels[1]
        raw = lvl1.embed(tw.base.monomial(-3)) + lvl1.gen() * lvl1.embed(
            tw.base.monomial(-1)
        )
        assert lhs == lvl2.embed(raw)

    def test_filtration_breaks(self, worked_tower):
        _, tw = worked_tower
        assert filtration_breaks(tw) == [1, 5]

    def test_sigma_orders(self):
        assert GaloisElt(1, 4).order() == 4
        assert GaloisElt(3, 4).order() == 4
        assert GaloisElt(2, 4).order() == 2
        assert GaloisElt(0, 4).order() == 1
        assert GaloisElt(6, 9).order() == 3

    def test_sigma_respects_defining_equation(self, worked_tower):
        # wp(sigma(x_1')) must equal sigma(g) for every sigma
        _, tw = worked_tower
        lvl2 = tw.levels[2]
        g2 = lvl2.embed(lvl2.rhs)
        x1p = lvl2.gen()
        for k in (1, 2, 3):
            sigma = tw.galois(k)
            image = apply_galois(tw, x1p, sigma)
            lhs = image * image - image
            assert lhs == apply_galois(tw, g2, sigma)

    def test_sigma_is_multiplicative(self, worked_tower):
        _, tw = worked_tower
        rng = random.Random(9)
        lvl2 = tw.levels[2]
        sigma = tw.galois(1)
        for _ in range(5):
            x = lvl2.random_element(rng)
            y = lvl2.random_element(rng)
            assert apply_galois(tw, x * y, sigma) == apply_galois(
                tw, x, sigma
            ) * apply_galois(tw, y, sigma)

    def test_order_two_element_fixes_first_level(self, worked_tower):
        _, tw = worked_tower
        sigma = tw.galois(2)
        lvl1_gen_at_2 = tw.levels[2].embed(tw.levels[1].gen())
        assert apply_galois(tw, lvl1_gen_at_2, sigma) == lvl1_gen_at_2


class TestTowerValuation:
    def test_uniformizer_has_valuation_one(self, worked_tower):
        _, tw = worked_tower
        assert tower_valuation(tw.uniformizer()) == 1

    def test_base_elements_scale_by_ramification_index(self, worked_tower):
        _, tw = worked_tower
        t_at_top = tw.levels[2].embed_from_base(tw.base.t())
        assert tower_valuation(t_at_top) == 4

    def test_zero_rejected(self, worked_tower):
        _, tw = worked_tower
        with pytest.raises(ZeroElement):
            tower_valuation(tw.levels[2].zero())

    def test_multiplicativity(self, worked_tower):
        _, tw = worked_tower
        rng = random.Random(31)
        lvl2 = tw.levels[2]
        for _ in range(10):
            x = lvl2.random_element(rng)
            y = lvl2.random_element(rng)
            if x.is_zero() or y.is_zero():
                continue
            assert tower_valuation(x * y) == tower_valuation(x) + tower_valuation(y)


class TestReduceRhs:
    def test_prime_to_p_input_passes_through(self):
        ring = LaurentRing(FqField(2))
        a = _vec(ring, 2, [-1, -3])
        tw = build_tower(a, 1)
        g, w = reduce_rhs(tw.levels[0], ring.monomial(-3))
        assert g == ring.monomial(-3)
        assert w.is_zero()

    def test_nontrivial_unit_needed_over_f4(self):
        # second component g * t^-3: the cancelling unit is the cube root
        # of g's leading data, not 1
        f4 = FqField(2, 2)
        ring = LaurentRing(f4)
        gen = f4.gen()
        a = WittVec(2, 2, ring, (ring.monomial(-1), ring.monomial(-3, gen)))
        tw = build_tower(a, 2)
        w = tw.witnesses[1]
        # witness = u * x_0 * t^-1 with u^2 matching the g coefficient: u = g+1
        lvl1 = tw.levels[1]
        expected = lvl1.gen() * lvl1.embed(ring.monomial(-1, gen + f4.one()))
        assert w == expected
        assert filtration_breaks(tw) == [1, 5]


class TestBuildTowerGuards:
    def setup_method(self):
        self.ring = LaurentRing(FqField(2))

    def test_depth_range(self):
        a = _vec(self.ring, 2, [-1, -3])
        with pytest.raises(UnsupportedDepth):
            build_tower(a, 0)
        with pytest.raises(UnsupportedDepth):
            build_tower(a, 4)
        with pytest.raises(UnsupportedDepth):
            build_tower(a, 3)  # depth exceeds vector length

    def test_requires_reduced_negative_lead(self):
        bad = WittVec(2, 2, self.ring, (self.ring.monomial(-2), self.ring.zero()))
        with pytest.raises(NotReduced):
            build_tower(bad, 2)
        unit_lead = WittVec(2, 2, self.ring, (self.ring.one(), self.ring.monomial(-1)))
        with pytest.raises(NotReduced):
            build_tower(unit_lead, 2)

    def test_mixed_level_arithmetic_rejected(self):
        a = _vec(self.ring, 2, [-1, -3])
        tw = build_tower(a, 2)
        with pytest.raises(ShapeMismatch):
            tw.levels[2].gen() + tw.levels[1].gen()


class TestCompare:
    def test_frozen_profiles(self):
        ring2 = LaurentRing(FqField(2))
        ring3 = LaurentRing(FqField(3))
        cases = [
            (_vec(ring2, 2, [-1, -3]), (1, 5)),
            (_vec(ring2, 2, [-3, -1]), (3, 9)),
            (_vec(ring3, 3, [-1, -1]), (1, 7)),
        ]
        for a, lower in cases:
            verdict = compare(a)
            assert verdict.equal
            assert verdict.tower_lower == lower

    def test_depth_three(self):
        ring = LaurentRing(FqField(2))
        a = _vec(ring, 2, [-1, -3, -9])
        verdict = compare(a, 3)
        assert verdict.equal
        assert verdict.tower_lower == (1, 5, 29)

    def test_random_small_batch(self):
        ring = LaurentRing(FqField(3, 2))
        rng = random.Random(77)
        for _ in range(5):
            a = random_strongly_reduced_vector(3, 2, ring, rng)
            assert compare(a).equal

    def test_collapse_valuation_inside_first_level(self):
        # v(f_j(x_0, a_0)) = -(p^(j+1) - p + 1) * m_0 in the level-1 field
        for p in (2, 3):
            ring = LaurentRing(FqField(p))
            rng = random.Random(p)
            for _ in range(4):
                m0 = rng.choice([m for m in range(1, 10) if m % p])
                m1 = rng.choice([m for m in range(1, 10) if m % p])
                a = _vec(ring, p, [-m0, -m1])
                tw = build_tower(a, 2)
                lvl1 = tw.levels[1]
                x0 = lvl1.gen()
                a0 = lvl1.embed(a.comps[0])
                for j in (1, 2):
                    f = sum_poly_first_components(p, j)
                    got = tower_valuation(f.evaluate([x0, a0], lvl1))
                    assert got == -(p ** (j + 1) - p + 1) * m0
