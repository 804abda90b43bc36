"""Truncated Witt-vector arithmetic over concrete coefficient rings."""

import random

import pytest

from wittbreaks.errors import CutOutOfRange, ShapeMismatch
from wittbreaks.field import FqField, LaurentRing
from wittbreaks.sampling import random_witt_vector
from wittbreaks.witt import WittVec, check_structural_identities, head, tail
from wittbreaks.wittpoly import ZZ, phantom_poly


def _ivec(p, comps):
    return WittVec(p, len(comps), ZZ, tuple(comps))


class TestRingAxiomsViaPhantom:
    """Over the integers the phantom map is injective enough to spot-check
    arithmetic: each phantom coordinate must be additive/multiplicative."""

    @pytest.mark.parametrize("p", [2, 3])
    def test_phantom_homomorphism_random(self, p):
        rng = random.Random(7)
        n = 3
        for _ in range(25):
            a = _ivec(p, [rng.randint(-9, 9) for _ in range(n)])
            b = _ivec(p, [rng.randint(-9, 9) for _ in range(n)])
            s, m, na = a + b, a * b, -a
            for i in range(n):
                phi = phantom_poly(p, i)
                va = phi.evaluate(list(a.comps[: i + 1]), ZZ)
                vb = phi.evaluate(list(b.comps[: i + 1]), ZZ)
                assert phi.evaluate(list(s.comps[: i + 1]), ZZ) == va + vb
                assert phi.evaluate(list(m.comps[: i + 1]), ZZ) == va * vb
                assert phi.evaluate(list(na.comps[: i + 1]), ZZ) == -va

    def test_frozen_sum_p2(self):
        # (2,3) + (1,5): first slot 3, second slot 3+5-2*1 = 6
        s = _ivec(2, [2, 3]) + _ivec(2, [1, 5])
        assert s.comps == (3, 6)

    def test_zero_and_one(self):
        a = _ivec(2, [5, -1, 2])
        assert a + WittVec.zeros(2, 3, ZZ) == a
        assert a * WittVec.one(2, 3, ZZ) == a

    def test_scalar_matches_repeated_sum(self):
        a = _ivec(3, [2, -1])
        acc = WittVec.zeros(3, 2, ZZ)
        for k in range(7):
            assert a.scalar(k) == acc
            acc = acc + a

    def test_sub_is_add_neg(self):
        a, b = _ivec(2, [3, 1, -2]), _ivec(2, [1, 4, 0])
        assert a - b == a + (-b)
        assert (a - b) + b == a


class TestCharPOperations:
    @pytest.mark.parametrize("p", [2, 3])
    def test_frobenius_is_ring_hom(self, p):
        ring = LaurentRing(FqField(p))
        rng = random.Random(13)
        for _ in range(20):
            a = random_witt_vector(p, 3, ring, rng)
            b = random_witt_vector(p, 3, ring, rng)
            assert (a + b).frobenius() == a.frobenius() + b.frobenius()
            assert (a * b).frobenius() == a.frobenius() * b.frobenius()

    @pytest.mark.parametrize("p", [2, 3])
    @pytest.mark.parametrize("n", [1, 2, 4])
    def test_times_p_is_p_fold_sum(self, p, n):
        ring = LaurentRing(FqField(p))
        rng = random.Random(100 * p + n)
        for _ in range(30):
            a = random_witt_vector(p, n, ring, rng)
            assert a.times_p() == a.scalar(p)

    def test_times_p_shape(self):
        ring = LaurentRing(FqField(2))
        t = ring.t()
        a = WittVec(2, 3, ring, (t, ring.one(), ring.monomial(-1)))
        assert a.times_p().comps == (ring.zero(), t.pth_power(), ring.one())

    def test_p_power_multiples_of_one(self):
        # p^i * 1 has a 1 exactly in slot i
        for p in (2, 3):
            ring = FqField(p)
            one = WittVec.one(p, 3, ring)
            for i in range(3):
                vec = one.scalar(p**i)
                for j, c in enumerate(vec.comps):
                    assert c.is_zero() == (j != i)


class TestHeadTail:
    def setup_method(self):
        self.ring = LaurentRing(FqField(2))
        self.rng = random.Random(5)

    def test_cut_range(self):
        a = random_witt_vector(2, 3, self.ring, self.rng)
        with pytest.raises(CutOutOfRange):
            head(a, 0)
        with pytest.raises(CutOutOfRange):
            tail(a, 3)

    def test_zero_patterns(self):
        a = random_witt_vector(2, 4, self.ring, self.rng)
        h, t = head(a, 2), tail(a, 2)
        assert h.comps[2:] == (self.ring.zero(), self.ring.zero())
        assert t.comps[:2] == (self.ring.zero(), self.ring.zero())
        assert h.comps[:2] == a.comps[:2]
        assert t.comps[2:] == a.comps[2:]

    @pytest.mark.parametrize("p,n", [(2, 3), (3, 4)])
    def test_structural_identity_suite(self, p, n):
        ring = LaurentRing(FqField(p))
        summary = check_structural_identities(p, n, samples=20, ring=ring, seed=2)
        assert summary["ok"]
        assert summary["identities"] == 20 * (n - 1)


class TestShapeGuards:
    def test_mixed_shapes_rejected(self):
        with pytest.raises(ShapeMismatch):
            _ivec(2, [1, 2]) + _ivec(2, [1, 2, 3])
        with pytest.raises(ShapeMismatch):
            _ivec(2, [1, 2]) + _ivec(3, [1, 2])
        with pytest.raises(ShapeMismatch):
            WittVec(2, 2, ZZ, (1,))
