"""Core algebra: forms, products, adjoints, embeddings, serialization."""

import math
import random
from fractions import Fraction

import pytest

from conftest import rand_point, rand_poly
from eprbell import (
    TermBudgetError,
    WeylPolynomial,
    adjoint,
    direct_sum_form,
    from_records,
    is_self_adjoint,
    one_norm,
    point,
    symplectic_form,
    tensor_embed,
    to_records,
    weyl_multiply,
)


class TestForms:
    def test_canonical_pair(self):
        assert symplectic_form(point(1, 0), point(0, 1)) == Fraction(1, 2)

    def test_antisymmetry_diagonal(self):
        x = point(Fraction(3, 7), Fraction(-2, 5))
        assert symplectic_form(x, x) == 0

    def test_hand_value(self):
        # (2*7 - 3*5)/2 = -1/2
        assert symplectic_form(point(2, 3), point(5, 7)) == Fraction(-1, 2)

    def test_direct_sum_reduces_to_first_pair(self):
        assert direct_sum_form(point(1, 0, 0, 0), point(0, 1, 0, 0)) == Fraction(1, 2)

    def test_direct_sum_diagonal(self):
        x = point(1, 2, 3, 4)
        assert direct_sum_form(x, x) == 0

    def test_direct_sum_both_pairs(self):
        assert direct_sum_form(point(1, 0, 1, 0), point(0, 1, 0, 1)) == 1

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            symplectic_form(point(1, 0, 0, 0), point(1, 0, 0, 0))
        with pytest.raises(ValueError):
            direct_sum_form(point(1, 0), point(1, 0))

    def test_point_validation(self):
        with pytest.raises(ValueError):
            point(1, 2, 3)
        assert point("1/2", 3) == (Fraction(1, 2), Fraction(3))


class TestProduct:
    def test_generator_product_phase(self):
        p = weyl_multiply(
            WeylPolynomial.generator(point(1, 0)),
            WeylPolynomial.generator(point(0, 1)),
        )
        assert p.points() == [point(1, 1)]
        coeff = p.terms[point(1, 1)]
        assert coeff == pytest.approx(complex(math.cos(0.5), math.sin(0.5)), abs=1e-15)

    def test_identity_is_two_sided_unit(self):
        rng = random.Random(11)
        one = WeylPolynomial.identity(4)
        for _ in range(20):
            p = rand_poly(rng, 4)
            assert weyl_multiply(one, p) == p
            assert weyl_multiply(p, one) == p

    def test_generators_unitary(self):
        rng = random.Random(12)
        for dim in (2, 4):
            for _ in range(20):
                g = WeylPolynomial.generator(rand_point(rng, dim))
                assert weyl_multiply(g, adjoint(g)) == WeylPolynomial.identity(dim)

    def test_associativity(self):
        rng = random.Random(13)
        for _ in range(40):
            p, q, r = (rand_poly(rng, 4) for _ in range(3))
            left = weyl_multiply(weyl_multiply(p, q), r)
            right = weyl_multiply(p, weyl_multiply(q, r))
            assert one_norm(left - right) <= 1e-10

    def test_involution_antimultiplicative(self):
        rng = random.Random(14)
        for _ in range(40):
            p, q = rand_poly(rng, 4), rand_poly(rng, 4)
            lhs = adjoint(weyl_multiply(p, q))
            rhs = weyl_multiply(adjoint(q), adjoint(p))
            assert one_norm(lhs - rhs) <= 1e-10

    def test_product_phases_unimodular(self):
        rng = random.Random(21)
        for _ in range(40):
            g = WeylPolynomial.generator(rand_point(rng, 4))
            h = WeylPolynomial.generator(rand_point(rng, 4))
            (coeff,) = weyl_multiply(g, h).terms.values()
            assert abs(abs(coeff) - 1.0) <= 1e-12

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            weyl_multiply(WeylPolynomial.identity(2), WeylPolynomial.identity(4))

    def test_term_budget(self):
        rng = random.Random(15)
        big = WeylPolynomial(2, {rand_point(rng, 2): 1.0 for _ in range(90)})
        with pytest.raises(TermBudgetError):
            weyl_multiply(big, big, term_cap=1024)

    def test_commutation_phase_relative_position(self):
        # [W(s,0) x W(-s,0)] past [W(a,b) x W(c,d)] picks up e^{i s (b - d)}
        rng = random.Random(16)
        for _ in range(25):
            s = rand_point(rng, 2)[0]
            a, b, c, d = rand_point(rng, 4)
            u = WeylPolynomial.generator((s, Fraction(0), -s, Fraction(0)))
            w = WeylPolynomial.generator((a, b, c, d))
            uw = weyl_multiply(u, w)
            wu = weyl_multiply(w, u)
            zpt = uw.points()[0]
            ratio = uw.terms[zpt] / wu.terms[zpt]
            expected = complex(
                math.cos(float(s) * float(b - d)), math.sin(float(s) * float(b - d))
            )
            assert abs(ratio - expected) <= 1e-12

    def test_commutation_phase_total_momentum(self):
        # [W(0,t) x W(0,t)] past [W(a,b) x W(c,d)] picks up e^{-i t (a + c)};
        # the sign is pinned by the orientation of the form in the product
        # relation, via s((0,t),(a,b)) = -ta/2.
        rng = random.Random(17)
        for _ in range(25):
            t = rand_point(rng, 2)[0]
            a, b, c, d = rand_point(rng, 4)
            u = WeylPolynomial.generator((Fraction(0), t, Fraction(0), t))
            w = WeylPolynomial.generator((a, b, c, d))
            uw = weyl_multiply(u, w)
            wu = weyl_multiply(w, u)
            zpt = uw.points()[0]
            ratio = uw.terms[zpt] / wu.terms[zpt]
            expected = complex(
                math.cos(-float(t) * float(a + c)), math.sin(-float(t) * float(a + c))
            )
            assert abs(ratio - expected) <= 1e-12


class TestAdjoint:
    def test_conjugates_and_negates(self):
        p = adjoint(WeylPolynomial.generator(point(1, 2), 1j))
        assert p == WeylPolynomial.generator(point(-1, -2), -1j)

    def test_identity_self_adjoint(self):
        one = WeylPolynomial.identity(2)
        assert adjoint(one) == one

    def test_involution(self):
        rng = random.Random(18)
        for _ in range(20):
            p = rand_poly(rng, 2)
            assert adjoint(adjoint(p)) == p


class TestEmbed:
    def test_slots(self):
        g = WeylPolynomial.generator(point(1, 2), 0.5j)
        assert tensor_embed(g, 1) == WeylPolynomial.generator(point(1, 2, 0, 0), 0.5j)
        assert tensor_embed(g, 2) == WeylPolynomial.generator(point(0, 0, 1, 2), 0.5j)

    def test_no_cross_phase(self):
        rng = random.Random(19)
        for _ in range(20):
            x, y = rand_point(rng, 2), rand_point(rng, 2)
            prod = weyl_multiply(
                tensor_embed(WeylPolynomial.generator(x), 1),
                tensor_embed(WeylPolynomial.generator(y), 2),
            )
            target = (x[0], x[1], y[0], y[1])
            assert prod.terms[target] == 1.0 + 0j

    def test_bad_slot(self):
        with pytest.raises(ValueError):
            tensor_embed(WeylPolynomial.identity(2), 3)
        with pytest.raises(ValueError):
            tensor_embed(WeylPolynomial.identity(4), 1)


class TestNorms:
    def test_single_generator(self):
        assert one_norm(WeylPolynomial.generator(point(1, 1))) == 1.0

    def test_two_halves(self):
        p = WeylPolynomial(2, {point(1, 0): 0.5, point(0, 1): 0.5})
        assert one_norm(p) == 1.0

    def test_zero(self):
        assert one_norm(WeylPolynomial.zero(2)) == 0.0

    def test_self_adjoint_symmetric_pair(self):
        x = point(2, 3)
        p = WeylPolynomial.generator(x) + WeylPolynomial.generator(point(-2, -3))
        assert is_self_adjoint(p, 1e-12)

    def test_not_self_adjoint(self):
        assert not is_self_adjoint(WeylPolynomial.generator(point(1, 0), 1j), 1e-10)

    def test_phase_pair_self_adjoint(self):
        alpha = 0.8345
        phase = complex(math.cos(alpha), math.sin(alpha))
        p = WeylPolynomial(
            2, {point(1, 2): phase, point(-1, -2): phase.conjugate()}
        )
        assert is_self_adjoint(p, 1e-12)


class TestCanonicalForm:
    def test_merges_duplicate_points(self):
        p = WeylPolynomial(2, [(point(1, 0), 0.5), (point(1, 0), 0.25)])
        assert p.terms[point(1, 0)] == 0.75

    def test_drops_tiny_coefficients(self):
        p = WeylPolynomial(2, {point(1, 0): 1e-16})
        assert len(p) == 0

    def test_cancellation_drops_term(self):
        g = WeylPolynomial.generator(point(1, 0))
        assert len(g - g) == 0


class TestSerialization:
    def test_round_trip(self):
        rng = random.Random(20)
        for dim in (2, 4):
            for _ in range(10):
                p = rand_poly(rng, dim)
                assert from_records(to_records(p)) == p

    def test_rational_strings(self):
        recs = [{"point": ["1/2", "-3"], "re": 0.25, "im": -1.0}]
        p = from_records(recs)
        assert p.terms[point("1/2", -3)] == 0.25 - 1j

    def test_recanonicalizes(self):
        recs = [
            {"point": ["1", "0"], "re": 0.5, "im": 0.0},
            {"point": ["1", "0"], "re": 0.5, "im": 0.0},
        ]
        assert from_records(recs).terms[point(1, 0)] == 1.0

    def test_empty_needs_dim(self):
        with pytest.raises(ValueError):
            from_records([])
        assert from_records([], dim=4) == WeylPolynomial.zero(4)

    def test_records_sorted(self):
        p = WeylPolynomial(2, {point(3, 0): 1.0, point(-1, 0): 1.0})
        recs = to_records(p)
        assert recs[0]["point"] == ["-1", "0"]
