import random
from fractions import Fraction

import pytest

from cusp_hierarchy.exactnum import CycloNumber, binom_series, cyclo
from cusp_hierarchy.hqe import (a_coefficient, b_bilinear, b_coefficient_match,
                                b_via_direct, b_via_limit, commutator_identity,
                                constant_term_identity, hqe_report, norm_sq_alpha0,
                                phase_factor, sum_a_alpha)
from cusp_hierarchy.milnor import RootVector, build_root_system
from cusp_hierarchy.orbifold import hodge_trace

TEST_TRIPLES = [(2, 2, 2), (1, 1, 1), (1, 2, 2), (1, 2, 3), (2, 3, 3), (2, 2, 4)]


def _gamma(ms, nd):
    return RootVector(tuple(int(n == nd) for n in ms.nodes))


class TestBBilinear:
    def test_leg_root_222(self):
        ms = build_root_system((2, 2, 2))
        B = b_bilinear(ms, _gamma(ms, (1, 1)), _gamma(ms, (1, 1)))
        assert B == CycloNumber.from_rational(Fraction(1, 16))

    def test_sigma_fixed_root_gives_one(self):
        ms = build_root_system((2, 2, 2))
        theta = RootVector((2, 1, 1, 1))
        assert ms.sigma_apply(theta) == theta
        assert b_bilinear(ms, theta, theta) == CycloNumber.from_rational(1)

    def test_trivial_triple(self):
        ms = build_root_system((1, 1, 1))
        r = RootVector((1,))
        assert b_bilinear(ms, r, r) == CycloNumber.from_rational(1)

    def test_d4_shorthand_per_root(self):
        # B_{a,a} = (1/4) * 2^{(sigma_b(a)|a)} on every D4 root
        ms = build_root_system((2, 2, 2))
        for alpha in ms.finite.roots:
            B = b_bilinear(ms, alpha, alpha).as_rational()
            short = Fraction(1, 4) * Fraction(2) ** int(
                ms.root_pairing(ms.sigma_apply(alpha), alpha))
            assert B == short


class TestACoefficient:
    def test_leg_roots_222(self):
        ms = build_root_system((2, 2, 2))
        for k in (1, 2, 3):
            for sign in (1, -1):
                alpha = _gamma(ms, (k, 1)).scale(sign)
                c = a_coefficient(ms, alpha)
                assert c.zeta_exponent == 0
                assert c.phase == CycloNumber.from_rational(1)
                assert c.magnitude.as_rational() == Fraction(1, 16)
                assert c.q_exponent == 0

    def test_sum_222(self):
        ms = build_root_system((2, 2, 2))
        assert sum_a_alpha(ms) == Fraction(3, 8)

    @pytest.mark.parametrize("a", TEST_TRIPLES)
    def test_three_way_constant(self, a):
        ms = build_root_system(a)
        value = constant_term_identity(ms)
        assert value == hodge_trace(ms.orb.triple)

    def test_norm_sq_alpha0(self):
        ms = build_root_system((2, 2, 2))
        assert norm_sq_alpha0(ms, _gamma(ms, "b")) == Fraction(1, 2)
        assert norm_sq_alpha0(ms, _gamma(ms, (1, 1))) == 0


class TestBMatch:
    @pytest.mark.parametrize("a", TEST_TRIPLES)
    def test_every_root(self, a):
        ms = build_root_system(a)
        for alpha in ms.finite.roots:
            rep = b_coefficient_match(ms, alpha)
            assert rep.ok

    def test_gamma_b_exponents_222(self):
        ms = build_root_system((2, 2, 2))
        bc = b_via_direct(ms, _gamma(ms, "b"))
        assert bc.lambda_exponent == Fraction(-1, 2)
        assert bc.q_exponent == 1
        assert b_via_limit(ms, _gamma(ms, "b")) == bc

    def test_leg_root_value_222(self):
        ms = build_root_system((2, 2, 2))
        bc = b_via_direct(ms, _gamma(ms, (1, 1)))
        assert bc.lambda_exponent == 0 and bc.q_exponent == 0
        assert bc.magnitude.as_rational() == Fraction(1, 16)

    def test_limit_route_via_series_evaluation(self):
        # small-kappa cross-check: multiply the phase-factor series by (1 - x^4)^2
        # and evaluate at x = 1; must agree with the factor-level limit
        from cusp_hierarchy.exactnum import PuiseuxSeries, SymbolicScalar
        ms = build_root_system((2, 2, 2))
        kap = 4
        poly = PuiseuxSeries("x", {(Fraction(0), 0): SymbolicScalar.from_rational(1),
                                   (Fraction(kap), 0): SymbolicScalar.from_rational(-1)})
        for alpha in ms.finite.roots:
            pf = phase_factor(ms, alpha, -alpha, 2 * kap)
            series = pf.series * poly * poly
            value = series.evaluate_at_one().constant_cyclo()
            limit = b_via_limit(ms, alpha)
            # series value = magnitude^{-1} (prefactor handled separately)
            assert value * limit.magnitude == CycloNumber.from_rational(1)


class TestKappaStability:
    @pytest.mark.parametrize("a", [(2, 2, 2), (1, 2, 2)])
    @pytest.mark.parametrize("factor", [2, 3])
    def test_a_data_and_b_match_stable(self, a, factor):
        ms = build_root_system(a)
        k0 = ms.orb.triple.kappa
        for alpha in ms.finite.roots:
            c1 = a_coefficient(ms, alpha)
            c2 = a_coefficient(ms, alpha, factor * k0)
            assert c1.magnitude == c2.magnitude
            assert c1.phase == c2.phase
            assert c1.zeta_exponent / k0 == c2.zeta_exponent / (factor * k0)
            assert b_via_direct(ms, alpha, factor * k0) == \
                b_via_limit(ms, alpha, factor * k0) == b_via_direct(ms, alpha)

    def test_rejects_non_multiple(self):
        ms = build_root_system((2, 2, 2))
        with pytest.raises(ValueError):
            b_bilinear(ms, _gamma(ms, "b"), _gamma(ms, "b"), kappa=3)


class TestPhaseFactor:
    def test_orthogonal_cross_leg_trivial(self):
        ms = build_root_system((2, 2, 2))
        pf = phase_factor(ms, _gamma(ms, (1, 1)), _gamma(ms, (2, 1)), 8)
        assert pf.mu_exponent == 0
        assert len(pf.series.terms) == 1
        assert pf.series.coefficient(0).as_rational() == 1
        assert pf.prefactor.coefficient(0, 0, 0).as_rational() == 1

    def test_leading_term_is_one(self):
        ms = build_root_system((2, 3, 3))
        rng = random.Random(1)
        for _ in range(10):
            x, y = rng.choice(ms.finite.roots), rng.choice(ms.finite.roots)
            pf = phase_factor(ms, x, y, 6)
            assert pf.series.coefficient(0).as_rational() == 1

    def test_opposite_leg_roots_product_shape(self):
        ms = build_root_system((2, 2, 2))
        g1 = _gamma(ms, (1, 1))
        pf = phase_factor(ms, g1, -g1, 6)
        i = cyclo(4, 1)
        expect = binom_series(i, 2, 6) * binom_series(cyclo(4, 2), -2, 6) * \
            binom_series(cyclo(4, 3), 2, 6) * binom_series(cyclo(4, 0), -2, 6)
        assert (pf.series - expect).is_zero()

    def test_pole_order_at_x_one(self):
        # the m = kappa factor contributes exactly (alpha|beta) to the order at x = 1:
        # for beta = -alpha the combined exponent with (1-x^kappa)^2 cancels to zero
        ms = build_root_system((2, 2, 2))
        for alpha in ms.finite.roots:
            exps = [int(ms.root_pairing(ms.sigma_power_apply(alpha, m), -alpha))
                    for m in range(1, 5)]
            assert exps[-1] == -2  # m = kappa term
            assert all(e + 2 >= 0 for e in exps)


class TestCommutator:
    def test_same_leg_root_222(self):
        ms = build_root_system((2, 2, 2))
        g1 = _gamma(ms, (1, 1))
        rep = commutator_identity(ms, g1, g1)
        assert rep.ok
        assert rep.lhs == CycloNumber.from_rational(1)

    def test_cross_leg_trivial(self):
        ms = build_root_system((2, 2, 2))
        rep = commutator_identity(ms, _gamma(ms, (1, 1)), _gamma(ms, (2, 1)))
        assert rep.ok and rep.lhs == CycloNumber.from_rational(1)

    @pytest.mark.parametrize("a", [(2, 2, 2), (1, 2, 3), (2, 3, 3)])
    def test_random_pairs(self, a):
        ms = build_root_system(a)
        rng = random.Random(13)
        roots = ms.finite.roots
        for _ in range(100):
            rep = commutator_identity(ms, rng.choice(roots), rng.choice(roots))
            assert rep.ok

    @pytest.mark.parametrize("a", [(2, 2, 2), (2, 3, 3)])
    def test_exchange_symmetry(self, a):
        ms = build_root_system(a)
        rng = random.Random(14)
        roots = ms.finite.roots
        for _ in range(50):
            x, y = rng.choice(roots), rng.choice(roots)
            r1 = commutator_identity(ms, x, y)
            r2 = commutator_identity(ms, y, x)
            assert r1.lhs * r2.lhs == CycloNumber.from_rational(1)


class TestReport:
    def test_222(self):
        rep = hqe_report(build_root_system((2, 2, 2)))
        assert rep["constant_term"] == "3/8"
        assert rep["kappa"] == 4
        assert rep["exponent_lattice"] == [2, 4]
        assert len(rep["roots"]) == 24

    def test_111_single_direction(self):
        rep = hqe_report(build_root_system((1, 1, 1)))
        assert rep["exponent_lattice"] == [1]  # only m_02 = kappa = 1
        assert [r["coords"] for r in rep["roots"]] == [[-1], [1]]

    def test_233_exponents(self):
        rep = hqe_report(build_root_system((2, 3, 3)))
        vals = sorted(rep["heisenberg_exponents"].values())
        assert vals == [0, 4, 4, 6, 8, 8, 12]

    def test_json_serializable_and_deterministic(self):
        import json
        ms = build_root_system((2, 3, 3))
        s1 = json.dumps(hqe_report(ms), sort_keys=True)
        s2 = json.dumps(hqe_report(build_root_system((2, 3, 3))), sort_keys=True)
        assert s1 == s2
