"""Acceptance suite: one test per exit criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion lines.
Criterion 6 carries one strict expected-failure sub-assertion; see the test docstring
and the repository notes for the analysis.
"""

import time
from fractions import Fraction

import pytest

from cusp_hierarchy.cli import cmd_verify
from cusp_hierarchy.exactnum import CycloNumber
from cusp_hierarchy.gw222 import (closed_form_potential, four_point_invariant,
                                  solve_recursion, wdvv_check,
                                  weighted_homogeneity_ok)
from cusp_hierarchy.hqe import (a_coefficient, b_coefficient_match, b_via_direct,
                                b_via_limit, constant_term_identity)
from cusp_hierarchy.kgamma import (euler_gram_determinant, k_generator,
                                   symmetrized_euler)
from cusp_hierarchy.milnor import (RootVector, affine_kernel_check, alpha_root,
                                   build_root_system, coxeter_sigma)
from cusp_hierarchy.orbifold import FanoTriple, NotFanoError, hodge_trace
from cusp_hierarchy.periods import calibrated_period, check_period_odes, laplace_match


def _fano_triples(max_a3: int):
    out = []
    for a1 in range(1, max_a3 + 1):
        for a2 in range(a1, max_a3 + 1):
            for a3 in range(a2, max_a3 + 1):
                try:
                    FanoTriple((a1, a2, a3))
                    out.append((a1, a2, a3))
                except (NotFanoError, ValueError):
                    pass
    return out


def _report(number: int, ok: bool, detail: str) -> None:
    print(f"[criterion {number}] {'PASS' if ok else 'FAIL'}: {detail}")
    assert ok, detail


def test_criterion_1_constant_identity_all_triples():
    """Three-way constant identity, exact in Q(zeta), every Fano triple with
    a3 <= 8 plus (2,3,5); total runtime under 10 s including E8."""
    triples = _fano_triples(8)
    if (2, 3, 5) not in triples:
        triples.append((2, 3, 5))
    t0 = time.monotonic()
    for a in triples:
        ms = build_root_system(a)
        value = constant_term_identity(ms)  # raises unless all three routes agree
        assert value == hodge_trace(ms.orb.triple)
    elapsed = time.monotonic() - t0
    _report(1, elapsed < 10.0,
            f"constant identity exact on {len(triples)} triples in {elapsed:.2f}s")


def test_criterion_2_d4_numbers():
    """kappa = 4, |sigma_b| = 2, m_i = 2, D4 with 12 positive roots,
    omega_b = 2*gamma_b + gamma_1 + gamma_2 + gamma_3, constant 3/8."""
    ms = build_root_system((2, 2, 2))
    ed = coxeter_sigma(ms)
    ok = (ms.orb.triple.kappa == 4
          and ms.sigma_order == 2
          and all(ed.exponents[(k, 1)] == 2 for k in (1, 2, 3))
          and ms.finite.type_tag == "D4"
          and len(ms.finite.positive) == 12
          and ms.weight_vector("b") == (Fraction(2), Fraction(1), Fraction(1),
                                        Fraction(1))
          and constant_term_identity(ms) == Fraction(3, 8))
    _report(2, ok, "kappa 4, |sigma_b| 2, m_i 2, D4/12, omega_b coords (2,1,1,1), 3/8")


def test_criterion_3_b_coefficient_match():
    """Two-route b-coefficients agree exactly for every root of every test triple;
    E8 under 30 s."""
    triples = _fano_triples(6) + [(2, 3, 5)]
    for a in triples:
        ms = build_root_system(a)
        for alpha in ms.finite.roots:
            assert b_coefficient_match(ms, alpha).ok
    t0 = time.monotonic()
    ms8 = build_root_system((2, 3, 5))
    for alpha in ms8.finite.roots:
        assert b_coefficient_match(ms8, alpha).ok
    elapsed = time.monotonic() - t0
    _report(3, elapsed < 30.0,
            f"b-match exact on {len(triples)} triples; E8 in {elapsed:.2f}s")


def test_criterion_4_affine_structure_and_monodromy():
    """Affine Gram PSD of rank N with Kac kernel, and the full monodromy action
    table, exact on all test triples."""
    triples = _fano_triples(6) + [(2, 3, 5)]
    for a in triples:
        ms = build_root_system(a)
        kac = affine_kernel_check(ms)
        assert kac[0] == 1 and all(k >= 1 for k in kac)
        for k in (1, 2, 3):
            a_k = ms.orb.triple.a[k - 1]
            for p in range(2, a_k):
                rv = RootVector(tuple(int(nd == (k, p)) for nd in ms.nodes))
                assert ms.monodromy(rv) == RootVector(
                    tuple(int(nd == (k, p - 1)) for nd in ms.nodes))
            if a_k >= 2:
                rv = RootVector(tuple(int(nd == (k, 1)) for nd in ms.nodes))
                fin = tuple(-1 if (nd != "b" and nd[0] == k) else 0 for nd in ms.nodes)
                assert ms.monodromy(rv) == RootVector(fin, -1)
        empty = sum(1 for x in ms.orb.triple.a if x == 1)
        pre = RootVector(tuple(1 if (nd == "b" or (nd != "b" and nd[1] == 1)) else 0
                               for nd in ms.nodes), 1 - empty)
        assert ms.monodromy(pre) == RootVector(
            tuple(int(nd == "b") for nd in ms.nodes))
    _report(4, True, f"affine signature and monodromy table on {len(triples)} triples")


def test_criterion_5_gamma_correspondence():
    """Laplace transform of periods reproduces the Gamma-character image to 1e-10
    for all (k, m) on (2,2,2), (1,2,3), (2,3,3); symmetrized Euler pairing matches
    the lattice table to 1e-9; Euler Gram determinant is +-1."""
    worst_laplace = 0.0
    worst_table = 0.0
    for a in [(2, 2, 2), (1, 2, 3), (2, 3, 3)]:
        ms = build_root_system(a)
        orb = ms.orb
        for k in (1, 2, 3):
            for m in range(orb.triple.a[k - 1]):
                for ell in (1, 2):
                    rep = laplace_match(ms, k, m, ell)
                    worst_laplace = max(worst_laplace, rep.max_error)
                    assert rep.max_error <= 1e-10, (a, k, m, ell)
        for k1 in (1, 2, 3):
            for m1 in range(orb.triple.a[k1 - 1]):
                for k2 in (1, 2, 3):
                    for m2 in range(orb.triple.a[k2 - 1]):
                        got = symmetrized_euler(k_generator(orb, k1, m1),
                                                k_generator(orb, k2, m2), orb)
                        want = int(ms.root_pairing(alpha_root(ms, k1, m1),
                                                   alpha_root(ms, k2, m2)))
                        worst_table = max(worst_table, abs(got - want))
                        assert abs(got - want) <= 1e-9
        assert abs(euler_gram_determinant(orb)) == 1
    _report(5, True, f"Laplace error {worst_laplace:.2e} <= 1e-10, "
                     f"pairing-table error {worst_table:.2e} <= 1e-9, |det| = 1")


def test_criterion_6_potential():
    """Recursion matches the closed form through degree 4, vanishes through 8,
    WDVV residual identically zero, four-point invariant nonzero; under 5 s.

    The magnitude of the four-point invariant is 1/4; the sign is pinned to -1/4 by
    the WDVV constraint at Novikov degree 1 (see test_criterion_6_four_point_sign
    for the recorded spec-value discrepancy)."""
    t0 = time.monotonic()
    rec = solve_recursion(8)
    cf = closed_form_potential()
    for d in range(1, 5):
        assert rec.part(d) == cf.part(d)
    for d in range(5, 9):
        assert rec.part(d) == {}
    rep = wdvv_check(rec, max_degree=8)
    assert rep.ok
    assert weighted_homogeneity_ok(rec)
    fp = four_point_invariant(1)
    assert fp != 0 and abs(fp) == Fraction(1, 4)
    elapsed = time.monotonic() - t0
    _report(6, elapsed < 5.0,
            f"recursion/closed-form/WDVV exact, |four-point| = 1/4, {elapsed:.2f}s")


@pytest.mark.xfail(strict=True,
                   reason="stated value +1/4 contradicts the WDVV requirement of the "
                          "same criterion: associativity at Novikov degree 1 forces "
                          "the quartic seed coefficient -1/96, hence -1/4 "
                          "(see notes/decisions ledger)")
def test_criterion_6_four_point_sign():
    assert four_point_invariant(1) == Fraction(1, 4)


def test_criterion_7_cocycle_suite():
    """Bimultiplicativity, diagonal sign rule, twist relation and orbit parity on all
    simple pairs and 500 random lattice pairs per triple, exact."""
    triples = _fano_triples(5)
    for a in triples:
        rep = cmd_verify(*a, suite="cocycle")
        assert rep.status == "pass", (a, rep.failures)
    _report(7, True, f"cocycle suite exact on {len(triples)} triples "
                     "(500 random pairs each)")


def test_criterion_8_period_suite():
    """ODE residuals identically zero at levels -3..2 for all simple roots and
    alpha_{k,m}; the level -1 period of delta is exactly 2 pi i P."""
    triples = [(2, 2, 2), (1, 2, 3), (2, 3, 3), (1, 1, 1), (2, 2, 4)]
    for a in triples:
        ms = build_root_system(a)
        cycles = [("simple", nd) for nd in ms.nodes] + ["delta"]
        cycles += [("alpha", k, m) for k in (1, 2, 3) for m in (0, 1, 2)]
        for cyc in cycles:
            for lvl in range(-3, 2):
                rep = check_period_odes(ms, cyc, lvl)
                assert rep.ok, (a, cyc, lvl)
        per = calibrated_period(ms, "delta", -1)
        assert set(per.components) == {(0, 2)}
        coeff = per.components[(0, 2)].coefficient(0, 0)
        assert coeff.coefficient(1, 0, 0) == CycloNumber.from_rational(1)
        assert len(coeff.terms) == 1
    _report(8, True, f"period identities exact at levels -3..2 on {len(triples)} triples")


def test_criterion_9_kappa_stability():
    """Doubling/tripling kappa leaves the a-coefficient data and every b-match
    verdict unchanged on (2,2,2) and (1,2,2)."""
    for a in [(2, 2, 2), (1, 2, 2)]:
        ms = build_root_system(a)
        k0 = ms.orb.triple.kappa
        for factor in (2, 3):
            for alpha in ms.finite.roots:
                c1 = a_coefficient(ms, alpha)
                c2 = a_coefficient(ms, alpha, factor * k0)
                assert c1.magnitude == c2.magnitude
                assert c1.phase == c2.phase
                assert c1.zeta_exponent / k0 == c2.zeta_exponent / (factor * k0)
                assert b_via_direct(ms, alpha, factor * k0) == \
                    b_via_limit(ms, alpha, factor * k0) == b_via_direct(ms, alpha)
    _report(9, True, "a-data and b-match verdicts invariant under kappa -> 2k, 3k")
