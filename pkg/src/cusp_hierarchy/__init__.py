"""Exact computer algebra for Fano orbifold lines: affine ADE root systems from the
degeneration lattice, sign cocycles, calibrated periods, Hirota-bilinear scalar
coefficients, the Gamma-weighted K-theory pairing, and the (2,2,2) genus-0 potential."""

from .exactnum import (CycloNumber, PuiseuxSeries, SymbolicScalar, binom_series, cyclo,
                       product_one_minus_eta, root_of_unity)
from .orbifold import (CohVector, FanoTriple, IndexSet, NotFanoError, Orbifold,
                       build_orbifold, hodge_trace, intersection_form,
                       intersection_form_level0)
from .milnor import (EigenData, FiniteRootSystem, MilnorSystem, RootBasis, RootVector,
                     alpha_km, alpha_root, build_root_system, coxeter_sigma,
                     fundamental_weights, root_bases, sigma_inverse_entries)
from .cocycle import CocycleData, build_cocycle, epsilon, kappa, sf, upsilon
from .periods import (PeriodVector, calibrated_period, check_period_odes, laplace_match,
                      saito_pairing)
from .kgamma import (GammaVector, KClass, euler_gram, euler_gram_determinant,
                     euler_pairing, k_generator, k_line, k_multiply, k_unit, psi,
                     skyscraper)
from .hqe import (BCoefficient, HqeCoefficient, PhaseFactorSeries, a_coefficient,
                  b_bilinear, b_coefficient_match, commutator_identity,
                  constant_term_identity, hqe_report, phase_factor, sum_a_alpha)
from .gw222 import (GradedPotential, closed_form_potential, four_point_invariant,
                    solve_recursion, wdvv_check)

__version__ = "0.1.0"
