"""Scalar coefficient layer of the twisted Hirota bilinear hierarchy.

Everything here is a closed-form function of a finite root alpha:

* B_{a,b} = kappa^{-(a|b)} prod_{m=1}^{kappa-1} (1 - eta^m)^{(sigma_b^m a|b)},
* a_alpha = B_{a,a} zeta^{kappa |a_0|^2} e^{2 pi i (rho_b|a)(omega_b|a)},
* the two-route b-coefficient (direct formula vs the algebraic x -> 1 limit of the
  phase-factor product), whose equality is the scalar core of the Laplace-transform
  equivalence of the two hierarchies,
* the commutator scalar identity, and the aggregate constant
  sum_{(omega_b|a)=0} a_alpha = (1/12) sum_k (a_k^2 - 1)/a_k.

|a_0|^2 = chi (omega_b|a)^2 throughout, so no radicals ever appear.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import (CycloNumber, PuiseuxSeries, SymbolicScalar, binom_series, cyclo,
                       root_of_unity)
from .milnor import MilnorSystem, RootVector
from .orbifold import hodge_trace

Rat = Fraction


@dataclass(frozen=True)
class HqeCoefficient:
    """Exact data of a_alpha: magnitude * zeta^zeta_exponent * phase * Q^q_exponent."""

    root: RootVector
    zeta_exponent: Fraction     # kappa |alpha_0|^2; divide by kappa for the lambda power
    magnitude: CycloNumber      # B_{alpha,alpha}
    phase: CycloNumber          # e^{2 pi i (rho_b|alpha)(omega_b|alpha)}
    q_exponent: Fraction


@dataclass(frozen=True)
class BCoefficient:
    """Exponent/phase/magnitude data of b_alpha(lambda), route-independent shape."""

    lambda_exponent: Fraction
    q_exponent: Fraction
    phase: CycloNumber
    magnitude: CycloNumber


@dataclass(frozen=True)
class PhaseFactorSeries:
    """mu^{mu_exponent} * prefactor * prod_m (1 - eta^m x)^{(sigma^m a|b)} as a series in x."""

    mu_exponent: Fraction
    prefactor: SymbolicScalar
    series: PuiseuxSeries


def _cache(ms: MilnorSystem) -> dict:
    if not hasattr(ms, "_hqe_cache"):
        ms._hqe_cache = {}
    return ms._hqe_cache


def _orbit_exponents(ms: MilnorSystem, alpha: RootVector, beta: RootVector,
                     kappa: int) -> tuple[int, ...]:
    """((sigma^m alpha | beta))_{m=1..kappa-1}; the pattern repeats with period |sigma_b|."""
    h = ms.sigma_order
    head = []
    y = alpha
    for _ in range(h):
        y = ms.sigma_apply(y)
        head.append(ms.root_pairing_int(y, beta))
    return tuple(head[(m - 1) % h] for m in range(1, kappa))


def _eta_power_product(ms: MilnorSystem, kappa: int, exps: tuple[int, ...]) -> CycloNumber:
    """prod_{m=1}^{kappa-1} (1 - eta^m)^{exps[m-1]} with eta = zeta_kappa, cached.

    Grouped by exponent so the inner products are two-term multiplications and only
    one field inversion is needed.
    """
    cache = _cache(ms)
    key = ("etaprod", kappa, exps)
    if key in cache:
        return cache[key]
    groups: dict[int, list[int]] = {}
    for m, e in enumerate(exps, start=1):
        if e:
            groups.setdefault(e, []).append(m)
    one = CycloNumber.from_rational(1)
    num = one
    den = one
    for e, idxs in sorted(groups.items()):
        base = one
        for m in idxs:
            base = base * (one - cyclo(kappa, m))
        powed = base ** abs(e)
        if e > 0:
            num = num * powed
        else:
            den = den * powed
    result = num if den == one else num * den.inverse()
    cache[key] = result
    return result


def _resolve_kappa(ms: MilnorSystem, kappa: int | None) -> int:
    k0 = ms.orb.triple.kappa
    if kappa is None:
        return k0
    if kappa % ms.sigma_order:
        raise ValueError("kappa must be a multiple of |sigma_b|")
    return kappa


def b_bilinear(ms: MilnorSystem, alpha: RootVector, beta: RootVector,
               kappa: int | None = None) -> CycloNumber:
    """B_{alpha,beta} = kappa^{-(a|b)} prod_{m=1}^{kappa-1} (1-eta^m)^{(sigma^m a|b)}."""
    kap = _resolve_kappa(ms, kappa)
    pair = ms.root_pairing_int(alpha, beta)
    prod = _eta_power_product(ms, kap, _orbit_exponents(ms, alpha, beta, kap))
    return CycloNumber.from_rational(Fraction(1, kap) ** pair) * prod


def norm_sq_alpha0(ms: MilnorSystem, alpha: RootVector) -> Fraction:
    """|alpha_0|^2 = chi (omega_b|alpha)^2 for the branch-direction projection."""
    wb = ms.omega_b_pairing(alpha)
    return ms.orb.triple.chi * wb * wb


def a_coefficient(ms: MilnorSystem, alpha: RootVector,
                  kappa: int | None = None) -> HqeCoefficient:
    kap = _resolve_kappa(ms, kappa)
    wb = ms.omega_b_pairing(alpha)
    phase = root_of_unity(ms.rho_b_pairing(alpha) * wb)
    return HqeCoefficient(
        root=alpha,
        zeta_exponent=kap * norm_sq_alpha0(ms, alpha),
        magnitude=b_bilinear(ms, alpha, alpha, kap),
        phase=phase,
        q_exponent=Fraction(0))


def sum_a_alpha(ms: MilnorSystem, kappa: int | None = None) -> Fraction:
    """sum of a_alpha over roots with (omega_b|alpha) = 0; a rational number."""
    acc = CycloNumber.from_rational(0)
    for alpha in ms.finite.roots:
        if ms.omega_b_pairing(alpha) == 0:
            acc = acc + b_bilinear(ms, alpha, alpha, kappa)
    return acc.as_rational()


def constant_term_identity(ms: MilnorSystem) -> Fraction:
    """Three-way equality: sum a_alpha = (1/12) sum (a_k^2-1)/a_k = grading trace."""
    closed = sum((Fraction(a * a - 1, 12 * a) for a in ms.orb.triple.a), Fraction(0))
    trace = hodge_trace(ms.orb.triple)
    total = sum_a_alpha(ms)
    if not (total == closed == trace):
        raise AssertionError(
            f"constant-term identity failed on {ms.orb.triple.a}: "
            f"sum {total}, closed form {closed}, trace {trace}")
    return closed


def phase_factor(ms: MilnorSystem, alpha: RootVector, beta: RootVector,
                 order: Fraction | int, kappa: int | None = None) -> PhaseFactorSeries:
    """Pairwise vertex phase factor as prefactor * truncated series in x = (mu/lambda)^{1/kappa}."""
    kap = _resolve_kappa(ms, kappa)
    chi = ms.orb.triple.chi
    wa, wbeta = ms.omega_b_pairing(alpha), ms.omega_b_pairing(beta)
    a0b0 = chi * wa * wbeta
    prefactor = SymbolicScalar.monomial(
        root_of_unity(-wa * ms.rho_b_pairing(beta)), q_exponent=wa * wbeta)
    series = PuiseuxSeries.constant("x", 1)
    exps = _orbit_exponents(ms, alpha, beta, kap) + (int(ms.root_pairing(alpha, beta)),)
    for m, e in enumerate(exps, start=1):
        if e:
            series = series * binom_series(cyclo(kap, m), e, order)
    return PhaseFactorSeries(mu_exponent=-a0b0, prefactor=prefactor, series=series)


def b_via_direct(ms: MilnorSystem, alpha: RootVector,
                 kappa: int | None = None) -> BCoefficient:
    """b_alpha = B_{a,a} lambda^{-|a_0|^2} e^{|a_0|^2 C_0} e^{-2 pi i (omega_b|a)(rho_b|a)}."""
    kap = _resolve_kappa(ms, kappa)
    n0 = norm_sq_alpha0(ms, alpha)
    wb = ms.omega_b_pairing(alpha)
    return BCoefficient(
        lambda_exponent=-n0,
        q_exponent=wb * wb,  # e^{|a_0|^2 C_0} = Q^{|a_0|^2/chi}
        phase=root_of_unity(-wb * ms.rho_b_pairing(alpha)),
        magnitude=b_bilinear(ms, alpha, alpha, kap))


def b_via_limit(ms: MilnorSystem, alpha: RootVector,
                kappa: int | None = None) -> BCoefficient:
    """b~_alpha from the algebraic limit of (1 - x^kappa)^2 * B~_{a,-a} at x -> 1.

    Combining each (1 - eta^m x) factor of (1 - x^kappa)^2 with the phase-factor
    product turns every exponent into 2 - (sigma^m a|a) >= 0, so the limit is the
    plain product of the factor values at x = 1, and b~ is its inverse times the
    inverted prefactor.
    """
    kap = _resolve_kappa(ms, kappa)
    n0 = norm_sq_alpha0(ms, alpha)
    wb = ms.omega_b_pairing(alpha)
    exps = _orbit_exponents(ms, alpha, alpha, kap)
    combined = tuple(2 - e for e in exps)
    if any(e < 0 for e in combined):
        raise AssertionError("pole cancellation failed: exponent above 2 in the orbit")
    # m = kappa factor carries exponent 2 - (a|a) = 0 and drops out
    limit_value = _eta_power_product(ms, kap, combined)
    return BCoefficient(
        lambda_exponent=-n0,
        q_exponent=wb * wb,
        phase=root_of_unity(-wb * ms.rho_b_pairing(alpha)),
        magnitude=limit_value.inverse())


@dataclass
class BMatchReport:
    root: RootVector
    direct: BCoefficient
    limit: BCoefficient

    @property
    def ok(self) -> bool:
        return self.direct == self.limit


def b_coefficient_match(ms: MilnorSystem, alpha: RootVector,
                        kappa: int | None = None) -> BMatchReport:
    rep = BMatchReport(alpha, b_via_direct(ms, alpha, kappa), b_via_limit(ms, alpha, kappa))
    if not rep.ok:
        raise AssertionError(
            f"b-coefficient mismatch at {alpha}: direct {rep.direct} vs limit {rep.limit}")
    return rep


# ---------------------------------------------------------------------------
# commutator scalar identity
# ---------------------------------------------------------------------------

def _solve_rational(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve a consistent full-column-rank rational linear system."""
    m, n = len(rows), len(rows[0])
    aug = [rows[i][:] + [rhs[i]] for i in range(m)]
    pivots = []
    r = 0
    for c in range(n):
        pv = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if pv is None:
            continue
        aug[r], aug[pv] = aug[pv], aug[r]
        scale = aug[r][c]
        aug[r] = [x / scale for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    if r < n:
        raise ZeroDivisionError("system is rank-deficient")
    for i in range(r, m):
        if aug[i][n] != 0:
            raise ArithmeticError("inconsistent linear system")
    out = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        out[c] = aug[i][n]
    return out


def _inv_one_minus_sigma_star(ms: MilnorSystem, alpha: RootVector) -> list[Fraction]:
    """x with (1 - sigma_b) x = pi_*(alpha) and (x|omega_b) = 0, in root coordinates."""
    chi = ms.orb.triple.chi
    wb = ms.omega_b_pairing(alpha)
    omega = ms.weight_vector("b")
    star = [Fraction(a) - chi * wb * w for a, w in zip(alpha.finite, omega)]
    n = ms.rank
    rows = [[Fraction(int(i == j)) - ms.sigma[j][i] for i in range(n)] for j in range(n)]
    # orthogonality row: (x|omega_b) = sum_i x_i (gamma_i|omega_b) = x_b
    rows.append([Fraction(int(i == ms.node_index["b"])) for i in range(n)])
    rhs = star + [Fraction(0)]
    return _solve_rational(rows, rhs)


@dataclass
class CommutatorReport:
    lhs: CycloNumber
    rhs: CycloNumber

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def commutator_identity(ms: MilnorSystem, alpha: RootVector, beta: RootVector,
                        kappa: int | None = None) -> CommutatorReport:
    """prod_{m=1}^{kappa} (-eta^m)^{(a|sigma^m b)} = e^{pi i (a_0|b_0)}
    e^{2 pi i ((1-sigma)^{-1} a_* | b)}, both sides exact roots of unity."""
    kap = _resolve_kappa(ms, kappa)
    h = ms.sigma_order
    head = []
    y = beta
    for _ in range(h):
        y = ms.sigma_apply(y)
        head.append(ms.root_pairing_int(alpha, y))
    sign_exp = 0
    zeta_exp = 0
    for m in range(1, kap + 1):
        e = head[(m - 1) % h]
        sign_exp += e
        zeta_exp += m * e
    lhs = CycloNumber.from_rational((-1) ** (sign_exp % 2)) * cyclo(kap, zeta_exp % kap)
    chi = ms.orb.triple.chi
    half = chi * ms.omega_b_pairing(alpha) * ms.omega_b_pairing(beta) / 2
    x = _inv_one_minus_sigma_star(ms, alpha)
    pairing = ms.pairing(x, beta.finite)
    rhs = root_of_unity(half) * root_of_unity(pairing)
    return CommutatorReport(lhs, rhs)


# ---------------------------------------------------------------------------
# aggregated report
# ---------------------------------------------------------------------------

def hqe_report(ms: MilnorSystem, kappa: int | None = None) -> dict:
    """Deterministic JSON-ready record of all scalar inputs of the bilinear equation."""
    kap = _resolve_kappa(ms, kappa)
    orb = ms.orb
    exps = {}
    for i in orb.index.labels:
        if i == (0, 1):
            exps["01"] = 0
        elif i == (0, 2):
            exps["02"] = kap
        else:
            exps[f"{i[0]}.{i[1]}"] = int(orb.index.degrees[orb.index.dual(i)] * kap)
    roots = []
    for alpha in ms.finite.roots:
        coeff = a_coefficient(ms, alpha, kap)
        roots.append({
            "coords": list(alpha.finite),
            "omega_b_pairing": int(ms.omega_b_pairing(alpha)),
            "zeta_exponent": str(coeff.zeta_exponent),
            "magnitude": {"order": coeff.magnitude.order,
                          "coeffs": [str(c) for c in coeff.magnitude.coeffs]},
            "phase": {"order": coeff.phase.order,
                      "coeffs": [str(c) for c in coeff.phase.coeffs]},
        })
    return {
        "triple": list(orb.triple.a),
        "type": ms.finite.type_tag,
        "kappa": kap,
        "sigma_order": ms.sigma_order,
        "constant_term": str(constant_term_identity(ms)),
        "heisenberg_exponents": exps,
        "exponent_lattice": sorted(set(exps.values()) - {0}),
        "roots": roots,
    }
