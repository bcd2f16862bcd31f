"""Affine ADE root systems realized inside the orbifold cohomology.

Simple roots are explicit cohomology vectors: the branch-node root is
1 + chi*P + sum phi_{k,p}, the leg roots are sum_p (zeta_k^{mp} - zeta_k^{(m-1)p}) phi_{k,p},
and at level -1 each root picks up transcendental P-terms while the imaginary root is
delta = Pi * P.  The affine system splits as Delta^(0) x Z; this module builds the
finite system by reflection-orbit closure, the branch-node Coxeter product sigma_b with
its eigen-data, fundamental weights, Kac labels, and the level-(-1) monodromy action.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .exactnum import CycloNumber, SymbolicScalar, cyclo
from .orbifold import (LABEL_ONE, LABEL_P, CohVector, FanoTriple, Label, Orbifold,
                       build_orbifold, intersection_form, intersection_form_level0)

Node = Union[str, tuple[int, int]]  # "b" or (k, p)
ORBIT_SAFETY_BOUND = 10_000


class OrbitExplosionError(RuntimeError):
    """Reflection closure exceeded the safety bound: the system is not finite."""


@dataclass(frozen=True)
class RootVector:
    """Integer coordinates over the simple roots plus an imaginary part n."""

    finite: tuple[int, ...]
    imag: int = 0

    def __add__(self, other: "RootVector") -> "RootVector":
        return RootVector(tuple(a + b for a, b in zip(self.finite, other.finite)),
                          self.imag + other.imag)

    def __sub__(self, other: "RootVector") -> "RootVector":
        return RootVector(tuple(a - b for a, b in zip(self.finite, other.finite)),
                          self.imag - other.imag)

    def __neg__(self) -> "RootVector":
        return RootVector(tuple(-a for a in self.finite), -self.imag)

    def scale(self, c: int) -> "RootVector":
        return RootVector(tuple(c * a for a in self.finite), c * self.imag)

    def height(self) -> int:
        return sum(self.finite)


@dataclass(frozen=True)
class RootBasis:
    """Simple roots (and delta at level -1) as cohomology vectors, with Gram matrix."""

    level: int
    vectors: tuple[CohVector, ...]
    delta: CohVector | None
    gram: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FiniteRootSystem:
    """Reflection-closure data of Delta^(0)."""

    roots: tuple[RootVector, ...]
    positive: tuple[RootVector, ...]
    highest_root: RootVector
    kac_labels: tuple[int, ...]
    type_tag: str


@dataclass(frozen=True)
class EigenData:
    """sigma_b matrix, its order, eigen-lines (base, scale^2), exponents, rho_b, weights."""

    sigma: tuple[tuple[int, ...], ...]
    order: int
    eigen_bases: dict[Label, CohVector]
    eigen_scale_sq: dict[Label, Fraction]
    eigenvalues: dict[Label, CycloNumber]
    exponents: dict[Label, int]
    rho_b: tuple[Fraction, ...]
    omega_b: tuple[Fraction, ...]
    weights: dict[Node, tuple[Fraction, ...]]


def _mat_mul(A, B):
    n = len(A)
    return tuple(tuple(sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n))
                 for i in range(n))


def _mat_vec(A, x):
    return tuple(sum(A[i][k] * x[k] for k in range(len(x))) for i in range(len(A)))


def _identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _fraction_inverse(A: Sequence[Sequence[Fraction]]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(A)
    aug = [[Fraction(A[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


class MilnorSystem:
    """All root-system structures attached to one Fano triple."""

    def __init__(self, orb: Orbifold):
        self.orb = orb
        triple = orb.triple
        self.nodes: tuple[Node, ...] = ("b",) + tuple(
            (k, p) for k in (1, 2, 3) for p in range(1, triple.a[k - 1]))
        self.node_index = {nd: i for i, nd in enumerate(self.nodes)}
        self.rank = len(self.nodes)
        self.cartan = self._build_cartan()
        self._coh0 = tuple(self._simple_root_coh0(nd) for nd in self.nodes)
        self._coh_m1 = tuple(self._simple_root_coh_m1(nd) for nd in self.nodes)
        self._verify_gram_matches_diagram()
        self._inv_cartan = _fraction_inverse(self.cartan)
        self._leaf_pairing = self._build_leaf_pairing()
        self.finite = self._enumerate_roots()
        self.sigma = self._build_sigma()
        self.sigma_order = self._matrix_order(self.sigma)

    # -- construction --------------------------------------------------------
    def _build_cartan(self):
        n = self.rank
        A = [[0] * n for _ in range(n)]
        for i in range(n):
            A[i][i] = 2
        for nd, i in self.node_index.items():
            if nd == "b":
                continue
            k, p = nd
            nb = "b" if p == 1 else (k, p - 1)
            j = self.node_index[nb]
            A[i][j] = A[j][i] = -1
        return tuple(tuple(row) for row in A)

    def _simple_root_coh0(self, nd: Node) -> CohVector:
        orb = self.orb
        if nd == "b":
            coords = {LABEL_ONE: SymbolicScalar.from_rational(1),
                      LABEL_P: SymbolicScalar.from_rational(orb.triple.chi)}
            for i in orb.index.twisted:
                coords[i] = SymbolicScalar.from_rational(1)
            return CohVector(orb.index, coords)
        k, m = nd
        a_k = orb.triple.a[k - 1]
        coords = {}
        for p in range(1, a_k):
            c = cyclo(a_k, m * p) - cyclo(a_k, (m - 1) * p)
            coords[(k, p)] = SymbolicScalar.from_cyclo(c)
        return CohVector(orb.index, coords)

    def _simple_root_coh_m1(self, nd: Node) -> CohVector:
        """Level -1 image: divide twisted parts by d_i, add the transcendental P-term."""
        orb = self.orb
        v0 = self._coh0[self.node_index[nd]]
        coords: dict[Label, SymbolicScalar] = {}
        for i, c in v0.coords.items():
            if i == LABEL_ONE:
                coords[LABEL_ONE] = c
            elif i == LABEL_P:
                continue
            else:
                coords[i] = SymbolicScalar.from_rational(1 / orb.index.degrees[i]) * c
        if nd == "b":
            coords[LABEL_P] = -SymbolicScalar.logq_symbol()
        else:
            k, _ = nd
            coords[LABEL_P] = SymbolicScalar.monomial(
                CycloNumber.from_rational(Fraction(-1, orb.triple.a[k - 1])), pi_power=1)
        return CohVector(orb.index, coords)

    def delta_coh(self) -> CohVector:
        return CohVector(self.orb.index, {LABEL_P: SymbolicScalar.pi_symbol()})

    def _verify_gram_matches_diagram(self):
        for lvl, vecs in ((0, self._coh0), (-1, self._coh_m1)):
            form = intersection_form_level0 if lvl == 0 else intersection_form
            for i in range(self.rank):
                for j in range(self.rank):
                    val = form(self.orb, vecs[i], vecs[j]).as_rational()
                    if val != self.cartan[i][j]:
                        raise AssertionError(
                            f"level {lvl} Gram entry ({self.nodes[i]},{self.nodes[j]}) = "
                            f"{val}, diagram says {self.cartan[i][j]}")
            d = self.delta_coh()
            for i in range(self.rank):
                if not intersection_form(self.orb, d, vecs[i]).is_zero():
                    raise AssertionError("delta not orthogonal to simple roots")
            if not intersection_form(self.orb, d, d).is_zero():
                raise AssertionError("delta has nonzero norm")

    def _build_leaf_pairing(self):
        """(gamma_j | phi_{i*}) for every node j and twisted label i."""
        table = {}
        for j, v in enumerate(self._coh0):
            for i in self.orb.index.twisted:
                dual = self.orb.basis(self.orb.index.dual(i))
                table[(j, i)] = intersection_form_level0(self.orb, v, dual).constant_cyclo()
        return table

    def _enumerate_roots(self) -> FiniteRootSystem:
        simple = [RootVector(tuple(int(i == j) for i in range(self.rank)))
                  for j in range(self.rank)]
        seen = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for rt in frontier:
                for j in range(self.rank):
                    pairing = sum(self.cartan[j][i] * rt.finite[i] for i in range(self.rank))
                    refl = list(rt.finite)
                    refl[j] -= pairing
                    cand = RootVector(tuple(refl))
                    if cand not in seen:
                        seen.add(cand)
                        nxt.append(cand)
                if len(seen) > ORBIT_SAFETY_BOUND:
                    raise OrbitExplosionError(
                        f"orbit closure exceeded {ORBIT_SAFETY_BOUND} vectors")
            frontier = nxt
        roots = tuple(sorted(seen, key=lambda r: (r.height(), r.finite)))
        positive = tuple(r for r in roots if r.height() > 0)
        highest = max(positive, key=lambda r: r.height())
        a1, a2, _ = self.orb.triple.a
        letter = "A" if a1 == 1 else ("D" if a2 == 2 else "E")
        return FiniteRootSystem(roots, positive, highest, highest.finite,
                                f"{letter}{self.rank}")

    def _reflection_matrix(self, j: int):
        n = self.rank
        return tuple(tuple(int(i == m) - (self.cartan[j][m] if i == j else 0)
                           for m in range(n)) for i in range(n))

    def _build_sigma(self):
        M = _identity(self.rank)
        for k in (1, 2, 3):
            for p in range(1, self.orb.triple.a[k - 1]):
                M = _mat_mul(self._reflection_matrix(self.node_index[(k, p)]), M)
        return M

    def _matrix_order(self, M):
        ident = _identity(self.rank)
        P = M
        for order in range(1, 4 * ORBIT_SAFETY_BOUND):
            if P == ident:
                return order
            P = _mat_mul(P, M)
        raise OrbitExplosionError("matrix order not found")

    # -- rational bilinear structure ------------------------------------------
    def pairing(self, x: Sequence, y: Sequence) -> Fraction:
        """(x|y) through the Gram matrix of the simple roots."""
        acc = Fraction(0)
        for i, xi in enumerate(x):
            if xi:
                acc += xi * sum(self.cartan[i][j] * Fraction(y[j]) for j in range(self.rank))
        return Fraction(acc)

    def root_pairing(self, x: RootVector, y: RootVector) -> Fraction:
        return self.pairing(x.finite, y.finite)

    def root_pairing_int(self, x: RootVector, y: RootVector) -> int:
        """Integer-only pairing for lattice vectors (hot path)."""
        acc = 0
        cartan = self.cartan
        xf, yf = x.finite, y.finite
        for i, xi in enumerate(xf):
            if xi:
                row = cartan[i]
                acc += xi * sum(row[j] * yj for j, yj in enumerate(yf) if yj)
        return acc

    def weight_vector(self, nd: Node) -> tuple[Fraction, ...]:
        """Fundamental weight omega_nd in simple-root coordinates (inverse Gram row)."""
        return self._inv_cartan[self.node_index[nd]]

    def omega_b_pairing(self, x: RootVector) -> Fraction:
        return Fraction(x.finite[self.node_index["b"]])

    def rho_b_vector(self) -> tuple[Fraction, ...]:
        acc = [Fraction(0)] * self.rank
        for nd in self.nodes:
            if nd == "b":
                continue
            k, _ = nd
            w = self.weight_vector(nd)
            for i in range(self.rank):
                acc[i] -= Fraction(1, self.orb.triple.a[k - 1]) * w[i]
        return tuple(acc)

    def rho_b_pairing(self, x: RootVector) -> Fraction:
        acc = Fraction(0)
        for nd in self.nodes:
            if nd == "b":
                continue
            k, _ = nd
            acc -= Fraction(x.finite[self.node_index[nd]], self.orb.triple.a[k - 1])
        return acc

    def sigma_apply(self, x: RootVector) -> RootVector:
        return RootVector(_mat_vec(self.sigma, x.finite), x.imag)

    def sigma_power_apply(self, x: RootVector, m: int) -> RootVector:
        out = x
        for _ in range(m % self.sigma_order):
            out = self.sigma_apply(out)
        return out

    def monodromy(self, x: RootVector) -> RootVector:
        """Classical monodromy on the level -1 lattice: sigma_b plus a delta shift.

        The shift is fixed by matching the log-lambda continuation of the P-component:
        n' = n + (rho_b|x) + chi*(omega_b|x) - (rho_b|sigma_b x).
        """
        y = self.sigma_apply(x)
        shift = (self.rho_b_pairing(x) + self.orb.triple.chi * self.omega_b_pairing(x)
                 - self.rho_b_pairing(y))
        if shift.denominator != 1:
            raise AssertionError(f"monodromy delta-shift not integral: {shift}")
        return RootVector(y.finite, x.imag + int(shift))

    # -- cohomology realization -----------------------------------------------
    def simple_root_coh(self, nd: Node, level: int) -> CohVector:
        vecs = {0: self._coh0, -1: self._coh_m1}[level]
        return vecs[self.node_index[nd]]

    def root_to_coh(self, x: RootVector, level: int) -> CohVector:
        """Period image at lambda = 1 of the lattice element (finite part, n)."""
        orb = self.orb
        wb = self.omega_b_pairing(x)
        coords: dict[Label, SymbolicScalar] = {}
        leaf = {}
        for i in orb.index.twisted:
            c = CycloNumber.from_rational(0)
            for j, xj in enumerate(x.finite):
                if xj:
                    c = c + xj * self._leaf_pairing[(j, i)]
            leaf[i] = c * orb.index.local_order(i)
        if level == 0:
            if wb:
                coords[LABEL_ONE] = SymbolicScalar.from_rational(wb)
                coords[LABEL_P] = SymbolicScalar.from_rational(wb * orb.triple.chi)
            for i, c in leaf.items():
                coords[i] = SymbolicScalar.from_cyclo(c)
        elif level == -1:
            if wb:
                coords[LABEL_ONE] = SymbolicScalar.from_rational(wb)
            p_term = SymbolicScalar.monomial(
                CycloNumber.from_rational(-wb), logq_power=1) + SymbolicScalar.monomial(
                CycloNumber.from_rational(x.imag + self.rho_b_pairing(x)), pi_power=1)
            coords[LABEL_P] = p_term
            for i, c in leaf.items():
                coords[i] = SymbolicScalar.from_cyclo(c / orb.index.degrees[i])
        else:
            raise ValueError("cohomology realization is available at levels 0 and -1")
        return CohVector(orb.index, coords)

    # -- eigen data ------------------------------------------------------------
    def sigma_on_coh(self, v: CohVector) -> CohVector:
        out = v
        for k in (1, 2, 3):
            for p in range(1, self.orb.triple.a[k - 1]):
                g = self.simple_root_coh((k, p), 0)
                c = intersection_form_level0(self.orb, g, out)
                out = out - g.scale(c)
        return out

    def omega_b_coh(self) -> CohVector:
        chi = self.orb.triple.chi
        return CohVector(self.orb.index, {
            LABEL_ONE: SymbolicScalar.from_rational(1 / chi),
            LABEL_P: SymbolicScalar.from_rational(1)})

    def eigen_data(self) -> EigenData:
        """sigma_b-eigenbasis data: the line labeled i carries eigenvalue e^{-2 pi i d_i}.

        With the monodromy-compatible orientation of sigma_b (leg roots shift
        downward), the basis class phi_j is scaled by e^{-2 pi i d_{j*}}; the line
        labeled i is therefore spanned by phi_{i*} (the normalizations are invariant
        under the involution, so (H_i|H_{j*}) = kappa delta_{ij} is unchanged).
        """
        orb = self.orb
        kappa = orb.triple.kappa
        bases: dict[Label, CohVector] = {}
        scales: dict[Label, Fraction] = {}
        values: dict[Label, CycloNumber] = {}
        exponents: dict[Label, int] = {}
        for i in orb.index.labels:
            d = orb.index.degrees[i]
            if i in (LABEL_ONE, LABEL_P):
                bases[i] = self.omega_b_coh()
                scales[i] = kappa * orb.triple.chi
            else:
                bases[i] = orb.basis(orb.index.dual(i))
                scales[i] = Fraction(kappa * orb.index.local_order(i))
            ev_exp = Fraction(-d) % 1
            values[i] = cyclo(ev_exp.denominator, ev_exp.numerator)
            m_i = (kappa if i == LABEL_P else 0) if i in (LABEL_ONE, LABEL_P) \
                else orb.index.degrees[orb.index.dual(i)] * kappa
            assert Fraction(m_i).denominator == 1
            exponents[i] = int(m_i)
        weights = {nd: self.weight_vector(nd) for nd in self.nodes}
        return EigenData(self.sigma, self.sigma_order, bases, scales, values, exponents,
                         self.rho_b_vector(), self.weight_vector("b"), weights)


def build_root_system(orb_or_triple) -> MilnorSystem:
    orb = orb_or_triple if isinstance(orb_or_triple, Orbifold) else \
        build_orbifold(*orb_or_triple.a) if isinstance(orb_or_triple, FanoTriple) else \
        build_orbifold(*orb_or_triple)
    return MilnorSystem(orb)


def root_bases(ms: MilnorSystem) -> tuple[RootBasis, RootBasis, FiniteRootSystem]:
    """The (level 0, level -1, finite system) triple of the lattice model."""
    gram = ms.cartan
    b0 = RootBasis(0, ms._coh0, None, gram)
    bm1 = RootBasis(-1, ms._coh_m1, ms.delta_coh(), gram)
    return b0, bm1, ms.finite


def coxeter_sigma(ms: MilnorSystem) -> EigenData:
    data = ms.eigen_data()
    if data.order != ms.orb.triple.sigma_order:
        raise AssertionError(f"|sigma_b| = {data.order} != lcm{ms.orb.triple.a}")
    return data


@dataclass(frozen=True)
class WeightData:
    omega_b: tuple[Fraction, ...]
    leg_weights: dict[Node, tuple[Fraction, ...]]
    rho_b: tuple[Fraction, ...]
    kac_labels: tuple[int, ...]


def fundamental_weights(ms: MilnorSystem) -> WeightData:
    """Weights from the inverse Gram matrix, with the branch-star identities asserted."""
    omega_b = ms.weight_vector("b")
    chi = ms.orb.triple.chi
    legs = {nd: ms.weight_vector(nd) for nd in ms.nodes if nd != "b"}
    # (omega_i | chi*omega_b) = d_i for leg weights
    for nd, w in legs.items():
        d_i = ms.orb.index.degrees[nd]
        if chi * ms.pairing(w, omega_b) != d_i:
            raise AssertionError(f"weight identity failed at {nd}")
    # (omega_b|omega_b) = 1/chi
    if ms.pairing(omega_b, omega_b) != 1 / chi:
        raise AssertionError("(omega_b|omega_b) != 1/chi")
    # pi_0(gamma_b) = chi*omega_b and pi_*(gamma_b) = -sum d_i gamma_i
    gamma_b = [Fraction(int(nd == "b")) for nd in ms.nodes]
    proj = [Fraction(gb) - chi * w for gb, w in zip(gamma_b, omega_b)]
    expected = [Fraction(0) if nd == "b" else -ms.orb.index.degrees[nd] for nd in ms.nodes]
    if proj != expected:
        raise AssertionError("branch-node projection identity failed")
    return WeightData(omega_b, legs, ms.rho_b_vector(), ms.finite.kac_labels)


def sigma_inverse_entries(ms: MilnorSystem, k: int) -> tuple[tuple[Fraction, ...], ...]:
    """Exact (1 - sigma_k)^{-1} on the leg-k span, checked against p/a_k - [p > q]."""
    a_k = ms.orb.triple.a[k - 1]
    if a_k < 2:
        raise ValueError(f"leg {k} is empty")
    idx = [ms.node_index[(k, p)] for p in range(1, a_k)]
    M = _identity(ms.rank)
    for p in range(1, a_k):
        M = _mat_mul(ms._reflection_matrix(ms.node_index[(k, p)]), M)
    sub = [[Fraction(M[i][j]) for j in idx] for i in idx]
    one_minus = [[Fraction(int(i == j)) - sub[i][j] for j in range(len(idx))]
                 for i in range(len(idx))]
    inv = _fraction_inverse(one_minus)
    for p in range(1, a_k):
        for q in range(1, a_k):
            expected = Fraction(p, a_k) - (1 if p > q else 0)
            if inv[p - 1][q - 1] != expected:
                raise AssertionError(
                    f"(1-sigma_{k})^(-1) entry ({p},{q}) = {inv[p-1][q-1]}, "
                    f"closed form gives {expected}")
    return inv


def alpha_root(ms: MilnorSystem, k: int, m: int) -> RootVector:
    """Lattice element matched to the line-bundle power L_k^m.

    alpha_{k,0} is the branch root; alpha_{k,-p} adds gamma_{k,1..p}; shifting m by
    a_k adds one copy of delta.
    """
    a_k = ms.orb.triple.a[k - 1]
    p = (-m) % a_k
    t = (-m - p) // a_k
    coords = [0] * ms.rank
    coords[ms.node_index["b"]] = 1
    for q in range(1, p + 1):
        coords[ms.node_index[(k, q)]] = 1
    return RootVector(tuple(coords), -t)


def alpha_km(ms: MilnorSystem, k: int, m: int, level: int) -> CohVector:
    """Period image at lambda = 1 of alpha_{k,m} at level 0 or -1."""
    return ms.root_to_coh(alpha_root(ms, k, m), level)


def affine_gram(ms: MilnorSystem) -> tuple[tuple[int, ...], ...]:
    """Gram matrix of (gamma_0 = delta - theta~, gamma_1..gamma_N)."""
    n = ms.rank
    theta = ms.finite.highest_root
    out = [[0] * (n + 1) for _ in range(n + 1)]
    out[0][0] = 2
    for j in range(n):
        ej = RootVector(tuple(int(i == j) for i in range(n)))
        v = -ms.root_pairing(theta, ej)
        assert v.denominator == 1
        out[0][j + 1] = out[j + 1][0] = int(v)
        for i in range(n):
            out[i + 1][j + 1] = ms.cartan[i][j]
    return tuple(tuple(row) for row in out)


def affine_kernel_check(ms: MilnorSystem) -> tuple[int, ...]:
    """Verify the affine Gram matrix is PSD of rank N with kernel the Kac vector."""
    G = [list(map(Fraction, row)) for row in affine_gram(ms)]
    n = len(G)
    kac = (1,) + ms.finite.kac_labels
    for i in range(n):
        if sum(G[i][j] * kac[j] for j in range(n)) != 0:
            raise AssertionError("Kac vector is not in the kernel of the affine Gram matrix")
    # LDL^T-style elimination: diagonal pivots must stay nonnegative for a PSD matrix
    M = [row[:] for row in G]
    rank = 0
    for col in range(n):
        pivot = next((r for r in range(col, n) if M[r][col] != 0), None)
        if pivot is None:
            continue
        M[col], M[pivot] = M[pivot], M[col]
        if M[col][col] <= 0:
            # a symmetric PSD matrix always admits a positive diagonal pivot
            raise AssertionError("affine Gram matrix is not positive semidefinite")
        rank += 1
        for r in range(col + 1, n):
            if M[r][col]:
                f = M[r][col] / M[col][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    if rank != ms.rank:
        raise AssertionError(f"affine Gram rank {rank} != {ms.rank}")
    return kac


def cyclo_matrix_rank(rows: list[list[CycloNumber]]) -> int:
    """Rank over Q(zeta) by Gaussian elimination with exact division."""
    M = [row[:] for row in rows]
    rank = 0
    cols = len(M[0]) if M else 0
    row = 0
    for col in range(cols):
        pivot = next((r for r in range(row, len(M)) if not M[r][col].is_zero()), None)
        if pivot is None:
            continue
        M[row], M[pivot] = M[pivot], M[row]
        inv = M[row][col].inverse()
        M[row] = [inv * x for x in M[row]]
        for r in range(len(M)):
            if r != row and not M[r][col].is_zero():
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[row])]
        row += 1
        rank += 1
    return rank
