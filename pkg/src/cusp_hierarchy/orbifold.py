"""Chen-Ruan cohomology model of the orbifold projective line with three markings.

The cohomology H has basis {1 = phi_01, P = phi_02, phi_{k,p}} indexed by the set
I = {(01), (02)} u {(k,p) : 1 <= k <= 3, 1 <= p <= a_k - 1}, with complex degrees
deg phi_01 = 0, deg phi_02 = 1, deg phi_{k,p} = p/a_k.  This module builds the index
set, the Poincare pairing, the grading operators theta / rho / r, and the induced
intersection form (phi'|phi'') = (r(phi'), (1-rho) r(phi'')).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .exactnum import CycloNumber, SymbolicScalar, _coerce_scalar

Label = tuple[int, int]  # (0,1), (0,2) or (k,p) with k in 1..3
LABEL_ONE: Label = (0, 1)
LABEL_P: Label = (0, 2)


class NotFanoError(ValueError):
    """Raised for triples with non-positive orbifold Euler characteristic."""


class ContaminationError(ValueError):
    """Raised when a value that must be free of Pi/Lambda/Q symbols is not."""


@dataclass(frozen=True)
class FanoTriple:
    """Orbifold datum a1 <= a2 <= a3 with chi = 1/a1 + 1/a2 + 1/a3 - 1 > 0."""

    a: tuple[int, int, int]
    chi: Fraction = field(init=False)
    milnor: int = field(init=False)

    def __post_init__(self):
        a1, a2, a3 = self.a
        if not (1 <= a1 <= a2 <= a3):
            raise ValueError(f"triple must satisfy 1 <= a1 <= a2 <= a3, got {self.a}")
        chi = Fraction(1, a1) + Fraction(1, a2) + Fraction(1, a3) - 1
        if chi <= 0:
            raise NotFanoError(f"chi = {chi} <= 0: triple {self.a} is not Fano")
        object.__setattr__(self, "chi", chi)
        object.__setattr__(self, "milnor", a1 + a2 + a3 - 1)

    @property
    def rank(self) -> int:
        """Rank N of the finite root system (= milnor - 1)."""
        return self.milnor - 1

    @property
    def sigma_order(self) -> int:
        """Order of the branch-node Coxeter product: lcm(a1, a2, a3)."""
        return math.lcm(*self.a)

    @property
    def kappa(self) -> int:
        """Order of the lifted automorphism: sigma_order, doubled when chi*|sigma| is odd."""
        h = self.sigma_order
        return h if (self.chi * h) % 2 == 0 else 2 * h

    @property
    def cyclotomic_order(self) -> int:
        """Ambient field order n = lcm(2*kappa, 2*den(chi), a1, a2, a3)."""
        return math.lcm(2 * self.kappa, 2 * self.chi.denominator, *self.a)


@dataclass(frozen=True)
class IndexSet:
    """Ordered labels of the cohomology basis with involution and degrees."""

    labels: tuple[Label, ...]
    degrees: dict[Label, Fraction]        # d_i = 1 - deg_CR(phi_i)
    deg_cr: dict[Label, Fraction]

    @classmethod
    def build(cls, triple: FanoTriple) -> "IndexSet":
        labels: list[Label] = [LABEL_ONE, LABEL_P]
        for k in (1, 2, 3):
            for p in range(1, triple.a[k - 1]):
                labels.append((k, p))
        deg_cr = {LABEL_ONE: Fraction(0), LABEL_P: Fraction(1)}
        for (k, p) in labels[2:]:
            deg_cr[(k, p)] = Fraction(p, triple.a[k - 1])
        degrees = {i: 1 - d for i, d in deg_cr.items()}
        return cls(tuple(labels), degrees, deg_cr)

    @property
    def twisted(self) -> tuple[Label, ...]:
        return self.labels[2:]

    def dual(self, i: Label) -> Label:
        if i == LABEL_ONE:
            return LABEL_P
        if i == LABEL_P:
            return LABEL_ONE
        k, p = i
        return (k, self._a(k) - p)

    def _a(self, k: int) -> int:
        ps = [p for (kk, p) in self.twisted if kk == k]
        return (max(ps) + 1) if ps else 1

    def local_order(self, i: Label) -> int:
        """a_i = a_k for a twisted label i = (k,p)."""
        if i in (LABEL_ONE, LABEL_P):
            raise ValueError("a_i is defined for twisted labels only")
        return self._a(i[0])


Scalar = Union[SymbolicScalar, CycloNumber, int, Fraction]


class CohVector:
    """Element of H over the extended scalar ring Q(zeta)[Pi, Lambda, Q^r]."""

    __slots__ = ("index", "coords")

    def __init__(self, index: IndexSet, coords: dict[Label, SymbolicScalar] | None = None):
        self.index = index
        clean = {}
        if coords:
            for i, c in coords.items():
                c = _coerce_scalar(c)
                if not c.is_zero():
                    clean[i] = c
        self.coords = clean

    @classmethod
    def basis(cls, index: IndexSet, i: Label) -> "CohVector":
        return cls(index, {i: SymbolicScalar.from_rational(1)})

    def coeff(self, i: Label) -> SymbolicScalar:
        return self.coords.get(i, SymbolicScalar.zero())

    def __add__(self, other: "CohVector") -> "CohVector":
        out = dict(self.coords)
        for i, c in other.coords.items():
            s = out.get(i)
            out[i] = c if s is None else s + c
        return CohVector(self.index, out)

    def __neg__(self):
        return CohVector(self.index, {i: -c for i, c in self.coords.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: Scalar) -> "CohVector":
        c = _coerce_scalar(c)
        return CohVector(self.index, {i: c * v for i, v in self.coords.items()})

    def is_zero(self) -> bool:
        return not self.coords

    def __eq__(self, other):
        if not isinstance(other, CohVector):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash(frozenset((i, hash(c)) for i, c in self.coords.items()))

    def map_coefficients(self, fn) -> "CohVector":
        return CohVector(self.index, {i: fn(c) for i, c in self.coords.items()})

    def __repr__(self):
        if not self.coords:
            return "CohVector(0)"
        bits = [f"phi{i}: {c!r}" for i, c in sorted(self.coords.items())]
        return "CohVector(" + ", ".join(bits) + ")"


@dataclass(frozen=True)
class GradingOperators:
    """theta (antisymmetric grading), rho (cup with chi*P), r = (1+rho)(1-deg_CR)."""

    triple: FanoTriple
    index: IndexSet

    def theta(self, v: CohVector) -> CohVector:
        d = self.index.degrees
        return CohVector(v.index, {i: SymbolicScalar.from_rational(d[i] - Fraction(1, 2)) * c
                                   for i, c in v.coords.items()})

    def rho(self, v: CohVector) -> CohVector:
        c = v.coeff(LABEL_ONE)
        if c.is_zero():
            return CohVector(v.index)
        return CohVector(v.index, {LABEL_P: SymbolicScalar.from_rational(self.triple.chi) * c})

    def r(self, v: CohVector) -> CohVector:
        d = self.index.degrees
        scaled = CohVector(v.index, {i: SymbolicScalar.from_rational(d[i]) * c
                                     for i, c in v.coords.items()})
        return scaled + self.rho(scaled)

    def theta_exponents(self) -> dict[Label, Fraction]:
        return {i: d - Fraction(1, 2) for i, d in self.index.degrees.items()}


@dataclass(frozen=True)
class Orbifold:
    """Bundle of the cohomology structures for one Fano triple."""

    triple: FanoTriple
    index: IndexSet
    grading: GradingOperators
    pairing: dict[tuple[Label, Label], Fraction]

    def basis(self, i: Label) -> CohVector:
        return CohVector.basis(self.index, i)

    def unit(self) -> CohVector:
        return self.basis(LABEL_ONE)

    def point_class(self) -> CohVector:
        return self.basis(LABEL_P)

    def poincare(self, u: CohVector, v: CohVector) -> SymbolicScalar:
        acc = SymbolicScalar.zero()
        for i, cu in u.coords.items():
            j = self.index.dual(i)
            cv = v.coords.get(j)
            if cv is not None:
                acc = acc + SymbolicScalar.from_rational(self.pairing[(i, j)]) * cu * cv
        return acc


def build_orbifold(a1: int, a2: int, a3: int) -> Orbifold:
    """Construct index set, grading operators and Poincare pairing for a Fano triple."""
    triple = FanoTriple((a1, a2, a3))
    index = IndexSet.build(triple)
    pairing: dict[tuple[Label, Label], Fraction] = {}
    for i in index.labels:
        j = index.dual(i)
        if i in (LABEL_ONE, LABEL_P):
            pairing[(i, j)] = Fraction(1)
        else:
            pairing[(i, j)] = Fraction(1, index.local_order(i))
    return Orbifold(triple, index, GradingOperators(triple, index), pairing)


def intersection_form(orb: Orbifold, u: CohVector, v: CohVector) -> SymbolicScalar:
    """(u|v) = (r(u), (1-rho) r(v)); symmetric, rational on lattice cycles.

    This is the intersection pairing on H carried by the level -1 period images.  The
    grading operator r kills the P-direction, so any Pi/Lambda content of lattice
    cycles drops out; a residual transcendental term means the inputs were not images
    of lattice cycles and is reported as contamination.
    """
    ru = orb.grading.r(u)
    rv = orb.grading.r(v)
    val = orb.poincare(ru, rv - orb.grading.rho(rv))
    if not val.is_constant():
        raise ContaminationError(f"intersection value has residual symbols: {val!r}")
    return val


def intersection_form_level0(orb: Orbifold, u: CohVector, v: CohVector) -> SymbolicScalar:
    """(u|v) = (u, (1-rho) v): the pushforward of the intersection form to the
    level-0 image (where r is already applied); this is the form in which the simple
    roots have the Dynkin-diagram Gram matrix and (phi_i|phi_{j*}) = delta_{ij}/a_i."""
    val = orb.poincare(u, v - orb.grading.rho(v))
    if not val.is_constant():
        raise ContaminationError(f"intersection value has residual symbols: {val!r}")
    return val


def hodge_trace(triple: FanoTriple) -> Fraction:
    """(1/2) tr(1/4 + theta theta^T), computed three ways and asserted equal.

    Routes: the trace of the diagonal grading, the twisted-degree sum
    (1/2) sum d_i (1 - d_i), and the closed form (1/12) sum (a_k^2 - 1)/a_k.
    """
    index = IndexSet.build(triple)
    trace_form = sum((Fraction(1, 4) - (index.degrees[i] - Fraction(1, 2)) ** 2
                      for i in index.labels), Fraction(0)) / 2
    degree_sum = sum((index.degrees[i] * (1 - index.degrees[i])
                      for i in index.twisted), Fraction(0)) / 2
    closed = sum((Fraction(a * a - 1, 12 * a) for a in triple.a), Fraction(0))
    if not (trace_form == degree_sum == closed):
        raise AssertionError(
            f"grading-trace identity failed for {triple.a}: "
            f"{trace_form} vs {degree_sum} vs {closed}")
    return closed
