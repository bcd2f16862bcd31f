"""Exact scalar arithmetic: cyclotomic rationals, transcendental monomials, Puiseux series.

Everything downstream (root systems, cocycles, phase factors, periods) is built on three
layers of exact arithmetic:

* ``CycloNumber`` -- an element of Q(zeta_n), reduced modulo the n-th cyclotomic
  polynomial so that equality is coefficient equality.
* ``SymbolicScalar`` -- a finitely supported sum of monomials c * Pi^a * Lambda^b * Q^r
  where Pi stands for 2*pi*sqrt(-1), Lambda for log Q, and Q is the degree-counting
  variable with rational exponents.  Pi and Lambda are opaque transcendentals; no
  relation between them is ever imposed.
* ``PuiseuxSeries`` -- finitely supported sums of c * v^q * (log v)^e with q rational
  and e in {0, 1}, in a single formal variable v (lambda or x).
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

Rat = Union[int, Fraction]


# ---------------------------------------------------------------------------
# integer polynomial helpers (dense lists, index = power)
# ---------------------------------------------------------------------------

def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul_int(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return _poly_trim(out)


def _poly_divmod_exact(num: list[int], den: list[int]) -> list[int]:
    """Quotient of num by monic den, assuming the division is exact over Z."""
    num = list(num)
    dn = len(den) - 1
    assert den[-1] == 1
    q = [0] * max(len(num) - dn, 0)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            q[i - dn] = c
            for j in range(dn + 1):
                num[i - dn + j] -= c * den[j]
    assert not any(num), "inexact polynomial division"
    return _poly_trim(q)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial Phi_n (index = power)."""
    if n < 1:
        raise ValueError("cyclotomic order must be >= 1")
    num = [0] * n + [1]
    num[0] = -1  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num = _poly_divmod_exact(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


@lru_cache(maxsize=None)
def _phi_degree(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def _reduce_mod_phi(coeffs: list[int], n: int) -> list[int]:
    """Reduce an integer polynomial in zeta_n: first zeta^n = 1, then mod Phi_n."""
    deg = _phi_degree(n)
    if len(coeffs) > n:
        folded = [0] * n
        for i, c in enumerate(coeffs):
            folded[i % n] += c
        coeffs = folded
    coeffs = _poly_trim(list(coeffs))
    phi = cyclotomic_polynomial(n)
    for i in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[i]
        if c:
            coeffs[i] = 0
            for j in range(deg):
                coeffs[i - deg + j] -= c * phi[j]
    return _poly_trim(coeffs)


# ---------------------------------------------------------------------------
# CycloNumber
# ---------------------------------------------------------------------------

class CycloNumber:
    """Element of Q(zeta_n) in canonical form (reduced mod Phi_n).

    Internally a tuple of integer numerators over a common positive denominator;
    ``coeffs`` exposes them as Fractions.  Values of different orders interoperate by
    lifting to the lcm order; equality across orders is equality after lifting.
    Immutable.
    """

    __slots__ = ("order", "_num", "_den")

    def __init__(self, order: int, coeffs: Iterable[Rat]):
        if order < 1:
            raise ValueError("cyclotomic order must be >= 1")
        fracs = [Fraction(c) for c in coeffs]
        den = math.lcm(1, *(f.denominator for f in fracs)) if fracs else 1
        nums = [int(f * den) for f in fracs]
        nums = _reduce_mod_phi(nums, order)
        g = math.gcd(den, *nums) if nums else den
        if g > 1:
            den //= g
            nums = [c // g for c in nums]
        self.order = order
        self._num = tuple(nums)
        self._den = den

    @classmethod
    def _raw(cls, order: int, num: tuple[int, ...], den: int) -> "CycloNumber":
        obj = object.__new__(cls)
        obj.order = order
        obj._num = num
        obj._den = den
        return obj

    @classmethod
    def from_rational(cls, value: Rat) -> "CycloNumber":
        f = Fraction(value)
        if f == 0:
            return cls._raw(1, (), 1)
        return cls._raw(1, (f.numerator,), f.denominator)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        deg = _phi_degree(self.order)
        out = [Fraction(0)] * deg
        for i, c in enumerate(self._num):
            out[i] = Fraction(c, self._den)
        return tuple(out)

    def is_zero(self) -> bool:
        return not self._num

    def is_rational(self) -> bool:
        return len(self._num) <= 1

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"not a rational number: {self!r}")
        return Fraction(self._num[0], self._den) if self._num else Fraction(0)

    def lift(self, order: int) -> "CycloNumber":
        """Embed into Q(zeta_order); requires self.order | order."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"no embedding of order {self.order} into order {order}")
        step = order // self.order
        coeffs = [0] * ((len(self._num) - 1) * step + 1) if self._num else []
        for i, c in enumerate(self._num):
            coeffs[i * step] = c
        return CycloNumber._raw(order, tuple(_reduce_mod_phi(coeffs, order)), self._den)._normal()

    def _normal(self) -> "CycloNumber":
        nums = list(self._num)
        den = self._den
        g = math.gcd(den, *nums) if nums else den
        if g > 1:
            return CycloNumber._raw(self.order, tuple(c // g for c in nums), den // g)
        return self

    @staticmethod
    def _aligned(a: "CycloNumber", b: "CycloNumber"):
        if a.order == b.order:
            return a, b
        n = math.lcm(a.order, b.order)
        return a.lift(n), b.lift(n)

    def __add__(self, other) -> "CycloNumber":
        other = _coerce_cyclo(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = CycloNumber._aligned(self, other)
        den = math.lcm(a._den, b._den)
        fa, fb = den // a._den, den // b._den
        size = max(len(a._num), len(b._num))
        nums = [0] * size
        for i, c in enumerate(a._num):
            nums[i] += c * fa
        for i, c in enumerate(b._num):
            nums[i] += c * fb
        return CycloNumber._raw(a.order, tuple(_poly_trim(nums)), den)._normal()

    __radd__ = __add__

    def __neg__(self) -> "CycloNumber":
        return CycloNumber._raw(self.order, tuple(-c for c in self._num), self._den)

    def __sub__(self, other):
        other = _coerce_cyclo(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_cyclo(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "CycloNumber":
        other = _coerce_cyclo(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = CycloNumber._aligned(self, other)
        nums = _reduce_mod_phi(_poly_mul_int(list(a._num), list(b._num)), a.order)
        return CycloNumber._raw(a.order, tuple(nums), a._den * b._den)._normal()

    __rmul__ = __mul__

    def inverse(self) -> "CycloNumber":
        """Multiplicative inverse via the extended Euclidean algorithm mod Phi_n."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        if self.is_rational():
            return CycloNumber.from_rational(1 / self.as_rational())
        n = self.order
        # work over Q[x]: r0 = Phi_n, r1 = self
        r0 = [Fraction(c) for c in cyclotomic_polynomial(n)]
        r1 = [Fraction(c, self._den) for c in self._num]
        s0, s1 = [], [Fraction(1)]

        def trim(p):
            while p and p[-1] == 0:
                p.pop()
            return p

        while True:
            # divide r0 by r1
            q = [Fraction(0)] * max(len(r0) - len(r1) + 1, 0)
            rem = list(r0)
            inv_lead = 1 / r1[-1]
            for i in range(len(rem) - 1, len(r1) - 2, -1):
                c = rem[i] * inv_lead
                if c:
                    q[i - len(r1) + 1] = c
                    for j, d in enumerate(r1):
                        rem[i - len(r1) + 1 + j] -= c * d
            rem = trim(rem)
            # s_next = s0 - q*s1
            s_next = list(s0) + [Fraction(0)] * max(0, len(q) + len(s1) - 1 - len(s0))
            for i, qi in enumerate(q):
                if qi:
                    for j, sj in enumerate(s1):
                        s_next[i + j] -= qi * sj
            s_next = trim(s_next)
            if not rem:
                # r1 is the gcd: a nonzero constant times a unit (field => degree 0)
                if len(r1) != 1:
                    raise ArithmeticError("gcd with Phi_n not constant")
                c = r1[0]
                return CycloNumber(n, [x / c for x in s1])
            r0, r1 = r1, rem
            s0, s1 = s1, s_next

    def __truediv__(self, other):
        other = _coerce_cyclo(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce_cyclo(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> "CycloNumber":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CycloNumber.from_rational(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = _coerce_cyclo(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = CycloNumber._aligned(self, other)
        return a._num == b._num and a._den == b._den

    def __hash__(self):
        if self.is_rational():
            return hash(self.as_rational())
        return hash((self._num, self._den))

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.order)
        acc = 0j
        for i in range(len(self._num) - 1, -1, -1):
            acc = acc * z + self._num[i]
        return acc / self._den

    def __repr__(self):
        if self.is_rational():
            return f"CycloNumber({self.as_rational()})"
        terms = [f"{Fraction(c, self._den)}*z{self.order}^{i}"
                 for i, c in enumerate(self._num) if c]
        return "CycloNumber(" + " + ".join(terms) + ")"


def _coerce_cyclo(x):
    if isinstance(x, CycloNumber):
        return x
    if isinstance(x, (int, Fraction)):
        return CycloNumber.from_rational(x)
    return NotImplemented


def cyclo(n: int, k: int) -> CycloNumber:
    """zeta_n^k in canonical form."""
    if n < 1:
        raise ValueError("cyclotomic order must be >= 1")
    k %= n
    coeffs = [0] * k + [1]
    return CycloNumber(n, coeffs)


def root_of_unity(r: Rat) -> CycloNumber:
    """e^{2 pi i r} for rational r, as an exact root of unity."""
    f = Fraction(r)
    return cyclo(f.denominator, f.numerator % f.denominator)


def product_one_minus_eta(kappa: int) -> CycloNumber:
    """prod_{m=1}^{kappa-1} (1 - eta^m) with eta = zeta_kappa; equals kappa."""
    if kappa < 1:
        raise ValueError("kappa must be >= 1")
    one = CycloNumber.from_rational(1)
    acc = one
    for m in range(1, kappa):
        acc = acc * (one - cyclo(kappa, m))
    return acc


# ---------------------------------------------------------------------------
# SymbolicScalar
# ---------------------------------------------------------------------------

MonoKey = tuple[int, int, Fraction]  # (pi_power, logq_power, q_exponent)


class SymbolicScalar:
    """Finitely supported sum of monomials c * Pi^a * Lambda^b * Q^r over Q(zeta).

    Pi = 2*pi*sqrt(-1) and Lambda = log Q are independent opaque transcendentals;
    multiplication adds exponents, addition merges like monomials.  Immutable.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[MonoKey, CycloNumber] | None = None):
        clean: dict[MonoKey, CycloNumber] = {}
        if terms:
            for key, c in terms.items():
                if not c.is_zero():
                    clean[(key[0], key[1], Fraction(key[2]))] = c
        self.terms = clean

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls) -> "SymbolicScalar":
        return cls()

    @classmethod
    def from_cyclo(cls, c: CycloNumber) -> "SymbolicScalar":
        return cls({(0, 0, Fraction(0)): c})

    @classmethod
    def from_rational(cls, r: Rat) -> "SymbolicScalar":
        return cls.from_cyclo(CycloNumber.from_rational(r))

    @classmethod
    def monomial(cls, coeff: CycloNumber, pi_power: int = 0, logq_power: int = 0,
                 q_exponent: Rat = 0) -> "SymbolicScalar":
        return cls({(pi_power, logq_power, Fraction(q_exponent)): coeff})

    @classmethod
    def pi_symbol(cls) -> "SymbolicScalar":
        return cls.monomial(CycloNumber.from_rational(1), pi_power=1)

    @classmethod
    def logq_symbol(cls) -> "SymbolicScalar":
        return cls.monomial(CycloNumber.from_rational(1), logq_power=1)

    @classmethod
    def q_power(cls, r: Rat) -> "SymbolicScalar":
        return cls.monomial(CycloNumber.from_rational(1), q_exponent=r)

    # -- ring ops ------------------------------------------------------------
    def __add__(self, other):
        other = _coerce_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key)
            out[key] = c if s is None else s + c
        return SymbolicScalar(out)

    __radd__ = __add__

    def __neg__(self):
        return SymbolicScalar({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = _coerce_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[MonoKey, CycloNumber] = {}
        for (a1, b1, r1), c1 in self.terms.items():
            for (a2, b2, r2), c2 in other.terms.items():
                key = (a1 + a2, b1 + b2, r1 + r2)
                prod = c1 * c2
                s = out.get(key)
                out[key] = prod if s is None else s + prod
        return SymbolicScalar(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = _coerce_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    # -- queries -------------------------------------------------------------
    def is_constant(self) -> bool:
        """True when free of Pi, Lambda and Q (a plain cyclotomic number)."""
        return all(k == (0, 0, Fraction(0)) for k in self.terms)

    def constant_cyclo(self) -> CycloNumber:
        if self.is_zero():
            return CycloNumber.from_rational(0)
        if not self.is_constant():
            raise ValueError(f"transcendental symbols present: {self!r}")
        return self.terms[(0, 0, Fraction(0))]

    def as_rational(self) -> Fraction:
        return self.constant_cyclo().as_rational()

    def coefficient(self, pi_power: int, logq_power: int, q_exponent: Rat) -> CycloNumber:
        return self.terms.get((pi_power, logq_power, Fraction(q_exponent)),
                              CycloNumber.from_rational(0))

    def q_log_derivative(self) -> "SymbolicScalar":
        """The derivation Q d/dQ: Lambda -> 1, Q^r -> r*Q^r."""
        out: dict[MonoKey, CycloNumber] = {}

        def acc(key, c):
            if c.is_zero():
                return
            s = out.get(key)
            out[key] = c if s is None else s + c

        for (a, b, r), c in self.terms.items():
            if b:
                acc((a, b - 1, r), b * c)
            if r:
                acc((a, b, r), CycloNumber.from_rational(r) * c)
        return SymbolicScalar(out)

    def substitute_q_one(self) -> "SymbolicScalar":
        """Set Q = 1 (so Lambda = log Q = 0 and Q^r = 1)."""
        out: dict[MonoKey, CycloNumber] = {}
        for (a, b, r), c in self.terms.items():
            if b:
                continue
            key = (a, 0, Fraction(0))
            s = out.get(key)
            out[key] = c if s is None else s + c
        return SymbolicScalar(out)

    def to_complex(self, q: complex = 1.0) -> complex:
        pi_val = 2j * cmath.pi
        acc = 0j
        logq = cmath.log(q)
        for (a, b, r), c in self.terms.items():
            acc += c.to_complex() * pi_val ** a * logq ** b * q ** complex(r)
        return acc

    def __repr__(self):
        if self.is_zero():
            return "SymbolicScalar(0)"
        bits = []
        for (a, b, r), c in sorted(self.terms.items(), key=lambda kv: (kv[0][0], kv[0][1], kv[0][2])):
            s = repr(c)
            if a:
                s += f"*Pi^{a}"
            if b:
                s += f"*Lam^{b}"
            if r:
                s += f"*Q^{r}"
            bits.append(s)
        return "SymbolicScalar(" + " + ".join(bits) + ")"


def _coerce_scalar(x):
    if isinstance(x, SymbolicScalar):
        return x
    if isinstance(x, CycloNumber):
        return SymbolicScalar.from_cyclo(x)
    if isinstance(x, (int, Fraction)):
        return SymbolicScalar.from_rational(x)
    return NotImplemented


# ---------------------------------------------------------------------------
# PuiseuxSeries
# ---------------------------------------------------------------------------

TermKey = tuple[Fraction, int]  # (exponent, log_power in {0,1})


class PuiseuxSeries:
    """Finitely supported sum of c * v^q * (log v)^e, e in {0,1}, in a variable v.

    ``truncation_order`` is None for exact (polynomial-like) data; a product
    truncates at the minimum of the operands' orders.  Terms with exponent above a
    finite truncation order are dropped.  Immutable.
    """

    __slots__ = ("var", "terms", "truncation_order")

    def __init__(self, var: str, terms: Mapping[TermKey, SymbolicScalar] | None = None,
                 truncation_order: Rat | None = None):
        self.var = var
        self.truncation_order = None if truncation_order is None else Fraction(truncation_order)
        clean: dict[TermKey, SymbolicScalar] = {}
        if terms:
            for (q, e), c in terms.items():
                if e not in (0, 1):
                    raise ValueError("log powers above 1 are not supported")
                q = Fraction(q)
                if self.truncation_order is not None and q > self.truncation_order:
                    continue
                if not c.is_zero():
                    clean[(q, e)] = c
        self.terms = clean

    @classmethod
    def zero(cls, var: str) -> "PuiseuxSeries":
        return cls(var)

    @classmethod
    def constant(cls, var: str, c: SymbolicScalar | CycloNumber | Rat) -> "PuiseuxSeries":
        return cls(var, {(Fraction(0), 0): _coerce_scalar(c)})

    @classmethod
    def term(cls, var: str, coeff, exponent: Rat, log_power: int = 0) -> "PuiseuxSeries":
        return cls(var, {(Fraction(exponent), log_power): _coerce_scalar(coeff)})

    def _check_var(self, other: "PuiseuxSeries"):
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var} vs {other.var}")

    @staticmethod
    def _min_trunc(a, b):
        if a is None:
            return b
        if b is None:
            return a
        return min(a, b)

    def __add__(self, other):
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        self._check_var(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key)
            out[key] = c if s is None else s + c
        return PuiseuxSeries(self.var, out, self._min_trunc(self.truncation_order, other.truncation_order))

    def __neg__(self):
        return PuiseuxSeries(self.var, {k: -c for k, c in self.terms.items()}, self.truncation_order)

    def __sub__(self, other):
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        self._check_var(other)
        trunc = self._min_trunc(self.truncation_order, other.truncation_order)
        out: dict[TermKey, SymbolicScalar] = {}
        for (q1, e1), c1 in self.terms.items():
            for (q2, e2), c2 in other.terms.items():
                e = e1 + e2
                if e > 1:
                    raise ValueError("product would produce (log)^2 terms")
                q = q1 + q2
                if trunc is not None and q > trunc:
                    continue
                key = (q, e)
                prod = c1 * c2
                s = out.get(key)
                out[key] = prod if s is None else s + prod
        return PuiseuxSeries(self.var, out, trunc)

    def scale(self, c) -> "PuiseuxSeries":
        c = _coerce_scalar(c)
        return PuiseuxSeries(self.var, {k: c * v for k, v in self.terms.items()},
                             self.truncation_order)

    def shift(self, dq: Rat) -> "PuiseuxSeries":
        """Multiply by v^dq."""
        dq = Fraction(dq)
        trunc = None if self.truncation_order is None else self.truncation_order + dq
        return PuiseuxSeries(self.var, {(q + dq, e): c for (q, e), c in self.terms.items()}, trunc)

    def differentiate(self) -> "PuiseuxSeries":
        """d/dv, with d(log v)/dv = 1/v built in."""
        out: dict[TermKey, SymbolicScalar] = {}

        def acc(key, c):
            if c.is_zero():
                return
            s = out.get(key)
            out[key] = c if s is None else s + c

        for (q, e), c in self.terms.items():
            if q != 0:
                acc((q - 1, e), SymbolicScalar.from_rational(q) * c)
            if e == 1:
                acc((q - 1, 0), c)
        trunc = None if self.truncation_order is None else self.truncation_order - 1
        return PuiseuxSeries(self.var, out, trunc)

    def coefficient(self, exponent: Rat, log_power: int = 0) -> SymbolicScalar:
        return self.terms.get((Fraction(exponent), log_power), SymbolicScalar.zero())

    def evaluate_at_one(self) -> SymbolicScalar:
        """Value at v = 1 on the principal branch (v^q = 1, log v = 0)."""
        acc = SymbolicScalar.zero()
        for (q, e), c in self.terms.items():
            if e == 0:
                acc = acc + c
        return acc

    def map_coefficients(self, fn) -> "PuiseuxSeries":
        return PuiseuxSeries(self.var, {k: fn(c) for k, c in self.terms.items()},
                             self.truncation_order)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        return self.var == other.var and (self - other).is_zero()

    def __hash__(self):
        return hash((self.var, frozenset((k, hash(v)) for k, v in self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return f"PuiseuxSeries({self.var}; 0)"
        bits = []
        for (q, e) in sorted(self.terms):
            c = self.terms[(q, e)]
            s = f"[{c!r}]"
            if q:
                s += f"*{self.var}^{q}"
            if e:
                s += f"*log({self.var})"
            bits.append(s)
        tail = "" if self.truncation_order is None else f" + O({self.var}^{self.truncation_order})"
        return f"PuiseuxSeries({self.var}; " + " + ".join(bits) + tail + ")"


def binom_series(coeff: CycloNumber, exponent: int, order: Rat, var: str = "x") -> PuiseuxSeries:
    """(1 - coeff*x)^exponent truncated at x^order (binomial expansion for exponent < 0)."""
    order = Fraction(order)
    if order < 0:
        raise ValueError("truncation order must be >= 0")
    one = CycloNumber.from_rational(1)
    terms: dict[TermKey, SymbolicScalar] = {}
    if exponent >= 0:
        # finite polynomial; keep exactness but respect the requested truncation
        power = min(exponent, int(order))
        binom = Fraction(1)
        sign_pow = one
        for j in range(power + 1):
            if j > 0:
                binom = binom * Fraction(exponent - j + 1, j)
                sign_pow = sign_pow * (-coeff)
            c = CycloNumber.from_rational(binom) * sign_pow
            if not c.is_zero():
                terms[(Fraction(j), 0)] = SymbolicScalar.from_cyclo(c)
        trunc = None if exponent <= order else order
        return PuiseuxSeries(var, terms, trunc)
    e = -exponent
    # (1 - c x)^{-e} = sum_j C(e+j-1, j) c^j x^j
    binom = Fraction(1)
    cpow = one
    for j in range(int(order) + 1):
        if j > 0:
            binom = binom * Fraction(e + j - 1, j)
            cpow = cpow * coeff
        terms[(Fraction(j), 0)] = SymbolicScalar.from_cyclo(CycloNumber.from_rational(binom) * cpow)
    return PuiseuxSeries(var, terms, order)
