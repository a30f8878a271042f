"""Exact coefficient fields and the combinatorics built on them.

Three field variants are supported, all with exact arithmetic and no
floating point anywhere:

* rationals (arbitrary-precision ``Fraction``);
* cyclotomic fields Q(zeta_N), stored as coefficient vectors in the power
  basis of Q[x]/(Phi_N(x));
* rational functions in one transcendental symbol ``q`` over Q, stored as
  reduced quotients of integer-coefficient polynomials.

The module also provides multiplicative-order queries, Gaussian binomial
coefficients (computed through the Pascal recurrence as integer
polynomials, never by dividing evaluated factorials), and the d-adic
"hat" arithmetic used by the coradical filtration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import FieldMismatchError

# ---------------------------------------------------------------------------
# dense polynomial helpers (coefficients ascending, trailing zeros trimmed)


def _trim(coeffs):
    end = len(coeffs)
    while end > 0 and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


def poly_add(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def poly_neg(a):
    return tuple(-c for c in a)


def poly_sub(a, b):
    return poly_add(a, poly_neg(b))


def poly_mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c == 0:
            continue
        for j, d in enumerate(b):
            out[i + j] += c * d
    return _trim(out)


def poly_divmod(a, b):
    """Quotient and remainder in Q[x]; coefficients become ``Fraction``."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in a]
    quo = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = Fraction(b[-1])
    while len(rem) >= len(b):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) < len(b):
            break
        factor = rem[-1] / lead
        shift = len(rem) - len(b)
        quo[shift] = factor
        for i, c in enumerate(b):
            rem[shift + i] -= factor * Fraction(c)
        rem.pop()
    return _trim(quo), _trim(rem)


def poly_int_content(a):
    return math.gcd(*(abs(int(c)) for c in a)) if a else 0


def poly_primitive(a):
    """Primitive integer part of a Fraction/int polynomial, leading coeff > 0."""
    if not a:
        return ()
    lcm_den = 1
    for c in a:
        lcm_den = lcm_den * Fraction(c).denominator // math.gcd(lcm_den, Fraction(c).denominator)
    ints = [int(Fraction(c) * lcm_den) for c in a]
    g = math.gcd(*(abs(c) for c in ints))
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return tuple(ints)


def poly_gcd(a, b):
    """Monic-free gcd of integer polynomials: primitive, positive leading coeff."""
    a, b = _trim(a), _trim(b)
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if not a:
        return ()
    return poly_primitive(a)


def eval_int_poly(coeffs, x: "Scalar") -> "Scalar":
    """Evaluate an integer polynomial at a scalar by Horner's rule."""
    acc = x.field.from_int(0)
    for c in reversed(coeffs):
        acc = acc * x + x.field.from_int(c)
    return acc


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int):
    """The n-th cyclotomic polynomial, by iterated exact division of x^n - 1."""
    if n <= 0:
        raise ValueError("cyclotomic index must be positive")
    poly = (-1,) + (0,) * (n - 1) + (1,)
    for d in range(1, n):
        if n % d == 0:
            quo, rem = poly_divmod(poly, cyclotomic_poly(d))
            if rem:
                raise ArithmeticError("cyclotomic division left a remainder")
            poly = poly_primitive(quo)
    return tuple(int(c) for c in poly)


# ---------------------------------------------------------------------------
# fields


class Field:
    """Common interface of the three coefficient fields."""

    kind: str

    def from_int(self, n) -> "Scalar":
        return self.from_fraction(Fraction(n))

    def from_fraction(self, value) -> "Scalar":
        raise NotImplementedError

    def zero(self) -> "Scalar":
        return self.from_int(0)

    def one(self) -> "Scalar":
        return self.from_int(1)

    def root_of_unity(self, n: int) -> "Scalar | None":
        """A primitive n-th root of unity in this field, or None."""
        if n == 1:
            return self.one()
        if n == 2:
            return self.from_int(-1)
        return None

    def describe(self) -> str:
        return self.kind


@dataclass(frozen=True)
class RationalField(Field):
    kind: str = "rational"

    def from_fraction(self, value):
        return Scalar(self, Fraction(value))

    def _add(self, a, b):
        return a + b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def _is_zero(self, a):
        return a == 0


@dataclass(frozen=True)
class CyclotomicField(Field):
    """Q(zeta_N) in the power basis of Q[x]/(Phi_N(x))."""

    order: int
    kind: str = "cyclotomic"

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("cyclotomic order must be >= 1")

    @property
    def modulus(self):
        return cyclotomic_poly(self.order)

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    def from_fraction(self, value):
        vec = [Fraction(0)] * self.degree
        vec[0] = Fraction(value)
        return Scalar(self, tuple(vec))

    def zeta(self, power: int = 1):
        """zeta_N ** power, for any integer power."""
        power %= self.order
        vec = (0,) * power + (1,)
        return Scalar(self, self._reduce(vec))

    def _reduce(self, coeffs):
        coeffs = _trim([Fraction(c) for c in coeffs])
        if len(coeffs) > self.degree:
            _, coeffs = poly_divmod(coeffs, self.modulus)
        out = list(coeffs) + [Fraction(0)] * (self.degree - len(coeffs))
        return tuple(out[: self.degree])

    def _add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def _mul(self, a, b):
        return self._reduce(poly_mul(a, b))

    def _neg(self, a):
        return tuple(-x for x in a)

    def _inv(self, a):
        # extended Euclid in Q[x] against Phi_N, which is coprime to any a != 0
        if self._is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        r0, r1 = self.modulus, _trim(a)
        s0, s1 = (), (Fraction(1),)
        while r1:
            quo, rem = poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, poly_sub(s0, poly_mul(quo, s1))
        if len(r0) != 1:
            raise ArithmeticError("cyclotomic modulus not coprime to element")
        inv_lead = 1 / Fraction(r0[0])
        return self._reduce(tuple(c * inv_lead for c in s0))

    def _is_zero(self, a):
        return all(c == 0 for c in a)

    def root_of_unity(self, n: int):
        # the roots of unity in Q(zeta_N) form the cyclic group <-zeta_N>
        group_order = self.order if self.order % 2 == 0 else 2 * self.order
        if n < 1 or group_order % n:
            return super().root_of_unity(n) if n <= 2 else None
        gen = self.zeta() * self.from_int(-1) if self.order % 2 else self.zeta()
        return gen ** (group_order // n)

    def describe(self) -> str:
        return f"cyclotomic({self.order})"


@dataclass(frozen=True)
class RationalFunctionField(Field):
    """Q(q): reduced quotients of integer polynomials in the symbol q."""

    kind: str = "rational-function"

    def from_fraction(self, value):
        value = Fraction(value)
        if not value:
            return Scalar(self, ((), (1,)))
        return Scalar(self, ((value.numerator,), (value.denominator,)))

    def q(self, power: int = 1):
        if power >= 0:
            return Scalar(self, ((0,) * power + (1,), (1,)))
        return Scalar(self, ((1,), (0,) * (-power) + (1,)))

    def _make(self, num, den):
        """Reduce num/den to coprime integer polynomials with no shared
        content and a positive leading denominator coefficient."""
        num, den = _trim(num), _trim(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return ((), (1,))
        lcm = 1
        for c in list(num) + list(den):
            d = Fraction(c).denominator
            lcm = lcm * d // math.gcd(lcm, d)
        num = [int(Fraction(c) * lcm) for c in num]
        den = [int(Fraction(c) * lcm) for c in den]
        g = math.gcd(poly_int_content(num), poly_int_content(den))
        num = [c // g for c in num]
        den = [c // g for c in den]
        gp = poly_gcd(num, den)
        if len(gp) > 1:
            num = [int(c) for c in poly_divmod(num, gp)[0]]
            den = [int(c) for c in poly_divmod(den, gp)[0]]
            g = math.gcd(poly_int_content(num), poly_int_content(den))
            num = [c // g for c in num]
            den = [c // g for c in den]
        if den[-1] < 0:
            num = [-c for c in num]
            den = [-c for c in den]
        return (_trim(num), _trim(den))

    def _add(self, a, b):
        return self._make(
            poly_add(poly_mul(a[0], b[1]), poly_mul(b[0], a[1])), poly_mul(a[1], b[1])
        )

    def _mul(self, a, b):
        return self._make(poly_mul(a[0], b[0]), poly_mul(a[1], b[1]))

    def _neg(self, a):
        return (poly_neg(a[0]), a[1])

    def _inv(self, a):
        if not a[0]:
            raise ZeroDivisionError("inverse of zero")
        return self._make(a[1], a[0])

    def _is_zero(self, a):
        return not a[0]


# ---------------------------------------------------------------------------
# scalars


class Scalar:
    """Immutable element of one of the coefficient fields."""

    __slots__ = ("field", "data")

    def __init__(self, field: Field, data):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "data", data)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def _lift(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"cannot mix {self.field.describe()} and {other.field.describe()} scalars"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_fraction(Fraction(other))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field._add(self.data, other.data))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.field, self.field._neg(self.data))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field._mul(self.data, other.data))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        return Scalar(self.field, self.field._inv(self.data))

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = self.field.one()
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_fraction(Fraction(other))
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field == other.field and self.data == other.data

    def __hash__(self):
        return hash((self.field, self.data))

    def __bool__(self):
        return not self.field._is_zero(self.data)

    def is_zero(self) -> bool:
        return not self

    def is_one(self) -> bool:
        return self == self.field.one()

    def __repr__(self):
        return f"Scalar({self.data!r} over {self.field.describe()})"


def embed_rational(x: Scalar, target: Field) -> Scalar:
    """Explicitly embed a rational scalar into a larger field."""
    if x.field.kind != "rational":
        raise FieldMismatchError("embed_rational expects a rational scalar")
    return target.from_fraction(x.data)


# ---------------------------------------------------------------------------
# multiplicative order

def mul_order(x: Scalar) -> int | None:
    """Smallest n >= 1 with x**n == 1, or None when no such n exists.

    Cyclotomic scalars are settled exactly by iterating powers up to
    2N, a bound on the order of any root of unity in Q(zeta_N).
    Rational-function scalars have finite order only for the constants 1, -1.
    """
    if x.is_zero():
        raise ValueError("multiplicative order of zero is undefined")
    field = x.field
    if field.kind == "rational":
        if x.data == 1:
            return 1
        if x.data == -1:
            return 2
        return None
    if field.kind == "rational-function":
        num, den = x.data
        if num == (1,) and den == (1,):
            return 1
        if num == (-1,) and den == (1,):
            return 2
        return None
    bound = 2 * field.order
    power = x
    for n in range(1, bound + 1):
        if power.is_one():
            return n
        power = power * x
    return None


def format_order(n: int | None) -> str:
    return "infinite" if n is None else str(n)


# ---------------------------------------------------------------------------
# Gaussian binomials

def q_int(n: int, x: Scalar) -> Scalar:
    """1 + x + ... + x**(n-1)."""
    if n < 0:
        raise ValueError("q_int needs n >= 0")
    acc = x.field.zero()
    power = x.field.one()
    for _ in range(n):
        acc = acc + power
        power = power * x
    return acc


def q_factorial(n: int, x: Scalar) -> Scalar:
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    acc = x.field.one()
    for k in range(1, n + 1):
        acc = acc * q_int(k, x)
    return acc


@lru_cache(maxsize=None)
def gaussian_binomial_poly(n: int, i: int):
    """The Gaussian binomial as an integer polynomial in q.

    Built by the Pascal recurrence so that evaluation stays exact at roots
    of unity, where the factorial quotient is not defined.
    """
    if i < 0 or i > n:
        raise ValueError(f"binomial index {i} out of range 0..{n}")
    if i == 0 or i == n:
        return (1,)
    left = gaussian_binomial_poly(n - 1, i - 1)
    right = poly_mul((0,) * i + (1,), gaussian_binomial_poly(n - 1, i))
    return poly_add(left, right)


def q_binomial(n: int, i: int, x: Scalar) -> Scalar:
    return eval_int_poly(gaussian_binomial_poly(n, i), x)


def ordinary_binomial(n: int, i: int) -> int:
    return math.comb(n, i)


# ---------------------------------------------------------------------------
# hat arithmetic


@dataclass(frozen=True)
class HatProfile:
    """Euclidean data of m relative to the order parameter d.

    For finite d > 1, m = d*q + r with 0 <= r < d; for d = 1 or d
    infinite (None), q = m and r = 0. The reduced value is hat = q + r.
    """

    m: int
    d: int | None
    q: int
    r: int
    hat: int


def hat(m: int, d: int | None) -> HatProfile:
    if m < 0:
        raise ValueError("hat needs m >= 0")
    if d is not None and d > 1:
        q, r = divmod(m, d)
    else:
        q, r = m, 0
    return HatProfile(m=m, d=d, q=q, r=r, hat=q + r)


def hat_value(m: int, d: int | None) -> int:
    return hat(m, d).hat


def prec(p: int, m: int, d: int | None) -> bool:
    """The partial order: p `prec` m iff q_p <= q_m and r_p <= r_m."""
    hp, hm = hat(p, d), hat(m, d)
    return hp.q <= hm.q and hp.r <= hm.r
