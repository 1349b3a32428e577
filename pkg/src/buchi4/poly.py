"""Exact univariate polynomial arithmetic over the rationals.

UPoly stores a dense coefficient tuple, lowest degree first, every entry a
Fraction.  RatFunc is a reduced quotient of two UPoly with monic denominator.
QuadExt adjoins a square root alpha of

    g(t) = (t+1)(t+2)(t+3)(t+4)

to the rational function field; it is the ring in which the closed form of the
polynomial families lives.

The gcd uses the subresultant remainder sequence on integer-scaled inputs, so
degree 70+ instances coming from the extension curves stay exact and fast.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd
from typing import Iterable, Union

__all__ = [
    "UPoly",
    "RatFunc",
    "QuadExt",
    "NonExactDivision",
    "T",
    "QUAD_MODULUS",
    "upoly_gcd",
]

Scalar = Union[int, Fraction]


class NonExactDivision(ArithmeticError):
    """Polynomial division left a nonzero remainder where none was allowed."""


class UPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors ---------------------------------------------------

    @classmethod
    def const(cls, c: Scalar) -> "UPoly":
        return cls((c,))

    @classmethod
    def variable(cls) -> "UPoly":
        return cls((0, 1))

    # -- basic queries ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def is_integral(self) -> bool:
        """True when every coefficient is an integer."""
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise NonExactDivision("polynomial has non-integer coefficients")
        return [c.numerator for c in self.coeffs]

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return UPoly()
            return UPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, UPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = UPoly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "UPoly"):
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dr, db = len(rem) - 1, other.degree
        lb = other.lc()
        quot = [Fraction(0)] * max(dr - db + 1, 0)
        while dr >= db and rem:
            q = rem[-1] / lb
            quot[dr - db] = q
            for i, c in enumerate(other.coeffs):
                rem[dr - db + i] -= q * c
            while rem and rem[-1] == 0:
                rem.pop()
            dr = len(rem) - 1
        return UPoly(quot), UPoly(rem)

    def exact_div(self, other: "UPoly") -> "UPoly":
        q, r = divmod(self, _coerce(other))
        if not r.is_zero():
            raise NonExactDivision(f"remainder of degree {r.degree} in exact division")
        return q

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UPoly((other,))
        if not isinstance(other, UPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- calculus and evaluation -------------------------------------------

    def derivative(self) -> "UPoly":
        return UPoly(tuple(k * c for k, c in enumerate(self.coeffs) if k))

    def __call__(self, value):
        """Horner evaluation; value may be a scalar, UPoly or QuadExt."""
        if not self.coeffs:
            return Fraction(0)
        result = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            result = result * value + c
        return result

    def monic(self) -> "UPoly":
        if self.is_zero():
            return self
        lb = self.lc()
        return UPoly(tuple(c / lb for c in self.coeffs))

    def primitive_int(self) -> tuple[list[int], Fraction]:
        """Return (integer primitive coefficients with positive lc, scale).

        self == scale * primitive as polynomials.
        """
        if self.is_zero():
            return [], Fraction(0)
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // int_gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        content = 0
        for c in ints:
            content = int_gcd(content, c)
        if ints[-1] < 0:
            content = -content
        ints = [c // content for c in ints]
        return ints, Fraction(content, den)

    def __repr__(self):
        from .polytext import format_upoly

        return f"UPoly({format_upoly(self)})"


def _coerce(x) -> UPoly:
    if isinstance(x, UPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return UPoly((x,))
    return NotImplemented


T = UPoly.variable()


# -- gcd ------------------------------------------------------------------


def _int_prem(f: list[int], g: list[int]) -> list[int]:
    """Pseudo-remainder of integer coefficient lists, lowest degree first."""
    df, dg = len(f) - 1, len(g) - 1
    lg = g[-1]
    rem = [c * lg ** (df - dg + 1) for c in f]
    while len(rem) - 1 >= dg and rem:
        q, check = divmod(rem[-1], lg)
        assert check == 0
        shift = len(rem) - 1 - dg
        for i, c in enumerate(g):
            rem[shift + i] -= q * c
        while rem and rem[-1] == 0:
            rem.pop()
    return rem


def upoly_gcd(f: UPoly, g: UPoly) -> UPoly:
    """Monic gcd via the subresultant pseudo-remainder sequence."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    F, _ = f.primitive_int()
    G, _ = g.primitive_int()
    if len(F) < len(G):
        F, G = G, F
    gk = 1
    hk = 1
    while True:
        delta = (len(F) - 1) - (len(G) - 1)
        rem = _int_prem(F, G)
        if not rem:
            break
        if len(rem) == 1:
            G = [1]
            break
        divisor = gk * hk**delta
        assert all(c % divisor == 0 for c in rem)
        rem = [c // divisor for c in rem]
        F, G = G, rem
        gk = F[-1]
        hk = gk**delta // hk ** (delta - 1) if delta else hk
    content = 0
    for c in G:
        content = int_gcd(content, c)
    return UPoly([Fraction(c, content) for c in G]).monic()


# -- rational functions -----------------------------------------------------


class RatFunc:
    """Reduced quotient num/den of polynomials, denominator monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _coerce(num)
        den = UPoly((1,)) if den is None else _coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in rational function")
        if num.is_zero():
            den = UPoly((1,))
        elif den.degree > 0:
            common = upoly_gcd(num, den)
            if common.degree > 0:
                num = num.exact_div(common)
                den = den.exact_div(common)
        lb = den.lc()
        if lb != 1:
            num = num * (1 / lb)
            den = den * (1 / lb)
        self.num = num
        self.den = den

    @classmethod
    def of(cls, x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        return cls(x)

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def as_upoly(self) -> UPoly:
        if not self.is_polynomial():
            raise NonExactDivision("rational function is not a polynomial")
        return self.num

    def __add__(self, other):
        other = RatFunc.of(other) if isinstance(other, (int, Fraction, UPoly, RatFunc)) else None
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RatFunc.of(other))

    def __rsub__(self, other):
        return RatFunc.of(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, (int, Fraction, UPoly, RatFunc)):
            return NotImplemented
        other = RatFunc.of(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RatFunc.of(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RatFunc.of(other) / self

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, UPoly)):
            other = RatFunc.of(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, value: Scalar) -> Fraction:
        d = self.den(value)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at evaluation point")
        return self.num(value) / d

    def __repr__(self):
        from .polytext import format_upoly

        if self.is_polynomial():
            return f"RatFunc({format_upoly(self.num)})"
        return f"RatFunc(({format_upoly(self.num)}) / ({format_upoly(self.den)}))"


# x^2 = QUAD_MODULUS defines the quadratic extension used by the closed forms.
QUAD_MODULUS = (T + 1) * (T + 2) * (T + 3) * (T + 4)


class QuadExt:
    """Element u + v*alpha of Q(t)[alpha], alpha^2 = (t+1)(t+2)(t+3)(t+4)."""

    __slots__ = ("u", "v")

    def __init__(self, u, v=0):
        self.u = RatFunc.of(u)
        self.v = RatFunc.of(v)

    def conj(self) -> "QuadExt":
        return QuadExt(self.u, -self.v)

    def __add__(self, other):
        other = _quad(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadExt(self.u + other.u, self.v + other.v)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.u, -self.v)

    def __sub__(self, other):
        other = _quad(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _quad(other) + (-self)

    def __mul__(self, other):
        other = _quad(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadExt(
            self.u * other.u + self.v * other.v * QUAD_MODULUS,
            self.u * other.v + self.v * other.u,
        )

    __rmul__ = __mul__

    def norm(self) -> RatFunc:
        return self.u * self.u - self.v * self.v * QUAD_MODULUS

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if n.num.is_zero():
            raise ZeroDivisionError("element of norm zero has no inverse")
        return QuadExt(self.u / n, -self.v / n)

    def __truediv__(self, other):
        return self * _quad(other).inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadExt(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = _quad(other)
        if other is NotImplemented:
            return NotImplemented
        return self.u == other.u and self.v == other.v

    def __hash__(self):
        return hash((self.u, self.v))

    def __repr__(self):
        return f"QuadExt({self.u!r} + ({self.v!r})*alpha)"


def _quad(x):
    if isinstance(x, QuadExt):
        return x
    if isinstance(x, (int, Fraction, UPoly, RatFunc)):
        return QuadExt(x)
    return NotImplemented
