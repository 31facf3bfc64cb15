"""Exact arithmetic in the Gaussian rationals Q(i).

A value is stored as ``(a + b*i) / d`` with integers ``a, b`` and ``d > 0``
and ``gcd(a, b, d) == 1``, so equal values always have identical fields.
"""

from __future__ import annotations


from fractions import Fraction
from math import gcd
from numbers import Rational

__all__ = ["GaussianRational", "GR", "ZERO", "ONE", "I", "parse_scalar"]


class GaussianRational:
    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re=0, im=0):
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        self._set(re.numerator * (d // re.denominator),
                  im.numerator * (d // im.denominator), d)

    def _set(self, a, b, d):
        g = gcd(a, b, d)
        if g != 1:
            a //= g
            b //= g
            d //= g
        self._a = a
        self._b = b
        self._d = d

    @classmethod
    def _raw(cls, a, b, d):
        obj = object.__new__(cls)
        obj._set(a, b, d)
        return obj

    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    def is_real(self) -> bool:
        return self._b == 0

    @staticmethod
    def coerce(x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, int):
            return GaussianRational._raw(x, 0, 1)
        if isinstance(x, Rational):
            return GaussianRational._raw(x.numerator, 0, x.denominator)
        if isinstance(x, complex):
            return GaussianRational(Fraction(x.real), Fraction(x.imag))
        if isinstance(x, str):
            return parse_scalar(x)
        raise TypeError(f"cannot convert {type(x).__name__} to GaussianRational")

    def _other(self, x):
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Rational, complex)):
            return GaussianRational.coerce(x)
        return None

    # arithmetic

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if self._d == o._d:
            return GaussianRational._raw(self._a + o._a, self._b + o._b, self._d)
        return GaussianRational._raw(self._a * o._d + o._a * self._d,
                                     self._b * o._d + o._b * self._d,
                                     self._d * o._d)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational._raw(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        a, b, d = self._a, self._b, self._d
        c, e, f = o._a, o._b, o._d
        if b == 0 and e == 0:
            return GaussianRational._raw(a * c, 0, d * f)
        return GaussianRational._raw(a * c - b * e, a * e + b * c, d * f)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        a, b, d = self._a, self._b, self._d
        norm = a * a + b * b
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        # d / (a + bi) = d (a - bi) / (a^2 + b^2)
        return GaussianRational._raw(d * a, -d * b, norm)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> "GaussianRational":
        return GaussianRational._raw(self._a, -self._b, self._d)

    def abs2(self) -> Fraction:
        """Squared modulus, exact."""
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    # comparison / hashing

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self._a == o._a and self._b == o._b and self._d == o._d

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __bool__(self):
        return not self.is_zero()

    def __complex__(self):
        return complex(self._a / self._d, self._b / self._d)

    def __repr__(self):
        return f"GR({str(self)!r})"

    def __str__(self):
        re_, im_ = self.re, self.im
        if im_ == 0:
            return str(re_)
        if im_ == 1:
            ims = "i"
        elif im_ == -1:
            ims = "-i"
        else:
            ims = f"{im_}i"
        if re_ == 0:
            return ims
        if ims.startswith("-"):
            return f"{re_}{ims}"
        return f"{re_}+{ims}"


def _rational(part: str, text: str) -> Fraction:
    if part in ("", "+"):
        return Fraction(1)
    if part == "-":
        return Fraction(-1)
    try:
        return Fraction(part)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"invalid Gaussian rational: {text!r}") from None


def parse_scalar(text: str) -> GaussianRational:
    """Parse ``"a/b+c/di"`` forms such as ``"1/2+3/4i"``, ``"-2i"``, ``"5"``, ``"i"``."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("invalid Gaussian rational: empty string")
    if not s.endswith("i"):
        if "i" in s:
            raise ValueError(f"invalid Gaussian rational: {text!r}")
        return GaussianRational(_rational(s, text), 0)
    body = s[:-1]
    split = max(body.rfind("+"), body.rfind("-"))
    if split > 0:
        re_part, im_part = body[:split], body[split:]
        if "i" in re_part or re_part[-1] in "/+-":
            raise ValueError(f"invalid Gaussian rational: {text!r}")
        re_ = Fraction(_rational(re_part, text))
    else:
        re_, im_part = Fraction(0), body
    return GaussianRational(re_, _rational(im_part, text))


def GR(x=0, im=0) -> GaussianRational:
    """Convenience constructor accepting ints, Fractions, strings."""
    if im == 0 and not isinstance(x, (int, Fraction)):
        return GaussianRational.coerce(x)
    return GaussianRational(x, im)


ZERO = GaussianRational._raw(0, 0, 1)
ONE = GaussianRational._raw(1, 0, 1)
I = GaussianRational._raw(0, 1, 1)
