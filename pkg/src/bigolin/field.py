"""Exact scalars: rationals and Gaussian rationals ``a + b i`` with ``a, b`` in Q.

Rationals are plain :class:`fractions.Fraction` values. :class:`GaussianRational`
wraps a pair of them and is the ground field for every matrix in the package.

Text form (used by the structure-equation files and JSON output)::

    3          1/2         -2/3i       1/2+1/3i       -1-i
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

Scalar = Union["GaussianRational", int, Fraction]

_RAT = r"[+-]?\d+(?:/\d+)?"
_GAUSS_RE = re.compile(
    rf"^(?:(?P<re>{_RAT})(?P<im>[+-](?:\d+(?:/\d+)?)?)i"  # a+bi, a-i
    rf"|(?P<pure>{_RAT}|[+-]?)i"  # bi, i, -i
    rf"|(?P<real>{_RAT}))$"
)


def format_rational(x: Fraction) -> str:
    """Lowest-terms ``p/q`` text, with the ``/1`` dropped for integers."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not re.fullmatch(_RAT, text):
        raise ValueError(f"not a rational number: {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def _sign_only(token: str) -> Fraction:
    if token in ("", "+"):
        return Fraction(1)
    if token == "-":
        return Fraction(-1)
    return parse_rational(token)


class GaussianRational:
    """An element of Q(i), immutable and always stored in canonical form."""

    __slots__ = ("_re", "_im")

    def __init__(self, re: Scalar = 0, im: int | Fraction = 0):
        if isinstance(re, GaussianRational):
            if im:
                raise TypeError("imaginary part given twice")
            self._re, self._im = re._re, re._im
            return
        if not isinstance(re, (int, _RationalABC)) or not isinstance(im, (int, _RationalABC)):
            raise TypeError(f"Gaussian rationals need rational parts, got {re!r}, {im!r}")
        self._re = Fraction(re)
        self._im = Fraction(im)

    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def im(self) -> Fraction:
        return self._im

    @classmethod
    def coerce(cls, value: Scalar) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        return cls(value)

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """Parse the text form, e.g. ``"1/2+1/3i"`` or ``"-i"``."""
        m = _GAUSS_RE.match(text.strip())
        if m is None:
            raise ValueError(f"not a Gaussian rational: {text!r}")
        if m.group("real") is not None:
            return cls(parse_rational(m.group("real")))
        if m.group("pure") is not None:
            return cls(0, _sign_only(m.group("pure")))
        return cls(parse_rational(m.group("re")), _sign_only(m.group("im")))

    def __str__(self) -> str:
        if not self._im:
            return format_rational(self._re)
        if self._im == 1:
            im = "i"
        elif self._im == -1:
            im = "-i"
        else:
            im = format_rational(self._im) + "i"
        if not self._re:
            return im
        if not im.startswith("-"):
            im = "+" + im
        return format_rational(self._re) + im

    def __repr__(self) -> str:
        return f"GaussianRational({str(self)!r})"

    # arithmetic

    def conj(self) -> "GaussianRational":
        return GaussianRational(self._re, -self._im)

    def is_real(self) -> bool:
        return not self._im

    def __bool__(self) -> bool:
        return bool(self._re) or bool(self._im)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GaussianRational):
            return self._re == other._re and self._im == other._im
        if isinstance(other, (int, _RationalABC)):
            return not self._im and self._re == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self._im:
            return hash(self._re)
        return hash((self._re, self._im))

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self._re, -self._im)

    def __pos__(self) -> "GaussianRational":
        return self

    def __add__(self, other: Scalar) -> "GaussianRational":
        if not isinstance(other, GaussianRational):
            if isinstance(other, (int, _RationalABC)):
                return GaussianRational(self._re + other, self._im)
            return NotImplemented
        return GaussianRational(self._re + other._re, self._im + other._im)

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> "GaussianRational":
        if not isinstance(other, GaussianRational):
            if isinstance(other, (int, _RationalABC)):
                return GaussianRational(self._re - other, self._im)
            return NotImplemented
        return GaussianRational(self._re - other._re, self._im - other._im)

    def __rsub__(self, other: Scalar) -> "GaussianRational":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "GaussianRational":
        if not isinstance(other, GaussianRational):
            if isinstance(other, (int, _RationalABC)):
                return GaussianRational(self._re * other, self._im * other)
            return NotImplemented
        a, b, c, d = self._re, self._im, other._re, other._im
        if not b and not d:
            return GaussianRational(a * c)
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """``z * conj(z)``, a nonnegative rational."""
        return self._re * self._re + self._im * self._im

    def inverse(self) -> "GaussianRational":
        if not self:
            raise ZeroDivisionError("division by zero in Q(i)")
        n = self.norm()
        return GaussianRational(self._re / n, -self._im / n)

    def __truediv__(self, other: Scalar) -> "GaussianRational":
        other = GaussianRational.coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other: Scalar) -> "GaussianRational":
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "GaussianRational":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __reduce__(self):
        return (GaussianRational, (self._re, self._im))


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def conj(z: Scalar) -> GaussianRational:
    return GaussianRational.coerce(z).conj()


def gq(value: Scalar | str) -> GaussianRational:
    """Shorthand constructor accepting ints, fractions, or the text form."""
    return GaussianRational.coerce(value)
