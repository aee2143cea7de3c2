"""Exact scalars: rationals and Gaussian rationals with canonical forms.

Everything downstream (polynomials, rational functions, Groebner runs)
is built on these.  There is deliberately no floating point here; the
only approximate numbers in the whole package live in the root finder,
and those never enter an exact computation unverified.
"""

from __future__ import annotations

import re
from fractions import Fraction

_RAT = r"-?\d+(?:/\d+)?"
_REAL_RE = re.compile(rf"^({_RAT})$")
_IMAG_RE = re.compile(rf"^({_RAT})i$")
_FULL_RE = re.compile(rf"^({_RAT})([+-])({_RAT})i$")
_SIGNED_IMAG_RE = re.compile(rf"^([+-])({_RAT})i$")


class GaussRat:
    """An element of Q(i): re + im*i with exact Fraction parts.

    Plain rationals are the im == 0 case.  Fraction keeps each part in
    lowest terms with positive denominator, so equality is structural.
    Instances are treated as immutable.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    # -- coercion -----------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, GaussRat):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussRat(x)
        return None

    # -- ring/field operations ----------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRat(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRat(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRat(o.re - self.re, o.im - self.im)

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRat(self.re * o.re - self.im * o.im,
                        self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def inverse(self):
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("inverse of zero scalar")
        return GaussRat(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = GaussRat(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- structure ------------------------------------------------------

    def conjugate(self):
        return GaussRat(self.re, -self.im)

    def norm(self) -> Fraction:
        """re^2 + im^2, always a non-negative Fraction."""
        return self.re * self.re + self.im * self.im

    @property
    def is_rational(self) -> bool:
        return self.im == 0

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __str__(self):
        return scalar_str(self)

    def __repr__(self):
        return f"GaussRat({self.re!r}, {self.im!r})"


ZERO = GaussRat(0)
ONE = GaussRat(1)
I = GaussRat(0, 1)


def _frac_str(f: Fraction) -> str:
    return str(f)


def scalar_str(x: GaussRat) -> str:
    """Canonical text form, inverse of parse_scalar.

    Examples: ``3/4``, ``-1/6i``, ``1/2+1/3i``.
    """
    if x.im == 0:
        return _frac_str(x.re)
    if x.re == 0:
        return _frac_str(x.im) + "i"
    sign = "+" if x.im > 0 else "-"
    return _frac_str(x.re) + sign + _frac_str(abs(x.im)) + "i"


def parse_scalar(text: str, field: str = "Qi") -> GaussRat:
    """Parse a scalar literal.

    Grammar (whitespace-free):
        rat   := ['-'] digits ['/' digits]
        gauss := rat | [rat] ('+'|'-') rat 'i' | rat 'i'

    With field="Q" any non-zero imaginary part is rejected.
    """
    if not isinstance(text, str):
        raise ValueError(f"scalar must be a string, got {type(text).__name__}")
    s = text.strip()
    m = _REAL_RE.match(s)
    if m:
        return GaussRat(Fraction(m.group(1)))
    value = None
    m = _IMAG_RE.match(s)
    if m:
        value = GaussRat(0, Fraction(m.group(1)))
    if value is None:
        m = _SIGNED_IMAG_RE.match(s)
        if m:
            im = Fraction(m.group(2))
            value = GaussRat(0, im if m.group(1) == "+" else -im)
    if value is None:
        m = _FULL_RE.match(s)
        if m:
            im = Fraction(m.group(3))
            value = GaussRat(Fraction(m.group(1)),
                             im if m.group(2) == "+" else -im)
    if value is None:
        raise ValueError(f"malformed scalar {text!r}")
    if field == "Q" and value.im != 0:
        raise ValueError(f"scalar {text!r} is not rational but the field is Q")
    if field not in ("Q", "Qi"):
        raise ValueError(f"unknown field {field!r} (expected 'Q' or 'Qi')")
    return value
