"""Univariate polynomials over the Gaussian rationals, and their fraction field.

UniPoly is dense (tuple of coefficients, index = degree in z, no trailing
zeros).  RatFunc keeps the canonical form gcd(num, den) = 1 with a monic
denominator, so equality of rational functions is structural.
"""

from __future__ import annotations

from .scalars import GaussRat, scalar_str


class PoleError(ZeroDivisionError):
    """Evaluation of a rational function at a zero of its denominator."""


def _coerce_scalar(x):
    if isinstance(x, GaussRat):
        return x
    if isinstance(x, int):
        return GaussRat(x)
    from fractions import Fraction
    if isinstance(x, Fraction):
        return GaussRat(x)
    return None


class UniPoly:
    """Dense exact polynomial in one variable z."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = []
        for c in coeffs:
            s = _coerce_scalar(c)
            if s is None:
                raise TypeError(f"bad coefficient {c!r}")
            cs.append(s)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def one(cls):
        return cls((1,))

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial gets the sentinel -1."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> GaussRat:
        if not self.coeffs:
            raise ValueError("leading coefficient of the zero polynomial")
        return self.coeffs[-1]

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        s = _coerce_scalar(other)
        if s is None:
            return NotImplemented
        return self == UniPoly((s,))

    def __hash__(self):
        return hash(self.coeffs)

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            return other
        s = _coerce_scalar(other)
        if s is None:
            return None
        return UniPoly((s,))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self or not o:
            return UniPoly()
        out = [GaussRat(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(o.coeffs)
        if dq < 0:
            return UniPoly(), self
        quo = [GaussRat(0)] * (dq + 1)
        dlc = o.lc
        for k in range(dq, -1, -1):
            c = rem[k + len(o.coeffs) - 1] / dlc
            quo[k] = c
            if c:
                for j, b in enumerate(o.coeffs):
                    rem[k + j] = rem[k + j] - c * b
        return UniPoly(quo), UniPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "UniPoly":
        q, r = divmod(self, other)
        if r:
            raise ValueError("exact_div: division leaves a remainder")
        return q

    def monic(self) -> "UniPoly":
        if not self:
            raise ValueError("monic form of the zero polynomial")
        lc = self.lc
        if lc == 1:
            return self
        return UniPoly(tuple(c / lc for c in self.coeffs))

    def eval(self, alpha: GaussRat) -> GaussRat:
        acc = GaussRat(0)
        for c in reversed(self.coeffs):
            acc = acc * alpha + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly(tuple(c * k for k, c in enumerate(self.coeffs) if k))

    def shift_up(self, k: int) -> "UniPoly":
        """Multiply by z^k."""
        if not self:
            return self
        return UniPoly((GaussRat(0),) * k + self.coeffs)

    def __str__(self):
        return poly_str(self)

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"


Z = UniPoly((0, 1))


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd by the Euclidean algorithm."""
    if not a and not b:
        raise ValueError("gcd of two zeros")
    while b:
        a, b = b, a % b
    return a.monic()


def poly_lcm_monic(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic lcm; both inputs must be non-zero."""
    if not a or not b:
        raise ValueError("lcm with a zero polynomial")
    return (a * b).exact_div(poly_gcd(a, b)).monic()


class RatFunc:
    """Quotient of two UniPoly, kept normalized (coprime, den monic)."""

    __slots__ = ("num", "den")

    def __init__(self, num=UniPoly(), den=UniPoly((1,))):
        if not isinstance(num, UniPoly):
            num = UniPoly((num,)) if _coerce_scalar(num) is not None else num
        if not isinstance(den, UniPoly):
            den = UniPoly((den,)) if _coerce_scalar(den) is not None else den
        if not isinstance(num, UniPoly) or not isinstance(den, UniPoly):
            raise TypeError("RatFunc needs UniPoly or scalar parts")
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            self.num = UniPoly()
            self.den = UniPoly((1,))
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
        lc = den.lc
        if lc != 1:
            num = UniPoly(tuple(c / lc for c in num.coeffs))
            den = den.monic()
        self.num = num
        self.den = den

    @classmethod
    def zero(cls):
        return cls(UniPoly())

    @classmethod
    def one(cls):
        return cls(UniPoly((1,)))

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, UniPoly):
            return RatFunc(other)
        if _coerce_scalar(other) is not None:
            return RatFunc(UniPoly((other,)))
        return None

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def eval(self, alpha: GaussRat) -> GaussRat:
        d = self.den.eval(alpha)
        if not d:
            raise PoleError(f"pole at z = {scalar_str(alpha)}")
        return self.num.eval(alpha) / d

    def __str__(self):
        if self.den.degree == 0:
            return poly_str(self.num)
        return f"({poly_str(self.num)})/({poly_str(self.den)})"

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"


def num_of(r: RatFunc) -> UniPoly:
    """Numerator of a non-zero rational function in normalized form."""
    if not r:
        raise ValueError("num of zero")
    return r.num


def _coeff_str(c: GaussRat) -> str:
    s = scalar_str(c)
    if ("+" in s[1:]) or ("-" in s[1:]):
        s = f"({s})"
    return s


def poly_str(p: UniPoly, var: str = "z") -> str:
    """Human form, highest degree first: ``z^2 - (1+1i)*z + 1i``."""
    if not p:
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        if k == 0:
            term = _coeff_str(c)
        else:
            v = var if k == 1 else f"{var}^{k}"
            if c == 1:
                term = v
            elif c == -1:
                term = f"-{v}"
            else:
                term = f"{_coeff_str(c)}*{v}"
        if parts:
            if term.startswith("-"):
                parts.append(" - " + term[1:])
            else:
                parts.append(" + " + term)
        else:
            parts.append(term)
    return "".join(parts)
