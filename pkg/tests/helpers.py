"""Shared builders for the test suite: seeded random scalars, polynomials
and parametric polynomials, plus a few hand-construction shortcuts."""

from __future__ import annotations

from fractions import Fraction

from eindep.mpoly import MultiPoly
from eindep.scalars import GaussRat
from eindep.unipoly import RatFunc, UniPoly


def q(x, y=0):
    """Shortcut scalar: q('1/2'), q(1, -1) = 1 - i."""
    if isinstance(x, str):
        x = Fraction(x)
    if isinstance(y, str):
        y = Fraction(y)
    return GaussRat(x, y)


def up(*coeffs):
    """UniPoly from ascending coefficients, accepting ints/strings."""
    return UniPoly([q(c) if not isinstance(c, GaussRat) else c for c in coeffs])


def mp(n, *terms):
    """MultiPoly from (coeff, exponents...) tuples over GaussRat."""
    return MultiPoly(n, [(t[1:], q(t[0]) if not isinstance(t[0], GaussRat) else t[0])
                         for t in terms])


def mpz(n, *terms):
    """MultiPoly over K(z) from (coeff-as-UniPoly-or-int, exponents...)."""
    out = []
    for t in terms:
        c = t[0]
        if isinstance(c, UniPoly):
            c = RatFunc(c)
        elif not isinstance(c, RatFunc):
            c = RatFunc(up(c))
        out.append((t[1:], c))
    return MultiPoly(n, out)


def rand_scalar(rng, small=True):
    num = rng.randint(-4, 4)
    den = rng.randint(1, 3)
    if small and rng.random() < 0.7:
        return GaussRat(Fraction(num, den))
    return GaussRat(Fraction(num, den), Fraction(rng.randint(-3, 3), rng.randint(1, 2)))


def rand_nonzero_scalar(rng, small=True):
    while True:
        s = rand_scalar(rng, small)
        if s:
            return s


def rand_unipoly(rng, max_deg=2, allow_zero=True):
    deg = rng.randint(0, max_deg)
    p = UniPoly([rand_scalar(rng) for _ in range(deg + 1)])
    if not allow_zero and not p:
        return rand_unipoly(rng, max_deg, allow_zero)
    return p


def rand_ratfunc(rng, max_deg=2):
    num = rand_unipoly(rng, max_deg)
    den = rand_unipoly(rng, max_deg, allow_zero=False)
    return RatFunc(num, den)


def rand_nonzero_ratfunc(rng, max_deg=2):
    while True:
        r = rand_ratfunc(rng, max_deg)
        if r:
            return r


def rand_mono(rng, n, max_deg=2):
    return tuple(rng.randint(0, max_deg) for _ in range(n))


def rand_mpoly(rng, n, max_terms=3, max_deg=2, coeff=rand_scalar):
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        terms.append((rand_mono(rng, n, max_deg), coeff(rng)))
    return MultiPoly(n, terms)


def rand_mpoly_z(rng, n, max_terms=3, max_deg=2, coeff_deg=2):
    """Random parametric polynomial with polynomial (denominator-free) coefficients."""
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        c = rand_unipoly(rng, coeff_deg)
        terms.append((rand_mono(rng, n, max_deg), RatFunc(c)))
    return MultiPoly(n, terms)


def nonzero(poly_gen, rng, *args, **kwargs):
    while True:
        p = poly_gen(rng, *args, **kwargs)
        if p:
            return p
