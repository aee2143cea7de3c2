"""Root extraction for the locus polynomial: approximate, then verify.

Heuristic half: simultaneous (Weierstrass/Durand-Kerner) iteration on the
squarefree part at a configurable binary precision, via mpmath.  Exact
half: each approximation is rounded to a Gaussian rational with bounded
numerator and denominator and kept only if it annihilates W exactly.
Verified roots are deflated out exactly; whatever is left is reported as
an unresolved factor together with the leftover approximations, never
silently dropped (roots outside the working field land there).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .scalars import GaussRat
from .unipoly import UniPoly, poly_gcd


class PrecisionError(RuntimeError):
    """Root approximation failed to converge; advise a higher precision."""


@dataclass
class UnresolvedFactor:
    """Exact factor whose roots could not be verified in the working field."""

    poly: UniPoly
    approx_roots: list


@dataclass
class RootReport:
    verified: list
    unresolved: list


def squarefree_part(w: UniPoly) -> UniPoly:
    if not w:
        raise ValueError("squarefree part of the zero polynomial")
    if w.degree == 0:
        return w.monic()
    g = poly_gcd(w, w.derivative())
    return w.exact_div(g).monic()


def _to_mpc(c: GaussRat) -> mpmath.mpc:
    re = mpmath.mpf(c.re.numerator) / mpmath.mpf(c.re.denominator)
    im = mpmath.mpf(c.im.numerator) / mpmath.mpf(c.im.denominator)
    return mpmath.mpc(re, im)


def _horner(coeffs, x):
    acc = mpmath.mpc(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _simultaneous_roots(poly: UniPoly, precision_bits: int):
    """All complex roots of a squarefree monic polynomial, all at once."""
    deg = poly.degree
    coeffs = [_to_mpc(c) for c in poly.coeffs]
    radius = 1 + max(abs(c) for c in coeffs[:-1]) if deg > 0 else 1
    seed = mpmath.mpc("0.4", "0.9")
    xs = [radius * seed ** (k + 1) for k in range(deg)]
    tol = mpmath.mpf(2) ** (-(precision_bits - 16))
    scale = max(mpmath.mpf(1), mpmath.mpf(radius))
    for _ in range(200 + 20 * deg):
        worst = mpmath.mpf(0)
        for k in range(deg):
            denom = mpmath.mpc(1)
            for j in range(deg):
                if j != k:
                    denom *= (xs[k] - xs[j])
            if denom == 0:
                # coincident iterates: nudge and continue
                xs[k] = xs[k] + tol * scale * (k + 1)
                worst = scale
                continue
            delta = _horner(coeffs, xs[k]) / denom
            xs[k] = xs[k] - delta
            worst = max(worst, abs(delta))
        if worst < tol * scale:
            return xs
    raise PrecisionError(
        f"root approximation did not converge at {precision_bits} bits; "
        f"rerun with a higher --precision")


def _mpf_to_fraction(x) -> Fraction:
    if x == 0:
        return Fraction(0)
    return Fraction(mpmath.nstr(x, mpmath.mp.dps, strip_zeros=False))


def _round_candidate(x, denom_bound: int, field: str):
    """Nearest bounded Gaussian rational, or None when out of reach."""
    re = _mpf_to_fraction(x.real).limit_denominator(denom_bound)
    im = _mpf_to_fraction(x.imag).limit_denominator(denom_bound)
    if abs(re.numerator) > denom_bound or abs(im.numerator) > denom_bound:
        return None
    if field == "Q" and im != 0:
        return None
    return GaussRat(re, im)


def find_roots(w: UniPoly, denom_bound: int = 10 ** 6,
               precision_bits: int = 256, field: str = "Qi") -> RootReport:
    """Verified roots of w in the working field plus honest leftovers."""
    if not w:
        raise ValueError("cannot extract roots of the zero polynomial")
    sf = squarefree_part(w)
    if sf.degree <= 0:
        return RootReport([], [])

    verified = []
    stray = []
    if sf.degree == 1:
        root = -sf.coeffs[0] / sf.coeffs[1]
        return RootReport([root], [])

    with mpmath.workprec(precision_bits):
        approx = _simultaneous_roots(sf, precision_bits)
        for x in approx:
            cand = _round_candidate(x, denom_bound, field)
            if cand is not None and not w.eval(cand) and cand not in verified:
                verified.append(cand)
            else:
                stray.append(complex(x))

    leftover = sf
    for r in verified:
        leftover = leftover.exact_div(UniPoly((-r, 1)))
    unresolved = []
    if leftover.degree > 0:
        unresolved.append(UnresolvedFactor(leftover.monic(), stray))
    return RootReport(verified, unresolved)
