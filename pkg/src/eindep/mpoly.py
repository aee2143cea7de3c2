"""Sparse multivariate polynomials over an abstract coefficient field.

A MultiPoly maps exponent tuples to non-zero coefficients.  The
coefficient type is anything with field arithmetic, truthiness for
zero-testing and structural equality: in practice GaussRat (the field K)
or RatFunc (the field K(z)).  All orderings live in OrderSpec; a
polynomial itself is order-agnostic.
"""

from __future__ import annotations

from collections import namedtuple

from .ordering import OrderSpec, mono_div, mono_divisible, mono_gcd, mono_mul
from .unipoly import PoleError, RatFunc


class MultiPoly:
    """Term map {exponent tuple -> coefficient}, zero terms never stored."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        out = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for mono, coeff in items:
                mono = tuple(mono)
                if len(mono) != n:
                    raise ValueError(
                        f"exponent vector {mono} has length {len(mono)}, expected {n}")
                if any(e < 0 for e in mono):
                    raise ValueError(f"negative exponent in {mono}")
                if not coeff:
                    continue
                if mono in out:
                    c = out[mono] + coeff
                    if c:
                        out[mono] = c
                    else:
                        del out[mono]
                else:
                    out[mono] = coeff
        self.terms = out

    @classmethod
    def constant(cls, n: int, coeff):
        return cls(n, {(0,) * n: coeff})

    @classmethod
    def variable(cls, n: int, k: int, one):
        """The polynomial x_k (0-based) with the given unit coefficient."""
        mono = tuple(1 if j == k else 0 for j in range(n))
        return cls(n, {mono: one})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("variable count mismatch")
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            if mono in out:
                c = out[mono] + coeff
                if c:
                    out[mono] = c
                else:
                    del out[mono]
            else:
                out[mono] = coeff
        p = MultiPoly.__new__(MultiPoly)
        p.n = self.n
        p.terms = out
        return p

    def __neg__(self):
        p = MultiPoly.__new__(MultiPoly)
        p.n = self.n
        p.terms = {m: -c for m, c in self.terms.items()}
        return p

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("variable count mismatch")
        out = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = mono_mul(ma, mb)
                c = ca * cb
                if m in out:
                    s = out[m] + c
                    if s:
                        out[m] = s
                    else:
                        del out[m]
                elif c:
                    out[m] = c
        p = MultiPoly.__new__(MultiPoly)
        p.n = self.n
        p.terms = out
        return p

    def term_mul(self, mono, coeff) -> "MultiPoly":
        """Multiply by the single term coeff * X^mono."""
        if not coeff:
            return MultiPoly(self.n)
        p = MultiPoly.__new__(MultiPoly)
        p.n = self.n
        p.terms = {mono_mul(m, mono): c * coeff for m, c in self.terms.items()}
        return p

    def scale(self, coeff) -> "MultiPoly":
        if not coeff:
            return MultiPoly(self.n)
        p = MultiPoly.__new__(MultiPoly)
        p.n = self.n
        p.terms = {m: c * coeff for m, c in self.terms.items()}
        return p

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def __repr__(self):
        return f"MultiPoly({self.n}, {{{', '.join(f'{m}: {c}' for m, c in sorted(self.terms.items()))}}})"


Lead = namedtuple("Lead", "mono coeff")


def leading(p: MultiPoly, order: OrderSpec) -> Lead:
    """Largest term under the order; error on the zero polynomial."""
    if not p.terms:
        raise ValueError("leading term of the zero polynomial")
    mono = max(p.terms, key=order.key)
    return Lead(mono, p.terms[mono])


def s_poly(p: MultiPoly, q: MultiPoly, order: OrderSpec) -> MultiPoly:
    """(lt(q)*p - lt(p)*q) / gcd(lmon(p), lmon(q)); leading terms cancel."""
    lp = leading(p, order)
    lq = leading(q, order)
    g = mono_gcd(lp.mono, lq.mono)
    left = p.term_mul(mono_div(lq.mono, g), lq.coeff)
    right = q.term_mul(mono_div(lp.mono, g), lp.coeff)
    return left - right


def iter_weak_division(p: MultiPoly, divisors, order: OrderSpec):
    """Yield (k, quot_mono, quot_coeff, s) after each reduction step.

    Mirrors weak division: while the current leading monomial is divisible
    by some divisor's leading monomial, subtract the matching multiple of
    the FIRST such divisor in list order.  Stops as soon as the leading
    monomial is stuck; the tail is never touched (that is what makes the
    division "weak").
    """
    leads = [leading(d, order) for d in divisors]
    s = p
    while s:
        lm, lc = leading(s, order)
        for k, (dm, dc) in enumerate(leads):
            if mono_divisible(lm, dm):
                qm = mono_div(lm, dm)
                qc = lc / dc
                s = s - divisors[k].term_mul(qm, qc)
                yield k, qm, qc, s
                break
        else:
            return


def weak_remainder(p: MultiPoly, divisors, order: OrderSpec):
    """Remainder plus the replayable trace [(divisor index, quotient mono), ...]."""
    s = p
    steps = []
    for k, qm, _qc, s in iter_weak_division(p, divisors, order):
        steps.append((k, qm))
    return s, steps


def specialize(p: MultiPoly, alpha) -> MultiPoly:
    """Evaluate every coefficient at z = alpha; drop terms that die."""
    out = {}
    for mono, coeff in p.terms.items():
        try:
            v = coeff.eval(alpha)
        except PoleError as exc:
            raise PoleError(
                f"coefficient {coeff} of monomial {mono} has a pole at z = {alpha}"
            ) from exc
        if v:
            out[mono] = v
    q = MultiPoly.__new__(MultiPoly)
    q.n = p.n
    q.terms = out
    return q


def lift_coeffs(p: MultiPoly) -> MultiPoly:
    """View a polynomial with UniPoly/scalar coefficients over K(z)."""
    return MultiPoly(p.n, {m: RatFunc(c) for m, c in p.terms.items()})


def substitute_linear(p: MultiPoly, images) -> MultiPoly:
    """Substitute variable i -> images[i] (a MultiPoly); expand exactly.

    The coefficients of p and of the images must live in the same field.
    """
    if len(images) != p.n:
        raise ValueError("need one image per variable")
    n_out = images[0].n if images else p.n
    cache = [dict() for _ in range(p.n)]

    def power(i, e):
        if e in cache[i]:
            return cache[i][e]
        if e == 1:
            v = images[i]
        else:
            v = power(i, e - 1) * images[i]
        cache[i][e] = v
        return v

    acc = MultiPoly(n_out)
    for mono, coeff in p.terms.items():
        prod = None
        for i, e in enumerate(mono):
            if e == 0:
                continue
            f = power(i, e)
            prod = f if prod is None else prod * f
        if prod is None:
            acc = acc + MultiPoly.constant(n_out, coeff)
        else:
            acc = acc + prod.scale(coeff)
    return acc


def supported_on_first(p: MultiPoly, k: int) -> bool:
    """True when no term involves a variable of index >= k."""
    return all(not any(m[k:]) for m in p.terms)


def restrict_vars(p: MultiPoly, k: int) -> MultiPoly:
    """Reinterpret a polynomial supported on the first k variables in k variables."""
    if not supported_on_first(p, k):
        raise ValueError(f"polynomial involves variables beyond the first {k}")
    return MultiPoly(k, {m[:k]: c for m, c in p.terms.items()})


def mpoly_str(p: MultiPoly, names=None, order: OrderSpec | None = None,
              prefix: str = "X") -> str:
    """Human form, e.g. ``1i*Y1 + Y2``; terms sorted by the given order
    or by graded lex when none is supplied."""
    if not p.terms:
        return "0"
    if names is None:
        names = [f"{prefix}{k + 1}" for k in range(p.n)]
    keyf = order.key if order else (lambda m: (sum(m), m))
    parts = []
    for mono in sorted(p.terms, key=keyf, reverse=True):
        coeff = p.terms[mono]
        vs = "*".join(
            (names[i] if e == 1 else f"{names[i]}^{e}")
            for i, e in enumerate(mono) if e)
        cs = str(coeff)
        if ("+" in cs[1:]) or ("-" in cs[1:]):
            cs = f"({cs})"
        if not vs:
            term = cs
        elif cs == "1":
            term = vs
        elif cs == "-1":
            term = f"-{vs}"
        else:
            term = f"{cs}*{vs}"
        if parts:
            if term.startswith("-"):
                parts.append(" - " + term[1:])
            else:
                parts.append(" + " + term)
        else:
            parts.append(term)
    return "".join(parts)
