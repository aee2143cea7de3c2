"""Exponent-vector monomials and the split elimination orders.

A monomial is a plain tuple of non-negative ints, one entry per variable.
An OrderSpec fixes how many leading variables are "kept" and which of the
two comparison modes is in force:

* ``elim-standard``: compare total degree in the *eliminated* variables
  (positions keep..N-1) first, then break ties by full lexicographic
  comparison of the exponent vector.  This is the usual elimination
  order: a basis element whose leading monomial avoids the eliminated
  variables avoids them everywhere, which is exactly what makes
  intersection-with-a-subring extraction sound.

* ``paper-literal``: compare total degree in the *kept* variables
  (positions 0..keep-1) first, same tie-break.  This variant appears in
  print but does NOT have the elimination property; it is provided only
  to reproduce published worked values byte for byte.  See
  docs/order-modes.md for the counterexample.

Both are total, multiplicative monomial orders with the unit monomial
least, so division and completion terminate under either.
"""

from __future__ import annotations

from dataclasses import dataclass

ELIM_STANDARD = "elim-standard"
PAPER_LITERAL = "paper-literal"
ORDER_MODES = (ELIM_STANDARD, PAPER_LITERAL)

Mono = tuple


@dataclass(frozen=True)
class OrderSpec:
    """Split index (number of kept variables) plus comparison mode."""

    keep: int
    mode: str = ELIM_STANDARD

    def __post_init__(self):
        if self.keep < 1:
            raise ValueError(f"keep must be >= 1, got {self.keep}")
        if self.mode not in ORDER_MODES:
            raise ValueError(f"unknown order mode {self.mode!r}")

    def key(self, mono: Mono):
        """Sort key: natural tuple comparison of the key realizes the order."""
        if self.keep > len(mono):
            raise ValueError(
                f"split index {self.keep} exceeds variable count {len(mono)}")
        if self.mode == ELIM_STANDARD:
            return (sum(mono[self.keep:]), mono)
        return (sum(mono[:self.keep]), mono)


def mono_cmp(a: Mono, b: Mono, order: OrderSpec) -> int:
    """-1, 0 or 1 as a <, =, > b under the order."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    ka, kb = order.key(a), order.key(b)
    if ka < kb:
        return -1
    if ka > kb:
        return 1
    return 0


def mono_mul(a: Mono, b: Mono) -> Mono:
    return tuple(x + y for x, y in zip(a, b))


def mono_divisible(a: Mono, b: Mono) -> bool:
    """True when b divides a (componentwise a >= b)."""
    return all(x >= y for x, y in zip(a, b))


def mono_div(a: Mono, b: Mono) -> Mono:
    """Quotient a/b; requires divisibility."""
    if not mono_divisible(a, b):
        raise ValueError(f"monomial {a} is not divisible by {b}")
    return tuple(x - y for x, y in zip(a, b))


def mono_gcd(a: Mono, b: Mono) -> Mono:
    return tuple(min(x, y) for x, y in zip(a, b))
