"""Buchberger completion with a round-based schedule, plus elimination.

The schedule is deliberately rigid: each round snapshots the current
basis, walks all index pairs (a, b) with a < b of the snapshot in order,
reduces each S-polynomial weakly by the snapshot (first matching divisor
wins) and appends non-zero remainders not already present.  Rounds repeat
until one adds nothing.  No interreduction or rescaling happens during
the run; a separate canonicalization pass exists for user-facing output.

The rigidity is the point: the z-parametric run in ``parametric`` and the
specialized run over plain scalars must walk byte-identical traces, and
the lcm bookkeeping over there keys on the exact sequence of pair
differences, S-polynomials and intermediate remainders seen here.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

from .mpoly import (MultiPoly, iter_weak_division, leading, s_poly,
                    supported_on_first, weak_remainder)
from .ordering import (ELIM_STANDARD, PAPER_LITERAL, OrderSpec, mono_div,
                       mono_divisible)

DEFAULT_STEP_BUDGET = 500_000


class StepBudgetExceeded(RuntimeError):
    """Completion ran past its reduction-step budget.

    Carries the partial basis and the step count so a caller can inspect
    the state and rerun with a larger budget.
    """

    def __init__(self, steps: int, partial):
        super().__init__(
            f"step budget exceeded after {steps} reduction steps; "
            f"rerun with a larger --step-budget")
        self.steps = steps
        self.partial = partial


class Watcher:
    """No-op observation hooks for a completion run.

    ``parametric`` subclasses this to fold every intermediate leading
    coefficient into its lcm; tests subclass it to track cofactors.
    """

    def on_generator(self, p: MultiPoly):
        pass

    def on_pair(self, ia: int, ib: int, p: MultiPoly, q: MultiPoly):
        pass

    def on_spoly(self, s: MultiPoly):
        pass

    def on_step(self, k: int, quot_mono, quot_coeff, s: MultiPoly):
        pass

    def on_remainder(self, s: MultiPoly, appended: bool):
        pass


@dataclass
class GBasis:
    """Groebner basis in insertion order, tied to the order that built it."""

    elements: list
    order: OrderSpec


def run_buchberger(gens, order: OrderSpec, step_budget: int | None = DEFAULT_STEP_BUDGET,
                   watcher: Watcher | None = None):
    """Core loop; returns (elements, trace).

    The trace is a flat replay log:
        ("gen", lexp), ("pair", ia, ib), ("spoly", lexp-or-None),
        ("step", k, quot_mono), ("rem", lexp-or-None)
    Monomials are exponent tuples, so traces from runs over different
    coefficient fields compare directly.
    """
    basis: list[MultiPoly] = []
    trace: list[tuple] = []
    for g in gens:
        if not g:
            warnings.warn("zero generator dropped", stacklevel=2)
            continue
        if any(g == h for h in basis):
            continue
        basis.append(g)
        if watcher:
            watcher.on_generator(g)
        trace.append(("gen", leading(g, order).mono))

    steps = 0
    while True:
        snap = list(basis)
        added = False
        for ia in range(len(snap)):
            for ib in range(ia + 1, len(snap)):
                p, q = snap[ia], snap[ib]
                if watcher:
                    watcher.on_pair(ia, ib, p, q)
                trace.append(("pair", ia, ib))
                s = s_poly(p, q, order)
                if watcher:
                    watcher.on_spoly(s)
                trace.append(("spoly", leading(s, order).mono if s else None))
                for k, qm, qc, s in iter_weak_division(s, snap, order):
                    steps += 1
                    if step_budget is not None and steps > step_budget:
                        raise StepBudgetExceeded(steps, basis)
                    if watcher:
                        watcher.on_step(k, qm, qc, s)
                    trace.append(("step", k, qm))
                trace.append(("rem", leading(s, order).mono if s else None))
                if s and not any(s == h for h in basis):
                    basis.append(s)
                    added = True
                    if watcher:
                        watcher.on_remainder(s, True)
                elif watcher:
                    watcher.on_remainder(s, False)
        if not added:
            break
    return basis, trace


def buchberger(gens, order: OrderSpec,
               step_budget: int | None = DEFAULT_STEP_BUDGET) -> GBasis:
    """Groebner basis of the ideal generated by ``gens`` under ``order``."""
    elements, _ = run_buchberger(gens, order, step_budget)
    return GBasis(elements, order)


def reduce_to_zero(f: MultiPoly, basis, order: OrderSpec | None = None) -> bool:
    """Ideal membership test against a Groebner basis."""
    if isinstance(basis, GBasis):
        elements, order = basis.elements, basis.order
    else:
        elements = basis
        if order is None:
            raise ValueError("order required when basis is a plain list")
    if not f:
        return True
    if not elements:
        return False
    rem, _ = weak_remainder(f, elements, order)
    return not rem


def is_groebner(elements, order: OrderSpec) -> bool:
    """Buchberger criterion: every pair's S-polynomial weak-reduces to 0."""
    for i in range(len(elements)):
        for j in range(i + 1, len(elements)):
            s = s_poly(elements[i], elements[j], order)
            rem, _ = weak_remainder(s, elements, order)
            if rem:
                return False
    return True


def elim_intersection(gens, keep: int, mode: str = ELIM_STANDARD,
                      step_budget: int | None = DEFAULT_STEP_BUDGET):
    """Basis elements depending only on the first ``keep`` variables.

    Under elim-standard these generate the intersection of the ideal with
    the subring in those variables.  The paper-literal mode is accepted
    but has no such guarantee (see docs/order-modes.md), hence the
    warning.
    """
    if mode == PAPER_LITERAL:
        warnings.warn(
            "kept-degree-first order is unsound for elimination; "
            "the filtered elements need not generate the intersection",
            stacklevel=2)
    basis = buchberger(gens, OrderSpec(keep=keep, mode=mode), step_budget)
    return [p for p in basis.elements if supported_on_first(p, keep)]


def reduce_full(p: MultiPoly, divisors, order: OrderSpec) -> MultiPoly:
    """Fully reduced normal form: no term divisible by any divisor's lmon."""
    if not divisors:
        return p
    leads = [leading(d, order) for d in divisors]
    rem = MultiPoly(p.n)
    s = p
    while s:
        lm, lc = leading(s, order)
        hit = next((k for k, (dm, _) in enumerate(leads)
                    if mono_divisible(lm, dm)), None)
        if hit is None:
            t = MultiPoly(s.n, {lm: lc})
            rem = rem + t
            s = s - t
        else:
            dm, dc = leads[hit]
            s = s - divisors[hit].term_mul(mono_div(lm, dm), lc / dc)
    return rem


def canonical_basis(elements, order: OrderSpec):
    """Minimal, fully interreduced, monic form of a Groebner basis.

    Only ever applied to final user-facing output; the running algorithm
    must not rescale (the parametric lcm tracking depends on raw leading
    coefficients).
    """
    elems = [p for p in elements if p]
    # minimality: drop anything whose leading monomial another one divides
    keep = []
    lead_monos = [leading(p, order).mono for p in elems]
    for i, p in enumerate(elems):
        redundant = any(
            j != i and mono_divisible(lead_monos[i], lead_monos[j])
            and (lead_monos[j] != lead_monos[i] or j < i)
            for j in range(len(elems)))
        if not redundant:
            keep.append(p)
    # interreduce and normalize
    out = []
    for i, p in enumerate(keep):
        others = [q for j, q in enumerate(keep) if j != i]
        r = reduce_full(p, others, order) if others else p
        if r:
            lc = leading(r, order).coeff
            out.append(r.scale((lc / lc) / lc))
    out.sort(key=lambda q: order.key(leading(q, order).mono))
    return out
