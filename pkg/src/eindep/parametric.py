"""z-parametric Groebner run with locus tracking.

Runs Buchberger over K(z) on generators rewritten in the T variables
while folding into one monic polynomial W(z) the numerator of the
leading coefficient of every polynomial the run ever looks at: each
initial generator, each pair difference, each S-polynomial and each
non-zero intermediate remainder, plus (for basis elements that still
involve an eliminated variable) one witness coefficient per element.

The payoff: for any alpha with W(alpha) != 0, running the same
completion over plain scalars on the specialized generators walks the
identical trace, so the specialized basis is the specialization of the
parametric basis.  Roots of W are therefore the only candidates for
points where the value-relation ideal can jump.
"""

from __future__ import annotations

from dataclasses import dataclass

from .forms import LinearForms, build_frame, rewrite_in_t
from .groebner import (DEFAULT_STEP_BUDGET, GBasis, Watcher, elim_intersection,
                       run_buchberger)
from .mpoly import MultiPoly, leading, restrict_vars, supported_on_first
from .ordering import ELIM_STANDARD, OrderSpec
from .unipoly import UniPoly, num_of, poly_gcd, poly_lcm_monic


@dataclass
class ParametricReport:
    """Everything the locus run produces.

    ``w`` is monic and non-zero; it is a valid exceptional-locus
    certificate only when ``certificate`` is set (no basis element landed
    in the kept subring) AND the run used the elim-standard order.
    ``functional_relations`` restates ``elim_part`` in Y variables.
    """

    w: UniPoly
    basis: GBasis
    elim_part: list
    functional_relations: list
    certificate: bool
    trace: list


class _LocusTracker(Watcher):
    """Folds num(lcoeff(...)) of every inspected polynomial into a monic lcm."""

    def __init__(self, w0: UniPoly, order: OrderSpec):
        self.w = w0.monic()
        self.order = order

    def _absorb(self, p: MultiPoly):
        if p:
            self.w = poly_lcm_monic(self.w, num_of(leading(p, self.order).coeff))

    def on_generator(self, p):
        self._absorb(p)

    def on_pair(self, ia, ib, p, q):
        # distinct basis elements, so the difference is never zero
        self._absorb(p - q)

    def on_spoly(self, s):
        self._absorb(s)

    def on_step(self, k, quot_mono, quot_coeff, s):
        self._absorb(s)


def _divides_some_power(d: UniPoly, w: UniPoly) -> bool:
    """True when every irreducible factor of d divides w (no factoring)."""
    d = d.monic()
    while d.degree > 0:
        g = poly_gcd(d, w)
        if g.degree == 0:
            return False
        d = d.exact_div(g)
    return True


def _check_denominators(gens, w0: UniPoly):
    for g in gens:
        for mono, coeff in g.terms.items():
            den = coeff.den
            if den.degree > 0 and not _divides_some_power(den, w0):
                raise ValueError(
                    f"generator coefficient {coeff} at {mono} has a denominator "
                    f"outside the powers of the pivot minor {w0}")


def parametric_groebner(gens, keep: int, w0: UniPoly,
                        mode: str = ELIM_STANDARD,
                        step_budget: int | None = DEFAULT_STEP_BUDGET) -> ParametricReport:
    """Locus-tracking completion over K(z).

    ``gens`` are MultiPoly over RatFunc in the T variables whose
    coefficient denominators divide a power of w0; ``keep`` is the number
    of kept variables (the count of the forms).
    """
    if not w0:
        raise ValueError("pivot minor w0 must be non-zero")
    _check_denominators(gens, w0)
    order = OrderSpec(keep=keep, mode=mode)
    tracker = _LocusTracker(w0, order)
    elements, trace = run_buchberger(gens, order, step_budget, watcher=tracker)
    w = tracker.w

    elim_part = []
    n = elements[0].n if elements else keep
    for p in elements:
        if supported_on_first(p, keep):
            elim_part.append(p)
            continue
        # one witness coefficient on an eliminated variable, chosen to keep
        # deg W small: minimal numerator degree, then largest monomial
        candidates = [
            (mono, coeff) for mono, coeff in p.terms.items()
            if any(mono[keep:])
        ]
        best = min(candidates,
                   key=lambda mc: (mc[1].num.degree,
                                   -order.key(mc[0])[0],
                                   tuple(-x for x in mc[0])))
        w = poly_lcm_monic(w, num_of(best[1]))

    functional = [restrict_vars(p, keep) for p in elim_part]
    return ParametricReport(
        w=w,
        basis=GBasis(elements, order),
        elim_part=elim_part,
        functional_relations=functional,
        certificate=not elim_part,
        trace=trace,
    )


def functional_relations(forms: LinearForms, gens,
                         step_budget: int | None = DEFAULT_STEP_BUDGET):
    """Generators of the relations the composed forms satisfy over K(z).

    Builds the frame, rewrites the ideal generators in T, eliminates the
    non-form variables under the standard elimination order and restates
    the survivors in Y_1..Y_p.  An empty result certifies that the
    composed forms are algebraically independent over K(z).
    """
    frame = build_frame(forms)
    rewritten = [rewrite_in_t(g, frame) for g in gens if g]
    keep = forms.nforms
    part = elim_intersection(rewritten, keep, ELIM_STANDARD, step_budget)
    return [restrict_vars(p, keep) for p in part]
