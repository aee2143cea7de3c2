"""Per-point machinery: specialized ideals, the substitution map and the
ideal of value relations, plus the end-to-end exceptional-set driver.

At a point alpha the composed values satisfy S(values) = 0 exactly when
S, after substituting the specialized forms for the Y variables, lands
in the specialized ideal.  Generators of that relation ideal split into
two groups: relations inherited from the ideal through elimination in
the kept form variables, and linear relations coming from the kernel of
the substitution (forms that became dependent at alpha).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .forms import Frame, LinearForms, build_frame, rewrite_in_t, specialize_forms
from .groebner import DEFAULT_STEP_BUDGET, buchberger, elim_intersection
from .mpoly import MultiPoly, specialize, substitute_linear
from .ordering import ELIM_STANDARD, OrderSpec
from .parametric import ParametricReport, parametric_groebner
from .roots import RootReport, find_roots
from .scalars import GaussRat
from .unipoly import RatFunc


class FunctionalDependenceError(RuntimeError):
    """The composed forms already satisfy a relation over K(z)."""

    def __init__(self, relations):
        super().__init__(
            "functions algebraically dependent over K(z); the exceptional "
            "set is undefined (every point carries the functional relation)")
        self.relations = relations


@dataclass
class ValueIdeal:
    """Generators of the relations among the specialized values at alpha.

    ``from_ideal`` holds relations pulled back through the elimination
    step (polynomials in the kept Y variables); ``from_kernel`` holds the
    linear relations Y_j - sum lambda_t Y_{j_t} of dropped forms.  Empty
    union means the values are algebraically independent.
    """

    alpha: GaussRat
    from_ideal: list
    from_kernel: list

    @property
    def generators(self):
        return self.from_ideal + self.from_kernel

    @property
    def is_zero(self) -> bool:
        return not self.from_ideal and not self.from_kernel


def chi_substitute(s: MultiPoly, forms: LinearForms, alpha: GaussRat) -> MultiPoly:
    """S(Y_1..Y_p) -> S(phi_1(alpha, X), ..., phi_p(alpha, X))."""
    if s.n != forms.nforms:
        raise ValueError(f"expected {forms.nforms} Y variables, got {s.n}")
    images = [forms.form_at(j, alpha) for j in range(forms.nforms)]
    return substitute_linear(s, images)


def ideal_at_alpha(gens, alpha: GaussRat):
    """Specialize each generator at z = alpha, dropping those that vanish."""
    out = []
    for g in gens:
        ga = specialize(g, alpha)
        if ga:
            out.append(ga)
    return out


def _unit_in(basis_elements, n: int):
    unit = (0,) * n
    for p in basis_elements:
        if set(p.terms) == {unit}:
            return p.terms[unit]
    return None


def j_alpha_generators(forms: LinearForms, gens, alpha: GaussRat,
                       step_budget: int | None = DEFAULT_STEP_BUDGET) -> ValueIdeal:
    """Exact generators of the value-relation ideal at one point.

    No genericity assumption is needed: the rank of the specialized
    forms, the kept tuples and the kernel are all computed at alpha.
    """
    p, n = forms.nforms, forms.nvars
    pf = specialize_forms(forms, alpha)
    specialized = ideal_at_alpha(gens, alpha)

    # move to the T coordinates adapted to alpha
    images = []
    for i in range(n):
        row = pf.x_in_t[i]
        terms = {}
        for k in range(n):
            if row[k]:
                mono = tuple(1 if t == k else 0 for t in range(n))
                terms[mono] = row[k]
        images.append(MultiPoly(n, terms))
    gens_t = [substitute_linear(g, images) for g in specialized]

    from_ideal = []
    if pf.rank == 0:
        # the kept subring is the scalars: only a unit can survive
        if gens_t:
            basis = buchberger(gens_t, OrderSpec(keep=n), step_budget)
            unit = _unit_in(basis.elements, n)
            if unit is not None:
                from_ideal.append(MultiPoly.constant(p, unit))
    else:
        part = elim_intersection(gens_t, pf.rank, ELIM_STANDARD, step_budget)
        for q in part:
            terms = {}
            for mono, coeff in q.terms.items():
                y_mono = [0] * p
                for t in range(pf.rank):
                    y_mono[pf.form_idx[t]] = mono[t]
                terms[tuple(y_mono)] = coeff
            from_ideal.append(MultiPoly(p, terms))

    from_kernel = []
    one = GaussRat(1)
    for j in sorted(pf.kernel):
        terms = {tuple(1 if t == j else 0 for t in range(p)): one}
        poly = MultiPoly(p, terms)
        for t, lam in enumerate(pf.kernel[j]):
            if lam:
                mono = tuple(1 if u == pf.form_idx[t] else 0 for u in range(p))
                poly = poly - MultiPoly(p, {mono: lam})
        from_kernel.append(poly)

    return ValueIdeal(alpha=alpha, from_ideal=from_ideal, from_kernel=from_kernel)


@dataclass
class ExceptionalReport:
    """Full output of the exceptional-set pipeline."""

    frame: Frame
    parametric: ParametricReport
    roots: RootReport
    value_ideals: list  # [(alpha, ValueIdeal)] for every verified root

    @property
    def dependent(self):
        """The verified roots where the values really are dependent."""
        return [(a, vi) for a, vi in self.value_ideals if not vi.is_zero]


def exceptional_set(forms: LinearForms, gens, mode: str = ELIM_STANDARD,
                    denom_bound: int = 10 ** 6, precision_bits: int = 256,
                    step_budget: int | None = DEFAULT_STEP_BUDGET,
                    field: str = "Qi") -> ExceptionalReport:
    """Locate every point of the working field where values become dependent.

    Pipeline: frame -> rewrite -> locus-tracking completion -> verified
    roots of W -> value-relation ideal at each root.  Requires the
    composed forms to be algebraically independent over K(z); otherwise a
    FunctionalDependenceError carries the offending relations.
    """
    frame = build_frame(forms)
    rewritten = [rewrite_in_t(g, frame) for g in gens if g]
    keep = forms.nforms

    report = parametric_groebner(rewritten, keep, frame.w0, mode, step_budget)
    if mode == ELIM_STANDARD:
        functional = report.functional_relations
    else:
        # the literal order cannot certify independence; gate with a
        # standard-order elimination run
        from .mpoly import restrict_vars
        part = elim_intersection(rewritten, keep, ELIM_STANDARD, step_budget)
        functional = [restrict_vars(q, keep) for q in part]
    if functional:
        raise FunctionalDependenceError(functional)

    roots = find_roots(report.w, denom_bound, precision_bits, field)
    value_ideals = [
        (alpha, j_alpha_generators(forms, gens, alpha, step_budget))
        for alpha in roots.verified
    ]
    return ExceptionalReport(frame=frame, parametric=report, roots=roots,
                             value_ideals=value_ideals)
