import random
from fractions import Fraction
from itertools import product as iproduct

import pytest

from eindep import linalg
from eindep.forms import LinearForms
from eindep.groebner import GBasis, buchberger, reduce_full, reduce_to_zero
from eindep.mpoly import MultiPoly, specialize
from eindep.ordering import OrderSpec
from eindep.parametric import parametric_groebner
from eindep.scalars import GaussRat, I
from eindep.unipoly import RatFunc, UniPoly
from eindep.values import (ExceptionalReport, FunctionalDependenceError,
                           ValueIdeal, chi_substitute, exceptional_set,
                           ideal_at_alpha, j_alpha_generators)

from helpers import mp, mpz, q, rand_scalar, up

from test_forms import coordinate_forms, exp_pair_forms
from test_mpoly import q2_generator

IY1_PLUS_Y2 = MultiPoly(2, {(1, 0): I, (0, 1): GaussRat(1)})


def test_chi_substitute_examples():
    forms = exp_pair_forms()
    # S = iY1 + Y2 collapses at alpha = 1
    assert chi_substitute(IY1_PLUS_Y2, forms, q(1)) == MultiPoly(2)
    # S = Y_j recovers the specialized form
    y2 = MultiPoly(2, {(0, 1): GaussRat(1)})
    assert chi_substitute(y2, forms, q(1)) == MultiPoly(2, {(0, 1): -I})
    const = MultiPoly.constant(2, q("5/7"))
    assert chi_substitute(const, forms, q(3)) == MultiPoly.constant(2, q("5/7"))


def test_ideal_at_alpha():
    alpha = q(0, "1/6")
    got = ideal_at_alpha([q2_generator()], alpha)
    assert got == [mp(3, ("-1/4", 0, 2, 0), ("-1/16", 0, 0, 2),
                      ("1/2", 1, 0, 1), (-1, 0, 0, 0))]
    assert ideal_at_alpha([], alpha) == []
    const_gen = mpz(2, (up(2), 1, 0), (up(-3), 0, 1))
    assert ideal_at_alpha([const_gen], q(9)) == [mp(2, (2, 1, 0), (-3, 0, 1))]


def test_j_alpha_exp_pair_at_special_points():
    forms = exp_pair_forms()
    for alpha in (q(1), I):
        vi = j_alpha_generators(forms, [], alpha)
        assert vi.from_ideal == []
        assert vi.from_kernel == [IY1_PLUS_Y2]
        assert not vi.is_zero
        # the relation really annihilates the specialized forms
        assert chi_substitute(vi.from_kernel[0], forms, alpha) == MultiPoly(2)


def test_j_alpha_exp_pair_generic_is_zero():
    forms = exp_pair_forms()
    rng = random.Random(61)
    w0 = UniPoly([I, -(GaussRat(1) + I), GaussRat(1)])
    count = 0
    while count < 20:
        alpha = rand_scalar(rng)
        if not w0.eval(alpha):
            continue
        count += 1
        vi = j_alpha_generators(forms, [], alpha)
        assert vi.is_zero


def test_j_alpha_hypergeometric_at_locus_roots():
    forms = coordinate_forms()
    gens = [q2_generator()]
    for alpha in (q(0, "1/6"), q(0, "-1/6")):
        vi = j_alpha_generators(forms, gens, alpha)
        assert vi.is_zero


def test_j_alpha_hypergeometric_at_zero():
    vi = j_alpha_generators(coordinate_forms(), [q2_generator()], q(0))
    # f(0)^2 - f'(0)^2/4 = 1:  Y1^2 - 1/4 Y2^2 - 1
    assert vi.from_kernel == []
    assert vi.from_ideal == [mp(2, (1, 2, 0), ("-1/4", 0, 2), (-1, 0, 0))]


def test_j_alpha_rank_zero_unit_ideal():
    forms = LinearForms([[up(0, 1), up(0)], [up(0), up(0, 1)]])
    gens = [mpz(2, (up(1), 0, 0))]          # the constant 1: unit ideal
    vi = j_alpha_generators(forms, gens, q(0))
    assert vi.from_ideal == [MultiPoly.constant(2, q(1))]
    assert vi.from_kernel == [MultiPoly(2, {(1, 0): q(1)}),
                              MultiPoly(2, {(0, 1): q(1)})]


def _y_monos(p, max_deg):
    out = []
    for exps in iproduct(*(range(max_deg + 1) for _ in range(p))):
        if sum(exps) <= max_deg:
            out.append(exps)
    return out


def jalpha_oracle(forms, gens, alpha, max_deg=4):
    """Degree-bounded linear algebra on the condition chi(S) in I_alpha."""
    p, n = forms.nforms, forms.nvars
    o = OrderSpec(keep=n)
    ia = ideal_at_alpha(gens, alpha)
    ia_basis = buchberger(ia, o).elements if ia else []
    monos = [m for m in _y_monos(p, max_deg) if any(m)]
    residues = []
    for m in monos:
        s = MultiPoly(p, {m: GaussRat(1)})
        img = chi_substitute(s, forms, alpha)
        residues.append(reduce_full(img, ia_basis, o) if ia_basis else img)
    support = sorted(set().union(*(set(r.terms) for r in residues)) | set())
    rows = [[r.terms.get(xm, GaussRat(0)) for r in residues] for xm in support]
    kernel = linalg.nullspace(rows, len(monos), GaussRat(0), GaussRat(1))
    members = []
    for vec in kernel:
        terms = {monos[j]: vec[j] for j in range(len(monos)) if vec[j]}
        members.append(MultiPoly(p, terms))
    return members


def _check_against_oracle(forms, gens, alpha, max_deg=4):
    p, n = forms.nforms, forms.nvars
    vi = j_alpha_generators(forms, gens, alpha)
    o_x = OrderSpec(keep=n)
    ia = ideal_at_alpha(gens, alpha)
    ia_basis = buchberger(ia, o_x) if ia else GBasis([], o_x)
    # soundness: each produced generator is a genuine value relation
    for g in vi.generators:
        img = chi_substitute(g, forms, alpha)
        if ia_basis.elements:
            assert reduce_to_zero(img, ia_basis)
        else:
            assert not img
    # completeness: every bounded-degree oracle member lies in the produced ideal
    members = jalpha_oracle(forms, gens, alpha, max_deg)
    o_y = OrderSpec(keep=p)
    j_basis = buchberger(vi.generators, o_y) if vi.generators else GBasis([], o_y)
    for m in members:
        if j_basis.elements:
            assert reduce_to_zero(m, j_basis)
        else:
            assert not m


def test_oracle_on_worked_examples():
    _check_against_oracle(exp_pair_forms(), [], q(1))
    _check_against_oracle(exp_pair_forms(), [], I)
    _check_against_oracle(exp_pair_forms(), [], q(2))
    _check_against_oracle(coordinate_forms(), [q2_generator()], q(0, "1/6"),
                          max_deg=3)
    _check_against_oracle(coordinate_forms(), [q2_generator()], q(0), max_deg=3)


def _random_instance(rng):
    while True:
        n = rng.choice([2, 3])
        p = rng.randint(1, n)
        rows = [[UniPoly([rand_scalar(rng), rand_scalar(rng)])
                 for _ in range(n)] for _ in range(p)]
        try:
            forms = LinearForms(rows)
        except ValueError:
            continue
        if forms.rank_generic() < p:
            continue
        gens = []
        for _ in range(rng.randint(0, 2)):
            g = mpz(n, *[(UniPoly([rand_scalar(rng), rand_scalar(rng)]),
                          *[rng.randint(0, 1) for _ in range(n)])
                         for _ in range(2)])
            if g:
                gens.append(g)
        return forms, gens


def test_oracle_on_random_instances():
    rng = random.Random(67)
    for _ in range(8):
        forms, gens = _random_instance(rng)
        alpha = rand_scalar(rng)
        _check_against_oracle(forms, gens, alpha, max_deg=3)


def test_exceptional_set_exp_pair():
    report = exceptional_set(exp_pair_forms(), [])
    assert report.parametric.w == UniPoly([I, -(GaussRat(1) + I), GaussRat(1)])
    assert sorted(map(str, report.roots.verified)) == ["1", "1i"]
    dep = {str(a): vi for a, vi in report.dependent}
    assert set(dep) == {"1", "1i"}
    for vi in dep.values():
        assert vi.generators == [IY1_PLUS_Y2]
    assert report.roots.unresolved == []


def test_exceptional_set_hypergeometric_paper_literal():
    report = exceptional_set(coordinate_forms(), [q2_generator()],
                             mode="paper-literal")
    assert report.parametric.w == UniPoly([0, 0, Fraction(1, 36), 0, 1])
    assert set(map(str, report.roots.verified)) == {"0", "1/6i", "-1/6i"}
    by_alpha = {str(a): vi for a, vi in report.value_ideals}
    assert by_alpha["1/6i"].is_zero
    assert by_alpha["-1/6i"].is_zero
    assert not by_alpha["0"].is_zero
    assert [str(a) for a, _ in report.dependent] == ["0"]


def test_exceptional_set_hypergeometric_elim_standard():
    report = exceptional_set(coordinate_forms(), [q2_generator()])
    assert report.parametric.w == up(0, 0, 1)
    assert [str(r) for r in report.roots.verified] == ["0"]
    assert [str(a) for a, _ in report.dependent] == ["0"]


def test_exceptional_set_trivial_zero_ideal():
    forms = LinearForms([[up(1), up(0)], [up(0), up(1)]])
    report = exceptional_set(forms, [])
    assert report.parametric.w == up(1)
    assert report.roots.verified == []
    assert report.dependent == []


def test_exceptional_set_rejects_dependent_functions():
    forms = LinearForms([[up(1), up(0)], [up(0), up(1)]])
    gen = mpz(2, (up(1), 1, 1), (up(-1), 0, 0))
    with pytest.raises(FunctionalDependenceError) as exc:
        exceptional_set(forms, [gen])
    assert exc.value.relations


def test_soundness_for_hypergeometric():
    # off the locus roots the value ideal must vanish
    forms = coordinate_forms()
    gens = [q2_generator()]
    report = parametric_groebner([q2_generator()], keep=2, w0=up(1))
    rng = random.Random(71)
    count = 0
    while count < 25:
        alpha = rand_scalar(rng)
        if not report.w.eval(alpha):
            continue
        count += 1
        assert j_alpha_generators(forms, gens, alpha).is_zero
