import random
from fractions import Fraction

import pytest

from eindep.forms import LinearForms, build_frame, rewrite_in_t
from eindep.groebner import run_buchberger
from eindep.mpoly import MultiPoly, leading, specialize
from eindep.ordering import ELIM_STANDARD, PAPER_LITERAL, OrderSpec
from eindep.parametric import (functional_relations, parametric_groebner,
                               _divides_some_power)
from eindep.scalars import GaussRat, I
from eindep.unipoly import RatFunc, UniPoly, num_of, poly_gcd

from helpers import mp, mpz, q, rand_mpoly_z, rand_scalar, up

from test_forms import coordinate_forms, exp_pair_forms
from test_mpoly import q2_generator


def test_hypergeometric_paper_literal_locus():
    report = parametric_groebner([q2_generator()], keep=2, w0=up(1),
                                 mode=PAPER_LITERAL)
    # z^2 (z^2 + 1/36), monic
    assert report.w == UniPoly([0, 0, Fraction(1, 36), 0, 1])
    assert report.certificate
    assert report.elim_part == []
    assert report.basis.elements == [q2_generator()]


def test_hypergeometric_elim_standard_locus():
    report = parametric_groebner([q2_generator()], keep=2, w0=up(1))
    assert report.w == up(0, 0, 1)
    assert report.certificate


def test_empty_input_returns_w0():
    w0 = UniPoly([I, -(GaussRat(1) + I), GaussRat(1)])
    report = parametric_groebner([], keep=2, w0=w0)
    assert report.w == w0
    assert report.basis.elements == []
    assert report.certificate


def test_w0_must_be_nonzero_and_denominators_supported():
    with pytest.raises(ValueError):
        parametric_groebner([], keep=1, w0=UniPoly())
    bad = MultiPoly(2, {(1, 0): RatFunc(up(1), up(0, 1))})
    with pytest.raises(ValueError, match="denominator"):
        parametric_groebner([bad], keep=1, w0=up(1))
    # supported denominator passes
    ok = MultiPoly(2, {(1, 0): RatFunc(up(1), up(0, 1)), (0, 1): RatFunc(up(1))})
    parametric_groebner([ok], keep=1, w0=up(0, 1))


def test_divides_some_power():
    assert _divides_some_power(up(0, 0, 1), up(0, 1))          # z^2 vs z
    assert _divides_some_power(up(1), up(0, 1))
    assert not _divides_some_power(up(-1, 1), up(0, 1))


def _report_invariants(report, w0):
    assert report.w
    assert not report.w % w0.monic()
    for p in report.basis.elements:
        lead = leading(p, report.basis.order)
        assert not report.w % num_of(lead.coeff).monic()
        for coeff in p.terms.values():
            assert _divides_some_power(coeff.den, report.w)


def test_locus_divisibility_invariants():
    rng = random.Random(211)
    for _ in range(10):
        n = rng.choice([2, 3])
        keep = rng.randint(1, n)
        gens = [p for p in (rand_mpoly_z(rng, n, max_terms=2, coeff_deg=2)
                            for _ in range(2)) if p]
        report = parametric_groebner(gens, keep=keep, w0=up(1))
        _report_invariants(report, up(1))


def test_functional_relations_zero_ideal():
    assert functional_relations(exp_pair_forms(), []) == []


def test_functional_relations_hypergeometric():
    assert functional_relations(coordinate_forms(), [q2_generator()]) == []


def test_functional_relations_synthetic():
    forms = LinearForms([[up(1), up(0)], [up(0), up(1)]])
    gen = mpz(2, (up(1), 1, 1), (up(-1), 0, 0))     # X1 X2 - 1
    rels = functional_relations(forms, [gen])
    assert rels == [MultiPoly(2, {(1, 1): RatFunc.one(),
                                  (0, 0): RatFunc(up(-1))})]


def test_specialization_commutes_with_the_whole_run():
    rng = random.Random(223)
    done = 0
    while done < 12:
        n = rng.choice([2, 3])
        keep = rng.randint(1, n)
        gens = []
        for _ in range(rng.randint(1, 2)):
            p = rand_mpoly_z(rng, n, max_terms=2, max_deg=2, coeff_deg=1)
            if p and not any(p == g for g in gens):
                gens.append(p)
        if not gens:
            continue
        report = parametric_groebner(gens, keep=keep, w0=up(1))
        done += 1
        # sample a point where the locus polynomial survives
        while True:
            alpha = rand_scalar(rng)
            if report.w.eval(alpha):
                break
        spec_gens = [specialize(g, alpha) for g in gens]
        order = report.basis.order
        elements, trace = run_buchberger(spec_gens, order)
        assert trace == report.trace
        assert elements == [specialize(p, alpha) for p in report.basis.elements]


def test_scale_invariance_of_locus_generic():
    rng = random.Random(227)
    done = 0
    while done < 8:
        n = 2
        gens = []
        for _ in range(2):
            p = rand_mpoly_z(rng, n, max_terms=2, max_deg=2, coeff_deg=1)
            if p and not any(p == g for g in gens):
                gens.append(p)
        if len(gens) < 2:
            continue
        # keep the sample generic: distinct leading monomials
        o = OrderSpec(keep=1)
        if leading(gens[0], o).mono == leading(gens[1], o).mono:
            continue
        done += 1
        base = parametric_groebner(gens, keep=1, w0=up(1))
        scaled = [gens[0].scale(RatFunc(up(q(0, 3)))), gens[1]]
        other = parametric_groebner(scaled, keep=1, w0=up(1))
        assert base.w == other.w
