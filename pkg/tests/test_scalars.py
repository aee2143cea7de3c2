import random
from fractions import Fraction

import pytest

from eindep.scalars import GaussRat, I, parse_scalar, scalar_str

from helpers import q, rand_nonzero_scalar, rand_scalar


def test_canonical_zero():
    assert GaussRat(0) == GaussRat(Fraction(0, 5))
    assert not GaussRat(0)
    assert GaussRat(0, 0) == 0


def test_field_axioms_random():
    rng = random.Random(7)
    for _ in range(200):
        a, b, c = (rand_scalar(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + (-a) == 0
    for _ in range(100):
        a = rand_nonzero_scalar(rng)
        assert a * a.inverse() == 1
        assert (a / a) == 1


def test_complex_identities():
    assert I * I == -1
    assert (q(1, 1) * q(1, -1)) == 2
    assert q(1, 2).conjugate() == q(1, -2)
    assert q(3, 4).norm() == 25


def test_pow():
    assert I ** 2 == -1
    assert I ** 0 == 1
    assert q(2) ** -1 == q("1/2")
    assert q(1, 1) ** 3 == q(-2, 2)


def test_div_by_zero():
    with pytest.raises(ZeroDivisionError):
        q(1) / q(0)
    with pytest.raises(ZeroDivisionError):
        GaussRat(0).inverse()


def test_parse_examples_from_grammar():
    assert parse_scalar("3/4") == q("3/4")
    assert parse_scalar("-1/6i") == q(0, "-1/6")
    assert parse_scalar("1/2+1/3i") == q("1/2", "1/3")
    assert parse_scalar("-1i") == -I
    assert parse_scalar("2i") == 2 * I
    assert parse_scalar("-5") == q(-5)
    assert parse_scalar("+1/3i") == q(0, "1/3")
    assert parse_scalar("1/2-2/3i") == q("1/2", "-2/3")


@pytest.mark.parametrize("bad", ["", "i", "1.5", "1/2 + 1/3i", "1//2", "z",
                                 "1+2", "1i+2", "--3"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_scalar(bad)


def test_parse_field_q_rejects_imaginary():
    with pytest.raises(ValueError):
        parse_scalar("1i", field="Q")
    assert parse_scalar("-7/2", field="Q") == q("-7/2")


def test_roundtrip_str():
    rng = random.Random(11)
    for _ in range(300):
        s = rand_scalar(rng, small=False)
        assert parse_scalar(scalar_str(s)) == s


def test_eval_examples():
    # -i(z-1)^2 - (z^2-1) vanishes at z = i
    alpha = I
    val = -I * (alpha - 1) ** 2 - (alpha * alpha - 1)
    assert val == 0
