import random
from fractions import Fraction

import pytest

from icherednik.scalars import GF, QQ, PrimeFieldElement, field_of_characteristic


def test_rational_coercion_and_parse():
    assert QQ(3) == Fraction(3)
    assert QQ("2/7") == Fraction(2, 7)
    assert QQ("-5") == Fraction(-5)
    assert QQ.to_str(Fraction(-3, 4)) == "-3/4"
    assert QQ.to_str(Fraction(6)) == "6"


def test_exactness_of_field_ops():
    rng = random.Random(11)
    for field in (QQ, GF(7), GF(101)):
        for _ in range(200):
            a = field(rng.randint(-50, 50))
            b = field(rng.randint(-50, 50))
            assert (a + b) - b == a
            if b:
                assert (a * b) / b == a


def test_prime_field_basics():
    f5 = GF(5)
    assert f5(7) == f5(2)
    assert f5("3/4") == f5(3) / f5(4)
    assert f5(2) ** -1 == f5(3)
    assert -f5(1) == f5(4)
    assert bool(f5(0)) is False
    with pytest.raises(ZeroDivisionError):
        f5(1) / f5(0)
    with pytest.raises(ValueError):
        GF(6)


def test_no_mixed_moduli():
    with pytest.raises(ValueError):
        GF(5)(1) + GF(7)(1)


def test_prime_field_residue_is_canonical():
    x = PrimeFieldElement(-1, 5)
    assert 0 <= x.residue < 5
    assert x == 4


def test_field_of_characteristic():
    assert field_of_characteristic(0) is QQ or field_of_characteristic(0) == QQ
    assert field_of_characteristic(5).characteristic == 5
