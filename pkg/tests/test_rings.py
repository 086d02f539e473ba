from fractions import Fraction

import pytest

from frobknot.rings import QQ, ZZ, GF, RingSpec


def test_fp_arithmetic():
    F5 = GF(5)
    assert F5.add(3, 4) == 2
    assert F5.mul(3, 4) == 2
    assert F5.neg(2) == 3
    assert F5.inv(2) == 3
    assert F5.sub(1, 3) == 3
    assert sorted(F5.elements()) == [0, 1, 2, 3, 4]


def test_fp_requires_prime():
    with pytest.raises(ValueError):
        GF(6)
    with pytest.raises(ValueError):
        GF(1)


def test_z_units():
    assert ZZ.is_unit(-1) and ZZ.is_unit(1)
    assert not ZZ.is_unit(2)
    assert ZZ.inv(-1) == -1
    with pytest.raises(ZeroDivisionError):
        ZZ.inv(2)


def test_q_normalize_accepts_strings():
    assert QQ.normalize("3/4") == Fraction(3, 4)
    assert QQ.normalize("7") == Fraction(7)
    assert QQ.normalize(Fraction(1, 2)) == Fraction(1, 2)


def test_fp_normalize_residues():
    F3 = GF(3)
    assert F3.normalize(-1) == 2
    assert F3.normalize(7) == 1
    assert F3.normalize("5") == 2


def test_json_round_trip():
    for ring in (ZZ, QQ, GF(2), GF(5)):
        assert RingSpec.from_json(ring.to_json()) == ring


def test_division():
    assert QQ.div(Fraction(1), Fraction(3)) == Fraction(1, 3)
    assert GF(7).div(3, 5) == GF(7).mul(3, GF(7).inv(5))
