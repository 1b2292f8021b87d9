from fractions import Fraction

import pytest

from gmalie.fields import GF, QQ, Field, field_from_doc, is_prime


def test_rational_scalars_stay_reduced():
    assert QQ.parse("2/4") == Fraction(1, 2)
    assert QQ.of(3) == Fraction(3)
    assert QQ.format(Fraction(1, 2)) == "1/2"
    assert QQ.format(Fraction(4, 2)) == 2


def test_prime_field_residues():
    f = GF(5)
    assert f.of(7) == 2
    assert f.of(-1) == 4
    assert f.of(Fraction(1, 2)) == 3  # 2 * 3 = 6 = 1 mod 5
    assert f.parse("1/2") == 3
    assert f.format(4) == 4


def test_characteristics():
    assert QQ.characteristic == 0
    assert GF(3).characteristic == 3
    assert GF(2).characteristic == 2  # constructible; analyses gate separately


def test_arithmetic():
    f = GF(7)
    assert f.add(5, 4) == 2
    assert f.mul(3, 5) == 1
    assert f.inv(3) == 5
    assert f.neg(2) == 5
    assert QQ.div(Fraction(1), Fraction(3)) == Fraction(1, 3)
    with pytest.raises(ZeroDivisionError):
        f.inv(0)
    with pytest.raises(ZeroDivisionError):
        GF(5).of(Fraction(1, 5))


def test_bad_moduli_rejected():
    for bad in (0, 1, 4, 9, -3):
        with pytest.raises(ValueError):
            Field("GF", bad)
    with pytest.raises(ValueError):
        Field("GF", 2**31 + 11)


def test_is_prime():
    primes = [2, 3, 5, 7, 11, 97, 2**31 - 1]
    assert all(is_prime(p) for p in primes)
    assert not any(is_prime(n) for n in (0, 1, 4, 100, 91))


def test_identity_and_docs():
    assert GF(3) == GF(3)
    assert GF(3) != GF(5)
    assert QQ != GF(3)
    assert field_from_doc({"kind": "Q"}) == QQ
    assert field_from_doc({"kind": "GF", "p": 11}) == GF(11)
    assert QQ.to_doc() == {"kind": "Q"}
    assert GF(11).to_doc() == {"kind": "GF", "p": 11}


def test_parse_rejects_non_scalars():
    with pytest.raises(TypeError):
        QQ.parse(True)
    with pytest.raises(TypeError):
        QQ.parse(1.5)
    with pytest.raises(ValueError):
        QQ.parse("one half")
