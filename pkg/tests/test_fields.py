from fractions import Fraction

import pytest

from tameact.fields import GF, QQ, FieldError, FieldSpec


def test_rational_arithmetic():
    a, b = Fraction(2, 3), Fraction(-1, 6)
    assert QQ.add(a, b) == Fraction(1, 2)
    assert QQ.mul(a, QQ.inv(a)) == QQ.one()
    assert QQ.characteristic == 0


def test_prime_field_inverses():
    F = GF(7)
    for x in range(1, 7):
        assert F.mul(x, F.inv(x)) == F.one()
    with pytest.raises(ZeroDivisionError):
        F.inv(F.zero())


def test_quartic_relation_in_f4():
    F4 = GF(2, [1, 1, 1])  # t^2 + t + 1
    t = F4.generator()
    # t^2 = t + 1
    assert F4.mul(t, t) == F4.add(t, F4.one())
    # Frobenius: x^4 = x for every element
    for a in range(2):
        for b in range(2):
            x = F4.check((a, b))
            x4 = F4.mul(F4.mul(x, x), F4.mul(x, x))
            assert x4 == x


def test_embedding_preserves_operations():
    F2, F4 = GF(2), GF(2, [1, 1, 1])
    assert F2.embeds_into(F4)
    for x in range(2):
        for y in range(2):
            assert F2.embed(F2.add(x, y), F4) == \
                F4.add(F2.embed(x, F4), F2.embed(y, F4))
            assert F2.embed(F2.mul(x, y), F4) == \
                F4.mul(F2.embed(x, F4), F2.embed(y, F4))
    assert not GF(3).embeds_into(F4)


def test_scalar_json_round_trip():
    for F, x in [(QQ, Fraction(-7, 3)), (GF(5), 3), (GF(3, [1, 0, 1]), (2, 1))]:
        assert F.from_json(F.to_json(x)) == x
        assert FieldSpec.spec_from_json(F.spec_to_json()) == F


def test_bad_moduli_rejected():
    with pytest.raises(FieldError):
        GF(2, [1, 0, 1])  # t^2 + 1 = (t+1)^2 over F2
    with pytest.raises(FieldError):
        GF(4)  # not prime
