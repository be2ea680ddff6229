import random

import pytest

from ffdyn.errors import DomainError
from ffdyn.field import FieldSpec

F7 = FieldSpec(7)
GF49 = FieldSpec(7, k=2, modulus=(3, 6, 1))  # u^2 + 6u + 3
GF8 = FieldSpec(2, k=3, modulus=(1, 1, 0, 1))  # u^3 + u + 1


def test_prime_field_ops():
    assert F7.add(5, 4) == 2
    assert F7.sub(2, 5) == 4
    assert F7.neg(3) == 4
    assert F7.mul(5, 5) == 4
    assert F7.pow(3, 6) == 1
    assert F7.from_int(-1) == 6


def test_prime_field_inverses():
    assert [F7.inv(a) for a in range(1, 7)] == [1, 4, 5, 2, 3, 6]
    with pytest.raises(ZeroDivisionError):
        F7.inv(0)


def test_bad_field_parameters():
    with pytest.raises(DomainError):
        FieldSpec(6)
    with pytest.raises(DomainError):
        FieldSpec(1)
    with pytest.raises(DomainError):
        FieldSpec(2**64 + 13)  # prime but too wide
    with pytest.raises(DomainError):
        FieldSpec(7, k=0)


def test_modulus_policy():
    with pytest.raises(DomainError):
        FieldSpec(7, k=2)  # no modulus supplied
    with pytest.raises(DomainError):
        FieldSpec(7, k=1, modulus=(1, 1))
    with pytest.raises(DomainError):
        FieldSpec(7, k=2, modulus=(6, 0, 1))  # u^2 - 1 splits
    with pytest.raises(DomainError):
        FieldSpec(7, k=2, modulus=(3, 6, 2))  # not monic


def test_gf49_arithmetic():
    """(u+1)(u+2) = u^2+3u+2 = 4u+6 once u^2 is reduced to u+4."""
    a = GF49.from_digits([1, 1])
    b = GF49.from_digits([2, 1])
    assert a == 8 and b == 9
    assert GF49.mul(a, b) == GF49.from_digits([6, 4]) == 34
    assert GF49.add(a, b) == GF49.from_digits([3, 2])
    # additive wraparound is digitwise, never integer mod q
    assert GF49.add(6, 1) == 0


def test_gf49_inverses_random():
    rng = random.Random(491)
    for _ in range(200):
        a = rng.randrange(1, 49)
        assert GF49.mul(a, GF49.inv(a)) == 1
    assert GF49.div(34, 9) == 8  # (4u+6)/(u+2) = u+1


def test_gf8_cube_relation():
    u = GF8.from_digits([0, 1])
    usq = GF8.from_digits([0, 0, 1])
    assert GF8.mul(u, usq) == GF8.from_digits([1, 1])  # u^3 = u + 1
    assert GF8.pow(u, 7) == 1
    assert GF8.add(u, u) == 0


def test_digits_roundtrip():
    rng = random.Random(7)
    for _ in range(100):
        a = rng.randrange(49)
        assert GF49.from_digits(GF49.digits(a)) == a


def test_from_digits_overflow_guard():
    assert GF49.from_digits([0, 0, 0]) == 0
    with pytest.raises(DomainError):
        GF49.from_digits([0, 0, 1])


def test_check_rejects_foreign_values():
    with pytest.raises(DomainError):
        F7.check(7)
    with pytest.raises(DomainError):
        F7.check(-1)
    assert F7.check(6) == 6


def test_element_str():
    assert F7.element_str(5) == "5"
    assert GF49.element_str(0) == "0"
    assert GF49.element_str(34) == "4*u+6"
    assert GF49.element_str(7) == "u"
    assert GF49.element_str(21) == "3*u"
    assert GF8.element_str(GF8.from_digits([1, 0, 1])) == "u^2+1"


def test_spec_equality_and_hash():
    assert FieldSpec(7) == F7
    assert FieldSpec(7, k=2, modulus=(3, 6, 1)) == GF49
    assert FieldSpec(11) != F7
    assert hash(FieldSpec(7)) == hash(F7)
