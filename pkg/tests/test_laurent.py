from fractions import Fraction

import pytest

from ffdyn.errors import DomainError, PrecisionCapError
from ffdyn.field import FieldSpec
from ffdyn.laurent import LaurentTail, laurent_expand, mahler_exponent_probe
from ffdyn.poly import PolyT
from ffdyn.ratk import RatK

F5 = FieldSpec(5)
F7 = FieldSpec(7)
GF9 = FieldSpec(3, k=2, modulus=(1, 0, 1))


def test_expand_one_over_t():
    r = RatK(PolyT.one(F5), PolyT.gen(F5))
    tail = laurent_expand(r, 4)
    assert tail.valuation == 1
    assert tail.coeffs == (1, 0, 0, 0)
    assert tail.order() == 1


def test_expand_with_pole_at_infinity():
    """t^2/(t+1) = t - 1 + 1/t - 1/t^2 + ... with alternating signs."""
    t = PolyT.gen(F5)
    r = RatK(t * t, t + PolyT.one(F5))
    tail = laurent_expand(r, 6)
    assert tail.valuation == -1
    assert tail.coeffs == (1, 4, 1, 4, 1, 4)


def test_expand_zero():
    tail = laurent_expand(RatK.zero(F5), 5)
    assert tail.coeffs == (0, 0, 0, 0, 0)
    with pytest.raises(PrecisionCapError):
        tail.order()


def test_expansion_matches_geometric_identity():
    # (t+1) * expand(1/(t+1)) begins 1, 0, 0, ... so check the recurrence
    t = PolyT.gen(F7)
    r = RatK(PolyT.one(F7), t + PolyT.constant(F7, 3))
    tail = laurent_expand(r, 8)
    # 1/(t+3) = sum (-3)^i t^-(i+1)
    expect = []
    acc = 1
    for _ in range(8):
        expect.append(acc)
        acc = (acc * -3) % 7
    assert tail.coeffs == tuple(expect)


def test_precision_cap_param_and_env(monkeypatch):
    r = RatK(PolyT.one(F5), PolyT.gen(F5))
    with pytest.raises(PrecisionCapError):
        laurent_expand(r, 60, cap=50)
    monkeypatch.setenv("FFDYN_PRECISION_CAP", "10")
    with pytest.raises(PrecisionCapError):
        laurent_expand(r, 20)
    assert laurent_expand(r, 10).precision == 10


def test_window_arithmetic():
    a = LaurentTail(F5, 1, (1, 2, 3))
    b = LaurentTail(F5, 2, (2, 3, 4))
    s = a - b
    assert s.valuation == 1
    assert s.coeffs == (1, 0, 0)  # overlap ends at exponent 3
    d = a + b
    assert d.coeffs == (1, 4, 1)
    # a window far below another contributes known zeros, not unknowns
    far = LaurentTail(F5, 5, (1,)) - LaurentTail(F5, 1, (1,))
    assert far.valuation == 1 and far.coeffs == (4,)


def test_leading_zero_normalization():
    tail = LaurentTail(F5, 1, (0, 0, 2, 1))
    assert tail.valuation == 3
    assert tail.coeffs == (2, 1)
    assert tail.end == 5
    zero = LaurentTail(F5, 1, (0, 0, 0))
    assert zero.valuation == 1  # all-zero window keeps its anchor
    assert zero.precision == 3


def test_tail_str():
    tail = LaurentTail(F5, 1, (1, 0, 4))
    assert str(tail) == "t^-1+4*t^-3 + O(t^-4)"


def test_mahler_probe_q5():
    rows = mahler_exponent_probe(F5, 3)
    assert [r.j for r in rows] == [0, 1, 2, 3]
    assert [r.deg_q for r in rows] == [1, 5, 25, 125]
    assert [r.neg_log_abs for r in rows] == [5, 25, 125, 625]
    assert all(r.estimate == Fraction(5) for r in rows)


def test_mahler_probe_other_fields():
    assert all(r.estimate == 7 for r in mahler_exponent_probe(F7, 1))
    assert all(r.estimate == 9 for r in mahler_exponent_probe(GF9, 1))


def test_mahler_probe_cap():
    with pytest.raises(PrecisionCapError):
        mahler_exponent_probe(F5, 7)  # 5^8 coefficients > default cap
    with pytest.raises(DomainError):
        mahler_exponent_probe(F5, -1)
