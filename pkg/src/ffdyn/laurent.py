"""Truncated Laurent expansions at the infinite place.

A LaurentTail holds finitely many coefficients of sum c_i t^-i starting at
exponent i = valuation. Everything past the stored window is unknown, not
zero, so operations intersect windows and order() refuses to answer when the
window cannot certify a leading exponent. Expansion depth is bounded by an
explicit cap (FFDYN_PRECISION_CAP, default 100000): exceeding it is a hard
error, never a silent truncation.
"""

import os
from fractions import Fraction

from .errors import DomainError, FieldMismatchError, PrecisionCapError
from .poly import PolyT
from .ratk import RatK

DEFAULT_PRECISION_CAP = 100000


def precision_cap():
    return int(os.environ.get("FFDYN_PRECISION_CAP", DEFAULT_PRECISION_CAP))


class LaurentTail:
    __slots__ = ("field", "valuation", "coeffs")

    def __init__(self, field, valuation, coeffs):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise DomainError("a LaurentTail needs a positive-width window")
        for c in coeffs:
            field.check(c)
        # strip leading zeros, keeping the window end fixed, unless the
        # tail is identically zero to precision
        i = 0
        while i < len(coeffs) - 1 and not coeffs[i]:
            i += 1
        if coeffs[i]:
            valuation += i
            coeffs = coeffs[i:]
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "valuation", int(valuation))
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentTail is immutable")

    @property
    def precision(self):
        return len(self.coeffs)

    @property
    def end(self):
        """First exponent past the known window."""
        return self.valuation + len(self.coeffs)

    def order(self):
        """Exponent of the leading nonzero coefficient.

        Raises PrecisionCapError when every known coefficient vanishes: the
        window cannot tell the zero series from one that starts later.
        """
        for i, c in enumerate(self.coeffs):
            if c:
                return self.valuation + i
        raise PrecisionCapError(
            "tail is zero through t^-%d; valuation unresolved" % (self.end - 1))

    def coeff(self, i):
        """Coefficient of t^-i; errors outside the known window."""
        if not self.valuation <= i < self.end:
            raise PrecisionCapError("exponent %d outside known window" % i)
        return self.coeffs[i - self.valuation]

    def __eq__(self, other):
        return (isinstance(other, LaurentTail) and self.field == other.field
                and self.valuation == other.valuation
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, self.valuation, self.coeffs))

    def _align(self, other):
        # coefficients below a valuation are known zeros, so the combined
        # window always starts at the smaller valuation and ends where the
        # first operand runs out
        if self.field != other.field:
            raise FieldMismatchError("tails over different fields")
        return min(self.valuation, other.valuation), min(self.end, other.end)

    def _window(self, lo, hi):
        out = []
        for i in range(lo, hi):
            out.append(self.coeffs[i - self.valuation]
                       if self.valuation <= i < self.end else 0)
        return out

    def __add__(self, other):
        lo, hi = self._align(other)
        add = self.field.add
        a, b = self._window(lo, hi), other._window(lo, hi)
        return LaurentTail(self.field, lo,
                           [add(x, y) for x, y in zip(a, b)])

    def __sub__(self, other):
        lo, hi = self._align(other)
        sub = self.field.sub
        a, b = self._window(lo, hi), other._window(lo, hi)
        return LaurentTail(self.field, lo,
                           [sub(x, y) for x, y in zip(a, b)])

    def __neg__(self):
        neg = self.field.neg
        return LaurentTail(self.field, self.valuation,
                           [neg(c) for c in self.coeffs])

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            e = self.valuation + i
            cs = self.field.element_str(c)
            if "+" in cs:
                cs = "(%s)" % cs
            if e == 0:
                terms.append(cs)
            else:
                base = "t^%d" % -e
                terms.append(base if cs == "1" else "%s*%s" % (cs, base))
        body = "+".join(terms) if terms else "0"
        return "%s + O(t^%d)" % (body, -self.end)


def laurent_expand(r, n, cap=None):
    """First n coefficients of a RatK at the infinite place.

    The result window starts at the valuation -abs_inf(r) (at 0 for the zero
    function). n beyond the precision cap is a hard error.
    """
    if n < 1:
        raise DomainError("need a positive number of coefficients")
    limit = precision_cap() if cap is None else cap
    if n > limit:
        raise PrecisionCapError(
            "requested %d coefficients; cap is %d" % (n, limit))
    field = r.field
    if not r:
        return LaurentTail(field, 0, (0,) * n)
    num, den = r.num, r.den
    a, b = num.degree, den.degree
    # switch to the local parameter w = 1/t: r = w^(b-a) * rev(num)/rev(den)
    f = list(reversed(num.coeffs))
    g = list(reversed(den.coeffs))
    inv0 = field.inv(g[0])
    out = []
    if field.k == 1:
        p = field.p
        for i in range(n):
            acc = f[i] if i < len(f) else 0
            for j in range(1, min(i, len(g) - 1) + 1):
                acc -= g[j] * out[i - j]
            out.append((acc % p) * inv0 % p)
    else:
        for i in range(n):
            acc = f[i] if i < len(f) else 0
            for j in range(1, min(i, len(g) - 1) + 1):
                acc = field.sub(acc, field.mul(g[j], out[i - j]))
            out.append(field.mul(acc, inv0))
    return LaurentTail(field, b - a, out)


def mahler_exponent_probe(field, j_max, cap=None):
    """Approximation-exponent table for beta = sum over j of t^(-q^j).

    For each j <= j_max, the partial sum S_j = sum_{i<=j} t^(-q^i) is a
    rational function with denominator Q_j = t^(q^j); the row reports
    deg Q_j, the valuation of beta - S_j, and their exact ratio, which is
    q at every depth. beta itself only ever exists as a window truncation
    of the defining series.
    """
    if j_max < 0:
        raise DomainError("j_max must be nonnegative")
    q = field.q
    limit = precision_cap() if cap is None else cap
    n = q ** (j_max + 1) + 1
    if n > limit:
        raise PrecisionCapError(
            "probe needs %d coefficients; cap is %d" % (n, limit))
    coeffs = [0] * n
    e = 1
    while e <= n:
        coeffs[e - 1] = 1  # window starts at exponent 1
        e *= q
    beta = LaurentTail(field, 1, coeffs)
    rows = []
    for j in range(j_max + 1):
        qj = q ** j
        den = PolyT(field, (0,) * qj + (1,))
        num_coeffs = [0] * qj
        for i in range(j + 1):
            num_coeffs[qj - q ** i] = 1  # S_j numerator term t^(qj - q^i)
        s_j = RatK(PolyT(field, num_coeffs), den)
        tail = laurent_expand(s_j, n, cap=limit)
        ord_diff = (beta - tail).order()
        rows.append(MahlerRow(j, qj, ord_diff, Fraction(ord_diff, qj)))
    return rows


class MahlerRow(tuple):
    """(j, deg_q, neg_log_abs, estimate) with named access."""

    __slots__ = ()

    def __new__(cls, j, deg_q, neg_log_abs, estimate):
        return tuple.__new__(cls, (j, deg_q, neg_log_abs, estimate))

    j = property(lambda s: s[0])
    deg_q = property(lambda s: s[1])
    neg_log_abs = property(lambda s: s[2])
    estimate = property(lambda s: s[3])
