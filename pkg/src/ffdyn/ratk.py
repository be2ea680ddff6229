"""The rational function field K = F_q(t).

Every RatK is kept in canonical form: denominator monic, numerator and
denominator coprime, zero stored as 0/1. Equality is therefore structural.
"""

from .errors import DomainError, FieldMismatchError
from .extnum import NEG_INF
from .poly import PolyT, poly_gcd, poly_str


class RatK:
    __slots__ = ("field", "num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = PolyT.one(num.field)
        if num.field != den.field:
            raise FieldMismatchError("numerator and denominator fields differ")
        if not den:
            raise ZeroDivisionError("zero denominator in K")
        if not num:
            den = PolyT.one(num.field)
        else:
            g = poly_gcd(num, den)
            if g.degree != 0:
                num, den = num // g, den // g
            lead = den.lc()
            if lead != 1:
                inv = num.field.inv(lead)
                num, den = num.scale(inv), den.scale(inv)
        object.__setattr__(self, "field", num.field)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def _raw(cls, num, den):
        # internal: already canonical
        self = object.__new__(cls)
        object.__setattr__(self, "field", num.field)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        return self

    @classmethod
    def zero(cls, field):
        return cls._raw(PolyT.zero(field), PolyT.one(field))

    @classmethod
    def one(cls, field):
        return cls._raw(PolyT.one(field), PolyT.one(field))

    @classmethod
    def constant(cls, field, n):
        """Integer literal, reduced mod p."""
        return cls._raw(PolyT.constant(field, n), PolyT.one(field))

    @classmethod
    def gen(cls, field):
        """The element t."""
        return cls._raw(PolyT.gen(field), PolyT.one(field))

    @classmethod
    def from_poly(cls, f):
        return cls._raw(f, PolyT.one(f.field))

    def __setattr__(self, name, value):
        raise AttributeError("RatK is immutable")

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        return (isinstance(other, RatK) and self.field == other.field
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return "RatK(%r)" % (str(self),)

    def __str__(self):
        if self.den.degree == 0:
            return poly_str(self.num)
        return "(%s)/(%s)" % (poly_str(self.num), poly_str(self.den))

    def is_poly(self):
        return self.den.degree == 0

    def as_poly(self):
        if self.den.degree != 0:
            raise DomainError("not a polynomial: %s" % self)
        return self.num

    def _chk(self, other):
        if self.field != other.field:
            raise FieldMismatchError("operands over different fields")

    def __add__(self, other):
        self._chk(other)
        return RatK(self.num * other.den + other.num * self.den,
                    self.den * other.den)

    def __sub__(self, other):
        self._chk(other)
        return RatK(self.num * other.den - other.num * self.den,
                    self.den * other.den)

    def __neg__(self):
        return RatK._raw(-self.num, self.den)

    def __mul__(self, other):
        self._chk(other)
        return RatK(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        self._chk(other)
        if not other.num:
            raise ZeroDivisionError("division by zero in K")
        return RatK(self.num * other.den, self.den * other.num)

    def inv(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero in K")
        return RatK(self.den, self.num)

    def smul(self, n):
        """Multiply by an integer (image of n in F_p)."""
        c = self.field.from_int(n)
        if not c:
            return RatK.zero(self.field)
        return RatK._raw(self.num.scale(c), self.den)

    def __pow__(self, e):
        e = int(e)
        if e < 0:
            return self.inv() ** (-e)
        return RatK(self.num ** e, self.den ** e)

    def derivative(self):
        """Formal d/dt by the quotient rule."""
        n, d = self.num, self.den
        return RatK(n.derivative() * d - n * d.derivative(), d * d)

    def abs_inf(self):
        """log_q of the absolute value at the infinite place: deg num - deg den."""
        if not self.num:
            return NEG_INF
        return self.num.degree - self.den.degree

    def evaluate(self, x):
        """Value at t = x for a field element x; the pole case is an error."""
        dv = self.den.evaluate(x)
        if not dv:
            raise DomainError("evaluation at a pole")
        nv = self.num.evaluate(x)
        return self.field.div(nv, dv)
