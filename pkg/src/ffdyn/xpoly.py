"""Polynomials in x whose coefficients live in F_q[t].

The x side is always small (map degrees, wronskians); the t side is where
degrees explode, so coefficient work is delegated to PolyT. Coefficients are
stored ascending in x with no trailing zero polynomials.
"""

from .errors import DomainError, FieldMismatchError
from .extnum import NEG_INF
from .poly import PolyT, poly_gcd, poly_str


class XPoly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, PolyT) or c.field != field:
                raise FieldMismatchError("coefficients must be PolyT over the field")
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("XPoly is immutable")

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (PolyT.one(field),))

    @classmethod
    def gen(cls, field):
        """The polynomial x."""
        return cls(field, (PolyT.zero(field), PolyT.one(field)))

    @classmethod
    def const(cls, c):
        """Embed a PolyT as an x-constant."""
        return cls(c.field, (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def __bool__(self):
        return bool(self.coeffs)

    def lc(self):
        if not self.coeffs:
            raise DomainError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i):
        """x^i coefficient (zero PolyT outside range, negative i included)."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return PolyT.zero(self.field)

    def __eq__(self, other):
        return (isinstance(other, XPoly) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return "XPoly(%r)" % (str(self),)

    def __str__(self):
        return x_poly_str(self)

    def _chk(self, other):
        if self.field != other.field:
            raise FieldMismatchError("operands over different fields")

    def __add__(self, other):
        self._chk(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = [x + y for x, y in zip(a, b)] + list(a[len(b):])
        return XPoly(self.field, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return XPoly(self.field, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        self._chk(other)
        if not self.coeffs or not other.coeffs:
            return XPoly.zero(self.field)
        zero = PolyT.zero(self.field)
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if ci:
                for j, cj in enumerate(other.coeffs):
                    if cj:
                        out[i + j] = out[i + j] + ci * cj
        return XPoly(self.field, out)

    def __pow__(self, e):
        e = int(e)
        if e < 0:
            raise DomainError("negative power")
        result = XPoly.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c):
        """Multiply every coefficient by a PolyT."""
        return XPoly(self.field, tuple(x * c for x in self.coeffs))

    def deriv_x(self):
        """Formal d/dx."""
        cs = [self.coeffs[i].scale(self.field.from_int(i))
              for i in range(1, len(self.coeffs))]
        return XPoly(self.field, cs)

    def deriv_t(self):
        """Coefficientwise d/dt."""
        return XPoly(self.field, tuple(c.derivative() for c in self.coeffs))

    def content(self):
        """Monic gcd of the coefficients (zero polynomial for zero)."""
        if not self.coeffs:
            return PolyT.zero(self.field)
        g = None
        for c in self.coeffs:
            if c:
                g = c if g is None else poly_gcd(g, c)
                if g.degree == 0:
                    break
        return g.monic()

    def primitive(self):
        g = self.content()
        if not g or g.degree == 0:
            return self
        return XPoly(self.field, tuple(c // g for c in self.coeffs))

    def specialize_t(self, c):
        """Substitute a field element for t, giving a univariate PolyT in x."""
        return PolyT(self.field, tuple(p.evaluate(c) for p in self.coeffs))

    def evaluate_hom(self, X, Y, d):
        """Homogeneous value sum coeff(i) X^i Y^(d-i) for formal degree d."""
        if d < len(self.coeffs) - 1:
            raise DomainError("formal degree below actual degree")
        ypow = PolyT.one(self.field)
        terms = [None] * (d + 1)
        for i in range(d, -1, -1):
            terms[i] = ypow
            if i > 0:
                ypow = ypow * Y
        # Horner in X, with the matching Y power folded into each step
        acc = self.coeff(d) * terms[d]
        for i in range(d - 1, -1, -1):
            acc = acc * X + self.coeff(i) * terms[i]
        return acc


def pseudo_divmod(f, g):
    """(m, q, r) with m*f = q*g + r, deg_x r < deg_x g, m = lc(g)^(deg f - deg g + 1).

    Fraction-free analogue of divmod for a non-monic divisor; m is an x-unit.
    """
    f._chk(g)
    if not g:
        raise ZeroDivisionError("pseudo-division by zero")
    if f.degree < g.degree:
        return PolyT.one(f.field), XPoly.zero(f.field), f
    field = f.field
    n = g.degree
    lead = g.lc()
    steps = f.degree - n + 1
    rem = list(f.coeffs)
    quo = [PolyT.zero(field)] * steps
    for shift in range(steps - 1, -1, -1):
        # scale the whole remainder so the leading term divides exactly
        c = rem[shift + n]
        for i in range(len(rem)):
            rem[i] = rem[i] * lead
        for i in range(len(quo)):
            quo[i] = quo[i] * lead
        quo[shift] = c
        for j in range(n + 1):
            rem[shift + j] = rem[shift + j] - c * g.coeffs[j]
        rem = rem[: shift + n]
    m = PolyT.one(field)
    for _ in range(steps):
        m = m * lead
    return m, XPoly(field, quo), XPoly(field, rem)


def x_poly_str(f, var="x"):
    """Descending-degree text; composite F_q[t] coefficients are parenthesized."""
    if not f.coeffs:
        return "0"
    terms = []
    for i in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[i]
        if not c:
            continue
        cs = poly_str(c)
        if "+" in cs:
            cs = "(%s)" % cs
        if i == 0:
            terms.append(cs)
        else:
            v = var if i == 1 else "%s^%d" % (var, i)
            terms.append(v if cs == "1" else "%s*%s" % (cs, v))
    return "+".join(terms)
