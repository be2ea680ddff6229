"""Polynomials in t over F_q.

Immutable. Coefficients are stored ascending with no trailing zeros, so the
empty tuple is the zero polynomial; its degree is the NEG_INF sentinel, never
-1. Multiplication is tiered: schoolbook up to SCHOOLBOOK_MAX coefficients on
the shorter side, Kronecker substitution (pack into one big integer product)
over prime fields above that, Karatsuba for extension fields. The tiers agree
bit-exactly and the fixed threshold keeps results byte-reproducible.
"""

from .errors import DomainError, FieldMismatchError
from .extnum import NEG_INF

SCHOOLBOOK_MAX = 64


def _trim(cs):
    n = len(cs)
    while n and not cs[n - 1]:
        n -= 1
    return cs[:n]


def _mul_schoolbook(field, fa, fb):
    if not fa or not fb:
        return []
    out = [0] * (len(fa) + len(fb) - 1)
    if field.k == 1:
        p = field.p
        for i, ai in enumerate(fa):
            if ai:
                for j, bj in enumerate(fb):
                    out[i + j] += ai * bj
        return [v % p for v in out]
    add, mul = field.add, field.mul
    for i, ai in enumerate(fa):
        if ai:
            for j, bj in enumerate(fb):
                if bj:
                    out[i + j] = add(out[i + j], mul(ai, bj))
    return out


def _mul_kronecker(field, fa, fb):
    """Prime fields only: evaluate at 2^(8B) and multiply once."""
    if not fa or not fb:
        return []
    p = field.p
    # every convolution coefficient is < (p-1)^2 * n, n = overlap count
    n = min(len(fa), len(fb))
    bits = 2 * (p - 1).bit_length() + n.bit_length()
    B = (bits + 7) // 8
    packed_a = int.from_bytes(
        b"".join(c.to_bytes(B, "little") for c in fa), "little")
    packed_b = int.from_bytes(
        b"".join(c.to_bytes(B, "little") for c in fb), "little")
    prod = packed_a * packed_b
    total = len(fa) + len(fb) - 1
    raw = prod.to_bytes(B * (len(fa) + len(fb)), "little")
    return [int.from_bytes(raw[i * B:(i + 1) * B], "little") % p
            for i in range(total)]


def _add_lists(field, fa, fb):
    if len(fa) < len(fb):
        fa, fb = fb, fa
    add = field.add
    return [add(a, b) for a, b in zip(fa, fb)] + list(fa[len(fb):])


def _mul_karatsuba(field, fa, fb):
    if min(len(fa), len(fb)) <= SCHOOLBOOK_MAX:
        return _mul_schoolbook(field, fa, fb)
    m = max(len(fa), len(fb)) // 2
    a0, a1 = fa[:m], fa[m:]
    b0, b1 = fb[:m], fb[m:]
    z0 = _mul_karatsuba(field, a0, b0) if a0 and b0 else []
    z2 = _mul_karatsuba(field, a1, b1) if a1 and b1 else []
    zm = _mul_karatsuba(field, _add_lists(field, a0, a1),
                        _add_lists(field, b0, b1))
    sub = field.sub
    z1 = list(zm)
    for src in (z0, z2):
        for i, c in enumerate(src):
            z1[i] = sub(z1[i], c)
    out = [0] * (len(fa) + len(fb) - 1)
    add = field.add
    for i, c in enumerate(z0):
        out[i] = add(out[i], c)
    for i, c in enumerate(z1):
        out[m + i] = add(out[m + i], c)
    for i, c in enumerate(z2):
        out[2 * m + i] = add(out[2 * m + i], c)
    return out


def _mul_dispatch(field, fa, fb):
    if min(len(fa), len(fb)) <= SCHOOLBOOK_MAX:
        return _mul_schoolbook(field, fa, fb)
    if field.k == 1:
        return _mul_kronecker(field, fa, fb)
    return _mul_karatsuba(field, fa, fb)


class PolyT:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        cs = _trim(tuple(coeffs))
        for c in cs:
            field.check(c)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def _raw(cls, field, coeffs):
        # internal: coeffs already a trimmed tuple of valid elements
        self = object.__new__(cls)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", coeffs)
        return self

    @classmethod
    def zero(cls, field):
        return cls._raw(field, ())

    @classmethod
    def one(cls, field):
        return cls._raw(field, (1,))

    @classmethod
    def constant(cls, field, n):
        """Constant polynomial from an integer literal (reduced mod p)."""
        c = field.from_int(n)
        return cls._raw(field, (c,) if c else ())

    @classmethod
    def gen(cls, field):
        """The polynomial t."""
        return cls._raw(field, (0, 1))

    def __setattr__(self, name, value):
        raise AttributeError("PolyT is immutable")

    # -- structure ----------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def __bool__(self):
        return bool(self.coeffs)

    def lc(self):
        if not self.coeffs:
            raise DomainError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        return (isinstance(other, PolyT) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return "PolyT(%r)" % (str(self),)

    def __str__(self):
        return poly_str(self)

    def _chk(self, other):
        if self.field != other.field:
            raise FieldMismatchError("operands over different fields")

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        self._chk(other)
        return PolyT._raw(self.field, tuple(_trim(
            _add_lists(self.field, self.coeffs, other.coeffs))))

    def __sub__(self, other):
        self._chk(other)
        return self + (-other)

    def __neg__(self):
        neg = self.field.neg
        return PolyT._raw(self.field, tuple(neg(c) for c in self.coeffs))

    def __mul__(self, other):
        self._chk(other)
        return PolyT._raw(self.field, tuple(_trim(
            _mul_dispatch(self.field, self.coeffs, other.coeffs))))

    def scale(self, c):
        """Multiply by a field element."""
        if not c:
            return PolyT.zero(self.field)
        if self.field.k == 1:
            p = self.field.p
            return PolyT._raw(self.field,
                              tuple((x * c) % p for x in self.coeffs))
        mul = self.field.mul
        return PolyT._raw(self.field, tuple(mul(x, c) for x in self.coeffs))

    def __pow__(self, e):
        e = int(e)
        if e < 0:
            raise DomainError("negative polynomial power")
        result = PolyT.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        self._chk(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        field = self.field
        dn, dd = len(self.coeffs), len(other.coeffs)
        if dn < dd:
            return PolyT.zero(field), self
        den = other.coeffs
        inv = field.inv(den[-1])
        num = list(self.coeffs)
        quo = [0] * (dn - dd + 1)
        if field.k == 1:
            p = field.p
            for shift in range(dn - dd, -1, -1):
                c = num[shift + dd - 1]
                if c:
                    c = (c * inv) % p
                    quo[shift] = c
                    for j in range(dd - 1):
                        num[shift + j] = (num[shift + j] - c * den[j]) % p
                    num[shift + dd - 1] = 0
        else:
            mul, sub = field.mul, field.sub
            for shift in range(dn - dd, -1, -1):
                c = num[shift + dd - 1]
                if c:
                    c = mul(c, inv)
                    quo[shift] = c
                    for j in range(dd - 1):
                        num[shift + j] = sub(num[shift + j], mul(c, den[j]))
                    num[shift + dd - 1] = 0
        return (PolyT._raw(field, tuple(_trim(quo))),
                PolyT._raw(field, tuple(_trim(num[: dd - 1]))))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    # -- field-of-fractions helpers ------------------------------------------

    def monic(self):
        if not self.coeffs:
            raise DomainError("cannot normalize the zero polynomial")
        lead = self.coeffs[-1]
        return self if lead == 1 else self.scale(self.field.inv(lead))

    def derivative(self):
        """Formal d/dt."""
        field = self.field
        if len(self.coeffs) < 2:
            return PolyT.zero(field)
        if field.k == 1:
            p = field.p
            cs = [(i * c) % p for i, c in enumerate(self.coeffs)][1:]
        else:
            cs = [field.smul(i, c) for i, c in enumerate(self.coeffs)][1:]
        return PolyT._raw(field, tuple(_trim(cs)))

    def evaluate(self, x):
        """Value at a field element (Horner)."""
        field = self.field
        acc = 0
        if field.k == 1:
            p = field.p
            for c in reversed(self.coeffs):
                acc = (acc * x + c) % p
            return acc
        for c in reversed(self.coeffs):
            acc = field.add(field.mul(acc, x), c)
        return acc


def poly_gcd(f, g):
    """Monic gcd in F_q[t]; gcd(f, 0) = monic(f). Both zero is an error."""
    f._chk(g)
    if not f and not g:
        raise DomainError("gcd(0, 0) is undefined")
    while g:
        f, g = g, f % g
    return f.monic()


def poly_str(f, var="t"):
    """Canonical text, descending degree, digits in 0..p-1 (no minus signs).

    Extension-field coefficients render as parenthesized u-polynomials.
    """
    if not f.coeffs:
        return "0"
    field = f.field
    terms = []
    for i in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[i]
        if not c:
            continue
        cs = field.element_str(c)
        if "+" in cs:
            cs = "(%s)" % cs
        if i == 0:
            terms.append(cs)
        else:
            v = var if i == 1 else "%s^%d" % (var, i)
            terms.append(v if cs == "1" else "%s*%s" % (cs, v))
    return "+".join(terms)
