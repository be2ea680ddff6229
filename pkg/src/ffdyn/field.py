"""Finite fields F_q with q = p^k.

An element is an int in range(q) whose base-p digits are the coefficients,
least significant first, of its residue polynomial in the generator u. For
k = 1 this is ordinary arithmetic mod p. Note that for k > 1 addition is
digitwise mod p, never integer addition mod q: all element arithmetic must go
through the FieldSpec methods.

Extensions require a user-supplied monic irreducible modulus (no generated
Conway tables, so a field spec always reconstructs the same arithmetic).
"""

import gmpy2

from .errors import DomainError

_MACHINE_WORD_BITS = 63


def _ptrim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmul(p, f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                out[i + j] = (out[i + j] + fi * gj) % p
    return _ptrim(out)


def _pmod(p, f, m):
    # f reduced by monic m over F_p
    f = list(f)
    dm = len(m) - 1
    while len(f) - 1 >= dm and f:
        lead = f[-1]
        if lead:
            shift = len(f) - 1 - dm
            for j, mj in enumerate(m):
                f[shift + j] = (f[shift + j] - lead * mj) % p
        f.pop()
    return _ptrim(f)


def _ppowmod(p, base, e, m):
    result = [1]
    b = _pmod(p, base, m)
    while e:
        if e & 1:
            result = _pmod(p, _pmul(p, result, b), m)
        b = _pmod(p, _pmul(p, b, b), m)
        e >>= 1
    return result


def _pgcd(p, f, g):
    f, g = _ptrim(f), _ptrim(g)
    while g:
        # f mod g with unit normalization
        inv = pow(g[-1], p - 2, p)
        gm = [(c * inv) % p for c in g]
        f = _pmod(p, f, gm)
        f, g = g, f
    return f


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_irreducible(p, m):
    """Rabin test for a monic polynomial m over F_p."""
    k = len(m) - 1
    if k < 1:
        return False
    x = [0, 1]
    xq = _ppowmod(p, x, p**k, m)
    if _ptrim([(a - b) % p for a, b in
               zip(xq + [0] * len(x), x + [0] * len(xq))]):
        return False
    for r in _prime_factors(k):
        e = k // r
        xe = _ppowmod(p, x, p**e, m)
        diff = [(a - b) % p for a, b in
                zip(xe + [0] * len(x), x + [0] * len(xe))]
        if len(_pgcd(p, diff, m)) > 1:
            return False
    return True


class FieldSpec:
    """Immutable description of F_q plus element arithmetic.

    Elements are plain ints; the spec object is the arithmetic context.
    """

    __slots__ = ("p", "k", "q", "modulus")

    def __init__(self, p, k=1, modulus=None):
        p, k = int(p), int(k)
        if p < 2 or not gmpy2.is_prime(p):
            raise DomainError("p = %r is not prime" % (p,))
        if p.bit_length() > _MACHINE_WORD_BITS:
            raise DomainError("p must fit in a machine word")
        if k < 1:
            raise DomainError("extension degree k must be >= 1")
        if k == 1:
            if modulus is not None:
                raise DomainError("modulus is only meaningful for k > 1")
            mod = None
        else:
            if modulus is None:
                raise DomainError("extension fields need an explicit modulus")
            mod = tuple(int(c) % p for c in modulus)
            if len(mod) != k + 1 or mod[-1] != 1:
                raise DomainError(
                    "modulus must be monic of degree k = %d" % k)
            if not _is_irreducible(p, list(mod)):
                raise DomainError("modulus is reducible over F_%d" % p)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "q", p**k)
        object.__setattr__(self, "modulus", mod)

    def __setattr__(self, name, value):
        raise AttributeError("FieldSpec is immutable")

    def __eq__(self, other):
        return (isinstance(other, FieldSpec)
                and (self.p, self.k, self.modulus)
                == (other.p, other.k, other.modulus))

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        if self.k == 1:
            return "FieldSpec(%d)" % self.p
        return "FieldSpec(%d, k=%d, modulus=%r)" % (self.p, self.k,
                                                    self.modulus)

    # -- element codec ----------------------------------------------------

    def digits(self, a):
        """Base-p digits of an element, ascending, length k."""
        out = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_digits(self, ds):
        ds = [int(c) % self.p for c in ds]
        if len(ds) > self.k:
            if any(ds[self.k:]):
                raise DomainError("element has degree >= k in u")
            ds = ds[: self.k]
        a = 0
        for c in reversed(ds):
            a = a * self.p + c
        return a

    def from_int(self, n):
        """Embed an integer literal via the prime subfield."""
        return int(n) % self.p

    def check(self, a):
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise DomainError("%r is not an element of this field" % (a,))
        return a

    # -- arithmetic --------------------------------------------------------

    def add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        return self.from_digits([x + y for x, y in
                                 zip(self.digits(a), self.digits(b))])

    def sub(self, a, b):
        if self.k == 1:
            return (a - b) % self.p
        return self.from_digits([x - y for x, y in
                                 zip(self.digits(a), self.digits(b))])

    def neg(self, a):
        if self.k == 1:
            return (-a) % self.p
        return self.from_digits([-x for x in self.digits(a)])

    def mul(self, a, b):
        if self.k == 1:
            return (a * b) % self.p
        prod = _pmul(self.p, self.digits(a), self.digits(b))
        return self.from_digits(_pmod(self.p, prod, list(self.modulus)))

    def smul(self, n, a):
        """Integer scalar times an element (n reduced into F_p)."""
        return self.mul(self.from_int(n), a)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in F_q")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        # extended Euclid over F_p[u]
        p, m = self.p, list(self.modulus)
        r0, r1 = m, self.digits(a)
        s0, s1 = [], [1]
        while _ptrim(r1):
            r1 = _ptrim(r1)
            inv_lc = pow(r1[-1], p - 2, p)
            # one full division step
            q = [0] * (len(_ptrim(r0)) - len(r1) + 1) if len(_ptrim(r0)) >= len(r1) else []
            r0 = _ptrim(r0)
            while len(r0) >= len(r1):
                shift = len(r0) - len(r1)
                coef = (r0[-1] * inv_lc) % p
                q[shift] = coef
                for j, c in enumerate(r1):
                    r0[shift + j] = (r0[shift + j] - coef * c) % p
                r0 = _ptrim(r0)
            r0, r1 = r1, r0
            qs1 = _pmul(p, q, s1)
            news = [(x - y) % p for x, y in
                    zip(s0 + [0] * len(qs1), qs1 + [0] * len(s0))]
            s0, s1 = s1, _ptrim(news)
        # r0 is the (nonzero constant) gcd since a is invertible
        c = pow(r0[0], p - 2, p)
        return self.from_digits([(x * c) % p for x in s0])

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        e = int(e)
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self.k == 1:
            return pow(a, e, self.p)
        result, b = 1, a
        while e:
            if e & 1:
                result = self.mul(result, b)
            b = self.mul(b, b)
            e >>= 1
        return result

    # -- rendering ---------------------------------------------------------

    def element_str(self, a):
        """Canonical text for an element: an int for k = 1, a u-polynomial
        (digits in 0..p-1, no minus signs) otherwise."""
        if self.k == 1:
            return str(a)
        ds = self.digits(a)
        terms = []
        for i in range(self.k - 1, -1, -1):
            c = ds[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("u" if c == 1 else "%d*u" % c)
            else:
                terms.append("u^%d" % i if c == 1 else "%d*u^%d" % (c, i))
        return "+".join(terms) if terms else "0"
