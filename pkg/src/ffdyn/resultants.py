"""Resultants over F_q and over F_q[t].

The workhorse is a pseudo-Euclidean reduction for x-polynomials with F_q[t]
coefficients that tracks every leading-coefficient factor it introduces, so
the answer is assembled exactly without ever forming a fraction. A naive
Sylvester determinant is kept alongside as the small-degree oracle, and the
homogeneous (binary-form) variant certifies true map degree, catching common
roots at infinity that the affine resultant misses.
"""

from .errors import DomainError
from .linalg import bareiss_det
from .poly import PolyT
from .xpoly import XPoly, pseudo_divmod


def resultant_elem(f, g):
    """Resultant of two polynomials in t over F_q, as a field element."""
    field = f.field
    if not f and not g:
        raise DomainError("resultant of two zero polynomials")
    if not f or not g:
        return 0
    m, n = f.degree, g.degree
    if m == 0 and n == 0:
        return 1
    if m == 0:
        return field.pow(f.coeffs[0], n)
    if n == 0:
        return field.pow(g.coeffs[0], m)
    # Sylvester determinant by Gaussian elimination over the field
    size = m + n
    rows = []
    frow = list(reversed(f.coeffs))
    grow = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([0] * i + frow + [0] * (n - 1 - i))
    for i in range(m):
        rows.append([0] * i + grow + [0] * (m - 1 - i))
    det = 1
    for k in range(size):
        piv = next((i for i in range(k, size) if rows[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            det = field.neg(det)
        pivot = rows[k][k]
        det = field.mul(det, pivot)
        inv = field.inv(pivot)
        for i in range(k + 1, size):
            c = field.mul(rows[i][k], inv)
            if c:
                for j in range(k, size):
                    rows[i][j] = field.sub(rows[i][j],
                                           field.mul(c, rows[k][j]))
    return det


def sylvester_resultant_x(f, g):
    """Res_x by the explicit Sylvester determinant (small-degree oracle)."""
    field = f.field
    if not f and not g:
        raise DomainError("resultant of two zero polynomials")
    if not f or not g:
        return PolyT.zero(field)
    m, n = f.degree, g.degree
    if m == 0 and n == 0:
        return PolyT.one(field)
    if m == 0:
        return f.coeffs[0] ** n
    if n == 0:
        return g.coeffs[0] ** m
    zero = PolyT.zero(field)
    frow = list(reversed(f.coeffs))
    grow = list(reversed(g.coeffs))
    rows = []
    for i in range(n):
        rows.append([zero] * i + frow + [zero] * (n - 1 - i))
    for i in range(m):
        rows.append([zero] * i + grow + [zero] * (m - 1 - i))
    return bareiss_det(rows)


def resultant_x(f, g):
    """Res_x(f, g) in F_q[t] by pseudo-Euclidean reduction with factor tracking.

    Every step uses the two identities Res(B, c*A) = c^deg(B) * Res(B, A) and
    Res(B, Q*B + R) = lc(B)^(deg - deg R) * Res(B, R); the collected leading
    coefficients are multiplied back (or divided out, exactly) at the end.
    """
    field = f.field
    if not f and not g:
        raise DomainError("resultant of two zero polynomials")
    if not f or not g:
        return PolyT.zero(field)
    num = []  # (PolyT, exponent) factors
    den = []
    sign = 1
    A, B = f, g
    while True:
        if A.degree < B.degree:
            if (A.degree * B.degree) % 2:
                sign = -sign
            A, B = B, A
        if B.degree == 0:
            num.append((B.coeffs[0], A.degree))
            break
        m, n = A.degree, B.degree
        delta = m - n
        _, _, R = pseudo_divmod(A, B)  # lc(B)^(delta+1) A = Q B + R
        if not R:
            return PolyT.zero(field)
        if (m * n) % 2:
            sign = -sign
        e = m - R.degree - (delta + 1) * n
        if e >= 0:
            num.append((B.lc(), e))
        else:
            den.append((B.lc(), -e))
        cont = R.content()
        if cont.degree > 0 or cont.lc() != 1:
            num.append((cont, n))
            R = XPoly(field, tuple(c // cont for c in R.coeffs))
        A, B = B, R
    acc = PolyT.one(field)
    for base, e in num:
        if e:
            acc = acc * base ** e
    for base, e in den:
        if e:
            q, r = divmod(acc, base ** e)
            if r:
                raise DomainError("inexact factor division in resultant")
            acc = q
    return -acc if sign < 0 else acc


def resultant_hom(ac, bc, d):
    """Resultant of two binary forms of formal degree d (coefficients PolyT).

    ac, bc are ascending x-coefficient lists padded to length d+1; a zero at
    index d is a genuine coefficient, which is how common roots at [1:0]
    (simultaneous degree drop) are detected.
    """
    if len(ac) != d + 1 or len(bc) != d + 1:
        raise DomainError("coefficient lists must have length d+1")
    field = ac[0].field
    zero = PolyT.zero(field)
    arow = [ac[d - j] for j in range(d + 1)]
    brow = [bc[d - j] for j in range(d + 1)]
    rows = []
    for i in range(d):
        rows.append([zero] * i + arow + [zero] * (d - 1 - i))
    for i in range(d):
        rows.append([zero] * i + brow + [zero] * (d - 1 - i))
    return bareiss_det(rows)
