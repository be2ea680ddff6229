"""Fraction-free linear algebra over F_q[t].

Bareiss elimination keeps every intermediate entry a minor of the input
matrix, so the divisions below are exact and nothing ever leaves the
polynomial ring. Rank and determinant callers clear K-denominators rowwise
first (clear_rows) and divide back out at the end.
"""

from .errors import DomainError, SingularBlockError
from .poly import PolyT, poly_gcd


def _exact_div(num, den):
    q, r = divmod(num, den)
    if r:
        raise DomainError("inexact division in fraction-free elimination")
    return q


def bareiss_det(rows):
    """Determinant of a square matrix of PolyT."""
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise DomainError("need a nonempty square matrix")
    m = [list(r) for r in rows]
    field = m[0][0].field
    sign = 1
    prev = PolyT.one(field)
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if m[i][k]), None)
        if piv is None:
            return PolyT.zero(field)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = _exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j],
                                     prev)
            m[i][k] = PolyT.zero(field)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def mat_rank(rows):
    """Rank of a matrix of PolyT (columns may outnumber rows or vice versa)."""
    if not rows or not rows[0]:
        return 0
    m = [list(r) for r in rows]
    nr, nc = len(m), len(m[0])
    field = m[0][0].field
    prev = PolyT.one(field)
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, nr):
            for j in range(c + 1, nc):
                m[i][j] = _exact_div(m[r][c] * m[i][j] - m[i][c] * m[r][j],
                                     prev)
            m[i][c] = PolyT.zero(field)
        prev = m[r][c]
        r += 1
        if r == nr:
            break
    return r


def cramer_solve(rows, rhs):
    """(det, [det_i]) for a square PolyT system; raises on a singular block.

    Solution components are det_i/det in K; the caller builds the fractions.
    """
    n = len(rows)
    det = bareiss_det(rows)
    if not det:
        raise SingularBlockError("coefficient block is singular")
    cols = []
    for i in range(n):
        cols.append(bareiss_det([list(row[:i]) + [rhs[k]] + list(row[i + 1:])
                                 for k, row in enumerate(rows)]))
    return det, cols


def clear_rows(rows):
    """Clear RatK rows to PolyT rows; returns (cleared, row multipliers).

    Each row is scaled by the monic lcm of its denominators, so verdicts that
    are invariant under row scaling carry over exactly.
    """
    cleared = []
    mults = []
    for row in rows:
        acc = None
        for entry in row:
            d = entry.den
            if acc is None:
                acc = d
            elif d.degree > 0 or acc.degree > 0:
                acc = acc * (d // poly_gcd(acc, d))
        if acc is None:
            raise DomainError("empty row")
        cleared.append([entry.num * (acc // entry.den) for entry in row])
        mults.append(acc)
    return cleared, mults
