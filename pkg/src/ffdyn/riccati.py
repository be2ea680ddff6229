"""Linear consistency systems attached to a rational map.

For phi = F/G with x-derivatives F2, G2 and t-derivatives F1, G1, the
expression

    P = (G*F2 - F*G2)*(e*x^2 + f*x + g) - F*G1 + G*F1
        - a*F^2 - b*F*G - c*G^2

is linear in the six unknowns (a, b, c, e, f, g). Requiring P = 0 and
collecting x-powers yields one linear form per power; the x^(2d+1) form
vanishes identically, and the top seven forms (x^(2d) down to x^(2d-6))
admit closed-form entries as short index sums. Whether the resulting
system is solvable, and what the 6x6 leading block's determinant and
solution look like, is decided here with fraction-free exact linear
algebra over F_q(t).

Unknown order throughout: (a, b, c, e, f, g).
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Tuple

from .errors import DomainError, FieldMismatchError, SingularBlockError
from .linalg import clear_rows, cramer_solve, mat_rank
from .poly import PolyT
from .ratk import RatK


@dataclass(frozen=True)
class LinearForm6:
    """ca*a + cb*b + cc*c + ce*e + cf*f + cg*g + c0 = 0, entries in K."""

    ca: RatK
    cb: RatK
    cc: RatK
    ce: RatK
    cf: RatK
    cg: RatK
    c0: RatK

    def coeffs(self):
        return (self.ca, self.cb, self.cc, self.ce, self.cf, self.cg)

    def evaluate(self, s):
        """Residual of a candidate 6-vector s; zero iff s satisfies the form."""
        if len(s) != 6:
            raise DomainError("expected a 6-vector")
        acc = self.c0
        for c, si in zip(self.coeffs(), s):
            acc = acc + c * si
        return acc

    def is_zero(self):
        return not any(self.coeffs()) and not self.c0


@dataclass(frozen=True)
class RiccatiSystem:
    """Rows n = 0..min(6, 2d); row n is the x^(2d-n) linear form."""

    field: object
    d: int
    rows: Tuple[LinearForm6, ...]

    @property
    def row_count(self):
        return len(self.rows)


@dataclass(frozen=True)
class ConsistencyVerdict:
    status: str  # Inconsistent | UniqueSolution | AffineSolutionSpace
    rank_M: int
    rank_aug: int
    solution: Optional[Tuple[RatK, ...]]
    dimension: Optional[int]


def derived_polys(F):
    """(F1, F2) = (d/dt F, d/dx F)."""
    return F.deriv_t(), F.deriv_x()


def build_symbolic_identity(phi):
    """One LinearForm6 per x-power j = 0..2d+1, by full expansion of P."""
    F, G = phi.num, phi.den
    F1, F2 = derived_polys(F)
    G1, G2 = derived_polys(G)
    W = G * F2 - F * G2
    drift = G * F1 - F * G1
    FF, FG, GG = F * F, F * G, G * G
    lift = RatK.from_poly
    forms = []
    for j in range(2 * phi.d + 2):
        forms.append(LinearForm6(
            ca=lift(-FF.coeff(j)),
            cb=lift(-FG.coeff(j)),
            cc=lift(-GG.coeff(j)),
            ce=lift(W.coeff(j - 2)),
            cf=lift(W.coeff(j - 1)),
            cg=lift(W.coeff(j)),
            c0=lift(drift.coeff(j))))
    return tuple(forms)


def closed_form_rows(ac, bc):
    """Rows n = 0..min(6, 2d) directly from the coefficient sequences.

    ac and bc are ascending, length d+1, PolyT or RatK entries. Row n must
    agree with build_symbolic_identity(...)[2d - n]; the double-sum entries
    avoid expanding any product of x-polynomials.
    """
    if len(ac) != len(bc):
        raise DomainError("coefficient sequences of different lengths")
    if len(ac) < 2:
        raise DomainError("need degree at least 1")
    d = len(ac) - 1
    a = [c if isinstance(c, RatK) else RatK.from_poly(c) for c in ac]
    b = [c if isinstance(c, RatK) else RatK.from_poly(c) for c in bc]
    field = a[0].field
    for c in a + b:
        if c.field != field:
            raise FieldMismatchError("mixed coefficient fields")
    zero = RatK.zero(field)
    ap = [c.derivative() for c in a]
    bp = [c.derivative() for c in b]

    def at(seq, i):
        return seq[i] if 0 <= i <= d else zero

    def v(k):
        acc = zero
        for s in range(k):
            u = k - 1 - s
            if s > u:
                term = at(a, d - u) * at(b, d - s) - at(a, d - s) * at(b, d - u)
                acc = acc + term.smul(s - u)
        return acc

    rows = []
    for n in range(min(6, 2 * d) + 1):
        ca = cb = cc = rn = zero
        for i in range(n + 1):
            ca = ca + at(a, d - i) * at(a, d - n + i)
            cb = cb + at(a, d - i) * at(b, d - n + i)
            cc = cc + at(b, d - i) * at(b, d - n + i)
            rn = rn + at(a, d - i) * at(bp, d - n + i) \
                    - at(b, d - i) * at(ap, d - n + i)
        rows.append(LinearForm6(-ca, -cb, -cc, v(n + 2), v(n + 1), v(n), -rn))
    return tuple(rows)


def build_system_closed_form(phi):
    return RiccatiSystem(phi.field, phi.d, closed_form_rows(phi.ac, phi.bc))


def _augmented(rows):
    return [list(r.coeffs()) + [-r.c0] for r in rows]


def unique_subsystem_solution(system, indices):
    """Solve the 6x6 subsystem given by six row indices.

    Returns (solution 6-tuple, det) where det is the determinant of the
    6x6 coefficient block as an element of K, not of any cleared scaling
    of it. Raises SingularBlockError when the block is singular.
    """
    indices = tuple(indices)
    if len(indices) != 6:
        raise DomainError("exactly six row indices required")
    rows = [system.rows[i] for i in indices]
    cleared, mults = clear_rows(_augmented(rows))
    block = [row[:6] for row in cleared]
    rhs = [row[6] for row in cleared]
    det_c, dets = cramer_solve(block, rhs)
    solution = tuple(RatK(di, det_c) for di in dets)
    denom = PolyT.one(system.field)
    for m in mults:
        denom = denom * m
    return solution, RatK(det_c, denom)


def consistency_check(system):
    """Rank verdict for the full system over K.

    Inconsistent iff the augmented rank exceeds the coefficient rank;
    a unique solution needs coefficient rank 6, and is then read off a
    nonsingular 6x6 block and guaranteed to satisfy every row.
    """
    cleared, _ = clear_rows(_augmented(system.rows))
    rank_m = mat_rank([row[:6] for row in cleared])
    rank_aug = mat_rank(cleared)
    if rank_aug == rank_m + 1:
        return ConsistencyVerdict("Inconsistent", rank_m, rank_aug, None, None)
    if rank_m == 6:
        for indices in combinations(range(system.row_count), 6):
            try:
                solution, _ = unique_subsystem_solution(system, indices)
            except SingularBlockError:
                continue
            return ConsistencyVerdict("UniqueSolution", 6, 6, solution, None)
        raise SingularBlockError("rank 6 without a nonsingular 6x6 block")
    return ConsistencyVerdict(
        "AffineSolutionSpace", rank_m, rank_aug, None, 6 - rank_m)
