"""Rational maps on P^1 over K = F_q(t) and lowest-terms orbit iteration.

A map is two coprime x-polynomials with F_q[t] coefficients in a canonical
form: denominators cleared, joint t-content removed, and the first nonzero
coefficient in the scan order (b_d, ..., b_0, a_d, ..., a_0) made monic.
Points are homogeneous pairs [X:Y], so the point at infinity needs no special
cases anywhere.

Orbit steps never compute gcd(X', Y') directly: any common factor of the
homogeneous images divides the map's resultant (Bezout elimination identity),
so the reduction is gcd(gcd(X', Res), Y'), which stays cheap while the
iterates' t-degrees grow like d^n.
"""

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from .errors import (DegenerateMapError, DegreeCapError, DomainError,
                     FieldMismatchError)
from .extnum import INF, NEG_INF
from .poly import PolyT, poly_gcd
from .ratk import RatK
from .resultants import resultant_hom
from .xpoly import XPoly

DEFAULT_DEGREE_CAP = 200000
COMPOSE_DEGREE_CAP = 4096


def degree_cap():
    return int(os.environ.get("FFDYN_DEGREE_CAP", DEFAULT_DEGREE_CAP))


class ProjPointK:
    """A point of P^1(K) as [X:Y] with gcd(X,Y)=1 and leading coordinate monic."""

    __slots__ = ("field", "X", "Y")

    def __init__(self, X, Y):
        if X.field != Y.field:
            raise FieldMismatchError("coordinates over different fields")
        if not X and not Y:
            raise DomainError("[0:0] is not a projective point")
        g = poly_gcd(X, Y)
        if g.degree > 0:
            X, Y = X // g, Y // g
        lead = X.lc() if X else Y.lc()
        if lead != 1:
            inv = X.field.inv(lead)
            X, Y = X.scale(inv), Y.scale(inv)
        object.__setattr__(self, "field", X.field)
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "Y", Y)

    def __setattr__(self, name, value):
        raise AttributeError("ProjPointK is immutable")

    @classmethod
    def _raw(cls, field, X, Y):
        # caller guarantees coprime coordinates with monic lead
        self = object.__new__(cls)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "Y", Y)
        return self

    @classmethod
    def infinity(cls, field):
        return cls(PolyT.one(field), PolyT.zero(field))

    @classmethod
    def from_ratk(cls, r):
        return cls(r.num, r.den)

    def is_infinity(self):
        return not self.Y

    def to_ratk(self):
        if not self.Y:
            raise DomainError("the point at infinity is not a K-element")
        return RatK(self.X, self.Y)

    def __eq__(self, other):
        return (isinstance(other, ProjPointK) and self.field == other.field
                and self.X == other.X and self.Y == other.Y)

    def __hash__(self):
        return hash((self.X, self.Y))

    def __str__(self):
        return "oo" if self.is_infinity() else str(self.to_ratk())

    def __repr__(self):
        return "ProjPointK(%s)" % self


@dataclass(frozen=True)
class OrbitRecord:
    n: int
    deg_a: object  # int or NEG_INF
    deg_b: object
    ratio: object  # Fraction, INF, or None when undefined (0/0 cases)
    in_N_eps: bool


@dataclass(frozen=True)
class OrbitResult:
    points: tuple
    records: tuple
    status: str  # COMPLETE | CAPPED
    first_repeat: Optional[Tuple[int, int]]  # (i, j) with P_i = P_j, i < j

    @property
    def preperiodic(self):
        return self.first_repeat is not None


def _degree_ratio(deg_a, deg_b):
    if deg_b is NEG_INF:
        return INF  # the point at infinity
    if deg_a is NEG_INF:
        return None
    if deg_b == 0:
        return INF if deg_a > 0 else None
    return Fraction(deg_a, deg_b)


def _in_N(deg_a, deg_b, epsilon):
    # |a_n| >= |b_n|^(2+eps) on the log_q scale
    if deg_b is NEG_INF:
        return True
    if deg_a is NEG_INF:
        return False
    return Fraction(deg_a) >= (2 + Fraction(epsilon)) * deg_b


def _record(n, P, epsilon):
    da, db = P.X.degree, P.Y.degree
    return OrbitRecord(n, da, db, _degree_ratio(da, db), _in_N(da, db, epsilon))


class RationalMap:
    """phi(x) = F(x)/G(x) of exact degree d, coefficients ascending in x."""

    __slots__ = ("field", "d", "ac", "bc", "_res")

    def __init__(self, field, ac, bc, d, res):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "ac", tuple(ac))
        object.__setattr__(self, "bc", tuple(bc))
        object.__setattr__(self, "_res", res)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMap is immutable")

    @property
    def num(self):
        return XPoly(self.field, self.ac)

    @property
    def den(self):
        return XPoly(self.field, self.bc)

    @property
    def res(self):
        """Homogeneous resultant Res_x(F, G); nonzero by construction."""
        if self._res is None:
            r = resultant_hom(list(self.ac), list(self.bc), self.d)
            if not r:
                raise DegenerateMapError("resultant vanished on a built map")
            object.__setattr__(self, "_res", r)
        return self._res

    def __eq__(self, other):
        return (isinstance(other, RationalMap) and self.field == other.field
                and self.d == other.d and self.ac == other.ac
                and self.bc == other.bc)

    def __hash__(self):
        return hash((self.field, self.d, self.ac, self.bc))

    def __repr__(self):
        return "RationalMap((%s)/(%s))" % (self.num, self.den)


def _canonicalize(field, ac, bc, d, res):
    if all(not c for c in ac) or all(not c for c in bc):
        raise DegenerateMapError("numerator or denominator is identically zero")
    # joint t-content
    g = None
    for c in list(ac) + list(bc):
        if c:
            g = c if g is None else poly_gcd(g, c)
            if g.degree == 0:
                break
    if g is not None and g.degree > 0:
        ac = [c // g for c in ac]
        bc = [c // g for c in bc]
        res = None  # scaling the coefficients rescales the cached resultant
    # canonical scaling: first nonzero of (b_d ... b_0, a_d ... a_0) monic
    lead = None
    for c in list(reversed(bc)) + list(reversed(ac)):
        if c:
            lead = c.lc()
            break
    if lead != 1:
        inv = field.inv(lead)
        ac = [c.scale(inv) for c in ac]
        bc = [c.scale(inv) for c in bc]
        res = None
    return RationalMap(field, list(ac), list(bc), d, res)


def create_map(a_seq, b_seq, d=None):
    """Build a canonical RationalMap from RatK or PolyT coefficients.

    a_seq and b_seq are ascending in x. Degenerate input (common factor or
    joint degree drop, detected by the homogeneous resultant) is an error.
    """
    a_seq, b_seq = list(a_seq), list(b_seq)
    if not a_seq or not b_seq:
        raise DomainError("empty coefficient sequence")
    if d is None:
        d = max(len(a_seq), len(b_seq)) - 1
    if d < 1:
        raise DomainError("map degree must be at least 1")
    if len(a_seq) > d + 1 or len(b_seq) > d + 1:
        raise DomainError("more than d+1 coefficients")
    first = a_seq[0] if a_seq else b_seq[0]
    field = first.field
    # clear denominators with one common multiplier so F/G is unchanged
    entries = []
    for c in a_seq + b_seq:
        if isinstance(c, PolyT):
            c = RatK.from_poly(c)
        if c.field != field:
            raise FieldMismatchError("mixed coefficient fields")
        entries.append(c)
    lcm = PolyT.one(field)
    for c in entries:
        if c.den.degree > 0:
            lcm = lcm * (c.den // poly_gcd(lcm, c.den))
    cleared = [c.num * (lcm // c.den) for c in entries]
    ac = cleared[: len(a_seq)] + [PolyT.zero(field)] * (d + 1 - len(a_seq))
    bc = cleared[len(a_seq):] + [PolyT.zero(field)] * (d + 1 - len(b_seq))
    phi = _canonicalize(field, ac, bc, d, None)
    r = resultant_hom(list(phi.ac), list(phi.bc), d)
    if not r:
        raise DegenerateMapError(
            "degenerate map: common factor or joint degree drop")
    return RationalMap(phi.field, list(phi.ac), list(phi.bc), d, r)


def evaluate(phi, P):
    """phi(P) in lowest terms, homogeneously (infinity needs no special case)."""
    if phi.field != P.field:
        raise FieldMismatchError("map and point over different fields")
    Xp = phi.num.evaluate_hom(P.X, P.Y, phi.d)
    Yp = phi.den.evaluate_hom(P.X, P.Y, phi.d)
    # gcd(Xp, Yp) divides Res, so reduce against Res first
    g = poly_gcd(Xp, phi.res) if Xp else phi.res.monic()
    g = poly_gcd(g, Yp) if Yp else g
    if g.degree > 0:
        Xp, Yp = Xp // g, Yp // g
    lead = Xp.lc() if Xp else Yp.lc()
    if lead != 1:
        inv = phi.field.inv(lead)
        Xp, Yp = Xp.scale(inv), Yp.scale(inv)
    return ProjPointK._raw(phi.field, Xp, Yp)


def orbit(phi, alpha, n_max, cap=None, epsilon=Fraction(1, 5)):
    """Iterates alpha, phi(alpha), ..., phi^n_max(alpha) with degree records.

    Stops with status CAPPED before appending an iterate whose coordinate
    degrees would exceed the cap (FFDYN_DEGREE_CAP, default 200000).
    """
    if n_max < 1:
        raise DomainError("n_max must be at least 1")
    limit = degree_cap() if cap is None else cap
    points = [alpha]
    records = [_record(0, alpha, epsilon)]
    seen = {alpha: 0}
    first_repeat = None
    status = "COMPLETE"
    P = alpha
    for n in range(1, n_max + 1):
        Q = evaluate(phi, P)
        if max(Q.X.degree, Q.Y.degree) > limit:
            status = "CAPPED"
            break
        points.append(Q)
        records.append(_record(n, Q, epsilon))
        if first_repeat is None:
            if Q in seen:
                first_repeat = (seen[Q], n)
            else:
                seen[Q] = n
        P = Q
    return OrbitResult(tuple(points), tuple(records), status, first_repeat)


def compose(phi, psi, cap=COMPOSE_DEGREE_CAP):
    """phi composed after psi, of degree deg(phi) * deg(psi)."""
    if phi.field != psi.field:
        raise FieldMismatchError("maps over different fields")
    d = phi.d * psi.d
    if d > cap:
        raise DegreeCapError("composition degree %d exceeds cap %d" % (d, cap))
    F, G = psi.num, psi.den
    gpow = [XPoly.one(phi.field)]
    fpow = [XPoly.one(phi.field)]
    for _ in range(phi.d):
        gpow.append(gpow[-1] * G)
        fpow.append(fpow[-1] * F)
    anew = XPoly.zero(phi.field)
    bnew = XPoly.zero(phi.field)
    for i in range(phi.d + 1):
        term = fpow[i] * gpow[phi.d - i]
        if phi.ac[i]:
            anew = anew + term.scale(phi.ac[i])
        if phi.bc[i]:
            bnew = bnew + term.scale(phi.bc[i])
    pad = lambda xs: list(xs) + [PolyT.zero(phi.field)] * (d + 1 - len(xs))
    return _canonicalize(phi.field, pad(anew.coeffs), pad(bnew.coeffs), d, None)


def pi_transform(phi):
    """pi(x) = 1/phi(1/x): reverse both coefficient sequences and swap."""
    ac = list(reversed(phi.bc))
    bc = list(reversed(phi.ac))
    out = _canonicalize(phi.field, ac, bc, phi.d, None)
    r = resultant_hom(list(out.ac), list(out.bc), out.d)
    if not r:
        raise DegenerateMapError("pi-transform degenerated; input was invalid")
    return RationalMap(out.field, list(out.ac), list(out.bc), out.d, r)


@dataclass(frozen=True)
class MapDiagnostics:
    res: PolyT
    separable: bool
    wronskian: XPoly
    infinity_critical: bool
    infinity_ramification: int
    infinity_fixed_or_periodic_hint: bool


def map_diagnostics(phi, hint_bound=6):
    """Separature, wronskian, and the behaviour of the point at infinity.

    The wronskian numerator W = F2*G - F*G2 (x-derivatives) locates affine
    critical points; infinity is checked through the reversed-coefficient
    map, whose ramification at 0 equals phi's at infinity.
    """
    F, G = phi.num, phi.den
    W = F.deriv_x() * G - F * G.deriv_x()
    separable = bool(W)
    # ramification index of the conjugated map at 0
    revF = list(reversed(phi.ac))
    revG = list(reversed(phi.bc))
    ad = phi.ac[phi.d]
    bd = phi.bc[phi.d]
    if ad:
        probe = [ad * rg - bd * rf for rf, rg in zip(revF, revG)]
    else:
        probe = revF
    e_inf = next((i for i, c in enumerate(probe) if c), None)
    if e_inf is None:
        raise DegenerateMapError("map is constant; not a degree-d map")
    hint = False
    P = ProjPointK.infinity(phi.field)
    for _ in range(hint_bound):
        P = evaluate(phi, P)
        if P.is_infinity():
            hint = True
            break
    return MapDiagnostics(phi.res, separable, W, e_inf >= 2, e_inf, hint)


def chordal_distance(P, Q):
    """log_q of the chordal metric; always <= 0, NEG_INF iff P = Q."""
    if P.field != Q.field:
        raise FieldMismatchError("points over different fields")
    cross = P.X * Q.Y - Q.X * P.Y
    return (cross.degree - max(P.X.degree, P.Y.degree)
            - max(Q.X.degree, Q.Y.degree))