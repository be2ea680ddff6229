"""Extended-integer sentinels.

NEG_INF is the degree of the zero polynomial and the log-absolute-value of 0;
INF is the degree ratio of a polynomial iterate (deg_b = 0). Both compare
against ordinary numbers, support max()/min(), and absorb addition, so degree
arithmetic never silently treats the zero polynomial as degree -1.
"""


class _Extreme:
    __slots__ = ("_sign",)

    def __init__(self, sign):
        self._sign = sign

    def __lt__(self, other):
        return self._sign < 0 and other is not self

    def __gt__(self, other):
        return self._sign > 0 and other is not self

    def __le__(self, other):
        return self._sign < 0 or other is self

    def __ge__(self, other):
        return self._sign > 0 or other is self

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash(("ffdyn._Extreme", self._sign))

    def __add__(self, other):
        if isinstance(other, _Extreme) and other._sign != self._sign:
            raise ArithmeticError("NEG_INF + INF is undefined")
        return self

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, _Extreme) and other._sign == self._sign:
            raise ArithmeticError("difference of like infinities is undefined")
        return self

    def __rsub__(self, other):
        return -self + other

    def __neg__(self):
        return INF if self._sign < 0 else NEG_INF

    def __repr__(self):
        return "NEG_INF" if self._sign < 0 else "INF"


NEG_INF = _Extreme(-1)
INF = _Extreme(+1)


def ext_str(v):
    """Render an extended integer for reports: ints stay ints."""
    if v is NEG_INF:
        return "-inf"
    if v is INF:
        return "inf"
    return v
