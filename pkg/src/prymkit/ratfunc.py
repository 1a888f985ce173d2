"""Reduced rational functions in one variable over the rationals."""

from __future__ import annotations

from fractions import Fraction

from .rat import rat
from .upoly import UPoly, gcd, inv_mod, valuation


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, UPoly) else UPoly.const(rat(num))
        den = UPoly.one() if den is None else (
            den if isinstance(den, UPoly) else UPoly.const(rat(den))
        )
        if not den:
            raise ZeroDivisionError("zero denominator")
        g = gcd(num, den)
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
        lc = den.lead
        if lc != 1:
            num, den = num * (1 / lc), den * (1 / lc)
        self.num, self.den = num, den

    def is_poly(self) -> bool:
        return self.den.degree == 0

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, UPoly)):
            return self == RatFunc(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = _coerce(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if not other.num:
            raise ZeroDivisionError
        return RatFunc(self.num * other.den, self.den * other.num)

    def __pow__(self, n: int):
        if n < 0:
            return RatFunc(self.den, self.num) ** (-n)
        return RatFunc(self.num**n, self.den**n)

    def __call__(self, v) -> Fraction:
        d = self.den(rat(v))
        if d == 0:
            raise ZeroDivisionError(f"pole at {v}")
        return self.num(rat(v)) / d

    def valuation(self, place: UPoly) -> int:
        """Order of vanishing at the irreducible place (negative at poles)."""
        if not self.num:
            return 1 << 30
        return valuation(self.num, place) - valuation(self.den, place)

    def residue(self, place: UPoly) -> UPoly:
        """Value in Q[x]/(place); requires no pole at the place."""
        if valuation(self.den, place) > 0:
            raise ZeroDivisionError("pole at the place")
        return (self.num % place) * inv_mod(self.den, place) % place

    def __repr__(self):
        if self.is_poly():
            return f"RatFunc({self.num!r})"
        return f"RatFunc({self.num!r} / {self.den!r})"


def _coerce(v) -> RatFunc:
    if isinstance(v, RatFunc):
        return v
    return RatFunc(v)
