"""Reduced rational functions in one variable over the rationals.

Just enough polynomial arithmetic for level-dependent coefficients and
symbolic central-charge identities: canonical (reduced, monic
denominator) form makes equality a plain comparison.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Coeffs = tuple[Fraction, ...]


def _trim(cs: Sequence[Fraction]) -> Coeffs:
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _padd(a: Coeffs, b: Coeffs) -> Coeffs:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _pneg(a: Coeffs) -> Coeffs:
    return tuple(-c for c in a)


def _pmul(a: Coeffs, b: Coeffs) -> Coeffs:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _trim(out)


def _pdivmod(a: Coeffs, b: Coeffs) -> tuple[Coeffs, Coeffs]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quo = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    while len(rem) >= len(b) and _trim(rem):
        rem = list(_trim(rem))
        if len(rem) < len(b):
            break
        k = len(rem) - len(b)
        coeff = rem[-1] / b[-1]
        quo[k] = coeff
        for i, cb in enumerate(b):
            rem[k + i] -= coeff * cb
        rem = list(_trim(rem))
    return _trim(quo), _trim(rem)


def _pgcd(a: Coeffs, b: Coeffs) -> Coeffs:
    while b:
        _, r = _pdivmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = tuple(c / lead for c in a)  # monic gcd
    return a


class RationalFunction:
    """num / den with gcd(num, den) = 1 and den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        n = self._coeffs(num)
        d = self._coeffs(den)
        if not d:
            raise ZeroDivisionError("zero denominator")
        if n:
            g = _pgcd(n, d)
            if len(g) > 1:
                n, _ = _pdivmod(n, g)
                d, _ = _pdivmod(d, g)
        else:
            d = (Fraction(1),)
        lead = d[-1]
        if lead != 1:
            n = tuple(c / lead for c in n)
            d = tuple(c / lead for c in d)
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)

    def __setattr__(self, *a):
        raise AttributeError("RationalFunction is immutable")

    @staticmethod
    def _coeffs(value) -> Coeffs:
        if isinstance(value, RationalFunction):
            raise TypeError("nested rational functions; use arithmetic instead")
        if isinstance(value, (int, Fraction)):
            return _trim([Fraction(value)])
        return _trim([Fraction(c) for c in value])

    @staticmethod
    def variable() -> "RationalFunction":
        """The identity function k -> k."""
        return RationalFunction([0, 1])

    @staticmethod
    def constant(c) -> "RationalFunction":
        return RationalFunction(Fraction(c))

    @staticmethod
    def from_poly(coeffs: Sequence[Fraction]) -> "RationalFunction":
        return RationalFunction(list(coeffs))

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _wrap(other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        return RationalFunction(other)

    def _build(self, num: Coeffs, den: Coeffs) -> "RationalFunction":
        return RationalFunction(list(num) or [0], list(den))

    def __add__(self, other):
        o = self._wrap(other)
        return self._build(_padd(_pmul(self.num, o.den), _pmul(o.num, self.den)), _pmul(self.den, o.den))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) + (-self)

    def __neg__(self):
        return self._build(_pneg(self.num), self.den)

    def __mul__(self, other):
        o = self._wrap(other)
        return self._build(_pmul(self.num, o.num), _pmul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._wrap(other)
        if not o.num:
            raise ZeroDivisionError("division by the zero rational function")
        return self._build(_pmul(self.num, o.den), _pmul(self.den, o.num))

    def __rtruediv__(self, other):
        return self._wrap(other) / self

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, RationalFunction)):
            o = self._wrap(other)
            return self.num == o.num and self.den == o.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, k) -> Fraction:
        k = Fraction(k)
        num = sum((c * k**i for i, c in enumerate(self.num)), Fraction(0))
        den = sum((c * k**i for i, c in enumerate(self.den)), Fraction(0))
        if den == 0:
            raise ZeroDivisionError(f"pole at k = {k}")
        return num / den

    def __repr__(self):
        def fmt(cs: Coeffs) -> str:
            if not cs:
                return "0"
            bits = []
            for i, c in enumerate(cs):
                if c == 0:
                    continue
                if i == 0:
                    bits.append(str(c))
                elif i == 1:
                    bits.append(f"{c}*k" if c != 1 else "k")
                else:
                    bits.append(f"{c}*k^{i}" if c != 1 else f"k^{i}")
            return " + ".join(reversed(bits)) or "0"

        if self.den == (Fraction(1),):
            return fmt(self.num)
        return f"({fmt(self.num)})/({fmt(self.den)})"
