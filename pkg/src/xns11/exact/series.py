"""Truncated Laurent series with exact rational coefficients.

A series is stored as a leading exponent, a tuple of coefficients starting
at that exponent, and an absolute precision: every term of exponent below
``prec`` is known, everything from ``prec`` on is unknown.  ``prec=None``
marks a series that is known exactly (a Laurent polynomial).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional


class InsufficientPrecision(ArithmeticError):
    """The requested coefficient or operation needs more known terms."""


class PoleError(ArithmeticError):
    """A value was requested where the series has a pole."""


def _min_prec(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class LaurentSeries:
    __slots__ = ("exponent", "coeffs", "prec")

    def __init__(self, exponent: int, coeffs, prec: Optional[int] = None):
        cs = [Fraction(c) for c in coeffs]
        if prec is not None:
            cs = cs[: max(prec - exponent, 0)]
        # strip leading zeros
        k = 0
        while k < len(cs) and cs[k] == 0:
            k += 1
        exponent += k
        cs = cs[k:]
        while cs and cs[-1] == 0 and prec is None:
            cs.pop()
        if not cs:
            exponent = prec if prec is not None else 0
        self.exponent = exponent
        self.coeffs = tuple(cs)
        self.prec = prec

    @classmethod
    def variable(cls) -> LaurentSeries:
        return cls(1, [1])

    @classmethod
    def constant(cls, c) -> LaurentSeries:
        return cls(0, [c])

    def is_exact(self) -> bool:
        return self.prec is None

    def is_zero(self) -> bool:
        """True if no nonzero term is known (exact zero or O(z^prec))."""
        return not self.coeffs

    @property
    def relative_precision(self) -> Optional[int]:
        if self.prec is None:
            return None
        return self.prec - self.exponent

    def valuation(self) -> int:
        if not self.coeffs:
            if self.prec is None:
                raise ValueError("valuation of the exact zero series")
            raise InsufficientPrecision(f"series is O(z^{self.prec}); valuation unknown")
        return self.exponent

    def __getitem__(self, n: int) -> Fraction:
        if self.prec is not None and n >= self.prec:
            raise InsufficientPrecision(f"coefficient of z^{n} unknown (precision {self.prec})")
        i = n - self.exponent
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def truncate(self, prec: int) -> LaurentSeries:
        return LaurentSeries(self.exponent, self.coeffs, _min_prec(self.prec, prec))

    def constant_term(self) -> Fraction:
        """Value at z = 0, refusing poles and unknown constants."""
        if self.coeffs and self.exponent < 0:
            raise PoleError(f"pole of order {-self.exponent}")
        return self[0]

    def __repr__(self) -> str:
        terms = [f"{c}*z^{self.exponent + i}" for i, c in enumerate(self.coeffs) if c]
        body = " + ".join(terms) if terms else "0"
        return body + (f" + O(z^{self.prec})" if self.prec is not None else "")

    # -- arithmetic ----------------------------------------------------------

    @staticmethod
    def coerce(other) -> LaurentSeries:
        if isinstance(other, LaurentSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentSeries(0, [other])
        return NotImplemented

    def __neg__(self) -> LaurentSeries:
        return LaurentSeries(self.exponent, [-c for c in self.coeffs], self.prec)

    def __add__(self, other) -> LaurentSeries:
        other = LaurentSeries.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        prec = _min_prec(self.prec, other.prec)
        parts = [s for s in (self, other) if s.coeffs]
        if not parts:
            return LaurentSeries(0, [], prec)
        lo = min(s.exponent for s in parts)
        hi = max(s.exponent + len(s.coeffs) for s in parts)
        if prec is not None:
            hi = min(hi, prec)
        if hi <= lo:
            return LaurentSeries(0, [], prec)
        out = [Fraction(0)] * (hi - lo)
        for s in parts:
            for i, c in enumerate(s.coeffs):
                k = s.exponent + i - lo
                if k >= len(out):
                    break
                out[k] += c
        return LaurentSeries(lo, out, prec)

    __radd__ = __add__

    def __sub__(self, other) -> LaurentSeries:
        other = LaurentSeries.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentSeries:
        other = LaurentSeries.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> LaurentSeries:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return LaurentSeries(0, [])
            return LaurentSeries(self.exponent, [c * other for c in self.coeffs], self.prec)
        other = LaurentSeries.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self, other
        # exact zero annihilates everything
        if (not a.coeffs and a.prec is None) or (not b.coeffs and b.prec is None):
            return LaurentSeries(0, [])
        va = a.exponent  # for an inexact zero this is its precision
        vb = b.exponent
        prec = None
        if a.prec is not None:
            prec = a.prec + vb
        if b.prec is not None:
            prec = _min_prec(prec, b.prec + va)
        if not a.coeffs or not b.coeffs:
            return LaurentSeries(0, [], prec)
        n = len(a.coeffs) + len(b.coeffs) - 1
        if prec is not None:
            n = min(n, prec - va - vb)
        out = [Fraction(0)] * max(n, 0)
        for i, x in enumerate(a.coeffs):
            if i >= n:
                break
            if not x:
                continue
            for j in range(min(len(b.coeffs), n - i)):
                out[i + j] += x * b.coeffs[j]
        return LaurentSeries(va + vb, out, prec)

    __rmul__ = __mul__

    def inverse(self) -> LaurentSeries:
        if not self.coeffs:
            if self.prec is None:
                raise ZeroDivisionError("inverse of the zero series")
            raise InsufficientPrecision("cannot invert a series with no known nonzero term")
        v = self.exponent
        if self.prec is None and len(self.coeffs) == 1:
            return LaurentSeries(-v, [1 / self.coeffs[0]])
        if self.prec is None:
            raise ValueError("inverse of an exact Laurent polynomial needs a precision; truncate first")
        n = self.prec - v
        a = self.coeffs
        inv0 = 1 / a[0]
        out = [inv0]
        for k in range(1, n):
            s = sum(a[i] * out[k - i] for i in range(1, min(k, len(a) - 1) + 1))
            out.append(-s * inv0)
        return LaurentSeries(-v, out, -v + n)

    def __truediv__(self, other) -> LaurentSeries:
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        other = LaurentSeries.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> LaurentSeries:
        other = LaurentSeries.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int) -> LaurentSeries:
        if n < 0:
            return self.inverse() ** (-n)
        result = LaurentSeries(0, [1])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result
