"""Rational functions on a Weierstrass curve, written ``a(X) + b(X) Y``.

The function field Q(E) is a quadratic extension of Q(X); products are
reduced with ``Y^2 = -(a1 X + a3) Y + X^3 + a2 X^2 + a4 X + a6``.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, log2

from ..exact import InsufficientPrecision, LaurentSeries, RatFunc, UniPoly
from .curve import CurvePoint, NotOnCurve, WeierstrassCurve

DEFAULT_PRECISION = 48


class CurveFunction:
    __slots__ = ("curve", "a", "b")

    def __init__(self, curve: WeierstrassCurve, a=0, b=0):
        self.curve = curve
        self.a = RatFunc.coerce(a)
        self.b = RatFunc.coerce(b)
        if self.a is NotImplemented or self.b is NotImplemented:
            raise TypeError("coefficients must be rational functions of X")

    @classmethod
    def X(cls, curve: WeierstrassCurve) -> CurveFunction:
        return cls(curve, UniPoly([0, 1]))

    @classmethod
    def Y(cls, curve: WeierstrassCurve) -> CurveFunction:
        return cls(curve, 0, 1)

    def _coerce(self, other) -> CurveFunction:
        if isinstance(other, CurveFunction):
            if other.curve != self.curve:
                raise ValueError("functions live on different curves")
            return other
        if isinstance(other, (int, Fraction, UniPoly, RatFunc)):
            return CurveFunction(self.curve, other)
        return NotImplemented

    def _relation(self) -> tuple[UniPoly, UniPoly]:
        E = self.curve
        p = UniPoly([E.a3, E.a1])
        q = UniPoly([E.a6, E.a4, E.a2, 1])
        return p, q

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.curve, self.a, self.b))

    def __repr__(self) -> str:
        return f"CurveFunction({self.a} + ({self.b})*Y)"

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def in_base_field(self) -> bool:
        """True if the function lies in Q(X), i.e. has no Y part."""
        return self.b.is_zero()

    def __neg__(self) -> CurveFunction:
        return CurveFunction(self.curve, -self.a, -self.b)

    def __add__(self, other) -> CurveFunction:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CurveFunction(self.curve, self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other) -> CurveFunction:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CurveFunction(self.curve, self.a - other.a, self.b - other.b)

    def __rsub__(self, other) -> CurveFunction:
        return -(self - other)

    def __mul__(self, other) -> CurveFunction:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p, q = self._relation()
        bd = self.b * other.b
        return CurveFunction(
            self.curve,
            self.a * other.a + bd * q,
            self.a * other.b + self.b * other.a - bd * p,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int) -> CurveFunction:
        if n < 0:
            return self.inverse() ** (-n)
        result = CurveFunction(self.curve, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def conj(self) -> CurveFunction:
        """Image under the elliptic involution ``Y -> -Y - a1 X - a3``."""
        p, _ = self._relation()
        return CurveFunction(self.curve, self.a - self.b * p, -self.b)

    def norm(self) -> RatFunc:
        p, q = self._relation()
        return self.a * self.a - self.a * self.b * p - self.b * self.b * q

    def trace(self) -> RatFunc:
        p, _ = self._relation()
        return 2 * self.a - self.b * p

    def inverse(self) -> CurveFunction:
        n = self.norm()
        if n.is_zero():
            raise ZeroDivisionError("inverse of the zero function")
        c = self.conj()
        inv_n = n.inverse()
        return CurveFunction(self.curve, c.a * inv_n, c.b * inv_n)

    def __truediv__(self, other) -> CurveFunction:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> CurveFunction:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    # -- evaluation ----------------------------------------------------------

    def expand(self, xs, ys):
        """Substitute values (numbers or Laurent series) for X and Y."""
        return _ratfunc_at(self.a, xs) + _ratfunc_at(self.b, xs) * ys

    def __call__(self, P: CurvePoint, precision: int = DEFAULT_PRECISION) -> Fraction:
        """Exact value at a rational point; raises PoleError at a pole."""
        if not self.curve.contains(P):
            raise NotOnCurve(f"{P} is not on {self.curve}")
        if P.is_infinity:
            return eval_at_infinity(self, precision)
        if self.a.den(P.x) != 0 and self.b.den(P.x) != 0:
            return self.a(P.x) + self.b(P.x) * P.y
        xs, ys = local_expansion(self.curve, P, precision)
        return self.expand(xs, ys).constant_term()

    def substitute(self, x_image: CurveFunction, y_image: CurveFunction) -> CurveFunction:
        """Compose with a map given by the images of X and Y."""
        return self.expand(x_image, y_image)


def _ratfunc_at(r: RatFunc, x):
    if isinstance(x, CurveFunction):
        num = r.num(x)
        return num if r.den == 1 else num / r.den(x)
    num = r.num(x)
    if r.den == 1:
        return num
    return num / r.den(x)


def series_at_infinity(E: WeierstrassCurve, precision: int = DEFAULT_PRECISION):
    """Laurent expansions of X and Y in the parameter ``z = -X/Y`` at infinity.

    Uses ``w = -1/Y`` and iterates
    ``w = z^3 + a1 z w + a2 z^2 w + a3 w^2 + a4 z w^2 + a6 w^3``.
    """
    a1, a2, a3, a4, a6 = E.ainvs
    z = LaurentSeries.variable()
    top = 3 + precision
    w = (z**3).truncate(top)
    for _ in range(precision + 1):
        w2 = w * w
        w = (z**3 + a1 * z * w + a2 * z * z * w + a3 * w2 + a4 * z * w2 + a6 * w2 * w).truncate(top)
    xs = z / w
    ys = -(w.inverse())
    return xs, ys


def local_expansion(E: WeierstrassCurve, P: CurvePoint, precision: int = DEFAULT_PRECISION):
    """Power series for X and Y at a point, in a local parameter there."""
    if P.is_infinity:
        return series_at_infinity(E, precision)
    a1, a2, a3, a4, a6 = E.ainvs
    x0, y0 = P.x, P.y
    dy = 2 * y0 + a1 * x0 + a3
    steps = ceil(log2(max(precision, 2))) + 2
    if dy != 0:
        xs = LaurentSeries(0, [x0, 1], precision)
        ys = LaurentSeries(0, [y0], precision)
        for _ in range(steps):
            g = E.equation(xs, ys)
            ys = ys - g / (2 * ys + a1 * xs + a3)
    else:
        ys = LaurentSeries(0, [y0, 1], precision)
        xs = LaurentSeries(0, [x0], precision)
        for _ in range(steps):
            g = E.equation(xs, ys)
            gx = a1 * ys - (3 * xs * xs + 2 * a2 * xs + a4)
            xs = xs - g / gx
    residual = E.equation(xs, ys)
    if not residual.is_zero():
        raise InsufficientPrecision("local expansion did not converge")
    return xs, ys


def eval_at_infinity(f: CurveFunction, precision: int = DEFAULT_PRECISION) -> Fraction:
    """Value of ``f`` at the point at infinity, via Laurent expansion."""
    xs, ys = series_at_infinity(f.curve, precision)
    return f.expand(xs, ys).constant_term()


def symbolic_translation(E: WeierstrassCurve, P0: CurvePoint) -> tuple[CurveFunction, CurveFunction]:
    """Coordinates of ``(X, Y) + P0`` as functions on ``E``."""
    X = CurveFunction.X(E)
    Y = CurveFunction.Y(E)
    if P0.is_infinity:
        return X, Y
    if not E.contains(P0):
        raise NotOnCurve(f"{P0} is not on {E}")
    a1, a2, a3, _, _ = E.ainvs
    lam = (Y - P0.y) / (X - P0.x)
    nu = P0.y - lam * P0.x
    x3 = lam * lam + a1 * lam - a2 - X - P0.x
    y3 = -(lam + a1) * x3 - nu - a3
    return x3, y3
