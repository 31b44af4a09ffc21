"""Long Weierstrass curves over Q, the chord-tangent group law and isomorphisms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ..exact import rational_nth_root


class SingularCurve(ValueError):
    pass


class NotOnCurve(ValueError):
    pass


@dataclass(frozen=True)
class CurvePoint:
    """Affine point ``(x, y)``, or the point at infinity when both are None."""

    x: Optional[Fraction] = None
    y: Optional[Fraction] = None

    def __post_init__(self):
        if (self.x is None) != (self.y is None):
            raise ValueError("a point needs both coordinates or neither")
        if self.x is not None:
            object.__setattr__(self, "x", Fraction(self.x))
            object.__setattr__(self, "y", Fraction(self.y))

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self) -> str:
        return "Infinity" if self.is_infinity else f"({self.x}, {self.y})"


INFINITY = CurvePoint()


@dataclass(frozen=True)
class CurveInvariants:
    b2: Fraction
    b4: Fraction
    b6: Fraction
    b8: Fraction
    c4: Fraction
    c6: Fraction
    disc: Fraction
    j: Fraction


@dataclass(frozen=True)
class IsoData:
    """Change of variables ``x = u^2 x' + r``, ``y = u^3 y' + s u^2 x' + t``."""

    u: Fraction
    r: Fraction
    s: Fraction
    t: Fraction

    def __post_init__(self):
        for name in ("u", "r", "s", "t"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.u == 0:
            raise ValueError("u must be nonzero")


IDENTITY_ISO = IsoData(1, 0, 0, 0)


@dataclass(frozen=True)
class WeierstrassCurve:
    """``y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`` with nonzero discriminant."""

    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    a6: Fraction

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self._b_and_disc()[4] == 0:
            raise SingularCurve(f"singular Weierstrass equation {self.ainvs}")

    @property
    def ainvs(self) -> tuple[Fraction, ...]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def __str__(self) -> str:
        return "[" + ", ".join(str(a) for a in self.ainvs) + "]"

    def _b_and_disc(self):
        a1, a2, a3, a4, a6 = self.ainvs
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        disc = -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
        return b2, b4, b6, b8, disc

    def invariants(self) -> CurveInvariants:
        b2, b4, b6, b8, disc = self._b_and_disc()
        c4 = b2 * b2 - 24 * b4
        c6 = -(b2**3) + 36 * b2 * b4 - 216 * b6
        return CurveInvariants(b2, b4, b6, b8, c4, c6, disc, c4**3 / disc)

    @property
    def j(self) -> Fraction:
        return self.invariants().j

    # -- points -----------------------------------------------------------

    def equation(self, x, y):
        """Left side minus right side of the curve equation."""
        a1, a2, a3, a4, a6 = self.ainvs
        return y * y + a1 * x * y + a3 * y - (x * x * x + a2 * x * x + a4 * x + a6)

    def contains(self, P: CurvePoint) -> bool:
        return P.is_infinity or self.equation(P.x, P.y) == 0

    def point(self, x, y) -> CurvePoint:
        P = CurvePoint(x, y)
        if not self.contains(P):
            raise NotOnCurve(f"{P} is not on {self}")
        return P

    def _check(self, *points: CurvePoint) -> None:
        for P in points:
            if not self.contains(P):
                raise NotOnCurve(f"{P} is not on {self}")

    def neg(self, P: CurvePoint) -> CurvePoint:
        self._check(P)
        if P.is_infinity:
            return P
        return CurvePoint(P.x, -P.y - self.a1 * P.x - self.a3)

    def add(self, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
        self._check(P, Q)
        return self._add(P, Q)

    def _add(self, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
        if P.is_infinity:
            return Q
        if Q.is_infinity:
            return P
        a1, a2, a3, a4, a6 = self.ainvs
        if P.x == Q.x:
            if P.y + Q.y + a1 * Q.x + a3 == 0:
                return INFINITY
            lam = (3 * P.x**2 + 2 * a2 * P.x + a4 - a1 * P.y) / (2 * P.y + a1 * P.x + a3)
        else:
            lam = (Q.y - P.y) / (Q.x - P.x)
        nu = P.y - lam * P.x
        x3 = lam * lam + a1 * lam - a2 - P.x - Q.x
        y3 = -(lam + a1) * x3 - nu - a3
        return CurvePoint(x3, y3)

    def mul(self, n: int, P: CurvePoint) -> CurvePoint:
        self._check(P)
        if n < 0:
            return self.mul(-n, self.neg(P))
        result, base = INFINITY, P
        while n:
            if n & 1:
                result = self._add(result, base)
            n >>= 1
            if n:
                base = self._add(base, base)
        return result


def apply_iso(E: WeierstrassCurve, iso: IsoData) -> WeierstrassCurve:
    """The curve obtained from ``E`` by the substitution recorded in ``iso``."""
    a1, a2, a3, a4, a6 = E.ainvs
    u, r, s, t = iso.u, iso.r, iso.s, iso.t
    return WeierstrassCurve(
        (a1 + 2 * s) / u,
        (a2 - s * a1 + 3 * r - s * s) / u**2,
        (a3 + r * a1 + 2 * t) / u**3,
        (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) / u**4,
        (a6 + r * a4 + r * r * a2 + r**3 - t * a3 - t * t - r * t * a1) / u**6,
    )


def iso_map_point(iso: IsoData, P: CurvePoint) -> CurvePoint:
    """Image of a point of the source curve on the target curve."""
    if P.is_infinity:
        return P
    xr = P.x - iso.r
    return CurvePoint(xr / iso.u**2, (P.y - iso.s * xr - iso.t) / iso.u**3)


def _iso_from_u(E1: WeierstrassCurve, E2: WeierstrassCurve, u: Fraction) -> Optional[IsoData]:
    a1, a2, a3, _, _ = E1.ainvs
    s = (u * E2.a1 - a1) / 2
    r = (u * u * E2.a2 - a2 + s * a1 + s * s) / 3
    t = (u**3 * E2.a3 - a3 - r * a1) / 2
    iso = IsoData(u, r, s, t)
    return iso if apply_iso(E1, iso) == E2 else None


def is_isomorphic_over_Q(E1: WeierstrassCurve, E2: WeierstrassCurve) -> Optional[IsoData]:
    """Find a rational change of variables taking ``E1`` to ``E2``, if one exists."""
    i1, i2 = E1.invariants(), E2.invariants()
    if i1.j != i2.j:
        return None
    candidates: list[Fraction] = []
    if i1.c4 != 0 and i1.c6 != 0:
        u2 = (i1.c6 * i2.c4) / (i2.c6 * i1.c4)
        root = rational_nth_root(u2, 2) if u2 > 0 else None
        if root is not None and root**4 == i1.c4 / i2.c4:
            candidates = [root]
    elif i1.c6 == 0:
        root = rational_nth_root(i1.c4 / i2.c4, 4) if i1.c4 / i2.c4 > 0 else None
        if root is not None:
            candidates = [root]
    else:
        root = rational_nth_root(i1.c6 / i2.c6, 6) if i1.c6 / i2.c6 > 0 else None
        if root is not None:
            candidates = [root]
    for u in candidates:
        for cand in (u, -u):
            iso = _iso_from_u(E1, E2, cand)
            if iso is not None:
                return iso
    return None


def twisted_cubic_to_weierstrass(t, A2, A1, A0) -> WeierstrassCurve:
    """Rewrite ``t v^2 = u^3 + A2 u^2 + A1 u + A0`` via ``(u, v) -> (t u, t^2 v)``."""
    t = Fraction(t)
    if t == 0:
        raise ValueError("twist parameter t must be nonzero")
    return WeierstrassCurve(0, t * A2, 0, t * t * A1, t**3 * A0)
