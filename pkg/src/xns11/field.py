"""The function field Q(X, Y, T) of X_ns(11).

Elements are ``c00 + c10 Y + c01 T + c11 YT`` with coefficients in Q(X),
reduced by ``Y^2 = -Y + X^3 - X^2 - 7X + 10`` and
``T^2 = -(4X^3 + 7X^2 - 6X + 19)``.  Internally an element is a pair
``p0 + p1 T`` of functions on X_ns^+(11).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .data import B_CUBIC, CURVE_C, F_CUBIC, G_CUBIC, XNS_PLUS
from .exact import RatFunc, UniPoly, cubic_discriminant, poly_gcd
from .weierstrass import (
    CurveFunction,
    IsoData,
    WeierstrassCurve,
    is_isomorphic_over_Q,
    twisted_cubic_to_weierstrass,
)

_Scalar = (int, Fraction, UniPoly, RatFunc)


class FieldElem4:
    __slots__ = ("p0", "p1")

    def __init__(self, p0=0, p1=0):
        self.p0 = p0 if isinstance(p0, CurveFunction) else CurveFunction(XNS_PLUS, p0)
        self.p1 = p1 if isinstance(p1, CurveFunction) else CurveFunction(XNS_PLUS, p1)

    @classmethod
    def from_coeffs(cls, c00=0, c10=0, c01=0, c11=0) -> FieldElem4:
        return cls(CurveFunction(XNS_PLUS, c00, c10), CurveFunction(XNS_PLUS, c01, c11))

    @property
    def coeffs(self) -> tuple[RatFunc, RatFunc, RatFunc, RatFunc]:
        """``(c00, c10, c01, c11)``."""
        return (self.p0.a, self.p0.b, self.p1.a, self.p1.b)

    @staticmethod
    def coerce(other) -> FieldElem4:
        if isinstance(other, FieldElem4):
            return other
        if isinstance(other, CurveFunction):
            return FieldElem4(other)
        if isinstance(other, _Scalar):
            return FieldElem4(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        other = FieldElem4.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.p0 == other.p0 and self.p1 == other.p1

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        c00, c10, c01, c11 = self.coeffs
        return f"FieldElem4({c00} + ({c10})*Y + ({c01})*T + ({c11})*YT)"

    def is_zero(self) -> bool:
        return self.p0.is_zero() and self.p1.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def in_base_field(self) -> bool:
        c00, c10, c01, c11 = self.coeffs
        return c10.is_zero() and c01.is_zero() and c11.is_zero()

    def base_value(self) -> RatFunc:
        if not self.in_base_field():
            raise ValueError(f"{self} is not in Q(X)")
        return self.coeffs[0]

    def __neg__(self) -> FieldElem4:
        return FieldElem4(-self.p0, -self.p1)

    def __add__(self, other) -> FieldElem4:
        other = FieldElem4.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElem4(self.p0 + other.p0, self.p1 + other.p1)

    __radd__ = __add__

    def __sub__(self, other) -> FieldElem4:
        other = FieldElem4.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElem4(self.p0 - other.p0, self.p1 - other.p1)

    def __rsub__(self, other) -> FieldElem4:
        return -(self - other)

    def __mul__(self, other) -> FieldElem4:
        other = FieldElem4.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        t2 = -F_CUBIC
        return FieldElem4(
            self.p0 * other.p0 + self.p1 * other.p1 * t2,
            self.p0 * other.p1 + self.p1 * other.p0,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int) -> FieldElem4:
        if n < 0:
            return self.inverse() ** (-n)
        result, base = FieldElem4(1), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def conjugates(self) -> tuple[FieldElem4, FieldElem4, FieldElem4]:
        """Images under w, rho and w*rho."""
        return tuple(apply_aut(s, self) for s in (W, RHO, W_RHO))

    def norm(self) -> RatFunc:
        """Product of the four Klein-four conjugates; lies in Q(X)."""
        a, b, c = self.conjugates()
        return (self * a * b * c).base_value()

    def inverse(self) -> FieldElem4:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(X, Y, T)")
        a, b, c = self.conjugates()
        cof = a * b * c
        n = (self * cof).base_value()
        return cof * n.inverse()

    def __truediv__(self, other) -> FieldElem4:
        other = FieldElem4.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> FieldElem4:
        other = FieldElem4.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def d_dX(self) -> FieldElem4:
        """Derivative with respect to X, using the derivatives of both relations."""
        c00, c10, c01, c11 = self.coeffs
        dY = FieldElem4(B_CUBIC.derivative()) / (2 * Yf + 1)
        dT = FieldElem4(-F_CUBIC.derivative()) / (2 * Tf)
        return (
            FieldElem4(c00.derivative())
            + c10.derivative() * Yf
            + c10 * dY
            + c01.derivative() * Tf
            + c01 * dT
            + c11.derivative() * Yf * Tf
            + c11 * (dY * Tf + Yf * dT)
        )

    def is_constant(self) -> bool:
        return self.in_base_field() and self.coeffs[0].is_constant()


Xf = FieldElem4(UniPoly([0, 1]))
Yf = FieldElem4.from_coeffs(0, 1)
Tf = FieldElem4.from_coeffs(0, 0, 1)
Zf = (2 * Yf + 1) * Tf


# -- automorphisms -------------------------------------------------------------


class NotAnAutomorphism(ValueError):
    pass


@dataclass(frozen=True)
class FieldAut:
    """Automorphism fixing X, given by the images of Y and T."""

    name: str
    y_image: FieldElem4
    t_image: FieldElem4

    def preserves_relations(self) -> bool:
        y, t = self.y_image, self.t_image
        return (y * y + y - FieldElem4(B_CUBIC)).is_zero() and (t * t + FieldElem4(F_CUBIC)).is_zero()

    def __call__(self, f: FieldElem4) -> FieldElem4:
        return apply_aut(self, f)

    def same_action(self, other: FieldAut) -> bool:
        return self.y_image == other.y_image and self.t_image == other.t_image


def apply_aut(sigma: FieldAut, f: FieldElem4) -> FieldElem4:
    c00, c10, c01, c11 = f.coeffs
    y, t = sigma.y_image, sigma.t_image
    return FieldElem4(c00) + c10 * y + c01 * t + c11 * (y * t)


def compose(sigma: FieldAut, tau: FieldAut, name: str = "") -> FieldAut:
    """``sigma o tau``: apply tau first."""
    return FieldAut(name or f"{sigma.name}*{tau.name}", apply_aut(sigma, tau.y_image), apply_aut(sigma, tau.t_image))


def checked(sigma: FieldAut) -> FieldAut:
    if not sigma.preserves_relations():
        raise NotAnAutomorphism(f"{sigma.name} does not preserve the defining relations")
    return sigma


ID = FieldAut("id", Yf, Tf)
W = FieldAut("w", Yf, -Tf)
RHO = FieldAut("rho", -1 - Yf, Tf)
W_RHO = FieldAut("w*rho", -1 - Yf, -Tf)
KLEIN_FOUR = (ID, W, RHO, W_RHO)


def identify(sigma: FieldAut, group=KLEIN_FOUR) -> str:
    for g in group:
        if g.same_action(sigma):
            return g.name
    raise KeyError(f"{sigma.name} is not in the group")


def klein_four_table() -> dict[tuple[str, str], str]:
    """Composition table ``(a, b) -> a o b`` on {id, w, rho, w*rho}."""
    return {(a.name, b.name): identify(compose(a, b)) for a in KLEIN_FOUR for b in KLEIN_FOUR}


def is_klein_four(table: dict[tuple[str, str], str]) -> bool:
    names = [g.name for g in KLEIN_FOUR]
    abelian = all(table[(a, b)] == table[(b, a)] for a in names for b in names)
    exponent_two = all(table[(a, a)] == "id" for a in names)
    identity = all(table[("id", a)] == a for a in names)
    closed = all(v in names for v in table.values())
    return abelian and exponent_two and identity and closed and len(set(names)) == 4


# -- differentials and quotient maps -------------------------------------------


@dataclass(frozen=True)
class DifferentialRep:
    """The differential ``coefficient * dX``."""

    coefficient: FieldElem4

    def __truediv__(self, other: DifferentialRep) -> FieldElem4:
        return self.coefficient / other.coefficient


OMEGA = {
    "A": DifferentialRep(1 / Zf),
    "B": DifferentialRep(1 / (2 * Yf + 1)),
    "C": DifferentialRep(1 / Tf),
    "D": DifferentialRep((3 * Xf - 1) / Zf),
}


@dataclass(frozen=True)
class QuotientMap:
    name: str
    target: str
    images: tuple[FieldElem4, FieldElem4]
    equation: Callable[[FieldElem4, FieldElem4], FieldElem4]

    def images_on_target(self) -> bool:
        return self.equation(*self.images).is_zero()


QUOTIENT_MAPS = {
    "phi_B": QuotientMap(
        "phi_B", "B: y^2 + y = x^3 - x^2 - 7x + 10", (Xf, Yf), lambda x, y: y * y + y - B_CUBIC(x)
    ),
    "phi_H": QuotientMap(
        "phi_H",
        "H: z^2 = -(4x^3 - 4x^2 - 28x + 41)(4x^3 + 7x^2 - 6x + 19)",
        (Xf, Zf),
        lambda x, z: z * z + G_CUBIC(x) * F_CUBIC(x),
    ),
    "phi_C": QuotientMap(
        "phi_C", "t^2 = -(4x^3 + 7x^2 - 6x + 19)", (Xf, Tf), lambda x, t: t * t + F_CUBIC(x)
    ),
}


def pullback(q: QuotientMap, g: Callable[[FieldElem4, FieldElem4], FieldElem4]) -> DifferentialRep:
    """Pull back ``g(x, y) dx`` along ``q``."""
    if not q.images_on_target():
        raise ValueError(f"{q.name} does not land on its target")
    x_img, y_img = q.images
    coeff = g(x_img, y_img)
    if coeff.is_zero():
        raise ValueError("zero differential")
    return DifferentialRep(coeff * x_img.d_dX())


def c_model() -> tuple[WeierstrassCurve, IsoData | None]:
    """The curve ``T^2 = -F(X)`` in Weierstrass form and an isomorphism to C.

    With ``u = 4X``, ``v = 4T`` it reads ``-v^2 = u^3 + 7u^2 - 24u + 304``.
    """
    E = twisted_cubic_to_weierstrass(-1, 7, -24, 304)
    return E, is_isomorphic_over_Q(E, CURVE_C)


def ramification_certificate() -> dict:
    """Six simple branch points of X_ns(11) -> X_ns^+(11), and the genus."""
    g = poly_gcd(F_CUBIC, G_CUBIC)
    disc = cubic_discriminant(F_CUBIC)
    coprime = g == 1
    separable = disc != 0
    branch_points = 2 * F_CUBIC.degree if coprime and separable else None
    genus = None
    if branch_points is not None:
        # Riemann-Hurwitz for a double cover of a genus 1 curve
        genus = (2 * (2 * 1 - 2) + branch_points) // 2 + 1
    return {
        "gcd": str(g),
        "disc_F": disc,
        "coprime": coprime,
        "separable": separable,
        "branch_points": branch_points,
        "genus": genus,
        "ok": coprime and separable and genus == 4,
    }


__all__ = [
    "DifferentialRep",
    "FieldAut",
    "FieldElem4",
    "ID",
    "KLEIN_FOUR",
    "NotAnAutomorphism",
    "OMEGA",
    "QUOTIENT_MAPS",
    "QuotientMap",
    "RHO",
    "Tf",
    "W",
    "W_RHO",
    "Xf",
    "Yf",
    "Zf",
    "apply_aut",
    "c_model",
    "checked",
    "compose",
    "identify",
    "is_klein_four",
    "klein_four_table",
    "pullback",
    "ramification_certificate",
]
