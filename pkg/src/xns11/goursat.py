"""The genus 2 curve H and its two degree 3 maps to elliptic curves.

``H: Z^2 = -(4X^3 - 4X^2 - 28X + 41)(4X^3 + 7X^2 - 6X + 19)``.  After
``X = x + 1/3`` and ``Z = (44/3) z`` it takes the shape
``t z^2 = (x^3 + 3a x + 2b)(2d x^3 + 3c x^2 + 1)``, and Goursat's formulas
give maps ``(x, z) -> (u, v)`` of degree 3 onto two genus 1 curves
``t v^2 = cubic(u)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .data import CURVE_A, CURVE_D, F_CUBIC, G_CUBIC
from .exact import RatFunc, UniPoly, cubic_discriminant, poly_gcd
from .field import OMEGA, FieldElem4, Xf, Zf
from .weierstrass import (
    IsoData,
    WeierstrassCurve,
    count_points_mod_p,
    is_good_prime,
    is_isomorphic_over_Q,
    twisted_cubic_to_weierstrass,
)
from .exact.integers import primes_up_to

SHIFT = Fraction(1, 3)
Z_SCALE = Fraction(44, 3)

# constants as printed next to the normal form
PRINTED_CONSTANTS = {
    "a": Fraction(-22, 9),
    "b": Fraction(847, 216),
    "c": Fraction(27, 242),
    "d": Fraction(9, 44),
    "t": Fraction(-3),
}

x = UniPoly([0, 1])


class GoursatError(ArithmeticError):
    pass


@dataclass(frozen=True)
class GoursatParams:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    t: Fraction

    @property
    def delta1(self) -> Fraction:
        return self.a**3 + self.b**2

    @property
    def delta2(self) -> Fraction:
        return self.c**3 + self.d**2

    def as_dict(self) -> dict[str, Fraction]:
        return {"a": self.a, "b": self.b, "c": self.c, "d": self.d, "t": self.t}

    @property
    def cubic1(self) -> UniPoly:
        return x**3 + 3 * self.a * x + 2 * self.b

    @property
    def cubic2(self) -> UniPoly:
        return 2 * self.d * x**3 + 3 * self.c * x**2 + 1

    @property
    def sextic(self) -> UniPoly:
        return self.cubic1 * self.cubic2


@dataclass(frozen=True)
class HyperellipticModel:
    """``t z^2 = rhs(x)``."""

    t: Fraction
    rhs: UniPoly


def h_model() -> HyperellipticModel:
    return HyperellipticModel(Fraction(1), -(G_CUBIC * F_CUBIC))


def _shifted_cubics() -> tuple[UniPoly, UniPoly]:
    shift = UniPoly([SHIFT, 1])
    return G_CUBIC.compose(shift), F_CUBIC.compose(shift)


def substituted_h() -> HyperellipticModel:
    """H after ``X = x + 1/3``, ``Z = (44/3) z``, scaled so the first cubic is monic
    and the second has constant term 1."""
    g1, g2 = _shifted_cubics()
    k1, k2 = g1.lc(), g2[0]
    # (44/3)^2 z^2 = -k1 k2 (g1/k1)(g2/k2)
    t = -(Z_SCALE**2) / (k1 * k2)
    return HyperellipticModel(t, (g1 * (1 / k1)) * (g2 * (1 / k2)))


def substitute_and_match() -> GoursatParams:
    """Read off a, b, c, d, t from the substituted equation of H.

    Raises GoursatError unless the two cubic factors have the shapes
    ``x^3 + 3a x + 2b`` and ``2d x^3 + 3c x^2 + 1`` and
    ``t z^2 = (x^3 + 3a x + 2b)(2d x^3 + 3c x^2 + 1)`` holds identically.
    """
    g1, g2 = _shifted_cubics()
    cub1, cub2 = g1 * (1 / g1.lc()), g2 * (1 / g2[0])
    if cub1[2] != 0 or cub2[1] != 0:
        raise GoursatError("substituted cubics are not in Goursat normal form")
    params = GoursatParams(
        a=cub1[1] / 3, b=cub1[0] / 2, c=cub2[2] / 3, d=cub2[3] / 2, t=substituted_h().t
    )
    z_squared = -(g1 * g2) * (1 / Z_SCALE**2)
    if z_squared * params.t != params.sextic:
        raise GoursatError("t z^2 does not equal the Goursat sextic")
    if params.delta1 == 0 or params.delta2 == 0:
        raise GoursatError("degenerate Goursat discriminant")
    return params


def compare_with_printed(params: GoursatParams) -> dict[str, tuple[Fraction, Fraction, bool]]:
    """Per-constant (derived, printed, equal) triples."""
    derived = params.as_dict()
    return {k: (derived[k], PRINTED_CONSTANTS[k], derived[k] == PRINTED_CONSTANTS[k]) for k in derived}


@dataclass(frozen=True)
class TwistedCubic:
    """``t v^2 = u^3 + A2 u^2 + A1 u + A0``."""

    t: Fraction
    A2: Fraction
    A1: Fraction
    A0: Fraction

    def weierstrass(self) -> WeierstrassCurve:
        return twisted_cubic_to_weierstrass(self.t, self.A2, self.A1, self.A0)


@dataclass(frozen=True)
class TrigonalMap:
    """``(x, z) -> (u_map(x), z * v_cofactor(x))`` from ``t z^2 = sextic``."""

    name: str
    u_map: RatFunc
    v_cofactor: RatFunc
    target: TwistedCubic
    sextic: UniPoly

    def identity_residual(self) -> RatFunc:
        """``t v^2 - cubic(u)`` after ``z^2 -> sextic / t``; zero for a valid map."""
        tc = self.target
        u = self.u_map
        v2 = self.v_cofactor**2 * RatFunc(self.sextic) * (1 / tc.t)
        return tc.t * v2 - (u**3 + tc.A2 * u**2 + tc.A1 * u + tc.A0)

    def is_valid(self) -> bool:
        return self.identity_residual().is_zero()


def build_map_one(p: GoursatParams) -> TrigonalMap:
    a, b, c, d, t, D1 = p.a, p.b, p.c, p.d, p.t, p.delta1
    q = p.cubic1
    u = RatFunc(12 * D1 * (-2 * d * x + c), q)
    v = RatFunc(D1 * (16 * d * x**3 - 12 * c * x**2 - 1), q * q)
    target = TwistedCubic(t, 12 * (2 * a * a * d - b * c), 12 * D1 * (16 * a * d * d + 3 * c * c), 512 * D1 * D1 * d**3)
    return TrigonalMap("map_one", u, v, target, p.sextic)


def build_map_two(p: GoursatParams) -> TrigonalMap:
    a, b, c, d, t, D2 = p.a, p.b, p.c, p.d, p.t, p.delta2
    q = p.cubic2
    u = RatFunc(12 * D2 * x * x * (a * x - 2 * b), q)
    v = RatFunc(D2 * (x**3 + 12 * a * x - 16 * b), q * q)
    target = TwistedCubic(t, 12 * (2 * b * c * c - a * d), 12 * D2 * (16 * b * b * c + 3 * a * a), 512 * D2 * D2 * b**3)
    return TrigonalMap("map_two", u, v, target, p.sextic)


def map_degree(m: TrigonalMap) -> int:
    if m.u_map.is_constant():
        raise ValueError("constant map has no degree")
    return m.u_map.degree()


def pullback_ratio(m: TrigonalMap) -> RatFunc:
    """``(du/dx) / v_cofactor``: the pull-back of ``du/v`` is this times ``dx/z``."""
    return m.u_map.derivative() / m.v_cofactor


def ratio_shape(r: RatFunc) -> tuple[str, Fraction]:
    """Classify a pull-back ratio as ``("constant", k)`` or ``("constant*x", k)``."""
    if r.is_constant() and not r.is_zero():
        return "constant", r.constant_value()
    if r.den == 1 and r.num.degree == 1 and r.num[0] == 0:
        return "constant*x", r.num[1]
    raise GoursatError(f"pull-back ratio {r} has an unexpected shape")


def chain_pullback(m: TrigonalMap) -> FieldElem4:
    """Pull ``du/v`` back to X_ns(11) through phi_H and the substitution; returns the dX coefficient."""
    xX = Xf - SHIFT
    zX = Zf * (1 / Z_SCALE)
    u = _ratfunc_on_field(m.u_map, xX)
    v = zX * _ratfunc_on_field(m.v_cofactor, xX)
    return u.d_dX() / v


def _ratfunc_on_field(r: RatFunc, arg: FieldElem4) -> FieldElem4:
    return r.num(arg) / r.den(arg)


def chain_constants(p: GoursatParams) -> tuple[Fraction, Fraction]:
    """Constants k1, k2 with pull-backs ``k1 * omega_A`` and ``k2 * omega_D``."""
    out = []
    for m, omega in ((build_map_one(p), OMEGA["A"]), (build_map_two(p), OMEGA["D"])):
        q = chain_pullback(m) / omega.coefficient
        if not q.is_constant():
            raise GoursatError(f"pull-back of {m.name} is not a constant multiple of the expected differential")
        out.append(q.base_value().constant_value())
    return out[0], out[1]


def identify_targets(p: GoursatParams) -> tuple[IsoData, IsoData]:
    """Rational isomorphisms from the two targets to A and to D."""
    isos = []
    for m, E in ((build_map_one(p), CURVE_A), (build_map_two(p), CURVE_D)):
        iso = is_isomorphic_over_Q(m.target.weierstrass(), E)
        if iso is None:
            raise GoursatError(f"target of {m.name} is not isomorphic over Q to {E}")
        isos.append(iso)
    return isos[0], isos[1]


def sextic_is_squarefree(p: GoursatParams) -> bool:
    c1, c2 = p.cubic1, p.cubic2
    return cubic_discriminant(c1) != 0 and cubic_discriminant(c2) != 0 and poly_gcd(c1, c2) == 1


def congruence_check(p_max: int = 100, A: WeierstrassCurve = CURVE_A, D: WeierstrassCurve = CURVE_D) -> dict:
    """Compare a_p(A) and a_p(D) modulo 3 for good primes up to p_max."""
    if p_max < 5:
        raise ValueError("p_max must be at least 5")
    rows, skipped, failures = [], [], []
    for p in primes_up_to(p_max):
        if not (is_good_prime(A, p) and is_good_prime(D, p)):
            skipped.append(p)
            continue
        ap, dp = count_points_mod_p(A, p), count_points_mod_p(D, p)
        ok = (ap - dp) % 3 == 0
        rows.append({"p": p, "a_p(A)": ap, "a_p(D)": dp, "congruent": ok})
        if not ok:
            failures.append(p)
    return {"p_max": p_max, "rows": rows, "skipped": skipped, "failures": failures, "ok": not failures}


__all__ = [
    "GoursatError",
    "GoursatParams",
    "HyperellipticModel",
    "PRINTED_CONSTANTS",
    "TrigonalMap",
    "TwistedCubic",
    "build_map_one",
    "build_map_two",
    "chain_constants",
    "chain_pullback",
    "compare_with_printed",
    "congruence_check",
    "h_model",
    "identify_targets",
    "map_degree",
    "pullback_ratio",
    "ratio_shape",
    "sextic_is_squarefree",
    "substitute_and_match",
    "substituted_h",
]
