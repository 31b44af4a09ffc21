"""The degree-55 j-map on X_ns^+(11) and the checks built on it.

The closed form is a product of powers of small functions ``p(X) + q(X) Y``.
It is expanded once into the canonical ``a(X) + b(X) Y`` shape and cached;
the factor list is kept so values can also be recomputed factor by factor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .data import F_CUBIC, GENERATOR_P, POINT_Q, XNS_PLUS
from .exact import (
    DEFAULT_BOUND,
    FactoredInteger,
    IncompleteFactorization,
    LaurentSeries,
    UniPoly,
    factor_integer,
    is_rational_square,
    is_square_in_quadratic,
    multiplicity,
    poly,
    squarefree_kernel,
)
from .table_data import REFERENCE_TABLE
from .weierstrass import (
    DEFAULT_PRECISION,
    INFINITY,
    CurveFunction,
    CurvePoint,
    local_expansion,
    symbolic_translation,
)
from .weierstrass import eval_at_infinity as _eval_curve_function_at_infinity


def _cf(a, b=0) -> CurveFunction:
    return CurveFunction(XNS_PLUS, a, b)


_Y = _cf(0, 1)


def j_factors() -> tuple[tuple[CurveFunction, int], ...]:
    """The closed form as (factor, exponent) pairs; negative exponents divide."""
    return (
        (_cf(poly(1, 2)), 1),
        (_cf(poly(-1, 4)), 5),
        (_cf(11 * poly(1, 3, -6)), 3),
        (_Y - 5, 3),
        (_cf(poly(1, 4, 1, 22), poly(-3, 1)), 3),
        (_cf(poly(3, -3, -14), -poly(2, 3)), 3),
        (_cf(poly(12, 28, -41, -62), poly(3, 20, 37)), 3),
        (_cf(poly(-7, -15, 62), poly(1, 18)), -2),
        (_cf(poly(4, 2, -21, -6), poly(1, 3, 5)), -11),
    )


@dataclass(frozen=True)
class JFormula:
    value: CurveFunction
    factors: tuple = field(repr=False)

    def __call__(self, P: CurvePoint, precision: int = DEFAULT_PRECISION) -> Fraction:
        if P.is_infinity:
            return eval_factored(self, P, precision)
        return self.value(P, precision)


@lru_cache(maxsize=1)
def build_j() -> JFormula:
    """Expand the closed form into canonical ``a + bY`` shape."""
    num = _cf(1)
    den = _cf(1)
    for f, e in j_factors():
        if e > 0:
            num = num * f**e
        else:
            den = den * f ** (-e)
    if den.norm().is_zero():
        raise ArithmeticError("denominator of j vanishes identically")
    return JFormula(num / den, j_factors())


def j_value(P: CurvePoint, precision: int = DEFAULT_PRECISION) -> Fraction:
    return build_j()(P, precision)


def eval_factored(formula: JFormula, P: CurvePoint, precision: int = DEFAULT_PRECISION) -> Fraction:
    """Value at ``P`` computed factor by factor in a local parameter."""
    xs, ys = local_expansion(formula.value.curve, P, precision)
    acc = LaurentSeries.constant(1)
    for f, e in formula.factors:
        acc = acc * f.expand(xs, ys) ** e
    return acc.constant_term()


def eval_at_infinity(f, precision: int = DEFAULT_PRECISION) -> Fraction:
    """Value at the point at infinity of a JFormula or a CurveFunction."""
    if isinstance(f, JFormula):
        return eval_factored(f, INFINITY, precision)
    return _eval_curve_function_at_infinity(f, precision)


# -- the ramification of X_ns(11) -> X_ns^+(11) --------------------------------


def trace_norm_multiplicity_check() -> dict:
    """Multiplicity of F in the numerators of Trace(j - 1728) and Norm(j - 1728)."""
    g = build_j().value - 1728
    conj = g.conj()
    trace = g + conj
    norm = g * conj
    trace_num = trace.a.num
    norm_num = norm.a.num
    m_trace = multiplicity(F_CUBIC, trace_num)
    m_norm = multiplicity(F_CUBIC, norm_num)
    return {
        "trace_in_base_field": trace.in_base_field(),
        "norm_in_base_field": norm.in_base_field(),
        "trace_matches_formula": trace.a == g.trace(),
        "norm_matches_formula": norm.a == g.norm(),
        "trace_multiplicity": m_trace,
        "norm_multiplicity": m_norm,
        "F_divides_denominators": F_CUBIC.divides(trace.a.den) or F_CUBIC.divides(norm.a.den),
        "ok": (m_trace, m_norm) == (1, 2) and trace.in_base_field() and norm.in_base_field(),
    }


def lambda_determination() -> Fraction:
    """The scalar in ``lambda T^2 = F``, determined up to squares by the CM point Q.

    The points over Q are defined over Q(i), so ``F(Q)/lambda`` must be a
    square in Q(i) but not in Q; with ``F(Q)`` a rational square this
    forces ``lambda = -1`` modulo squares.
    """
    if not XNS_PLUS.contains(POINT_Q):
        raise ArithmeticError("Q is not on the curve")
    if j_value(POINT_Q) != 1728:
        raise ArithmeticError("j(Q) != 1728")
    fq = F_CUBIC(POINT_Q.x)
    if fq != Fraction(121, 4):
        raise ArithmeticError(f"F(Q) = {fq}, expected 121/4")
    if not is_rational_square(fq):
        raise ArithmeticError("F(Q) is not a rational square")
    lam = Fraction(-1)
    t_squared = fq / lam
    if is_rational_square(t_squared) or not is_square_in_quadratic(t_squared, -1):
        raise ArithmeticError("T(Q) would not generate Q(i)")
    return lam


# -- the translation by P ---------------------------------------------------------


def displayed_substitution() -> tuple[CurveFunction, CurveFunction]:
    """The point at which the uncomposed j-function is evaluated."""
    Xc = CurveFunction.X(XNS_PLUS)
    Yc = CurveFunction.Y(XNS_PLUS)
    first = (4 * Xc * Xc + Xc - 2 + 11 * Yc) / (Xc - 4) ** 2
    second = (2 * Xc * Xc + 17 * Xc - 34 + 11 * Yc) * (1 - 3 * Xc) / (Xc - 4) ** 3
    return first, second


def verify_translation_composition() -> dict:
    """Match the displayed substitution with translation by P or by -P."""
    shown = displayed_substitution()
    result = {"matched": None, "first_equal": False, "second_equal": False, "spot_check": False}
    for label, P0 in (("+P", GENERATOR_P), ("-P", XNS_PLUS.neg(GENERATOR_P))):
        u, v = symbolic_translation(XNS_PLUS, P0)
        first_ok, second_ok = u == shown[0], v == shown[1]
        if first_ok and second_ok:
            image = CurvePoint(shown[0](POINT_Q), shown[1](POINT_Q))
            result.update(
                matched=label,
                first_equal=True,
                second_equal=True,
                spot_check=image == XNS_PLUS.add(POINT_Q, P0),
                spot_point=str(image),
            )
            break
    result["ok"] = result["matched"] is not None and result["spot_check"]
    return result


# -- CM data and the table --------------------------------------------------------

# j-invariants of the 13 imaginary quadratic orders of class number one
CM_LOOKUP = {
    -3: 0,
    -4: 1728,
    -7: -3375,
    -8: 8000,
    -11: -32768,
    -12: 54000,
    -16: 287496,
    -19: -884736,
    -27: -12288000,
    -28: 16581375,
    -43: -884736000,
    -67: -147197952000,
    -163: -262537412640768000,
}

_CM_BY_J = {j: d for d, j in CM_LOOKUP.items()}


def cm_discriminant(j: Fraction) -> Optional[int]:
    if j.denominator != 1:
        return None
    return _CM_BY_J.get(j.numerator)


@dataclass(frozen=True)
class CMTableRow:
    n: int
    point: CurvePoint
    j: Fraction
    j_num: FactoredInteger
    j_den: FactoredInteger
    cm_disc: Optional[int]
    k_disc: Optional[int]
    k_verified: bool

    def j_factored(self) -> str:
        """``sign p^e*...`` over ``q^f*...``; ``0`` for j = 0."""
        if self.j == 0:
            return "0"
        num = str(self.j_num)
        if self.j_den.factors or not self.j_den.complete:
            return f"{num}/{self.j_den}"
        return num

    def k_label(self) -> str:
        if self.k_disc is None:
            return ""
        return f"Q(sqrt({self.k_disc}))"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "point": str(self.point),
            "j": str(self.j),
            "j_factored": self.j_factored(),
            "j_numerator": self.j_num.to_json(),
            "j_denominator": self.j_den.to_json(),
            "cm_disc": self.cm_disc,
            "K": self.k_label(),
            "K_disc": self.k_disc,
            "K_verified": self.k_verified,
        }


def resolve_table_orientation() -> CurvePoint:
    """The generator whose multiples carry the table's labels.

    The row labelled P holds j = 54000; whichever of P and -P has that
    j-value is the generator the labels refer to.
    """
    sign, num, _, _, _ = REFERENCE_TABLE[1]
    target = sign * _product(num)
    for G in (GENERATOR_P, XNS_PLUS.neg(GENERATOR_P)):
        if j_value(G) == target:
            return G
    raise ArithmeticError("neither P nor -P has the tabulated j-value")


def _product(factors: dict[int, int]) -> int:
    out = 1
    for p, e in factors.items():
        out *= p**e
    return out


def build_row(n: int, generator: CurvePoint, bound: int = DEFAULT_BOUND, precision: int = DEFAULT_PRECISION) -> CMTableRow:
    P = XNS_PLUS.mul(n, generator)
    formula = build_j()
    j = eval_at_infinity(formula, precision) if P.is_infinity else formula(P, precision)
    num = factor_integer(j.numerator, bound)
    den = factor_integer(j.denominator, bound)
    if not (num.complete and den.complete):
        raise IncompleteFactorization(f"row {n}: factorization beyond bound {bound}")
    cm = cm_discriminant(j)
    if cm is not None:
        k, verified = squarefree_kernel(cm), True
    else:
        k, verified = REFERENCE_TABLE.get(n, (None,) * 5)[4], False
    return CMTableRow(n, P, j, num, den, cm, k, verified)


def build_cm_table(
    ns=range(6, -7, -1),
    bound: int = DEFAULT_BOUND,
    precision: int = DEFAULT_PRECISION,
    generator: Optional[CurvePoint] = None,
) -> list[CMTableRow]:
    G = generator if generator is not None else resolve_table_orientation()
    return [build_row(n, G, bound, precision) for n in ns]


def compare_row(row: CMTableRow) -> list[str]:
    """Differences between a computed row and the reference table (empty if equal)."""
    sign, num, den, cm, k = REFERENCE_TABLE[row.n]
    problems = []
    got_sign = 0 if row.j == 0 else (1 if row.j > 0 else -1)
    if got_sign != sign:
        problems.append(f"sign {got_sign} != {sign}")
    if row.j != 0 and (row.j_num.factors != num or row.j_den.factors != den):
        problems.append(f"factorization {row.j_factored()} differs")
    if row.cm_disc != cm:
        problems.append(f"CM discriminant {row.cm_disc} != {cm}")
    if row.k_disc != k:
        problems.append(f"K discriminant {row.k_disc} != {k}")
    return problems


def symmetry_certificate() -> dict:
    """rho covers the elliptic involution: phi_B o rho = neg o phi_B."""
    from .field import RHO, Xf, Yf, apply_aut

    neg_y = -Yf - XNS_PLUS.a1 * Xf - XNS_PLUS.a3
    covers = apply_aut(RHO, Yf) == neg_y and apply_aut(RHO, Xf) == Xf
    negP = XNS_PLUS.neg(GENERATOR_P)
    return {
        "rho_covers_negation": covers,
        "rho_fixes_X": apply_aut(RHO, Xf) == Xf,
        "neg_P": str(negP),
        "ok": covers and negP == CurvePoint(4, 5),
    }


def j_degree() -> int:
    """Degree of j as a function on X_ns^+(11): the degree of its norm to Q(X)."""
    n = build_j().value.norm()
    return max(n.num.degree, n.den.degree)
