"""Fixed input data: the curves and points the verifications run on."""

from fractions import Fraction

from .exact import poly
from .weierstrass import CurvePoint, WeierstrassCurve

# model of X_ns^+(11); the same equation as curve B
XNS_PLUS = WeierstrassCurve(0, -1, 1, -7, 10)

# the four isogeny classes of conductor 121
CURVE_A = WeierstrassCurve(1, 1, 1, -30, -76)
CURVE_B = WeierstrassCurve(0, -1, 1, -7, 10)
CURVE_C = WeierstrassCurve(1, 1, 0, -2, -7)
CURVE_D = WeierstrassCurve(0, -1, 1, -40, -221)

CONDUCTOR_CURVES = {"A": CURVE_A, "B": CURVE_B, "C": CURVE_C, "D": CURVE_D}

GENERATOR_P = CurvePoint(4, -6)
POINT_Q = CurvePoint(Fraction(5, 4), Fraction(7, 8))

# T^2 = -F(X) cuts out X_ns(11) over X_ns^+(11)
F_CUBIC = poly(4, 7, -6, 19)
# (2Y+1)^2 on X_ns^+(11)
G_CUBIC = poly(4, -4, -28, 41)
# right side of Y^2 + Y = X^3 - X^2 - 7X + 10
B_CUBIC = poly(1, -1, -7, 10)

QUADRATIC_FIELD_D = -11

assert G_CUBIC == 4 * B_CUBIC + 1
