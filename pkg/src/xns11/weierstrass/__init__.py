from .curve import (
    IDENTITY_ISO,
    INFINITY,
    CurveInvariants,
    CurvePoint,
    IsoData,
    NotOnCurve,
    SingularCurve,
    WeierstrassCurve,
    apply_iso,
    is_isomorphic_over_Q,
    iso_map_point,
    twisted_cubic_to_weierstrass,
)
from .finite import BadReduction, count_points_mod_p, is_good_prime
from .functions import (
    DEFAULT_PRECISION,
    CurveFunction,
    eval_at_infinity,
    local_expansion,
    series_at_infinity,
    symbolic_translation,
)
from .modular import modular_poly2_check, phi2, phi2_coefficients

__all__ = [
    "BadReduction",
    "CurveFunction",
    "CurveInvariants",
    "CurvePoint",
    "DEFAULT_PRECISION",
    "IDENTITY_ISO",
    "INFINITY",
    "IsoData",
    "NotOnCurve",
    "SingularCurve",
    "WeierstrassCurve",
    "apply_iso",
    "count_points_mod_p",
    "eval_at_infinity",
    "is_good_prime",
    "is_isomorphic_over_Q",
    "iso_map_point",
    "local_expansion",
    "modular_poly2_check",
    "phi2",
    "phi2_coefficients",
    "series_at_infinity",
    "symbolic_translation",
    "twisted_cubic_to_weierstrass",
]
