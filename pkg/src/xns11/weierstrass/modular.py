"""The classical modular polynomial of level 2."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..exact import UniPoly

# (i, j) -> coefficient of X^i Y^j, upper triangle only (symmetric)
_PHI2_DATA = {
    (3, 0): 1,
    (2, 2): -1,
    (2, 1): 1488,
    (2, 0): -162000,
    (1, 1): 40773375,
    (1, 0): 8748000000,
    (0, 0): -157464000000000,
}


@lru_cache(maxsize=1)
def phi2_coefficients() -> dict[tuple[int, int], int]:
    """Full coefficient table, validated against ``Phi_2(0, Y) = (Y - 54000)^3``.

    Raises RuntimeError if the table fails validation; no isogeny answer is
    given from unvalidated data.
    """
    coeffs = {}
    for (i, j), c in _PHI2_DATA.items():
        coeffs[(i, j)] = c
        coeffs[(j, i)] = c
    at_zero = UniPoly([coeffs.get((0, k), 0) for k in range(4)])
    if at_zero != (UniPoly([-54000, 1])) ** 3:
        raise RuntimeError("modular polynomial table failed its validation identity")
    return coeffs


def phi2(j1, j2) -> Fraction:
    j1, j2 = Fraction(j1), Fraction(j2)
    return sum((c * j1**i * j2**k for (i, k), c in phi2_coefficients().items()), Fraction(0))


def modular_poly2_check(j1, j2) -> bool:
    """True iff curves with j-invariants j1, j2 are 2-isogenous over Q-bar."""
    return phi2(j1, j2) == 0
