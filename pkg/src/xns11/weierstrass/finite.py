"""Naive point counting over prime fields."""

from __future__ import annotations

from fractions import Fraction

from ..exact import is_prime
from .curve import WeierstrassCurve


class BadReduction(ValueError):
    pass


def _reduce(q: Fraction, p: int) -> int:
    return q.numerator * pow(q.denominator, -1, p) % p


def is_good_prime(E: WeierstrassCurve, p: int) -> bool:
    if any(a.denominator % p == 0 for a in E.ainvs):
        return False
    disc = E.invariants().disc
    return disc.numerator % p != 0


def count_points_mod_p(E: WeierstrassCurve, p: int) -> int:
    """Trace of Frobenius ``a_p = p + 1 - #E(F_p)`` by enumerating all (x, y)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not is_good_prime(E, p):
        raise BadReduction(f"{E} has bad reduction (or a non-integral model) at {p}")
    a1, a2, a3, a4, a6 = (_reduce(a, p) for a in E.ainvs)
    count = 1  # point at infinity
    for x in range(p):
        rhs = (x * x * x + a2 * x * x + a4 * x + a6) % p
        lin = (a1 * x + a3) % p
        for y in range(p):
            if (y * y + lin * y - rhs) % p == 0:
                count += 1
    ap = p + 1 - count
    assert ap * ap <= 4 * p, f"Hasse bound violated: a_{p} = {ap}"
    return ap
