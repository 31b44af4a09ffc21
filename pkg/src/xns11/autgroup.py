"""The automorphism group of X_ns(11): action on differentials and obstructions.

A general automorphism is never enumerated.  What is checked here are the
facts the argument rests on, and :func:`automorphism_group_conclusion`
lists them alongside the steps that are quoted theorems rather than
computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .data import CONDUCTOR_CURVES, QUADRATIC_FIELD_D
from .exact import is_square_in_quadratic
from .field import (
    KLEIN_FOUR,
    OMEGA,
    RHO,
    W,
    FieldAut,
    Xf,
    Yf,
    apply_aut,
    compose,
    is_klein_four,
    klein_four_table,
)
from .jmap import CM_LOOKUP
from .exact.integers import primes_up_to
from .weierstrass import WeierstrassCurve, count_points_mod_p, is_good_prime, modular_poly2_check, phi2

BASIS = ("B", "D", "A", "C")

Matrix = tuple[tuple[Fraction, ...], ...]


class NotDiagonal(ArithmeticError):
    pass


@dataclass(frozen=True)
class DiffActionMatrix:
    """Matrix of ``sigma^*`` on regular differentials, basis order B, D, A, C."""

    rows: Matrix

    @classmethod
    def diagonal(cls, entries) -> DiffActionMatrix:
        n = len(entries)
        return cls(tuple(tuple(Fraction(entries[i]) if i == k else Fraction(0) for k in range(n)) for i in range(n)))

    @property
    def diag(self) -> tuple[Fraction, ...]:
        return tuple(self.rows[i][i] for i in range(len(self.rows)))

    def is_signed_diagonal(self) -> bool:
        n = len(self.rows)
        off = all(self.rows[i][k] == 0 for i in range(n) for k in range(n) if i != k)
        return off and all(e in (1, -1) for e in self.diag)

    def __matmul__(self, other: DiffActionMatrix) -> DiffActionMatrix:
        n = len(self.rows)
        return DiffActionMatrix(
            tuple(tuple(sum((self.rows[i][m] * other.rows[m][k] for m in range(n)), Fraction(0)) for k in range(n)) for i in range(n))
        )


def differential_action(sigma: FieldAut) -> DiffActionMatrix:
    """``sigma^*`` on the basis differentials.

    All four automorphisms fix X, hence dX, so ``sigma^*(f dX) = sigma(f) dX``
    and each basis element must map to a constant multiple of itself.
    """
    entries = []
    for name in BASIS:
        f = OMEGA[name].coefficient
        ratio = apply_aut(sigma, f) / f
        if not ratio.is_constant():
            raise NotDiagonal(f"{sigma.name} does not act diagonally on omega_{name}")
        entries.append(ratio.base_value().constant_value())
    return DiffActionMatrix.diagonal(entries)


def action_table() -> dict[str, DiffActionMatrix]:
    return {s.name: differential_action(s) for s in KLEIN_FOUR}


def is_homomorphism(table: dict[str, DiffActionMatrix] | None = None) -> bool:
    table = table or action_table()
    for s in KLEIN_FOUR:
        for t in KLEIN_FOUR:
            st = differential_action(compose(s, t))
            if st != table[s.name] @ table[t.name]:
                return False
    return True


def is_faithful(table: dict[str, DiffActionMatrix] | None = None) -> bool:
    table = table or action_table()
    return len({m.rows for m in table.values()}) == len(table)


def verify_xy_relation() -> dict:
    """``x = omega_D/omega_A``, ``y = omega_C/omega_A`` and ``y^2/4 = x^3/27 - 22x/9 + 847/108``."""
    x = OMEGA["D"] / OMEGA["A"]
    y = OMEGA["C"] / OMEGA["A"]
    x_ok = x == 3 * Xf - 1
    y_ok = y == 2 * Yf + 1
    residual = Fraction(1, 4) * y * y - (Fraction(1, 27) * x**3 - Fraction(22, 9) * x + Fraction(847, 108))
    return {"x_is_3X-1": x_ok, "y_is_2Y+1": y_ok, "relation": residual.is_zero(), "ok": x_ok and y_ok and residual.is_zero()}


def kronecker(d: int, p: int) -> int:
    """Kronecker symbol (d/p) for a prime p."""
    if p == 2:
        if d % 2 == 0:
            return 0
        return 1 if d % 8 in (1, 7) else -1
    r = pow(d % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def twist_relation(E1: WeierstrassCurve, E2: WeierstrassCurve, d: int, p_max: int = 100) -> dict:
    """Check ``a_p(E1) = (d/p) a_p(E2)`` at good primes: E1 is then isogenous
    over Q to the twist of E2 by d, so over Q(sqrt d) to E2 itself."""
    mismatches = []
    for p in primes_up_to(p_max):
        if not (is_good_prime(E1, p) and is_good_prime(E2, p)):
            continue
        if count_points_mod_p(E1, p) != kronecker(d, p) * count_points_mod_p(E2, p):
            mismatches.append(p)
    return {"d": d, "p_max": p_max, "mismatches": mismatches, "ok": not mismatches}


def obstruction_checks() -> dict:
    d = QUADRATIC_FIELD_D
    js = {name: E.j for name, E in CONDUCTOR_CURVES.items()}
    integral = {name: j.denominator == 1 for name, j in js.items()}
    ratio_square = is_square_in_quadratic(Fraction(847, 27), d)
    phi2_value = phi2(js["A"], js["C"])
    checks = {
        "ratio_not_square": not ratio_square,
        "only_D_nonintegral": integral == {"A": True, "B": True, "C": True, "D": False},
        "B_has_CM_-11": js["B"] == CM_LOOKUP[-11],
        "A_C_2_isogenous": modular_poly2_check(js["A"], js["C"]),
    }
    twist = twist_relation(CONDUCTOR_CURVES["A"], CONDUCTOR_CURVES["C"], d)
    return {
        "j": {k: str(v) for k, v in js.items()},
        "integral": integral,
        "phi2_A_C": str(phi2_value),
        # not part of "ok": evidence for an isogeny of some degree over Q(sqrt(-11))
        "A_C_twist_isogenous": twist["ok"],
        **checks,
        "ok": all(checks.values()),
    }


def roots_of_unity_certificate(d: int = QUADRATIC_FIELD_D) -> dict:
    """Q(sqrt d) holds only +-1 unless it contains i or a primitive cube root of unity.

    A root of unity of order n in a quadratic field has phi(n) <= 2, so n is
    1, 2, 3, 4 or 6; orders 4 and 3, 6 need sqrt(-1) and sqrt(-3) respectively.
    """
    has_i = is_square_in_quadratic(-1, d)
    has_zeta3 = is_square_in_quadratic(-3, d)
    return {"contains_i": has_i, "contains_zeta3": has_zeta3, "ok": not has_i and not has_zeta3}


@dataclass(frozen=True)
class CertificateLine:
    step: str
    status: str  # "verified", "failed" or "cited"
    witness: str


def automorphism_group_conclusion() -> dict:
    lines: list[CertificateLine] = []

    def add(step, ok, witness):
        lines.append(CertificateLine(step, "verified" if ok else "failed", witness))

    def cite(step, witness):
        lines.append(CertificateLine(step, "cited", witness))

    cite("every automorphism has finite order and is defined over Q(sqrt(-11))", "endomorphisms of the Jacobian")
    cite("the Jacobian is isogenous to A x B x C x D", "isogeny decomposition theorem")
    obs = obstruction_checks()
    add("A, B, C, D are pairwise distinguished where needed", obs["only_D_nonintegral"] and obs["B_has_CM_-11"],
        f"j = {obs['j']}")
    add("A and C are 2-isogenous", obs["A_C_2_isogenous"], f"Phi_2(j(A), j(C)) = {obs['phi2_A_C']}")
    add("A and C are isogenous over Q(sqrt(-11))", obs["A_C_twist_isogenous"],
        "a_p(A) = (-11/p) a_p(C) for good p <= 100")
    roots = roots_of_unity_certificate()
    add("eigenvalues on omega_B and omega_D are +-1", roots["ok"],
        "-1 and -3 are not squares in Q(sqrt(-11))")
    add("the off-diagonal entry c vanishes", obs["ratio_not_square"], "847/27 is not a square in Q(sqrt(-11))")
    xy = verify_xy_relation()
    add("x = 3X-1 and y = 2Y+1 satisfy the model of B", xy["ok"], "1/4 y^2 = x^3/27 - 22/9 x + 847/108")
    preserves = all(s.preserves_relations() for s in KLEIN_FOUR)
    add("sigma(X) = X, sigma(Y) in {Y, -1-Y}, sigma(T) = +-T are automorphisms", preserves,
        "Y^2 + Y = B(X) and T^2 = -F(X) preserved by id, w, rho, w*rho")
    table = klein_four_table()
    add("composition table is Klein's four group", is_klein_four(table), f"w*rho = {table[('w', 'rho')]}")
    actions = action_table()
    add("the group acts faithfully on differentials", is_faithful(actions) and is_homomorphism(actions),
        "; ".join(f"{k}: diag{tuple(int(e) for e in m.diag)}" for k, m in actions.items()))

    verified = [ln for ln in lines if ln.status != "cited"]
    return {
        "automorphisms": [s.name for s in KLEIN_FOUR],
        "generators": [W.name, RHO.name],
        "lines": [ln.__dict__ for ln in lines],
        "ok": all(ln.status == "verified" for ln in verified),
    }


__all__ = [
    "BASIS",
    "CertificateLine",
    "DiffActionMatrix",
    "NotDiagonal",
    "action_table",
    "automorphism_group_conclusion",
    "differential_action",
    "is_faithful",
    "is_homomorphism",
    "kronecker",
    "obstruction_checks",
    "roots_of_unity_certificate",
    "twist_relation",
    "verify_xy_relation",
]
