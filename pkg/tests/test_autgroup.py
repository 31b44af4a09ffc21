import pytest

from xns11.autgroup import (
    BASIS,
    DiffActionMatrix,
    action_table,
    automorphism_group_conclusion,
    differential_action,
    is_faithful,
    is_homomorphism,
    kronecker,
    obstruction_checks,
    roots_of_unity_certificate,
    twist_relation,
    verify_xy_relation,
)
from xns11.data import CURVE_A, CURVE_C
from xns11.field import RHO, W, W_RHO
from xns11.weierstrass import phi2


def test_basis_order():
    assert BASIS == ("B", "D", "A", "C")


@pytest.mark.parametrize(
    "sigma, diag",
    [(W, (1, -1, -1, -1)), (RHO, (-1, -1, -1, 1)), (W_RHO, (-1, 1, 1, -1))],
)
def test_action_diagonals(sigma, diag):
    m = differential_action(sigma)
    assert m.diag == diag and m.is_signed_diagonal()


def test_identity_action():
    assert action_table()["id"] == DiffActionMatrix.diagonal((1, 1, 1, 1))


def test_homomorphism_and_faithful():
    t = action_table()
    assert is_homomorphism(t) and is_faithful(t)


def test_matrix_product():
    a = DiffActionMatrix.diagonal((1, -1, 2, 1))
    assert (a @ a).diag == (1, 1, 4, 1)


def test_xy_relation():
    assert verify_xy_relation() == {"x_is_3X-1": True, "y_is_2Y+1": True, "relation": True, "ok": True}


def test_kronecker():
    assert [kronecker(-11, p) for p in (2, 3, 5, 7, 11, 13)] == [-1, 1, 1, -1, 0, -1]


def test_twist_relation():
    assert twist_relation(CURVE_A, CURVE_C, -11)["ok"]
    assert not twist_relation(CURVE_A, CURVE_C, -1)["ok"]


def test_obstructions():
    obs = obstruction_checks()
    assert obs["ratio_not_square"]
    assert obs["integral"] == {"A": True, "B": True, "C": True, "D": False}
    assert obs["B_has_CM_-11"]
    assert obs["A_C_twist_isogenous"]


def test_roots_of_unity():
    assert roots_of_unity_certificate()["ok"]
    assert not roots_of_unity_certificate(-3)["ok"]
    assert not roots_of_unity_certificate(-1)["ok"]


def test_conclusion_lists_klein_four():
    c = automorphism_group_conclusion()
    assert c["automorphisms"] == ["id", "w", "rho", "w*rho"]
    statuses = {ln["status"] for ln in c["lines"]}
    assert "cited" in statuses and "verified" in statuses
    cited = [ln for ln in c["lines"] if ln["status"] == "cited"]
    assert len(cited) == 2


def test_a_and_c_are_not_two_isogenous():
    # j(A) = -11*131^3 and j(C) = -11^2 are the non-CM rational 11-isogeny pair
    assert CURVE_A.j == -11 * 131**3 and CURVE_C.j == -(11**2)
    assert phi2(CURVE_A.j, CURVE_C.j) != 0
    assert not obstruction_checks()["A_C_2_isogenous"]
