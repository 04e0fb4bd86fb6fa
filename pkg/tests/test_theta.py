from fractions import Fraction

import pytest

from colhopf import theta
from colhopf.groups import TRIVIAL, parse_group
from colhopf.hopf import HopfElement, class_sum
from colhopf.perms import CPerm

Z2 = parse_group("Z2")


def test_theta_small_trivial():
    assert theta.theta({((1, 0),): Fraction(1)}) == {((1, 0),): 2}
    assert theta.theta_closed(((2, 0),)) == {((2, 0),): 2, ((1, 0), (1, 0)): 2}
    assert theta.theta_basis(((2, 0),)) == theta.theta_closed(((2, 0),))


def test_theta_on_hopf_elements():
    for g in (0, 1):
        x = HopfElement.basis(CPerm((1,), (g,)), Z2)
        assert theta.theta(x) == {((1, g),): 2}
        assert theta.theta_closed(((1, g),), Z2) == {((1, g),): 2}
    assert theta.theta_dual(((1, 1),), Z2) == {((1, 1),): 2}


def test_peak_generators():
    # p̊_(3) = all of S_3 without interior peak: 123, 213, 312, 321
    gen = theta.peak_generator(3, 0)
    S = theta.sigma(TRIVIAL)
    assert S.element(gen) == class_sum("IP", (3,), 3)


@pytest.mark.parametrize("G", [TRIVIAL, Z2], ids=str)
def test_closed_form_and_morphism(G):
    assert theta.check_closed_form(4, G)["verdict"] == "PASS"
    assert theta.check_hopf_morphism(3, G)["verdict"] == "PASS"
    assert theta.check_adjoint(4, G)["verdict"] == "PASS"


def test_scalar_one_fails():
    rep = theta.check_closed_form(2, TRIVIAL, scalar=1)
    assert rep["verdict"] == "FAIL" and rep["witness"]["gcomposition"] == [[1, 0]]
    assert theta.check_hopf_morphism(2, TRIVIAL, scalar=1)["verdict"] == "FAIL"


def test_images():
    rep = theta.image_report(4, Z2)
    assert [d["image_rank"] for d in rep["degrees"]] == [2, 4, 10, 24]
    assert rep["verdict"] == "PASS"
    assert [d["rank"] for d in theta.dual_image_report(4, TRIVIAL)["degrees"]] == [1, 1, 2, 3]


def test_sigma_antipode_matches_permutation_antipode():
    from colhopf.hopf import antipode
    S = theta.sigma(Z2)
    for cg in S.basis(3):
        x = S.element({cg: Fraction(1)})
        assert S.element(S.antipode_basis(cg)) == antipode(x)


def test_pairing():
    assert theta.pairing({((1, 0),): Fraction(3)}, {((1, 0),): Fraction(2), ((2, 0),): Fraction(5)}) == 6
