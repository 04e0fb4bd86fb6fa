from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from colhopf import qsym
from colhopf.compositions import g_compositions
from colhopf.groups import TRIVIAL, parse_group
from colhopf.qsym import ColouredPolynomial, QSymElement, f_expand

Z2 = parse_group("Z2")


def mono(*vars_):
    d = {}
    for v in vars_:
        d[v] = d.get(v, 0) + 1
    return tuple(sorted(d.items()))


def poly(*monos):
    out = {}
    for m in monos:
        out[m] = out.get(m, 0) + 1
    return ColouredPolynomial(out)


def test_f_expand_trivial():
    x1, x2 = (1, 0), (2, 0)
    assert f_expand(((1, 0),), 2) == poly(mono(x1), mono(x2))
    assert f_expand(((2, 0),), 2) == poly(mono(x1, x1), mono(x1, x2), mono(x2, x2))
    assert f_expand(((1, 0), (1, 0)), 2) == poly(mono(x1, x2))


def test_f_expand_colour_boundary():
    up = f_expand(((1, 0), (1, 1)), 2)  # colour goes up: weak increase allowed
    down = f_expand(((1, 1), (1, 0)), 2)  # colour does not go up: strict increase
    assert mono((1, 0), (1, 1)) in up.terms
    assert mono((1, 1), (1, 0)) not in down.terms
    assert len(up) == 3 and len(down) == 1


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.sampled_from(g_compositions(n, Z2))), st.integers(1, 4))
def test_stability(cg, q):
    assert f_expand(cg, q + 1).drop_variable(q + 1) == f_expand(cg, q)


def test_product_example():
    F = lambda *c: QSymElement.F(tuple((p, 0) for p in c))
    assert F(1) * F(1) == F(2) + F(1, 1)
    lhs = f_expand(((1, 0),), 2) * f_expand(((1, 0),), 2)
    assert lhs == f_expand(((2, 0),), 2) + f_expand(((1, 0), (1, 0)), 2)
    one = QSymElement.F(())
    assert one * F(2, 1) == F(2, 1)


@pytest.mark.parametrize("G,n", [(TRIVIAL, 4), (Z2, 3)], ids=str)
def test_duality(G, n):
    rep = qsym.verify_duality(n, G)
    assert rep["verdict"] == "PASS", rep


def test_coproduct_and_antipode():
    Q = qsym.qsym(TRIVIAL)
    cop = Q.coproduct(QSymElement.F(((2, 0),)))
    assert cop == {((), ((2, 0),)): 1, (((1, 0),), ((1, 0),)): 1, (((2, 0),), ()): 1}
    # S(F_1) = -F_1 and S(F_2) = F_11
    assert Q.antipode(QSymElement.F(((1, 0),))) == QSymElement.F(((1, 0),)) * -1
    assert Q.antipode(QSymElement.F(((2, 0),))) == QSymElement.F(((1, 0), (1, 0)))
    assert qsym.counit(QSymElement.F(())) == 1


def test_zeta_values():
    z = qsym.zeta_q(Z2, 3)
    one, g = (Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))
    assert z.on_basis(()) == one
    assert z.on_basis(((2, 1),)) == g
    assert z.on_basis(((1, 0), (1, 0))) == (0, 0)
    ev = qsym.zeta_eval(Z2, 3)
    assert ev.on_basis(((2, 1),)) == one  # g^2 = 1
    assert ev.on_basis(((1, 0), (2, 1))) == one
    assert ev.on_basis(((1, 1), (1, 0))) == (0, 0)
    with pytest.raises(ValueError):
        z.on_basis(((4, 0),))


def test_display_zeta_is_not_multiplicative_over_z2():
    rep = qsym.check_multiplicative(qsym.zeta_q(Z2, 2))
    assert rep["verdict"] == "FAIL"
    # F_{1^e} F_{1^g} only has two-part terms, which the display sends to 0,
    # while the product of the values is e g = g
    w = rep["witness"]
    assert (w["c"], w["d"]) == ([[1, 0]], [[1, 1]])
    assert w["value_of_product"] == ["0", "0"] and w["product_of_values"] == ["0", "1"]
    assert qsym.check_multiplicative(qsym.zeta_q(TRIVIAL, 4))["verdict"] == "PASS"


@pytest.mark.parametrize("G,make", [(TRIVIAL, qsym.zeta_q), (TRIVIAL, qsym.zeta_eval), (Z2, qsym.zeta_eval)])
def test_character_inverse(G, make):
    z = make(G, 3)
    assert qsym.check_multiplicative(z)["verdict"] == "PASS"
    assert qsym.check_inverse(z)["verdict"] == "PASS"
    bar = qsym.char_bar(z)
    assert bar.on_basis(((1, 0),)) == tuple(-x for x in z.on_basis(((1, 0),)))


def test_odd_subalgebra():
    rep = qsym.odd_subalgebra(qsym.zeta_q(TRIVIAL, 4))
    assert [d["dimension"] for d in rep["degrees"]] == [1, 1, 1, 2, 3]
    rep = qsym.odd_subalgebra(qsym.zeta_eval(Z2, 3))
    assert [d["dimension"] for d in rep["degrees"]] == [1, 2, 4, 10]
    assert rep["verdict"] == "PASS" and len(rep["spanning_sets"][3]) == 10
    with pytest.raises(ValueError):
        qsym.odd_subalgebra(qsym.zeta_q(TRIVIAL, 2), 3)


def test_sum_rule_is_too_large():
    rep = qsym.odd_subalgebra(qsym.zeta_q(TRIVIAL, 4), rule="sum")
    assert rep["verdict"] == "FAIL"
    assert rep["degrees"][3]["dimension"] > rep["degrees"][3]["expected"]


def test_odd_subalgebra_z3():
    # beyond the two groups worked out by hand; dims 1,3,9,30 for n<=3
    G = parse_group("Z3")
    for make in (qsym.zeta_eval, qsym.zeta_q):
        rep = qsym.odd_subalgebra(make(G, 3))
        assert rep["verdict"] == "PASS"
        assert [d["dimension"] for d in rep["degrees"]] == [1, 3, 9, 30]
    assert qsym.check_inverse(qsym.zeta_eval(G, 3))["verdict"] == "PASS"
