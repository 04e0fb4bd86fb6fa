from fractions import Fraction

import pytest

from colhopf import hopf
from colhopf.groups import GroupHom, TRIVIAL, parse_group
from colhopf.hopf import (
    HopfElement, Tensor, antipode, class_basis, class_sum, coproduct, counit, external_product,
    forgetful, internal_product, mu_g, pushforward, split, split_via_inverse,
)
from colhopf.perms import EMPTY, CPerm, all_cperms, cidentity, plain

Z2, Z3 = parse_group("Z2"), parse_group("Z3")
g, h = 1, 2  # two distinct colours of Z3


def E(*pairs, G=Z3):
    """Basis element from (value, colour) pairs."""
    return HopfElement.basis(CPerm(tuple(v for v, _ in pairs), tuple(c for _, c in pairs)), G)


def C(*pairs):
    return CPerm(tuple(v for v, _ in pairs), tuple(c for _, c in pairs))


def test_product_display():
    x = E((1, g), (2, h)) * E((2, h), (1, g))
    want = [
        [(1, g), (2, h), (4, h), (3, g)], [(1, g), (3, h), (4, h), (2, g)], [(1, g), (4, h), (3, h), (2, g)],
        [(2, g), (3, h), (4, h), (1, g)], [(2, g), (4, h), (3, h), (1, g)], [(3, g), (4, h), (2, h), (1, g)],
    ]
    assert x == HopfElement({C(*w): 1 for w in want}, Z3)
    assert len(x) == 6


def test_coproduct_display():
    a = C((2, g), (3, h), (1, h), (4, g))
    want = Tensor({
        (EMPTY, a): 1,
        (C((1, h)), C((1, g), (2, h), (3, g))): 1,
        (C((2, g), (1, h)), C((1, h), (2, g))): 1,
        (C((2, g), (3, h), (1, h)), C((1, g))): 1,
        (a, EMPTY): 1,
    }, Z3)
    assert coproduct(HopfElement.basis(a, Z3)) == want


def test_units_and_small_cases():
    one = HopfElement.unit(Z3)
    a = E((2, g), (1, h))
    assert one * a == a == a * one
    x = HopfElement.basis(plain((1,)))
    assert x * x == HopfElement({plain((1, 2)): 1, plain((2, 1)): 1})
    assert coproduct(one) == Tensor({(EMPTY, EMPTY): 1}, Z3)
    p = C((1, g))
    assert coproduct(HopfElement.basis(p, Z3)) == Tensor({(EMPTY, p): 1, (p, EMPTY): 1}, Z3)
    assert counit(one) == 1 and counit(a) == 0


def test_antipode():
    assert antipode(HopfElement.unit(Z2)) == HopfElement.unit(Z2)
    p = CPerm((1,), (1,))
    assert antipode(HopfElement.basis(p, Z2)) == -HopfElement.basis(p, Z2)
    for a in all_cperms(2, Z2):
        total = HopfElement.zero(Z2)
        for i in range(3):
            left, right = split(a, i)
            total = total + antipode(HopfElement.basis(left, Z2)) * HopfElement.basis(right, Z2)
        assert total == HopfElement.zero(Z2)


def test_split_agrees_with_inverse_reading():
    for n in range(5):
        for a in all_cperms(n, Z2):
            for i in range(n + 1):
                assert split(a, i) == split_via_inverse(a, i, Z2)


def test_internal_product():
    e = HopfElement.basis(cidentity(3), Z2)
    x = E((2, 1), (3, 0), (1, 1), G=Z2)
    assert internal_product(e, x) == x == internal_product(x, e)
    d11 = class_sum("D", (1, 1), 2)
    assert internal_product(d11, d11) == class_sum("D", (2,), 2)
    with pytest.raises(hopf.HopfError):
        internal_product(e, HopfElement.basis(cidentity(2), Z2))


def test_class_sums():
    assert class_sum("D", (3,), 3) == HopfElement.basis(cidentity(3))
    assert class_sum("IP", (2, 1), 3) == HopfElement({plain((1, 3, 2)): 1, plain((2, 3, 1)): 1})
    assert class_sum("D", (((1,), 1),), 1, Z2) == HopfElement.basis(CPerm((1,), (1,)), Z2)
    with pytest.warns(UserWarning):
        assert not class_sum("D", (9,), 3)


def test_express_and_not_in_span():
    B = class_basis("D")
    x = class_sum("D", (1, 2), 3) * 3 + class_sum("D", (3,), 3)
    got = B.express(x)
    assert sorted(got.values()) == [1, 3]
    with pytest.raises(hopf.NotInSpan) as err:
        B.express(HopfElement.basis(plain((1, 3, 2))))
    assert "element" in err.value.witness


def test_structure_constants_n2():
    T = hopf.structure_constants("D", "internal", 2)
    assert T.rows() == [
        ("2:[1,1]", "2:[1,1]", "2:[2]", 1), ("2:[1,1]", "2:[2]", "2:[1,1]", 1),
        ("2:[2]", "2:[1,1]", "2:[1,1]", 1), ("2:[2]", "2:[2]", "2:[2]", 1)]
    assert T.to_csv().splitlines()[0] == "left,right,out,count"
    C2 = hopf.structure_constants("D", "coproduct", 2)
    assert {(l, r) for l, r, o, _ in C2.rows() if o == "2:[2]"} == {("0:[]", "2:[2]"), ("1:[1]", "1:[1]"), ("2:[2]", "0:[]")}


def test_external_d_generators():
    d = lambda c, G=Z2: class_sum("D", c, 1, G)
    a, b = d((((1,), 0),)), d((((1,), 1),))
    assert a * b == class_sum("D", (((1,), 0), ((1,), 1)), 2, Z2)
    assert a * a == class_sum("D", (((2,), 0),), 2, Z2) + class_sum("D", (((1, 1), 0),), 2, Z2)
    T = hopf.structure_constants("D", "external", (1, 2), Z2)
    assert T.zero_one()


@pytest.mark.parametrize("spec,G,n", [("D", TRIVIAL, 3), ("IP", Z2, 3), ("T", Z2, 3), ("EP", TRIVIAL, 4)], ids=str)
def test_closure_small(spec, G, n):
    for mode in ("internal", "coproduct"):
        if spec == "T" and mode == "internal":
            continue
        rep = hopf.verify_closure(spec, mode, n, G)
        assert rep.verdict, rep.witness


def test_peak_algebra_has_no_unit():
    rep = hopf.verify_closure("IP", "internal", 3, Z2)
    assert rep.verdict and rep.details["has_unit"] is False
    assert hopf.verify_closure("D", "internal", 3, Z2).details["has_unit"] is True


def test_exterior_peaks_not_closed_under_external_product():
    rep = hopf.verify_closure("EP", "external", 3)
    assert not rep.verdict and rep.witness


def test_morphisms():
    a = CPerm((2, 3, 1, 4), (0, 1, 1, 0))
    assert forgetful(HopfElement.basis(a, Z2)) == HopfElement.basis(plain((2, 3, 1, 4)))
    assert mu_g(class_sum("D", (2,), 2), 1, Z2) == class_sum("D", (((2,), 1),), 2, Z2)
    Z4 = parse_group("Z4")
    f = GroupHom(Z4, Z2, ((1,),))
    for n in range(1, 5):
        for c in class_basis("D").values(n):
            x = class_sum("D", c, n)
            for r in range(4):
                assert pushforward(f, mu_g(x, r, Z4)) == mu_g(x, f.rank_map()[r], Z2)
    with pytest.raises(hopf.GroupMismatchError):
        pushforward(f, HopfElement.basis(a, Z2))


def test_group_mismatch():
    with pytest.raises(hopf.GroupMismatchError):
        HopfElement.unit(Z2) + HopfElement.unit(Z3)


def test_json_round_trip():
    x = E((2, g), (1, h)) * Fraction(3, 2) + E((1, h), G=Z3)
    assert HopfElement.from_json(x.to_json(), Z3) == x


def test_free_generation():
    gens = [class_sum("D", (((n,), k),), n, Z2) for n in range(1, 4) for k in range(2)]
    rep = hopf.free_generation_report(gens, 3, {1: 2, 2: 6, 3: 18})
    assert rep["verdict"] == "PASS"
    assert hopf.free_series([1, 3], 6) == [1, 1, 1, 2, 3, 4, 6]


def test_hopf_axioms_small():
    assert hopf.check_hopf_axioms(3, Z2)["verdict"] == "PASS"
