import pytest
from hypothesis import given, strategies as st

from colhopf.groups import ColourGroup, GroupHom, InvalidColourError, TRIVIAL, parse_group

Z2 = parse_group("Z2")
Z2xZ3 = parse_group("Z2xZ3")


def test_group_op_examples():
    assert Z2.op((1,), (1,)) == (0,)
    assert Z2xZ3.op((1, 2), (1, 2)) == (0, 1)
    for G in (TRIVIAL, Z2, Z2xZ3):
        for a in G.enumerate():
            assert G.op(a, G.identity()) == a
            assert G.op(a, G.invert(a)) == G.identity()


def test_order_key_and_enumerate():
    assert [Z2.order_key(a) for a in ((0,), (1,))] == [0, 1]
    assert Z2xZ3.order_key((1, 2)) == 5
    assert TRIVIAL.order_key(()) == 0
    assert Z2.enumerate() == [(0,), (1,)]
    assert TRIVIAL.enumerate() == [()]
    assert parse_group("Z3").enumerate() == [(0,), (1,), (2,)]
    # the rank order is the enumeration order
    assert [Z2xZ3.order_key(a) for a in Z2xZ3.enumerate()] == list(range(6))


def test_parse_group():
    assert parse_group("triv") == TRIVIAL
    assert parse_group("Z2xZ3").moduli == (2, 3)
    assert str(parse_group("Z2xZ2")) == "Z2xZ2"
    with pytest.raises(ValueError):
        parse_group("Q8")


def test_invalid_colours():
    with pytest.raises(InvalidColourError):
        Z2.op((2,), (0,))
    with pytest.raises(InvalidColourError):
        Z2.op((0, 0), (0,))
    with pytest.raises(ValueError):
        ColourGroup((1,))


def test_homomorphisms():
    Z4 = parse_group("Z4")
    f = GroupHom(Z4, Z2, ((1,),))
    assert f((3,)) == (1,)
    assert f(Z4.identity()) == Z2.identity()
    c = GroupHom.collapse(Z2xZ3)
    assert {c(a) for a in Z2xZ3.enumerate()} == {()}
    with pytest.raises(ValueError):
        GroupHom(Z2, parse_group("Z3"), ((1,),))  # order 3 image of an order 2 generator


@given(st.lists(st.integers(2, 4), min_size=1, max_size=3), st.data())
def test_axioms(moduli, data):
    G = ColourGroup(tuple(moduli))
    elems = G.enumerate()
    a, b, c = (data.draw(st.sampled_from(elems)) for _ in range(3))
    assert G.op(G.op(a, b), c) == G.op(a, G.op(b, c))
    assert G.op(a, b) == G.op(b, a)
    i, j = G.order_key(a), G.order_key(b)
    assert G.mul(i, j) == G.order_key(G.op(a, b))
    assert G.element(i) == a
