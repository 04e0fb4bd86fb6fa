import itertools
import re
from math import comb

import pytest
from hypothesis import given, strategies as st

from colhopf.compositions import (
    comp_subset, compositions, count_lifted_classes, format_gcomposition, g_compositions,
    gcomp_from_blocks, is_peak_comp, lambda_map, parse_composition, parse_gcomposition,
    peak_compositions, phi_set, rainbow, rainbow_composition, subset_comp,
)
from colhopf.groups import TRIVIAL, parse_group
from colhopf.statistics import exterior_peak_comp, image, interior_peak_comp

Z2 = parse_group("Z2")
comps = st.integers(1, 9).flatmap(
    lambda n: st.sets(st.integers(1, n - 1)).map(lambda s, n=n: subset_comp(s, n)) if n > 1 else st.just((1,)))


def test_subset_round_trip():
    assert comp_subset((1, 3, 2)) == {1, 4}
    assert comp_subset((5,)) == frozenset()
    assert subset_comp({1, 4}, 6) == (1, 3, 2)
    for n in range(1, 11):
        for c in compositions(n):
            assert subset_comp(comp_subset(c), n) == c
        for k in range(n):
            for s in itertools.combinations(range(1, n), k):
                assert comp_subset(subset_comp(set(s), n)) == set(s)


def test_peak_compositions_match_images():
    assert is_peak_comp((2, 2, 1))
    assert not is_peak_comp((1, 2))
    assert is_peak_comp((1, 2), "exterior")
    assert exterior_peak_comp((1, 3, 2)) == (2, 1)
    for n in range(1, 7):
        assert is_peak_comp((n,)) and is_peak_comp((n,), "exterior")
        perms = list(itertools.permutations(range(1, n + 1)))
        assert set(peak_compositions(n)) == {interior_peak_comp(s) for s in perms}
        assert set(peak_compositions(n, "exterior")) == {exterior_peak_comp(s) for s in perms}
    assert [len(peak_compositions(n)) for n in range(1, 7)] == [1, 1, 2, 3, 5, 8]


def test_rainbow():
    g, h = 0, 1
    word = (1, 4, 2, 6, 7, 3, 5)
    cols = (g, g, g, h, g, h, h)
    assert rainbow(word, cols) == [((1, 4, 2), g), ((6,), h), ((7,), g), ((3, 5), h)]
    assert rainbow_composition(word, cols) == ((3, g), (1, h), (1, g), (2, h))
    assert rainbow((3, 1, 2), (h, h, h)) == [((3, 1, 2), h)]


def _lambda_oracle(c):
    text = "".join("a" if p == 1 else "b" for p in c)
    out, pos = [], 0
    for m in re.finditer(r"a*b|a+$", text):
        k = len(m.group())
        out.append(sum(c[pos:pos + k]))
        pos += k
    return tuple(out)


def test_lambda_examples():
    assert lambda_map((1, 2, 1, 1, 3, 3)) == (3, 5, 3)
    assert lambda_map((2, 1, 3, 1)) == (2, 4, 1)
    assert lambda_map((2, 1, 1)) == (2, 2)
    assert lambda_map(()) == ()


@given(comps)
def test_lambda_properties(c):
    lam = lambda_map(c)
    assert lam == _lambda_oracle(c)
    assert sum(lam) == sum(c)
    assert is_peak_comp(lam)
    assert lambda_map(lam) == lam


def _alt(i, s):
    return ((i - 1) in s) != (i in s)


def test_phi_sets():
    assert phi_set((1,)) == [(1,)]
    assert sorted(phi_set((2,))) == [(1, 1), (2,)]
    for n in range(1, 7):
        for c in compositions(n):
            fw = {e for e in compositions(n)
                  if all(_alt(i, comp_subset(c)) for i in comp_subset(lambda_map(e)))}
            dual = {e for e in compositions(n)
                    if all(_alt(i, comp_subset(e)) for i in comp_subset(lambda_map(c)))}
            assert set(phi_set(c)) == fw
            assert set(phi_set(c, "dual")) == dual
    with pytest.raises(ValueError):
        phi_set((1,), "sideways")


def test_count_lifted_classes():
    catalan = lambda k: comb(2 * k, k) // (k + 1)
    peaks = lambda k: len(peak_compositions(k))
    assert count_lifted_classes(4, TRIVIAL, catalan) == catalan(4)
    assert count_lifted_classes(0, Z2, catalan) == 1
    assert count_lifted_classes(2, Z2, catalan) == 6
    assert count_lifted_classes(3, Z2, peaks) == 10 == len(image("IP", 3, Z2))
    for n in range(1, 7):
        assert count_lifted_classes(n, Z2, catalan) == comb(2 * n, n)


@pytest.mark.parametrize("G", [TRIVIAL, Z2, parse_group("Z3")], ids=str)
def test_lifted_count_matches_enumeration(G):
    peaks = lambda k: len(peak_compositions(k))
    top = 6 if G.order <= 2 else 5
    for n in range(1, top + 1):
        assert count_lifted_classes(n, G, peaks) == len(image("IP", n, G))


def test_g_compositions():
    for G in (TRIVIAL, Z2, parse_group("Z3")):
        for n in range(1, 6):
            assert len(g_compositions(n, G)) == sum(G.order ** len(c) for c in compositions(n))
    assert gcomp_from_blocks([((2, 1), 1), ((3,), 0)]) == ((2, 1), (1, 1), (3, 0))


def test_text_forms():
    assert parse_composition("2,1,3") == (2, 1, 3)
    assert parse_composition("") == ()
    with pytest.raises(ValueError):
        parse_composition("2,0")
    cg = parse_gcomposition("2^1,1,3^0", Z2)
    assert cg == ((2, 1), (1, 0), (3, 0))
    assert parse_gcomposition(format_gcomposition(cg), Z2) == cg
    with pytest.raises(ValueError):
        parse_gcomposition("1^2", Z2)
