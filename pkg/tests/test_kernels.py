import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from colhopf import kernels
from colhopf.groups import TRIVIAL, parse_group
from colhopf.perms import all_cperms, cmul
from colhopf.universe import SizeGuardError, Universe, check_size, forced, size_estimate

Z2 = parse_group("Z2")


@pytest.mark.parametrize("G,n", [(TRIVIAL, 4), (Z2, 3), (parse_group("Z3"), 3)], ids=str)
def test_rank_is_enumeration_order(backend, G, n):
    U = Universe(n, G)
    assert list(kernels.rank_rows(U.windows, U.colours, G.order)) == list(range(U.N))
    assert U.elements == list(all_cperms(n, G))


@pytest.mark.parametrize("G,n", [(TRIVIAL, 4), (Z2, 3)], ids=str)
def test_compose_table(backend, G, n):
    U = Universe(n, G)
    T = U.table()
    for i in range(0, U.N, 3):
        for j in range(0, U.N, 5):
            assert U[int(T[i, j])] == cmul(G, U[i], U[j])


def test_product_counts(backend):
    U = Universe(3, Z2)
    rng = np.random.default_rng(0)
    labels = rng.integers(0, 4, U.N)
    rows = np.arange(0, U.N, 7)
    got = U.product_counts(rows, labels, 4)
    want = np.zeros((4, U.N), dtype=np.int64)
    for a in rows:
        for b in range(U.N):
            want[labels[b], U.index(cmul(Z2, U[int(a)], U[b]))] += 1
    assert np.array_equal(got, want)


def _components(n, edges):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    return [min(y for y in range(n) if find(y) == find(x)) for x in range(n)]


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 30).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=40))))
def test_connected_labels_both_backends(case):
    n, edges = case
    src = np.array([a for a, _ in edges], dtype=np.int64)
    dst = np.array([b for _, b in edges], dtype=np.int64)
    want = _components(n, edges)
    for name in ("numpy", "numba") if kernels.HAVE_NUMBA else ("numpy",):
        prev = kernels.set_backend(name)
        try:
            assert list(kernels.connected_labels(n, src, dst)) == want
        finally:
            kernels.set_backend(prev)


def test_backends_agree_on_left_actions():
    U = Universe(4, Z2)
    out = {}
    for name in ("numpy", "numba") if kernels.HAVE_NUMBA else ("numpy",):
        prev = kernels.set_backend(name)
        try:
            w = U.windows.copy()
            w[U.windows == 2], w[U.windows == 3] = 3, 2
            out[name] = kernels.rank_rows(w, U.colours, 2)
        finally:
            kernels.set_backend(prev)
    assert len({tuple(v) for v in out.values()}) == 1


def test_set_backend_rejects_unknown():
    with pytest.raises(ValueError):
        kernels.set_backend("cuda")


def test_size_guards():
    check_size(7, TRIVIAL)
    with pytest.raises(SizeGuardError):
        check_size(8, TRIVIAL)
    with pytest.raises(SizeGuardError):
        check_size(8, Z2)
    check_size(8, TRIVIAL, force=True)
    with forced():
        check_size(9, Z2)
    with pytest.raises(SizeGuardError):
        check_size(9, Z2)
    assert size_estimate(3, Z2)["elements"] == 48
