"""Numeric inner loops over indexed coloured permutation groups.

Every kernel has two implementations with identical results: a numba
``@njit`` loop and a vectorized numpy version.  The numba path is used when
numba imports and ``COLHOPF_DISABLE_NUMBA`` is unset; ``set_backend`` switches
at runtime (the test-suite runs both).

Element indexing: an element of ``G_n`` with window ``w`` and colour ranks
``c`` has index ``lehmer_rank(w) * q**n + Σ c_i q**(n-1-i)`` where ``q = |G|``,
which is lexicographic order on ``(window, colours)``.
"""
from __future__ import annotations

import os
from math import factorial

import numpy as np

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAVE_NUMBA = False

_DISABLED = os.environ.get("COLHOPF_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}
_backend = "numba" if HAVE_NUMBA and not _DISABLED else "numpy"


def backend() -> str:
    return _backend


def set_backend(name: str) -> str:
    """Select ``"numba"`` or ``"numpy"``; returns the previous backend."""
    global _backend
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba is not available")
    prev, _backend = _backend, name
    return prev


def _radix(n: int, q: int) -> tuple[np.ndarray, np.ndarray]:
    fact = np.array([factorial(n - 1 - i) for i in range(n)], dtype=np.int64)
    qpow = np.array([q ** (n - 1 - i) for i in range(n)], dtype=np.int64)
    return fact, qpow


# ---------------------------------------------------------------- numpy path

def _rank_rows_np(windows: np.ndarray, colours: np.ndarray, q: int) -> np.ndarray:
    m, n = windows.shape
    if n == 0:
        return np.zeros(m, dtype=np.int64)
    fact, qpow = _radix(n, q)
    lehmer = np.zeros((m, n), dtype=np.int64)
    for i in range(n):
        lehmer[:, i] = (windows[:, i + 1:] < windows[:, i:i + 1]).sum(axis=1)
    return (lehmer @ fact) * (q ** n) + colours @ qpow


def _compose_table_np(windows, colours, gmul, q):
    N, n = windows.shape
    table = np.empty((N, N), dtype=np.int64)
    if n == 0:
        table[:] = 0
        return table
    wb = windows - 1
    chunk = max(1, 200_000 // max(N, 1))
    for lo in range(0, N, chunk):
        hi = min(N, lo + chunk)
        wa = windows[lo:hi]  # (A, n)
        ca = colours[lo:hi]
        # product window w[i] = wa[wb[i]]; colour gmul[ca[wb[i]], cb[i]]
        pw = wa[:, wb]  # (A, N, n)
        pc = gmul[ca[:, wb], colours[None, :, :]]
        table[lo:hi] = _rank_rows_np(pw.reshape(-1, n), pc.reshape(-1, n), q).reshape(hi - lo, N)
    return table


def _product_counts_np(windows, colours, gmul, rows, col_labels, n_labels, q):
    N, n = windows.shape
    counts = np.zeros(n_labels * N, dtype=np.int64)
    wb = windows - 1
    chunk = max(1, 200_000 // max(N, 1))
    for lo in range(0, len(rows), chunk):
        sub = rows[lo:lo + chunk]
        pw = windows[sub][:, wb]
        pc = gmul[colours[sub][:, wb], colours[None, :, :]]
        idx = _rank_rows_np(pw.reshape(-1, n), pc.reshape(-1, n), q).reshape(len(sub), N)
        keys = col_labels[None, :] * N + idx
        counts += np.bincount(keys.ravel(), minlength=n_labels * N)
    return counts.reshape(n_labels, N)


def _connected_labels_np(n_nodes, src, dst):
    labels = np.arange(n_nodes, dtype=np.int64)
    if len(src) == 0:
        return labels
    while True:
        m = np.minimum(labels[src], labels[dst])
        new = labels.copy()
        np.minimum.at(new, src, m)
        np.minimum.at(new, dst, m)
        # pointer jumping
        while True:
            jumped = new[new]
            if np.array_equal(jumped, new):
                break
            new = jumped
        if np.array_equal(new, labels):
            return labels
        labels = new


# ---------------------------------------------------------------- numba path

if HAVE_NUMBA:

    @numba.njit(cache=True)
    def _rank_one(w, c, fact, qpow, qn):
        n = w.shape[0]
        r = 0
        for i in range(n):
            k = 0
            for j in range(i + 1, n):
                if w[j] < w[i]:
                    k += 1
            r += k * fact[i]
        s = 0
        for i in range(n):
            s += c[i] * qpow[i]
        return r * qn + s

    @numba.njit(cache=True)
    def _rank_rows_nb(windows, colours, fact, qpow, qn):
        m = windows.shape[0]
        out = np.empty(m, dtype=np.int64)
        for k in range(m):
            out[k] = _rank_one(windows[k], colours[k], fact, qpow, qn)
        return out

    @numba.njit(cache=True)
    def _compose_table_nb(windows, colours, gmul, fact, qpow, qn):
        N, n = windows.shape
        table = np.empty((N, N), dtype=np.int64)
        w = np.empty(n, dtype=np.int64)
        c = np.empty(n, dtype=np.int64)
        for a in range(N):
            for b in range(N):
                for i in range(n):
                    x = windows[b, i] - 1
                    w[i] = windows[a, x]
                    c[i] = gmul[colours[a, x], colours[b, i]]
                table[a, b] = _rank_one(w, c, fact, qpow, qn)
        return table

    @numba.njit(cache=True)
    def _product_counts_nb(windows, colours, gmul, rows, col_labels, n_labels, fact, qpow, qn):
        N, n = windows.shape
        counts = np.zeros((n_labels, N), dtype=np.int64)
        w = np.empty(n, dtype=np.int64)
        c = np.empty(n, dtype=np.int64)
        for r in range(rows.shape[0]):
            a = rows[r]
            for b in range(N):
                for i in range(n):
                    x = windows[b, i] - 1
                    w[i] = windows[a, x]
                    c[i] = gmul[colours[a, x], colours[b, i]]
                counts[col_labels[b], _rank_one(w, c, fact, qpow, qn)] += 1
        return counts

    @numba.njit(cache=True)
    def _find(parent, x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            nxt = parent[x]
            parent[x] = root
            x = nxt
        return root

    @numba.njit(cache=True)
    def _connected_labels_nb(n_nodes, src, dst):
        parent = np.arange(n_nodes)
        for k in range(src.shape[0]):
            ra = _find(parent, src[k])
            rb = _find(parent, dst[k])
            if ra != rb:
                # keep the smaller index as root so labels are canonical
                if ra < rb:
                    parent[rb] = ra
                else:
                    parent[ra] = rb
        out = np.empty(n_nodes, dtype=np.int64)
        for x in range(n_nodes):
            out[x] = _find(parent, x)
        return out


# ---------------------------------------------------------------- dispatch

def rank_rows(windows: np.ndarray, colours: np.ndarray, q: int) -> np.ndarray:
    windows = np.ascontiguousarray(windows, dtype=np.int64)
    colours = np.ascontiguousarray(colours, dtype=np.int64)
    n = windows.shape[1]
    if _backend == "numba" and n > 0:
        fact, qpow = _radix(n, q)
        return _rank_rows_nb(windows, colours, fact, qpow, q ** n)
    return _rank_rows_np(windows, colours, q)


def compose_table(windows: np.ndarray, colours: np.ndarray, gmul: np.ndarray) -> np.ndarray:
    """``table[a, b]`` = index of the product of elements ``a`` and ``b``."""
    windows = np.ascontiguousarray(windows, dtype=np.int64)
    colours = np.ascontiguousarray(colours, dtype=np.int64)
    gmul = np.ascontiguousarray(gmul, dtype=np.int64)
    q = gmul.shape[0]
    n = windows.shape[1]
    if _backend == "numba" and n > 0:
        fact, qpow = _radix(n, q)
        return _compose_table_nb(windows, colours, gmul, fact, qpow, q ** n)
    return _compose_table_np(windows, colours, gmul, q)


def product_counts(windows, colours, gmul, rows, col_labels, n_labels: int) -> np.ndarray:
    """``counts[l, x]`` = #{(a, b) : a in rows, label(b) = l, a·b = x}.

    Products are formed on the fly, so no ``N x N`` table is stored.
    """
    windows = np.ascontiguousarray(windows, dtype=np.int64)
    colours = np.ascontiguousarray(colours, dtype=np.int64)
    gmul = np.ascontiguousarray(gmul, dtype=np.int64)
    rows = np.ascontiguousarray(rows, dtype=np.int64)
    col_labels = np.ascontiguousarray(col_labels, dtype=np.int64)
    q = gmul.shape[0]
    n = windows.shape[1]
    if n == 0:
        counts = np.zeros((n_labels, windows.shape[0]), dtype=np.int64)
        counts[col_labels[0], 0] = len(rows)
        return counts
    if _backend == "numba":
        fact, qpow = _radix(n, q)
        return _product_counts_nb(windows, colours, gmul, rows, col_labels, n_labels, fact, qpow, q ** n)
    return _product_counts_np(windows, colours, gmul, rows, col_labels, n_labels, q)


def connected_labels(n_nodes: int, src: np.ndarray, dst: np.ndarray) -> np.ndarray:
    """Component label of each node: the smallest node index in its component."""
    src = np.ascontiguousarray(src, dtype=np.int64)
    dst = np.ascontiguousarray(dst, dtype=np.int64)
    if _backend == "numba":
        return _connected_labels_nb(n_nodes, src, dst)
    return _connected_labels_np(n_nodes, src, dst)
