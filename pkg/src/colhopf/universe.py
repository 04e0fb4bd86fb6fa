"""Indexed enumeration of ``G_n`` shared by the equivalence and Hopf modules.

Element ``k`` of ``Universe(n, G)`` is the ``k``-th element of
``perms.all_cperms(n, G)``; this agrees with the index produced by
``kernels.rank_rows``.
"""
from __future__ import annotations

import itertools
from contextlib import contextmanager
from functools import cached_property, lru_cache
from math import factorial
from typing import Callable, Hashable

import numpy as np

from . import kernels
from .groups import ColourGroup, TRIVIAL
from .perms import CPerm

TYPE_A_MAX = 7
COLOURED_MAX = 10 ** 6


_FORCED = False


class SizeGuardError(ValueError):
    """Raised when an enumeration would exceed the default size bound."""


@contextmanager
def forced():
    """Disable the size guard inside the block."""
    global _FORCED
    old, _FORCED = _FORCED, True
    try:
        yield
    finally:
        _FORCED = old


def size_estimate(n: int, G: ColourGroup = TRIVIAL) -> dict:
    N = G.order ** n * factorial(n)
    # windows + colours as int64, plus one int64 label array per pass
    return {"elements": N, "bytes": N * (2 * n + 4) * 8}


def over_limit(n: int, G: ColourGroup = TRIVIAL) -> str | None:
    """Why ``G_n`` is over the default bound, or None."""
    if n < 0:
        return "degree must be non-negative"
    if G.is_trivial:
        if n > TYPE_A_MAX:
            return f"n={n} exceeds the type A bound n <= {TYPE_A_MAX}; pass force to override"
    elif G.order ** n * factorial(n) > COLOURED_MAX:
        return f"|G|^n n! = {G.order ** n * factorial(n)} exceeds {COLOURED_MAX}; pass force to override"
    return None


def check_size(n: int, G: ColourGroup = TRIVIAL, force: bool = False) -> None:
    if n < 0:
        raise SizeGuardError("degree must be non-negative")
    if force or _FORCED:
        return
    msg = over_limit(n, G)
    if msg:
        raise SizeGuardError(msg)


class Universe:
    def __init__(self, n: int, G: ColourGroup = TRIVIAL):
        self.n, self.G = n, G
        q = G.order
        perms = list(itertools.permutations(range(1, n + 1)))
        cols = list(itertools.product(range(q), repeat=n))
        P = np.array(perms, dtype=np.int64).reshape(len(perms), n)
        C = np.array(cols, dtype=np.int64).reshape(len(cols), n)
        self.windows = np.repeat(P, len(C), axis=0)
        self.colours = np.tile(C, (len(P), 1))
        self.N = len(self.windows)

    def __len__(self) -> int:
        return self.N

    @cached_property
    def elements(self) -> list[CPerm]:
        return [CPerm(tuple(int(x) for x in w), tuple(int(c) for c in col))
                for w, col in zip(self.windows, self.colours)]

    @cached_property
    def _position(self) -> dict:
        return {a: k for k, a in enumerate(self.elements)}

    def index(self, a: CPerm) -> int:
        return self._position[a]

    def __getitem__(self, k: int) -> CPerm:
        return self.elements[k]

    def rank(self, windows, colours) -> np.ndarray:
        return kernels.rank_rows(windows, colours, self.G.order)

    @lru_cache(maxsize=None)
    def left_s(self, i: int) -> np.ndarray:
        """Index of ``s_i α`` for every ``α`` (value swap, colours stay put)."""
        w = self.windows.copy()
        w[self.windows == i] = i + 1
        w[self.windows == i + 1] = i
        return self.rank(w, self.colours)

    @cached_property
    def left_s0(self) -> np.ndarray:
        """Index of ``s_0 α``: the letter of value 1 is multiplied by colour rank 1."""
        c = self.colours.copy()
        mask = self.windows == 1
        c[mask] = self.G.mul_table[1, c[mask]]
        return self.rank(self.windows, c)

    def labels(self, fn: Callable[[CPerm], Hashable]) -> tuple[np.ndarray, list]:
        """Canonical labels of the fibers of ``fn``.

        Label ``k`` is the ``k``-th distinct value met in index order, so
        fibers are numbered by their smallest element.  Returns the label
        array and the list of values.
        """
        seen: dict = {}
        lab = np.empty(self.N, dtype=np.int64)
        for k, a in enumerate(self.elements):
            lab[k] = seen.setdefault(fn(a), len(seen))
        return lab, list(seen)

    def table(self) -> np.ndarray:
        return kernels.compose_table(self.windows, self.colours, self.G.mul_table)

    def product_counts(self, rows, col_labels, n_labels) -> np.ndarray:
        return kernels.product_counts(self.windows, self.colours, self.G.mul_table, rows, col_labels, n_labels)


@lru_cache(maxsize=32)
def universe(n: int, G: ColourGroup = TRIVIAL, force: bool = False) -> Universe:
    check_size(n, G, force)
    return Universe(n, G)


def canonical(labels: np.ndarray) -> np.ndarray:
    """Relabel so each block is numbered in order of its smallest index."""
    _, first, inv = np.unique(labels, return_index=True, return_inverse=True)
    order = np.argsort(first)
    rank = np.empty_like(order)
    rank[order] = np.arange(len(order))
    return rank[inv.ravel()]
