"""Permutation statistics: descents, interior/exterior peaks, binary trees,
type-B descents, and the rainbow lifting of a statistic to coloured words.

Base statistics accept any injective word; they only look at the relative
order of letters, so ``stat(w) == stat(std(w))``.
"""
from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Callable, Hashable, Sequence

from .compositions import rainbow, subset_comp
from .groups import ColourGroup, TRIVIAL
from .perms import CPerm, all_cperms, cidentity, cmul, std

# A planar binary tree is None (the leaf) or a pair (left, right).
Tree = tuple | None


class UnsupportedKindError(ValueError):
    pass


def des_set(w: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


def descent_comp(w: Sequence[int]) -> tuple[int, ...]:
    return subset_comp(des_set(w), len(w))


def interior_peak_set(w: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(2, len(w)) if w[i - 2] < w[i - 1] > w[i])


def interior_peak_comp(w: Sequence[int]) -> tuple[int, ...]:
    return subset_comp(interior_peak_set(w), len(w))


def exterior_peak_set(w: Sequence[int]) -> frozenset[int]:
    # σ(0) = 0, so position 1 is a peak exactly when it is a descent
    return frozenset(
        i for i in range(1, len(w)) if (w[i - 2] if i > 1 else 0) < w[i - 1] > w[i]
    )


def exterior_peak_comp(w: Sequence[int]) -> tuple[int, ...]:
    return subset_comp(exterior_peak_set(w), len(w))


def tree(w: Sequence[int]) -> Tree:
    """Split at the smallest letter and recurse on both sides."""
    if not w:
        return None
    k = w.index(min(w))
    return (tree(w[:k]), tree(w[k + 1:]))


def tree_size(t: Tree) -> int:
    return 0 if t is None else 1 + tree_size(t[0]) + tree_size(t[1])


@lru_cache(maxsize=None)
def all_trees(n: int) -> tuple:
    if n == 0:
        return (None,)
    out = []
    for k in range(n):
        for left in all_trees(k):
            for right in all_trees(n - 1 - k):
                out.append((left, right))
    return tuple(out)


def graft(left: Tree, right: Tree) -> Tree:
    return (left, right)


def tree_to_json(t: Tree):
    return None if t is None else [tree_to_json(t[0]), tree_to_json(t[1])]


def tree_from_json(obj) -> Tree:
    return None if obj is None else (tree_from_json(obj[0]), tree_from_json(obj[1]))


BASE = {
    "D": descent_comp,
    "IP": interior_peak_comp,
    "EP": exterior_peak_comp,
    "T": tree,
}

ALIASES = {
    "d": "D", "descent": "D", "descents": "D", "dg": "D", "d_g": "D",
    "ip": "IP", "ipeak": "IP", "peak": "IP", "interior": "IP", "ipg": "IP",
    "ep": "EP", "p": "EP", "epeak": "EP", "exterior": "EP",
    "t": "T", "tree": "T", "trees": "T", "sylv": "T", "tg": "T",
    "desb": "DESB", "b": "DESB", "typeb": "DESB",
    "id": "ID", "identity": "ID",
}


def canonical_stat(kind: str) -> str:
    k = kind.strip()
    if k in BASE or k in ("DESB", "ID"):
        return k
    try:
        return ALIASES[k.lower()]
    except KeyError:
        raise UnsupportedKindError(f"unknown statistic {kind!r}") from None


def lift_statistic(kind: str, a: CPerm) -> tuple:
    """Apply a base statistic blockwise to the rainbow decomposition."""
    kind = canonical_stat(kind)
    if kind not in BASE:
        raise UnsupportedKindError(f"statistic {kind!r} cannot be lifted blockwise")
    f = BASE[kind]
    return tuple((f(std(block)), g) for block, g in rainbow(a.window, a.colours))


def signed_window(a: CPerm) -> tuple[int, ...]:
    """Window of a Z2-coloured permutation with the non-trivial colour as a minus sign."""
    return tuple(-x if g else x for x, g in zip(a.window, a.colours))


def _require_z2(G: ColourGroup):
    if G.moduli != (2,):
        raise UnsupportedKindError(f"type B statistics need G = Z2, got {G}")


def des_B(a: CPerm, G: ColourGroup | None = None) -> frozenset[int]:
    if G is not None:
        _require_z2(G)
    v = (0,) + signed_window(a)
    return frozenset(i for i in range(len(a.window)) if v[i] > v[i + 1])


def type_b_generators(n: int, G: ColourGroup) -> list[CPerm]:
    """``s_0, s_1, ..., s_{n-1}``; ``s_0`` flips the colour of position 1."""
    _require_z2(G)
    gens = []
    if n >= 1:
        gens.append(CPerm(tuple(range(1, n + 1)), (1,) + (0,) * (n - 1)))
    for i in range(1, n):
        w = list(range(1, n + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        gens.append(CPerm(tuple(w), (0,) * n))
    return gens


@lru_cache(maxsize=None)
def _type_b_lengths(n: int) -> dict:
    G = ColourGroup((2,))
    gens = type_b_generators(n, G)
    start = cidentity(n)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for r in gens:
            y = cmul(G, x, r)
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def length_B(a: CPerm) -> int:
    """Coxeter length in the hyperoctahedral group, by breadth-first search."""
    return _type_b_lengths(len(a.window))[a]


def des_B_coxeter(a: CPerm) -> frozenset[int]:
    """``{i : ℓ_B(α s_i) < ℓ_B(α)}``, the length-based definition of ``Des_B``."""
    G = ColourGroup((2,))
    n = len(a.window)
    la = length_B(a)
    return frozenset(
        i for i, r in enumerate(type_b_generators(n, G)) if length_B(cmul(G, a, r)) < la
    )


def stat_fn(kind: str, G: ColourGroup = TRIVIAL) -> Callable[[CPerm], Hashable]:
    """The statistic as a function on ``G_n``.

    For the trivial group the base value is returned; otherwise the rainbow
    lift, a tuple of ``(value, colour)`` pairs.
    """
    kind = canonical_stat(kind)
    if kind == "DESB":
        _require_z2(G)
        return des_B
    if kind == "ID":
        return lambda a: a
    f = BASE[kind]
    if G.is_trivial:
        return lambda a: f(a.window)
    return lambda a: lift_statistic(kind, a)


def image(kind: str, n: int, G: ColourGroup = TRIVIAL) -> set:
    f = stat_fn(kind, G)
    return {f(a) for a in all_cperms(n, G)}


def value_to_json(kind: str, value, G: ColourGroup = TRIVIAL):
    """JSON form of a statistic value."""
    kind = canonical_stat(kind)
    if kind == "DESB":
        return sorted(value)
    if kind == "ID":
        return {"window": list(value.window), "colours": [list(G.element(g)) for g in value.colours]}
    base = tree_to_json if kind == "T" else list
    if G.is_trivial:
        return base(value)
    return [[base(v), list(G.element(g))] for v, g in value]
