"""Permutations as words, Young subgroups, and coloured permutations.

Conventions:

* a permutation is the tuple ``(σ(1), ..., σ(n))``;
* products compose right to left, ``(στ)(i) = σ(τ(i))``, so ``s_i σ`` swaps the
  *values* ``i`` and ``i+1`` and ``σ s_i`` swaps the *positions* ``i`` and ``i+1``;
* a coloured permutation ``σ.g`` is stored as its word ``σ^g``: the letter at
  position ``i`` carries colour ``g_i`` (a colour rank, see ``groups``).
"""
from __future__ import annotations

import itertools
from math import comb, factorial
from typing import NamedTuple, Sequence

from .groups import ColourGroup, TRIVIAL

Perm = tuple  # tuple[int, ...]


class DegreeMismatchError(ValueError):
    pass


def std(word: Sequence) -> Perm:
    """Standardization; equal letters are numbered left to right."""
    order = sorted(range(len(word)), key=lambda k: (word[k], k))
    out = [0] * len(word)
    for value, pos in enumerate(order, start=1):
        out[pos] = value
    return tuple(out)


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def longest(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def is_perm(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def multiply(s: Perm, t: Perm) -> Perm:
    if len(s) != len(t):
        raise DegreeMismatchError(f"degrees {len(s)} and {len(t)} differ")
    return tuple(s[x - 1] for x in t)


def inverse(s: Perm) -> Perm:
    out = [0] * len(s)
    for pos, val in enumerate(s, start=1):
        out[val - 1] = pos
    return tuple(out)


def length(s: Perm) -> int:
    """Coxeter length, i.e. the number of inversions."""
    n = len(s)
    return sum(1 for i in range(n) for j in range(i + 1, n) if s[i] > s[j])


def left_s(i: int, s: Perm) -> Perm:
    """``s_i σ``: exchange the values ``i`` and ``i+1``."""
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in s)


def right_s(s: Perm, i: int) -> Perm:
    """``σ s_i``: exchange the letters in positions ``i`` and ``i+1``."""
    w = list(s)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def simple(n: int, i: int) -> Perm:
    return right_s(identity(n), i)


def all_perms(n: int):
    return itertools.permutations(range(1, n + 1))


def cross(*perms: Perm) -> Perm:
    """``σ_1 × σ_2 × ...``, the block-diagonal embedding."""
    out, shift = [], 0
    for p in perms:
        out.extend(x + shift for x in p)
        shift += len(p)
    return tuple(out)


def blocks(c: Sequence[int]) -> list[tuple[int, int]]:
    """Position intervals ``[t_{i-1}+1, t_i]`` as half-open 0-based ranges."""
    out, t = [], 0
    for part in c:
        out.append((t, t + part))
        t += part
    return out


def longest_element(c: Sequence[int]) -> Perm:
    return cross(*(longest(p) for p in c))


def young_subgroup(c: Sequence[int]):
    for factors in itertools.product(*(all_perms(p) for p in c)):
        yield cross(*factors)


def coset_reps(c: Sequence[int]) -> list[Perm]:
    """Minimal left coset representatives ``X_c``: permutations increasing on each block."""
    n = sum(c)
    reps = []

    def place(k, remaining, acc):
        if k == len(c):
            reps.append(acc)
            return
        for chosen in itertools.combinations(remaining, c[k]):
            rest = tuple(x for x in remaining if x not in chosen)
            place(k + 1, rest, acc + chosen)

    place(0, tuple(range(1, n + 1)), ())
    return sorted(reps)


def multinomial(c: Sequence[int]) -> int:
    out, n = 1, 0
    for p in c:
        n += p
        out *= comb(n, p)
    return out


def in_coset_reps(x: Perm, c: Sequence[int]) -> bool:
    return all(all(x[k] < x[k + 1] for k in range(a, b - 1)) for a, b in blocks(c))


def c_components(s: Perm, c: Sequence[int]) -> tuple[Perm, Perm]:
    """The unique factorization ``σ = u v`` with ``u ∈ X_c`` and ``v ∈ S_c``."""
    if sum(c) != len(s):
        raise DegreeMismatchError("composition weight differs from degree")
    v = cross(*(std(s[a:b]) for a, b in blocks(c)))
    return multiply(s, inverse(v)), v


def deodhar_case(x: Perm, i: int, c: Sequence[int]) -> int | None:
    """Deodhar's dichotomy for ``x ∈ X_c``.

    Returns ``None`` when ``s_i x ∈ X_c``, otherwise the index ``j`` with
    ``s_i x = x s_j`` and ``s_j ∈ S_c``.
    """
    if not in_coset_reps(x, c):
        raise ValueError(f"{x} is not a minimal coset representative for {tuple(c)}")
    if not 1 <= i < len(x):
        raise ValueError("reflection index out of range")
    y = left_s(i, x)
    if in_coset_reps(y, c):
        return None
    j = x.index(i) + 1
    assert x[j] == i + 1 and y == right_s(x, j)
    return j


# coloured permutations


class CPerm(NamedTuple):
    window: Perm
    colours: tuple  # colour ranks, one per position

    @property
    def degree(self) -> int:
        return len(self.window)

    def __str__(self) -> str:
        if not self.window:
            return "δ"
        return " ".join(f"{w}^{c}" for w, c in zip(self.window, self.colours))


EMPTY = CPerm((), ())


def plain(s: Perm) -> CPerm:
    return CPerm(tuple(s), (0,) * len(s))


def paint(s: Perm, g: int) -> CPerm:
    return CPerm(tuple(s), (g,) * len(s))


def cmul(G: ColourGroup, a: CPerm, b: CPerm) -> CPerm:
    """Product in ``G_n``; position ``i`` gets colour ``g_{τ(i)} h_i``."""
    if len(a.window) != len(b.window):
        raise DegreeMismatchError(f"degrees {len(a.window)} and {len(b.window)} differ")
    w = tuple(a.window[x - 1] for x in b.window)
    if G.is_trivial:
        return CPerm(w, b.colours)
    t = G.mul_table
    col = tuple(int(t[a.colours[x - 1], h]) for x, h in zip(b.window, b.colours))
    return CPerm(w, col)


def cinv(G: ColourGroup, a: CPerm) -> CPerm:
    w = inverse(a.window)
    if G.is_trivial:
        return CPerm(w, a.colours)
    inv = G.inv_table
    return CPerm(w, tuple(int(inv[a.colours[x - 1]]) for x in w))


def cidentity(n: int) -> CPerm:
    return CPerm(identity(n), (0,) * n)


def cleft(u: Perm, a: CPerm) -> CPerm:
    """Left multiplication by an uncoloured permutation (acts on values)."""
    return CPerm(tuple(u[x - 1] for x in a.window), a.colours)


def cleft_s(i: int, a: CPerm) -> CPerm:
    return CPerm(left_s(i, a.window), a.colours)


def cright(a: CPerm, u: Perm) -> CPerm:
    """Right multiplication by an uncoloured permutation (acts on positions)."""
    return CPerm(tuple(a.window[x - 1] for x in u), tuple(a.colours[x - 1] for x in u))


def ccross(*items: CPerm) -> CPerm:
    return CPerm(cross(*(a.window for a in items)), sum((tuple(a.colours) for a in items), ()))


def cstd(window: Sequence[int], colours: Sequence[int]) -> CPerm:
    return CPerm(std(window), tuple(colours))


def coloured_c_components(a: CPerm, c: Sequence[int]) -> tuple[Perm, CPerm]:
    """``α = u v^g`` with ``u ∈ X_c`` and ``v^g`` block diagonal."""
    u, v = c_components(a.window, c)
    return u, CPerm(v, a.colours)


def split_cross(a: CPerm, c: Sequence[int]) -> list[CPerm]:
    """Inverse of ``ccross`` for a block-diagonal element of ``G_c``."""
    out = []
    for lo, hi in blocks(c):
        w = a.window[lo:hi]
        if sorted(w) != list(range(lo + 1, hi + 1)):
            raise ValueError(f"{a} is not in the Young subgroup of {tuple(c)}")
        out.append(CPerm(tuple(x - lo for x in w), a.colours[lo:hi]))
    return out


def all_cperms(n: int, G: ColourGroup = TRIVIAL):
    """Enumerate ``G_n``: permutations lexicographically, then colour words."""
    cols = list(itertools.product(range(G.order), repeat=n))
    for w in all_perms(n):
        for col in cols:
            yield CPerm(w, col)


def group_size(n: int, G: ColourGroup = TRIVIAL) -> int:
    return G.order ** n * factorial(n)


def to_json(a, G: ColourGroup = TRIVIAL):
    """Integer array for plain permutations, window/colours object otherwise."""
    if not isinstance(a, CPerm):
        return list(a)
    if G.is_trivial:
        return list(a.window)
    return {"window": list(a.window), "colours": [list(G.element(g)) for g in a.colours]}


def from_json(obj, G: ColourGroup = TRIVIAL) -> CPerm:
    if isinstance(obj, dict):
        return CPerm(tuple(obj["window"]), tuple(G.order_key(c) for c in obj["colours"]))
    return plain(tuple(obj))
