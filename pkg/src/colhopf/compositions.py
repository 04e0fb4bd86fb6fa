"""Compositions, G-compositions, rainbow decompositions and the Λ / Φ maps.

A composition is a tuple of positive ints.  A G-composition is a tuple of
``(part, colour_rank)`` pairs; equal adjacent colours are allowed.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Callable, Sequence

from .groups import ColourGroup

Composition = tuple  # tuple[int, ...]
GComposition = tuple  # tuple[tuple[int, int], ...]


@lru_cache(maxsize=None)
def compositions(n: int) -> tuple[Composition, ...]:
    """All compositions of ``n``, in lexicographic order."""
    if n == 0:
        return ((),)
    out = []
    for first in range(1, n + 1):
        out.extend((first,) + rest for rest in compositions(n - first))
    return tuple(sorted(out))


def comp_subset(c: Sequence[int]) -> frozenset[int]:
    sums = list(itertools.accumulate(c))
    return frozenset(sums[:-1])


def subset_comp(subset, n: int) -> Composition:
    pts = sorted(subset)
    if any(not 1 <= x <= n - 1 for x in pts):
        raise ValueError(f"subset {pts} is not inside [1, {n - 1}]")
    if n == 0:
        return ()
    cuts = [0] + pts + [n]
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def is_peak_comp(c: Sequence[int], kind: str = "interior") -> bool:
    c = tuple(c)
    if kind == "interior":
        return all(x > 1 for x in c[:-1])
    if kind == "exterior":
        return all(x > 1 for x in c[1:-1])
    raise ValueError(f"unknown peak kind {kind!r}")


def peak_compositions(n: int, kind: str = "interior") -> list[Composition]:
    return [c for c in compositions(n) if is_peak_comp(c, kind)]


def n_parts(c: Sequence) -> int:
    return len(c)


def rainbow(word: Sequence, colours: Sequence) -> list[tuple[tuple, object]]:
    """Maximal monochromatic blocks of a coloured word, as ``(subword, colour)``."""
    out = []
    for col, grp in itertools.groupby(zip(word, colours), key=lambda t: t[1]):
        out.append((tuple(x for x, _ in grp), col))
    return out


def rainbow_composition(word: Sequence, colours: Sequence) -> GComposition:
    return tuple((len(w), g) for w, g in rainbow(word, colours))


def gcomp_rainbow(cg: GComposition) -> list[tuple[Composition, int]]:
    """Rainbow decomposition of a G-composition into (composition, colour) blocks."""
    return [(tuple(p for p, _ in grp), col) for col, grp in itertools.groupby(cg, key=lambda t: t[1])]


def gcomp_from_blocks(blocks: Sequence[tuple[Sequence[int], int]]) -> GComposition:
    return tuple((p, g) for c, g in blocks for p in c)


def gcomp_weight(cg: GComposition) -> int:
    return sum(p for p, _ in cg)


def g_compositions(n: int, G: ColourGroup) -> list[GComposition]:
    """All G-compositions of ``n`` ordered by underlying composition then colours."""
    out = []
    for c in compositions(n):
        for cols in itertools.product(range(G.order), repeat=len(c)):
            out.append(tuple(zip(c, cols)))
    return out


def colour_word(cg: GComposition) -> tuple[int, ...]:
    """The colour of each of the ``n`` positions, ``(h_1, ..., h_n)``."""
    return tuple(g for p, g in cg for _ in range(p))


def lambda_map(c: Sequence[int]) -> Composition:
    """Compress ``c`` into blocks ``(1,...,1,m)`` with ``m > 1`` plus a trailing ``(1,...,1)``."""
    out, acc = [], 0
    for part in c:
        acc += part
        if part > 1:
            out.append(acc)
            acc = 0
    if acc:
        out.append(acc)
    return tuple(out)


def _alternates(i: int, subset) -> bool:
    return ((i - 1) in subset) != (i in subset)


def phi_set(c: Sequence[int], kind: str = "forward") -> list[Composition]:
    """Index sets of Θ (``forward``) and of its dual (``dual``)."""
    c = tuple(c)
    n = sum(c)
    out = []
    if kind == "forward":
        ic = comp_subset(c)
        for e in compositions(n):
            if all(_alternates(i, ic) for i in comp_subset(lambda_map(e))):
                out.append(e)
    elif kind == "dual":
        il = comp_subset(lambda_map(c))
        for e in compositions(n):
            ie = comp_subset(e)
            if all(_alternates(i, ie) for i in il):
                out.append(e)
    else:
        raise ValueError(f"unknown Φ kind {kind!r}")
    return out


def count_lifted_classes(n: int, G: ColourGroup, dims: Callable[[int], int]) -> int:
    """Number of G-lifted values: |G| Σ (|G|-1)^(k-1) |E_c1|...|E_ck| over c ⊨ n."""
    if n == 0:
        return 1
    q = G.order
    total = 0
    for c in compositions(n):
        term = (q - 1) ** (len(c) - 1)
        for p in c:
            term *= dims(p)
        total += term
    return q * total


# text forms used by the CLI and JSON

def parse_composition(text: str) -> Composition:
    text = text.strip()
    if not text:
        return ()
    c = tuple(int(x) for x in text.split(","))
    if any(x < 1 for x in c):
        raise ValueError(f"composition parts must be positive: {text!r}")
    return c


def parse_gcomposition(text: str, G: ColourGroup) -> GComposition:
    """``"2^1,1^0,3"``: part, optionally followed by ``^`` and a colour rank."""
    text = text.strip()
    if not text:
        return ()
    out = []
    for tok in text.split(","):
        part, _, col = tok.partition("^")
        g = int(col) if col else 0
        if not 0 <= g < G.order:
            raise ValueError(f"colour rank {g} out of range for {G}")
        if int(part) < 1:
            raise ValueError("parts must be positive")
        out.append((int(part), g))
    return tuple(out)


def format_gcomposition(cg: GComposition) -> str:
    return ",".join(f"{p}^{g}" for p, g in cg)
