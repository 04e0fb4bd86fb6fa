"""Exact linear algebra over Q: fraction-free rank, reduced echelon form,
kernels and solves.  Pivots are chosen in a fixed order (first non-zero
entry scanning rows top to bottom), so results are deterministic.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence


def _integer_rows(rows) -> list[list[int]]:
    out = []
    for r in rows:
        den = 1
        for x in r:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        out.append([int(x * den) for x in r])
    return out


def dedup_columns(rows) -> list[list]:
    """Drop repeated columns; the rank is unchanged."""
    rows = [list(r) for r in rows]
    if not rows:
        return rows
    keep, seen = [], set()
    for j in range(len(rows[0])):
        col = tuple(r[j] for r in rows)
        if col not in seen:
            seen.add(col)
            keep.append(j)
    return [[r[j] for j in keep] for r in rows]


def rank(rows: Sequence[Sequence]) -> int:
    """Rank via Bareiss fraction-free elimination."""
    M = _integer_rows(dedup_columns(rows))
    M = [r for r in M if any(r)]
    if not M:
        return 0
    m, n = len(M), len(M[0])
    r, prev = 0, 1
    for c in range(n):
        piv = next((k for k in range(r, m) if M[k][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        p = M[r][c]
        for k in range(r + 1, m):
            a = M[k][c]
            Mk, Mr = M[k], M[r]
            for j in range(c + 1, n):
                Mk[j] = (p * Mk[j] - a * Mr[j]) // prev
            Mk[c] = 0
        prev = p
        r += 1
        if r == m:
            break
    return r


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    M = [[Fraction(x) for x in r] for r in rows]
    if not M:
        return [], []
    m, n = len(M), len(M[0])
    pivots, r = [], 0
    for c in range(n):
        piv = next((k for k in range(r, m) if M[k][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for k in range(m):
            if k != r and M[k][c] != 0:
                f = M[k][c]
                M[k] = [x - f * y for x, y in zip(M[k], M[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return M[:r], pivots


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of ``{x : A x = 0}``."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    R, pivots = rref(rows) if rows else ([], [])
    free = [j for j in range(ncols) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(rows: Sequence[Sequence], rhs: Sequence) -> list[Fraction] | None:
    """One solution of ``A x = b`` or ``None`` when inconsistent."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    R, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(R, pivots):
        x[p] = row[-1]
    return x


def row_space_basis(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    return rref(rows)[0]


P_DEFAULT = 2_147_483_629  # prime below 2**31, so products fit in int64


def rank_mod_p(rows, p: int = P_DEFAULT) -> int:
    """Rank over ``F_p`` of an integer matrix.

    Never exceeds the rank over Q, so a full-rank answer here certifies full
    rank over Q.
    """
    import numpy as np

    ints = _integer_rows(dedup_columns(rows))
    if not ints or not ints[0]:
        return 0
    M = np.array([[x % p for x in r] for r in ints], dtype=np.int64)
    m, n = M.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(M[r:, c])[0]
        if len(nz) == 0:
            continue
        piv = r + int(nz[0])
        M[[r, piv]] = M[[piv, r]]
        inv = pow(int(M[r, c]), p - 2, p)
        M[r] = (M[r] * inv) % p
        below = M[r + 1:, c].copy()
        if below.any():
            # entries are below 2**31, so the products fit in int64
            M[r + 1:] = (M[r + 1:] - (below[:, None] * M[r][None, :]) % p) % p
        r += 1
    return r
