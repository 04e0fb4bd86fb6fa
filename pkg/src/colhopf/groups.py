"""Finite abelian colour groups presented as products of cyclic groups.

A colour is a tuple of residues, one per cyclic factor.  Internally the rest
of the package refers to colours by their mixed-radix rank (``order_key``),
which is also the fixed total order on the group.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property
from math import prod

import numpy as np


class InvalidColourError(ValueError):
    pass


Colour = tuple  # tuple[int, ...]


@dataclass(frozen=True)
class ColourGroup:
    moduli: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "moduli", tuple(int(m) for m in self.moduli))
        for m in self.moduli:
            if m < 2:
                raise ValueError(f"cyclic factor modulus must be >= 2, got {m}")

    @property
    def order(self) -> int:
        return prod(self.moduli)

    @property
    def is_trivial(self) -> bool:
        return not self.moduli

    def __len__(self) -> int:
        return self.order

    def __str__(self) -> str:
        return "x".join(f"Z{m}" for m in self.moduli) if self.moduli else "triv"

    def check(self, a) -> Colour:
        a = tuple(a)
        if len(a) != len(self.moduli):
            raise InvalidColourError(f"colour {a} does not match group {self}")
        for r, m in zip(a, self.moduli):
            if not 0 <= r < m:
                raise InvalidColourError(f"residue {r} out of range for Z{m}")
        return a

    def identity(self) -> Colour:
        return (0,) * len(self.moduli)

    def op(self, a, b) -> Colour:
        a, b = self.check(a), self.check(b)
        return tuple((x + y) % m for x, y, m in zip(a, b, self.moduli))

    def invert(self, a) -> Colour:
        a = self.check(a)
        return tuple((-x) % m for x, m in zip(a, self.moduli))

    def order_key(self, a) -> int:
        key = 0
        for r, m in zip(self.check(a), self.moduli):
            key = key * m + r
        return key

    def element(self, key: int) -> Colour:
        if not 0 <= key < self.order:
            raise InvalidColourError(f"rank {key} out of range for {self}")
        res = []
        for m in reversed(self.moduli):
            key, r = divmod(key, m)
            res.append(r)
        return tuple(reversed(res))

    def enumerate(self) -> list[Colour]:
        return [tuple(t) for t in itertools.product(*(range(m) for m in self.moduli))]

    # rank-level tables used by the permutation code

    @cached_property
    def mul_table(self) -> np.ndarray:
        elems = self.enumerate()
        t = np.empty((self.order, self.order), dtype=np.int64)
        for i, a in enumerate(elems):
            for j, b in enumerate(elems):
                t[i, j] = self.order_key(self.op(a, b))
        return t

    @cached_property
    def inv_table(self) -> np.ndarray:
        return np.array([self.order_key(self.invert(a)) for a in self.enumerate()], dtype=np.int64)

    def mul(self, i: int, j: int) -> int:
        """Product of two colours given by rank."""
        return int(self.mul_table[i, j])

    def inv(self, i: int) -> int:
        return int(self.inv_table[i])


TRIVIAL = ColourGroup(())


def parse_group(spec: str) -> ColourGroup:
    """Parse ``"triv"``, ``"Z2"``, ``"Z2xZ3"`` and friends."""
    s = spec.strip()
    if s.lower() in ("triv", "trivial", "1", ""):
        return TRIVIAL
    parts = re.split(r"[x×*]", s)
    moduli = []
    for p in parts:
        m = re.fullmatch(r"\s*Z(?:/)?(\d+)\s*", p, flags=re.IGNORECASE)
        if not m:
            raise ValueError(f"cannot parse group spec {spec!r}")
        moduli.append(int(m.group(1)))
    return ColourGroup(tuple(moduli))


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism determined by the images of the cyclic generators."""

    source: ColourGroup
    target: ColourGroup
    generator_images: tuple = field(default=())

    def __post_init__(self):
        imgs = tuple(self.target.check(g) for g in self.generator_images)
        if len(imgs) != len(self.source.moduli):
            raise ValueError("need one image per cyclic generator of the source")
        for g, m in zip(imgs, self.source.moduli):
            if _scale(self.target, g, m) != self.target.identity():
                raise ValueError(f"image {g} has order not dividing {m}")
        object.__setattr__(self, "generator_images", imgs)

    def __call__(self, a) -> Colour:
        return self.apply(a)

    def apply(self, a) -> Colour:
        a = self.source.check(a)
        out = self.target.identity()
        for r, g in zip(a, self.generator_images):
            out = self.target.op(out, _scale(self.target, g, r))
        return out

    def apply_seq(self, colours) -> tuple:
        return tuple(self.apply(c) for c in colours)

    def rank_map(self) -> list[int]:
        """Image of each source colour rank, as target ranks."""
        return [self.target.order_key(self.apply(a)) for a in self.source.enumerate()]

    @classmethod
    def collapse(cls, source: ColourGroup) -> "GroupHom":
        return cls(source, TRIVIAL, tuple(() for _ in source.moduli))


def _scale(G: ColourGroup, g, k: int) -> Colour:
    return tuple((k * x) % m for x, m in zip(g, G.moduli))
