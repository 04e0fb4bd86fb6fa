"""The graded space ``k[G] = ⊕ kG_n``.

Elements are finite linear combinations of coloured permutations with
rational coefficients.  The external product shuffles values
(``α * β = Σ_u u (α × β)`` over minimal coset representatives), the
coproduct splits a permutation by values, and the internal product is the
group algebra product of a single ``G_n``.

Class-sum bases (``ClassBasis``) are attached to a statistic or a relation;
``verify_closure`` certifies that such a span is closed under one of the
three operations and returns its integer structure constants.
"""
from __future__ import annotations

import csv
import io
import json
import warnings
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import linalg
from .equivalence import GradedMap, PropertyReport
from .groups import ColourGroup, GroupHom, TRIVIAL
from .perms import (
    EMPTY, CPerm, ccross, cidentity, cinv, cleft, cmul, coloured_c_components, coset_reps,
    from_json, split_cross, to_json,
)
from .universe import universe


class HopfError(ValueError):
    pass


class GroupMismatchError(HopfError):
    pass


class NotInSpan(HopfError):
    def __init__(self, message: str, witness: dict | None = None):
        super().__init__(message)
        self.witness = witness or {}


def _sort_key(a: CPerm):
    return (len(a.window), a.window, a.colours)


def _accumulate(items, scale=1) -> dict:
    out: dict = defaultdict(Fraction)
    for k, c in items:
        out[k] += c * scale
    return {k: c for k, c in out.items() if c}


def _fraction_json(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


class HopfElement:
    """A finitely supported map ``G → Q``; zero coefficients are never stored."""

    __slots__ = ("G", "terms")

    def __init__(self, terms=None, G: ColourGroup = TRIVIAL):
        self.G = G
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        self.terms = _accumulate((a, Fraction(c)) for a, c in items)

    @classmethod
    def basis(cls, a: CPerm, G: ColourGroup = TRIVIAL) -> "HopfElement":
        return cls({a: 1}, G)

    @classmethod
    def zero(cls, G: ColourGroup = TRIVIAL) -> "HopfElement":
        return cls({}, G)

    @classmethod
    def unit(cls, G: ColourGroup = TRIVIAL) -> "HopfElement":
        return cls({EMPTY: 1}, G)

    def _same(self, other: "HopfElement"):
        if self.G != other.G:
            raise GroupMismatchError(f"elements over {self.G} and {other.G}")

    def __add__(self, other):
        self._same(other)
        return HopfElement(list(self.terms.items()) + list(other.terms.items()), self.G)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return HopfElement({a: -c for a, c in self.terms.items()}, self.G)

    def __mul__(self, other):
        if isinstance(other, HopfElement):
            return external_product(self, other)
        return HopfElement({a: c * Fraction(other) for a, c in self.terms.items()}, self.G)

    def __rmul__(self, other):
        return HopfElement({a: c * Fraction(other) for a, c in self.terms.items()}, self.G)

    def __eq__(self, other):
        return isinstance(other, HopfElement) and self.G == other.G and self.terms == other.terms

    __hash__ = None

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items(), key=lambda t: _sort_key(t[0])))

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, a: CPerm) -> Fraction:
        return self.terms.get(a, Fraction(0))

    def degrees(self) -> set[int]:
        return {len(a.window) for a in self.terms}

    def homogeneous(self, n: int) -> "HopfElement":
        return HopfElement({a: c for a, c in self.terms.items() if len(a.window) == n}, self.G)

    def to_json(self) -> list:
        out = []
        for a, c in self:
            d = to_json(a, self.G)
            if not isinstance(d, dict):
                d = {"window": d, "colours": [[] for _ in d]}
            out.append({**d, "coeff": _fraction_json(c)})
        return out

    @classmethod
    def from_json(cls, data: list, G: ColourGroup = TRIVIAL) -> "HopfElement":
        terms = []
        for t in data:
            a = from_json({"window": t["window"], "colours": t["colours"]}, G)
            terms.append((a, Fraction(t["coeff"])))
        return cls(terms, G)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*[{a}]" if c != 1 else f"[{a}]" for a, c in self)


class Tensor:
    """A formal sum of ``k``-tuples of coloured permutations."""

    __slots__ = ("G", "terms")

    def __init__(self, terms=None, G: ColourGroup = TRIVIAL):
        self.G = G
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        self.terms = _accumulate((tuple(k), Fraction(c)) for k, c in items)

    def __add__(self, other):
        return Tensor(list(self.terms.items()) + list(other.terms.items()), self.G)

    def __eq__(self, other):
        return isinstance(other, Tensor) and self.G == other.G and self.terms == other.terms

    __hash__ = None

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items(), key=lambda t: [_sort_key(a) for a in t[0]]))

    def __repr__(self):
        return " + ".join(f"{c}*" * (c != 1) + " ⊗ ".join(f"[{a}]" for a in k) for k, c in self) or "0"


# ------------------------------------------------------------------ products

@lru_cache(maxsize=None)
def _shuffles(n: int, m: int) -> tuple:
    return tuple(coset_reps((n, m)))


def shuffle_basis(a: CPerm, b: CPerm) -> list[CPerm]:
    """The terms of ``α * β``: ``u (α × β)`` for ``u`` in ``X_(n,m)``."""
    ab = ccross(a, b)
    return [cleft(u, ab) for u in _shuffles(len(a.window), len(b.window))]


def external_product(x: HopfElement, y: HopfElement) -> HopfElement:
    x._same(y)
    items = []
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            c = ca * cb
            items.extend((p, c) for p in shuffle_basis(a, b))
    return HopfElement(items, x.G)


def internal_product(x: HopfElement, y: HopfElement) -> HopfElement:
    x._same(y)
    degs = x.degrees() | y.degrees()
    if len(degs) > 1:
        raise HopfError(f"internal product needs one common degree, got {sorted(degs)}")
    return HopfElement(
        [(cmul(x.G, a, b), ca * cb) for a, ca in x.terms.items() for b, cb in y.terms.items()], x.G)


def split(a: CPerm, i: int) -> tuple[CPerm, CPerm]:
    """``(α_(i), α_(n-i))``: standardized subwords of values ``<= i`` and ``> i``."""
    lo = [(x, g) for x, g in zip(a.window, a.colours) if x <= i]
    hi = [(x, g) for x, g in zip(a.window, a.colours) if x > i]
    return (CPerm(tuple(x for x, _ in lo), tuple(g for _, g in lo)),
            CPerm(tuple(x - i for x, _ in hi), tuple(g for _, g in hi)))


def split_via_inverse(a: CPerm, i: int, G: ColourGroup) -> tuple[CPerm, CPerm]:
    """Same as ``split``, read off the ``(i, n-i)``-components of ``α⁻¹``."""
    n = len(a.window)
    _, v = coloured_c_components(cinv(G, a), (i, n - i))
    left, right = split_cross(cinv(G, v), (i, n - i))
    return left, right


def coproduct(x: HopfElement) -> Tensor:
    items = []
    for a, c in x.terms.items():
        for i in range(len(a.window) + 1):
            items.append((split(a, i), c))
    return Tensor(items, x.G)


def counit(x: HopfElement) -> Fraction:
    return x.coefficient(EMPTY)


@lru_cache(maxsize=None)
def _antipode_basis(a: CPerm, G: ColourGroup) -> tuple:
    # m(S ⊗ id)Δ(α) = 0 for deg α > 0, solved for the i = n term
    if not a.window:
        return ((EMPTY, Fraction(1)),)
    items = []
    for i in range(len(a.window)):
        left, right = split(a, i)
        for p, c in _antipode_basis(left, G):
            items.extend((q, -c) for q in shuffle_basis(p, right))
    return tuple(_accumulate(items).items())


def antipode(x: HopfElement) -> HopfElement:
    items = []
    for a, c in x.terms.items():
        items.extend((p, c * d) for p, d in _antipode_basis(a, x.G))
    return HopfElement(items, x.G)


def tensor_product(s: Tensor, t: Tensor) -> Tensor:
    """Componentwise external product of two tensors of equal arity."""
    items = []
    for ks, cs in s.terms.items():
        for kt, ct in t.terms.items():
            parts = [shuffle_basis(a, b) for a, b in zip(ks, kt)]
            c = cs * ct
            stack = [()]
            for opts in parts:
                stack = [k + (p,) for k in stack for p in opts]
            items.extend((k, c) for k in stack)
    return Tensor(items, s.G)


def apply_on(t: Tensor, slot: int, f) -> Tensor:
    """Apply a linear map ``f: HopfElement -> HopfElement | Tensor`` in one tensor slot."""
    items = []
    for k, c in t.terms.items():
        img = f(HopfElement.basis(k[slot], t.G))
        if isinstance(img, Tensor):
            items.extend((k[:slot] + kk + k[slot + 1:], c * cc) for kk, cc in img.terms.items())
        else:
            items.extend((k[:slot] + (p,) + k[slot + 1:], c * cc) for p, cc in img.terms.items())
    return Tensor(items, t.G)


def multiply_pairs(t: Tensor) -> HopfElement:
    return HopfElement([(p, c) for (a, b), c in t.terms.items() for p in shuffle_basis(a, b)], t.G)


# ----------------------------------------------------------------- morphisms

def forgetful(x: HopfElement) -> HopfElement:
    return HopfElement([(CPerm(a.window, (0,) * len(a.window)), c) for a, c in x.terms.items()], TRIVIAL)


def mu_g(x: HopfElement, g, G: ColourGroup) -> HopfElement:
    """Paint every letter with colour ``g`` (a colour tuple or its rank)."""
    if not x.G.is_trivial:
        raise GroupMismatchError("mu_g expects an element over the trivial group")
    r = g if isinstance(g, int) else G.order_key(g)
    return HopfElement([(CPerm(a.window, (r,) * len(a.window)), c) for a, c in x.terms.items()], G)


def pushforward(f: GroupHom, x: HopfElement) -> HopfElement:
    if x.G != f.source:
        raise GroupMismatchError(f"element over {x.G}, map from {f.source}")
    rm = f.rank_map()
    return HopfElement([(CPerm(a.window, tuple(rm[g] for g in a.colours)), c) for a, c in x.terms.items()], f.target)


# -------------------------------------------------------------- class sums

@dataclass
class _Degree:
    labels: np.ndarray
    firsts: np.ndarray
    values: list
    sizes: np.ndarray
    names: list | None = None

    @property
    def dim(self) -> int:
        return len(self.firsts)


class ClassBasis:
    """Class sums ``b_e = Σ_{ρ(α)=e} α`` of a statistic or relation, degree by degree.

    Blocks in degree ``n`` are numbered by their smallest element.
    """

    def __init__(self, spec: str, G: ColourGroup = TRIVIAL):
        self.map = spec if isinstance(spec, GradedMap) else GradedMap(spec, G)
        self.G = self.map.G
        self._deg: dict[int, _Degree] = {}
        self._raw: dict = {}

    def __str__(self):
        return str(self.map)

    def degree(self, n: int) -> _Degree:
        if n not in self._deg:
            labels = self.map.partition(n).labels
            _, firsts = np.unique(labels, return_index=True)
            U = universe(n, self.G)
            values = [self.map(U[int(k)]) for k in firsts]
            self._deg[n] = _Degree(labels, firsts, values, np.bincount(labels))
        return self._deg[n]

    def dim(self, n: int) -> int:
        return self.degree(n).dim

    def values(self, n: int) -> list:
        return self.degree(n).values

    def index(self, value, n: int) -> int | None:
        try:
            return self.degree(n).values.index(value)
        except ValueError:
            return None

    def block(self, k: int, n: int) -> list[CPerm]:
        U = universe(n, self.G)
        return [U[int(i)] for i in np.nonzero(self.degree(n).labels == k)[0]]

    def element(self, k: int, n: int) -> HopfElement:
        return HopfElement({a: 1 for a in self.block(k, n)}, self.G)

    def class_sum(self, value, n: int) -> HopfElement:
        k = self.index(value, n)
        if k is None:
            warnings.warn(f"{value!r} is not a value of {self} in degree {n}; returning zero")
            return HopfElement.zero(self.G)
        return self.element(k, n)

    def label(self, k: int, n: int) -> str:
        return self.labels(n)[k]

    def labels(self, n: int) -> list[str]:
        d = self.degree(n)
        if d.names is None:
            d.names = [f"{n}:{json.dumps(self.map.value_json(v), separators=(',', ':'))}" for v in d.values]
        return d.names

    def express_vector(self, vec: np.ndarray, n: int) -> np.ndarray:
        """Coordinates of a dense degree-``n`` vector, or ``NotInSpan``."""
        d = self.degree(n)
        coeff = vec[d.firsts]
        bad = np.nonzero(vec != coeff[d.labels])[0]
        if len(bad):
            U = universe(n, self.G)
            x = int(bad[0])
            k = int(d.labels[x])
            y = int(d.firsts[k])
            raise NotInSpan(f"coefficients differ inside class {self.label(k, n)}", {
                "element": to_json(U[x], self.G), "coeff": str(vec[x]),
                "same_class_as": to_json(U[y], self.G), "other_coeff": str(vec[y]),
            })
        return coeff

    def express(self, x: HopfElement) -> dict:
        """``{(n, k): coefficient}`` with ``x = Σ c b_k``; raises ``NotInSpan``."""
        out = {}
        for n in sorted(x.degrees()):
            U = universe(n, self.G)
            vec = np.zeros(U.N, dtype=object)
            for a, c in x.terms.items():
                if len(a.window) == n:
                    vec[U.index(a)] = c
            vec[vec == 0] = Fraction(0)
            coeff = self.express_vector(vec, n)
            out.update({(n, k): c for k, c in enumerate(coeff) if c})
        return out


@lru_cache(maxsize=64)
def class_basis(spec: str, G: ColourGroup = TRIVIAL) -> ClassBasis:
    """Shared instance, so partitions and constants are computed once."""
    return ClassBasis(spec, G)


def class_sum(spec: str, value, n: int, G: ColourGroup = TRIVIAL) -> HopfElement:
    return class_basis(spec, G).class_sum(value, n)


# ---------------------------------------------------------- structure tables

@dataclass
class StructureTable:
    basis: str
    mode: str
    group: str
    degrees: tuple
    entries: dict = field(default_factory=dict)  # (left, right, out) labels -> int

    def nonnegative_integer(self) -> bool:
        return all(isinstance(v, (int, np.integer)) and v >= 0 for v in self.entries.values())

    def zero_one(self) -> bool:
        return all(v in (0, 1) for v in self.entries.values())

    def rows(self) -> list[tuple]:
        return sorted((l, r, o, int(v)) for (l, r, o), v in self.entries.items())

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["left", "right", "out", "count"])
        w.writerows(self.rows())
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "basis": self.basis, "mode": self.mode, "group": self.group, "degrees": list(self.degrees),
            "entries": [{"left": l, "right": r, "out": o, "count": c} for l, r, o, c in self.rows()],
        }


MODES = ("internal", "external", "coproduct")


def _internal_raw(B: ClassBasis, n: int) -> dict:
    d = B.degree(n)
    U = universe(n, B.G)
    out = {}
    for L in range(d.dim):
        rows = np.nonzero(d.labels == L)[0]
        counts = U.product_counts(rows, d.labels, d.dim)
        coeff = counts[:, d.firsts]
        bad = np.argwhere(counts != coeff[:, d.labels])
        if len(bad):
            R = int(bad[0][0])
            try:
                B.express_vector(counts[R], n)
            except NotInSpan as exc:
                exc.witness.update(left=B.label(L, n), right=B.label(R, n))
                raise
        for R, e in np.argwhere(coeff):
            out[((n, L), (n, int(R)), (n, int(e)))] = int(coeff[R, e])
    return out


def _external_raw(B: ClassBasis, n1: int, n2: int) -> dict:
    n = n1 + n2
    U = universe(n, B.G)
    out = {}
    for L in range(B.dim(n1)):
        left = B.block(L, n1)
        for R in range(B.dim(n2)):
            vec = np.zeros(U.N, dtype=np.int64)
            for a in left:
                for b in B.block(R, n2):
                    for p in shuffle_basis(a, b):
                        vec[U.index(p)] += 1
            try:
                coeff = B.express_vector(vec, n)
            except NotInSpan as exc:
                exc.witness.update(left=B.label(L, n1), right=B.label(R, n2))
                raise
            for e in np.nonzero(coeff)[0]:
                out[((n1, L), (n2, R), (n, int(e)))] = int(coeff[e])
    return out


def _split_indices(n: int, i: int, G: ColourGroup) -> tuple[np.ndarray, np.ndarray]:
    U, Ul, Ur = universe(n, G), universe(i, G), universe(n - i, G)
    li = np.empty(U.N, dtype=np.int64)
    ri = np.empty(U.N, dtype=np.int64)
    for k, a in enumerate(U.elements):
        x, y = split(a, i)
        li[k], ri[k] = Ul.index(x), Ur.index(y)
    return li, ri


def _coproduct_raw(B: ClassBasis, n: int) -> dict:
    """``a^e_{e1,e2}`` keyed as ``(e1, e2, e)``."""
    d = B.degree(n)
    out = {}
    for i in range(n + 1):
        dl, dr = B.degree(i), B.degree(n - i)
        li, ri = _split_indices(n, i, B.G)
        nl, nr = len(dl.labels), len(dr.labels)
        for e in range(d.dim):
            mask = d.labels == e
            M = np.bincount(li[mask] * nr + ri[mask], minlength=nl * nr).reshape(nl, nr)
            coeff = M[np.ix_(dl.firsts, dr.firsts)]
            bad = np.argwhere(M != coeff[np.ix_(dl.labels, dr.labels)])
            if len(bad):
                x, y = (int(t) for t in bad[0])
                Ul, Ur = universe(i, B.G), universe(n - i, B.G)
                raise NotInSpan(f"Δ of {B.label(e, n)} is not block constant", {
                    "class": B.label(e, n), "i": i,
                    "pair": [to_json(Ul[x], B.G), to_json(Ur[y], B.G)], "count": int(M[x, y]),
                    "representative_count": int(coeff[dl.labels[x], dr.labels[y]]),
                })
            for a, b in np.argwhere(coeff):
                out[((i, int(a)), (n - i, int(b)), (n, e))] = int(coeff[a, b])
    return out


def raw_constants(B: "ClassBasis", mode: str, degrees) -> dict:
    """Structure constants keyed by ``((deg, block), (deg, block), (deg, block))``.

    For products the key is ``(left, right, out)``; for the coproduct it is
    ``(e1, e2, e)`` with ``Δ b_e = Σ a b_e1 ⊗ b_e2``.  Cached on ``B``.
    """
    key = (mode, degrees if mode == "external" else int(degrees))
    if key not in B._raw:
        if mode == "internal":
            B._raw[key] = _internal_raw(B, key[1])
        elif mode == "coproduct":
            B._raw[key] = _coproduct_raw(B, key[1])
        elif mode == "external":
            n1, n2 = degrees
            B._raw[key] = _external_raw(B, n1, n2)
        else:
            raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    return B._raw[key]


def structure_constants(spec, mode: str, degrees, G: ColourGroup = TRIVIAL) -> StructureTable:
    """Integer structure constants of a class-sum basis; ``NotInSpan`` if not closed.

    ``degrees`` is ``n`` for internal and coproduct, ``(n1, n2)`` for external.
    """
    B = spec if isinstance(spec, ClassBasis) else ClassBasis(spec, G)
    raw = raw_constants(B, mode, tuple(degrees) if mode == "external" else degrees)
    T = StructureTable(str(B), mode, str(B.G), tuple(degrees) if mode == "external" else (int(degrees),))
    for (l, r, o), v in raw.items():
        T.entries[(B.label(l[1], l[0]), B.label(r[1], r[0]), B.label(o[1], o[0]))] = v
    return T


def _merge(tables: Sequence[StructureTable], mode, B, degrees) -> StructureTable:
    T = StructureTable(str(B), mode, str(B.G), degrees)
    for t in tables:
        T.entries.update(t.entries)
    return T


def verify_closure(spec, mode: str, n: int, G: ColourGroup = TRIVIAL) -> PropertyReport:
    """Closure of the class-sum span in degree ``n``.

    ``external`` covers every split ``n = n1 + n2`` with both parts positive.
    """
    B = spec if isinstance(spec, ClassBasis) else ClassBasis(spec, G)
    params = {"basis": str(B), "mode": mode, "n": n, "group": str(B.G)}
    try:
        if mode == "external":
            parts = [structure_constants(B, mode, (k, n - k)) for k in range(1, n)]
            table = _merge(parts, mode, B, (n,))
        else:
            table = structure_constants(B, mode, n)
    except NotInSpan as exc:
        return PropertyReport("CLOSURE", False, params, exc.witness)
    details = {
        "dimension": B.dim(n),
        "nonnegative_integer": table.nonnegative_integer(),
        "zero_one": table.zero_one(),
        "entries": len(table.entries),
        "table": table.to_json(),
    }
    if mode == "internal":
        e = B.degree(n)
        k = int(e.labels[universe(n, B.G).index(cidentity(n))])
        details["has_unit"] = bool(e.sizes[k] == 1)
    ok = table.nonnegative_integer()
    if not ok:
        return PropertyReport("CLOSURE", False, params, {"reason": "negative or non-integer constant"}, details)
    return PropertyReport("CLOSURE", True, params, details=details)


# ------------------------------------------------------------ free generation

def free_series(degrees: Iterable[int], nmax: int) -> list[int]:
    """Number of words in the generators of each total degree ``0..nmax``."""
    degs = list(degrees)
    out = [1] + [0] * nmax
    for n in range(1, nmax + 1):
        out[n] = sum(out[n - d] for d in degs if 1 <= d <= n)
    return out


def _vector(x: HopfElement, n: int) -> list:
    U = universe(n, x.G)
    v = [0] * U.N
    for a, c in x.terms.items():
        v[U.index(a)] = c
    return v


def free_generation_report(generators: Sequence[HopfElement], nmax: int, targets: dict | None = None) -> dict:
    """Compare the span of all words in ``generators`` with the free series.

    The check passes when, for each degree, the words are linearly
    independent (rank equals the number of words) and, if ``targets`` gives
    expected dimensions, the rank matches them too.
    """
    if not generators:
        raise ValueError("need at least one generator")
    G = generators[0].G
    gens = []
    for g in generators:
        degs = g.degrees()
        if len(degs) != 1:
            raise HopfError("generators must be homogeneous and non-zero")
        gens.append((degs.pop(), g))
    series = free_series([d for d, _ in gens], nmax)
    words: dict[int, list[HopfElement]] = {0: [HopfElement.unit(G)]}
    rows = []
    ok = True
    for n in range(1, nmax + 1):
        words[n] = [w * g for d, g in gens if d <= n for w in words[n - d]]
        vecs = [_vector(w, n) for w in words[n]]
        r = linalg.rank_mod_p(vecs)
        if r < len(vecs):
            r = linalg.rank(vecs)
        row = {"n": n, "words": len(vecs), "free_series": series[n], "rank": r}
        good = r == len(vecs) == series[n]
        if targets and n in targets:
            row["target"] = targets[n]
            good = good and r == targets[n]
        row["verdict"] = "PASS" if good else "FAIL"
        ok = ok and good
        rows.append(row)
    return {"verdict": "PASS" if ok else "FAIL", "degrees": rows}


# --------------------------------------------------------------- Hopf axioms

def _fail(axiom, a, G, **extra):
    return {"axiom": axiom, "verdict": "FAIL", "element": [to_json(x, G) for x in a], **extra}


def check_hopf_axioms(nmax: int, G: ColourGroup = TRIVIAL) -> dict:
    """Exhaustive check on basis elements of degree ``<= nmax``."""
    from .perms import all_cperms

    elems = {n: list(all_cperms(n, G)) for n in range(nmax + 1)}
    counts = dict.fromkeys(("coassociative", "counit", "antipode", "bialgebra"), 0)
    for n in range(nmax + 1):
        for a in elems[n]:
            x = HopfElement.basis(a, G)
            D = coproduct(x)
            if apply_on(D, 0, coproduct) != apply_on(D, 1, coproduct):
                return _fail("coassociative", [a], G)
            counts["coassociative"] += 1
            left = HopfElement([(k[1], c * (k[0] == EMPTY)) for k, c in D.terms.items()], G)
            right = HopfElement([(k[0], c * (k[1] == EMPTY)) for k, c in D.terms.items()], G)
            if left != x or right != x:
                return _fail("counit", [a], G)
            counts["counit"] += 1
            eps = HopfElement.unit(G) * counit(x)
            if multiply_pairs(apply_on(D, 0, antipode)) != eps or multiply_pairs(apply_on(D, 1, antipode)) != eps:
                return _fail("antipode", [a], G)
            counts["antipode"] += 1
    for n in range(nmax + 1):
        for m in range(nmax + 1 - n):
            for a in elems[n]:
                Da = coproduct(HopfElement.basis(a, G))
                for b in elems[m]:
                    lhs = coproduct(external_product(HopfElement.basis(a, G), HopfElement.basis(b, G)))
                    if lhs != tensor_product(Da, coproduct(HopfElement.basis(b, G))):
                        return _fail("bialgebra", [a, b], G)
                    counts["bialgebra"] += 1
    return {"verdict": "PASS", "nmax": nmax, "group": str(G), "checked": counts}
