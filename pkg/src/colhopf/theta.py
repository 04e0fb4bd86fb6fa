"""The descent-to-peak morphism Θ_G on Σ(G) and its dual.

Σ(G) elements are handled in d^G-coordinates: dicts ``{G-composition: coeff}``.
Products and coproducts use the structure constants computed by
``hopf.raw_constants``, so nothing here assumes a product formula.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from . import linalg
from .compositions import (
    comp_subset, g_compositions, gcomp_rainbow, lambda_map, phi_set, subset_comp,
)
from .groups import ColourGroup, TRIVIAL
from .hopf import HopfElement, class_basis, raw_constants

Coords = dict  # {GComposition: Fraction}


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


def add(*xs: Coords, scale=None) -> Coords:
    out: dict = {}
    for i, x in enumerate(xs):
        s = 1 if scale is None else scale[i]
        for k, v in x.items():
            out[k] = out.get(k, 0) + s * v
    return _clean(out)


def weight(cg) -> int:
    return sum(p for p, _ in cg)


class SigmaG:
    """Σ(G) in the d^G basis, indexed by G-compositions."""

    def __init__(self, G: ColourGroup = TRIVIAL):
        self.G = G
        self.B = class_basis("D", G)
        self._index: dict = {}
        self._tables: dict = {}
        self._antipodes: dict = {}

    def value(self, cg):
        """The D_G statistic value whose fiber is ``d^G_{cg}``."""
        if self.G.is_trivial:
            return tuple(p for p, _ in cg)
        return tuple((tuple(c), g) for c, g in gcomp_rainbow(cg))

    def _degree(self, n: int):
        if n not in self._index:
            to_block = {}
            for cg in g_compositions(n, self.G):
                to_block[cg] = self.B.index(self.value(cg), n)
            self._index[n] = (to_block, {k: cg for cg, k in to_block.items()})
        return self._index[n]

    def block(self, cg) -> int:
        return self._degree(weight(cg))[0][tuple(cg)]

    def gcomp(self, n: int, k: int):
        return self._degree(n)[1][k]

    def basis(self, n: int) -> list:
        return g_compositions(n, self.G)

    def element(self, x: Coords) -> HopfElement:
        out = HopfElement.zero(self.G)
        for cg, c in x.items():
            out = out + self.B.element(self.block(cg), weight(cg)) * c
        return out

    def coords(self, x: HopfElement) -> Coords:
        return {self.gcomp(n, k): c for (n, k), c in self.B.express(x).items()}

    def _product_table(self, n1: int, n2: int) -> dict:
        if (n1, n2) not in self._tables:
            table: dict = {}
            for (l, r, o), v in raw_constants(self.B, "external", (n1, n2)).items():
                table.setdefault((l[1], r[1]), []).append((o[1], v))
            self._tables[n1, n2] = table
        return self._tables[n1, n2]

    def product(self, x: Coords, y: Coords) -> Coords:
        out: dict = {}
        for a, ca in x.items():
            for b, cb in y.items():
                n1, n2 = weight(a), weight(b)
                if n1 == 0 or n2 == 0:
                    key = b if n1 == 0 else a
                    out[key] = out.get(key, 0) + ca * cb
                    continue
                t = self._product_table(n1, n2)
                for e, v in t.get((self.block(a), self.block(b)), ()):
                    cg = self.gcomp(n1 + n2, e)
                    out[cg] = out.get(cg, 0) + ca * cb * v
        return _clean(out)

    def coproduct(self, x: Coords) -> dict:
        """``{(c1, c2): coeff}``."""
        out: dict = {}
        for e, ce in x.items():
            n = weight(e)
            for (l, r, o), v in raw_constants(self.B, "coproduct", n).items():
                if o[1] != self.block(e):
                    continue
                key = (self.gcomp(*l), self.gcomp(*r))
                out[key] = out.get(key, 0) + ce * v
        return _clean(out)

    def antipode_basis(self, e) -> Coords:
        e = tuple(e)
        if e not in self._antipodes:
            if not e:
                self._antipodes[e] = {(): Fraction(1)}
            else:
                # m(S ⊗ id)Δ = 0 above degree 0, solved for the term with S(d_e)
                parts = [self.product(self.antipode_basis(c1), {c2: Fraction(v)})
                         for (c1, c2), v in self.coproduct({e: Fraction(1)}).items() if c2]
                self._antipodes[e] = add(*parts, scale=[-1] * len(parts))
        return self._antipodes[e]

    def antipode(self, x: Coords) -> Coords:
        return add(*(self.antipode_basis(e) for e in x), scale=list(x.values())) if x else {}


@lru_cache(maxsize=None)
def sigma(G: ColourGroup = TRIVIAL) -> SigmaG:
    return SigmaG(G)


# ----------------------------------------------------------------- Θ itself

def _coarsenings(c) -> list[tuple]:
    """All ``e`` obtained by merging adjacent parts of ``c`` (``c`` included)."""
    cuts = sorted(comp_subset(c))
    n = sum(c)
    out = []
    for k in range(len(cuts) + 1):
        for keep in combinations(cuts, k):
            out.append(subset_comp(keep, n))
    return out


def peak_generator(n: int, g: int, G: ColourGroup = TRIVIAL) -> Coords:
    """``p̊^G_{(n)^g}`` in d^G-coordinates."""
    return dict(_peak_generator(n, g, G))


@lru_cache(maxsize=None)
def _peak_generator(n, g, G) -> tuple:
    value = (n,) if G.is_trivial else (((n,), g),)
    return tuple(sigma(G).coords(class_basis("IP", G).class_sum(value, n)).items())


def theta_generator_word(c, g: int, scalar, G: ColourGroup) -> Coords:
    """``Θ(d^G_{c^g})`` for a single colour ``g``, by Möbius inversion of
    ``d_{(c1)} * ... * d_{(ck)} = Σ_{e coarser than c} d_e``."""
    S = sigma(G)
    out = []
    signs = []
    for e in _coarsenings(c):
        term = {(): Fraction(1)}
        for part in e:
            term = S.product(term, {k: v * scalar for k, v in peak_generator(part, g, G).items()})
        out.append(term)
        signs.append((-1) ** (len(c) - len(e)))
    return add(*out, scale=signs)


def theta_basis(cg, scalar=2, G: ColourGroup = TRIVIAL) -> Coords:
    """Θ(d^G_{cg}) as the product of its rainbow blocks."""
    return dict(_theta_basis(tuple(cg), Fraction(scalar), G))


@lru_cache(maxsize=None)
def _theta_basis(cg, scalar, G) -> tuple:
    S = sigma(G)
    out = {(): Fraction(1)}
    for c, g in gcomp_rainbow(cg):
        out = S.product(out, theta_generator_word(c, g, scalar, G))
    return tuple(out.items())


def theta(x, scalar=2, G: ColourGroup | None = None) -> Coords:
    """Θ_G extended from the generators as an algebra map.

    ``x`` is a HopfElement (expressed in the d^G basis first) or coordinates.
    """
    if isinstance(x, HopfElement):
        G = x.G
        x = sigma(G).coords(x)
    G = G or TRIVIAL
    parts = [theta_basis(cg, scalar, G) for cg in x]
    return add(*parts, scale=list(x.values()))


def theta_closed(cg, G: ColourGroup = TRIVIAL) -> Coords:
    """Closed form: blockwise sum over ``Φ`` with weight ``2^{Σ τ(Λ(e_i))}``."""
    blocks = gcomp_rainbow(tuple(cg))
    terms = [((), 0)]
    for c, g in blocks:
        terms = [(acc + tuple((p, g) for p in e), t + len(lambda_map(e)))
                 for acc, t in terms for e in phi_set(c, "forward")]
    out: dict = {}
    for e, t in terms:
        out[e] = out.get(e, 0) + Fraction(2) ** t
    return out


def theta_dual(cg, G: ColourGroup = TRIVIAL) -> Coords:
    """Θ*_G(F_{cg}) in F-coordinates."""
    blocks = gcomp_rainbow(tuple(cg))
    scale = Fraction(2) ** sum(len(lambda_map(c)) for c, _ in blocks)
    terms = [()]
    for c, g in blocks:
        terms = [acc + tuple((p, g) for p in e) for acc in terms for e in phi_set(c, "dual")]
    out: dict = {}
    for e in terms:
        out[e] = out.get(e, 0) + scale
    return out


def pairing(F: Coords, d: Coords) -> Fraction:
    """``⟨F_c, d_e⟩ = δ_{c,e}`` extended bilinearly."""
    return sum((v * d.get(k, 0) for k, v in F.items()), Fraction(0))


def _tensor_theta(t: dict, scalar, G) -> dict:
    out: dict = {}
    for (a, b), v in t.items():
        ta, tb = theta_basis(a, scalar, G), theta_basis(b, scalar, G)
        for x, cx in ta.items():
            for y, cy in tb.items():
                out[(x, y)] = out.get((x, y), 0) + v * cx * cy
    return _clean(out)


# ------------------------------------------------------------------- checks

def check_closed_form(nmax: int, G: ColourGroup = TRIVIAL, scalar=2) -> dict:
    """theta_closed against the generator extension for every weight ``<= nmax``."""
    for n in range(1, nmax + 1):
        for cg in g_compositions(n, G):
            if theta_basis(cg, scalar, G) != theta_closed(cg, G):
                return {"verdict": "FAIL", "scalar": str(scalar), "witness": {
                    "gcomposition": [list(p) for p in cg],
                    "generator": _coords_json(theta_basis(cg, scalar, G)),
                    "closed": _coords_json(theta_closed(cg, G)),
                }}
    return {"verdict": "PASS", "scalar": str(scalar), "nmax": nmax, "group": str(G)}


def check_hopf_morphism(nmax: int, G: ColourGroup = TRIVIAL, scalar=2) -> dict:
    S = sigma(G)
    for n in range(1, nmax + 1):
        for cg in g_compositions(n, G):
            lhs = _tensor_theta(S.coproduct({cg: Fraction(1)}), scalar, G)
            rhs = S.coproduct(theta_basis(cg, scalar, G))
            if lhs != rhs:
                return {"verdict": "FAIL", "scalar": str(scalar), "witness": {"gcomposition": [list(p) for p in cg]}}
    return {"verdict": "PASS", "scalar": str(scalar), "nmax": nmax, "group": str(G)}


def _matrix(rows: list[Coords], basis: list) -> list[list[Fraction]]:
    return [[r.get(b, Fraction(0)) for b in basis] for r in rows]


def image_report(nmax: int, G: ColourGroup = TRIVIAL, scalar=2) -> dict:
    """Per degree: rank of Θ(Σ_n), dim P̊_n(G), and whether the spans agree."""
    S = sigma(G)
    P = class_basis("IP", G)
    rows, ok = [], True
    for n in range(1, nmax + 1):
        basis = S.basis(n)
        im = _matrix([theta_basis(cg, scalar, G) for cg in basis], basis)
        pk = _matrix([S.coords(P.element(k, n)) for k in range(P.dim(n))], basis)
        r_im, r_pk, r_both = linalg.rank(im), linalg.rank(pk), linalg.rank(im + pk)
        good = r_im == r_pk == r_both
        ok = ok and good
        rows.append({"n": n, "image_rank": r_im, "peak_dim": r_pk, "joint_rank": r_both,
                     "verdict": "PASS" if good else "FAIL"})
    return {"verdict": "PASS" if ok else "FAIL", "degrees": rows}


def check_adjoint(nmax: int, G: ColourGroup = TRIVIAL) -> dict:
    """⟨Θ* F_c, d_e⟩ = ⟨F_c, Θ d_e⟩ over all pairs of equal weight.

    The right side uses the generator extension of Θ, not the closed form.
    """
    for n in range(1, nmax + 1):
        basis = g_compositions(n, G)
        for c in basis:
            left = theta_dual(c, G)
            for e in basis:
                d_e = {e: Fraction(1)}
                if pairing(left, d_e) != pairing({c: Fraction(1)}, theta_basis(e, 2, G)):
                    return {"verdict": "FAIL", "witness": {"c": [list(p) for p in c], "e": [list(p) for p in e]}}
    return {"verdict": "PASS", "nmax": nmax, "group": str(G)}


def dual_image_report(nmax: int, G: ColourGroup = TRIVIAL) -> dict:
    P = class_basis("IP", G)
    rows, ok = [], True
    for n in range(1, nmax + 1):
        basis = g_compositions(n, G)
        r = linalg.rank(_matrix([theta_dual(c, G) for c in basis], basis))
        good = r == P.dim(n)
        ok = ok and good
        rows.append({"n": n, "rank": r, "peak_dim": P.dim(n), "verdict": "PASS" if good else "FAIL"})
    return {"verdict": "PASS" if ok else "FAIL", "degrees": rows}


def _coords_json(x: Coords) -> list:
    return [{"gcomposition": [list(p) for p in k], "coeff": f"{v.numerator}/{v.denominator}"}
            for k, v in sorted(x.items())]

