"""Elementary relations on S_n and G_n, their closures, and the checkers for
left-connectedness, the induction / restriction / freeness properties, the
coincidence of the two coloured liftings, and the ψ involutions.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Hashable

import numpy as np

from . import kernels
from .compositions import rainbow
from .groups import ColourGroup, TRIVIAL
from .perms import (
    CPerm, cinv, cleft, cmul, coset_reps, ccross, cright, inverse, left_s,
    multiply, plain, simple, std, to_json,
)
from .statistics import (
    UnsupportedKindError, canonical_stat, des_B, stat_fn, type_b_generators, value_to_json,
)
from .universe import canonical, universe

BASE_TAGS = ("D", "IP", "EP", "SYLV", "TOY12")
LIFTS = ("LiftCong", "LiftCongBis", "LiftBlock")

_TAG_ALIASES = {
    "d": "D", "descent": "D", "descents": "D",
    "ip": "IP", "ipeak": "IP", "peak": "IP", "interior": "IP",
    "ep": "EP", "epeak": "EP", "p": "EP", "exterior": "EP",
    "sylv": "SYLV", "t": "SYLV", "tree": "SYLV", "sylvester": "SYLV",
    "toy12": "TOY12", "toy": "TOY12",
    "desb": "DESB", "b": "DESB",
}

# statistic whose fibers a base relation is expected to produce
STAT_OF = {"D": "D", "IP": "IP", "EP": "EP", "SYLV": "T", "DESB": "DESB"}


class RelationError(ValueError):
    pass


@dataclass(frozen=True)
class Relation:
    tag: str
    base: str | None = None  # set for the lifted relations

    def __str__(self) -> str:
        return f"{self.tag}({self.base})" if self.base else self.tag

    @property
    def lifted(self) -> bool:
        return self.tag in LIFTS


def parse_relation(text) -> Relation:
    if isinstance(text, Relation):
        return text
    s = text.strip()
    m = re.fullmatch(r"(\w+)\s*\(\s*(\w+)\s*\)", s)
    if m:
        wrap = {w.lower(): w for w in LIFTS}.get(m.group(1).lower())
        base = _TAG_ALIASES.get(m.group(2).lower())
        if wrap is None or base not in BASE_TAGS:
            raise RelationError(f"cannot parse relation {text!r}")
        return Relation(wrap, base)
    tag = _TAG_ALIASES.get(s.lower())
    if tag is None:
        raise RelationError(f"unknown relation {text!r}")
    return Relation(tag)


def _positions(w) -> dict:
    return {x: k for k, x in enumerate(w)}


def base_elementary(tag: str, w, i: int) -> bool:
    """``w ~ s_i w`` for the uncoloured relations, on a permutation word."""
    n = len(w)
    if not 1 <= i <= n - 1:
        raise RelationError(f"reflection index {i} out of range for degree {n}")
    pos = _positions(w)
    a, b = pos[i], pos[i + 1]
    far = abs(a - b) > 1
    if tag == "D":
        return far
    if tag == "IP":
        return far or i == 1
    if tag == "EP":
        return far or (i == 1 and {w[0], w[1]} != {1, 2})
    if tag == "SYLV":
        # the tree splits at the smallest letter, so i and i+1 stay in
        # separate subtrees exactly when a smaller letter sits between them
        lo, hi = min(a, b), max(a, b)
        return any(w[k] < i for k in range(lo, hi + 1))
    if tag == "TOY12":
        return {a, b} == {0, 1}
    raise RelationError(f"{tag} is not a type A relation")


@lru_cache(maxsize=None)
def _rho_labels(tag: str, m: int) -> dict:
    """Closure class of every permutation of degree ``m`` under a base relation."""
    part = classes(Relation(tag), m, TRIVIAL)
    U = universe(m, TRIVIAL)
    return {U[k].window: int(part.labels[k]) for k in range(U.N)}


def _block_ids(colours) -> list[int]:
    out, b = [], -1
    for k, g in enumerate(colours):
        if k == 0 or g != colours[k - 1]:
            b += 1
        out.append(b)
    return out


def lift_elementary(rel: Relation, a: CPerm, i: int) -> bool:
    """The coloured lifts of a base relation.

    ``LiftCong`` compares ρ on the whole underlying permutation, ``LiftCongBis``
    asks for a one-step base relation there, and ``LiftBlock`` compares ρ on
    the standardized rainbow block holding ``i`` and ``i+1``.  Letters in
    different blocks are always related.
    """
    w = a.window
    n = len(w)
    if not 1 <= i <= n - 1:
        raise RelationError(f"reflection index {i} out of range for degree {n}")
    bid = _block_ids(a.colours)
    pos = _positions(w)
    if bid[pos[i]] != bid[pos[i + 1]]:
        return True
    if rel.tag == "LiftCongBis":
        return base_elementary(rel.base, w, i)
    if rel.tag == "LiftCong":
        rho = _rho_labels(rel.base, n)
        return rho[w] == rho[left_s(i, w)]
    if rel.tag == "LiftBlock":
        b = bid[pos[i]]
        block = [w[k] for k in range(n) if bid[k] == b]
        s = std(block)
        j = s[block.index(i)]  # i, i+1 standardize to j, j+1
        rho = _rho_labels(rel.base, len(block))
        return rho[s] == rho[left_s(j, s)]
    raise RelationError(f"{rel} is not a lifted relation")


def _desb_elementary(a: CPerm, i: int, G: ColourGroup) -> bool:
    n = len(a.window)
    gens = type_b_generators(n, G)
    if not 0 <= i <= n - 1:
        raise RelationError(f"reflection index {i} out of range for type B degree {n}")
    conj = cmul(G, cinv(G, a), cmul(G, gens[i], a))
    return conj not in gens


def _check_group(rel: Relation, G: ColourGroup):
    if rel.tag == "DESB":
        if G.moduli != (2,):
            raise RelationError("DESB needs G = Z2")
    elif not rel.lifted and not G.is_trivial:
        raise RelationError(f"{rel} is a type A relation; use LiftCong({rel.tag}) over {G}")


def elementary(rel, x, i: int, G: ColourGroup = TRIVIAL) -> bool:
    """``x ~ s_i x`` for one reflection (``s_0`` allowed for DESB)."""
    rel = parse_relation(rel)
    _check_group(rel, G)
    if rel.tag == "DESB":
        return _desb_elementary(x, i, G)
    if rel.lifted:
        return lift_elementary(rel, x if isinstance(x, CPerm) else plain(x), i)
    w = x.window if isinstance(x, CPerm) else tuple(x)
    return base_elementary(rel.tag, w, i)


def reflections(rel: Relation, n: int) -> range:
    return range(0 if rel.tag == "DESB" else 1, n)


# ------------------------------------------------------------------ partitions

@dataclass
class Partition:
    name: str
    n: int
    G: ColourGroup
    labels: np.ndarray  # canonical: blocks numbered by smallest element

    @property
    def n_blocks(self) -> int:
        return int(self.labels.max()) + 1 if len(self.labels) else 0

    def blocks(self) -> list[list[CPerm]]:
        U = universe(self.n, self.G)
        out = [[] for _ in range(self.n_blocks)]
        for k, lab in enumerate(self.labels):
            out[lab].append(U[k])
        return out

    def block_of(self, a: CPerm) -> int:
        return int(self.labels[universe(self.n, self.G).index(a)])

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and np.array_equal(self.labels, other.labels)

    def to_json(self) -> dict:
        return {
            "name": self.name, "n": self.n, "group": str(self.G),
            "blocks": [[to_json(a, self.G) for a in b] for b in self.blocks()],
        }


def classes(rel, n: int, G: ColourGroup = TRIVIAL, force: bool = False) -> Partition:
    """Connected components of the graph with edges ``{x, s_i x}``."""
    rel = parse_relation(rel)
    _check_group(rel, G)
    U = universe(n, G, force)
    src, dst = [], []
    for i in reflections(rel, n):
        target = U.left_s0 if i == 0 else U.left_s(i)
        hit = np.fromiter((elementary(rel, a, i, G) for a in U.elements), dtype=bool, count=U.N)
        src.append(np.nonzero(hit)[0])
        dst.append(target[hit])
    if src:
        s, d = np.concatenate(src), np.concatenate(dst)
    else:
        s = d = np.zeros(0, dtype=np.int64)
    lab = kernels.connected_labels(U.N, s, d)
    return Partition(str(rel), n, G, canonical(lab))


def fibers(stat: str, n: int, G: ColourGroup = TRIVIAL, force: bool = False) -> Partition:
    kind = canonical_stat(stat)
    U = universe(n, G, force)
    lab, _ = U.labels(stat_fn(kind, G))
    return Partition(kind, n, G, lab)


def _is_relation_spec(spec: str) -> bool:
    s = spec.strip()
    return "(" in s or s.upper() == "TOY12"


class GradedMap:
    """A statistic (fibers) or a relation (closure classes), degree by degree.

    Calling it on an element returns a hashable value: the statistic itself,
    or the class number for relations.
    """

    def __init__(self, spec: str, G: ColourGroup = TRIVIAL):
        self.spec, self.G = spec, G
        self.is_relation = _is_relation_spec(spec)
        if self.is_relation:
            self.rel = parse_relation(spec)
            _check_group(self.rel, G)
        else:
            self.kind = canonical_stat(spec)
            self._fn = stat_fn(self.kind, G)
        self._parts: dict = {}

    def __str__(self) -> str:
        return str(self.rel) if self.is_relation else self.kind

    def partition(self, n: int) -> Partition:
        if n not in self._parts:
            self._parts[n] = classes(self.rel, n, self.G) if self.is_relation else fibers(self.kind, n, self.G)
        return self._parts[n]

    def __call__(self, a: CPerm) -> Hashable:
        if self.is_relation:
            return self.partition(len(a.window)).block_of(a)
        return self._fn(a)

    def value_json(self, value):
        if self.is_relation:
            return value
        return value_to_json(self.kind, value, self.G)


# ------------------------------------------------------------------- reports

@dataclass
class PropertyReport:
    property: str
    verdict: bool
    params: dict = field(default_factory=dict)
    witness: dict | None = None
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.verdict and self.witness is None:
            raise ValueError("a failed report needs a witness")

    @property
    def status(self) -> str:
        return "PASS" if self.verdict else "FAIL"

    def to_json(self) -> dict:
        out = {"property": self.property, "verdict": self.status, "params": self.params, "witness": self.witness}
        if self.details:
            out["details"] = self.details
        return out


def _pair_witness(U, x, y, G):
    return to_json(U[x], G), to_json(U[y], G)


def mismatched_blocks(p: Partition, q: Partition) -> int:
    """Blocks of ``p`` that are not also blocks of ``q``."""
    bad = 0
    for b in range(p.n_blocks):
        mask = p.labels == b
        ql = np.unique(q.labels[mask])
        if len(ql) != 1 or int((q.labels == ql[0]).sum()) != int(mask.sum()):
            bad += 1
    return bad


def compare_partitions(p: Partition, q: Partition, prop: str, params: dict) -> PropertyReport:
    """PASS iff the partitions agree; otherwise a pair split by exactly one of them."""
    if p == q:
        return PropertyReport(prop, True, params, details={"blocks": p.n_blocks, "mismatched_blocks": 0})
    U = universe(p.n, p.G)
    bad = int(np.nonzero(p.labels != q.labels)[0][0])
    # bad is the first index whose canonical labels differ: some earlier
    # element shares its block in one partition but not in the other
    pa = np.nonzero(p.labels == p.labels[bad])[0]
    qa = np.nonzero(q.labels == q.labels[bad])[0]
    other = int(np.setxor1d(pa, qa)[0])
    x, y = _pair_witness(U, bad, other, p.G)
    witness = {
        "x": x, "y": y,
        f"same_in_{p.name}": bool(p.labels[bad] == p.labels[other]),
        f"same_in_{q.name}": bool(q.labels[bad] == q.labels[other]),
        "mismatched_blocks": mismatched_blocks(p, q),
    }
    return PropertyReport(prop, False, params, witness, {"blocks": [p.n_blocks, q.n_blocks]})


def check_connected(rel, stat: str, n: int, G: ColourGroup = TRIVIAL) -> PropertyReport:
    rel = parse_relation(rel)
    p, q = classes(rel, n, G), fibers(stat, n, G)
    params = {"relation": str(rel), "stat": canonical_stat(stat), "n": n, "group": str(G)}
    return compare_partitions(p, q, "CONNECTED", params)


def check_coincidence(base, n: int, G: ColourGroup = TRIVIAL) -> PropertyReport:
    rel = parse_relation(base)
    tag = rel.base if rel.lifted else rel.tag
    p = classes(Relation("LiftCong", tag), n, G)
    q = classes(Relation("LiftBlock", tag), n, G)
    return compare_partitions(p, q, "COINCIDE", {"base": tag, "n": n, "group": str(G)})


# --------------------------------------------------------- IP / RP / FP checks

def _induce(u, a: CPerm, b: CPerm) -> CPerm:
    return cleft(u, ccross(a, b))


def _restrict(a: CPerm, b: CPerm, u) -> CPerm:
    """``(α × β) u⁻¹``."""
    return cright(ccross(a, b), inverse(u))


def induction_image(rho: GradedMap, left: list[CPerm], right: list[CPerm], n: int, m: int) -> list[CPerm]:
    """``X_(n,m) (left × right)`` as a sorted list."""
    X = coset_reps((n, m))
    return sorted({_induce(u, a, b) for u in X for a in left for b in right})


def _check_ip(rho: GradedMap, n: int, m: int, params: dict) -> PropertyReport:
    G = rho.G
    Pn, Pm, Pnm = rho.partition(n), rho.partition(m), rho.partition(n + m)
    Unm = universe(n + m, G)
    fiber_size = np.bincount(Pnm.labels)
    bn, bm = Pn.blocks(), Pm.blocks()
    for e1, left in enumerate(bn):
        for e2, right in enumerate(bm):
            image = induction_image(rho, left, right, n, m)
            idx = np.array([Unm.index(a) for a in image])
            labs = np.unique(Pnm.labels[idx])
            if len(image) == int(fiber_size[labs].sum()):
                continue
            members = np.nonzero(np.isin(Pnm.labels, labs))[0]
            missing = Unm[int(np.setdiff1d(members, idx)[0])]
            witness = {
                "n": n, "m": m,
                "left_class": [to_json(a, G) for a in left],
                "right_class": [to_json(a, G) for a in right],
                "image": [to_json(a, G) for a in image],
                "missing": to_json(missing, G),
                "missing_value": rho.value_json(rho(missing)),
            }
            return PropertyReport("IP", False, params, witness)
    return PropertyReport("IP", True, params, details={"pairs": len(bn) * len(bm)})


def _check_rp(rho: GradedMap, n: int, m: int, params: dict) -> PropertyReport:
    G = rho.G
    Un, Um = universe(n, G), universe(m, G)
    ln, lm = rho.partition(n).labels, rho.partition(m).labels
    for u in coset_reps((n, m)):
        seen: dict = {}
        for ia, a in enumerate(Un.elements):
            for ib, b in enumerate(Um.elements):
                key = (int(ln[ia]), int(lm[ib]))
                val = rho(_restrict(a, b, u))
                if key not in seen:
                    seen[key] = (val, a, b)
                elif seen[key][0] != val:
                    v0, a0, b0 = seen[key]
                    witness = {
                        "n": n, "m": m, "u": list(u),
                        "alpha1": to_json(a0, G), "beta1": to_json(b0, G),
                        "alpha2": to_json(a, G), "beta2": to_json(b, G),
                        "value1": rho.value_json(v0), "value2": rho.value_json(val),
                    }
                    return PropertyReport("RP", False, params, witness)
    return PropertyReport("RP", True, params)


def _check_fp(rho: GradedMap, n: int, m: int, params: dict) -> PropertyReport:
    G = rho.G
    Un, Um = universe(n, G), universe(m, G)
    ln, lm = rho.partition(n).labels, rho.partition(m).labels
    js = [j for j in range(1, n + m) if j != n]
    for u in coset_reps((n, m)):
        for j in js:
            if u[j] != u[j - 1] + 1:  # u s_j u⁻¹ is not a simple reflection
                continue
            for ia, a in enumerate(Un.elements):
                for ib, b in enumerate(Um.elements):
                    v = ccross(a, b)
                    sv = cleft(simple(n + m, j), v)
                    if j < n:
                        ok = ln[Un.index(CPerm(sv.window[:n], sv.colours[:n]))] == ln[ia]
                    else:
                        rb = CPerm(tuple(x - n for x in sv.window[n:]), sv.colours[n:])
                        ok = lm[Um.index(rb)] == lm[ib]
                    if not ok:
                        continue
                    r1, r2 = rho(cleft(u, sv)), rho(cleft(u, v))
                    if r1 != r2:
                        witness = {
                            "n": n, "m": m, "u": list(u), "j": j, "v": to_json(v, G),
                            "value_usjv": rho.value_json(r1), "value_uv": rho.value_json(r2),
                        }
                        return PropertyReport("FP", False, params, witness)
    return PropertyReport("FP", True, params)


_CHECKERS = {"IP": _check_ip, "RP": _check_rp, "FP": _check_fp}


def check_property(spec: str, prop: str, n: int, m: int, G: ColourGroup = TRIVIAL) -> PropertyReport:
    """Exhaustive check of IP, RP or FP for one pair of degrees ``n, m >= 1``."""
    prop = prop.upper()
    if prop not in _CHECKERS:
        raise ValueError(f"unknown property {prop!r}")
    if n < 1 or m < 1:
        raise ValueError("degrees must be positive")
    rho = GradedMap(spec, G)
    params = {"map": str(rho), "property": prop, "n": n, "m": m, "group": str(G)}
    return _CHECKERS[prop](rho, n, m, params)


def check_property_upto(spec: str, prop: str, total: int, G: ColourGroup = TRIVIAL) -> PropertyReport:
    """All ``n, m >= 1`` with ``n + m <= total``; stops at the first failure."""
    checked = []
    for s in range(2, total + 1):
        for n in range(1, s):
            rep = check_property(spec, prop, n, s - n, G)
            if not rep.verdict:
                rep.params["total"] = total
                return rep
            checked.append([n, s - n])
    params = {"map": str(GradedMap(spec, G)), "property": prop.upper(), "total": total, "group": str(G)}
    return PropertyReport(prop.upper(), True, params, details={"checked": checked})


# ---------------------------------------------------------------- replay

def replay(report: dict, G: ColourGroup = TRIVIAL) -> bool:
    """Re-verify only the witness of a failed report; True if it still fails."""
    from .perms import from_json

    w, p = report["witness"], report["params"]
    prop = report["property"]
    if prop in ("IP", "RP", "FP"):
        rho = GradedMap(p["map"], G)
    if prop == "IP":
        n, m = w["n"], w["m"]
        left = [from_json(a, G) for a in w["left_class"]]
        right = [from_json(a, G) for a in w["right_class"]]
        image = set(induction_image(rho, left, right, n, m))
        missing = from_json(w["missing"], G)
        return missing not in image and rho(missing) in {rho(a) for a in image}
    if prop == "RP":
        u = tuple(w["u"])
        a1, b1 = from_json(w["alpha1"], G), from_json(w["beta1"], G)
        a2, b2 = from_json(w["alpha2"], G), from_json(w["beta2"], G)
        return (rho(a1) == rho(a2) and rho(b1) == rho(b2)
                and rho(_restrict(a1, b1, u)) != rho(_restrict(a2, b2, u)))
    if prop == "FP":
        u, j, v = tuple(w["u"]), w["j"], from_json(w["v"], G)
        n = w["n"]
        if u[j] != u[j - 1] + 1:
            return False
        sv = cleft(simple(len(u), j), v)
        split = lambda x: (CPerm(x.window[:n], x.colours[:n]),
                           CPerm(tuple(y - n for y in x.window[n:]), x.colours[n:]))
        same = tuple(map(rho, split(sv))) == tuple(map(rho, split(v)))
        return same and rho(cleft(u, sv)) != rho(cleft(u, v))
    if prop in ("CONNECTED", "COINCIDE"):
        x, y = from_json(w["x"], G), from_json(w["y"], G)
        flags = [v for k, v in w.items() if k.startswith("same_in_")]
        if prop == "CONNECTED":
            n = len(x.window)
            p1 = classes(p["relation"], n, G)
            f = stat_fn(canonical_stat(p["stat"]), G)
            now = [p1.block_of(x) == p1.block_of(y), f(x) == f(y)]
        else:
            n = len(x.window)
            parts = [classes(f"{w}({p['base']})", n, G) for w in ("LiftCong", "LiftBlock")]
            now = [q.block_of(x) == q.block_of(y) for q in parts]
        return now == flags and now[0] != now[1]
    raise ValueError(f"no replay for property {prop!r}")


# -------------------------------------------------------------------- ψ maps

PSI_KINDS = ("D", "IP", "EP", "IPG")
_PSI_STAT = {"D": "D", "IP": "IP", "EP": "EP", "IPG": "IP"}
_PSI_REL = {"D": "D", "IP": "IP", "EP": "EP", "IPG": "LiftCong(IP)"}


def _psi_d(i, u, v):
    if base_elementary("D", u, i):
        return left_s(i, u), v
    conj = multiply(inverse(u), left_s(i, u))
    return u, multiply(conj, v)


def psi(kind: str, i: int, pair, G: ColourGroup = TRIVIAL):
    """The involutions on pairs; uncoloured kinds take permutation words."""
    kind = kind.upper()
    u, v = pair
    if kind == "D":
        return _psi_d(i, u, v)
    if kind == "IP":
        return (left_s(1, u), v) if i == 1 else _psi_d(i, u, v)
    if kind == "EP":
        if i != 1:
            return _psi_d(i, u, v)
        s1u = left_s(1, u)
        if s1u != multiply(u, simple(len(u), 1)):
            return s1u, v
        return u, left_s(1, v)
    if kind == "IPG":
        if lift_elementary(Relation("LiftCongBis", "IP"), u, i):
            return CPerm(left_s(i, u.window), u.colours), v
        s = plain(simple(len(u.window), i))
        conj = cmul(G, cinv(G, u), cmul(G, s, u))
        return u, cmul(G, conj, v)
    raise ValueError(f"unknown ψ kind {kind!r}")


def _psi_setup(kind: str, n: int, G: ColourGroup):
    kind = kind.upper()
    if kind not in PSI_KINDS:
        raise ValueError(f"unknown ψ kind {kind!r}")
    if kind != "IPG" and not G.is_trivial:
        raise ValueError(f"ψ^{kind} is defined on S_n only")
    U = universe(n, G)
    f = stat_fn(_PSI_STAT[kind], G)
    rel = parse_relation(_PSI_REL[kind])
    wrap = (lambda a: a) if kind == "IPG" else (lambda a: a.window)
    unwrap = (lambda x: x) if kind == "IPG" else plain
    return kind, U, f, rel, wrap, unwrap


def psi_sets(kind: str, n: int, G: ColourGroup = TRIVIAL) -> dict:
    """``{(c, d, σ): {(u, v) : stat(u)=c, stat(v)=d, uv=σ}}``."""
    kind, U, f, rel, wrap, unwrap = _psi_setup(kind, n, G)
    vals = [f(a) for a in U.elements]
    out: dict = {}
    for iu, u in enumerate(U.elements):
        for iv, v in enumerate(U.elements):
            key = (vals[iu], vals[iv], wrap(cmul(G, u, v)))
            out.setdefault(key, set()).add((wrap(u), wrap(v)))
    return out


def verify_psi(kind: str, c, d, sigma, i: int, G: ColourGroup = TRIVIAL, sets: dict | None = None) -> bool:
    """ψ maps the (c, d, σ) set onto the (c, d, s_i σ) set."""
    n = len(sigma.window if isinstance(sigma, CPerm) else sigma)
    if sets is None:
        sets = psi_sets(kind, n, G)
    target = CPerm(left_s(i, sigma.window), sigma.colours) if isinstance(sigma, CPerm) else left_s(i, sigma)
    src = sets.get((c, d, sigma), set())
    dst = sets.get((c, d, target), set())
    return {psi(kind, i, p, G) for p in src} == dst


def check_psi(kind: str, n: int, G: ColourGroup = TRIVIAL) -> PropertyReport:
    """Involution on all pairs, and the lemma bijections for every related (σ, i)."""
    kind, U, f, rel, wrap, unwrap = _psi_setup(kind, n, G)
    params = {"kind": kind, "n": n, "group": str(G)}
    elems = [wrap(a) for a in U.elements]
    for i in range(1, n):
        for u in elems:
            for v in elems:
                if psi(kind, i, psi(kind, i, (u, v), G), G) != (u, v):
                    return PropertyReport("PSI", False, params, {
                        "failure": "involution", "i": i, "u": to_json(u, G), "v": to_json(v, G)})
    sets = psi_sets(kind, n, G)
    by_sigma: dict = {}
    for (c, d, s) in sets:
        by_sigma.setdefault(s, set()).add((c, d))
    checked = 0
    for a in U.elements:
        sigma = wrap(a)
        for i in range(1, n):
            if not elementary(rel, a, i, G):
                continue
            t = CPerm(left_s(i, a.window), a.colours)
            for c, d in sorted(by_sigma.get(sigma, set()) | by_sigma.get(wrap(t), set()), key=repr):
                checked += 1
                if not verify_psi(kind, c, d, sigma, i, G, sets):
                    return PropertyReport("PSI", False, params, {
                        "failure": "bijection", "i": i, "sigma": to_json(sigma, G),
                        "c": repr(c), "d": repr(d)})
    return PropertyReport("PSI", True, params, details={"instances": checked})
