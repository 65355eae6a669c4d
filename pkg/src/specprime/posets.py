"""Finite posets as spectral spaces: closure operators, the space of
down-sets, and a checker for the four spectral-space axioms on an arbitrary
finite topology presentation.

Order convention: x <= y means y lies in the closure of {x}, so the open
sets of the associated topology are exactly the down-closed sets and the
closed sets are the up-closed ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .bitset import bit, bits, bitstring, is_subset, mask_of, popcount
from .errors import (InvalidParameter, InvariantViolation, NotAPartialOrder,
                     NotSpectral, TooLarge)

DOWNSET_ENUM_CAP = 20  # points; past this the 2^n-ish down-set family explodes


class FinitePoset:
    """A finite partial order on arbitrary hashable points.

    The relation is kept as a dense boolean matrix and validated (reflexive,
    antisymmetric, transitive) at construction.
    """

    def __init__(self, points, leq):
        self.points = tuple(points)
        n = len(self.points)
        self.n = n
        leq = np.array(leq, dtype=bool)
        if leq.shape != (n, n):
            raise InvalidParameter("order matrix must be n x n")
        if not leq.diagonal().all():
            raise NotAPartialOrder("relation is not reflexive")
        sym = leq & leq.T
        if (sym & ~np.eye(n, dtype=bool)).any():
            i, j = map(int, np.argwhere(sym & ~np.eye(n, dtype=bool))[0])
            raise NotAPartialOrder(f"antisymmetry fails on points {self.points[i]!r}, {self.points[j]!r}")
        closed = leq | (leq @ leq)
        if (closed != leq).any():
            raise NotAPartialOrder("relation is not transitive")
        self.leq = leq
        self._index = {p: i for i, p in enumerate(self.points)}
        if len(self._index) != n:
            raise InvalidParameter("points must be distinct")
        self.full_mask = (1 << n) - 1
        # down/up masks per point: {y : y <= x} and {y : x <= y}
        self.down = [mask_of(int(j) for j in np.nonzero(leq[:, i])[0]) for i in range(n)]
        self.up = [mask_of(int(j) for j in np.nonzero(leq[i, :])[0]) for i in range(n)]
        self._downsets = None

    def index(self, p) -> int:
        return self._index[p]

    def le(self, a, b) -> bool:
        return bool(self.leq[self._index[a], self._index[b]])

    def is_antichain(self) -> bool:
        return int(self.leq.sum()) == self.n

    def down_closure_mask(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            out |= self.down[i]
        return out

    def up_closure_mask(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            out |= self.up[i]
        return out

    def covering_pairs(self):
        """Hasse edges (i, j) with i strictly below j and nothing between."""
        strict = self.leq & ~np.eye(self.n, dtype=bool)
        cov = strict & ~(strict @ strict)
        return [(int(i), int(j)) for i, j in np.argwhere(cov)]

    def downset_masks(self):
        """Every down-closed subset (the empty one included), lex-ordered."""
        if self._downsets is not None:
            return self._downsets
        if self.n > DOWNSET_ENUM_CAP:
            raise TooLarge(f"down-set enumeration capped at {DOWNSET_ENUM_CAP} points")
        order = sorted(range(self.n), key=lambda i: (popcount(self.down[i]), i))
        found = []

        def rec(k, mask):
            if k == len(order):
                found.append(mask)
                return
            p = order[k]
            rec(k + 1, mask)
            if self.down[p] & ~(mask | bit(p)) == 0:
                rec(k + 1, mask | bit(p))

        rec(0, 0)
        self._downsets = tuple(sorted(found, key=lambda m: bitstring(m, self.n)))
        return self._downsets

    def __repr__(self):
        return f"FinitePoset({self.n} points)"


def from_relation(points, pairs) -> FinitePoset:
    """Poset from the reflexive-transitive closure of an arbitrary relation.

    Pairs are (i, j) indices meaning i <= j; a cycle between distinct points
    raises NotAPartialOrder.
    """
    points = tuple(points)
    n = len(points)
    leq = np.eye(n, dtype=bool)
    for i, j in pairs:
        leq[i, j] = True
    while True:
        closed = leq | (leq @ leq)
        if (closed == leq).all():
            break
        leq = closed
    return FinitePoset(points, leq)


def chain(n: int, prefix="c") -> FinitePoset:
    return from_relation([f"{prefix}{i}" for i in range(n)],
                         [(i, i + 1) for i in range(n - 1)])


def antichain(n: int, prefix="a") -> FinitePoset:
    return from_relation([f"{prefix}{i}" for i in range(n)], [])


def fence(n: int) -> FinitePoset:
    """Zigzag f0 < f1 > f2 < f3 > ... on n points."""
    pairs = []
    for i in range(n - 1):
        pairs.append((i, i + 1) if i % 2 == 0 else (i + 1, i))
    return from_relation([f"f{i}" for i in range(n)], pairs)


def diamond(k: int) -> FinitePoset:
    """Bottom, k incomparable middles, top."""
    pts = ["bot"] + [f"m{i}" for i in range(k)] + ["top"]
    pairs = [(0, i) for i in range(1, k + 1)] + [(i, k + 1) for i in range(1, k + 1)]
    return from_relation(pts, pairs)


@dataclass(frozen=True)
class DownSet:
    """A nonempty generization-closed subset of a poset."""

    poset: FinitePoset
    members: int

    def __post_init__(self):
        if self.members == 0:
            raise InvalidParameter("down-sets here are nonempty by definition")
        if self.poset.down_closure_mask(self.members) != self.members:
            raise InvalidParameter("subset is not closed under generization")

    def points(self):
        return tuple(self.poset.points[i] for i in bits(self.members))

    def __le__(self, other):
        return is_subset(self.members, other.members)

    def __repr__(self):
        return "DownSet{" + ",".join(map(str, self.points())) + "}"


CLOSURE_MODES = ("specialization", "generization", "inverse", "constructible")


def closure_mask(poset: FinitePoset, mask: int, mode: str) -> int:
    if mode == "specialization":
        return poset.up_closure_mask(mask)
    if mode == "generization":
        return poset.down_closure_mask(mask)
    if mode == "inverse":
        # intersection of every (quasi-compact) open, i.e. down-set, above Y
        out = poset.full_mask
        for d in poset.downset_masks():
            if is_subset(mask, d):
                out &= d
        expected = poset.down_closure_mask(mask)
        if out != expected:
            raise InvariantViolation(
                "inverse closure disagrees with generization closure",
                witness={"subset": mask, "inverse": out, "generization": expected})
        return out
    if mode == "constructible":
        # intersect U u (X \ V) over open pairs; for fixed V the minimal
        # admissible U is the down-closure of Y n V, and supersets of it
        # cannot shrink the intersection.
        full = poset.full_mask
        out = full
        for v in poset.downset_masks():
            out &= poset.down_closure_mask(mask & v) | (full & ~v)
        if out != mask:
            raise InvariantViolation(
                "constructible closure moved a subset of a finite space",
                witness={"subset": mask, "closure": out})
        return out
    raise InvalidParameter(f"unknown closure mode {mode!r}")


def closure(poset: FinitePoset, subset, mode: str):
    """Closure of a set of points in one of the four operators."""
    mask = mask_of(poset.index(p) for p in subset)
    out = closure_mask(poset, mask, mode)
    return frozenset(poset.points[i] for i in bits(out))


class TopologyPresentation:
    """A finite point set with a declared family of basic open sets.

    Opens are the unions of basis elements; nothing else is assumed, so the
    spectral-axiom checker can be run against arbitrary presentations.
    """

    def __init__(self, points, basis_masks):
        self.points = tuple(points)
        self.n = len(self.points)
        self.full_mask = (1 << self.n) - 1
        self.basis = tuple(sorted(set(int(b) for b in basis_masks),
                                  key=lambda m: bitstring(m, self.n)))
        for b in self.basis:
            if b & ~self.full_mask:
                raise InvalidParameter("basis element is not a subset of the points")
        # profile of a point: which basis elements contain it
        self.profiles = [mask_of(k for k, b in enumerate(self.basis) if b >> i & 1)
                         for i in range(self.n)]

    def covers(self) -> bool:
        out = 0
        for b in self.basis:
            out |= b
        return out == self.full_mask

    def specialization_leq(self) -> np.ndarray:
        """x <= y iff every basic open through y also contains x (a preorder)."""
        leq = np.zeros((self.n, self.n), dtype=bool)
        for x in range(self.n):
            for y in range(self.n):
                leq[x, y] = is_subset(self.profiles[y], self.profiles[x])
        return leq

    def point_closure(self, i: int) -> int:
        """Topological closure of {i}: complement of the union of basics avoiding i."""
        away = 0
        for b in self.basis:
            if not b >> i & 1:
                away |= b
        return self.full_mask & ~away

    def opens(self, cap=4096):
        """All unions of basis elements, or None if more than `cap` exist."""
        seen = {0}
        queue = [0]
        while queue:
            m = queue.pop()
            for b in self.basis:
                u = m | b
                if u not in seen:
                    if len(seen) >= cap:
                        return None
                    seen.add(u)
                    queue.append(u)
        return sorted(seen, key=lambda m: bitstring(m, self.n))

    def __repr__(self):
        return f"TopologyPresentation({self.n} points, {len(self.basis)} basic opens)"


@dataclass
class SpectralReport:
    """Per-axiom verdicts for a topology presentation, with failure witnesses."""

    t0: bool
    quasi_compact: bool
    basis_intersection_closed: bool
    generic_points: bool
    method: str
    witnesses: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return (self.t0 and self.quasi_compact
                and self.basis_intersection_closed and self.generic_points)

    def as_dict(self):
        return {
            "t0": self.t0,
            "quasi_compact": self.quasi_compact,
            "basis_intersection_closed": self.basis_intersection_closed,
            "generic_points": self.generic_points,
            "method": self.method,
            "ok": self.ok,
            "witnesses": self.witnesses,
        }


def _irreducible_by_minimals(pres, leq, cmask):
    """Single-minimal-element criterion on a closed set (requires T0)."""
    members = list(bits(cmask))
    minimal = [x for x in members
               if not any(leq[y, x] and y != x for y in members)]
    return len(minimal) == 1


def verify_spectral(pres: TopologyPresentation, opens_cap=1024) -> SpectralReport:
    """Check the four axioms characterizing spectral spaces on a presentation:
    T0, quasi-compactness, an intersection-closed basis of quasi-compact
    opens, and a unique generic point for every irreducible closed set.

    Every open of a finite space is quasi-compact, so quasi-compactness
    reduces to the basis covering the point set.  When the full open family
    fits under `opens_cap` the generic-point axiom is checked exhaustively
    over all closed sets; otherwise (only possible when the first three
    axioms hold, which pins the closed sets to the up-sets of the
    specialization order) it is checked through point closures.
    """
    witnesses = {}
    n = pres.n
    full = pres.full_mask

    t0 = True
    for x in range(n):
        for y in range(x + 1, n):
            if pres.profiles[x] == pres.profiles[y]:
                t0 = False
                witnesses["t0"] = {"indistinguishable_pair":
                                   [str(pres.points[x]), str(pres.points[y])]}
                break
        if not t0:
            break

    qc = pres.covers()
    if not qc:
        covered = 0
        for b in pres.basis:
            covered |= b
        i = next(bits(full & ~covered))
        witnesses["quasi_compact"] = {"uncovered_point": str(pres.points[i])}

    bset = set(pres.basis)
    ic = True
    for i, a in enumerate(pres.basis):
        for b in pres.basis[i:]:
            if (a & b) not in bset:
                ic = False
                witnesses["basis_intersection_closed"] = {
                    "pair": [sorted(bits(a)), sorted(bits(b))],
                    "intersection": sorted(bits(a & b))}
                break
        if not ic:
            break

    leq = pres.specialization_leq()
    point_cls = [pres.point_closure(i) for i in range(n)]

    opens = pres.opens(cap=opens_cap)
    gp = True
    if opens is not None:
        method = "exhaustive"
        closed = [full ^ o for o in opens]
        small = len(closed) <= 64

        def decomposes(c):
            return any(a != c and b != c and (a | b) == c
                       for a in closed for b in closed)

        for c in closed:
            if c == 0:
                continue
            if ic:
                # with an intersection-closed basis the closed family is
                # union-closed, so reducible == covered by proper closed parts
                proper_union = 0
                for d in closed:
                    if d != c and is_subset(d, c):
                        proper_union |= d
                irreducible = proper_union != c
                if t0 and n <= 12 and small and decomposes(c) == irreducible:
                    gp = False
                    witnesses["generic_points"] = {
                        "reason": "irreducibility criteria disagree",
                        "closed_set": sorted(bits(c))}
                    break
                if t0 and n <= 12 and small:
                    minimal_says = _irreducible_by_minimals(pres, leq, c)
                    if minimal_says != irreducible:
                        gp = False
                        witnesses["generic_points"] = {
                            "reason": "minimal-element criterion disagrees",
                            "closed_set": sorted(bits(c))}
                        break
            elif small:
                irreducible = not decomposes(c)
            else:
                gp = False
                witnesses["generic_points"] = {
                    "reason": "basis not intersection-closed and closed family too large"}
                break
            if not irreducible:
                continue
            generics = [x for x in bits(c) if point_cls[x] == c]
            if len(generics) != 1:
                gp = False
                witnesses["generic_points"] = {
                    "closed_set": sorted(bits(c)),
                    "generic_candidates": [str(pres.points[x]) for x in generics]}
                break
    else:
        method = "pointwise"
        if not (t0 and qc and ic):
            gp = False
            witnesses["generic_points"] = {
                "reason": "open family too large to enumerate and prerequisite axioms failed"}
        else:
            # closed sets are the up-sets of the specialization order here,
            # so irreducible closed sets are exactly the point closures
            for x in range(n):
                c = point_cls[x]
                generics = [y for y in bits(c) if point_cls[y] == c]
                if generics != [x]:
                    gp = False
                    witnesses["generic_points"] = {
                        "closed_set": sorted(bits(c)),
                        "generic_candidates": [str(pres.points[y]) for y in generics]}
                    break
                if not _irreducible_by_minimals(pres, leq, c):
                    gp = False
                    witnesses["generic_points"] = {
                        "closed_set": sorted(bits(c)),
                        "reason": "point closure with more than one minimal element"}
                    break

    return SpectralReport(t0, qc, ic, gp, method, witnesses)


def alexandrov_presentation(poset: FinitePoset) -> TopologyPresentation:
    """Basis for the down-set topology: principal down-sets, the empty set,
    and whatever pairwise intersections require (kept intersection-closed)."""
    family = {0} | {poset.down[i] for i in range(poset.n)}
    while True:
        extra = {a & b for a in family for b in family} - family
        if not extra:
            break
        family |= extra
    return TopologyPresentation(poset.points, family)


def xspace(poset: FinitePoset):
    """The space of nonempty down-sets of a poset.

    Returns (inclusion poset on the down-sets, topology presentation whose
    basic opens are U(W) = {Y : Y a subset of W} for W running over the opens
    of the base poset).  The presentation's specialization order is asserted
    to coincide with inclusion.
    """
    all_down = poset.downset_masks()
    masks = [m for m in all_down if m]
    k = len(masks)
    pts = tuple(DownSet(poset, m) for m in masks)
    leq = np.zeros((k, k), dtype=bool)
    for i, a in enumerate(masks):
        for j, b in enumerate(masks):
            leq[i, j] = is_subset(a, b)
    order = FinitePoset(pts, leq)

    basis = []
    for w in all_down:
        basis.append(mask_of(i for i, m in enumerate(masks) if is_subset(m, w)))
    pres = TopologyPresentation(pts, basis)

    if k <= 512:  # profile comparison is quadratic; plenty for the corpus
        derived = pres.specialization_leq()
        if (derived != leq).any():
            i, j = map(int, np.argwhere(derived != leq)[0])
            raise InvariantViolation(
                "x-space specialization order differs from inclusion",
                witness={"pair": [sorted(bits(masks[i])), sorted(bits(masks[j]))]})
    return order, pres


def phi(poset: FinitePoset, point) -> DownSet:
    """Generization closure of a single point, as a point of the down-set space."""
    return DownSet(poset, poset.down[poset.index(point)])


def phi_report(poset: FinitePoset) -> dict:
    """Check that the point embedding into the down-set space is injective,
    an order embedding, and pulls each basic open U(W) back to W."""
    images = [poset.down[i] for i in range(poset.n)]
    injective = len(set(images)) == poset.n
    order_embedding = all(
        is_subset(images[i], images[j]) == bool(poset.leq[i, j])
        for i in range(poset.n) for j in range(poset.n))
    preimage_ok = True
    for w in poset.downset_masks():
        pre = mask_of(i for i in range(poset.n) if is_subset(images[i], w))
        if pre != w:
            preimage_ok = False
            break
    return {"injective": injective, "order_embedding": order_embedding,
            "basic_preimage_identity": preimage_ok,
            "ok": injective and order_embedding and preimage_ok}


@dataclass(frozen=True)
class PosetMap:
    """A monotone map between finite posets (the finite stand-in for a
    spectral map); rejects non-monotone assignments."""

    source: FinitePoset
    target: FinitePoset
    mapping: tuple  # target index per source index

    def __post_init__(self):
        if len(self.mapping) != self.source.n:
            raise NotSpectral("map must be total on the source points")
        for i in range(self.source.n):
            for j in range(self.source.n):
                if self.source.leq[i, j] and not self.target.leq[self.mapping[i], self.mapping[j]]:
                    raise NotSpectral(
                        f"map is not monotone on {self.source.points[i]!r} <= {self.source.points[j]!r}")

    def apply(self, point):
        return self.target.points[self.mapping[self.source.index(point)]]


def poset_map(source: FinitePoset, target: FinitePoset, assignment) -> PosetMap:
    """Build a PosetMap from a point-to-point assignment (dict or sequence)."""
    if isinstance(assignment, dict):
        mapping = tuple(target.index(assignment[p]) for p in source.points)
    else:
        mapping = tuple(int(i) for i in assignment)
    return PosetMap(source, target, mapping)


def compose_poset_maps(f: PosetMap, g: PosetMap) -> PosetMap:
    if f.target is not g.source:
        raise InvalidParameter("poset maps do not compose")
    return PosetMap(f.source, g.target, tuple(g.mapping[i] for i in f.mapping))


def xfunctor(f: PosetMap):
    """Induced map on down-sets: C maps to the generization closure of f(C)."""
    def mapped(ds: DownSet) -> DownSet:
        if ds.poset is not f.source:
            raise InvalidParameter("down-set does not live in the map source")
        img = mask_of(f.mapping[i] for i in bits(ds.members))
        return DownSet(f.target, f.target.down_closure_mask(img))
    return mapped
