"""The two-way traffic between semigroup primes and inverse-closed sets of
primes: the embedding j (a semigroup prime maps to the primes inside it),
the retraction P (a set of primes maps to its union), the identities tying
them together, and the equivalent surjectivity conditions with their
Noetherian-spectrum specializations.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache

from .bitset import bits, is_subset, mask_of
from .errors import InvalidParameter, InvariantViolation
from .posets import DownSet, closure_mask, poset_map, xfunctor, xspace
from .rings import (FiniteRing, Ideal, RingHom, enumerate_ideals,
                    ideal_generated, is_prime_ideal, radical, spec)
from .sprimes import SemigroupPrime, hull_kernel_space, s_map, sprimes_from_spec


@lru_cache(maxsize=None)
def ring_xspace(ring: FiniteRing):
    """The space of nonempty inverse-closed (= arbitrary, the spectrum being
    an antichain) sets of primes, as (inclusion poset, presentation)."""
    _, poset = spec(ring)
    return xspace(poset)


def j_map(ring: FiniteRing, q: SemigroupPrime) -> DownSet:
    """All primes contained in the semigroup prime, as a point of the x-space."""
    if q.parent is not ring:
        raise InvalidParameter("semigroup prime does not belong to this ring")
    primes, poset = spec(ring)
    m = mask_of(i for i, p in enumerate(primes)
                if is_subset(p.members, q.members))
    return DownSet(poset, m)


def p_map(ring: FiniteRing, y: DownSet) -> SemigroupPrime:
    """Union of the primes in the set (always a semigroup prime)."""
    primes, poset = spec(ring)
    if y.poset is not poset:
        raise InvalidParameter("down-set does not live over this ring's spectrum")
    u = 0
    for i in bits(y.members):
        u |= primes[i].members
    return SemigroupPrime(ring, u)


def union_of_primes(ring: FiniteRing, prime_set) -> SemigroupPrime:
    """P on an arbitrary nonempty collection of primes (no closedness asked)."""
    u = 0
    seen = False
    for p in prime_set:
        seen = True
        u |= p.members
    if not seen:
        raise InvalidParameter("need at least one prime ideal")
    return SemigroupPrime(ring, u)


def jp_closure(ring: FiniteRing, y: DownSet) -> DownSet:
    """Intersection of the principal opens D(a) containing Y; verified to be
    j(P(Y)) and to contain Y."""
    primes, poset = spec(ring)
    if y.poset is not poset:
        raise InvalidParameter("down-set does not live over this ring's spectrum")
    full = poset.full_mask
    out = full
    for a in range(ring.n):
        d_a = mask_of(i for i, p in enumerate(primes) if not p.contains(a))
        if is_subset(y.members, d_a):
            out &= d_a
    via_maps = j_map(ring, p_map(ring, y)).members
    if out != via_maps or not is_subset(y.members, out):
        raise InvariantViolation(
            "principal-open intersection disagrees with j o P",
            witness={"ring": ring.label, "set": sorted(bits(y.members)),
                     "intersection": sorted(bits(out)),
                     "j_of_p": sorted(bits(via_maps))})
    return DownSet(poset, out)


def jp_basic_open_report(ring: FiniteRing) -> dict:
    """How j and P interact with basic opens: j is injective and
    order-preserving, j(U(x)) is the trace of U(D(x)) on the image of j, and
    the P-preimage of U(x) is U(D(x)) itself, for every ring element x."""
    space = hull_kernel_space(ring)
    primes, poset = spec(ring)
    xorder, _ = ring_xspace(ring)
    xpoints = [ds.members for ds in xorder.points]
    j_of = [j_map(ring, q).members for q in space.primes]
    injective = len(set(j_of)) == space.k
    order_preserving = all(
        is_subset(space.primes[a].members, space.primes[b].members)
        == is_subset(j_of[a], j_of[b])
        for a in range(space.k) for b in range(space.k))
    image = set(j_of)
    j_basic = True
    p_basic = True
    for x in range(ring.n):
        d_x = mask_of(i for i, p in enumerate(primes) if not p.contains(x))
        u_dx = {ym for ym in xpoints if is_subset(ym, d_x)}
        if {j_of[k] for k in bits(space.u_masks[x])} != u_dx & image:
            j_basic = False
        preimage = {ym for ym in xpoints
                    if not p_map(ring, DownSet(poset, ym)).contains(x)}
        if preimage != u_dx:
            p_basic = False
    return {"ok": injective and order_preserving and j_basic and p_basic,
            "j_injective": injective, "j_order_preserving": order_preserving,
            "j_basic_open_trace": j_basic, "p_basic_open_preimage": p_basic}


@dataclass
class SurjectivityReport:
    """Seven equivalent-by-theory booleans, each computed independently.

    The first four restate, in different terms, that j hits every
    inverse-closed set; the last three are the prime-wise versions that are
    equivalent once the spectrum is Noetherian (finite here, so always).
    """

    ring_label: str
    radical_principal: bool
    union_avoidance: bool
    basis_condition: bool
    j_surjective: bool
    prime_radical_principal: bool
    compactly_packed_ideal: bool
    compactly_packed_prime: bool
    sprime_count: int
    xspace_count: int
    witnesses: dict = field(default_factory=dict)

    def surjectivity_conditions(self):
        return (self.radical_principal, self.union_avoidance,
                self.basis_condition, self.j_surjective)

    def primewise_conditions(self):
        return (self.prime_radical_principal, self.compactly_packed_ideal,
                self.compactly_packed_prime)

    def consistent(self) -> bool:
        t = self.surjectivity_conditions()
        c = self.primewise_conditions()
        implies = (not all(c)) or all(t)
        return len(set(t)) == 1 and len(set(c)) == 1 and implies

    def as_dict(self):
        return {
            "ring": self.ring_label,
            "i_j_surjective": self.j_surjective,
            "ii_radical_principal": self.radical_principal,
            "iii_union_avoidance": self.union_avoidance,
            "iv_basis_condition": self.basis_condition,
            "cor_ii_prime_radical_principal": self.prime_radical_principal,
            "cor_iii_compactly_packed_ideal": self.compactly_packed_ideal,
            "cor_iv_compactly_packed_prime": self.compactly_packed_prime,
            "sprime_count": self.sprime_count,
            "xspace_count": self.xspace_count,
            "consistent": self.consistent(),
            "witnesses": self.witnesses,
        }


def surjectivity_report(ring: FiniteRing, enforce=True) -> SurjectivityReport:
    """Compute all seven conditions by independent exhaustive procedures.

    With `enforce` set (the default) a disagreement among the four, or among
    the three, or a failed implication raises InvariantViolation: agreement
    is the point being verified, not an assumption.
    """
    witnesses = {}
    ideals = enumerate_ideals(ring)
    primes, poset = spec(ring)
    sprimes = sprimes_from_spec(ring)
    xorder, _ = ring_xspace(ring)
    n_primes = len(primes)

    # (ii) every radical is the radical of a principal ideal
    principal_radicals = {radical(Ideal(ring, mr)).members
                          for mr in {ideal_generated(ring, [x]).members
                                     for x in range(ring.n)}}
    radical_principal = True
    for ideal in ideals:
        if radical(ideal).members not in principal_radicals:
            radical_principal = False
            witnesses["radical_principal"] = {"ideal": list(ideal.elements())}
            break

    # (iii) an ideal inside a union of primes is inside one of the factors,
    # quantified over every representation of every semigroup prime
    union_avoidance = True
    for q in sprimes:
        inside = [p for p in primes if is_subset(p.members, q.members)]
        reps = []
        for sub in range(1, 1 << len(inside)):
            u = 0
            for i in bits(sub):
                u |= inside[i].members
            if u == q.members:
                reps.append([inside[i] for i in bits(sub)])
        for ideal in ideals:
            if not is_subset(ideal.members, q.members):
                continue
            for rep in reps:
                if not any(is_subset(ideal.members, p.members) for p in rep):
                    union_avoidance = False
                    witnesses["union_avoidance"] = {
                        "ideal": list(ideal.elements()),
                        "union": list(q.elements())}
                    break
            if not union_avoidance:
                break
        if not union_avoidance:
            break

    # (iv) the principal sets U(D(x)) form a basis for the x-space topology
    xpoints = [ds.members for ds in xorder.points]
    d_of = {}
    for a in range(ring.n):
        d_of[a] = mask_of(i for i, p in enumerate(primes) if not p.contains(a))

    def u_of(d_mask):
        return mask_of(k for k, ym in enumerate(xpoints) if is_subset(ym, d_mask))

    u_basic = [u_of(d_of[a]) for a in range(ring.n)]
    basis_condition = True
    for ideal in ideals:
        d_j = mask_of(i for i, p in enumerate(primes)
                      if not is_subset(ideal.members, p.members))
        u_j = u_of(d_j)
        for k in bits(u_j):
            if not any(u_basic[a] >> k & 1 and is_subset(u_basic[a], u_j)
                       for a in range(ring.n)):
                basis_condition = False
                witnesses["basis_condition"] = {
                    "ideal": list(ideal.elements()),
                    "point": sorted(bits(xpoints[k]))}
                break
        if not basis_condition:
            break

    # (i) direct image comparison
    j_image = {j_map(ring, q).members for q in sprimes}
    j_surjective = j_image == set(xpoints)
    if not j_surjective:
        missing = sorted(set(xpoints) - j_image)
        witnesses["j_surjective"] = {"unreached": [sorted(bits(m)) for m in missing]}

    # prime-wise radical condition
    prime_radical_principal = True
    for p in primes:
        if not any(radical(Ideal(ring, mr)).members == p.members
                   for mr in principal_radicals):
            prime_radical_principal = False
            witnesses["prime_radical_principal"] = {"prime": list(p.elements())}
            break

    # compact packing: containment in an arbitrary union of primes finds a factor
    def packed(candidates, key):
        for sub in range(1, 1 << n_primes):
            u = 0
            for i in bits(sub):
                u |= primes[i].members
            members = [primes[i] for i in bits(sub)]
            for ideal in candidates:
                if is_subset(ideal.members, u) and \
                        not any(is_subset(ideal.members, p.members) for p in members):
                    witnesses[key] = {"ideal": list(ideal.elements()),
                                      "primes": [list(p.elements()) for p in members]}
                    return False
        return True

    compactly_packed_ideal = packed(ideals, "compactly_packed_ideal")
    compactly_packed_prime = packed(primes, "compactly_packed_prime")

    report = SurjectivityReport(
        ring.label, radical_principal, union_avoidance, basis_condition,
        j_surjective, prime_radical_principal, compactly_packed_ideal,
        compactly_packed_prime, len(sprimes), len(xpoints), witnesses)
    if enforce and not report.consistent():
        raise InvariantViolation("surjectivity conditions disagree",
                                 witness=report.as_dict())
    return report


@dataclass
class DiagramReport:
    hom_label: str
    left_commutes: bool
    right_commutes: bool
    witnesses: dict = field(default_factory=dict)

    @property
    def ok(self):
        return self.left_commutes and self.right_commutes

    def as_dict(self):
        return {"hom": self.hom_label, "left_commutes": self.left_commutes,
                "right_commutes": self.right_commutes, "ok": self.ok,
                "witnesses": self.witnesses}


def spectral_map_of_hom(f: RingHom) -> "PosetMap":
    """The induced map on spectra (target primes pull back to source primes)."""
    from .rings import preimage_ideal
    primes2, poset2 = spec(f.target)
    primes1, poset1 = spec(f.source)
    index1 = {p.members: i for i, p in enumerate(primes1)}
    mapping = []
    for p in primes2:
        q = preimage_ideal(f, p)
        if not is_prime_ideal(q):
            raise InvariantViolation("preimage of a prime is not prime",
                                     witness={"hom": repr(f)})
        mapping.append(index1[q.members])
    return poset_map(poset2, poset1, mapping)


def diagram_check(f: RingHom) -> DiagramReport:
    """Both commuting squares: spectra into semigroup primes on the left,
    semigroup primes into x-spaces on the right."""
    label = f"{f.source.label} -> {f.target.label}"
    witnesses = {}
    act = s_map(f)
    fa = spectral_map_of_hom(f)
    primes2, _ = spec(f.target)

    left = True
    for p in primes2:
        via_sprime = act(SemigroupPrime(f.target, p.members)).members
        via_spec = fa.apply(p).members
        if via_sprime != via_spec:
            left = False
            witnesses["left"] = {"prime": list(p.elements())}
            break

    xf = xfunctor(fa)
    right = True
    for q in sprimes_from_spec(f.target):
        lhs = xf(j_map(f.target, q)).members
        rhs = j_map(f.source, act(q)).members
        if lhs != rhs:
            right = False
            witnesses["right"] = {"sprime": list(q.elements()),
                                  "via_xspace": sorted(bits(lhs)),
                                  "via_smap": sorted(bits(rhs))}
            break
    return DiagramReport(label, left, right, witnesses)


def smap_topological_report(f: RingHom) -> dict:
    """Whether the induced spectral map and the semigroup-prime map are
    embeddings/homeomorphisms, checked directly on the finite spaces."""
    fa = spectral_map_of_hom(f)
    fa_injective = len(set(fa.mapping)) == len(fa.mapping)
    fa_bijective = fa_injective and fa.source.n == fa.target.n

    s2 = hull_kernel_space(f.target)
    s1 = hull_kernel_space(f.source)
    act = s_map(f)
    images = [s1.index_of(act(q)) for q in s2.primes]
    s_injective = len(set(images)) == len(images)
    s_surjective = set(images) == set(range(s1.k))

    image_mask = mask_of(images)
    opens2 = s2.opens(cap=4096)
    opens1 = s1.opens(cap=4096)
    embedding = s_injective
    if embedding and opens1 is not None and opens2 is not None:
        opens1_traces = {o & image_mask for o in opens1}
        for w in opens2:
            pushed = mask_of(images[k] for k in bits(w))
            if pushed not in opens1_traces:
                embedding = False
                break
    homeomorphism = embedding and s_surjective
    return {"fa_injective": fa_injective, "fa_bijective": fa_bijective,
            "smap_embedding": embedding, "smap_homeomorphism": homeomorphism}


def prime_avoidance_j(ring: FiniteRing, prime_list) -> dict:
    """j of a finite union of primes equals the union of the j's."""
    prime_list = list(prime_list)
    if not prime_list:
        raise InvalidParameter("need at least one prime ideal")
    for p in prime_list:
        if p.ring is not ring or not is_prime_ideal(p):
            raise InvalidParameter("inputs must be prime ideals of the given ring")
    union = union_of_primes(ring, prime_list)
    lhs = j_map(ring, union).members
    rhs = 0
    for p in prime_list:
        rhs |= j_map(ring, SemigroupPrime(ring, p.members)).members
    _, poset = spec(ring)
    return {"ring": ring.label,
            "j_of_union": sorted(bits(lhs)),
            "union_of_j": sorted(bits(rhs)),
            "equal": lhs == rhs}


def monotone_p_check(ring: FiniteRing, y1, y2) -> dict:
    """Inverse-closure inclusion forces union inclusion, and the union only
    depends on the inverse closure.  y1, y2 are nonempty sets of primes."""
    primes, poset = spec(ring)
    index = {p.members: i for i, p in enumerate(primes)}
    m1 = mask_of(index[p.members] for p in y1)
    m2 = mask_of(index[p.members] for p in y2)
    if not m1 or not m2:
        raise InvalidParameter("both collections must be nonempty")
    inv1 = closure_mask(poset, m1, "inverse")
    inv2 = closure_mask(poset, m2, "inverse")
    u1 = union_of_primes(ring, y1).members
    u2 = union_of_primes(ring, y2).members

    implication = (not is_subset(inv1, inv2)) or is_subset(u1, u2)
    stable = True
    for m, u in ((m1, u1), (m2, u2)):
        inv = closure_mask(poset, m, "inverse")
        u_closed = 0
        for i in bits(inv):
            u_closed |= primes[i].members
        if u_closed != u:
            stable = False
    return {"ring": ring.label, "implication_holds": implication,
            "union_stable_under_inverse_closure": stable,
            "ok": implication and stable}


class Verdict(enum.Enum):
    HOMEOMORPHISM = "Homeomorphism"
    NOT_SURJECTIVE = "NotSurjective"


@dataclass(frozen=True)
class ClassGroupProfile:
    """Shape of the ideal class group of a Dedekind domain: free rank plus
    torsion invariants.  The group is torsion exactly when the rank is zero."""

    free_rank: int
    torsion_invariants: tuple = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise InvalidParameter("free rank must be nonnegative")
        if any(int(d) < 2 for d in self.torsion_invariants):
            raise InvalidParameter("torsion invariants must be integers >= 2")
        object.__setattr__(self, "torsion_invariants",
                           tuple(int(d) for d in self.torsion_invariants))

    @property
    def is_torsion(self) -> bool:
        return self.free_rank == 0

    def label(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion_invariants]
        return " x ".join(parts) if parts else "trivial"


def dedekind_verdict(profile: ClassGroupProfile) -> Verdict:
    """For a Dedekind domain, j is a homeomorphism exactly when the class
    group is torsion; a free part supplies a non-surjectivity witness."""
    return Verdict.HOMEOMORPHISM if profile.is_torsion else Verdict.NOT_SURJECTIVE
