"""Semigroup primes of finite commutative rings (and bare semigroups): a
subset is one exactly when it absorbs multiplication and its complement is
multiplicatively closed.  Equivalently these are the unions of nonempty
families of prime ideals; both routes are implemented and compared.

The hull-kernel topology on the set of semigroup primes has basic opens
U(x) = {Q : x not in Q}; each space built here is verified to satisfy the
spectral-space axioms and to induce set inclusion as its specialization
order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .bitset import bits, bitstring, is_subset, mask_of, popcount
from .errors import (InvalidParameter, InvalidSemigroup, InvariantViolation,
                     TooLarge)
from .posets import FinitePoset, TopologyPresentation, verify_spectral
from .rings import FiniteRing, spec

BRUTEFORCE_CAP = 16


class Semigroup:
    """A finite commutative semigroup as a validated multiplication table."""

    def __init__(self, table, label="semigroup"):
        mul = np.array(table, dtype=np.int64)
        n = mul.shape[0]
        if mul.shape != (n, n) or n == 0:
            raise InvalidSemigroup("table must be square and nonempty")
        if mul.min() < 0 or mul.max() >= n:
            raise InvalidSemigroup("table entries must be element indices")
        if not (mul == mul.T).all():
            raise InvalidSemigroup("multiplication is not commutative")
        for a in range(n):
            if not (mul[mul[a, :], :] == mul[a, mul]).all():
                raise InvalidSemigroup("multiplication is not associative")
        self.n = n
        self.mul = mul
        self.label = label
        self.full_mask = (1 << n) - 1

    def mul_i(self, a, b):
        return int(self.mul[a, b])

    def __repr__(self):
        return f"Semigroup({self.label}, n={self.n})"


@dataclass(frozen=True)
class SemigroupPrime:
    """A semigroup prime over a FiniteRing (or a bare Semigroup).

    Validation covers the defining pair (absorption, multiplicatively closed
    complement) plus the derived facts that make these the complements of
    saturated multiplicative sets: for rings, membership of zero, absence of
    units, and saturation of the complement.
    """

    parent: object  # FiniteRing | Semigroup
    members: int

    def __post_init__(self):
        self.validate()

    def validate(self):
        S, m = self.parent, self.members
        n, mul, full = S.n, S.mul, S.full_mask
        if m == 0 or m == full:
            raise InvalidParameter("a semigroup prime is nonempty and proper")
        idx = list(bits(m))
        for v in np.unique(mul[:, idx]):
            if not m >> int(v) & 1:
                raise InvalidParameter("subset does not absorb multiplication")
        comp = [i for i in range(n) if not m >> i & 1]
        for v in np.unique(mul[np.ix_(comp, comp)]):
            if m >> int(v) & 1:
                raise InvalidParameter("complement is not multiplicatively closed")
        # saturation: a product outside the set forces both factors outside
        inside = np.array([bool(m >> i & 1) for i in range(n)])
        outside_products = ~inside[mul]
        both_out = ~inside[:, None] & ~inside[None, :]
        if (outside_products & ~both_out).any():
            raise InvalidParameter("complement is not saturated")
        if isinstance(S, FiniteRing):
            if not m >> S.zero & 1:
                raise InvalidParameter("semigroup prime of a ring must contain zero")
            if m & S.units_mask:
                raise InvalidParameter("semigroup prime of a ring contains a unit")

    def contains(self, i: int) -> bool:
        return bool(self.members >> i & 1)

    def elements(self):
        return tuple(bits(self.members))

    def __repr__(self):
        names = getattr(self.parent, "element_names", None)
        shown = ",".join(names[i] for i in self.elements()) if names \
            else ",".join(map(str, self.elements()))
        return "SemigroupPrime{" + shown + "}"


def _scan_subsets(mul: np.ndarray, n: int):
    """Vectorized scan of all proper nonempty subsets for the defining pair."""
    total = 1 << n
    m = np.arange(total, dtype=np.int64)
    ok = np.ones(total, dtype=bool)
    # (a) absorption: products out of the subset kill it
    for e in range(n):
        reach = mask_of(int(v) for v in np.unique(mul[:, e]))
        has_e = (m >> e) & 1 == 1
        escapes = (~m & reach) != 0
        ok &= ~(has_e & escapes)
    # (b) complement multiplicatively closed
    for s in range(n):
        for t in range(s, n):
            p = int(mul[s, t])
            bad = ((m >> s) & 1 == 0) & ((m >> t) & 1 == 0) & ((m >> p) & 1 == 1)
            ok &= ~bad
    ok[0] = False
    ok[total - 1] = False
    return [int(v) for v in m[ok]]


def sprimes_bruteforce(table_or_ring, cap=BRUTEFORCE_CAP):
    """All semigroup primes by scanning every subset of the carrier.

    Accepts a FiniteRing, a Semigroup, or a raw commutative multiplication
    table.  Carriers beyond `cap` elements raise TooLarge (the scan is
    2^n subsets).
    """
    if isinstance(table_or_ring, (FiniteRing, Semigroup)):
        parent = table_or_ring
    else:
        parent = Semigroup(table_or_ring)
    if parent.n > cap:
        raise TooLarge(f"subset scan capped at {cap} elements, carrier has {parent.n}")
    masks = _scan_subsets(parent.mul, parent.n)
    masks.sort(key=lambda v: bitstring(v, parent.n))
    return [SemigroupPrime(parent, v) for v in masks]


@lru_cache(maxsize=None)
def sprimes_from_spec(ring: FiniteRing):
    """Semigroup primes as unions of nonempty families of prime ideals."""
    primes, _ = spec(ring)
    seen = set()
    for sub in range(1, 1 << len(primes)):
        u = 0
        for i in bits(sub):
            u |= primes[i].members
        seen.add(u)
    ordered = sorted(seen, key=lambda v: (popcount(v), bitstring(v, ring.n)))
    return tuple(SemigroupPrime(ring, v) for v in ordered)


def hull_kernel_presentation(parent, sprime_list):
    """Presentation with basic opens U(x) = {Q : x not in Q}, one per element."""
    u_masks = []
    for x in range(parent.n):
        u_masks.append(mask_of(k for k, q in enumerate(sprime_list)
                               if not q.contains(x)))
    return u_masks, TopologyPresentation(tuple(sprime_list), u_masks)


class SPrimeSpace:
    """The hull-kernel spectral space on the semigroup primes of a ring.

    Construction re-verifies everything the space is supposed to satisfy:
    U(xy) = U(x) n U(y), the four spectral axioms, specialization order equal
    to inclusion, and the prime spectrum sitting inside as a subspace whose
    basic opens are the traces of the U(x).
    """

    def __init__(self, ring: FiniteRing):
        self.ring = ring
        self.primes = sprimes_from_spec(ring)
        self.k = len(self.primes)
        self.full_mask = (1 << self.k) - 1
        self.u_masks, self.presentation = hull_kernel_presentation(ring, self.primes)
        self._index = {q.members: i for i, q in enumerate(self.primes)}

        for x in range(ring.n):
            for y in range(ring.n):
                xy = ring.mul_i(x, y)
                if self.u_masks[xy] != self.u_masks[x] & self.u_masks[y]:
                    raise InvariantViolation(
                        "U(xy) != U(x) n U(y)",
                        witness={"ring": ring.label, "x": x, "y": y})

        report = verify_spectral(self.presentation)
        if not report.ok:
            raise InvariantViolation("hull-kernel presentation failed the spectral axioms",
                                     witness=report.as_dict())
        self.spectral_report = report

        leq = np.zeros((self.k, self.k), dtype=bool)
        for i, a in enumerate(self.primes):
            for j, b in enumerate(self.primes):
                leq[i, j] = is_subset(a.members, b.members)
        self.order = FinitePoset(self.primes, leq)
        derived = self.presentation.specialization_leq()
        if (derived != leq).any():
            raise InvariantViolation(
                "hull-kernel specialization order is not set inclusion",
                witness={"ring": ring.label})

        ring_primes, _ = spec(ring)
        self.spec_image = mask_of(self._index[p.members] for p in ring_primes)
        for x in range(ring.n):
            trace = mask_of(self._index[p.members] for p in ring_primes
                            if not p.contains(x))
            if trace != self.u_masks[x] & self.spec_image:
                raise InvariantViolation(
                    "prime spectrum is not embedded: basic-open traces differ",
                    witness={"ring": ring.label, "x": x})

    def index_of(self, q: SemigroupPrime) -> int:
        return self._index[q.members]

    def embed_prime(self, prime_ideal) -> SemigroupPrime:
        """The inclusion of a prime ideal as a semigroup prime."""
        return self.primes[self._index[prime_ideal.members]]

    def opens(self, cap=4096):
        return self.presentation.opens(cap=cap)

    def __repr__(self):
        return f"SPrimeSpace({self.ring.label}, {self.k} points)"


@lru_cache(maxsize=None)
def hull_kernel_space(ring: FiniteRing) -> SPrimeSpace:
    return SPrimeSpace(ring)


def s_map(f):
    """The contravariant action on semigroup primes: Q maps to f^{-1}(Q)."""
    def mapped(q: SemigroupPrime) -> SemigroupPrime:
        if q.parent is not f.target:
            raise InvalidParameter("semigroup prime does not live in the hom target")
        m = mask_of(i for i in range(f.source.n) if q.contains(f.image[i]))
        return SemigroupPrime(f.source, m)
    return mapped


def s_map_report(f) -> dict:
    """Functor-level facts for one hom: every image is a semigroup prime of
    the source (construction validates that) and the preimage of U(x) is
    U(f(x)) for every source element x."""
    s2 = hull_kernel_space(f.target)
    s1 = hull_kernel_space(f.source)
    act = s_map(f)
    images = [act(q) for q in s2.primes]
    basic_ok = True
    witness = None
    for x in range(f.source.n):
        pre = mask_of(k for k, q in enumerate(images)
                      if not q.contains(x))
        if pre != s2.u_masks[f.image[x]]:
            basic_ok = False
            witness = {"x": x}
            break
    well_defined = all(img.members in {q.members for q in s1.primes} for img in images)
    return {"well_defined": well_defined, "basic_preimage_identity": basic_ok,
            "ok": well_defined and basic_ok, "witness": witness}


def _common_ring(sprime_set):
    qs = list(sprime_set)
    if not qs:
        raise InvalidParameter("need at least one semigroup prime")
    ring = qs[0].parent
    if any(q.parent is not ring for q in qs):
        raise InvalidParameter("semigroup primes live over different rings")
    return ring, qs


def sup_sprimes(sprime_set) -> SemigroupPrime:
    """Least upper bound: the set union (always a semigroup prime)."""
    ring, qs = _common_ring(sprime_set)
    u = 0
    for q in qs:
        u |= q.members
    return SemigroupPrime(ring, u)


class NoInfimum:
    """Sentinel: the family has no greatest lower bound among semigroup primes."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NoInfimum"


NO_INFIMUM = NoInfimum()


def inf_sprimes(sprime_set, verify_cap=64):
    """Greatest lower bound via the primes below every member.

    Collect C = {P prime : P below every member}; an empty C means no lower
    bound exists at all (any semigroup prime contains some prime), otherwise
    the union of C is the infimum.  When the whole space has at most
    `verify_cap` points the result is re-verified against an exhaustive
    lower-bound search.
    """
    ring, qs = _common_ring(sprime_set)
    primes, _ = spec(ring)
    c = [p for p in primes
         if all(is_subset(p.members, q.members) for q in qs)]
    if not c:
        result = NO_INFIMUM
    else:
        u = 0
        for p in c:
            u |= p.members
        result = SemigroupPrime(ring, u)
    if len(sprimes_from_spec(ring)) <= verify_cap:
        greatest = greatest_lower_bound(qs, ring)
        want = None if greatest is None else greatest.members
        got = None if result is NO_INFIMUM else result.members
        if want != got:
            raise InvariantViolation(
                "infimum by common primes disagrees with exhaustive lower-bound search",
                witness={"ring": ring.label,
                         "family": [q.elements() for q in qs]})
    return result


def greatest_lower_bound(qs, ring):
    """Exhaustive search over the whole space; None when no lower bound exists."""
    lower = [s for s in sprimes_from_spec(ring)
             if all(is_subset(s.members, q.members) for q in qs)]
    best = None
    for s in lower:
        if all(is_subset(t.members, s.members) for t in lower):
            best = s
    if lower and best is None:
        # lower bounds exist but none dominates: genuinely no infimum
        return None
    return best


UFD_MODEL_CAP = 12


@dataclass(frozen=True)
class UfdElement:
    """A symbolic nonzero element: a unit times primes with given exponents."""

    exponents: tuple
    unit: str = "1"

    @property
    def support(self) -> int:
        return mask_of(i for i, e in enumerate(self.exponents) if e > 0)


UFD_ZERO = object()  # the single symbolic zero


class UfdModel:
    """Symbolic model of the semigroup primes of a factorial domain with n
    prime classes: they correspond to the subsets B of the classes, a nonzero
    element lying in Q(B) exactly when some prime in B divides it.

    Nothing infinite is materialized; membership and the topology are decided
    from exponent supports alone.
    """

    def __init__(self, n: int):
        if n < 0:
            raise InvalidParameter("need a nonnegative number of prime classes")
        if n > UFD_MODEL_CAP:
            raise TooLarge(f"power-set enumeration capped at {UFD_MODEL_CAP} classes")
        self.n = n
        self.count = 1 << n
        self.full_points = (1 << self.count) - 1

    def sprime_masks(self):
        return range(self.count)

    def contains(self, b_mask: int, element) -> bool:
        if element is UFD_ZERO:
            return True
        return element.support & b_mask != 0

    def prime_element(self, i: int) -> UfdElement:
        return UfdElement(tuple(1 if j == i else 0 for j in range(self.n)))

    def order_leq(self, b1: int, b2: int) -> bool:
        return is_subset(b1, b2)

    def v_subbasis(self):
        """V(p) = {B : p not in B}, one per prime class."""
        return [mask_of(b for b in range(self.count) if not b >> p & 1)
                for p in range(self.n)]

    def v_generated_basis(self):
        """Close the subbasis under finite intersections (whole space included)."""
        family = {self.full_points}
        family.update(self.v_subbasis())
        while True:
            extra = {a & b for a in family for b in family} - family
            if not extra:
                break
            family |= extra
        return sorted(family, key=lambda m: bitstring(m, self.count))

    def hull_kernel_basis(self):
        """U(x) over symbolic elements x, which depends only on the support:
        U(x) = {B : B disjoint from supp(x)} (zero gives the empty set)."""
        family = set()
        for supp in range(self.count):
            family.add(mask_of(b for b in range(self.count) if b & supp == 0))
        family.add(0)  # U(0): zero lies in every semigroup prime
        return sorted(family, key=lambda m: bitstring(m, self.count))

    def presentation(self) -> TopologyPresentation:
        return TopologyPresentation(tuple(self.sprime_masks()), self.hull_kernel_basis())


def ufd_model(n: int) -> UfdModel:
    return UfdModel(n)


def _basis_refines(points_count, coarse, fine):
    """Every member of `coarse` is a union of members of `fine`."""
    for c in coarse:
        for y in bits(c):
            if not any(f >> y & 1 and is_subset(f, c) for f in fine):
                return False
    return True


def ufd_report(model: UfdModel) -> dict:
    """Check the power-set correspondence: count, order isomorphism (read off
    prime elements), minimum, and equality of the hull-kernel topology with
    the one generated by the V(p) subbasis."""
    count_ok = len(list(model.sprime_masks())) == 2 ** model.n
    order_ok = True
    for b1 in model.sprime_masks():
        contained = mask_of(p for p in range(model.n)
                            if model.contains(b1, model.prime_element(p)))
        if contained != b1:
            order_ok = False
            break
    minimum_ok = all(not model.contains(0, model.prime_element(p))
                     for p in range(model.n)) and model.contains(0, UFD_ZERO)
    hk = model.hull_kernel_basis()
    vb = model.v_generated_basis()
    mutual = (_basis_refines(model.count, hk, vb)
              and _basis_refines(model.count, vb, hk))
    return {"count_ok": count_ok, "order_isomorphism": order_ok,
            "minimum_ok": minimum_ok, "topologies_agree": mutual,
            "ok": count_ok and order_ok and minimum_ok and mutual}


@dataclass
class DensityReport:
    ring_label: str
    dense: bool
    very_dense: bool
    witness: dict = field(default_factory=dict)

    def as_dict(self):
        return {"ring": self.ring_label, "dense": self.dense,
                "very_dense": self.very_dense, "witness": self.witness}


def density_report(ring: FiniteRing, opens_cap=8192) -> DensityReport:
    """Is the prime spectrum dense (always) and very dense (open sets pinned
    down by their traces) in the semigroup-prime space?"""
    space = hull_kernel_space(ring)
    img = space.spec_image
    away = 0
    for b in space.u_masks:
        if b & img == 0:
            away |= b
    dense = (space.full_mask & ~away) == space.full_mask
    if not dense:
        raise InvariantViolation("prime spectrum is not dense in the semigroup primes",
                                 witness={"ring": ring.label})
    opens = space.opens(cap=opens_cap)
    if opens is None:
        raise TooLarge("open family too large to test very-density exhaustively")
    traces = {}
    very_dense = True
    witness = {}
    for o in opens:
        t = o & img
        if t in traces and traces[t] != o:
            very_dense = False
            witness = {
                "open_a": [space.primes[i].elements() for i in bits(traces[t])],
                "open_b": [space.primes[i].elements() for i in bits(o)],
                "trace": [space.primes[i].elements() for i in bits(t)]}
            break
        traces.setdefault(t, o)
    return DensityReport(ring.label, dense, very_dense, witness)
