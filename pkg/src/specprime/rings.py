"""Finite commutative unital rings given by explicit operation tables.

Elements are referred to by index 0..n-1; every subset of a ring is an
integer bit mask over those indices.  Rings validate the full axiom suite
exhaustively at construction (the size cap keeps that sub-second), so any
FiniteRing instance in flight is a genuine commutative unital ring.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .bitset import bit, bits, bitstring, is_subset, mask_of, popcount
from .errors import InvalidParameter, InvariantViolation, NotAHomomorphism
from .posets import FinitePoset

DEFAULT_SIZE_CAP = 256


class FiniteRing:
    """A finite commutative ring with identity, as total add/mul tables.

    Equality is by identity: two rings built from the same data are distinct
    carriers.  Instances are immutable after construction and safe to share.
    """

    def __init__(self, element_names, add_table, mul_table, zero, one,
                 label, size_cap=DEFAULT_SIZE_CAP):
        names = tuple(str(x) for x in element_names)
        n = len(names)
        if n < 2:
            raise InvalidParameter("a ring needs at least two elements (1 != 0)")
        if n > size_cap:
            raise InvalidParameter(
                f"ring size {n} exceeds the exhaustive-check cap {size_cap}")
        add = np.array(add_table, dtype=np.int64)
        mul = np.array(mul_table, dtype=np.int64)
        if add.shape != (n, n) or mul.shape != (n, n):
            raise InvalidParameter("operation tables must be n x n")
        if add.min() < 0 or add.max() >= n or mul.min() < 0 or mul.max() >= n:
            raise InvalidParameter("table entries must be element indices")
        self.n = n
        self.element_names = names
        self.add = add
        self.mul = mul
        self.zero = int(zero)
        self.one = int(one)
        self.label = str(label)
        self.full_mask = (1 << n) - 1
        self._check_axioms()
        self.units_mask = mask_of(int(i) for i in np.nonzero((mul == self.one).any(axis=1))[0])

    def _check_axioms(self):
        n, add, mul, zero, one = self.n, self.add, self.mul, self.zero, self.one
        idx = np.arange(n)
        if zero == one:
            raise InvalidParameter("1 = 0: the zero ring is excluded")
        if not (add == add.T).all():
            raise InvalidParameter("addition is not commutative")
        if not (mul == mul.T).all():
            raise InvalidParameter("multiplication is not commutative")
        if not (add[zero] == idx).all():
            raise InvalidParameter("zero is not an additive identity")
        if not (mul[one] == idx).all():
            raise InvalidParameter("one is not a multiplicative identity")
        if not (add == zero).any(axis=1).all():
            raise InvalidParameter("some element has no additive inverse")
        for a in range(n):
            if not (add[add[a, :], :] == add[a, add]).all():
                raise InvalidParameter("addition is not associative")
            if not (mul[mul[a, :], :] == mul[a, mul]).all():
                raise InvalidParameter("multiplication is not associative")
            # a*(b+c) == a*b + a*c
            if not (mul[a, add] == add[mul[a][:, None], mul[a][None, :]]).all():
                raise InvalidParameter("multiplication does not distribute over addition")

    def add_i(self, a: int, b: int) -> int:
        return int(self.add[a, b])

    def mul_i(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    def name(self, i: int) -> str:
        return self.element_names[i]

    def mask_names(self, mask: int):
        return tuple(self.element_names[i] for i in bits(mask))

    def is_unit(self, i: int) -> bool:
        return bool(self.units_mask >> i & 1)

    def __repr__(self):
        return f"FiniteRing({self.label}, n={self.n})"


@dataclass(frozen=True)
class Ideal:
    """An ideal of a FiniteRing, stored as a member bit mask."""

    ring: FiniteRing
    members: int

    def __post_init__(self):
        self.validate()

    def validate(self):
        R, m = self.ring, self.members
        if not m >> R.zero & 1:
            raise InvalidParameter("ideal does not contain zero")
        idx = list(bits(m))
        sums = R.add[np.ix_(idx, idx)]
        for v in np.unique(sums):
            if not m >> int(v) & 1:
                raise InvalidParameter("ideal is not closed under addition")
        prods = R.mul[:, idx]
        for v in np.unique(prods):
            if not m >> int(v) & 1:
                raise InvalidParameter("ideal does not absorb ring multiplication")

    def contains(self, i: int) -> bool:
        return bool(self.members >> i & 1)

    def elements(self):
        return tuple(bits(self.members))

    @property
    def is_proper(self) -> bool:
        return self.members != self.ring.full_mask

    @property
    def is_zero(self) -> bool:
        return self.members == bit(self.ring.zero)

    def size(self) -> int:
        return popcount(self.members)

    def principal_generator(self):
        """Smallest single element generating this ideal, or None."""
        for x in range(self.ring.n):
            if self.contains(x) and _close_ideal(self.ring, bit(x) | bit(self.ring.zero)) == self.members:
                return x
        return None

    def short_label(self) -> str:
        g = self.principal_generator()
        if g is not None:
            return f"({self.ring.name(g)})"
        return "{" + ",".join(self.ring.mask_names(self.members)) + "}"

    def __repr__(self):
        return f"Ideal({self.ring.label}, {{{','.join(self.ring.mask_names(self.members))}}})"


@dataclass(frozen=True)
class RingHom:
    """A validated unital ring homomorphism, as a total index map."""

    source: FiniteRing
    target: FiniteRing
    image: tuple

    def apply(self, i: int) -> int:
        return self.image[i]

    def __repr__(self):
        return f"RingHom({self.source.label} -> {self.target.label})"


def build_zmod(n: int) -> FiniteRing:
    """The ring of integers modulo n, n >= 2."""
    if not isinstance(n, int) or n < 2:
        raise InvalidParameter(f"modulus must be an integer >= 2, got {n!r}")
    idx = np.arange(n)
    add = (idx[:, None] + idx[None, :]) % n
    mul = (idx[:, None] * idx[None, :]) % n
    return FiniteRing([str(i) for i in range(n)], add, mul, 0, 1, f"Z/{n}")


def build_product(factors) -> FiniteRing:
    """Componentwise ring structure on the cartesian product of the factors."""
    factors = list(factors)
    if not factors:
        raise InvalidParameter("a product needs at least one factor")
    tuples = list(itertools.product(*(range(R.n) for R in factors)))
    index = {t: k for k, t in enumerate(tuples)}
    n = len(tuples)
    add = np.zeros((n, n), dtype=np.int64)
    mul = np.zeros((n, n), dtype=np.int64)
    for a, ta in enumerate(tuples):
        for b, tb in enumerate(tuples):
            add[a, b] = index[tuple(int(R.add[x, y]) for R, x, y in zip(factors, ta, tb))]
            mul[a, b] = index[tuple(int(R.mul[x, y]) for R, x, y in zip(factors, ta, tb))]
    names = ["(" + ",".join(R.name(i) for R, i in zip(factors, t)) + ")" for t in tuples]
    zero = index[tuple(R.zero for R in factors)]
    one = index[tuple(R.one for R in factors)]
    label = " x ".join(R.label for R in factors)
    return FiniteRing(names, add, mul, zero, one, label)


def _is_prime_int(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _poly_name(coeffs) -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            xs = "x" if i == 1 else f"x^{i}"
            terms.append(xs if c == 1 else f"{c}{xs}")
    return "+".join(terms) if terms else "0"


def build_poly_quotient(p: int, modulus, size_cap=DEFAULT_SIZE_CAP) -> FiniteRing:
    """(Z/p)[x] / (f) for a monic f of degree >= 1, coefficients low-to-high."""
    if not _is_prime_int(p):
        raise InvalidParameter(f"coefficient modulus {p} is not prime")
    f = [c % p for c in modulus]
    while f and f[-1] == 0:
        f.pop()
    d = len(f) - 1
    if d < 1 or f[-1] != 1:
        raise InvalidParameter("modulus must be monic of degree >= 1 after reduction mod p")
    n = p ** d
    if n > size_cap:
        raise InvalidParameter(f"p^deg = {n} exceeds the size cap {size_cap}")

    elems = list(itertools.product(*([range(p)] * d)))  # coeff tuples, low-to-high
    index = {t: k for k, t in enumerate(elems)}

    def reduce_poly(cs):
        cs = list(cs)
        for i in range(len(cs) - 1, d - 1, -1):
            c = cs[i]
            if c:
                for j in range(d + 1):
                    cs[i - d + j] = (cs[i - d + j] - c * f[j]) % p
        return tuple(c % p for c in cs[:d]) + (0,) * max(0, d - len(cs))

    add = np.zeros((n, n), dtype=np.int64)
    mul = np.zeros((n, n), dtype=np.int64)
    for a, ta in enumerate(elems):
        for b, tb in enumerate(elems):
            add[a, b] = index[tuple((x + y) % p for x, y in zip(ta, tb))]
            prod = [0] * (2 * d - 1)
            for i, x in enumerate(ta):
                if x:
                    for j, y in enumerate(tb):
                        prod[i + j] = (prod[i + j] + x * y) % p
            mul[a, b] = index[reduce_poly(prod)]
    names = [_poly_name(t) for t in elems]
    zero = index[(0,) * d]
    one = index[(1,) + (0,) * (d - 1)]
    label = f"F{p}[x]/({_poly_name(f)})"
    return FiniteRing(names, add, mul, zero, one, label)


def _close_ideal(ring: FiniteRing, mask: int) -> int:
    """Fixed point of absorption-and-addition passes over the given mask."""
    mask |= bit(ring.zero)
    while True:
        idx = list(bits(mask))
        new = mask
        for v in np.unique(ring.mul[:, idx]):
            new |= bit(int(v))
        jdx = list(bits(new))
        for v in np.unique(ring.add[np.ix_(jdx, jdx)]):
            new |= bit(int(v))
        if new == mask:
            return mask
        mask = new


def ideal_generated(ring: FiniteRing, gens) -> Ideal:
    """Smallest ideal containing the given elements; empty gens give (0)."""
    return Ideal(ring, _close_ideal(ring, mask_of(gens)))


def principal_ideal(ring: FiniteRing, x: int) -> Ideal:
    return ideal_generated(ring, [x])


@lru_cache(maxsize=None)
def enumerate_ideals(ring: FiniteRing):
    """All ideals, each once, deterministically ordered.

    Every ideal of a finite ring is a sum of principal ideals, so closing the
    set of principal ideals under pairwise ideal-sum reaches all of them.
    """
    principals = sorted({_close_ideal(ring, bit(x)) for x in range(ring.n)})
    family = set(principals)
    queue = list(principals)
    while queue:
        m = queue.pop()
        for pm in principals:
            s = _close_ideal(ring, m | pm)
            if s not in family:
                family.add(s)
                queue.append(s)
    ordered = sorted(family, key=lambda m: (popcount(m), bitstring(m, ring.n)))
    return tuple(Ideal(ring, m) for m in ordered)


def radical(ideal: Ideal) -> Ideal:
    """Elements with some power in the ideal (exponents up to the ring size)."""
    R = ideal.ring
    out = 0
    for x in range(R.n):
        y = x
        for _ in range(R.n):
            if ideal.contains(y):
                out |= bit(x)
                break
            y = R.mul_i(y, x)
    return Ideal(R, out)


def is_prime_ideal(ideal: Ideal) -> bool:
    """Proper, and ab in I forces a in I or b in I."""
    if not ideal.is_proper:
        return False
    R = ideal.ring
    comp = [i for i in range(R.n) if not ideal.contains(i)]
    prods = R.mul[np.ix_(comp, comp)]
    member = np.zeros(R.n, dtype=bool)
    for i in bits(ideal.members):
        member[i] = True
    return not member[prods].any()


@lru_cache(maxsize=None)
def spec(ring: FiniteRing):
    """All prime ideals plus their inclusion poset.

    For a finite ring the primes are pairwise incomparable; this is asserted,
    not assumed.
    """
    primes = tuple(I for I in enumerate_ideals(ring) if is_prime_ideal(I))
    k = len(primes)
    leq = np.zeros((k, k), dtype=bool)
    for i, P in enumerate(primes):
        for j, Q in enumerate(primes):
            leq[i, j] = is_subset(P.members, Q.members)
    poset = FinitePoset(primes, leq)
    if not poset.is_antichain():
        raise InvariantViolation(
            "prime inclusion order of a finite ring must be an antichain",
            witness={"ring": ring.label})
    return primes, poset


def build_hom(source: FiniteRing, target: FiniteRing, image) -> RingHom:
    """Validate an element map as a unital ring homomorphism."""
    img = tuple(int(i) for i in image)
    if len(img) != source.n or any(not 0 <= i < target.n for i in img):
        raise NotAHomomorphism("image must assign a target index to every source element")
    arr = np.array(img, dtype=np.int64)
    if img[source.one] != target.one:
        raise NotAHomomorphism("map does not send 1 to 1")
    if not (arr[source.add] == target.add[arr[:, None], arr[None, :]]).all():
        raise NotAHomomorphism("map does not preserve addition")
    if not (arr[source.mul] == target.mul[arr[:, None], arr[None, :]]).all():
        raise NotAHomomorphism("map does not preserve multiplication")
    return RingHom(source, target, img)


def identity_hom(ring: FiniteRing) -> RingHom:
    return build_hom(ring, ring, tuple(range(ring.n)))


def compose_homs(f: RingHom, g: RingHom) -> RingHom:
    """g after f (the composite source-of-f -> target-of-g)."""
    if f.target is not g.source:
        raise InvalidParameter("homomorphisms do not compose: target/source mismatch")
    return build_hom(f.source, g.target, tuple(g.image[i] for i in f.image))


def preimage_ideal(f: RingHom, ideal: Ideal) -> Ideal:
    """f^{-1}(I), an ideal of the source (prime whenever I is prime)."""
    if ideal.ring is not f.target:
        raise InvalidParameter("ideal does not live in the homomorphism target")
    m = mask_of(i for i in range(f.source.n) if ideal.contains(f.image[i]))
    return Ideal(f.source, m)
