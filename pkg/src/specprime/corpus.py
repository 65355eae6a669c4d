"""The default verification corpus: rings, posets, homomorphisms, and class
group profiles.  Carriers are memoized so every corpus entry referring to,
say, Z/6 shares one object; ring equality is by identity throughout the
package and the per-ring caches key on it.
"""

from functools import lru_cache

from .correspondence import ClassGroupProfile
from .posets import antichain, chain, diamond, fence
from .rings import build_hom, build_poly_quotient, build_product, build_zmod, identity_hom

ZMOD_RANGE = list(range(2, 41)) + [60]

PRODUCT_SHAPES = [
    (2, 2), (2, 3), (2, 4), (3, 3), (2, 5), (3, 4), (4, 4), (2, 8),
    (2, 9), (3, 9), (5, 5), (6, 6), (2, 30),
    (2, 2, 2), (2, 2, 3), (2, 3, 4), (2, 3, 5), (3, 3, 3), (4, 4, 4),
]

POLY_QUOTIENTS = [
    (2, (1, 1, 1)),      # GF(4)
    (2, (0, 0, 1)),      # F2[x]/(x^2): local with nilpotents
    (2, (0, 1, 1)),      # x^2+x = x(x+1): two primes
    (2, (1, 1, 0, 1)),   # GF(8)
    (2, (0, 0, 0, 1)),   # F2[x]/(x^3)
    (2, (0, 1, 0, 1)),   # x^3+x = x(x+1)^2
    (3, (1, 0, 1)),      # GF(9)
    (3, (0, 0, 1)),      # F3[x]/(x^2)
    (3, (0, 1, 1)),      # x^2+x = x(x+1) over F3
    (3, (1, 2, 0, 1)),   # GF(27)
]

MIXED_PRODUCT_SPECS = (
    # GF(4) x F2[x]/(x^2): 16 elements, lands in the subset-scan lane
    (("polyquot", 2, (1, 1, 1)), ("polyquot", 2, (0, 0, 1))),
    (("polyquot", 3, (1, 0, 1)), ("zmod", 4)),           # GF(9) x Z/4
    (("polyquot", 2, (0, 0, 0, 1)), ("zmod", 3)),        # F2[x]/(x^3) x Z/3
)


@lru_cache(maxsize=None)
def zmod(n):
    return build_zmod(n)


@lru_cache(maxsize=None)
def zmod_product(shape):
    return build_product([zmod(n) for n in shape])


@lru_cache(maxsize=None)
def polyquot(p, coeffs):
    return build_poly_quotient(p, list(coeffs))


@lru_cache(maxsize=None)
def _ring_of(factor_spec):
    if factor_spec[0] == "zmod":
        return zmod(factor_spec[1])
    return polyquot(factor_spec[1], factor_spec[2])


@lru_cache(maxsize=None)
def mixed_product(factor_specs):
    return build_product([_ring_of(s) for s in factor_specs])


@lru_cache(maxsize=None)
def corpus_rings():
    rings = [zmod(n) for n in ZMOD_RANGE]
    rings += [zmod_product(shape) for shape in PRODUCT_SHAPES]
    rings += [polyquot(p, coeffs) for p, coeffs in POLY_QUOTIENTS]
    rings += [mixed_product(specs) for specs in MIXED_PRODUCT_SPECS]
    return tuple(rings)


def bruteforce_rings(cap=16):
    """The corpus slice small enough for the full subset scan."""
    return tuple(r for r in corpus_rings() if r.n <= cap)


@lru_cache(maxsize=None)
def corpus_posets():
    zoo = []
    zoo += [chain(n) for n in range(1, 7)]
    zoo += [antichain(n) for n in range(1, 7)]
    zoo += [fence(n) for n in range(2, 9)]
    zoo += [diamond(k) for k in range(2, 7)]
    return tuple(zoo)


def _tuple_index(prod):
    """Index of each coordinate tuple in a product ring, parsed from names."""
    out = {}
    for i, name in enumerate(prod.element_names):
        out[tuple(name.strip("()").split(","))] = i
    return out


def _quotient(m, n):
    return build_hom(zmod(m), zmod(n), [x % n for x in range(m)])


def _projection(prod, factor):
    idx_first = [int(name.strip("()").split(",")[0]) for name in prod.element_names]
    return build_hom(prod, factor, idx_first)


@lru_cache(maxsize=None)
def corpus_homs():
    """Labeled homomorphisms: quotients, CRT isomorphisms, projections,
    a diagonal, and prime-field extensions."""
    homs = [("id Z/6", identity_hom(zmod(6)))]

    for m, n in [(12, 6), (12, 4), (12, 3), (12, 2), (6, 3), (6, 2),
                 (30, 6), (30, 10), (60, 12), (36, 6)]:
        homs.append((f"Z/{m} -> Z/{n}", _quotient(m, n)))

    p23 = zmod_product((2, 3))
    idx23 = _tuple_index(p23)
    homs.append(("Z/6 -> Z/2 x Z/3 (crt)",
                 build_hom(zmod(6), p23,
                           [idx23[(str(x % 2), str(x % 3))] for x in range(6)])))
    p235 = zmod_product((2, 3, 5))
    idx235 = _tuple_index(p235)
    homs.append(("Z/30 -> Z/2 x Z/3 x Z/5 (crt)",
                 build_hom(zmod(30), p235,
                           [idx235[(str(x % 2), str(x % 3), str(x % 5))]
                            for x in range(30)])))

    homs.append(("Z/2 x Z/3 -> Z/2", _projection(p23, zmod(2))))
    p66 = zmod_product((6, 6))
    homs.append(("Z/6 x Z/6 -> Z/6", _projection(p66, zmod(6))))
    idx66 = _tuple_index(p66)
    homs.append(("Z/6 -> Z/6 x Z/6 (diagonal)",
                 build_hom(zmod(6), p66,
                           [idx66[(str(x), str(x))] for x in range(6)])))

    gf4 = polyquot(2, (1, 1, 1))
    homs.append(("F2 -> GF(4)", build_hom(zmod(2), gf4, [gf4.zero, gf4.one])))
    dual = polyquot(2, (0, 0, 1))
    homs.append(("F2 -> F2[x]/(x^2)", build_hom(zmod(2), dual, [dual.zero, dual.one])))
    gf9 = polyquot(3, (1, 0, 1))
    const9 = {name: i for i, name in enumerate(gf9.element_names)}
    homs.append(("F3 -> GF(9)",
                 build_hom(zmod(3), gf9, [const9["0"], const9["1"], const9["2"]])))

    return tuple(homs)


def composable_hom_pairs():
    """Pairs (f, g) from the corpus with g applicable after f."""
    homs = [h for _, h in corpus_homs()]
    return [(f, g) for f in homs for g in homs if f.target is g.source]


@lru_cache(maxsize=None)
def corpus_profiles():
    """Class-group profile grid: free ranks 0..3 crossed with torsion parts."""
    torsions = [(), (2,), (5,), (2, 4)]
    return tuple(ClassGroupProfile(rank, t)
                 for rank in range(4) for t in torsions)
