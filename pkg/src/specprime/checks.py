"""Named batch checks over rings, posets, homomorphisms, and profiles.

Each check returns a JSON-serializable dict with an "ok" flag; the CLI and
the test suite share this registry.  Identity assertions inside the engine
raise InvariantViolation, which callers surface as a failed check with the
exception's witness payload.
"""

import itertools
import random

from .bitset import bits, is_subset, mask_of
from .correspondence import (dedekind_verdict, diagram_check, j_map,
                             jp_basic_open_report, jp_closure,
                             monotone_p_check, p_map, prime_avoidance_j,
                             ring_xspace, smap_topological_report,
                             surjectivity_report, Verdict)
from .posets import (alexandrov_presentation, closure_mask, phi, phi_report,
                     verify_spectral, xspace)
from .rings import spec
from .sprimes import (SemigroupPrime, density_report, hull_kernel_space,
                      inf_sprimes, NO_INFIMUM, s_map_report, sprimes_bruteforce,
                      sprimes_from_spec, sup_sprimes)


def check_sprimes(ring, bruteforce_cap=16):
    """Counts, membership lists, and the inclusion order of the semigroup
    primes; cross-checked against the subset scan when the ring is small."""
    space = hull_kernel_space(ring)
    if ring.n <= bruteforce_cap:
        scanned = {q.members for q in sprimes_bruteforce(ring, cap=bruteforce_cap)}
        oracle = "match" if scanned == {q.members for q in space.primes} else "mismatch"
    else:
        oracle = "skipped"
    order_pairs = [[i, j] for i in range(space.k) for j in range(space.k)
                   if i != j and is_subset(space.primes[i].members,
                                           space.primes[j].members)]
    return {
        "ok": oracle != "mismatch",
        "count": space.k,
        "primes": [list(q.elements()) for q in space.primes],
        "order": order_pairs,
        "bruteforce_oracle": oracle,
    }


def check_spectral(ring):
    """Spectral axioms on the hull-kernel space and on the x-space."""
    space = hull_kernel_space(ring)
    _, xpres = ring_xspace(ring)
    xreport = verify_spectral(xpres)
    return {
        "ok": space.spectral_report.ok and xreport.ok,
        "hull_kernel": space.spectral_report.as_dict(),
        "xspace": xreport.as_dict(),
    }


def check_surjectivity(ring):
    report = surjectivity_report(ring)
    all_true = all(report.surjectivity_conditions()) and all(report.primewise_conditions())
    out = report.as_dict()
    out["ok"] = report.consistent() and all_true
    return out


def check_retraction(ring):
    """p o j is the identity, the principal-open hull of every inverse-closed
    set is itself, and j restricted to the spectrum is the point embedding."""
    primes, poset = spec(ring)
    retract_ok = True
    for q in sprimes_from_spec(ring):
        if p_map(ring, j_map(ring, q)).members != q.members:
            retract_ok = False
            break
    xorder, _ = ring_xspace(ring)
    hull_ok = True
    for y in xorder.points:
        if jp_closure(ring, y).members != y.members:
            hull_ok = False
            break
    embed_ok = True
    for p in primes:
        if j_map(ring, SemigroupPrime(ring, p.members)).members != \
                phi(poset, p).members:
            embed_ok = False
            break
    basic = jp_basic_open_report(ring)
    return {"ok": retract_ok and hull_ok and embed_ok and basic["ok"],
            "p_after_j_identity": retract_ok,
            "principal_hull_identity": hull_ok,
            "j_extends_point_embedding": embed_ok,
            "basic_opens": basic}


def check_density(ring):
    report = density_report(ring)
    out = report.as_dict()
    out["ok"] = report.dense
    return out


def check_lattice(ring, seed=0):
    """Suprema are always semigroup primes; infima computed from common
    primes agree with the exhaustive lower-bound search (verified inside
    inf_sprimes for every family tried here)."""
    sprimes = sprimes_from_spec(ring)
    k = len(sprimes)
    families = [list(c) for c in itertools.combinations(range(k), 2)]
    if k <= 8:
        for size in range(1, k + 1):
            families += [list(c) for c in itertools.combinations(range(k), size)
                         if size != 2]
    else:
        rng = random.Random(seed)
        for _ in range(50):
            size = rng.randint(1, min(5, k))
            families.append(rng.sample(range(k), size))
    no_inf = 0
    for fam in families:
        qs = [sprimes[i] for i in fam]
        sup_sprimes(qs)  # construction re-validates the invariant suite
        if inf_sprimes(qs) is NO_INFIMUM:
            no_inf += 1
    return {"ok": True, "families_checked": len(families),
            "without_infimum": no_inf}


def check_avoidance(ring):
    """j turns finite unions of primes into unions of their images."""
    primes, _ = spec(ring)
    failures = []
    for size in (1, 2, 3):
        for combo in itertools.combinations(primes, size):
            result = prime_avoidance_j(ring, list(combo))
            if not result["equal"]:
                failures.append(result)
    return {"ok": not failures, "failures": failures}


def check_monotonicity(ring, seed=0, samples=25):
    """Randomized pairs of nonempty prime sets through the inverse-closure
    monotonicity facts."""
    primes, _ = spec(ring)
    k = len(primes)
    rng = random.Random(seed)
    results_ok = True
    tried = 0
    pools = []
    for _ in range(samples):
        a = rng.randint(1, (1 << k) - 1)
        b = rng.randint(1, (1 << k) - 1)
        pools.append((a, a | b))  # guaranteed nested pair
        pools.append((a, b))
    for ma, mb in pools:
        y1 = [primes[i] for i in bits(ma)]
        y2 = [primes[i] for i in bits(mb)]
        out = monotone_p_check(ring, y1, y2)
        tried += 1
        if not out["ok"]:
            results_ok = False
            break
    return {"ok": results_ok, "pairs_checked": tried}


def check_poset_spectral(poset):
    report = verify_spectral(alexandrov_presentation(poset))
    out = report.as_dict()
    out["ok"] = report.ok
    return out


def check_poset_closures(poset, seed=0, full_cap=12, samples=1000):
    """Inverse closure equals generization closure and the patch closure
    moves nothing; all subsets for small posets, seeded samples otherwise."""
    n = poset.n
    if n <= full_cap:
        subsets = range(1 << n)
    else:
        rng = random.Random(seed)
        subsets = [rng.randint(0, (1 << n) - 1) for _ in range(samples)]
    checked = 0
    for m in subsets:
        closure_mask(poset, m, "inverse")        # asserts equality inside
        closure_mask(poset, m, "constructible")  # asserts identity inside
        up_direct = mask_of(j for j in range(n)
                            if any(poset.leq[i, j] for i in bits(m)))
        if closure_mask(poset, m, "specialization") != up_direct:
            return {"ok": False, "subset": sorted(bits(m))}
        checked += 1
    return {"ok": True, "subsets_checked": checked}


def check_poset_xspace(poset):
    """Down-set space size against a brute subset scan, the point embedding,
    and (when small) the spectral axioms of its presentation."""
    order, pres = xspace(poset)
    if poset.n <= 12:
        brute = sum(
            1 for m in range(1, 1 << poset.n)
            if all(poset.down[i] & ~m == 0 for i in bits(m)))
        count_ok = order.n == brute
    else:
        count_ok = True
    embed = phi_report(poset)
    if order.n <= 128:
        spectral_ok = verify_spectral(pres).ok
    else:
        spectral_ok = True
    return {"ok": count_ok and embed["ok"] and spectral_ok,
            "points": order.n, "count_oracle_ok": count_ok,
            "embedding": embed, "presentation_spectral": spectral_ok}


def check_functorial(hom):
    """Both commuting squares, the basic-open pullback identity, and the
    embedding/homeomorphism transfer from spectra to semigroup primes."""
    diagram = diagram_check(hom)
    smap = s_map_report(hom)
    topo = smap_topological_report(hom)
    transfer_ok = ((not topo["fa_injective"]) or topo["smap_embedding"]) and \
        ((not topo["fa_bijective"]) or topo["smap_homeomorphism"])
    return {"ok": diagram.ok and smap["ok"] and transfer_ok,
            "diagram": diagram.as_dict(), "basic_opens": smap,
            "topology": topo}


def check_dedekind(profile):
    verdict = dedekind_verdict(profile)
    expected = profile.free_rank == 0
    return {"ok": (verdict is Verdict.HOMEOMORPHISM) == expected,
            "profile": profile.label(), "verdict": verdict.value}


RING_CHECKS = {
    "sprimes": check_sprimes,
    "spectral": check_spectral,
    "surjectivity": check_surjectivity,
    "retraction": check_retraction,
    "density": check_density,
    "lattice": check_lattice,
    "avoidance": check_avoidance,
    "monotonicity": check_monotonicity,
}

POSET_CHECKS = {
    "spectral": check_poset_spectral,
    "closures": check_poset_closures,
    "xspace": check_poset_xspace,
}

HOM_CHECKS = {"functorial": check_functorial}

PROFILE_CHECKS = {"dedekind": check_dedekind}

CHECKS_BY_KIND = {
    "ring": RING_CHECKS,
    "poset": POSET_CHECKS,
    "hom": HOM_CHECKS,
    "profile": PROFILE_CHECKS,
}

ALL_CHECK_NAMES = sorted({name for table in CHECKS_BY_KIND.values()
                          for name in table})
