import pytest

import specprime as sp
from specprime.bitset import bits, mask_of
from specprime.checks import check_functorial
from specprime.corpus import (composable_hom_pairs, corpus_homs,
                              corpus_profiles, zmod, zmod_product)
from specprime.errors import InvalidParameter


def prime_by_elements(ring, elements):
    primes, _ = sp.spec(ring)
    for p in primes:
        if p.elements() == tuple(elements):
            return p
    raise AssertionError(f"no prime {elements} in {ring.label}")


def test_j_map_zmod6():
    R = zmod(6)
    q = sp.SemigroupPrime(R, mask_of([0, 2, 3, 4]))
    got = {p.elements() for p in sp.j_map(R, q).points()}
    assert got == {(0, 2, 4), (0, 3)}


def test_j_map_on_a_prime_is_its_point():
    R = zmod(6)
    primes, poset = sp.spec(R)
    for p in primes:
        ds = sp.j_map(R, sp.SemigroupPrime(R, p.members))
        assert ds.points() == (p,)
        assert ds.members == sp.phi(poset, p).members


def test_j_map_zmod30():
    R = zmod(30)
    two = sp.ideal_generated(R, [2]).members
    three = sp.ideal_generated(R, [3]).members
    got = {p.elements() for p in
           sp.j_map(R, sp.SemigroupPrime(R, two | three)).points()}
    assert got == {tuple(bits(two)), tuple(bits(three))}


def test_p_map_examples():
    R = zmod(6)
    primes, poset = sp.spec(R)
    whole = sp.DownSet(poset, poset.full_mask)
    assert sp.p_map(R, whole).elements() == (0, 2, 3, 4)
    for i, p in enumerate(primes):
        single = sp.DownSet(poset, 1 << i)
        assert sp.p_map(R, single).members == p.members


def test_jp_closure_identity_small_rings():
    for n in (6, 12, 30):
        R = zmod(n)
        xorder, _ = sp.ring_xspace(R)
        for y in xorder.points:
            assert sp.jp_closure(R, y).members == y.members


def test_jp_closure_whole_spectrum():
    R = zmod(12)
    _, poset = sp.spec(R)
    whole = sp.DownSet(poset, poset.full_mask)
    assert sp.jp_closure(R, whole).members == poset.full_mask


def test_jp_closure_zmod30_pair_cut_by_d5():
    R = zmod(30)
    primes, poset = sp.spec(R)
    two = prime_by_elements(R, sp.ideal_generated(R, [2]).elements())
    three = prime_by_elements(R, sp.ideal_generated(R, [3]).elements())
    m = (1 << poset.index(two)) | (1 << poset.index(three))
    y = sp.DownSet(poset, m)
    assert sp.jp_closure(R, y).members == m


def test_surjectivity_zmod12():
    report = sp.surjectivity_report(zmod(12))
    assert all(report.surjectivity_conditions())
    assert all(report.primewise_conditions())
    assert report.sprime_count == report.xspace_count == 3
    assert report.consistent()


def test_surjectivity_field_and_triple_product():
    assert all(sp.surjectivity_report(zmod(5)).surjectivity_conditions())
    report = sp.surjectivity_report(zmod_product((2, 3, 5)))
    assert all(report.surjectivity_conditions()) and all(report.primewise_conditions())
    assert report.sprime_count == report.xspace_count == 7


def test_surjectivity_serialization_field_names():
    out = sp.surjectivity_report(zmod(6)).as_dict()
    for key in ("i_j_surjective", "ii_radical_principal", "iii_union_avoidance",
                "iv_basis_condition", "cor_ii_prime_radical_principal",
                "cor_iii_compactly_packed_ideal", "cor_iv_compactly_packed_prime"):
        assert out[key] is True


def test_diagram_quotient_identity_projection():
    quotient = sp.build_hom(zmod(12), zmod(6), [x % 6 for x in range(12)])
    assert sp.diagram_check(quotient).ok
    assert sp.diagram_check(sp.identity_hom(zmod(6))).ok
    p62 = zmod_product((6, 2))
    second = sp.build_hom(p62, zmod(2),
                          [int(n.strip("()").split(",")[1]) for n in p62.element_names])
    assert sp.diagram_check(second).ok


@pytest.mark.parametrize("label_hom", corpus_homs(), ids=lambda lh: lh[0])
def test_diagram_commutes_over_corpus(label_hom):
    _, hom = label_hom
    report = sp.diagram_check(hom)
    assert report.ok, report.as_dict()


def test_functor_composition_via_smap():
    pairs = composable_hom_pairs()
    assert pairs
    for f, g in pairs:
        gf = sp.compose_homs(f, g)
        act = sp.s_map(gf)
        act_f, act_g = sp.s_map(f), sp.s_map(g)
        for q in sp.sprimes_from_spec(g.target):
            assert act(q).members == act_f(act_g(q)).members


def test_embedding_and_homeomorphism_transfer():
    crt = next(h for label, h in corpus_homs() if "crt" in label and "Z/6" in label)
    report = sp.smap_topological_report(crt)
    assert report["fa_bijective"] and report["smap_homeomorphism"]

    quotient = sp.build_hom(zmod(12), zmod(4), [x % 4 for x in range(12)])
    report2 = sp.smap_topological_report(quotient)
    assert report2["fa_injective"] and report2["smap_embedding"]

    diag = next(h for label, h in corpus_homs() if "diagonal" in label)
    report3 = sp.smap_topological_report(diag)
    assert not report3["fa_injective"]


def test_prime_avoidance_examples():
    R = zmod(30)
    primes, _ = sp.spec(R)
    two = prime_by_elements(R, sp.ideal_generated(R, [2]).elements())
    three = prime_by_elements(R, sp.ideal_generated(R, [3]).elements())
    five = prime_by_elements(R, sp.ideal_generated(R, [5]).elements())

    out = sp.prime_avoidance_j(R, [two, three])
    assert out["equal"] and len(out["j_of_union"]) == 2
    single = sp.prime_avoidance_j(R, [two])
    assert single["equal"] and len(single["j_of_union"]) == 1
    full = sp.prime_avoidance_j(R, [two, three, five])
    assert full["equal"] and len(full["j_of_union"]) == 3


def test_prime_avoidance_rejects_non_prime():
    R = zmod(12)
    four = sp.ideal_generated(R, [4])
    with pytest.raises(InvalidParameter):
        sp.prime_avoidance_j(R, [four])


def test_monotone_p_check_examples():
    R = zmod(30)
    primes, _ = sp.spec(R)
    out = sp.monotone_p_check(R, [primes[0]], list(primes))
    assert out["ok"]
    out2 = sp.monotone_p_check(R, [primes[0]], [primes[0]])
    assert out2["ok"]
    with pytest.raises(InvalidParameter):
        sp.monotone_p_check(R, [], [primes[0]])


def test_monotone_p_check_randomized_pairs():
    import random
    rng = random.Random(7)
    for n in (12, 30, 60):
        R = zmod(n)
        primes, _ = sp.spec(R)
        k = len(primes)
        for _ in range(30):
            m1 = rng.randint(1, (1 << k) - 1)
            m2 = rng.randint(1, (1 << k) - 1)
            out = sp.monotone_p_check(R, [primes[i] for i in bits(m1)],
                                      [primes[i] for i in bits(m2)])
            assert out["ok"]


def test_dedekind_verdict_grid():
    for profile in corpus_profiles():
        verdict = sp.dedekind_verdict(profile)
        if profile.free_rank == 0:
            assert verdict is sp.Verdict.HOMEOMORPHISM
        else:
            assert verdict is sp.Verdict.NOT_SURJECTIVE


def test_dedekind_named_cases():
    assert sp.dedekind_verdict(sp.ClassGroupProfile(0)) is sp.Verdict.HOMEOMORPHISM
    assert sp.dedekind_verdict(sp.ClassGroupProfile(1)) is sp.Verdict.NOT_SURJECTIVE
    assert sp.dedekind_verdict(sp.ClassGroupProfile(0, (5,))) is sp.Verdict.HOMEOMORPHISM


def test_profile_validation():
    with pytest.raises(InvalidParameter):
        sp.ClassGroupProfile(-1)
    with pytest.raises(InvalidParameter):
        sp.ClassGroupProfile(0, (1,))
    assert sp.ClassGroupProfile(2, (2, 4)).label() == "Z x Z x Z/2 x Z/4"
    assert sp.ClassGroupProfile(0).label() == "trivial"
    assert sp.ClassGroupProfile(0).is_torsion
    assert not sp.ClassGroupProfile(3, (2,)).is_torsion


def test_check_functorial_wrapper():
    for _, hom in corpus_homs():
        assert check_functorial(hom)["ok"]


def test_jp_basic_open_identities():
    for n in (6, 12, 30, 60):
        report = sp.jp_basic_open_report(zmod(n))
        assert report["ok"], (n, report)
    prod = zmod_product((6, 6))
    assert sp.jp_basic_open_report(prod)["ok"]
