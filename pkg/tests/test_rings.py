import pytest

import specprime as sp
from specprime.bitset import bits
from specprime.corpus import corpus_homs, zmod, zmod_product
from specprime.errors import InvalidParameter, NotAHomomorphism


def brute_ideal_masks(R):
    """Independent oracle: scan every subset for the ideal axioms (n <= 12)."""
    assert R.n <= 12
    out = []
    for m in range(1, 1 << R.n):
        if not m >> R.zero & 1:
            continue
        idx = list(bits(m))
        closed = all(m >> R.add_i(a, b) & 1 for a in idx for b in idx)
        absorbs = all(m >> R.mul_i(r, a) & 1 for a in idx for r in range(R.n))
        if closed and absorbs:
            out.append(m)
    return sorted(out)


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def test_zmod_arithmetic():
    R = sp.build_zmod(6)
    assert R.n == 6 and R.zero == 0 and R.one == 1
    assert R.mul_i(2, 3) == 0
    assert R.add_i(4, 5) == 3


@pytest.mark.parametrize("n", [1, 0, -3])
def test_zmod_rejects_degenerate_modulus(n):
    with pytest.raises(InvalidParameter):
        sp.build_zmod(n)


def test_zmod12_ideal_count_matches_brute_scan():
    R = sp.build_zmod(12)
    enumerated = sorted(I.members for I in sp.enumerate_ideals(R))
    assert enumerated == brute_ideal_masks(R)
    # one ideal per divisor of 12
    assert len(enumerated) == len(divisors(12)) == 6


@pytest.mark.parametrize("n", [2, 4, 6, 9, 10, 12])
def test_zmod_ideal_enumeration_against_scan(n):
    R = sp.build_zmod(n)
    assert sorted(I.members for I in sp.enumerate_ideals(R)) == brute_ideal_masks(R)


def test_enumerate_ideals_has_zero_and_unit():
    for R in (sp.build_zmod(12), zmod_product((2, 3))):
        masks = {I.members for I in sp.enumerate_ideals(R)}
        assert 1 << R.zero in masks
        assert R.full_mask in masks


def test_ideal_counts_field_and_square_product():
    assert len(sp.enumerate_ideals(sp.build_zmod(2))) == 2
    # Z/2 x Z/2: one ideal per coordinate choice of {0} or everything
    assert len(sp.enumerate_ideals(zmod_product((2, 2)))) == 4


def test_product_crt_bijection_with_zmod6():
    """Explicit residue bijection Z/6 -> Z/2 x Z/3 carries both tables over."""
    R6 = sp.build_zmod(6)
    P = sp.build_product([sp.build_zmod(2), sp.build_zmod(3)])
    pair_index = {tuple(name.strip("()").split(",")): i
                  for i, name in enumerate(P.element_names)}
    sigma = [pair_index[(str(x % 2), str(x % 3))] for x in range(6)]
    assert sorted(sigma) == list(range(6))
    assert sigma[R6.one] == P.one
    for a in range(6):
        for b in range(6):
            assert sigma[R6.add_i(a, b)] == P.add_i(sigma[a], sigma[b])
            assert sigma[R6.mul_i(a, b)] == P.mul_i(sigma[a], sigma[b])


def test_product_single_factor_is_relabeling():
    F2 = sp.build_zmod(2)
    P = sp.build_product([F2])
    assert P.n == 2
    assert (P.add == F2.add).all() and (P.mul == F2.mul).all()


def test_product_spectrum_sizes_add():
    z4xz2 = zmod_product((4, 2))
    assert len(sp.spec(z4xz2)[0]) == 2
    for shape in [(2, 3), (2, 2, 2), (4, 9)]:
        prod = zmod_product(shape)
        total = sum(len(sp.spec(zmod(n))[0]) for n in shape)
        assert len(sp.spec(prod)[0]) == total


def test_product_rejects_empty():
    with pytest.raises(InvalidParameter):
        sp.build_product([])


def test_poly_quotient_gf4_is_a_field():
    gf4 = sp.build_poly_quotient(2, [1, 1, 1])
    assert gf4.n == 4
    for x in range(gf4.n):
        if x == gf4.zero:
            continue
        assert any(gf4.mul_i(x, y) == gf4.one for y in range(gf4.n))


def test_poly_quotient_nilpotent():
    dual = sp.build_poly_quotient(2, [0, 0, 1])
    x = dual.element_names.index("x")
    assert dual.mul_i(x, x) == dual.zero


def test_poly_quotient_rejections():
    with pytest.raises(InvalidParameter):
        sp.build_poly_quotient(2, [1, 2])  # 2x+1 reduces to the constant 1
    with pytest.raises(InvalidParameter):
        sp.build_poly_quotient(4, [1, 0, 1])  # composite p
    with pytest.raises(InvalidParameter):
        sp.build_poly_quotient(2, [1] + [0] * 8 + [1])  # 2^9 over the cap
    with pytest.raises(InvalidParameter):
        sp.build_poly_quotient(3, [0, 0, 2])  # leading coefficient 2, not monic


def test_ideal_generated_examples():
    R = sp.build_zmod(12)
    assert sp.ideal_generated(R, [4]).elements() == (0, 4, 8)
    assert sp.ideal_generated(R, [1]).members == R.full_mask
    assert sp.ideal_generated(R, [4, 6]).elements() == (0, 2, 4, 6, 8, 10)
    assert sp.ideal_generated(R, []).elements() == (0,)


def test_radical_examples():
    R = sp.build_zmod(12)
    four = sp.ideal_generated(R, [4])
    assert sp.radical(four).elements() == (0, 2, 4, 6, 8, 10)
    unit = sp.ideal_generated(R, [1])
    assert sp.radical(unit).members == R.full_mask
    R6 = sp.build_zmod(6)
    zero = sp.ideal_generated(R6, [])
    assert sp.radical(zero).members == zero.members  # 6 squarefree


def radical_via_primes(I):
    """Oracle: intersection of the primes containing I (everything if none)."""
    R = I.ring
    primes, _ = sp.spec(R)
    out = R.full_mask
    for p in primes:
        if I.members & ~p.members == 0:
            out &= p.members
    return out


@pytest.mark.parametrize("n", [4, 6, 8, 9, 12, 18, 24])
def test_radical_properties_and_prime_intersection(n):
    R = sp.build_zmod(n)
    ideals = sp.enumerate_ideals(R)
    for I in ideals:
        r = sp.radical(I)
        assert I.members & ~r.members == 0                      # extensive
        assert sp.radical(r).members == r.members               # idempotent
        assert r.members == radical_via_primes(I)               # prime-intersection oracle
    for I in ideals:
        for J in ideals:
            if I.members & ~J.members == 0:                     # monotone
                assert sp.radical(I).members & ~sp.radical(J).members == 0


def test_spec_examples():
    R6 = sp.build_zmod(6)
    primes, poset = sp.spec(R6)
    assert sorted(p.elements() for p in primes) == [(0, 2, 4), (0, 3)]
    assert poset.is_antichain() and poset.n == 2

    F2 = sp.build_zmod(2)
    primes2, _ = sp.spec(F2)
    assert [p.elements() for p in primes2] == [(0,)]

    R4 = sp.build_zmod(4)
    primes4, _ = sp.spec(R4)
    assert [p.elements() for p in primes4] == [(0, 2)]


def test_hom_quotient_preimage():
    f = sp.build_hom(zmod(12), zmod(6), [x % 6 for x in range(12)])
    two_of_6 = sp.ideal_generated(zmod(6), [2])
    back = sp.preimage_ideal(f, two_of_6)
    assert back.members == sp.ideal_generated(zmod(12), [2]).members


def test_hom_identity_preimage():
    R = zmod(12)
    f = sp.identity_hom(R)
    for I in sp.enumerate_ideals(R):
        assert sp.preimage_ideal(f, I).members == I.members


def test_hom_rejects_non_homomorphism():
    with pytest.raises(NotAHomomorphism):
        sp.build_hom(zmod(6), zmod(4), [x % 4 for x in range(6)])
    with pytest.raises(NotAHomomorphism):
        sp.build_hom(zmod(6), zmod(6), [0] * 6)  # does not send 1 to 1


def test_preimage_of_prime_is_prime_over_corpus():
    for _, f in corpus_homs():
        for p in sp.spec(f.target)[0]:
            assert sp.is_prime_ideal(sp.preimage_ideal(f, p))


def test_corpus_ideals_pass_invariant_suite():
    for n in (8, 9, 30):
        R = zmod(n)
        for I in sp.enumerate_ideals(R):
            I.validate()


def test_compose_homs_matches_pointwise():
    f = sp.build_hom(zmod(12), zmod(6), [x % 6 for x in range(12)])
    g = sp.build_hom(zmod(6), zmod(3), [x % 3 for x in range(6)])
    gf = sp.compose_homs(f, g)
    assert gf.image == tuple(x % 3 for x in range(12))
