"""Field arithmetic unit tests."""

import itertools

import pytest

from nilprim import ff
from nilprim.ff import (FieldError, element_order, embed_subfield,
                        field_from_size, frobenius, make_field,
                        minimal_polynomial_over_prime, parse_field_descriptor,
                        sum_of_two_squares_minus_one)


def test_prime_field_basics():
    F = make_field(7, 1)
    assert F.q == 7
    assert F.add(5, 4) == 2
    assert F.mul(3, 5) == 1
    assert F.inv(3) == 5
    assert F.neg(0) == 0
    assert F.pow(3, 6) == 1
    assert element_order(F, F.primitive) == 6


@pytest.mark.parametrize("p,k", [(3, 1), (3, 2), (3, 3), (7, 2), (5, 2)])
def test_field_axioms_exhaustive(p, k):
    F = make_field(p, k)
    elems = list(range(F.q))
    for a, b in itertools.product(elems[:25], repeat=2):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
    for a in elems:
        assert F.add(a, F.neg(a)) == 0
        if a != 0:
            assert F.mul(a, F.inv(a)) == 1
    # distributivity on a slice
    for a, b, c in itertools.product(elems[: min(F.q, 9)], repeat=3):
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


def test_primitive_element_generates():
    for p, k in [(3, 2), (7, 1), (3, 3)]:
        F = make_field(p, k)
        seen = set()
        x = 1
        for _ in range(F.q - 1):
            seen.add(x)
            x = F.mul(x, F.primitive)
        assert len(seen) == F.q - 1


def test_modulus_is_irreducible():
    F = make_field(3, 6)
    assert ff.is_irreducible(list(F.modulus), 3)
    # x^2 + 2x + 1 = (x + 1)^2 is reducible over GF(3)
    assert not ff.is_irreducible([1, 2, 1], 3)


def test_field_from_size():
    F = field_from_size(27)
    assert (F.p, F.k) == (3, 3)
    with pytest.raises(FieldError):
        field_from_size(12)
    with pytest.raises(FieldError):
        field_from_size(1)


def test_descriptor_roundtrip():
    for p, k in [(3, 1), (3, 3), (11, 1), (7, 2)]:
        F = make_field(p, k)
        G = parse_field_descriptor(F.descriptor())
        assert G == F
        for x in range(min(F.q, 30)):
            assert F.elem_from_str(F.elem_to_str(x)) == x


def test_element_order_divides_group_order():
    F = make_field(3, 3)
    for x in range(1, F.q):
        d = element_order(F, x)
        assert (F.q - 1) % d == 0
        assert F.pow(x, d) == 1
        # order is exact, not just a multiple
        for r in ff.factorize(d):
            assert F.pow(x, d // r) != 1


def test_frobenius_fixes_base_field():
    F9 = make_field(3, 2)
    for x in range(9):
        assert frobenius(F9, x, 3, 1) == F9.pow(x, 3)
    # x -> x^3 fixes exactly GF(3) inside GF(9)
    fixed = [x for x in range(9) if frobenius(F9, x, 3, 1) == x]
    assert len(fixed) == 3


def test_embedding_is_ring_hom():
    F3 = make_field(3, 1)
    F27 = make_field(3, 3)
    emb = embed_subfield(F3, F27)
    for a in range(3):
        for b in range(3):
            assert emb(F3.add(a, b)) == F27.add(emb(a), emb(b))
            assert emb(F3.mul(a, b)) == F27.mul(emb(a), emb(b))
    assert emb(1) == 1
    # inverse recovers elements that lie in the image
    for a in range(3):
        assert emb.inverse(emb(a)) == a


def test_embedding_gf9_in_gf81():
    F9 = make_field(3, 2)
    F81 = make_field(3, 4)
    emb = embed_subfield(F9, F81)
    for a in range(9):
        for b in range(9):
            assert emb(F9.mul(a, b)) == F81.mul(emb(a), emb(b))
    assert element_order(F81, emb(F9.primitive)) == 8


def test_minimal_polynomial_over_prime():
    F27 = make_field(3, 3)
    mp = minimal_polynomial_over_prime(F27, F27.primitive)
    assert len(mp) == 4 and mp[-1] == 1  # degree 3, monic
    assert ff.is_irreducible(list(mp), 3)
    # the element is a root
    acc, pw = 0, 1
    for c in mp:
        acc = F27.add(acc, F27.mul(c, pw))
        pw = F27.mul(pw, F27.primitive)
    assert acc == 0


def test_sum_of_two_squares_minus_one():
    for q in [3, 7, 11, 19, 27]:
        F = field_from_size(q)
        e, f = sum_of_two_squares_minus_one(F)
        assert F.add(F.mul(e, e), F.mul(f, f)) == F.neg(1)


def test_factorize_and_is_prime():
    assert ff.factorize(728) == {2: 3, 7: 1, 13: 1}
    assert ff.is_prime(97)
    assert not ff.is_prime(91)
