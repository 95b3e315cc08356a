import itertools
from collections import Counter, defaultdict

import pytest
from hypothesis import given, strategies as st

from ihara.errors import GoodMonomial, NotLyndon, TooShort
from ihara.words import (
    BMonomial,
    LyndonMonomial,
    all_words,
    beta_circ,
    beta_dec,
    beta_vert,
    circuit_walkthrough,
    decreasing_factorization,
    donlyn,
    enumerate_lyndon,
    involution_step,
    is_good,
    is_lyndon,
    lyndon_factorization,
    lyndon_monomials,
    parse_word,
    phi,
    phi_inverse,
    rotations,
    standard_factorization,
)

from oracles import brute_is_lyndon, brute_lyndon_factorizations, witt

# letters a, b, c are 0, 1, 2
a, b, c = 0, 1, 2
W = (3, 4, 5, 1, 2, 4, 2, 1, 2, 3, 1, 2, 4, 2)
W_IMAGE = (2, 2, 2, 1, 1, 3, 4, 4, 1, 4, 2, 2, 5, 3)

words = st.lists(st.integers(0, 3), max_size=12).map(tuple)


@pytest.mark.parametrize(
    "w, expected",
    [((a,), True), ((a, a), False), ((a, a, b, a, b), True), ((), False), ((b, a), False), ((a, b, a, b), False)],
)
def test_is_lyndon_examples(w, expected):
    assert is_lyndon(w) is expected


def test_is_lyndon_matches_rotation_definition():
    for w in all_words(3, 8):
        assert is_lyndon(w) == brute_is_lyndon(w), w


def test_factorization_examples():
    assert lyndon_factorization(W) == [(3, 4, 5), (1, 2, 4, 2), (1, 2, 3, 1, 2, 4, 2)]
    assert lyndon_factorization(()) == []
    assert lyndon_factorization((a, b, a, b)) == [(a, b), (a, b)]


def test_factorization_is_the_unique_one():
    for w in all_words(3, 8):
        brute = brute_lyndon_factorizations(w)
        assert len(brute) == 1
        assert lyndon_factorization(w) == [tuple(f) for f in brute[0]]


def test_decreasing_factorization_examples():
    assert decreasing_factorization(W) == [(3, 4, 5), (1, 2, 4, 2), (1, 2, 3), (1, 2, 4, 2)]
    assert decreasing_factorization((a,)) == [(a,)]
    assert decreasing_factorization((b, a)) == [(b,), (a,)]
    assert decreasing_factorization(()) == []


@given(words)
def test_decreasing_factorization_refines_lyndon(w):
    ds = decreasing_factorization(w)
    assert sum(ds, ()) == w
    seen = ()
    for d in ds:
        assert all(d[0] <= x for x in seen)
        seen += d
    # every Lyndon factor is a union of contiguous d-blocks
    cuts = set(itertools.accumulate(len(d) for d in ds))
    assert set(itertools.accumulate(len(l) for l in lyndon_factorization(w))) <= cuts


@pytest.mark.parametrize(
    "l, expected",
    [((a, a, b, a, b), ((a, a, b), (a, b))), ((a, b), ((a,), (b,))), ((a, a, b), ((a,), (a, b)))],
)
def test_standard_factorization_examples(l, expected):
    assert standard_factorization(l) == expected


def test_standard_factorization_errors():
    with pytest.raises(NotLyndon):
        standard_factorization((b, a))
    with pytest.raises(TooShort):
        standard_factorization((a,))
    with pytest.raises(NotLyndon):
        donlyn((a, a))


@pytest.mark.parametrize(
    "l, expected", [((a, a, b, a, b), (a, b, a, a, b)), ((a, b), (b, a)), ((a, a, b), (a, b, a))]
)
def test_donlyn_examples(l, expected):
    assert donlyn(l) == expected


def test_standard_factors_are_lyndon_and_ordered():
    for l in enumerate_lyndon(3, 8):
        if len(l) < 2:
            continue
        l0, m0 = standard_factorization(l)
        assert l0 + m0 == l
        assert is_lyndon(l0) and is_lyndon(m0)
        assert l0 < l < m0
        # longest Lyndon proper right factor
        assert all(not brute_is_lyndon(l[k:]) for k in range(1, len(l0)))


def test_concatenation_of_increasing_lyndon_pair_is_lyndon():
    lyn = enumerate_lyndon(3, 7)
    count = 0
    for l in lyn:
        for m in lyn:
            if l < m and len(l) + len(m) <= 8:
                assert brute_is_lyndon(l + m)
                count += 1
    assert count > 1000


def test_donlyn_is_second_smallest_rotation():
    for l in enumerate_lyndon(3, 8):
        if len(l) >= 2:
            assert donlyn(l) == sorted(rotations(l))[1]


def test_standard_factorization_criterion():
    lyn = enumerate_lyndon(3, 6)
    for l in lyn:
        for m in lyn:
            if l < m and len(l) + len(m) <= 7:
                lhs = standard_factorization(l + m) == (l, m)
                rhs = all(m < r for r in rotations(l)[1:])
                assert lhs == rhs, (l, m)


def test_beta_examples():
    assert beta_circ((1, 2)) == BMonomial({(1, 2): 1, (2, 1): 1})
    assert beta_circ((1,)) == BMonomial({(1, 1): 1})
    assert beta_circ((1, 2, 1)) == BMonomial({(1, 2): 1, (2, 1): 1, (1, 1): 1})
    assert beta_circ(()) == BMonomial() == beta_dec(()) == beta_vert(())
    assert beta_vert((b, a)) == BMonomial({(a, b): 1, (b, a): 1})
    assert beta_vert((a, a)) == BMonomial({(a, a): 2})
    expected = "b(1,2)^3 b(2,1)^2 b(2,3) b(2,4)^2 b(3,1) b(3,4) b(4,2)^2 b(4,5) b(5,3)"
    assert str(beta_dec(W)) == expected
    assert str(beta_vert(W_IMAGE)) == expected


def test_beta_circ_rotation_invariance():
    for w in all_words(3, 7):
        assert all(beta_circ(r) == beta_circ(w) for r in rotations(w))


@given(words)
def test_beta_dec_via_decreasing_factors(w):
    dec = BMonomial()
    for d in decreasing_factorization(w):
        dec = dec * beta_circ(d)
    assert dec == beta_dec(w)


def test_literal_construction_reproduces_the_worked_example():
    walk = circuit_walkthrough(W)
    assert walk.by_top_desc == (
        (5, 4, 4, 4, 3, 3, 2, 2, 2, 2, 2, 1, 1, 1),
        (4, 3, 2, 2, 5, 2, 1, 4, 1, 1, 4, 2, 3, 2),
    )
    assert walk.image == W_IMAGE
    assert beta_vert(walk.image) == beta_dec(W)


def test_literal_construction_is_not_injective():
    # both words share a count matrix of (letter, successor) pairs
    assert circuit_walkthrough((1, 1, 2, 2)).image == circuit_walkthrough((2, 1, 2, 1)).image


def test_phi_sorts_to_the_literal_construction():
    for w in all_words(3, 6):
        image = phi(w)
        blocks = defaultdict(list)
        for x, y in zip(sorted(w), image):
            blocks[x].append(y)
        block_sorted = tuple(y for x in sorted(blocks) for y in sorted(blocks[x]))
        assert block_sorted == circuit_walkthrough(w).image


def test_phi_examples():
    assert phi(()) == ()
    assert phi((a,) * 5) == (a,) * 5
    assert Counter(phi(W)) == Counter(W)
    assert beta_vert(phi(W)) == beta_dec(W)
    assert phi_inverse(phi(W)) == W
    assert phi_inverse(()) == ()


def test_phi_exhaustive():
    classes = defaultdict(set)
    n = 0
    for w in all_words(3, 6):
        n += 1
        image = phi(w)
        assert sorted(image) == sorted(w)
        assert beta_vert(image) == beta_dec(w)
        classes[tuple(sorted(w))].add(image)
    assert n == 1093
    sizes = Counter(tuple(sorted(w)) for w in all_words(3, 6))
    assert all(len(classes[k]) == sizes[k] for k in sizes)


def test_phi_inverse_round_trips():
    for w in itertools.product(range(3), repeat=4):
        assert phi_inverse(phi(w)) == w
        assert phi(phi_inverse(w)) == w


@given(words)
def test_phi_inverse_property(w):
    assert phi_inverse(phi(w)) == w
    assert phi(phi_inverse(w)) == w


def test_involution_examples():
    small = LyndonMonomial.of((a,), (a, b))
    merged = LyndonMonomial.of((a, a, b))
    assert involution_step(small) == merged
    assert involution_step(merged) == small
    assert not is_good(small) and not is_good(merged)
    assert is_good(LyndonMonomial.of((a, b), (c,)))
    with pytest.raises(GoodMonomial):
        involution_step(LyndonMonomial.of((a, b)))


def test_lyndon_monomial_validation():
    with pytest.raises(ValueError):
        LyndonMonomial.of((a, b), (a, b))
    with pytest.raises(NotLyndon):
        LyndonMonomial.of((b, a))
    assert LyndonMonomial.of((b,), (a,)) == LyndonMonomial.of((a,), (b,))


def test_involution_exhaustive():
    checked = 0
    for pi in lyndon_monomials(3, 5):
        if is_good(pi):
            continue
        image = involution_step(pi)
        assert image != pi
        assert involution_step(image) == pi
        assert image.beta() == pi.beta()
        assert abs(image.degree - pi.degree) == 1
        assert image.sign() == -pi.sign()
        checked += 1
    assert checked == 228


@pytest.mark.parametrize(
    "n, m, expected",
    [
        (2, 3, [(a,), (a, a, b), (a, b), (a, b, b), (b,)]),
        (1, 5, [(a,)]),
        (3, 1, [(a,), (b,), (c,)]),
        (2, 0, []),
    ],
)
def test_enumerate_lyndon_examples(n, m, expected):
    assert enumerate_lyndon(n, m) == expected


@pytest.mark.parametrize("n", [1, 2, 3])
def test_lyndon_counts_match_witt(n):
    result = enumerate_lyndon(n, 10)
    assert result == sorted(result)
    assert all(is_lyndon(l) for l in result)
    counts = Counter(len(l) for l in result)
    assert [counts[d] for d in range(1, 11)] == [witt(n, d) for d in range(1, 11)]


def test_enumeration_matches_filter():
    assert enumerate_lyndon(3, 6) == sorted(w for w in all_words(3, 6) if brute_is_lyndon(w))


def test_parse_word():
    assert parse_word("3,4,5") == (3, 4, 5)
    assert parse_word("") == ()
