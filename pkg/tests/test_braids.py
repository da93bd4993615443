import itertools

import pytest
from hypothesis import given, settings, strategies as st

from skeinalg.braids import (
    BraidWord,
    all_perms,
    compose,
    coset_split,
    descent_word,
    identity_perm,
    inverse_perm,
    length,
    mul_transposition,
    parse_braid,
)


def brute_inversions(p):
    return sum(
        1
        for i, j in itertools.combinations(range(len(p)), 2)
        if p[i] > p[j]
    )


def test_length_examples():
    assert length(identity_perm(4)) == 0
    assert length((1, 0)) == 1
    assert length((2, 1, 0)) == brute_inversions((2, 1, 0)) == 3


def test_mul_transposition_examples():
    q, change = mul_transposition(identity_perm(2), 0)
    assert q == (1, 0) and change == 1
    q, change = mul_transposition((1, 0), 0)
    assert q == (0, 1) and change == -1
    p = compose((1, 0, 2), (0, 2, 1))  # s_0 s_1 as a permutation
    q, change = mul_transposition(p, 0)
    assert change == 1 and length(q) == length(p) + 1


def test_mul_transposition_range_check():
    with pytest.raises(ValueError):
        mul_transposition((0, 1), 1)


def all_reduced_words(p):
    if length(p) == 0:
        yield ()
        return
    n = len(p)
    for i in range(n - 1):
        if p[i] > p[i + 1]:  # descent: s_i can end a reduced word
            q, change = mul_transposition(p, i)
            assert change == -1
            for word in all_reduced_words(q):
                yield word + (i,)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_every_reduced_word_climbs(n):
    for p in all_perms(n):
        for word in all_reduced_words(p):
            cur = identity_perm(n)
            for letter in word:
                cur, change = mul_transposition(cur, letter)
                assert change == 1
            assert cur == p


def test_reduced_words_climb_width_5_canonical():
    for p in all_perms(5):
        cur = identity_perm(5)
        for letter in descent_word(p):
            cur, change = mul_transposition(cur, letter)
            assert change == 1
        assert cur == p


@given(st.permutations(list(range(5))), st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_random_reduced_word_climbs(p, rng):
    p = tuple(p)
    # peel a random reduced word off p, then climb it back up
    word = []
    cur = p
    while length(cur) > 0:
        descents = [i for i in range(4) if cur[i] > cur[i + 1]]
        i = rng.choice(descents)
        cur, change = mul_transposition(cur, i)
        assert change == -1
        word.append(i)
    word.reverse()
    climb = identity_perm(5)
    for letter in word:
        climb, change = mul_transposition(climb, letter)
        assert change == 1
    assert climb == p


def test_descent_word_is_reduced():
    for n in range(1, 6):
        for p in all_perms(n):
            assert len(descent_word(p)) == length(p)


def test_coset_split_identity_and_generator():
    assert coset_split(identity_perm(3)) is None
    alpha, beta = coset_split((0, 2, 1))  # the top transposition itself
    assert alpha == (0, 1) and beta == (0, 1)


def test_coset_split_spec_case():
    # s_{n-1} s_n in width n+1 splits as (s_{n-1}, identity)
    n = 3
    p = compose(
        identity_perm(n + 1)[: n - 2] + (n - 1, n - 2, n),
        identity_perm(n + 1)[: n - 1] + (n, n - 1),
    )
    alpha, beta = coset_split(p)
    assert beta == identity_perm(n)
    assert alpha == identity_perm(n)[: n - 2] + (n - 1, n - 2)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_coset_split_reassembles_with_additive_length(n):
    s_top = identity_perm(n)[: n - 2] + (n - 1, n - 2)
    for p in all_perms(n):
        split = coset_split(p)
        if p[n - 1] == n - 1:
            assert split is None
            continue
        alpha, beta = split
        alpha_full = alpha + (n - 1,)
        beta_full = beta + (n - 1,)
        assert compose(compose(alpha_full, s_top), beta_full) == p
        assert length(alpha) + 1 + length(beta) == length(p)


def test_coset_split_deterministic():
    for p in all_perms(4):
        assert coset_split(p) == coset_split(p)


def test_compose_inverse():
    for p in all_perms(4):
        assert compose(p, inverse_perm(p)) == identity_perm(4)


def test_parse_braid_examples():
    word = parse_braid("1 -2 1")
    assert word.letters == (1, -2, 1)
    assert word.width == 3
    word = parse_braid("s1 s1")
    assert word.letters == (1, 1)
    assert word.width == 2
    word = parse_braid("s2'", width=4)
    assert word.letters == (-2,)


def test_parse_braid_errors():
    with pytest.raises(ValueError):
        parse_braid("0")
    with pytest.raises(ValueError):
        parse_braid("2", width=2)
    with pytest.raises(ValueError):
        parse_braid("sx")
    with pytest.raises(ValueError):
        parse_braid("1.5")
    with pytest.raises(ValueError):
        BraidWord(2, (0,))
