import itertools

import pytest
from hypothesis import given, strategies as st

from operadtower.perm import (Permutation, all_permutations, apply_to_list, block_permutation,
                              compose, direct_sum, identity, inverse, parse_perm, transposition)


def perms(max_n=5):
    return st.integers(0, max_n).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).map(lambda p: Permutation(tuple(p))))


def same_degree_pair(max_n=5):
    return st.integers(0, max_n).flatmap(lambda n: st.tuples(
        st.permutations(list(range(1, n + 1))), st.permutations(list(range(1, n + 1)))
    ).map(lambda pr: (Permutation(tuple(pr[0])), Permutation(tuple(pr[1])))))


# values worked out by hand from the image notation

def test_identity_examples():
    assert identity(0).images == ()
    assert identity(2) == Permutation((1, 2))
    assert apply_to_list(identity(3), "abc") == ("a", "b", "c")


def test_compose_examples():
    t = transposition()
    assert compose(t, t) == identity(2)
    assert compose(Permutation((2, 3, 1)), Permutation((2, 3, 1))) == Permutation((3, 1, 2))
    r = Permutation((3, 1, 2))
    assert compose(identity(3), r) == r


def test_inverse_examples():
    assert inverse(Permutation((2, 1))) == Permutation((2, 1))
    assert inverse(Permutation((2, 3, 1))) == Permutation((3, 1, 2))
    assert inverse(identity(4)) == identity(4)


def test_direct_sum_examples():
    assert direct_sum([Permutation((2, 1)), identity(1)]) == Permutation((2, 1, 3))
    assert direct_sum([]) == identity(0)
    assert direct_sum([identity(2), identity(3)]) == identity(5)


def test_block_permutation_examples():
    t = transposition()
    assert block_permutation(t, [1, 1]) == t
    assert block_permutation(t, [2, 1]) == Permutation((2, 3, 1))
    assert block_permutation(identity(3), [2, 0, 3]) == identity(5)


def test_apply_to_list_examples():
    assert apply_to_list(Permutation((2, 1)), "ab") == ("b", "a")
    assert apply_to_list(Permutation((2, 3, 1)), "abc") == ("c", "a", "b")


def test_text_form_round_trip():
    p = Permutation((2, 3, 1))
    assert str(p) == "[2,3,1]"
    assert parse_perm(str(p)) == p
    assert parse_perm("[]") == identity(0)


@pytest.mark.parametrize("images", [(1, 1), (0, 1), (2, 3), (1, 2, 4)])
def test_rejects_non_bijections(images):
    with pytest.raises(ValueError):
        Permutation(images)


@pytest.mark.parametrize("text", ["2,1", "[2,,1]", "[a]", "[1,1]"])
def test_parse_rejects_malformed(text):
    with pytest.raises(ValueError):
        parse_perm(text)


def test_compose_rejects_mismatched_degrees():
    with pytest.raises(ValueError):
        compose(identity(2), identity(3))


def test_block_permutation_rejects_wrong_size_count():
    with pytest.raises(ValueError):
        block_permutation(transposition(), [1, 2, 3])


def test_all_permutations_is_lexicographic_and_complete():
    got = [p.images for p in all_permutations(3)]
    assert got == sorted(itertools.permutations((1, 2, 3)))
    assert len(list(all_permutations(4))) == 24


# group laws, exhaustive for n <= 4

@pytest.mark.parametrize("n", range(5))
def test_group_laws_exhaustive(n):
    group = list(all_permutations(n))
    e = identity(n)
    for s in group:
        assert compose(e, s) == s == compose(s, e)
        assert compose(s, inverse(s)) == e == compose(inverse(s), s)
        for r in group:
            for q in group:
                assert compose(compose(s, r), q) == compose(s, compose(r, q))


@pytest.mark.parametrize("n", range(5))
def test_apply_to_list_is_a_left_action(n):
    xs = tuple("abcd"[:n])
    group = list(all_permutations(n))
    for s in group:
        for r in group:
            assert apply_to_list(compose(s, r), xs) == apply_to_list(s, apply_to_list(r, xs))


def _concat_oracle(s, sizes):
    """Label each block, move whole blocks by s, read off where letters went."""
    labels = list(range(1, sum(sizes) + 1))
    blocks, start = [], 0
    for k in sizes:
        blocks.append(labels[start:start + k])
        start += k
    moved = [x for blk in apply_to_list(s, blocks) for x in blk]
    return labels, moved


@pytest.mark.parametrize("n", range(4))
def test_block_permutation_matches_concatenation_oracle(n):
    for s in all_permutations(n):
        for sizes in itertools.product(range(4), repeat=n):
            labels, moved = _concat_oracle(s, sizes)
            assert list(apply_to_list(block_permutation(s, sizes), labels)) == moved


@pytest.mark.parametrize("n", range(4))
def test_block_then_sum_permutes_within_then_across(n):
    for s in all_permutations(n):
        for sizes in itertools.product(range(3), repeat=n):
            for parts in itertools.product(*(list(all_permutations(k)) for k in sizes)):
                flat = list(range(1, sum(sizes) + 1))
                blocks, start = [], 0
                for k, p in zip(sizes, parts):
                    blocks.append(list(apply_to_list(p, flat[start:start + k])))
                    start += k
                expected = [x for blk in apply_to_list(s, blocks) for x in blk]
                whole = compose(block_permutation(s, sizes), direct_sum(parts))
                assert list(apply_to_list(whole, flat)) == expected


@given(perms())
def test_singleton_blocks_recover_the_permutation(s):
    assert block_permutation(s, [1] * s.degree) == s


@given(st.lists(st.integers(0, 4), max_size=5))
def test_sum_of_identities_is_identity(sizes):
    assert direct_sum([identity(k) for k in sizes]) == identity(sum(sizes))


@given(same_degree_pair())
def test_inverse_reverses_composition(pair):
    s, r = pair
    assert inverse(compose(s, r)) == compose(inverse(r), inverse(s))


@given(perms(6))
def test_apply_puts_item_at_image(s):
    items = list(range(1, s.degree + 1))
    out = apply_to_list(s, items)
    assert all(out[s(i) - 1] == i for i in items)
