import random
from itertools import product

import pytest

from grothkit.errors import IndexOutOfRange, NotAPermutation, RankMismatch
from grothkit.permutation import (
    all_permutations, bruhat_leq, demazure_product, demazure_star, descent_positions,
    from_one_line, hecke_eval, identity, length, longest, mult_left_t, mult_right_t, mult_s,
    parse, reduced_word,
)
from oracles import inversions_brute, plain_product, reduced_words, subword_bruhat


def test_from_one_line():
    w = from_one_line([2, 1, 4, 3])
    assert w.n == 4 and w.word == (2, 1, 4, 3)
    assert from_one_line([1]) == identity(1)


@pytest.mark.parametrize("bad", [[2, 2, 3], [0, 1], [1, 3], []])
def test_from_one_line_rejects(bad):
    with pytest.raises(NotAPermutation):
        from_one_line(bad)


def test_parse_formats_agree():
    assert parse("2157634") == parse("2,1,5,7,6,3,4")
    assert parse("e", 3) == identity(3)
    assert parse("10,9,8,7,6,5,4,3,2,1") == longest(10)
    assert str(longest(10)) == "10,9,8,7,6,5,4,3,2,1"
    with pytest.raises(RankMismatch):
        parse("21", 3)
    with pytest.raises(NotAPermutation):
        parse("e")


def test_length_examples():
    assert length(parse("2157634")) == 8
    for n in range(1, 7):
        assert length(identity(n)) == 0
        assert length(longest(n)) == n * (n - 1) // 2


def test_length_matches_brute_count():
    for n in range(1, 6):
        for w in all_permutations(n):
            assert w.length == inversions_brute(w.word)


def test_transpositions():
    w = parse("2143")
    assert mult_right_t(w, 1, 3) == parse("4123")
    assert mult_left_t(w, 1, 3) == parse("2341")
    for w in all_permutations(4):
        for i in range(1, 4):
            for j in range(i + 1, 5):
                assert mult_right_t(mult_right_t(w, i, j), i, j) == w
                assert mult_left_t(mult_left_t(w, i, j), i, j) == w
    with pytest.raises(IndexOutOfRange):
        mult_right_t(w, 3, 3)
    with pytest.raises(IndexOutOfRange):
        mult_left_t(w, 0, 2)


def test_demazure_star_examples():
    assert demazure_star(parse("321"), 1) == parse("321")
    assert demazure_star(identity(3), 1) == parse("213")
    with pytest.raises(IndexOutOfRange):
        demazure_star(identity(3), 3)


def test_hecke_eval_examples():
    assert hecke_eval((1, 2, 1, 2), 3) == parse("321")
    assert hecke_eval((1, 4, 3, 6, 5, 4, 6, 5), 7) == parse("2157634")
    assert hecke_eval((), 5) == identity(5)
    with pytest.raises(IndexOutOfRange):
        hecke_eval((3,), 3)


def test_longest_and_descents():
    assert longest(4) == parse("4321")
    assert longest(1) == identity(1)
    assert descent_positions(parse("2157634")) == (1, 4, 5)
    assert descent_positions(identity(5)) == ()
    assert descent_positions(longest(5)) == (1, 2, 3, 4)


@pytest.mark.parametrize("n", range(1, 6))
def test_length_changes_by_one(n):
    for w in all_permutations(n):
        for i in range(1, n):
            ws = mult_s(w, i)
            assert ws.length == w.length + (1 if w(i) < w(i + 1) else -1)


@pytest.mark.parametrize("n", range(2, 6))
def test_star_idempotent(n):
    for w in all_permutations(n):
        for i in range(1, n):
            once = demazure_star(w, i)
            assert demazure_star(once, i) == once
            assert once.length >= w.length


@pytest.mark.parametrize("n", range(1, 6))
def test_reduced_words_evaluate_to_w(n):
    for w in all_permutations(n):
        words = reduced_words(w.word)
        assert reduced_word(w) in words
        for word in words:
            assert len(word) == w.length
            assert plain_product(word, n) == w.word
            assert hecke_eval(word, n) == w


def test_bruhat_examples():
    assert bruhat_leq(parse("132"), parse("312"))
    assert not bruhat_leq(parse("231"), parse("312"))
    for v in all_permutations(4):
        assert bruhat_leq(identity(4), v)
        assert bruhat_leq(v, v)
    with pytest.raises(RankMismatch):
        bruhat_leq(identity(2), identity(3))


@pytest.mark.parametrize("n", range(1, 5))
def test_bruhat_matches_subword_oracle(n):
    perms = list(all_permutations(n))
    for u, v in product(perms, perms):
        assert bruhat_leq(u, v) == subword_bruhat(u, v), (u, v)


@pytest.mark.parametrize("n", range(2, 5))
def test_lifting_closure(n):
    perms = list(all_permutations(n))
    for u, v in product(perms, perms):
        for i in range(1, n):
            us, vs = mult_s(u, i), mult_s(v, i)
            if us.length > u.length and vs.length > v.length and bruhat_leq(us, vs):
                assert bruhat_leq(u, v)


def test_demazure_product_associative():
    rng = random.Random(7)
    perms = list(all_permutations(5))
    for _ in range(300):
        a, b, c = rng.choice(perms), rng.choice(perms), rng.choice(perms)
        assert demazure_product(demazure_product(a, b), c) == demazure_product(a, demazure_product(b, c))


def test_demazure_product_independent_of_word():
    for a in all_permutations(4):
        for b in all_permutations(4):
            results = set()
            for word in reduced_words(b.word):
                x = a
                for i in word:
                    x = demazure_star(x, i)
                results.add(x)
            assert results == {demazure_product(a, b)}


def test_all_permutations_is_lexicographic():
    perms = list(all_permutations(4))
    assert len(perms) == 24
    assert perms == sorted(perms)
    assert perms[0] == identity(4) and perms[-1] == longest(4)
