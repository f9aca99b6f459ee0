from __future__ import annotations

import itertools

import pytest
from hypothesis import given

from focksuture.diagrams import diagrams_by_grading
from focksuture.fock import create_word
from focksuture.words import (Word, WordError, block_decompose, comparable_pairs,
                              elementary_moves, enumerate_words, gradings, leq, min_max,
                              parse_word, profile, profile_inequalities, word_difference)

from conftest import word_pairs, words


def test_parse_word():
    assert str(parse_word("xyxy")) == "xyxy"
    assert parse_word("") == Word()
    assert len(parse_word("")) == 0
    assert parse_word("−++") == parse_word("xyy")
    assert parse_word("-++") == parse_word("xyy")
    with pytest.raises(WordError):
        parse_word("xaz")


def test_profiles():
    p = profile(parse_word("xyxy"))
    assert p.h_x == (1, 3) and p.h_y == (2, 4) and p.f_x == (0, 1)
    p = profile(parse_word("yxxy"))
    assert p.f_x == (1, 1) and p.g_y == (1, 1, 1, 2)
    p = profile(parse_word(""))
    assert all(len(v) == 0 for v in vars(p).values())


def test_leq_examples():
    assert leq(parse_word("xxyy"), parse_word("yxyx"))
    assert not leq(parse_word("xyyx"), parse_word("yxxy"))
    assert leq(parse_word("xyx"), parse_word("xyx"))
    assert not leq(parse_word("xy"), parse_word("xyy"))


def test_difference_examples():
    w = parse_word("xyyx")
    assert word_difference(w, w) == 0
    assert word_difference(parse_word("xy"), parse_word("yx")) == 1
    assert word_difference(parse_word("xxyy"), parse_word("yxyx")) == 3
    with pytest.raises(WordError):
        word_difference(parse_word("x"), parse_word("y"))


def test_min_max_examples():
    xy, yx = parse_word("xy"), parse_word("yx")
    assert min_max(xy, yx) == (xy, yx)
    assert min_max(parse_word("yxxy"), parse_word("xyyx")) == (parse_word("xyxy"), parse_word("yxyx"))


def test_block_decompose_examples():
    b = block_decompose(parse_word("xy"), parse_word("yx"))
    assert b.blocks == ((parse_word("xy"), parse_word("yx")),)
    b = block_decompose(parse_word("yxxy"), parse_word("xyyx"))
    nontrivial = [blk for blk in b.blocks if len(blk[0])]
    assert nontrivial == [(parse_word("yx"), parse_word("xy")), (parse_word("xy"), parse_word("yx"))]


def test_elementary_moves_examples():
    assert elementary_moves(parse_word("xy")) == [parse_word("yx")]
    assert elementary_moves(parse_word("xxx")) == []
    got = set(map(str, elementary_moves(parse_word("xyxy"))))
    assert got == {"yxxy", "xyyx"}
    # brute force: every substring x^a y^b swapped
    s = "xyxy"
    brute = set()
    for i, j in itertools.combinations(range(len(s) + 1), 2):
        sub = s[i:j]
        a = len(sub) - len(sub.lstrip("x"))
        if 0 < a < len(sub) and set(sub[a:]) == {"y"}:
            brute.add(s[:i] + sub[a:] + sub[:a] + s[j:])
    assert got == brute


def test_enumerate_and_pairs():
    assert list(map(str, enumerate_words(1, 1))) == ["xy", "yx"]
    assert list(map(str, enumerate_words(0, 3))) == ["yyy"]
    assert len(enumerate_words(2, 2)) == 6
    assert len(comparable_pairs(1, 1)) == 3
    assert comparable_pairs(0, 4) == ((parse_word("yyyy"), parse_word("yyyy")),)
    assert sum(len(comparable_pairs(*g)) for g in gradings(3)) == 14


@pytest.mark.parametrize("n", range(0, 8))
def test_pairs_match_diagram_counts(n):
    by = diagrams_by_grading(n + 1)
    for g in gradings(n):
        assert len(comparable_pairs(*g)) == len(by.get(g, ()))


@pytest.mark.parametrize("n", range(0, 9))
def test_profile_inequalities_agree(n):
    for g in gradings(n):
        ws = enumerate_words(*g)
        for a in ws:
            for b in ws:
                ineq = profile_inequalities(a, b)
                assert len(set(ineq)) == 1
                assert ineq[0] == leq(a, b)


@pytest.mark.parametrize("n", range(0, 7))
def test_partial_order_axioms(n):
    for g in gradings(n):
        ws = enumerate_words(*g)
        for a in ws:
            assert leq(a, a)
            for b in ws:
                if leq(a, b):
                    assert str(a) <= str(b)
                    if leq(b, a):
                        assert a == b
                    for c in ws:
                        if leq(b, c):
                            assert leq(a, c)


def test_annihilation_is_not_monotone():
    from focksuture.fock import annihilate_word
    a, b = parse_word("yxxy"), parse_word("xyyx")
    assert not leq(a, b)
    assert str(annihilate_word("x", 1, a)) == "yxy"
    assert str(annihilate_word("x", 1, b)) == "yyx"
    assert leq(annihilate_word("x", 1, a), annihilate_word("x", 1, b))


@given(word_pairs())
def test_creation_monotone_both_ways(pair):
    w0, w1 = pair
    for s in "xy":
        ns = w0.n_x if s == "x" else w0.n_y
        for i in range(ns + 2):
            assert leq(w0, w1) == leq(create_word(s, i, w0), create_word(s, i, w1))


@given(word_pairs())
def test_min_max_bounds(pair):
    w0, w1 = pair
    lo, hi = min_max(w0, w1)
    assert leq(lo, w0) and leq(lo, w1) and leq(w0, hi) and leq(w1, hi)
    assert block_decompose(w0, w1).recombine() == (lo, hi)
    if leq(w0, w1):
        assert (lo, hi) == (w0, w1)
        assert word_difference(w0, w1) >= 0


@given(word_pairs())
def test_block_decomposition_reassembles(pair):
    w0, w1 = pair
    b = block_decompose(w0, w1)
    assert b.first() == w0 and b.second() == w1
    for i, (u, v) in enumerate(b.blocks):
        assert u.grading == v.grading
        assert leq(u, v) if i % 2 == 0 else leq(v, u)


@given(words())
def test_forward_moves_go_up(w):
    for v in elementary_moves(w):
        assert leq(w, v) and v != w
        assert w in elementary_moves(v, "backwards")
