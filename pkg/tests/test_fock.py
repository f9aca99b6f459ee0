from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from focksuture import fock as fk
from focksuture.fock import FockElement, OperatorIndexError, parse_element as P
from focksuture.linalg import det_bareiss
from focksuture.verify import (VACUUM_EXCEPTIONS, inter_species_class, inter_species_failures,
                               simplicial_failures)
from focksuture.words import enumerate_words, gradings, leq, parse_word

from conftest import elements, word_pairs, words


def W(s):
    return FockElement.word(parse_word(s))


def test_arithmetic():
    assert W("xy") + W("xy").scale(-1) == FockElement.zero()
    assert P("xy - yx") + W("yx") == W("xy")
    assert P("xy + yx").scale(2) == P("2xy + 2yx")
    assert fk.mul(W("x"), W("y")) == W("xy")
    assert fk.mul(P("xy - yx"), P("xy - yx")) == P("xyxy - xyyx - yxxy + yxyx")
    assert fk.mul(FockElement.one(), W("yxy")) == W("yxy")


def test_parse_and_json_round_trip():
    e = P("2xxy - y + 3")
    assert e.coeff(parse_word("xxy")) == 2 and e.coeff(parse_word("")) == 3
    assert FockElement.from_json(e.to_json()) == e
    assert P(str(e)) == e
    assert str(P("0")) == "0"


def test_forms_examples():
    assert fk.pairing(W("xy"), W("yx")) == 1
    assert fk.pairing(W("yx"), W("xy")) == 0
    assert fk.pairing(W("xyyx"), W("xyyx")) == 1
    assert fk.pairing(W("x"), W("y")) == 0
    assert fk.dot(W("xy"), W("xy")) == 1
    assert fk.dot(W("xy"), W("yx")) == 0
    assert fk.dot(P("xy - yx"), P("xy + yx")) == 0


def test_operator_examples():
    assert fk.annihilate("y", 1, W("yxxy")) == W("xxy")
    assert fk.annihilate("x", 0, W("yx")) == FockElement.zero()
    assert fk.annihilate("x", 1, P("xy - yx")) == FockElement.zero()
    assert fk.create("y", 1, W("xyx")) == W("xyyx")
    assert fk.create("x", 1, W("yxy")) == W("yxxy")
    assert fk.create("x", 0, FockElement.one()) == W("x")
    with pytest.raises(OperatorIndexError):
        fk.create("x", 3, W("xy"))


def test_adjointness_is_one_directional():
    # a_{y,1} yxxy = xxy <= xyx, but yxxy is not <= a*_{y,1} xyx = xyyx
    assert leq(parse_word("xxy"), parse_word("xyx"))
    assert not leq(parse_word("yxxy"), parse_word("xyyx"))
    # a*_{x,1} yxy = yxxy is not <= xyyx, but yxy <= a_{x,1} xyyx = yyx
    assert fk.annihilate("x", 1, W("xyyx")) == W("yyx")
    assert leq(parse_word("yxy"), parse_word("yyx"))


def test_derivatives_and_differentials():
    assert fk.derivative("x", W("xyx")) == P("yx + xy")
    assert fk.derivative("x", W("yyy")) == FockElement.zero()
    assert fk.derivative("x", fk.derivative("y", W("xy"))) == FockElement.one()
    assert fk.derivative("y", fk.derivative("x", W("xy"))) == FockElement.one()
    assert fk.differential("x", W("xyx")) == P("-yx + xy")


@pytest.mark.parametrize("n", range(0, 7))
def test_differentials_square_zero_and_homotopy(n):
    for g in gradings(n):
        for w in enumerate_words(*g):
            e = FockElement.word(w)
            for s in "xy":
                assert fk.differential(s, fk.differential(s, e)) == FockElement.zero()
                homotopy = fk.differential(s, fk.create(s, 0, e)) + fk.create(s, 0, fk.differential(s, e))
                # the anticommutator is minus the identity with d_s = sum (-1)^i a_{s,i}
                assert homotopy == -e
            dxdy = fk.differential("x", fk.differential("y", e))
            assert dxdy == fk.differential("y", fk.differential("x", e))


def test_T_and_U_examples():
    assert fk.Tstar("y", 0, W("x")) == P("yx - xy")
    assert fk.T("x", 1, W("yxxy")) == FockElement.zero()
    assert fk.T("x", 0, W("xyx")) == FockElement.zero()
    assert fk.T("x", 1, W("xyx")) == P("yx - xy")
    # the chain 1 -> x -> yx - xy -> -y -> -1
    e = fk.create("x", 0, FockElement.one())
    e = fk.Tstar("y", 0, e)
    assert e == P("yx - xy")
    e = fk.annihilate("x", 0, e)
    assert e == P("-y")
    assert fk.annihilate("y", 0, e) == P("-1")


@pytest.mark.parametrize("n", range(0, 8))
def test_temperley_lieb(n):
    for g in gradings(n):
        for w in enumerate_words(*g):
            e = FockElement.word(w)
            for s in "xy":
                ns = w.n_x if s == "x" else w.n_y
                U = lambda i, t, s=s: fk.U(s, i, t)
                for i in range(ns):
                    assert U(i, U(i, e)) == FockElement.zero()
                    if i + 1 < ns:
                        assert U(i, U(i + 1, U(i, e))) == -U(i, e)
                        assert U(i + 1, U(i, U(i + 1, e))) == -U(i + 1, e)
                    for j in range(i + 2, ns):
                        assert U(i, U(j, e)) == U(j, U(i, e))


def test_gram_examples():
    g = fk.gram(1, 1)
    assert g.matrix.tolist() == [[1, 1], [0, 1]]
    assert fk.gram(3, 0).matrix.tolist() == [[1]]
    assert fk.gram(1, 1, "dot").matrix.tolist() == [[1, 0], [0, 1]]


@pytest.mark.parametrize("n", range(0, 9))
def test_gram_unimodular(n):
    for g in gradings(n):
        assert abs(fk.gram(*g).determinant()) == 1
        assert det_bareiss(fk.gram(*g).matrix.tolist()) == 1


@pytest.mark.parametrize("n", range(0, 6))
def test_pairing_determined_by_axioms(n):
    for g in gradings(n):
        ws = enumerate_words(*g)
        for a in ws:
            for b in ws:
                value, trace = fk.pairing_reduction(a, b)
                assert value == int(leq(a, b))


@given(word_pairs(6))
def test_partial_adjointness(pair):
    w0, w1 = pair
    # <a_{x,i} u | v> = <u | a*_{x,i} v> with u one x heavier
    u = fk.create("x", 0, FockElement.word(w0))
    v = FockElement.word(w1)
    for i in range(w0.n_x + 2):
        assert fk.pairing(fk.annihilate("x", i, u), v) == fk.pairing(u, fk.create("x", i, v))
    u = FockElement.word(w0)
    v = fk.create("y", 0, FockElement.word(w1))
    for i in range(w1.n_y + 2):
        assert fk.pairing(u, fk.annihilate("y", i, v)) == fk.pairing(fk.create("y", i, u), v)


@given(word_pairs(6), st.sampled_from("xy"), st.integers(0, 8))
def test_creation_isometry(pair, s, i):
    w0, w1 = pair
    ns = w0.n_x if s == "x" else w0.n_y
    i = i % (ns + 2)
    u, v = FockElement.word(w0), FockElement.word(w1)
    assert fk.pairing(fk.create(s, i, u), fk.create(s, i, v)) == fk.pairing(u, v)
    assert fk.dot(fk.create(s, i, u), fk.create(s, i, v)) == fk.dot(u, v)


@given(words(5), words(5))
def test_grading_orthogonality(a, b):
    if a.grading != b.grading:
        assert fk.pairing(FockElement.word(a), FockElement.word(b)) == 0


@given(elements(), elements())
def test_pairing_bilinear(u, v):
    assert fk.pairing(u + v, v) == fk.pairing(u, v) + fk.pairing(v, v)
    assert fk.pairing(u.scale(3), v) == 3 * fk.pairing(u, v)


def test_inter_species_corner_witnesses():
    xy, yx = W("xy"), W("yx")
    # initial corner: a*(x,0) a*(y,0) versus the other order
    assert fk.create("x", 0, fk.create("y", 0, FockElement.one())) == W("xy")
    assert fk.create("y", 0, fk.create("x", 0, FockElement.one())) == W("yx")
    # adjacent to the initial corner, two annihilations fail to commute
    lhs = fk.annihilate("x", 1, fk.annihilate("y", 0, xy))
    rhs = fk.annihilate("y", 0, fk.annihilate("x", 1, xy))
    assert lhs == FockElement.zero() and rhs == FockElement.one()
    assert fk.annihilate("x", 2, fk.annihilate("y", 2, yx)) != fk.annihilate("y", 2, fk.annihilate("x", 2, yx))


@pytest.mark.parametrize("n", range(0, 8))
def test_inter_species_failures_are_corners(n):
    for f in inter_species_failures(n):
        cls = inter_species_class(parse_word(f["word"]), f["i"], f["j"])
        assert cls is not None
        if cls == "adjacent":
            assert f["ops"] == "aa"


@pytest.mark.parametrize("n", range(0, 8))
def test_simplicial_relations(n):
    assert simplicial_failures(n) == VACUUM_EXCEPTIONS


def test_simplicial_vacuum_exception():
    # a_{s,0} a*_{s,1} on the vacuum: a*_{x,1}(1) = x, then a_{x,0} x = 1
    e = fk.annihilate("x", 0, fk.create("x", 1, FockElement.one()))
    assert e == FockElement.one()


@given(words(6), st.sampled_from("xy"), st.integers(0, 8), st.integers(0, 8))
def test_creations_commute_after_shift(w, s, i, j):
    ns = w.n_x if s == "x" else w.n_y
    i, j = i % (ns + 2), j % (ns + 2)
    if i > j:
        i, j = j, i
    e = FockElement.word(w)
    assert fk.create(s, i, fk.create(s, j, e)) == fk.create(s, j + 1, fk.create(s, i, e))


@given(words(6), st.integers(0, 8), st.integers(0, 8))
def test_inter_species_creations_commute(w, i, j):
    i, j = i % (w.n_x + 2), j % (w.n_y + 2)
    if (i, j) in ((0, 0), (w.n_x + 1, w.n_y + 1)):
        return
    e = FockElement.word(w)
    assert fk.create("x", i, fk.create("y", j, e)) == fk.create("y", j, fk.create("x", i, e))
