from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, strategies as st

from focksuture import duality as du
from focksuture import fock as fk
from focksuture.fock import FockElement, parse_element as P
from focksuture.linalg import matrix_power
from focksuture.sutures import bracket
from focksuture.verify import pawn_orbit
from focksuture.words import enumerate_words, gradings, parse_word

from conftest import elements, word_pairs, words


def W(s):
    return FockElement.word(parse_word(s))


def test_psi_examples():
    assert du.psi(parse_word("xy"), "x", {1}) == parse_word("yx")
    w = parse_word("xxyyxyyxyx")
    assert du.psi(w, "x", ()) == w
    assert set(du.exceptional_set(w, "x").indices) == {2, 3, 4}
    assert du.psi(w, "x", {2, 4}) == parse_word("xyxyxyyyxx")


def test_q_examples():
    assert du.Q_minus(W("xyxy")) == P("xyxy - xyyx - yxxy + yxyx")
    assert du.Q_plus(W("xyxy")) == P("xyxy - xxyy")
    assert du.Q_plus_inv(W("yx")) == P("xy + yx")
    assert du.Q_minus(W("xxx")) == W("xxx")


def test_h_examples():
    assert du.H_apply(W("xxx")) == W("xxx")
    assert du.H_apply(W("xy")) == W("yx")
    assert du.H_apply(W("yx")) == P("yx - xy")
    assert du.H_power(W("xy"), 3) == -W("xy")
    assert du.H_inv(du.H_apply(W("xyyx"))) == W("xyyx")


def test_h_of_y_power_x_power():
    # two terms, the second with the first x moved one place left
    assert du.H_terms_explicit(parse_word("yyxxx")) == P("yyxxx - yxyxx")
    assert du.H_apply(W("yyxxx")) == P("yyxxx - yxyxx")
    assert du.H_apply(W("xxyyy")) == W("yyyxx")


def test_block_expansion_term_counts():
    assert du.block_term_count(parse_word("xyxy")) == 2
    assert du.block_term_count(parse_word("xyxyxy")) == 4
    assert len(du.H_block_expansion(parse_word("xyxy")).terms) == 2


def test_recursive_matrix_examples():
    assert du.H_recursive_matrix(1, 1).tolist() == [[0, -1], [1, 1]]
    assert du.H_recursive_matrix(0, 4).tolist() == [[1]]
    assert np.array_equal(du.H_recursive_matrix(2, 2), du.H_matrix(2, 2))


@pytest.mark.parametrize("n", range(0, 9))
def test_q_inverses(n):
    for g in gradings(n):
        for w in enumerate_words(*g):
            e = FockElement.word(w)
            assert du.Q_plus(du.Q_plus_inv(e)) == e and du.Q_plus_inv(du.Q_plus(e)) == e
            assert du.Q_minus(du.Q_minus_inv(e)) == e and du.Q_minus_inv(du.Q_minus(e)) == e


@pytest.mark.parametrize("n", range(0, 9))
def test_h_routes_agree(n):
    for g in gradings(n):
        ref = du.H_matrix(*g)
        assert np.array_equal(du.H_recursive_matrix(*g), ref)
        for w in enumerate_words(*g):
            h = du.H_apply(FockElement.word(w))
            assert du.H_terms_explicit(w) == h
            assert du.H_block_expansion(w) == h
            assert du.H_recursive_formula(w) == h
            assert du.Q_plus(du.Q_minus_inv(FockElement.word(w))) == h


@given(word_pairs(7))
def test_intertwining_and_duality(pair):
    u, v = (FockElement.word(w) for w in pair)
    d = fk.dot(u, v)
    assert fk.pairing(u, du.Q_plus(v)) == d
    assert fk.pairing(du.Q_minus(u), v) == d
    assert fk.pairing(u, v) == fk.pairing(v, du.H_apply(u))
    assert fk.pairing(v, du.H_apply(u)) == fk.pairing(du.H_inv(v), u)
    assert fk.pairing(du.H_apply(u), du.H_apply(v)) == fk.pairing(u, v)


@given(elements(6))
def test_h_linear_and_invertible(e):
    assert du.H_inv(du.H_apply(e)) == e
    assert du.H_apply(e.scale(2)) == du.H_apply(e).scale(2)


@pytest.mark.parametrize("n", range(0, 10))
def test_periodicity(n):
    for n_x, n_y in gradings(n):
        h = du.H_matrix(n_x, n_y)
        p = matrix_power(h, n + 1)
        assert np.array_equal(p, (-1) ** (n_x * n_y) * np.eye(h.shape[0], dtype=np.int64))
        r = du.H_period(n_x, n_y)
        assert r.scalar and r.sign_at_n_plus_1 == (-1) ** (n_x * n_y)
        assert r.order == du.expected_order(n_x, n_y)


def test_period_examples():
    r = du.H_period(1, 1)
    assert (r.sign_at_n_plus_1, r.order) == (-1, 6)
    r = du.H_period(2, 1)
    assert (r.sign_at_n_plus_1, r.order) == (1, 4)
    assert du.H_period(0, 5).order == 1


def test_pawn_cycle_example():
    cyc = du.pawn_cycle(2, 3)
    assert [str(cyc[i]) for i in range(1, 6)] == ["yyyxx", "yyxyx", "yxyxy", "xyxyy", "xxyyy"]
    assert cyc[0] == cyc[5]
    assert len({str(w) for w in du.pawn_cycle(3, 0).words}) == 1


@pytest.mark.parametrize("n", range(1, 9))
def test_pawn_orbit(n):
    for g in gradings(n):
        cyc = du.pawn_cycle(*g)
        orbit = pawn_orbit(*g)
        signs = [(-1) ** len(du.exceptional_set(cyc[i], "x").indices) for i in range(1, n + 1)]
        for i in range(n):
            assert du.H_apply(orbit[i]) == orbit[i + 1].scale(signs[i])
        # the wrap-around step carries no sign
        assert du.H_apply(orbit[n]) == orbit[0]
        assert sum(len(du.exceptional_set(cyc[i], "x").indices) for i in range(1, n + 1)) == g[0] * g[1]


def test_pawn_interval_elements():
    cyc = du.pawn_cycle(2, 2)
    assert bracket(cyc[3], cyc[2]).coeff(cyc[3]) == 1
    # [w_1, w_0] is not an interval: w_1 is the largest word and w_0 the smallest
    assert str(cyc[1]) == "yyxx" and str(cyc[0]) == "xxyy"
    assert pawn_orbit(2, 2)[1] == FockElement.word(cyc[1])


def _rep(f, k, e):
    for _ in range(k):
        e = f(e)
    return e


@given(words(6), st.integers(0, 2))
def test_lemma_initial_identities(w, j):
    A = lambda s: (lambda t: fk.annihilate(s, 0, t))
    C = lambda s: (lambda t: fk.create(s, 0, t))
    H = du.H_apply
    e = FockElement.word(w)
    zero = FockElement.zero()
    assert A("y")(H(C("y")(e))) == H(e)
    assert A("y")(H(_rep(C("x"), j, C("y")(e)))) == H(_rep(C("x"), j, e))
    assert A("y")(_rep(A("x"), j + 1, H(_rep(C("x"), j, C("y")(C("x")(e)))))) == -H(e)
    assert _rep(A("x"), j + 2, H(_rep(C("x"), j, C("y")(e)))) == zero
    assert A("x")(H(_rep(C("x"), j, C("y")(C("y")(e))))) == zero
    if 1 <= j <= w.n_x:
        assert A("y")(_rep(A("x"), j, H(_rep(C("x"), j, e)))) == zero
