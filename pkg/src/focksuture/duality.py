"""The intertwiners Q+ and Q-, and the duality operator H.

H is the unique grading-preserving map with <u|v> = <v|Hu>.  It is
computed here along four independent routes: the product Q+ Q-^{-1}, a
term-by-term profile criterion, a block expansion, and a recursive
assembly of its matrix from smaller gradings.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import chain, combinations
from typing import Callable, Iterable

import numpy as np

from .fock import FockElement, annihilate, create, from_vector, to_vector
from .linalg import matmul, matrix_power, multiplicative_order
from .words import Word, enumerate_words, leq, parse_word, profile, word_index

MATRIX_CACHE_LIMIT = 1000


@dataclass(frozen=True)
class ExceptionalSet:
    word: Word
    species: str
    indices: frozenset[int]


def exceptional_set(w: Word, s: str) -> ExceptionalSet:
    """Indices i such that the i'th s of w is immediately followed by the other letter."""
    text = str(w)
    out = []
    count = 0
    for k, ch in enumerate(text):
        if ch == s:
            count += 1
            if k + 1 < len(text) and text[k + 1] != s:
                out.append(count)
    return ExceptionalSet(w, s, frozenset(out))


def psi(w: Word, s: str, T: Iterable[int]) -> Word:
    """Swap each chosen s with the opposite letter that follows it."""
    T = frozenset(T)
    ex = exceptional_set(w, s).indices
    if not T <= ex:
        raise ValueError(f"indices {sorted(T - ex)} are not exceptional for {s} in {w}")
    letters = list(str(w))
    count = 0
    k = 0
    while k < len(letters):
        if letters[k] == s:
            count += 1
            if count in T:
                letters[k], letters[k + 1] = letters[k + 1], letters[k]
                k += 2
                continue
        k += 1
    return parse_word("".join(letters))


def _subsets(items: Iterable[int]):
    items = sorted(items)
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))


def _q_word(w: Word, s: str) -> FockElement:
    ex = exceptional_set(w, s).indices
    return FockElement((psi(w, s, T), (-1) ** len(T)) for T in _subsets(ex))


def Q_plus(elem: FockElement) -> FockElement:
    return elem.map_words(lambda w: _q_word(w, "y"))


def Q_minus(elem: FockElement) -> FockElement:
    return elem.map_words(lambda w: _q_word(w, "x"))


def Q_plus_inv(elem: FockElement) -> FockElement:
    return elem.map_words(
        lambda w: FockElement((v, 1) for v in enumerate_words(*w.grading) if leq(v, w)))


def Q_minus_inv(elem: FockElement) -> FockElement:
    return elem.map_words(
        lambda w: FockElement((v, 1) for v in enumerate_words(*w.grading) if leq(w, v)))


# matrices of linear maps on one grading

def operator_matrix(op: Callable[[FockElement], FockElement], n_x: int, n_y: int,
                    target: tuple[int, int] | None = None) -> np.ndarray:
    """Matrix whose j'th column is op applied to the j'th basis word."""
    tx, ty = target if target is not None else (n_x, n_y)
    cols = [to_vector(op(FockElement.word(w)), tx, ty) for w in enumerate_words(n_x, n_y)]
    rows = len(enumerate_words(tx, ty))
    if not cols:
        return np.zeros((rows, 0), dtype=np.int64)
    return np.stack(cols, axis=1)


class _MatrixCache:
    """Per-grading matrices; lock-free reads, each entry computed once."""

    def __init__(self, build: Callable[[int, int], np.ndarray]):
        self._build = build
        self._data: dict[tuple[int, int], np.ndarray] = {}
        self._lock = threading.Lock()

    def get(self, n_x: int, n_y: int) -> np.ndarray:
        m = self._data.get((n_x, n_y))
        if m is not None:
            return m
        with self._lock:
            m = self._data.get((n_x, n_y))
            if m is None:
                m = self._build(n_x, n_y)
                m.setflags(write=False)
                self._data[(n_x, n_y)] = m
        return m


def _h_word_by_q(w: Word) -> FockElement:
    return Q_plus(Q_minus_inv(FockElement.word(w)))


def _h_inv_word_by_q(w: Word) -> FockElement:
    return Q_minus(Q_plus_inv(FockElement.word(w)))


_H_CACHE = _MatrixCache(lambda nx, ny: operator_matrix(lambda e: e.map_words(_h_word_by_q), nx, ny))
_H_INV_CACHE = _MatrixCache(
    lambda nx, ny: operator_matrix(lambda e: e.map_words(_h_inv_word_by_q), nx, ny))


def H_matrix(n_x: int, n_y: int) -> np.ndarray:
    return _H_CACHE.get(n_x, n_y)


def H_inv_matrix(n_x: int, n_y: int) -> np.ndarray:
    return _H_INV_CACHE.get(n_x, n_y)


def _apply_cached(elem: FockElement, cache: _MatrixCache, fallback) -> FockElement:
    out = FockElement()
    for g in sorted(elem.gradings()):
        part = FockElement((w, c) for w, c in elem if w.grading == g)
        if len(word_index(*g)) <= MATRIX_CACHE_LIMIT:
            out = out + from_vector(matmul(cache.get(*g), to_vector(part, *g)), *g)
        else:
            out = out + part.map_words(fallback)
    return out


def H_apply(elem: FockElement) -> FockElement:
    return _apply_cached(elem, _H_CACHE, _h_word_by_q)


def H_inv(elem: FockElement) -> FockElement:
    return _apply_cached(elem, _H_INV_CACHE, _h_inv_word_by_q)


def H_power(elem: FockElement, k: int) -> FockElement:
    op = H_apply if k >= 0 else H_inv
    for _ in range(abs(k)):
        elem = op(elem)
    return elem


# second route: the profile criterion

def H_terms_explicit(w: Word) -> FockElement:
    """Words v with f_v(i) = f_w(i) - 1 on exceptional x's of v and f_v(i) >= f_w(i)
    elsewhere, each with sign (-1)^{|E_v^x|}."""
    fw = profile(w).f_x
    terms = []
    for v in enumerate_words(*w.grading):
        fv = profile(v).f_x
        ex = exceptional_set(v, "x").indices
        ok = all(
            (fv[i - 1] == fw[i - 1] - 1) if i in ex else (fv[i - 1] >= fw[i - 1])
            for i in range(1, len(fw) + 1)
        )
        if ok:
            terms.append((v, (-1) ** len(ex)))
    return FockElement(terms)


# third route: the block expansion

def x_y_blocks(w: Word) -> list[tuple[int, int]]:
    """Exponents (a_1, b_1), ..., (a_k, b_k) with w = x^{a_1} y^{b_1} ... x^{a_k} y^{b_k}.

    Only a_1 and b_k may vanish.
    """
    text = str(w)
    blocks: list[tuple[int, int]] = []
    k = 0
    while k < len(text):
        a = 0
        while k < len(text) and text[k] == "x":
            a += 1
            k += 1
        b = 0
        while k < len(text) and text[k] == "y":
            b += 1
            k += 1
        blocks.append((a, b))
    return blocks


def H_block_expansion(w: Word) -> FockElement:
    blocks = x_y_blocks(w)
    k = len(blocks)
    if k < 2:
        # the monomial cases H(x^a y^b) = y^b x^a, including H(1) = 1
        a, b = blocks[0] if blocks else (0, 0)
        return FockElement.word("y" * b + "x" * a)
    A = [0]
    B = [0]
    for a, b in blocks:
        A.append(A[-1] + a)
        B.append(B[-1] + b)
    terms = []
    for cut in _subsets(range(1, k)):
        P = list(cut) + [k]
        l = len(P)
        beta_cum = [B[P[i]] - 1 for i in range(l - 1)] + [B[k]]
        alpha_cum = [A[P[i]] + 1 for i in range(l - 1)] + [A[k]]
        text = []
        pb = pa = 0
        for bc, ac in zip(beta_cum, alpha_cum):
            text.append("y" * (bc - pb) + "x" * (ac - pa))
            pb, pa = bc, ac
        terms.append((parse_word("".join(text)), (-1) ** (l - 1)))
    return FockElement(terms)


def block_term_count(w: Word) -> int:
    return 2 ** (max(len(x_y_blocks(w)), 1) - 1)


# fourth route: recursive assembly from smaller gradings

_REC_CACHE: dict[tuple[int, int], np.ndarray] = {}


def H_recursive_matrix(n_x: int, n_y: int) -> np.ndarray:
    """Matrix of H (columns are images) assembled from minors of smaller H's.

    Rows beginning y against columns y u: H on one fewer y.  Rows beginning y
    against columns x^j y u: the x^j-prefixed columns of H on one fewer y.
    Rows x^{j+1} y against columns x^j y x u: minus H on (n_x - j - 1, n_y - 1).
    Every other entry vanishes.
    """
    key = (n_x, n_y)
    if key in _REC_CACHE:
        return _REC_CACHE[key]
    basis = enumerate_words(n_x, n_y)
    dim = len(basis)
    if n_x == 0 or n_y == 0:
        m = np.eye(dim, dtype=np.int64)
        _REC_CACHE[key] = m
        return m
    idx = word_index(n_x, n_y)
    m = np.zeros((dim, dim), dtype=np.int64)
    sub = H_recursive_matrix(n_x, n_y - 1)
    sub_basis = enumerate_words(n_x, n_y - 1)
    sub_idx = word_index(n_x, n_y - 1)
    for col, w in enumerate(basis):
        text = str(w)
        j = len(text) - len(text.lstrip("x"))
        if j == 0:
            # column y u: rows y v carry H_{n_x, n_y - 1}[v, u]
            u = parse_word(text[1:])
            for r, v in enumerate(sub_basis):
                if sub[r, sub_idx[u]]:
                    m[idx[parse_word("y" + str(v))], col] = sub[r, sub_idx[u]]
        else:
            # column x^j y u: rows y v carry H_{n_x, n_y - 1}[v, x^j u]
            u = parse_word("x" * j + text[j + 1:])
            for r, v in enumerate(sub_basis):
                if sub[r, sub_idx[u]]:
                    m[idx[parse_word("y" + str(v))], col] = sub[r, sub_idx[u]]
        # column x^j y x u: rows x^{j+1} y v carry -H_{n_x-j-1, n_y-1}[v, u]
        if text[j + 1:j + 2] == "x":
            u = parse_word(text[j + 2:])
            small = H_recursive_matrix(n_x - j - 1, n_y - 1)
            small_basis = enumerate_words(n_x - j - 1, n_y - 1)
            small_idx = word_index(n_x - j - 1, n_y - 1)
            for r, v in enumerate(small_basis):
                val = small[r, small_idx[u]]
                if val:
                    m[idx[parse_word("x" * (j + 1) + "y" + str(v))], col] = -val
    m.setflags(write=False)
    _REC_CACHE[key] = m
    return m


def H_recursive_formula(w: Word) -> FockElement:
    """H as a sum of initial-operator commutators:

        H = sum_i a*_y H (a*_x)^i a_y (a_x)^i - (a*_x)^{i+1} a*_y H a_x a_y (a_x)^i

    with every inner H acting on a strictly smaller grading.
    """
    if w.n_x == 0 or w.n_y == 0:
        return FockElement.word(w)
    out = FockElement.zero()
    e = FockElement.word(w)
    i = 0
    stripped = e
    while stripped.terms:
        t = annihilate("y", 0, stripped)
        if t.terms:
            for _ in range(i):
                t = create("x", 0, t)
            out = out + create("y", 0, _h_rec_elem(t))
        t = annihilate("x", 0, annihilate("y", 0, stripped))
        if t.terms:
            t = create("y", 0, _h_rec_elem(t))
            for _ in range(i + 1):
                t = create("x", 0, t)
            out = out - t
        stripped = annihilate("x", 0, stripped)
        i += 1
    return out


def _h_rec_elem(e: FockElement) -> FockElement:
    return e.map_words(H_recursive_formula)


# periodicity

@dataclass(frozen=True)
class PeriodResult:
    grading: tuple[int, int]
    order: int
    sign_at_n_plus_1: int
    scalar: bool


def H_period(n_x: int, n_y: int) -> PeriodResult:
    """Multiplicative order of H on the grading, and the scalar H^{n+1}."""
    n = n_x + n_y
    h = H_matrix(n_x, n_y)
    p = matrix_power(h, n + 1)
    dim = h.shape[0]
    ident = np.eye(dim, dtype=np.int64)
    if np.array_equal(p, ident):
        sign, scalar = 1, True
    elif np.array_equal(p, -ident):
        sign, scalar = -1, True
    else:
        sign, scalar = 0, False
    order = multiplicative_order(h, 2 * n + 2)
    return PeriodResult((n_x, n_y), order if order is not None else -1, sign, scalar)


def expected_order(n_x: int, n_y: int) -> int:
    n = n_x + n_y
    if n_x == 0 or n_y == 0:
        return 1
    return 2 * n + 2 if (n_x % 2 and n_y % 2) else n + 1


@dataclass(frozen=True)
class PawnCycle:
    grading: tuple[int, int]
    words: tuple[Word, ...]

    def __getitem__(self, i: int) -> Word:
        """w_i with indices taken mod n + 1 (w_0 = w_n)."""
        return self.words[i % len(self.words)]


def pawn_cycle(n_x: int, n_y: int) -> PawnCycle:
    """w_0, ..., w_n: start from y^{n_y} x^{n_x} and move every movable pawn left."""
    n = n_x + n_y
    w = "y" * n_y + "x" * n_x
    seq = [w]
    for _ in range(n - 1):
        letters = list(seq[-1])
        k = 0
        out = letters[:]
        while k < n - 1:
            if letters[k] == "y" and letters[k + 1] == "x":
                out[k], out[k + 1] = "x", "y"
                k += 2
            else:
                k += 1
        seq.append("".join(out))
    words = [parse_word(s) for s in seq]
    if n == 0:
        return PawnCycle((n_x, n_y), (words[0],))
    # index 0 holds w_0 = w_n
    return PawnCycle((n_x, n_y), tuple([words[-1]] + words))
