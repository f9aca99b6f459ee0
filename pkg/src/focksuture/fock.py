"""The Fock space Z<x,y>: integer combinations of words.

Operators act on words and extend linearly.  For a letter s and a word
with n_s copies of s, annihilation a_{s,i} and creation a*_{s,i} take an
index 0 <= i <= n_s + 1: index 0 acts at the front, index n_s + 1 at the
back, and the indices in between act on the i'th s.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping

import numpy as np

from .linalg import CoefficientOverflow, check_int64, det_bareiss
from .words import EMPTY, Word, enumerate_words, leq, parse_word, word_index

SPECIES = ("x", "y")


class OperatorIndexError(IndexError):
    pass


class FockElement:
    """A finite Z-combination of words, kept as a sorted tuple of terms."""

    __slots__ = ("_terms", "_map", "_hash")

    def __init__(self, terms: Mapping[Word, int] | Iterable[tuple[Word, int]] = ()):
        acc: dict[Word, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in items:
            if not isinstance(w, Word):
                w = parse_word(w)
            acc[w] = acc.get(w, 0) + c
        clean = {w: check_int64(c) for w, c in acc.items() if c != 0}
        self._terms = tuple(sorted(clean.items()))
        self._map = clean
        self._hash = hash(self._terms)

    @classmethod
    def word(cls, w: Word | str, coeff: int = 1) -> "FockElement":
        return cls({w if isinstance(w, Word) else parse_word(w): coeff})

    @classmethod
    def zero(cls) -> "FockElement":
        return cls()

    @classmethod
    def one(cls) -> "FockElement":
        return cls({EMPTY: 1})

    # container protocol

    def __iter__(self) -> Iterator[tuple[Word, int]]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, w: Word | str) -> int:
        if not isinstance(w, Word):
            w = parse_word(w)
        return self._map.get(w, 0)

    @property
    def terms(self) -> tuple[tuple[Word, int], ...]:
        return self._terms

    def support(self) -> tuple[Word, ...]:
        return tuple(w for w, _ in self._terms)

    def gradings(self) -> set[tuple[int, int]]:
        return {w.grading for w, _ in self._terms}

    def first_word(self) -> Word:
        return self._terms[0][0]

    def last_word(self) -> Word:
        return self._terms[-1][0]

    def coefficient_sum(self) -> int:
        return sum(c for _, c in self._terms)

    # arithmetic

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        return isinstance(other, FockElement) and self._terms == other._terms

    def __hash__(self) -> int:
        return self._hash

    def __add__(self, other: "FockElement") -> "FockElement":
        if not isinstance(other, FockElement):
            return NotImplemented
        acc = dict(self._map)
        for w, c in other._terms:
            acc[w] = acc.get(w, 0) + c
        return FockElement(acc)

    def __neg__(self) -> "FockElement":
        return FockElement((w, -c) for w, c in self._terms)

    def __sub__(self, other: "FockElement") -> "FockElement":
        return self + (-other)

    def scale(self, k: int) -> "FockElement":
        return FockElement((w, c * k) for w, c in self._terms)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, FockElement):
            return mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def map_words(self, f: Callable[[Word], "FockElement | Word | None"]) -> "FockElement":
        """Linear extension of a word-level map (None means zero)."""
        acc: dict[Word, int] = {}
        for w, c in self._terms:
            img = f(w)
            if img is None:
                continue
            if isinstance(img, Word):
                acc[img] = acc.get(img, 0) + c
            else:
                for v, d in img._terms:
                    acc[v] = acc.get(v, 0) + check_int64(c * d)
        return FockElement(acc)

    # text and JSON

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for w, c in self._terms:
            label = str(w) or "1"
            mag = abs(c)
            body = label if mag == 1 else (f"{mag}" if label == "1" else f"{mag}{label}")
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"FockElement({str(self)!r})"

    def to_json(self) -> dict:
        return {"terms": [{"word": str(w), "coeff": c} for w, c in self._terms]}

    @classmethod
    def from_json(cls, data: dict) -> "FockElement":
        return cls((parse_word(t["word"]), int(t["coeff"])) for t in data["terms"])


def parse_element(text: str) -> FockElement:
    """Parse text such as "xy - yx", "2xxy + 1" or "-y"; "1" is the vacuum."""
    s = text.replace(" ", "").replace("−", "-")
    if s in ("", "0"):
        return FockElement()
    terms: list[tuple[Word, int]] = []
    i = 0
    while i < len(s):
        sign = 1
        if s[i] in "+-":
            sign = -1 if s[i] == "-" else 1
            i += 1
        j = i
        while j < len(s) and s[j].isdigit():
            j += 1
        k = j
        while k < len(s) and s[k] in "xy":
            k += 1
        if j == i and k == j:
            raise ValueError(f"cannot parse element {text!r}")
        digits = s[i:j]
        letters = s[j:k]
        if digits and not letters:
            coeff, w = int(digits), EMPTY
        else:
            coeff = int(digits) if digits else 1
            w = parse_word(letters)
        terms.append((w, sign * coeff))
        i = k
    return FockElement(terms)


def as_element(v: "FockElement | Word | str") -> FockElement:
    if isinstance(v, FockElement):
        return v
    if isinstance(v, Word):
        return FockElement.word(v)
    return parse_element(v)


def add(u: FockElement, v: FockElement) -> FockElement:
    return u + v


def negate(u: FockElement) -> FockElement:
    return -u


def scale(u: FockElement, k: int) -> FockElement:
    return u.scale(k)


def mul(u: FockElement, v: FockElement) -> FockElement:
    acc: dict[Word, int] = {}
    for a, c in u:
        for b, d in v:
            w = a + b
            acc[w] = acc.get(w, 0) + check_int64(c * d)
    return FockElement(acc)


def pairing(u: FockElement, v: FockElement) -> int:
    total = 0
    for a, c in u:
        for b, d in v:
            if leq(a, b):
                total += c * d
    return check_int64(total)


def dot(u: FockElement, v: FockElement) -> int:
    small, big = (u, v) if len(u) <= len(v) else (v, u)
    return check_int64(sum(c * big.coeff(w) for w, c in small))


# word-level creation and annihilation

def _positions(w: Word, s: str) -> list[int]:
    return [k for k, ch in enumerate(w) if ch == s]


def _check_species(s: str) -> None:
    if s not in SPECIES:
        raise ValueError(f"unknown species {s!r}; use x or y")


def _check_index(s: str, i: int, w: Word) -> int:
    n_s = w.n_x if s == "x" else w.n_y
    if not 0 <= i <= n_s + 1:
        raise OperatorIndexError(f"index {i} out of range 0..{n_s + 1} for {s} on word {w or '1'}")
    return n_s


def annihilate_word(s: str, i: int, w: Word) -> Word | None:
    _check_species(s)
    n_s = _check_index(s, i, w)
    text = str(w)
    if i == 0:
        return parse_word(text[1:]) if text[:1] == s else None
    if i == n_s + 1:
        return parse_word(text[:-1]) if text[-1:] == s else None
    k = _positions(w, s)[i - 1]
    return parse_word(text[:k] + text[k + 1:])


def create_word(s: str, i: int, w: Word) -> Word:
    _check_species(s)
    n_s = _check_index(s, i, w)
    text = str(w)
    if i == 0:
        return parse_word(s + text)
    if i == n_s + 1:
        return parse_word(text + s)
    k = _positions(w, s)[i - 1]
    return parse_word(text[:k] + s + text[k:])


def annihilate(s: str, i: int, elem: FockElement) -> FockElement:
    return elem.map_words(lambda w: annihilate_word(s, i, w))


def create(s: str, i: int, elem: FockElement) -> FockElement:
    return elem.map_words(lambda w: create_word(s, i, w))


def derivative(s: str, elem: FockElement) -> FockElement:
    """a_s: the sum of all internal annihilations of s."""
    _check_species(s)

    def one(w: Word) -> FockElement:
        n_s = w.n_x if s == "x" else w.n_y
        return FockElement((annihilate_word(s, i, w), 1) for i in range(1, n_s + 1))

    return elem.map_words(one)


def differential(s: str, elem: FockElement) -> FockElement:
    """d_s: the alternating sum of internal annihilations, sign (-1)^i."""
    _check_species(s)

    def one(w: Word) -> FockElement:
        n_s = w.n_x if s == "x" else w.n_y
        return FockElement((annihilate_word(s, i, w), (-1) ** i) for i in range(1, n_s + 1))

    return elem.map_words(one)


def _check_t_index(s: str, i: int, w: Word) -> None:
    n_s = w.n_x if s == "x" else w.n_y
    if not 0 <= i <= n_s:
        raise OperatorIndexError(f"index {i} out of range 0..{n_s} for T on word {w or '1'}")


def T(s: str, i: int, elem: FockElement) -> FockElement:
    _check_species(s)

    def one(w: Word) -> FockElement:
        _check_t_index(s, i, w)
        terms = []
        a, b = annihilate_word(s, i, w), annihilate_word(s, i + 1, w)
        if a is not None:
            terms.append((a, 1))
        if b is not None:
            terms.append((b, -1))
        return FockElement(terms)

    return elem.map_words(one)


def Tstar(s: str, i: int, elem: FockElement) -> FockElement:
    _check_species(s)

    def one(w: Word) -> FockElement:
        _check_t_index(s, i, w)
        return FockElement([(create_word(s, i, w), 1), (create_word(s, i + 1, w), -1)])

    return elem.map_words(one)


def U(s: str, i: int, elem: FockElement) -> FockElement:
    """U_{s,i} = T*_{s,i} a_{s,i+1}; defined for 0 <= i <= n_s - 1."""
    _check_species(s)
    for w, _ in elem:
        n_s = w.n_x if s == "x" else w.n_y
        if not 0 <= i <= n_s - 1:
            raise OperatorIndexError(f"index {i} out of range 0..{n_s - 1} for U on word {w or '1'}")
    return Tstar(s, i, annihilate(s, i + 1, elem))


# Gram matrices

@dataclass(frozen=True)
class GramMatrix:
    grading: tuple[int, int]
    basis: tuple[Word, ...]
    matrix: np.ndarray
    flavor: str

    def determinant(self) -> int:
        return det_bareiss(self.matrix.tolist())

    def to_json(self) -> dict:
        return {
            "grading": list(self.grading),
            "flavor": self.flavor,
            "basis": [str(w) for w in self.basis],
            "rows": self.matrix.tolist(),
        }


_GRAM_CACHE: dict[tuple[int, int, str], GramMatrix] = {}


def gram(n_x: int, n_y: int, flavor: str = "pairing") -> GramMatrix:
    key = (n_x, n_y, flavor)
    if key in _GRAM_CACHE:
        return _GRAM_CACHE[key]
    basis = enumerate_words(n_x, n_y)
    if flavor == "pairing":
        m = np.array([[1 if leq(a, b) else 0 for b in basis] for a in basis], dtype=np.int64)
    elif flavor == "dot":
        m = np.eye(len(basis), dtype=np.int64)
    else:
        raise ValueError(f"unknown flavor {flavor!r}")
    m.setflags(write=False)
    g = GramMatrix((n_x, n_y), basis, m, flavor)
    _GRAM_CACHE[key] = g
    return g


def to_vector(elem: FockElement, n_x: int, n_y: int) -> np.ndarray:
    idx = word_index(n_x, n_y)
    v = np.zeros(len(idx), dtype=np.int64)
    for w, c in elem:
        if w not in idx:
            raise ValueError(f"word {w} is not in grading {(n_x, n_y)}")
        v[idx[w]] = c
    return v


def from_vector(v: Iterable[int], n_x: int, n_y: int) -> FockElement:
    basis = enumerate_words(n_x, n_y)
    return FockElement((w, int(c)) for w, c in zip(basis, v) if c)


def pairing_reduction(w0: Word, w1: Word) -> tuple[int, list[tuple[str, str, str]]]:
    """Evaluate a bilinear form B(w0, w1) using only its defining axioms.

    The steps are: orthogonality of gradings, partial adjointness of
    creation and annihilation, and B(1, 1) = 1.  Returns the value and the
    trace of rewriting steps.  The value must equal the pairing.
    """
    trace: list[tuple[str, str, str]] = []
    while True:
        trace.append(("B", str(w0) or "1", str(w1) or "1"))
        if w0.grading != w1.grading:
            return 0, trace
        if w0.n == 0:
            return 1, trace
        s0, s1 = str(w0), str(w1)
        yy = s0.find("yy")
        xx = s1.find("xx")
        if yy >= 0:
            # w0 = a*_{y,i} w0' with i the index of the doubled y
            i = s0[:yy + 1].count("y")
            w0 = parse_word(s0[:yy] + s0[yy + 1:])
            w1 = annihilate_word("y", i, w1)
            continue
        if xx >= 0:
            i = s1[:xx + 1].count("x")
            w1 = parse_word(s1[:xx] + s1[xx + 1:])
            w0 = annihilate_word("x", i, w0)
            continue
        if s0[0] == s1[0] == "y":
            w0 = parse_word(s0[1:])
            w1 = annihilate_word("y", 0, w1)
            continue
        if s0[0] == s1[0] == "x":
            w1 = parse_word(s1[1:])
            w0 = annihilate_word("x", 0, w0)
            continue
        if s0[0] == "y":
            # B(w0, a*_{x,0} w1') = B(a_{x,0} w0, w1') and a_{x,0} w0 = 0
            trace.append(("zero", s0, s1))
            return 0, trace
        m = w0.n // 2
        if s0 != "xy" * m or s1 != "yx" * m:
            raise AssertionError(f"unexpected reduced pair {s0}, {s1}")
        # B((xy)^m, (yx)^m) = B((xy)^{m-1}, (yx)^{m-1})
        w0 = parse_word("xy" * (m - 1))
        w1 = parse_word("yx" * (m - 1))
