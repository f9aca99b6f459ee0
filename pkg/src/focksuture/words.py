"""Words over the two-letter alphabet {x, y}.

A word is stored as a packed bit string (x = 0, y = 1, first letter in the
most significant position) together with its length.  The alternative
alphabet {-, +} is accepted on input, with - read as x and + read as y.

Profiles follow the usual conventions: for the i'th x of a word (1-based),
f_x(i) counts the y's strictly to its left and h_x(i) = f_x(i) + i is its
position.  g_s(i) counts the letters s among the first i letters.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

MAX_LENGTH = 62

_LETTER = {"x": 0, "y": 1, "-": 0, "+": 1, "−": 0}
_ALPHABET_OF = {"x": "xy", "y": "xy", "-": "pm", "+": "pm", "−": "pm"}


class WordError(ValueError):
    pass


class Word:
    """An immutable word, packed into an integer."""

    __slots__ = ("bits", "n", "_hash")

    def __init__(self, bits: int = 0, n: int = 0):
        if n < 0 or n > MAX_LENGTH:
            raise WordError(f"word length {n} outside 0..{MAX_LENGTH}")
        if bits < 0 or bits >> n:
            raise WordError("bit pattern does not fit the length")
        object.__setattr__(self, "bits", bits)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_hash", hash((bits, n)))

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def from_letters(cls, letters: Iterable[str]) -> "Word":
        bits = 0
        n = 0
        for ch in letters:
            bits = (bits << 1) | _LETTER[ch]
            n += 1
        return cls(bits, n)

    # letters and counts

    @property
    def n_y(self) -> int:
        return self.bits.bit_count()

    @property
    def n_x(self) -> int:
        return self.n - self.bits.bit_count()

    @property
    def grading(self) -> tuple[int, int]:
        return (self.n_x, self.n_y)

    @property
    def e(self) -> int:
        return self.n_y - self.n_x

    def letter(self, k: int) -> str:
        """Letter at 0-based position k."""
        if not 0 <= k < self.n:
            raise IndexError(k)
        return "y" if (self.bits >> (self.n - 1 - k)) & 1 else "x"

    def __iter__(self) -> Iterator[str]:
        for k in range(self.n):
            yield "y" if (self.bits >> (self.n - 1 - k)) & 1 else "x"

    def __len__(self) -> int:
        return self.n

    def __str__(self) -> str:
        return "".join(self)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def pm(self) -> str:
        return "".join("+" if c == "y" else "-" for c in self)

    # algebra on words

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word((self.bits << other.n) | other.bits, self.n + other.n)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word.from_letters(str(self)[item])
        return self.letter(item)

    # ordering: plain lexicographic with x before y, prefixes first

    def _key(self, other: "Word") -> tuple[int, int]:
        k = min(self.n, other.n)
        return self.bits >> (self.n - k), other.bits >> (other.n - k)

    def __lt__(self, other: "Word") -> bool:
        a, b = self._key(other)
        return a < b if a != b else self.n < other.n

    def __le__(self, other: "Word") -> bool:
        return self == other or self < other

    def __gt__(self, other: "Word") -> bool:
        return other < self

    def __ge__(self, other: "Word") -> bool:
        return other <= self

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.bits == other.bits and self.n == other.n

    def __hash__(self) -> int:
        return self._hash

    def to_json(self) -> list[str]:
        return list(self)


EMPTY = Word(0, 0)


def parse_word(text: str | Sequence[str]) -> Word:
    """Parse a word written over {x, y} or over {-, +}.

    A list of one-letter strings (the JSON array form) is also accepted.
    Mixing the two alphabets is an error.
    """
    if not isinstance(text, str):
        text = "".join(text)
    alphabets = set()
    for ch in text:
        if ch not in _LETTER:
            raise WordError(f"invalid character {ch!r} in word {text!r}")
        alphabets.add(_ALPHABET_OF[ch])
    if len(alphabets) > 1:
        raise WordError(f"word {text!r} mixes the alphabets {{x,y}} and {{-,+}}")
    return Word.from_letters(text)


def word_of(w: Word | str) -> Word:
    return w if isinstance(w, Word) else parse_word(w)


@dataclass(frozen=True)
class WordProfile:
    f_x: tuple[int, ...]
    f_y: tuple[int, ...]
    g_x: tuple[int, ...]
    g_y: tuple[int, ...]
    h_x: tuple[int, ...]
    h_y: tuple[int, ...]


@lru_cache(maxsize=1 << 16)
def profile(w: Word) -> WordProfile:
    f_x, f_y, g_x, g_y, h_x, h_y = [], [], [], [], [], []
    cx = cy = 0
    for pos, ch in enumerate(w, start=1):
        if ch == "x":
            cx += 1
            f_x.append(cy)
            h_x.append(pos)
        else:
            cy += 1
            f_y.append(cx)
            h_y.append(pos)
        g_x.append(cx)
        g_y.append(cy)
    return WordProfile(*(tuple(s) for s in (f_x, f_y, g_x, g_y, h_x, h_y)))


def _check_same_grading(w0: Word, w1: Word) -> None:
    if w0.grading != w1.grading:
        raise WordError(f"words {w0} and {w1} lie in different gradings")


def leq(w0: Word, w1: Word) -> bool:
    """The partial order: every x of w0 sits at or left of the matching x of w1."""
    if w0.n != w1.n or w0.n_y != w1.n_y:
        return False
    # equivalent to g_y(w0) <= g_y(w1) pointwise; scan prefix counts
    b0, b1 = w0.bits, w1.bits
    c0 = c1 = 0
    for k in range(w0.n - 1, -1, -1):
        c0 += (b0 >> k) & 1
        c1 += (b1 >> k) & 1
        if c0 > c1:
            return False
    return True


def profile_inequalities(w0: Word, w1: Word) -> tuple[bool, ...]:
    """The six equivalent profile formulations of w0 <= w1 (same grading only)."""
    _check_same_grading(w0, w1)
    p0, p1 = profile(w0), profile(w1)

    def le(a, b):
        return all(s <= t for s, t in zip(a, b))

    return (
        le(p0.f_x, p1.f_x),
        le(p1.f_y, p0.f_y),
        le(p1.g_x, p0.g_x),
        le(p0.g_y, p1.g_y),
        le(p0.h_x, p1.h_x),
        le(p1.h_y, p0.h_y),
    )


def word_difference(w0: Word, w1: Word) -> int:
    _check_same_grading(w0, w1)
    return sum(b - a for a, b in zip(profile(w0).h_x, profile(w1).h_x))


def word_from_x_positions(n: int, h_x: Iterable[int]) -> Word:
    """The word of length n whose x's sit at the given 1-based positions."""
    xs = set(h_x)
    bits = 0
    for pos in range(1, n + 1):
        bits = (bits << 1) | (0 if pos in xs else 1)
    return Word(bits, n)


def min_max(w0: Word, w1: Word) -> tuple[Word, Word]:
    _check_same_grading(w0, w1)
    h0, h1 = profile(w0).h_x, profile(w1).h_x
    lo = word_from_x_positions(w0.n, (min(a, b) for a, b in zip(h0, h1)))
    hi = word_from_x_positions(w0.n, (max(a, b) for a, b in zip(h0, h1)))
    return lo, hi


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[tuple[Word, Word], ...]

    def first(self) -> Word:
        return _concat(b[0] for b in self.blocks)

    def second(self) -> Word:
        return _concat(b[1] for b in self.blocks)

    def recombine(self) -> tuple[Word, Word]:
        """(w-, w+): the smaller side of every block, then the larger side."""
        lo = _concat(b[i % 2] for i, b in enumerate(self.blocks))
        hi = _concat(b[1 - i % 2] for i, b in enumerate(self.blocks))
        return lo, hi


def _concat(ws: Iterable[Word]) -> Word:
    out = EMPTY
    for w in ws:
        out = out + w
    return out


def block_decompose(w0: Word, w1: Word) -> BlockDecomposition:
    """Split w0, w1 where their y-counts agree, grouping runs of one sign.

    Block i satisfies w0^i <= w1^i for even i and w1^i <= w0^i for odd i.
    """
    _check_same_grading(w0, w1)
    g0, g1 = profile(w0).g_y, profile(w1).g_y
    diff = [0] + [b - a for a, b in zip(g0, g1)]
    zeros = [i for i, d in enumerate(diff) if d == 0]
    s0, s1 = str(w0), str(w1)
    blocks: list[list[str]] = [["", ""]]
    sign = 1
    for z, z2 in zip(zeros, zeros[1:]):
        seg_sign = 0 if z2 == z + 1 else (1 if diff[z + 1] > 0 else -1)
        if seg_sign not in (0, sign):
            blocks.append(["", ""])
            sign = -sign
        blocks[-1][0] += s0[z:z2]
        blocks[-1][1] += s1[z:z2]
    return BlockDecomposition(tuple((parse_word(a), parse_word(b)) for a, b in blocks))


def elementary_moves(w: Word, direction: str = "forwards") -> list[Word]:
    """Words obtained by one swap x^a y^b -> y^b x^a (forwards) or back."""
    if direction not in ("forwards", "backwards"):
        raise WordError(f"unknown direction {direction!r}")
    first, second = ("x", "y") if direction == "forwards" else ("y", "x")
    s = str(w)
    out = set()
    for i in range(len(s)):
        a = 0
        while i + a < len(s) and s[i + a] == first:
            a += 1
            b = 0
            while i + a + b < len(s) and s[i + a + b] == second:
                b += 1
                out.add(s[:i] + second * b + first * a + s[i + a + b:])
    return sorted(parse_word(t) for t in out)


@lru_cache(maxsize=None)
def enumerate_words(n_x: int, n_y: int) -> tuple[Word, ...]:
    """All words with n_x x's and n_y y's, in lexicographic order."""
    n = n_x + n_y
    out = []
    for ys in combinations(range(n), n_y):
        bits = 0
        for k in ys:
            bits |= 1 << (n - 1 - k)
        out.append(Word(bits, n))
    out.sort()
    assert len(out) == comb(n, n_x)
    return tuple(out)


@lru_cache(maxsize=None)
def word_index(n_x: int, n_y: int) -> dict[Word, int]:
    return {w: i for i, w in enumerate(enumerate_words(n_x, n_y))}


def gradings(n: int) -> list[tuple[int, int]]:
    """All (n_x, n_y) with n_x + n_y = n."""
    return [(n - k, k) for k in range(n + 1)]


@lru_cache(maxsize=None)
def comparable_pairs(n_x: int, n_y: int) -> tuple[tuple[Word, Word], ...]:
    ws = enumerate_words(n_x, n_y)
    return tuple((a, b) for a in ws for b in ws if leq(a, b))
