"""Chord diagrams on a disc and their suture elements.

A diagram with m chords lives on 2m boundary points numbered 0..2m-1
clockwise from the basepoint 0.  The boundary arc from point k to k+1 is
positive when k is even, so every chord joins an even point to an odd one.
Negative labels count anticlockwise: point -k is point 2m-k.

Letters act as signs: x is the negative species, y the positive one.  The
basis diagram of a word w is built from the one-chord vacuum by initial
creations, the last letter first.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np

from .fock import FockElement, pairing, to_vector
from .words import EMPTY, Word, elementary_moves, enumerate_words, leq, parse_word

SIGN_OF = {"x": "x", "y": "y", "-": "x", "+": "y", "−": "x"}


class DiagramError(ValueError):
    pass


class ClosedLoop:
    """Marker for sutures containing a closed loop; its suture element is 0."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "CLOSED_LOOP"

    def to_json(self) -> dict:
        return {"closed_loop": True}


CLOSED_LOOP = ClosedLoop()


@dataclass(frozen=True, order=True)
class ChordDiagram:
    match: tuple[int, ...]

    def __post_init__(self):
        p = self.match
        size = len(p)
        if size == 0 or size % 2:
            raise DiagramError("a diagram needs a positive even number of points")
        for k, j in enumerate(p):
            if not 0 <= j < size or j == k or p[j] != k:
                raise DiagramError(f"not a fixed-point-free involution at {k}")
            if (k - j) % 2 == 0:
                raise DiagramError(f"chord ({k},{j}) joins points of equal parity")
        for a, b in self.chords():
            for c, d in self.chords():
                if a < c < b < d:
                    raise DiagramError(f"chords ({a},{b}) and ({c},{d}) cross")

    @classmethod
    def from_chords(cls, chords: Iterable[tuple[int, int]], m: int | None = None) -> "ChordDiagram":
        chords = list(chords)
        size = 2 * (m if m is not None else len(chords))
        p = [-1] * size
        for a, b in chords:
            if p[a % size] != -1 or p[b % size] != -1:
                raise DiagramError("a point is used twice")
            p[a % size], p[b % size] = b % size, a % size
        if -1 in p:
            raise DiagramError("some point is unmatched")
        return cls(tuple(p))

    @property
    def m(self) -> int:
        return len(self.match) // 2

    @property
    def size(self) -> int:
        return len(self.match)

    def chords(self) -> list[tuple[int, int]]:
        return [(k, j) for k, j in enumerate(self.match) if k < j]

    def partner(self, k: int) -> int:
        return self.match[k % self.size]

    def has_chord(self, a: int, b: int) -> bool:
        return self.match[a % self.size] == b % self.size

    def to_json(self) -> dict:
        return {"m": self.m, "matching": [list(c) for c in self.chords()]}

    @classmethod
    def from_json(cls, data: dict) -> "ChordDiagram":
        return cls.from_chords([tuple(c) for c in data["matching"]], data.get("m"))

    def __str__(self) -> str:
        return " ".join(f"({a},{b})" for a, b in self.chords())

    # regions and grading

    def regions(self) -> list[tuple[int, ...]]:
        """Complementary regions, each named by the boundary arcs it contains.

        Arc k runs clockwise from point k to point k+1.  From arc k a region
        continues along the chord at k+1 to the arc starting at its partner.
        """
        seen = [False] * self.size
        out = []
        for start in range(self.size):
            if seen[start]:
                continue
            cyc = []
            k = start
            while not seen[k]:
                seen[k] = True
                cyc.append(k)
                k = self.match[(k + 1) % self.size]
            out.append(tuple(sorted(cyc)))
        return sorted(out)

    def euler_class(self) -> int:
        e = 0
        for reg in self.regions():
            e += 1 if reg[0] % 2 == 0 else -1
        return e

    @property
    def n(self) -> int:
        return self.m - 1

    @property
    def n_plus(self) -> int:
        return (self.n + self.euler_class()) // 2

    @property
    def n_minus(self) -> int:
        return (self.n - self.euler_class()) // 2

    @property
    def grading(self) -> tuple[int, int]:
        """(n_x, n_y) = (n_-, n_+)."""
        return (self.n_minus, self.n_plus)

    def root_point(self) -> int:
        return 2 * self.n_plus + 1

    def outermost_chords(self) -> list[tuple[int, int]]:
        """Chords joining adjacent points (k, k+1), as (k, k+1 mod 2m)."""
        return [(k, (k + 1) % self.size) for k in range(self.size)
                if self.match[k] == (k + 1) % self.size]


VACUUM = ChordDiagram((1, 0))


def _rebuild(order: list, chords: list[tuple]) -> ChordDiagram:
    """Diagram from points listed clockwise from the basepoint, chords on point ids."""
    label = {pid: k for k, pid in enumerate(order)}
    return ChordDiagram.from_chords([(label[a], label[b]) for a, b in chords], len(order) // 2)


@lru_cache(maxsize=None)
def enumerate_diagrams(m: int) -> tuple[ChordDiagram, ...]:
    """All non-crossing perfect matchings of 2m points, sorted by matching sequence."""
    if m < 1:
        raise DiagramError("need at least one chord")

    def build(lo: int, hi: int) -> Iterator[list[tuple[int, int]]]:
        if lo > hi:
            yield []
            return
        for j in range(lo + 1, hi + 1, 2):
            for inner in build(lo + 1, j - 1):
                for outer in build(j + 1, hi):
                    yield [(lo, j)] + inner + outer

    out = [ChordDiagram.from_chords(ch, m) for ch in build(0, 2 * m - 1)]
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def diagrams_by_grading(m: int) -> dict[tuple[int, int], tuple[ChordDiagram, ...]]:
    out: dict[tuple[int, int], list[ChordDiagram]] = {}
    for d in enumerate_diagrams(m):
        out.setdefault(d.grading, []).append(d)
    return {g: tuple(v) for g, v in out.items()}


# creation and annihilation

def _n_s(d: ChordDiagram, s: str) -> int:
    return d.n_minus if s == "x" else d.n_plus


def diagram_create(s: str, i: int, d: ChordDiagram) -> ChordDiagram:
    """Insert an outermost chord enclosing a region of sign s.

    Positive: new chord at (2i, 2i+1).  Negative: new chord at (-2i-1, -2i).
    """
    s = SIGN_OF[s]
    n_s = _n_s(d, s)
    if not 0 <= i <= n_s + 1:
        raise DiagramError(f"creation index {i} out of range 0..{n_s + 1}")
    size = d.size
    after = (2 * i - 1) % size if s == "y" else (-2 * i) % size
    order: list = list(range(size))
    pos = order.index(after) + 1
    order[pos:pos] = ["a", "b"]
    if i == 0:
        base = "a" if s == "y" else "b"
        k = order.index(base)
        order = order[k:] + order[:k]
    return _rebuild(order, d.chords() + [("a", "b")])


def diagram_annihilate(s: str, i: int, d: ChordDiagram) -> "ChordDiagram | ClosedLoop":
    """Close off the boundary arc between two points, joining their sutures.

    Positive: points (2i-1, 2i).  Negative: points (-2i, -2i+1).
    """
    s = SIGN_OF[s]
    n_s = _n_s(d, s)
    if not 0 <= i <= n_s + 1:
        raise DiagramError(f"annihilation index {i} out of range 0..{n_s + 1}")
    size = d.size
    if size == 2:
        return CLOSED_LOOP
    if s == "y":
        p, q = (2 * i - 1) % size, (2 * i) % size
    else:
        p, q = (-2 * i) % size, (-2 * i + 1) % size
    if d.match[p] == q:
        return CLOSED_LOOP
    chords = [c for c in d.chords() if p not in c and q not in c]
    chords.append((d.match[p], d.match[q]))
    order = [k for k in range(size) if k not in (p, q)]
    if 0 in (p, q):
        base = 2 if s == "y" else size - 2
        k = order.index(base)
        order = order[k:] + order[:k]
    return _rebuild(order, chords)


@lru_cache(maxsize=None)
def basis_diagram(w: Word) -> ChordDiagram:
    d = VACUUM
    for ch in reversed(str(w)):
        d = diagram_create(ch, 0, d)
    return d


@lru_cache(maxsize=None)
def basis_word(d: ChordDiagram) -> Word | None:
    """The word w with d = basis_diagram(w), or None."""
    letters = []
    while d.m > 1:
        if d.has_chord(0, 1):
            letters.append("y")
            d = diagram_annihilate("y", 0, d)
        elif d.has_chord(-1, 0):
            letters.append("x")
            d = diagram_annihilate("x", 0, d)
        else:
            return None
    return parse_word("".join(letters))


# rotation

ROTATION_STEP = -2


def rotate(d: ChordDiagram, times: int = 1) -> ChordDiagram:
    """Move the basepoint two places: point k is relabelled k + ROTATION_STEP."""
    shift = ROTATION_STEP * times
    return ChordDiagram.from_chords([(a + shift, b + shift) for a, b in d.chords()], d.m)


def rotation_matrix(n_x: int, n_y: int) -> np.ndarray:
    """Matrix of rotation on suture elements, signs calibrated so c_{w_min} -> +c_{w_max}."""
    ws = enumerate_words(n_x, n_y)
    image = {w: decompose(rotate(basis_diagram(w))) for w in ws}
    sign = {ws[0]: 1 if image[ws[0]] == FockElement.word(ws[-1]) else -1}
    queue = [ws[0]]
    while queue:
        w = queue.pop()
        for direction in ("forwards", "backwards"):
            for v in elementary_moves(w, direction):
                lo, hi = (w, v) if direction == "forwards" else (v, w)
                target = decompose(rotate(diagram_of_pair(lo, hi)))
                opts = [t for t in (1, -1)
                        if image[w].scale(sign[w]) - image[v].scale(t) in (target, -target)]
                if len(opts) != 1:
                    raise AssertionError(f"rotation sign not determined at {w} -> {v}")
                if v in sign:
                    if sign[v] != opts[0]:
                        raise AssertionError(f"inconsistent rotation sign at {v}")
                else:
                    sign[v] = opts[0]
                    queue.append(v)
    cols = [to_vector(image[w].scale(sign[w]), n_x, n_y) for w in ws]
    return np.stack(cols, axis=1) if cols else np.zeros((0, 0), dtype=np.int64)


# bypass surgery

FRAME_PATTERNS = {
    0: ((0, 3), (1, 2), (4, 5)),
    1: ((1, 4), (2, 3), (5, 0)),
    2: ((2, 5), (3, 4), (0, 1)),
}


def _frame_pattern(d: ChordDiagram, frame: tuple[int, ...]) -> int | None:
    pos = {p: k for k, p in enumerate(frame)}
    pairs = {frozenset((pos[p], pos[d.match[p]])) for p in frame if d.match[p] in pos}
    if len(pairs) != 3:
        return None
    for k, pat in FRAME_PATTERNS.items():
        if pairs == {frozenset(c) for c in pat}:
            return k
    return None


def _frame_valid(d: ChordDiagram, frame: tuple[int, ...]) -> bool:
    """Every open boundary interval between consecutive frame points is matched internally."""
    size = d.size
    for k in range(6):
        a, b = frame[k], frame[(k + 1) % 6]
        inside = set()
        t = (a + 1) % size
        while t != b:
            inside.add(t)
            t = (t + 1) % size
        if any(d.match[t] not in inside for t in inside):
            return False
    return True


def _with_pattern(d: ChordDiagram, frame: tuple[int, ...], k: int) -> ChordDiagram:
    chords = [c for c in d.chords() if c[0] not in frame]
    chords += [(frame[a], frame[b]) for a, b in FRAME_PATTERNS[k]]
    return ChordDiagram.from_chords(chords, d.m)


@dataclass(frozen=True)
class BypassArc:
    """An attaching arc: it crosses chords c1, c2, c3 in turn, passing through
    region_a between c1 and c2 and region_b between c2 and c3.

    Regions are named by their boundary arcs (arc k runs from point k to k+1).
    Upwards surgery turns the middle chord one step clockwise among the six
    endpoints; downwards turns it one step anticlockwise.
    """

    c1: tuple[int, int]
    c2: tuple[int, int]
    c3: tuple[int, int]
    region_a: tuple[int, ...]
    region_b: tuple[int, ...]
    direction: str = "up"

    def frame(self) -> tuple[int, ...]:
        return tuple(sorted(self.c1 + self.c2 + self.c3))

    def reversed(self) -> "BypassArc":
        return BypassArc(self.c3, self.c2, self.c1, self.region_b, self.region_a, self.direction)

    def with_direction(self, direction: str) -> "BypassArc":
        return BypassArc(self.c1, self.c2, self.c3, self.region_a, self.region_b, direction)

    def to_json(self) -> dict:
        return {"chords": [list(self.c1), list(self.c2), list(self.c3)],
                "regions": [list(self.region_a), list(self.region_b)],
                "direction": self.direction}


def _region_of_arc(d: ChordDiagram, arc: int) -> tuple[int, ...]:
    for reg in d.regions():
        if arc in reg:
            return reg
    raise AssertionError


def arc_from_frame(d: ChordDiagram, frame: tuple[int, ...], k: int, direction: str) -> BypassArc:
    P = lambda j: frame[j % 6]
    c1 = tuple(sorted((P(k + 4), P(k + 5))))
    c2 = tuple(sorted((P(k), P(k + 3))))
    c3 = tuple(sorted((P(k + 1), P(k + 2))))
    return BypassArc(c1, c2, c3, _region_of_arc(d, P(k + 3)), _region_of_arc(d, P(k)), direction)


def validate_arc(d: ChordDiagram, arc: BypassArc) -> tuple[tuple[int, ...], int]:
    """Check an arc against a diagram; return its frame and the frame pattern."""
    for c in (arc.c1, arc.c2, arc.c3):
        if not d.has_chord(*c):
            raise DiagramError(f"arc chord {c} is not a chord of the diagram")
    frame = arc.frame()
    if len(set(frame)) != 6:
        raise DiagramError("arc chords must be distinct")
    k = _frame_pattern(d, frame)
    if k is None or not _frame_valid(d, frame):
        raise DiagramError("arc chords do not bound consecutive common regions")
    if tuple(sorted((frame[k], frame[(k + 3) % 6]))) != arc.c2:
        raise DiagramError("the middle chord of the arc must separate the other two")
    regions = d.regions()
    for reg, a, b in ((arc.region_a, arc.c1, arc.c2), (arc.region_b, arc.c2, arc.c3)):
        if reg not in regions:
            raise DiagramError(f"{reg} is not a region of the diagram")
        ends = {t for t in a + b}
        touching = {t for t in ends if (t in reg) or ((t - 1) % d.size in reg)}
        if not (set(a) & touching and set(b) & touching):
            raise DiagramError("arc region is not adjacent to both of its chords")
    if arc.direction not in ("up", "down"):
        raise DiagramError(f"unknown direction {arc.direction!r}")
    return frame, k


def bypass_surgery(d: ChordDiagram, arc: BypassArc) -> "ChordDiagram | ClosedLoop":
    frame, k = validate_arc(d, arc)
    step = 1 if arc.direction == "up" else -1
    return _with_pattern(d, frame, (k + step) % 3)


def bypass_arcs(d: ChordDiagram, direction: str = "up") -> list[BypassArc]:
    """All attaching arcs of the diagram, one per frame."""
    out = []
    chords = d.chords()
    for i in range(len(chords)):
        for j in range(i + 1, len(chords)):
            for l in range(j + 1, len(chords)):
                frame = tuple(sorted(chords[i] + chords[j] + chords[l]))
                k = _frame_pattern(d, frame)
                if k is not None and _frame_valid(d, frame):
                    out.append(arc_from_frame(d, frame, k, direction))
    return out


def bypass_triple(d: ChordDiagram, arc: BypassArc) -> tuple[ChordDiagram, ChordDiagram, ChordDiagram]:
    frame, k = validate_arc(d, arc)
    return tuple(_with_pattern(d, frame, (k + t) % 3) for t in range(3))


@lru_cache(maxsize=None)
def enumerate_bypass_triples(m: int) -> tuple[frozenset, ...]:
    if m > 6:
        raise DiagramError("bypass triple enumeration is limited to m <= 6")
    seen = set()
    for d in enumerate_diagrams(m):
        for arc in bypass_arcs(d):
            seen.add(frozenset(bypass_triple(d, arc)))
    return tuple(sorted(seen, key=lambda t: sorted(t)))


# suture elements

@lru_cache(maxsize=None)
def decompose(d: ChordDiagram) -> FockElement:
    """The suture element of d in the word basis, lexicographically first word +1.

    Outermost chords at the basepoint are peeled off as letters.  Otherwise d
    sits in a bypass triple with two diagrams that have such chords, and
    c(d) = c1 + s c2 with s fixed by <c(d)|c(d)> = 1.
    """
    if d.m == 1:
        return FockElement.one()
    if d.has_chord(0, 1):
        return _prepend("y", decompose(diagram_annihilate("y", 0, d)))
    if d.has_chord(-1, 0):
        return _prepend("x", decompose(diagram_annihilate("x", 0, d)))
    size = d.size
    frame = (size - 1, 0, 1, d.match[1], d.match[0], d.match[size - 1])
    c_y = decompose(_with_pattern(d, frame, 0))
    c_x = decompose(_with_pattern(d, frame, 2))
    cross = pairing(c_y, c_x) + pairing(c_x, c_y)
    if cross not in (1, -1):
        raise AssertionError(f"unexpected pairing {cross} in the basepoint triple of {d}")
    c = c_y - c_x.scale(cross)
    return c if c.terms[0][1] > 0 else -c


def _prepend(s: str, elem: FockElement) -> FockElement:
    return FockElement((parse_word(s) + w, c) for w, c in elem)


@lru_cache(maxsize=None)
def _pair_table(n_x: int, n_y: int) -> dict[tuple[Word, Word], ChordDiagram]:
    out = {}
    m = n_x + n_y + 1
    for d in diagrams_by_grading(m).get((n_x, n_y), ()):
        out[pair_of(d)] = d
    return out


def pair_of(d: ChordDiagram) -> tuple[Word, Word]:
    c = decompose(d)
    return c.first_word(), c.last_word()


def diagram_of_pair(w_lo: Word, w_hi: Word) -> ChordDiagram:
    if not leq(w_lo, w_hi):
        raise DiagramError(f"{w_lo} and {w_hi} are not comparable")
    return _pair_table(*w_lo.grading)[(w_lo, w_hi)]


# multiplication: glue the root point of one diagram to the basepoint of another

def glue(d0: ChordDiagram, d1: ChordDiagram) -> ChordDiagram:
    r = d0.root_point()
    order = [("a", k) for k in range(r)] + [("b", k) for k in range(1, d1.size)] + \
            [("a", k) for k in range(r + 1, d0.size)]
    chords = [(("a", a), ("a", b)) for a, b in d0.chords() if r not in (a, b)]
    chords += [(("b", a), ("b", b)) for a, b in d1.chords() if 0 not in (a, b)]
    chords.append((("a", d0.match[r]), ("b", d1.match[0])))
    return _rebuild(order, chords)


# stacking

@dataclass(frozen=True)
class StackConvention:
    """Point k of the first lid meets point shift - k (reflect) or k + shift of the second."""

    reflect: bool
    shift: int

    def image(self, k: int, size: int) -> int:
        return (self.shift - k) % size if self.reflect else (k + self.shift) % size


def stack_components(d0: ChordDiagram, d1: ChordDiagram, conv: StackConvention) -> int:
    """Number of closed curves obtained by stacking d0 on d1 with the convention."""
    if d0.m != d1.m:
        raise DiagramError("stacked diagrams need the same number of chords")
    size = d0.size
    to1 = [conv.image(k, size) for k in range(size)]
    to0 = [0] * size
    for k, j in enumerate(to1):
        to0[j] = k
    seen = [False] * size
    comps = 0
    for start in range(size):
        if seen[start]:
            continue
        comps += 1
        k = start
        while not seen[k]:
            seen[k] = seen[d0.match[k]] = True
            k = to0[d1.match[to1[d0.match[k]]]]
    return comps


def calibrate_stack(max_n: int = 3) -> list[StackConvention]:
    """Conventions under which stacking basis diagrams is connected exactly when w0 <= w1."""
    found = []
    for reflect in (False, True):
        for shift in range(-3, 4):
            conv = StackConvention(reflect, shift)
            ok = True
            for n in range(max_n + 1):
                words = [w for nx in range(n + 1) for w in enumerate_words(nx, n - nx)]
                for w0 in words:
                    for w1 in words:
                        conn = stack_components(basis_diagram(w0), basis_diagram(w1), conv) == 1
                        if conn != leq(w0, w1):
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    break
            if ok:
                found.append(conv)
    return found


STACK_CONVENTION = StackConvention(reflect=False, shift=-1)


def stack(d0: ChordDiagram, d1: ChordDiagram) -> bool:
    return stack_components(d0, d1, STACK_CONVENTION) == 1
