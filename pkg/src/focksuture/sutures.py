"""The distinguished set of suture elements.

Suture elements are generated from 1 by operator closures, recognised by
reconstructing the interval element of their extreme words, and connected
by chains of bypass moves.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable

from . import diagrams as dg
from .duality import H_apply
from .fock import FockElement, Tstar, annihilate, create, pairing
from .words import Word, leq

DEFAULT_CAP = 10 ** 6
FAMILIES = ("C1", "C2", "C3")


class SutureError(ValueError):
    pass


class CapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class SutureElement:
    element: FockElement
    pair: tuple[Word, Word]
    normalized: bool

    @classmethod
    def of(cls, elem: FockElement) -> "SutureElement":
        if not elem.terms:
            raise SutureError("the zero element is not a suture element")
        return cls(elem, (elem.first_word(), elem.last_word()), elem.terms[0][1] == 1)

    @classmethod
    def of_diagram(cls, d: dg.ChordDiagram) -> "SutureElement":
        return cls.of(dg.decompose(d))

    def __neg__(self) -> "SutureElement":
        return SutureElement.of(-self.element)

    def diagram(self) -> dg.ChordDiagram:
        return dg.diagram_of_pair(*self.pair)

    def to_json(self) -> dict:
        return {"element": self.element.to_json(),
                "pair": [str(self.pair[0]), str(self.pair[1])],
                "normalized": self.normalized}


def interval_element(w_lo: Word, w_hi: Word) -> SutureElement:
    """The normalized suture element with first word w_lo and last word w_hi."""
    if w_lo.grading != w_hi.grading or not leq(w_lo, w_hi):
        raise SutureError(f"{w_lo} and {w_hi} are not comparable")
    return SutureElement.of(dg.decompose(dg.diagram_of_pair(w_lo, w_hi)))


def bracket(u: Word, v: Word) -> FockElement:
    """The suture element with extreme words u and v, signed so that u has coefficient 1."""
    lo, hi = (u, v) if leq(u, v) else (v, u)
    elem = interval_element(lo, hi).element
    return elem if elem.coeff(u) == 1 else -elem


def is_suture_element(elem: FockElement) -> bool:
    if not elem.terms:
        return False
    lo, hi = elem.first_word(), elem.last_word()
    if lo.grading != hi.grading or not leq(lo, hi):
        return False
    ref = interval_element(lo, hi).element
    return elem == ref or elem == -ref


def bypass_completion(u: FockElement, v: FockElement) -> FockElement | None:
    """u - v when (u, v) is the ordered pair of a bypass triple, else None.

    The admissible sign flips and the swap of u and v are tried in a fixed order.
    """
    if not u.terms or not v.terms or u == v or u == -v:
        return None
    if u.gradings() != v.gradings() or len(u.gradings()) != 1:
        return None
    for a, b in ((u, v), (v, u)):
        for sa in (1, -1):
            for sb in (1, -1):
                a1, b1 = a.scale(sa), b.scale(sb)
                if pairing(a1, b1) == 1 and pairing(b1, a1) == 0:
                    c = a1 - b1
                    if is_suture_element(c):
                        return c
    return None


# generation by closure

def _operators(family: str) -> Callable[[FockElement], Iterable[FockElement]]:
    def species_range(elem: FockElement, s: str) -> int:
        (n_x, n_y), = elem.gradings()
        return n_x if s == "x" else n_y

    def c1(elem):
        for s in "xy":
            n_s = species_range(elem, s)
            for i in range(n_s + 2):
                yield create(s, i, elem)
                yield annihilate(s, i, elem)
            for i in range(n_s + 1):
                yield Tstar(s, i, elem)

    def c2(elem):
        for s in "xy":
            yield create(s, 0, elem)
            yield annihilate(s, 0, elem)
        yield H_apply(elem)

    def c3(elem):
        for s in "xy":
            n_s = species_range(elem, s)
            yield create(s, n_s + 1, elem)
            yield annihilate(s, n_s + 1, elem)
        yield H_apply(elem)

    return {"C1": c1, "C2": c2, "C3": c3}[family]


@dataclass
class ClosureResult:
    family: str
    n: int
    elements: frozenset
    zero_hits: int

    def by_grading(self) -> dict[tuple[int, int], frozenset]:
        out: dict[tuple[int, int], set] = {}
        for e in self.elements:
            (g,) = e.gradings()
            out.setdefault(g, set()).add(e)
        return {g: frozenset(v) for g, v in out.items()}


def generate_C(n: int, family: str = "C1", cap: int = DEFAULT_CAP,
               work_degree: int | None = None) -> ClosureResult:
    """Orbit of 1 under one generator family, restricted to degree <= n.

    The search runs inside degree <= work_degree, by default max(n + 1, 2).
    Some elements of top degree n (and the sign -1 when n < 2) are reached
    only through a detour one degree higher.
    Elements are kept with their sign; 0 is counted, not stored.
    """
    if family not in FAMILIES:
        raise SutureError(f"unknown generator family {family!r}")
    if n < 0 or n > 8:
        raise SutureError("generate_C supports 0 <= n <= 8")
    bound = max(n + 1, 2) if work_degree is None else work_degree
    if bound < n:
        raise SutureError("work_degree must be at least n")
    ops = _operators(family)
    start = FockElement.one()
    seen = {start}
    queue = deque([start])
    zero = 0
    while queue:
        elem = queue.popleft()
        for img in ops(elem):
            if not img.terms:
                zero += 1
                continue
            (g,) = img.gradings()
            if g[0] + g[1] > bound or img in seen:
                continue
            seen.add(img)
            if len(seen) > cap:
                raise CapExceeded(f"closure exceeded {cap} elements")
            queue.append(img)
    kept = frozenset(e for e in seen if sum(next(iter(e.gradings()))) <= n)
    return ClosureResult(family, n, kept, zero)


def suture_set(n_x: int, n_y: int) -> frozenset:
    """Both signs of every chord diagram's suture element in one grading."""
    m = n_x + n_y + 1
    out = set()
    for d in dg.diagrams_by_grading(m).get((n_x, n_y), ()):
        c = dg.decompose(d)
        out.add(c)
        out.add(-c)
    return frozenset(out)


# chains of bypasses

def _strip_chord(d: dg.ChordDiagram, p: int) -> tuple[dg.ChordDiagram, list[int]]:
    """Remove the outermost chord (p, p+1); also return the old label of each new point."""
    size = d.size
    q = (p + 1) % size
    order = [k for k in range(size) if k not in (p, q)]
    if 0 in (p, q):
        k = order.index(2 if p == 0 else size - 2)
        order = order[k:] + order[:k]
    label = {old: new for new, old in enumerate(order)}
    chords = [(label[a], label[b]) for a, b in d.chords() if a not in (p, q)]
    return dg.ChordDiagram.from_chords(chords, d.m - 1), order


def _restore_chord(d: dg.ChordDiagram, order: list[int], p: int) -> dg.ChordDiagram:
    size = d.size + 2
    chords = [(order[a], order[b]) for a, b in d.chords()]
    chords.append((p, (p + 1) % size))
    return dg.ChordDiagram.from_chords(chords, d.m + 1)


def _diagram_chain(du: dg.ChordDiagram, dv: dg.ChordDiagram) -> list[dg.ChordDiagram]:
    if du == dv:
        return [du]
    u_outer = du.outermost_chords()
    shared = [c for c in dv.outermost_chords() if c in u_outer]
    if shared:
        p = min(shared)[0]
        ru, order = _strip_chord(du, p)
        rv, _ = _strip_chord(dv, p)
        return [_restore_chord(d, order, p) for d in _diagram_chain(ru, rv)]
    p, q = min(dv.outermost_chords())
    size = du.size
    r = (q + 1) % size
    frame = (p, q, r, du.partner(r), du.partner(q), du.partner(p))
    arc = dg.arc_from_frame(du, frame, 1, "up")
    nxt = dg.bypass_surgery(du, arc)
    return [du] + _diagram_chain(nxt, dv)


def connecting_chain(u: FockElement, v: FockElement) -> list[FockElement]:
    """Suture elements u = v_0, ..., v_k = v with <v_i|v_j> = 1 for i <= j.

    Built by peeling shared outermost chords and otherwise applying one
    upwards bypass that creates the smallest outermost chord of v.
    """
    if pairing(u, v) != 1:
        raise SutureError("connecting_chain needs <u|v> = 1")
    if not (is_suture_element(u) and is_suture_element(v)):
        raise SutureError("both arguments must be suture elements")
    du = dg.diagram_of_pair(u.first_word(), u.last_word())
    dv = dg.diagram_of_pair(v.first_word(), v.last_word())
    chain = _diagram_chain(du, dv)
    out = []
    for d in chain:
        c = dg.decompose(d)
        out.append(c if pairing(c, v) == 1 else -c)
    out[0] = u
    return out
