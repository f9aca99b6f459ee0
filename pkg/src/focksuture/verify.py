"""Verification suites.

Every check is registered under an anchor string naming the identity it
verifies.  A check receives the size cap and a seeded random generator and
returns None on success or a counterexample payload.  Each check also has
its own hard cap, so `max_n` never pushes an exhaustive search past what
the check can afford.
"""

from __future__ import annotations

import itertools
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Callable

import numpy as np

from . import diagrams as dg
from . import duality as du
from . import fock as fk
from . import sutures as su
from .fullrank import construct_full_rank_pairing
from .linalg import det_bareiss, matmul
from .operators import OperatorSpec, Atom, normal_form
from .fock import FockElement
from .words import (Word, comparable_pairs, elementary_moves, enumerate_words, gradings, leq, min_max,
                    parse_word, profile, profile_inequalities)

DEFAULT_MAX_N = 6


def default_max_n() -> int:
    value = os.environ.get("FOCKSUTURE_MAX_N")
    return int(value) if value else DEFAULT_MAX_N


@dataclass(frozen=True)
class Check:
    anchor: str
    suite: str
    cap: int
    fn: Callable[[int, random.Random], Any]


@dataclass
class CheckResult:
    anchor: str
    suite: str
    params: dict
    passed: bool
    counterexample: Any = None
    seconds: float = 0.0


@dataclass
class VerificationReport:
    suite: str
    max_n: int
    seed: int
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_json(self, timing: bool = False) -> dict:
        rows = []
        for r in self.results:
            row = asdict(r)
            if not timing:
                row.pop("seconds")
            rows.append(row)
        return {"suite": self.suite, "max_n": self.max_n, "seed": self.seed,
                "passed": self.passed, "checks": rows}

    def to_text(self) -> str:
        lines = [f"suite {self.suite}  max_n={self.max_n}  seed={self.seed}"]
        for r in self.results:
            mark = "PASS" if r.passed else "FAIL"
            lines.append(f"  {mark}  [{r.suite}] {r.anchor}  n<={r.params['n']}  ({r.seconds:.2f}s)")
            if not r.passed:
                lines.append(f"        counterexample: {r.counterexample}")
        total = sum(r.passed for r in self.results)
        lines.append(f"{total}/{len(self.results)} checks passed")
        return "\n".join(lines)


REGISTRY: dict[str, Check] = {}


def check(anchor: str, suite: str, cap: int):
    def deco(fn):
        if anchor in REGISTRY:
            raise ValueError(f"duplicate anchor {anchor!r}")
        REGISTRY[anchor] = Check(anchor, suite, cap, fn)
        return fn
    return deco


def suites() -> list[str]:
    return sorted({c.suite for c in REGISTRY.values()})


# helpers

def _words(n: int):
    for k in range(n + 1):
        for g in gradings(k):
            yield from enumerate_words(*g)


def _el(w) -> fk.FockElement:
    return fk.FockElement.word(w)


def _safe(f):
    try:
        return f()
    except fk.OperatorIndexError:
        return "index error"


def _ns(w, s: str) -> int:
    return w.n_x if s == "x" else w.n_y


def _rep(f, k: int, e):
    for _ in range(k):
        e = f(e)
    return e


# words

@check("partial order: six profile inequalities agree", "words", 9)
def _profiles(n, rng):
    for k in range(n + 1):
        for g in gradings(k):
            ws = enumerate_words(*g)
            for a in ws:
                for b in ws:
                    ineq = profile_inequalities(a, b)
                    if len(set(ineq)) != 1 or ineq[0] != leq(a, b):
                        return {"w0": str(a), "w1": str(b), "inequalities": ineq}
    return None


@check("min/max of two words bounds both", "words", 8)
def _minmax(n, rng):
    for k in range(n + 1):
        for g in gradings(k):
            ws = enumerate_words(*g)
            for a in ws:
                for b in ws:
                    lo, hi = min_max(a, b)
                    if not (leq(lo, a) and leq(lo, b) and leq(a, hi) and leq(b, hi)):
                        return {"w0": str(a), "w1": str(b), "min": str(lo), "max": str(hi)}
    return None


@check("comparable pairs biject with chord diagrams by Euler class", "words", 8)
def _pairs_count(n, rng):
    for k in range(n + 1):
        by = dg.diagrams_by_grading(k + 1)
        for g in gradings(k):
            if len(comparable_pairs(*g)) != len(by.get(g, ())):
                return {"grading": g, "pairs": len(comparable_pairs(*g)), "diagrams": len(by.get(g, ()))}
    return None


# fock algebra

def inter_species_failures(n: int) -> list[dict]:
    """Every (word, i, j, kinds) where an x-operator and a y-operator fail to commute."""
    out = []
    for w in _words(n):
        e = _el(w)
        for i in range(w.n_x + 2):
            for j in range(w.n_y + 2):
                for ka, kb in itertools.product(("a", "c"), repeat=2):
                    fx = (lambda t, i=i: fk.annihilate("x", i, t)) if ka == "a" else (lambda t, i=i: fk.create("x", i, t))
                    fy = (lambda t, j=j: fk.annihilate("y", j, t)) if kb == "a" else (lambda t, j=j: fk.create("y", j, t))
                    lhs = _safe(lambda: fx(fy(e)))
                    rhs = _safe(lambda: fy(fx(e)))
                    if lhs != rhs:
                        out.append({"word": str(w), "i": i, "j": j, "ops": ka + kb,
                                    "lhs": str(lhs), "rhs": str(rhs)})
    return out


def inter_species_class(w: Word, i: int, j: int) -> str | None:
    """Corner class of an index pair: 'initial', 'final', 'adjacent' or None."""
    if (i, j) == (0, 0):
        return "initial"
    if (i, j) == (w.n_x + 1, w.n_y + 1):
        return "final"
    if (i, j) in ((0, 1), (1, 0), (w.n_x, w.n_y + 1), (w.n_x + 1, w.n_y)):
        return "adjacent"
    return None


@check("inter-species operators commute outside the initial and final corners", "fock", 7)
def _inter(n, rng):
    # Two annihilations also fail next to the corners: on xy, a(x,1) a(y,0) gives 0
    # but a(y,0) a(x,1) gives 1.  Only creation-involving pairs obey the bare rule.
    witnessed = set()
    for f in inter_species_failures(n):
        w = parse_word(f["word"])
        cls = inter_species_class(w, f["i"], f["j"])
        if cls is None or (cls == "adjacent" and f["ops"] != "aa"):
            return f
        witnessed.add((cls, f["ops"]))
    if n >= 2:
        need = {(p, o) for p in ("initial", "final") for o in ("aa", "ac", "ca", "cc")}
        need.add(("adjacent", "aa"))
        if need - witnessed:
            return {"missing_witnesses": sorted(need - witnessed)}
    return None


def simplicial_failures(n: int) -> list[dict]:
    """Every (word, s, i, j) where an intra-species relation fails, n <= given."""
    out = []
    for w in _words(n):
        e = _el(w)
        for s in "xy":
            r = range(_ns(w, s) + 2)
            for i in r:
                for j in r:
                    if i < j:
                        a = _safe(lambda: fk.annihilate(s, i, fk.annihilate(s, j, e)))
                        b = _safe(lambda: fk.annihilate(s, j - 1, fk.annihilate(s, i, e)))
                        if a != b:
                            out.append({"relation": "aa", "word": str(w), "s": s, "i": i, "j": j})
                    a = _safe(lambda: fk.annihilate(s, i, fk.create(s, j, e)))
                    if i < j:
                        b = _safe(lambda: fk.create(s, j - 1, fk.annihilate(s, i, e)))
                    elif i in (j, j + 1):
                        b = e
                    else:
                        b = _safe(lambda: fk.create(s, j, fk.annihilate(s, i - 1, e)))
                    if a != b:
                        out.append({"relation": "ac", "word": str(w), "s": s, "i": i, "j": j})
                    if i <= j:
                        a = _safe(lambda: fk.create(s, i, fk.create(s, j, e)))
                        b = _safe(lambda: fk.create(s, j + 1, fk.create(s, i, e)))
                        if a != b:
                            out.append({"relation": "cc", "word": str(w), "s": s, "i": i, "j": j})
    return out


VACUUM_EXCEPTIONS = [{"relation": "ac", "word": "", "s": s, "i": 0, "j": 1} for s in "xy"]


@check("intra-species simplicial relations, failing only at a_{s,0} a*_{s,1} on the vacuum", "fock", 7)
def _intra(n, rng):
    fails = simplicial_failures(n)
    if fails != VACUUM_EXCEPTIONS:
        return {"failures": fails[:5], "expected": VACUUM_EXCEPTIONS}
    return None


@check("annihilation/creation adjoint one way with respect to the pairing", "fock", 6)
def _adjoint(n, rng):
    for k in range(n + 1):
        for g in gradings(k):
            ws = enumerate_words(*g)
            for w0 in ws:
                for w1 in enumerate_words(g[0] - 1, g[1]) if g[0] else ():
                    for i in range(w0.n_x + 1):
                        lhs = fk.pairing(fk.annihilate("x", i, _el(w0)), _el(w1))
                        rhs = fk.pairing(_el(w0), fk.create("x", i, _el(w1)))
                        if lhs != rhs:
                            return {"species": "x", "w0": str(w0), "w1": str(w1), "i": i}
                for w1 in enumerate_words(g[0], g[1] + 1):
                    for i in range(w1.n_y + 1):
                        lhs = fk.pairing(_el(w0), fk.annihilate("y", i, _el(w1)))
                        rhs = fk.pairing(fk.create("y", i, _el(w0)), _el(w1))
                        if lhs != rhs:
                            return {"species": "y", "w0": str(w0), "w1": str(w1), "i": i}
    return None


@check("creation operators are isometries of the pairing", "fock", 6)
def _isometry(n, rng):
    for k in range(n + 1):
        for g in gradings(k):
            ws = enumerate_words(*g)
            for w0 in ws:
                for w1 in ws:
                    p = fk.pairing(_el(w0), _el(w1))
                    for s in "xy":
                        for i in range(_ns(w0, s) + 2):
                            if fk.pairing(fk.create(s, i, _el(w0)), fk.create(s, i, _el(w1))) != p:
                                return {"w0": str(w0), "w1": str(w1), "s": s, "i": i}
    return None


@check("pairing reduction terminates at B(1,1) and agrees with the order", "fock", 6)
def _reduction(n, rng):
    for k in range(n + 1):
        for g in gradings(k):
            ws = enumerate_words(*g)
            for w0 in ws:
                for w1 in ws:
                    value, _ = fk.pairing_reduction(w0, w1)
                    if value != int(leq(w0, w1)):
                        return {"w0": str(w0), "w1": str(w1), "reduction": value}
    return None


@check("pairing Gram matrix has determinant 1", "fock", 8)
def _gram(n, rng):
    for k in range(n + 1):
        for g in gradings(k):
            d = det_bareiss(fk.gram(*g).matrix.tolist())
            if d not in (1, -1):
                return {"grading": g, "det": d}
    return None


@check("differentials square to zero, commute, and satisfy {d_s, a*_{s,0}} = -1", "fock", 6)
def _differentials(n, rng):
    for w in _words(n):
        e = _el(w)
        for s in "xy":
            if fk.differential(s, fk.differential(s, e)).terms:
                return {"word": str(w), "s": s, "law": "d^2"}
            if fk.differential(s, fk.create(s, 0, e)) + fk.create(s, 0, fk.differential(s, e)) != -e:
                return {"word": str(w), "s": s, "law": "anticommutator"}
        if fk.differential("x", fk.differential("y", e)) != fk.differential("y", fk.differential("x", e)):
            return {"word": str(w), "law": "dx dy"}
    return None


@check("normal form of one-species products acts identically away from the vacuum", "fock", 6)
def _normal_form(n, rng):
    for _ in range(150):
        s = rng.choice("xy")
        atoms = tuple(Atom(rng.choice(("create", "annihilate")), s, rng.randint(0, 3))
                      for _ in range(rng.randint(0, 5)))
        spec = OperatorSpec(atoms)
        nf = normal_form(spec)
        depth = sum(a.kind == "annihilate" for a in atoms)
        for w in _words(n):
            if w.n <= depth:
                continue
            a = _safe(lambda: spec(_el(w)))
            if a == "index error":
                continue
            if _safe(lambda: nf(_el(w))) != a:
                return {"spec": str(spec), "normal_form": str(nf), "word": str(w)}
    return None


@check("Temperley-Lieb relations for U_{s,i}", "temperley-lieb", 7)
def _tl(n, rng):
    for w in _words(n):
        e = _el(w)
        for s in "xy":
            ns = _ns(w, s)
            for i in range(ns):
                u = lambda t, i=i: fk.U(s, i, t)
                if u(u(e)).terms:
                    return {"word": str(w), "s": s, "i": i, "law": "U^2"}
                if i + 1 < ns:
                    v = lambda t, i=i: fk.U(s, i + 1, t)
                    if u(v(u(e))) != -u(e):
                        return {"word": str(w), "s": s, "i": i, "law": "UVU"}
                    if v(u(v(e))) != -v(e):
                        return {"word": str(w), "s": s, "i": i, "law": "VUV"}
                for j in range(i + 2, ns):
                    if fk.U(s, i, fk.U(s, j, e)) != fk.U(s, j, fk.U(s, i, e)):
                        return {"word": str(w), "s": s, "i": i, "j": j, "law": "far commutation"}
    return None


# duality

@check("Q+ and Q- are inverted by their explicit inverses", "duality", 8)
def _q_inverse(n, rng):
    for w in _words(n):
        e = _el(w)
        for f, g in ((du.Q_plus, du.Q_plus_inv), (du.Q_minus, du.Q_minus_inv)):
            if f(g(e)) != e or g(f(e)) != e:
                return {"word": str(w), "op": f.__name__}
    return None


@check("u.v = <u|Q+ v> = <Q- u|v> and <u|v> = <v|Hu>", "duality", 7)
def _intertwining(n, rng):
    for k in range(n + 1):
        for g in gradings(k):
            ws = enumerate_words(*g)
            qp = {w: du.Q_plus(_el(w)) for w in ws}
            qm = {w: du.Q_minus(_el(w)) for w in ws}
            h = {w: du.H_apply(_el(w)) for w in ws}
            for u in ws:
                for v in ws:
                    d = int(u == v)
                    if fk.pairing(_el(u), qp[v]) != d or fk.pairing(qm[u], _el(v)) != d:
                        return {"u": str(u), "v": str(v), "law": "intertwining"}
                    if fk.pairing(_el(u), _el(v)) != fk.pairing(_el(v), h[u]):
                        return {"u": str(u), "v": str(v), "law": "duality"}
                    if fk.pairing(h[u], h[v]) != fk.pairing(_el(u), _el(v)):
                        return {"u": str(u), "v": str(v), "law": "isometry"}
    return None


@check("H agrees along Q+Q-^{-1}, term-by-term, block, recursive routes", "duality", 8)
def _h_routes(n, rng):
    for k in range(n + 1):
        for g in gradings(k):
            ref = du.H_matrix(*g)
            if not np.array_equal(ref, du.H_recursive_matrix(*g)):
                return {"grading": g, "route": "recursive minors"}
            for w in enumerate_words(*g):
                h = du.H_apply(_el(w))
                for name, f in (("explicit", du.H_terms_explicit), ("block", du.H_block_expansion),
                                ("commutator formula", du.H_recursive_formula)):
                    if f(w) != h:
                        return {"word": str(w), "route": name}
    return None


@check("recursive identities of H under initial operators", "duality", 7)
def _lemma(n, rng):
    A = lambda s: (lambda t: fk.annihilate(s, 0, t))
    C = lambda s: (lambda t: fk.create(s, 0, t))
    H = du.H_apply
    for w in _words(n):
        e = _el(w)
        if A("y")(H(C("y")(e))) != H(e):
            return {"word": str(w), "identity": "i"}
        for j in range(0, 3):
            if A("y")(H(_rep(C("x"), j, C("y")(e)))) != H(_rep(C("x"), j, e)):
                return {"word": str(w), "j": j, "identity": "ii"}
            lhs = A("y")(_rep(A("x"), j + 1, H(_rep(C("x"), j, C("y")(C("x")(e))))))
            if lhs != -H(e):
                return {"word": str(w), "j": j, "identity": "iii"}
            if 1 <= j <= w.n_x and A("y")(_rep(A("x"), j, H(_rep(C("x"), j, e)))).terms:
                return {"word": str(w), "j": j, "identity": "iv-a"}
            if _rep(A("x"), j + 2, H(_rep(C("x"), j, C("y")(e)))).terms:
                return {"word": str(w), "j": j, "identity": "iv-b"}
            if A("x")(H(_rep(C("x"), j, C("y")(C("y")(e))))).terms:
                return {"word": str(w), "j": j, "identity": "iv-c"}
    return None


@check("H^(n+1) = (-1)^(nx ny) with order 2n+2 or n+1", "periodicity", 9)
def _period(n, rng):
    for k in range(n + 1):
        for g in gradings(k):
            res = du.H_period(*g)
            if not res.scalar or res.sign_at_n_plus_1 != (-1) ** (g[0] * g[1]):
                return {"grading": g, "sign": res.sign_at_n_plus_1}
            if g[0] and g[1] and res.order != du.expected_order(*g):
                return {"grading": g, "order": res.order}
    return None


def pawn_orbit(n_x: int, n_y: int) -> list[FockElement]:
    """c_0 = w_n, c_1 = w_1, c_i = [w_i, w_{i-1}] for 2 <= i <= n."""
    cyc = du.pawn_cycle(n_x, n_y)
    n = n_x + n_y
    out = [_el(cyc[n]), _el(cyc[1])]
    out += [su.bracket(cyc[i], cyc[i - 1]) for i in range(2, n + 1)]
    return out


@check("H steps interval elements along the pawn cycle with sign (-1)^|E^x|", "periodicity", 8)
def _pawn(n, rng):
    for k in range(1, n + 1):
        for g in gradings(k):
            cyc = du.pawn_cycle(*g)
            orbit = pawn_orbit(*g)
            product = 1
            for i in range(k + 1):
                nxt = orbit[(i + 1) % (k + 1)]
                sign = (-1) ** len(du.exceptional_set(cyc[i + 1], "x").indices) if i < k else 1
                if du.H_apply(orbit[i]) != nxt.scale(sign):
                    return {"grading": g, "i": i}
                product *= sign
            total = sum(len(du.exceptional_set(cyc[i], "x").indices) for i in range(1, k + 1))
            if total != g[0] * g[1] or product != (-1) ** total:
                return {"grading": g, "exceptional_total": total}
    return None


# chord diagrams

@check("Catalan counts, basis round trip, and suture element shape", "diagrams", 7)
def _decompose(n, rng):
    from math import comb
    for m in range(1, n + 1):
        ds = dg.enumerate_diagrams(m)
        if len(ds) != comb(2 * m, m) // (m + 1):
            return {"m": m, "count": len(ds)}
        for d in ds:
            c = dg.decompose(d)
            w = dg.basis_word(d)
            if w is not None and (dg.basis_diagram(w) != d or c != _el(w)):
                return {"diagram": str(d), "law": "basis"}
            if any(v not in (1, -1) for _, v in c) or c.terms[0][1] != 1:
                return {"diagram": str(d), "law": "coefficients"}
            if w is None and c.coefficient_sum() != 0:
                return {"diagram": str(d), "law": "sum"}
            if fk.pairing(c, c) != 1 or fk.pairing(c, du.H_apply(c)) != 1:
                return {"diagram": str(d), "law": "norms"}
            if dg.diagram_of_pair(*dg.pair_of(d)) != d:
                return {"diagram": str(d), "law": "pair bijection"}
    return None


@check("stack connectivity equals |<c0|c1>|", "diagrams", 6)
def _stack(n, rng):
    for m in range(1, n + 1):
        ds = dg.enumerate_diagrams(m)
        cs = [dg.decompose(d) for d in ds]
        for a, ca in zip(ds, cs):
            for b, cb in zip(ds, cs):
                p = fk.pairing(ca, cb)
                if p not in (-1, 0, 1) or dg.stack(a, b) != (p != 0):
                    return {"d0": str(a), "d1": str(b), "pairing": p}
    return None


@check("bypass triples satisfy c0 = +-c1 +- c2; elementary moves are bypasses", "diagrams", 6)
def _bypass(n, rng):
    for m in range(1, n + 1):
        for tri in dg.enumerate_bypass_triples(m):
            cs = [dg.decompose(d) for d in tri]
            for a, b, c in itertools.permutations(cs):
                if not any(a == b.scale(e1) + c.scale(e2) for e1 in (1, -1) for e2 in (1, -1)):
                    return {"triple": [str(d) for d in tri]}
    for k in range(1, n):
        for g in gradings(k):
            for w0 in enumerate_words(*g):
                for w1 in elementary_moves(w0):
                    d0 = dg.basis_diagram(w0)
                    hits = [a for a in dg.bypass_arcs(d0, "up") if dg.bypass_surgery(d0, a) == dg.basis_diagram(w1)]
                    if not hits:
                        return {"w0": str(w0), "w1": str(w1), "law": "no arc"}
                    down = dg.decompose(dg.bypass_surgery(d0, hits[0].with_direction("down")))
                    diff = _el(w0) - _el(w1)
                    if down != diff and down != -diff:
                        return {"w0": str(w0), "w1": str(w1), "law": "third element"}
    return None


@check("rotation by two places induces H on suture elements", "diagrams", 6)
def _rotation(n, rng):
    for m in range(1, n + 1):
        for g in gradings(m - 1):
            ws = enumerate_words(*g)
            if dg.rotate(dg.basis_diagram(ws[0])) != dg.basis_diagram(ws[-1]):
                return {"grading": g, "law": "w_min to w_max"}
            try:
                r = dg.rotation_matrix(*g)
            except AssertionError as exc:
                return {"grading": g, "law": str(exc)}
            if not np.array_equal(r, du.H_matrix(*g)):
                return {"grading": g, "law": "R = H"}
            for d in dg.diagrams_by_grading(m).get(g, ()):
                img = fk.from_vector(matmul(r, fk.to_vector(dg.decompose(d), *g)), *g)
                rot = dg.decompose(dg.rotate(d))
                if img != rot and img != -rot:
                    return {"diagram": str(d), "law": "R on all diagrams"}
    return None


@check("diagram operators and gluing match the word operators", "isomorphism", 6)
def _isomorphism(n, rng):
    for m in range(1, n + 1):
        for d in dg.enumerate_diagrams(m):
            c = dg.decompose(d)
            for s in "xy":
                for i in range((d.n_minus if s == "x" else d.n_plus) + 2):
                    e = fk.create(s, i, c)
                    r = dg.decompose(dg.diagram_create(s, i, d))
                    if r != e and r != -e:
                        return {"diagram": str(d), "op": f"a*({s},{i})"}
                    e = fk.annihilate(s, i, c)
                    r = dg.diagram_annihilate(s, i, d)
                    r = fk.FockElement.zero() if r is dg.CLOSED_LOOP else dg.decompose(r)
                    if r != e and r != -e:
                        return {"diagram": str(d), "op": f"a({s},{i})"}
    for m0 in range(1, min(n, 5)):
        for m1 in range(1, min(n, 5) - m0 + 2):
            for a in dg.enumerate_diagrams(m0):
                for b in dg.enumerate_diagrams(m1):
                    p = dg.decompose(a) * dg.decompose(b)
                    g = dg.decompose(dg.glue(a, b))
                    if g != p and g != -p:
                        return {"d0": str(a), "d1": str(b), "op": "glue"}
    return None


# suture elements

@check("closures under three generator families coincide and contain -1", "sutures", 6)
def _closures(n, rng):
    res = {f: su.generate_C(n, f) for f in su.FAMILIES}
    if not (res["C1"].elements == res["C2"].elements == res["C3"].elements):
        return {"n": n, "sizes": {f: len(r.elements) for f, r in res.items()}}
    if -fk.FockElement.one() not in res["C1"].elements:
        return {"n": n, "law": "-1 missing"}
    return None


@check("|C_n^e| = 2 N_n^e and closure equals diagram suture elements", "sutures", 7)
def _counting(n, rng):
    res = su.generate_C(n, "C2").by_grading()
    for k in range(n + 1):
        for g in gradings(k):
            got = res.get(g, frozenset())
            if len(got) != 2 * len(comparable_pairs(*g)) or got != su.suture_set(*g):
                return {"grading": g, "size": len(got)}
    return None


@check("suture elements closed under operators, Q+^{-1}C = Q-^{-1}C, pairings in {-1,0,1}", "sutures", 6)
def _suture_laws(n, rng):
    for k in range(n + 1):
        for g in gradings(k):
            cs = su.suture_set(*g)
            for c in cs:
                for s in "xy":
                    ns = g[0] if s == "x" else g[1]
                    imgs = [f(s, i, c) for f in (fk.create, fk.annihilate) for i in range(ns + 2)]
                    imgs += [f(s, i, c) for f in (fk.T, fk.Tstar) for i in range(ns + 1)]
                    imgs += [fk.U(s, i, c) for i in range(ns)]
                    for img in imgs:
                        if img.terms and not su.is_suture_element(img):
                            return {"element": str(c), "image": str(img)}
            # H = Q+ Q-^{-1} preserves C, which forces equality of the inverse images
            qp = {du.Q_plus_inv(c) for c in cs}
            qm = {du.Q_minus_inv(c) for c in cs}
            if qp != qm or len(qp) != 2 * len(comparable_pairs(*g)):
                return {"grading": g, "law": "Q+^{-1}C = Q-^{-1}C"}
            for a in cs:
                for b in cs:
                    if fk.pairing(a, b) not in (-1, 0, 1):
                        return {"u": str(a), "v": str(b)}
    return None


@check("connecting chains of bypasses between paired suture elements", "sutures", 5)
def _chains(n, rng):
    for m in range(1, n + 1):
        ds = dg.enumerate_diagrams(m)
        for a in ds:
            for b in ds:
                u, v = dg.decompose(a), dg.decompose(b)
                p = fk.pairing(u, v)
                if p == 0:
                    continue
                chain = su.connecting_chain(u.scale(p), v)
                ok = chain[0] == u.scale(p) and chain[-1] == v
                ok = ok and all(su.is_suture_element(chain[i] - chain[i + 1]) for i in range(len(chain) - 1))
                ok = ok and all(fk.pairing(chain[i], chain[j]) == 1
                                for i in range(len(chain)) for j in range(i, len(chain)))
                if not ok:
                    return {"u": str(u.scale(p)), "v": str(v)}
    return None


@check("greedy signs give a full-rank pairing supported on stackable pairs", "fullrank", 6)
def _fullrank(n, rng):
    from math import comb
    for m in range(1, n + 1):
        p = construct_full_rank_pairing(m)
        if p.rank != comb(2 * m, m) // (m + 1) or not p.zero_pattern_matches_stack():
            return {"m": m, "rank": p.rank}
    return None


# running

def _run_one(anchor: str, max_n: int, seed: int) -> CheckResult:
    c = REGISTRY[anchor]
    n = min(max_n, c.cap)
    rng = random.Random(f"{seed}:{anchor}")
    t0 = time.perf_counter()
    try:
        cex = c.fn(n, rng)
    except Exception as exc:  # a crash is a failed check, not a crashed run
        cex = {"exception": f"{type(exc).__name__}: {exc}"}
    return CheckResult(anchor, c.suite, {"n": n, "seed": seed}, cex is None, cex,
                       time.perf_counter() - t0)


def run_suite(name: str = "all", max_n: int | None = None, seed: int = 0, jobs: int = 1) -> VerificationReport:
    if name != "all" and name not in suites():
        raise KeyError(f"unknown suite {name!r}; known: all, {', '.join(suites())}")
    max_n = default_max_n() if max_n is None else max_n
    anchors = [a for a, c in REGISTRY.items() if name == "all" or c.suite == name]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, anchors, [max_n] * len(anchors), [seed] * len(anchors)))
    else:
        results = [_run_one(a, max_n, seed) for a in anchors]
    return VerificationReport(name, max_n, seed, results)
