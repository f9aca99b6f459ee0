"""Symbolic operator strings and the normal form of one-species products.

Grammar (atoms separated by whitespace, applied right to left):

    a*(s,i)  a(s,i)  T(s,i)  T*(s,i)  U(s,i)  H  Hinv  <integer>

where s is x, y, - or +.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .duality import H_apply, H_inv
from .fock import FockElement, T, Tstar, U, annihilate, create

KINDS = ("create", "annihilate", "T", "Tstar", "U", "H", "Hinv", "scalar")
_SYMBOL = {"create": "a*", "annihilate": "a", "T": "T", "Tstar": "T*", "U": "U"}
_KIND_OF = {v: k for k, v in _SYMBOL.items()}
_SPECIES = {"x": "x", "y": "y", "-": "x", "+": "y", "−": "x"}

_ATOM = re.compile(r"(a\*|T\*|a|T|U)\(\s*([xy+\-−])\s*,\s*(\d+)\s*\)|(Hinv)|(H)|([+-]?\d+)")


class SpecError(ValueError):
    pass


@dataclass(frozen=True)
class Atom:
    kind: str
    s: str | None = None
    i: int | None = None
    k: int | None = None

    def __str__(self) -> str:
        if self.kind in _SYMBOL:
            return f"{_SYMBOL[self.kind]}({self.s},{self.i})"
        if self.kind == "scalar":
            return str(self.k)
        return self.kind

    def apply(self, elem: FockElement) -> FockElement:
        if self.kind == "create":
            return create(self.s, self.i, elem)
        if self.kind == "annihilate":
            return annihilate(self.s, self.i, elem)
        if self.kind == "T":
            return T(self.s, self.i, elem)
        if self.kind == "Tstar":
            return Tstar(self.s, self.i, elem)
        if self.kind == "U":
            return U(self.s, self.i, elem)
        if self.kind == "H":
            return H_apply(elem)
        if self.kind == "Hinv":
            return H_inv(elem)
        return elem.scale(self.k)


def create_atom(s: str, i: int) -> Atom:
    return Atom("create", _SPECIES[s], i)


def annihilate_atom(s: str, i: int) -> Atom:
    return Atom("annihilate", _SPECIES[s], i)


@dataclass(frozen=True)
class OperatorSpec:
    atoms: tuple[Atom, ...] = ()

    def __str__(self) -> str:
        return " ".join(str(a) for a in self.atoms) if self.atoms else "1"

    def __call__(self, elem: FockElement) -> FockElement:
        return apply_spec(self, elem)

    def to_json(self) -> str:
        return str(self)


def parse_spec(text: str) -> OperatorSpec:
    atoms = []
    pos = 0
    text = text.strip()
    if text in ("", "1"):
        return OperatorSpec()
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _ATOM.match(text, pos)
        if not m:
            raise SpecError(f"cannot parse operator at {text[pos:]!r}")
        sym, s, i, hinv, h, k = m.groups()
        if sym:
            atoms.append(Atom(_KIND_OF[sym], _SPECIES[s], int(i)))
        elif hinv:
            atoms.append(Atom("Hinv"))
        elif h:
            atoms.append(Atom("H"))
        else:
            atoms.append(Atom("scalar", k=int(k)))
        pos = m.end()
    return OperatorSpec(tuple(atoms))


def apply_spec(spec: OperatorSpec, elem: FockElement) -> FockElement:
    for atom in reversed(spec.atoms):
        elem = atom.apply(elem)
    return elem


def normal_form(spec: OperatorSpec) -> OperatorSpec:
    """Rewrite a product of one species' creations and annihilations as
    creations (indices strictly decreasing) after annihilations (weakly decreasing).
    """
    species = {a.s for a in spec.atoms}
    if any(a.kind not in ("create", "annihilate") for a in spec.atoms):
        raise SpecError("normal_form accepts only creation and annihilation atoms")
    if len(species) > 1:
        raise SpecError("normal_form needs a single species")
    word = [(a.kind == "create", a.i) for a in spec.atoms]
    changed = True
    while changed:
        changed = False
        for k in range(len(word) - 1):
            (lc, i), (rc, j) = word[k], word[k + 1]
            new = None
            if not lc and rc:
                if i < j:
                    new = [(True, j - 1), (False, i)]
                elif i in (j, j + 1):
                    new = []
                else:
                    new = [(True, j), (False, i - 1)]
            elif not lc and not rc and i < j:
                new = [(False, j - 1), (False, i)]
            elif lc and rc and i <= j:
                new = [(True, j + 1), (True, i)]
            if new is not None:
                word[k:k + 2] = new
                changed = True
                break
    s = species.pop() if species else None
    return OperatorSpec(tuple(Atom("create" if c else "annihilate", s, i) for c, i in word))
