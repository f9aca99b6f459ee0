"""Command line entry point: ``focksuture <command> ...``.

Exit status is 0 on success, 1 when a check fails and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import diagrams as dg
from . import duality as du
from . import fock as fk
from . import sutures as su
from .fullrank import construct_full_rank_pairing
from .operators import SpecError, parse_spec
from .render import FORMATS, render
from .verify import run_suite, suites
from .words import WordError, leq, min_max, parse_word, profile, word_difference

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_diagram(text: str) -> dg.ChordDiagram:
    """A diagram given as JSON, as a chord list like "0-3 1-2 4-5", or as a word (its basis diagram)."""
    text = text.strip()
    if text.startswith("{"):
        return dg.ChordDiagram.from_json(json.loads(text))
    if text == "1" or re.fullmatch(r"[xy+\-−]+", text):
        return dg.basis_diagram(parse_word(text if text != "1" else ""))
    pairs = re.findall(r"(\d+)\s*[-,:]\s*(\d+)", text)
    if not pairs:
        raise UsageError(f"cannot read a chord diagram from {text!r}")
    return dg.ChordDiagram.from_chords([(int(a), int(b)) for a, b in pairs])


def _emit(args, payload, text: str | None = None) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text if text is not None else payload)


# word

def _cmd_word(args) -> int:
    if args.action == "profile":
        w = parse_word(args.words[0])
        p = profile(w)
        payload = {"word": str(w), **{k: list(v) for k, v in vars(p).items()}}
        _emit(args, payload, "\n".join(f"{k}: {' '.join(map(str, v))}" for k, v in vars(p).items()))
        return EXIT_OK
    if len(args.words) != 2:
        raise UsageError(f"word {args.action} takes two words")
    w0, w1 = (parse_word(t) for t in args.words)
    if args.action == "leq":
        ok = leq(w0, w1)
        _emit(args, {"leq": ok}, str(ok).lower())
        return EXIT_OK
    lo, hi = min_max(w0, w1)
    payload = {"min": str(lo), "max": str(hi), "difference": word_difference(w0, w1)}
    _emit(args, payload, f"min {lo}\nmax {hi}")
    return EXIT_OK


# fock

def _cmd_fock(args) -> int:
    if args.action == "apply":
        out = parse_spec(args.spec)(fk.parse_element(args.element))
        _emit(args, out.to_json(), str(out))
        return EXIT_OK
    u, v = fk.parse_element(args.spec), fk.parse_element(args.element)
    val = fk.pairing(u, v) if args.action == "pairing" else fk.dot(u, v)
    _emit(args, {args.action: val}, str(val))
    return EXIT_OK


# duality

_DUALITY_OPS = {"H": du.H_apply, "Hinv": du.H_inv, "Q+": du.Q_plus, "Q-": du.Q_minus,
                "Q+inv": du.Q_plus_inv, "Q-inv": du.Q_minus_inv}


def _cmd_duality(args) -> int:
    if args.action == "period":
        if len(args.args) != 2:
            raise UsageError("duality period takes n_x n_y")
        n_x, n_y = (int(a) for a in args.args)
        if n_x < 0 or n_y < 0:
            raise UsageError("degrees must be non-negative")
        r = du.H_period(n_x, n_y)
        n = n_x + n_y
        payload = {"grading": [n_x, n_y], "n_plus_1": n + 1, "sign": r.sign_at_n_plus_1,
                   "scalar": r.scalar, "order": r.order}
        value = str(r.sign_at_n_plus_1) if r.scalar else "not scalar"
        _emit(args, payload, f"H^{n + 1} = {value}, order {r.order}")
        return EXIT_OK if r.scalar else EXIT_FAIL
    if len(args.args) != 1:
        raise UsageError(f"duality {args.action} takes one element")
    e = fk.parse_element(args.args[0])
    out = e
    for _ in range(args.power):
        out = _DUALITY_OPS[args.action](out)
    _emit(args, out.to_json(), str(out))
    return EXIT_OK


# diagram

def _cmd_diagram(args) -> int:
    if args.action == "enumerate":
        m = int(args.items[0]) if args.items else 2
        ds = dg.enumerate_diagrams(m)
        payload = [{"diagram": d.to_json(), "grading": list(d.grading),
                    "element": dg.decompose(d).to_json()} for d in ds]
        lines = [f"{d}  e={d.euler_class()}  {dg.decompose(d)}" for d in ds]
        _emit(args, payload, "\n".join(lines))
        return EXIT_OK
    if not args.items:
        raise UsageError(f"diagram {args.action} needs a diagram")
    # one diagram may arrive as several argv items, e.g. an unquoted chord list
    d = parse_diagram(args.items[0] if args.action == "stack" else " ".join(args.items))
    if args.action == "decompose":
        c = dg.decompose(d)
        _emit(args, {"diagram": d.to_json(), "element": c.to_json()}, str(c))
        return EXIT_OK
    if args.action == "stack":
        if len(args.items) != 2:
            raise UsageError("diagram stack takes two diagrams")
        d1 = parse_diagram(args.items[1])
        ok = dg.stack(d, d1)
        _emit(args, {"connected": ok, "pairing": fk.pairing(dg.decompose(d), dg.decompose(d1))},
              "connected" if ok else "disconnected")
        return EXIT_OK
    if args.action == "render":
        out = render(d, args.format)
        if args.out:
            Path(args.out).write_text(out)
            _emit(args, {"written": args.out, "format": args.format}, f"wrote {args.out}")
        else:
            sys.stdout.write(out)
        return EXIT_OK
    arcs = dg.bypass_arcs(d, args.direction)
    rows, lines = [], []
    for arc in arcs:
        res = dg.bypass_surgery(d, arc)
        rows.append({"arc": arc.to_json(), "result": res.to_json()})
        lines.append(f"{arc.c1} {arc.c2} {arc.c3} -> {res}")
    _emit(args, rows, "\n".join(lines) or "no bypass arcs")
    return EXIT_OK


# suture

def _cmd_suture(args) -> int:
    if args.action == "generate":
        n = int(args.items[0]) if args.items else 2
        res = su.generate_C(n, args.family)
        by = res.by_grading()
        payload = {"family": args.family, "n": n, "size": len(res.elements),
                   "by_grading": {f"{g[0]},{g[1]}": len(v) for g, v in sorted(by.items())},
                   "elements": sorted((e.to_json() for e in res.elements), key=json.dumps)}
        lines = [f"{args.family} n<={n}: {len(res.elements)} elements"]
        lines += [f"  grading {g}: {len(v)}" for g, v in sorted(by.items())]
        _emit(args, payload, "\n".join(lines))
        return EXIT_OK
    if args.action == "check":
        if len(args.items) != 1:
            raise UsageError("suture check takes one element")
        e = fk.parse_element(args.items[0])
        ok = su.is_suture_element(e)
        _emit(args, {"element": e.to_json(), "suture_element": ok}, "yes" if ok else "no")
        return EXIT_OK if ok else EXIT_FAIL
    if len(args.items) != 2:
        raise UsageError("suture chain takes two elements")
    u, v = (fk.parse_element(t) for t in args.items)
    chain = su.connecting_chain(u, v)
    _emit(args, [c.to_json() for c in chain], "\n".join(str(c) for c in chain))
    return EXIT_OK


# verify and fullrank

def _cmd_verify(args) -> int:
    report = run_suite(args.suite, args.max_n, args.seed, args.jobs)
    _emit(args, report.to_json(timing=args.timing), report.to_text())
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_fullrank(args) -> int:
    p = construct_full_rank_pairing(args.n)
    ok = p.rank == p.size and p.zero_pattern_matches_stack()
    lines = [" ".join(f"{v:2d}" for v in row) for row in p.matrix]
    lines.append(f"size {p.size}, rank {p.rank}")
    _emit(args, p.to_json(), "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    parser = argparse.ArgumentParser(prog="focksuture", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("word", parents=[common], help="profiles, order and min/max of words")
    p.add_argument("action", choices=("profile", "leq", "minmax"))
    p.add_argument("words", nargs="+")
    p.set_defaults(func=_cmd_word)

    p = sub.add_parser("fock", parents=[common], help="operators and bilinear forms")
    p.add_argument("action", choices=("apply", "pairing", "dot"))
    p.add_argument("spec", help="operator string for apply, else the first element")
    p.add_argument("element")
    p.set_defaults(func=_cmd_fock)

    p = sub.add_parser("duality", parents=[common], help="H, Q+-, and the period of H")
    p.add_argument("action", choices=("period",) + tuple(_DUALITY_OPS))
    p.add_argument("args", nargs="+")
    p.add_argument("--power", type=int, default=1)
    p.set_defaults(func=_cmd_duality)

    p = sub.add_parser("diagram", parents=[common], help="chord diagrams")
    p.add_argument("action", choices=("enumerate", "decompose", "stack", "render", "bypass"))
    p.add_argument("items", nargs="*")
    p.add_argument("--format", choices=FORMATS, default="ascii")
    p.add_argument("--out")
    p.add_argument("--direction", choices=("up", "down"), default="up")
    p.set_defaults(func=_cmd_diagram)

    p = sub.add_parser("suture", parents=[common], help="suture elements")
    p.add_argument("action", choices=("generate", "check", "chain"))
    p.add_argument("items", nargs="*")
    p.add_argument("--family", choices=su.FAMILIES, default="C2")
    p.set_defaults(func=_cmd_suture)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("suite", nargs="?", default="all", help="all, " + ", ".join(suites()))
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="include wall times in JSON")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("fullrank", parents=[common], help="full-rank signed pairing on n-chord diagrams")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_fullrank)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, WordError, SpecError, dg.DiagramError, su.SutureError,
            fk.OperatorIndexError, KeyError, ValueError, json.JSONDecodeError) as exc:
        print(f"focksuture: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
