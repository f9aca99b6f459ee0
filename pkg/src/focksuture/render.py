"""Deterministic ASCII and SVG drawings of chord diagrams."""

from __future__ import annotations

import math

from .diagrams import ChordDiagram

FORMATS = ("ascii", "svg")


def render(d: ChordDiagram, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return render_ascii(d)
    if fmt == "svg":
        return render_svg(d)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def _depths(d: ChordDiagram) -> dict[tuple[int, int], int]:
    depth: dict[tuple[int, int], int] = {}
    for a, b in sorted(d.chords(), key=lambda c: c[1] - c[0]):
        inner = [depth[c] for c in depth if a < c[0] and c[1] < b]
        depth[(a, b)] = 1 + max(inner, default=0)
    return depth


def render_ascii(d: ChordDiagram) -> str:
    """Chords as nested arches over the points laid out left to right.

    The basepoint carries a star; the bottom row gives the sign of the
    boundary arc leaving each point.
    """
    depth = _depths(d)
    width = 4 * d.size
    top = max(depth.values())
    rows = [[" "] * width for _ in range(top)]
    col = lambda k: 4 * k + 1
    for (a, b), h in depth.items():
        r = top - h
        rows[r][col(a)] = "."
        rows[r][col(b)] = "."
        for c in range(col(a) + 1, col(b)):
            rows[r][c] = "-"
        for rr in range(r + 1, top):
            rows[rr][col(a)] = "|"
            rows[rr][col(b)] = "|"
    labels = [" "] * width
    signs = [" "] * width
    for k in range(d.size):
        text = f"{k}*" if k == 0 else str(k)
        for j, ch in enumerate(text):
            labels[col(k) + j] = ch
        signs[col(k)] = "+" if k % 2 == 0 else "-"
    lines = ["".join(r).rstrip() for r in rows]
    lines.append("".join(labels).rstrip())
    lines.append("".join(signs).rstrip())
    return "\n".join(lines) + "\n"


def _point(k: int, size: int, cx: float, cy: float, r: float) -> tuple[float, float]:
    theta = -math.pi / 2 + 2 * math.pi * k / size
    return cx + r * math.cos(theta), cy + r * math.sin(theta)


def _chord_path(a: int, b: int, size: int, cx: float, cy: float, r: float) -> str:
    """Path command from point a to point b along a circle orthogonal to the boundary."""
    x2, y2 = _point(b, size, cx, cy, r)
    span = (b - a) % size
    if span * 2 == size:
        return f"L {x2:.3f} {y2:.3f}"
    half = math.pi * span / size
    rad = r * abs(math.tan(half))
    x1, y1 = _point(a, size, cx, cy, r)
    mid = -math.pi / 2 + 2 * math.pi * (a + span / 2) / size
    dist = r / math.cos(half)
    ox, oy = cx + dist * math.cos(mid), cy + dist * math.sin(mid)
    cross = (x1 - ox) * (y2 - oy) - (y1 - oy) * (x2 - ox)
    sweep = 1 if cross > 0 else 0
    return f"A {rad:.3f} {rad:.3f} 0 0 {sweep} {x2:.3f} {y2:.3f}"


def render_svg(d: ChordDiagram, size_px: int = 240) -> str:
    """SVG with positive regions shaded, chords as circular arcs and the basepoint marked."""
    cx = cy = size_px / 2
    r = size_px / 2 - 24
    n = d.size
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size_px}" height="{size_px}" '
        f'viewBox="0 0 {size_px} {size_px}">',
        f'<circle cx="{cx}" cy="{cy}" r="{r}" fill="white" stroke="none"/>',
    ]
    for region in d.regions():
        if region[0] % 2:
            continue
        start = region[0]
        x0, y0 = _point(start, n, cx, cy, r)
        cmds = [f"M {x0:.3f} {y0:.3f}"]
        k = start
        while True:
            x1, y1 = _point(k + 1, n, cx, cy, r)
            cmds.append(f"A {r:.3f} {r:.3f} 0 0 1 {x1:.3f} {y1:.3f}")
            nxt = d.match[(k + 1) % n]
            cmds.append(_chord_path((k + 1) % n, nxt, n, cx, cy, r))
            k = nxt
            if k == start:
                break
        cmds.append("Z")
        parts.append(f'<path class="positive" d="{" ".join(cmds)}" fill="#c8c8c8" stroke="none"/>')
    parts.append(f'<circle cx="{cx}" cy="{cy}" r="{r}" fill="none" stroke="black" stroke-width="1.5"/>')
    for a, b in d.chords():
        x1, y1 = _point(a, n, cx, cy, r)
        parts.append(f'<path class="chord" d="M {x1:.3f} {y1:.3f} {_chord_path(a, b, n, cx, cy, r)}" '
                     f'fill="none" stroke="red" stroke-width="2"/>')
    for k in range(n):
        x, y = _point(k, n, cx, cy, r)
        lx, ly = _point(k, n, cx, cy, r + 12)
        parts.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="{4 if k == 0 else 2}" fill="black"/>')
        parts.append(f'<text x="{lx:.3f}" y="{ly:.3f}" font-size="10" text-anchor="middle" '
                     f'dominant-baseline="middle">{k}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
