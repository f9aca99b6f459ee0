"""Print the signs picked up by H along the pawn cycle, next to (-1)^|E^x|.

Usage: python3 scripts/pawn_signs.py [max_n]
"""

from __future__ import annotations

import sys

from focksuture import duality as du
from focksuture.verify import pawn_orbit
from focksuture.words import gradings


def observed_sign(a, b) -> int | None:
    ha = du.H_apply(a)
    if ha == b:
        return 1
    if ha == -b:
        return -1
    return None


def main() -> None:
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    for k in range(1, n + 1):
        for g in gradings(k):
            cyc = du.pawn_cycle(*g)
            orbit = pawn_orbit(*g)
            obs = [observed_sign(orbit[i], orbit[(i + 1) % (k + 1)]) for i in range(k + 1)]
            pred = [(-1) ** len(du.exceptional_set(cyc[i + 1], "x").indices) for i in range(k)] + [1]
            flag = "ok" if obs == pred else "MISMATCH"
            print(f"{g}: observed {obs} predicted {pred} {flag}")


if __name__ == "__main__":
    main()
