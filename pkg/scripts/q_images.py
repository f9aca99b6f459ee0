"""Compare the images of the suture set under Q+, Q-, and their inverses, grading by grading.

Usage: python3 scripts/q_images.py [max_n]
"""

from __future__ import annotations

import sys

from focksuture import duality as du
from focksuture.sutures import suture_set
from focksuture.words import gradings


def main() -> None:
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    for k in range(n + 1):
        for g in gradings(k):
            c = suture_set(*g)
            fwd = {du.Q_plus(e) for e in c} == {du.Q_minus(e) for e in c}
            inv = {du.Q_plus_inv(e) for e in c} == {du.Q_minus_inv(e) for e in c}
            closed = {du.H_apply(e) for e in c} == set(c)
            print(f"{g}: |C|={len(c):4d}  Q+C=Q-C {fwd!s:5}  Q+^-1C=Q-^-1C {inv!s:5}  HC=C {closed}")


if __name__ == "__main__":
    main()
