"""Search the stacking and rotation conventions that make diagrams agree with the algebra.

Usage: python3 scripts/calibrate_conventions.py [max_n]
"""

from __future__ import annotations

import sys

import numpy as np

from focksuture import diagrams as dg
from focksuture import duality as du
from focksuture.words import gradings


def rotation_agrees(step: int, max_m: int) -> bool:
    saved = dg.ROTATION_STEP
    dg.ROTATION_STEP = step
    try:
        for m in range(1, max_m + 1):
            for g in gradings(m - 1):
                for d in dg.diagrams_by_grading(m).get(g, ()):
                    if dg.decompose(dg.rotate(d)) not in (du.H_apply(dg.decompose(d)),
                                                          -du.H_apply(dg.decompose(d))):
                        return False
                if not np.array_equal(dg.rotation_matrix(*g), du.H_matrix(*g)):
                    return False
    except AssertionError:
        return False
    finally:
        dg.ROTATION_STEP = saved
    return True


def main() -> None:
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    print("stack conventions with connected <=> w0 <= w1:")
    for conv in dg.calibrate_stack(n):
        print(f"  reflect={conv.reflect} shift={conv.shift}")
    print("rotation steps that realise H up to sign and as a matrix:")
    for step in (2, -2):
        print(f"  step {step:+d}: {rotation_agrees(step, n + 1)}")


if __name__ == "__main__":
    main()
