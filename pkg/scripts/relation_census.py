"""Census of violations of the tabulated operator relations on words up to a given length.

Usage: python3 scripts/relation_census.py [max_n]
"""

from __future__ import annotations

import sys
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from test_acceptance import _relation_table_failures, _tl_failures  # noqa: E402

from focksuture.words import parse_word  # noqa: E402
from focksuture.verify import inter_species_class  # noqa: E402


def main() -> None:
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 7
    tl = _tl_failures(n)
    print(f"Temperley-Lieb violations up to n={n}: {len(tl)}")
    fails = _relation_table_failures(n)
    kinds = Counter()
    for f in fails:
        if f[0] == "inter":
            w = parse_word(f[2])
            kinds[("inter", f[1], inter_species_class(w, f[3], f[4]))] += 1
        else:
            kinds[(f[0], f[1] or "vacuum", f[2], f[3], f[4])] += 1
    print(f"relation table violations up to n={n}: {len(fails)}")
    for k, v in sorted(kinds.items(), key=str):
        print(f"  {v:5d}  {k}")
    for f in fails[:3] + [f for f in fails if f[0] == "inter"][:3]:
        print("  e.g.", f)


if __name__ == "__main__":
    main()
