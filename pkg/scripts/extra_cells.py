"""
Instrument Monk's algorithm: for every critical cell, record which numbers r
of extra cells were accepted relative to s, the count of diagram cells on or
above the next bullet.  The loop tries r = 0, ..., s + 1.
"""

import argparse
from collections import Counter

from tower_schubert.monk import _next_bullet, candidates_at, critical_cells, schubert_path
from tower_schubert.permcore import all_perms
from tower_schubert.towerdiag import diagram_of_perm


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=[5, 6])
    args = ap.parse_args()

    for n in args.n:
        offsets = Counter()
        products = 0
        for w in all_perms(n):
            T = diagram_of_perm(w)
            for k in range(1, n + 1):
                P = schubert_path(T, k)
                for c in critical_cells(P, T):
                    d = _next_bullet(T, P.cells, P.cells.index(c))
                    s = T.height(d.col) - d.row - 1 if d.row >= 0 else T.height(d.col)
                    for p in candidates_at(T, k, c, check=False):
                        products += 1
                        offsets[p.extra - s] += 1
        print(f"S_{n}: {products} products; accepted r - s histogram {dict(sorted(offsets.items()))}; "
              f"r = s + 1 accepted {offsets[1]} times")


if __name__ == "__main__":
    main()
