"""
List labelled diagrams whose labelled cells no longer carry their ``a`` as
flight number, and show that every such chain repeats both an ``a`` and a ``b``.
"""

import argparse

from tower_schubert.permcore import all_perms
from tower_schubert.pieri import iterated_monk
from tower_schubert.towerdiag import diagram_of_perm, flight_number, format_diagram


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=5)
    ap.add_argument("--max-m", type=int, default=3)
    ap.add_argument("--show", type=int, default=5, help="print this many examples")
    args = ap.parse_args()

    total = drift = sottile_drift = 0
    examples = []
    for w in all_perms(args.n):
        T = diagram_of_perm(w)
        for k in range(1, args.n):
            for m in range(1, args.max_m + 1):
                for L in iterated_monk(T, k, m):
                    total += 1
                    fns = [flight_number(L.diagram, lab.cell) for lab in L.labels]
                    if fns == [lab.a for lab in L.labels]:
                        continue
                    drift += 1
                    a, b = [lab.a for lab in L.labels], [lab.b for lab in L.labels]
                    if len(set(a)) == len(a) or len(set(b)) == len(b):
                        sottile_drift += 1
                    if len(examples) < args.show:
                        examples.append((w, k, L, fns))
    print(f"{total} labelled diagrams, {drift} with drifted flight numbers, {sottile_drift} of them Sottile chains")
    for w, k, L, fns in examples:
        chain = " ".join(f"({lab.a},{lab.b})@({lab.cell.col},{lab.cell.row})" for lab in L.labels)
        print(f"  w={w} k={k} {format_diagram(L.diagram)} {chain} flight numbers {fns}")


if __name__ == "__main__":
    main()
