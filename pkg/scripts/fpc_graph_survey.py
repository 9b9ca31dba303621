"""Global dimension of B(G) against the Leray number of Cliq(G) and
chordality, for every labelled graph on up to N vertices.

    python scripts/fpc_graph_survey.py --max-n 4
"""
import argparse
import collections
import itertools
import time

from lrbhom.invariants import global_dimension
from lrbhom.monoid import Graph, fpc_lrb
from lrbhom.topology import clique_complex, is_chordal, leray_number


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=4)
    args = ap.parse_args()
    tally = collections.Counter()
    mismatches = []
    t = time.time()
    for n in range(1, args.max_n + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            G = Graph.from_edges(n, [e for i, e in enumerate(pairs) if mask >> i & 1])
            g = global_dimension(fpc_lrb(G))
            lr = leray_number(clique_complex(G))
            chordal = is_chordal(G)
            tally[(n, g, chordal)] += 1
            if g != lr or (g <= 1) != chordal:
                mismatches.append((n, G.sorted_edges(), g, lr, chordal))
    for (n, g, chordal), c in sorted(tally.items()):
        print(f"n={n} gl.dim={g} chordal={chordal}: {c} graphs")
    print(f"mismatches: {len(mismatches)}  ({time.time() - t:.1f}s)")
    for m in mismatches[:10]:
        print("  ", m)


if __name__ == "__main__":
    main()
