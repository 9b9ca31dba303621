"""Invariants of every corpus monoid over several fields, as a table or JSON.

    python scripts/corpus_invariants.py --fields Q,F2,F3 [--json out.json]
"""
import argparse
import json

from lrbhom.corpus import corpus
from lrbhom.invariants import context, global_dimension, quiver, relation_counts
from lrbhom.order import is_geometric, is_right_hereditary
from lrbhom.topology import Field


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--fields", default="Q,F2,F3")
    ap.add_argument("--json")
    args = ap.parse_args()
    fields = [Field.parse(f) for f in args.fields.split(",")]
    rows = []
    for B in corpus():
        ctx = context(B)
        row = {"monoid": B.name, "size": B.size, "lattice": len(ctx.L),
               "chain": ctx.L.longest_chain(), "geometric": is_geometric(B),
               "right_hereditary": is_right_hereditary(B)}
        for f in fields:
            row[f"gldim_{f}"] = global_dimension(B, f)
            row[f"arrows_{f}"] = quiver(B, f).total_arrows()
            row[f"relations_{f}"] = int(relation_counts(B, f).sum())
        rows.append(row)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2)
    keys = list(rows[0])
    widths = [max(len(k), *(len(str(r[k])) for r in rows)) for k in keys]
    print("  ".join(k.ljust(w) for k, w in zip(keys, widths)))
    for r in rows:
        print("  ".join(str(r[k]).ljust(w) for k, w in zip(keys, widths)))


if __name__ == "__main__":
    main()
