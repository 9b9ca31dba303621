"""Bar-complex cross-check of Ext over the whole corpus (members within the
oracle's size cap), writing one JSON report per monoid and prime.

    python scripts/bar_oracle_sweep.py --primes 2,3,101 --max-n 2 --out oracle.json
"""
import argparse
import json
import time

from lrbhom.bar import MAX_COCHAIN_DIM, oracle_sweep
from lrbhom.corpus import corpus


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--primes", default="2,101")
    ap.add_argument("--max-n", type=int, default=2)
    ap.add_argument("--out")
    args = ap.parse_args()
    reports = []
    for B in corpus():
        if (B.size - 1) ** (args.max_n + 1) > MAX_COCHAIN_DIM:
            print(f"{B.name:24s} skipped ({B.size} elements)")
            continue
        for p in map(int, args.primes.split(",")):
            t = time.time()
            rep = oracle_sweep(B, args.max_n, p)
            rep["seconds"] = round(time.time() - t, 2)
            reports.append(rep)
            print(f"{B.name:24s} p={p:<4d} pairs={rep['pairs']:<4d} "
                  f"discrepancies={len(rep['discrepancies'])}  {rep['seconds']}s", flush=True)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(reports, fh, indent=2, sort_keys=True)


if __name__ == "__main__":
    main()
