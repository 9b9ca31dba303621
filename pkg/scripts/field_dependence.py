"""Look for characteristic dependence of the global dimension: random sign
closures and word closures, compared over Q, F2, F3 and F5.

    python scripts/field_dependence.py --samples 200 --seed 0
"""
import argparse
import random

from lrbhom.corpus import word_closure
from lrbhom.invariants import global_dimension
from lrbhom.monoid import CapExceeded, sign_closure
from lrbhom.topology import Field

FIELDS = [Field(), Field(2), Field(3), Field(5)]


def random_monoid(rng):
    if rng.random() < 0.5:
        n = rng.randint(2, 5)
        gens = ["".join(rng.choice("0+-") for _ in range(n)) for _ in range(rng.randint(2, 5))]
        return sign_closure(gens, name="signs:" + ",".join(gens))
    letters = "abcd"
    gens = ["".join(dict.fromkeys(rng.choices(letters, k=rng.randint(1, 3))))
            for _ in range(rng.randint(2, 4))]
    return word_closure(gens, name="words:" + ",".join(gens))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    differ = 0
    for _ in range(args.samples):
        try:
            B = random_monoid(rng)
        except CapExceeded:
            continue
        dims = [global_dimension(B, f) for f in FIELDS]
        if len(set(dims)) > 1:
            differ += 1
            print(B.name, B.size, dict(zip(map(str, FIELDS), dims)))
    print(f"{args.samples} samples, {differ} with field-dependent global dimension")


if __name__ == "__main__":
    main()
