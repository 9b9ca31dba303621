"""The desk corpus: small LRBs used by the test suites and scripts."""
from __future__ import annotations

from . import io
from .monoid import LRB, free_word_product, validate_lrb


def left_zero_with_identity(k: int) -> LRB:
    """{1, x_1..x_k} with x_i x_j = x_i: right hereditary, not free for k >= 3."""
    labels = ["1"] + [f"x{i}" for i in range(1, k + 1)]
    table = [[j for j in range(k + 1)]] + [[i] * (k + 1) for i in range(1, k + 1)]
    B = validate_lrb(labels, table, 0, f"leftzero-{k}")
    return io.with_source(B, {"kind": "table"})


def free_with_zero(n: int = 2) -> LRB:
    """F_n with an absorbing element adjoined. Two generators sit above the
    zero and do not commute, so this is not geometric."""
    F = io.free_monoid(n)
    m = F.size
    labels = list(F.labels) + ["0"]
    table = [list(map(int, row)) + [m] for row in F.table] + [[m] * (m + 1)]
    B = validate_lrb(labels, table, F.identity, f"free-{n}+zero")
    return io.with_source(B, {"kind": "table"})


def word_closure(words, name: str = "words") -> LRB:
    """Submonoid of a free LRB generated by the given words."""
    gens = [tuple(w) for w in words]
    seen = {(): None}
    frontier = [()]
    while frontier:
        nxt = []
        for u in frontier:
            for g in gens:
                v = free_word_product(u, g)
                if v not in seen:
                    seen[v] = None
                    nxt.append(v)
        frontier = nxt
    elems = sorted(seen, key=lambda w: (len(w), w))
    pos = {e: i for i, e in enumerate(elems)}
    table = [[pos[free_word_product(a, b)] for b in elems] for a in elems]
    B = validate_lrb(["".join(w) or "1" for w in elems], table, 0, name, {"words": tuple(elems)})
    return io.with_source(B, {"kind": "table"})


GEOMETRIC_NAMES = ("free-0", "free-1", "free-2", "free-3", "signs-1", "fig2-three-lines",
                   "boolean-2", "boolean-3", "braid-3", "path-3", "cycle-4", "complete-3",
                   "complete-4", "cycle-5", "empty-3")


def corpus() -> list[LRB]:
    """Every monoid the suites sweep over, builtins first."""
    out = [io.builtin_monoid(name) for name in GEOMETRIC_NAMES]
    out.append(io.signs_monoid(["+0-", "0++", "-+0"], name="signs-mixed"))
    out.append(io.signs_monoid(["++", "+-", "-0"], name="signs-pair"))
    out.append(left_zero_with_identity(3))
    out.append(free_with_zero(2))
    out.append(word_closure(["ab", "c", "ba"], name="words-ab-c-ba"))
    return out
