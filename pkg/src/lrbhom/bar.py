"""Ext between simple kB-modules straight from the normalized bar complex.

No simplicial input: cochains are functions on tuples of non-identity
elements, and the differential only uses the multiplication table and the
characters lambda_Z(b) = [s(b) >= Z]. This is the independent check on the
order-complex formula in :mod:`lrbhom.invariants`.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import sympy

from .invariants import context, ext_dimension
from .linalg import ModPRowSpace
from .monoid import LRB, CapExceeded
from .topology import Field

# (|B|-1)^(n+1) bounds the row count of the largest differential
MAX_COCHAIN_DIM = 60000
DEFAULT_P = 101


@dataclass(frozen=True, eq=False)
class ActionSpec:
    """The one-dimensional module k_Z: b acts by 1 if s(b) >= Z, else by 0."""
    monoid: LRB
    target: int
    lam: np.ndarray

    @classmethod
    def of(cls, B: LRB, Z: int) -> "ActionSpec":
        ctx = context(B)
        lam = np.array([int(ctx.L.leq[Z, ctx.L.class_of[b]]) for b in range(B.size)],
                       dtype=np.int64)
        spec = cls(B, Z, lam)
        spec.check()
        return spec

    def check(self) -> None:
        B = self.monoid
        if self.lam[B.identity] != 1:
            raise RuntimeError("identity must act as 1")
        prod = self.lam[B.table]
        if not np.array_equal(prod, np.outer(self.lam, self.lam)):
            raise RuntimeError("lambda is not multiplicative")


class BarComplex:
    """Normalized bar cochains C^n = functions on (B - {1})^n with values mod p."""

    def __init__(self, B: LRB, X: int, Y: int, p: int = DEFAULT_P):
        if not sympy.isprime(p):
            raise ValueError(f"{p} is not prime")
        self.B, self.p = B, p
        self.nonid = np.array([b for b in range(B.size) if b != B.identity], dtype=np.int64)
        self.m = len(self.nonid)
        pos = np.full(B.size, -1, dtype=np.int64)
        pos[self.nonid] = np.arange(self.m)
        self.pos = pos
        self.lam_x = ActionSpec.of(B, X).lam
        self.lam_y = ActionSpec.of(B, Y).lam
        # products of non-identity idempotents never give the identity
        prod = B.table[np.ix_(self.nonid, self.nonid)]
        if (prod == B.identity).any():
            raise RuntimeError("two non-identity elements multiply to the identity")

    def dim(self, n: int) -> int:
        return self.m ** n

    def _tuples(self, n: int, start: int, stop: int) -> np.ndarray:
        """Positions (into nonid) of the tuples with flat index start..stop-1."""
        idx = np.arange(start, stop, dtype=np.int64)
        out = np.empty((len(idx), n), dtype=np.int64)
        for k in range(n - 1, -1, -1):
            out[:, k] = idx % self.m
            idx //= self.m
        return out

    def _flat(self, tup: np.ndarray) -> np.ndarray:
        idx = np.zeros(tup.shape[0], dtype=np.int64)
        for k in range(tup.shape[1]):
            idx = idx * self.m + tup[:, k]
        return idx

    def differential_block(self, n: int, start: int, stop: int) -> np.ndarray:
        """Rows start..stop-1 of delta^n : C^n -> C^(n+1) as a dense int array.

            (df)(b1..b_{n+1}) = lam_Y(b1) f(b2..) + sum_i (-1)^i f(.., b_i b_{i+1}, ..)
                                + (-1)^(n+1) lam_X(b_{n+1}) f(b1..b_n)
        """
        t = self._tuples(n + 1, start, stop)
        rows = np.arange(stop - start)
        out = np.zeros((stop - start, self.dim(n)), dtype=np.int64)
        elems = self.nonid[t]
        np.add.at(out, (rows, self._flat(t[:, 1:])), self.lam_y[elems[:, 0]])
        for i in range(1, n + 1):
            merged = self.pos[self.B.table[elems[:, i - 1], elems[:, i]]]
            tup = np.concatenate([t[:, :i - 1], merged[:, None], t[:, i + 1:]], axis=1)
            np.add.at(out, (rows, self._flat(tup)), (-1) ** i)
        np.add.at(out, (rows, self._flat(t[:, :n])), (-1) ** (n + 1) * self.lam_x[elems[:, n]])
        return out

    def _blocks(self, n: int, chunk: int):
        total = self.dim(n + 1)
        for start in range(0, total, chunk):
            yield self.differential_block(n, start, min(total, start + chunk))

    def rank(self, n: int, bound: int | None = None, chunk: int = 1024) -> int:
        """Rank of delta^n, stopping early once ``bound`` is reached.

        The image of delta^(n-1) lies in the kernel of delta^n, so
        dim C^n - rank delta^(n-1) is always a valid bound.
        """
        if self.dim(n + 1) > MAX_COCHAIN_DIM:
            raise CapExceeded(f"bar complex: C^{n + 1} has dimension {self.dim(n + 1)}")
        bound = self.dim(n) if bound is None else bound
        space = ModPRowSpace(self.dim(n), self.p)
        for block in self._blocks(n, chunk):
            if space.rank >= bound:
                break
            space.add_rows(block)
        if space.rank > bound:
            raise RuntimeError(f"rank of delta^{n} exceeds dim C^{n} - rank delta^{n - 1}")
        return space.rank

    def check_square_zero(self, n: int, chunk: int = 2048) -> None:
        """delta^n o delta^(n-1) == 0 mod p; raises otherwise."""
        if n < 1:
            return
        prev = np.concatenate(list(self._blocks(n - 1, chunk)), axis=0)   # C^(n-1) -> C^n
        prev_f = prev.astype(np.float64)
        for block in self._blocks(n, chunk):
            comp = np.rint(block.astype(np.float64) @ prev_f).astype(np.int64) % self.p
            if comp.any():
                raise RuntimeError(f"delta^{n} o delta^{n - 1} != 0")


def bar_ext_dims(B: LRB, X: int, Y: int, max_n: int, p: int = DEFAULT_P,
                 check: bool = True) -> list[int]:
    """dim Ext^n(k_X, k_Y) over F_p for n = 0..max_n."""
    ctx = context(B)
    ctx.check_index(X, Y)
    if B.size == 1:
        return [1] + [0] * max_n
    bc = BarComplex(B, X, Y, p)
    ranks = {-1: 0}
    for n in range(max_n + 1):
        if check:
            bc.check_square_zero(n)
        ranks[n] = bc.rank(n, bound=bc.dim(n) - ranks[n - 1])
    return [bc.dim(n) - ranks[n] - ranks[n - 1] for n in range(max_n + 1)]


def bar_ext(B: LRB, X: int, Y: int, n: int, p: int = DEFAULT_P) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    return bar_ext_dims(B, X, Y, n, p)[n]


def oracle_sweep(B: LRB, max_n: int = 2, p: int = DEFAULT_P, check: bool = True) -> dict:
    """Compare the bar complex with the order-complex formula for every pair
    of simples and every n <= max_n, both over F_p."""
    ctx = context(B)
    field = Field(p)
    k = len(ctx.L)
    rows, bad = [], []
    for X in range(k):
        for Y in range(k):
            dims = bar_ext_dims(B, X, Y, max_n, p, check=check)
            for n, d in enumerate(dims):
                formula = ext_dimension(B, X, Y, n, field)
                if d:
                    rows.append({"X": X, "Y": Y, "n": n, "dim": d})
                if d != formula:
                    bad.append({"X": X, "Y": Y, "n": n, "bar": d, "formula": formula})
    return {"monoid": B.name, "size": B.size, "p": p, "max_n": max_n,
            "pairs": k * k, "nonzero": rows, "discrepancies": bad}
