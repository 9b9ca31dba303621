"""Exact linear algebra: ranks over Q and F_p, rational row reduction.

Sparse rows are ``dict[int, int]`` mapping column to a nonzero integer entry.
Nothing here uses floating point to decide a rank; the float64 matmul in
:class:`ModPRowSpace` is only used where every partial sum is an integer
below 2**53.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

import numpy as np


def _content(row: dict[int, int]) -> int:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    return g


def rank_rational(rows: Iterable[dict[int, int]]) -> int:
    """Rank over Q of an integer matrix given as sparse rows.

    Incremental fraction-free echelon form: a row meeting an existing pivot
    is replaced by ``b*row - a*pivot_row`` and divided by its content, so all
    arithmetic stays in the integers.
    """
    pivots: dict[int, dict[int, int]] = {}
    for raw in rows:
        row = {c: v for c, v in raw.items() if v}
        while row:
            lead = min(row)
            prow = pivots.get(lead)
            if prow is None:
                g = _content(row)
                if row[lead] < 0:
                    g = -g
                if g != 1:
                    row = {c: v // g for c, v in row.items()}
                pivots[lead] = row
                break
            a, b = row[lead], prow[lead]
            g = gcd(a, b)
            a //= g
            b //= g
            new = {c: v * b for c, v in row.items()}
            for c, v in prow.items():
                nv = new.get(c, 0) - a * v
                if nv:
                    new[c] = nv
                else:
                    new.pop(c, None)
            g = _content(new) if new else 1
            if g > 1:
                new = {c: v // g for c, v in new.items()}
            row = new
    return len(pivots)


def rank_mod_p(rows: Iterable[dict[int, int]], p: int) -> int:
    """Rank over F_p of sparse integer rows (incremental echelon form)."""
    pivots: dict[int, dict[int, int]] = {}
    for raw in rows:
        row = {c: v % p for c, v in raw.items() if v % p}
        while row:
            lead = min(row)
            prow = pivots.get(lead)
            if prow is None:
                inv = pow(row[lead], -1, p)
                pivots[lead] = {c: (v * inv) % p for c, v in row.items()}
                break
            a = row[lead]
            for c, v in prow.items():
                nv = (row.get(c, 0) - a * v) % p
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return len(pivots)


def bareiss_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank of a dense integer matrix by Bareiss fraction-free elimination."""
    a = [list(map(int, r)) for r in matrix]
    m = len(a)
    if m == 0:
        return 0
    n = len(a[0])
    rank = 0
    prev = 1
    for col in range(n):
        piv = next((i for i in range(rank, m) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pv = a[rank][col]
        for i in range(rank + 1, m):
            aic = a[i][col]
            row_i, row_r = a[i], a[rank]
            for j in range(col + 1, n):
                # exact division is the Bareiss invariant
                row_i[j] = (pv * row_i[j] - aic * row_r[j]) // prev
            row_i[col] = 0
        prev = pv
        rank += 1
        if rank == m:
            break
    return rank


def rank_dense_mod_p(matrix: np.ndarray, p: int) -> int:
    """Rank over F_p of a dense integer array."""
    space = ModPRowSpace(matrix.shape[1], p)
    space.add_rows(matrix)
    return space.rank


class ModPRowSpace:
    """Row space over F_p kept in reduced row echelon form.

    Rows are fed in blocks; each block is first reduced against the current
    basis with one matrix product, then eliminated locally. Suited to tall
    matrices of modest width (the bar-complex differentials).
    """

    def __init__(self, ncols: int, p: int):
        self.ncols = ncols
        self.p = p
        self.basis = np.zeros((0, ncols), dtype=np.int64)
        self.pivots: list[int] = []
        # exact float64 products need every dot product below 2**53
        self._float_ok = (p - 1) ** 2 * max(ncols, 1) < 2**53
        if not self._float_ok and (p - 1) ** 2 * max(ncols, 1) >= 2**62:
            raise ValueError(f"prime {p} too large for width {ncols}")

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self._float_ok:
            out = a.astype(np.float64) @ b.astype(np.float64)
            return np.rint(out).astype(np.int64)
        return a @ b

    def add_rows(self, block: np.ndarray, chunk: int = 384) -> None:
        block = np.asarray(block, dtype=np.int64)
        for start in range(0, block.shape[0], chunk):
            if self.rank == self.ncols:
                return
            self._add_block(block[start:start + chunk] % self.p)

    def _add_block(self, m: np.ndarray) -> None:
        p = self.p
        if self.pivots:
            m = (m - self._mul(m[:, self.pivots], self.basis)) % p
        m = m[np.any(m != 0, axis=1)]
        new_rows: list[np.ndarray] = []
        new_piv: list[int] = []
        alive = np.ones(m.shape[0], dtype=bool)
        for i in range(m.shape[0]):
            row = m[i]
            nz = np.flatnonzero(row)
            if not len(nz):
                continue
            col = int(nz[0])
            prow = (row * pow(int(row[col]), -1, p)) % p
            alive[i] = False
            # rows are sparse, so only touch the ones meeting this column
            hit = np.flatnonzero(m[:, col] * alive)
            if len(hit):
                m[hit] = (m[hit] - np.outer(m[hit, col], prow)) % p
            for k, r in enumerate(new_rows):
                if r[col]:
                    new_rows[k] = (r - r[col] * prow) % p
            new_rows.append(prow)
            new_piv.append(col)
        new = np.array(new_rows, dtype=np.int64).reshape(len(new_rows), self.ncols)
        if not new_piv:
            return
        n = new
        if self.pivots:
            self.basis = (self.basis - self._mul(self.basis[:, new_piv], n)) % p
        self.basis = np.vstack([self.basis, n])
        self.pivots.extend(new_piv)


def rref(rows: Sequence[Sequence[Fraction | int]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; zero rows dropped."""
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return [], []
    n = len(a[0])
    pivots: list[int] = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(a)) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        lead = a[r][col]
        a[r] = [x / lead for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def nullspace(rows: Sequence[Sequence[Fraction | int]], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : row . x = 0 for every row}, one vector per free column."""
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def rank_fraction(rows: Sequence[Sequence[Fraction | int]]) -> int:
    return len(rref(rows)[1]) if rows else 0


def canonical_span(vectors: Sequence[Sequence[Fraction | int]]) -> tuple[tuple[Fraction, ...], ...]:
    """Hashable identifier of span(vectors): its RREF basis."""
    red, _ = rref(vectors) if vectors else ([], [])
    return tuple(tuple(r) for r in red)
