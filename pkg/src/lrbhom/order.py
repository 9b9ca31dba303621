"""R-order, support lattice, interval subposets and structural predicates.

Conventions: ``a <=_R b`` iff ``b*a == a``, so the identity is the greatest
element. The support lattice is ordered by inclusion of principal left
ideals ``Ba``; its top is ``B`` itself (the class of the identity).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .monoid import LRB, Graph


@dataclass(frozen=True, eq=False)
class Poset:
    elements: tuple            # tags, e.g. element indices of an LRB
    leq: np.ndarray            # leq[i, j] = elements[i] <= elements[j]
    labels: tuple = ()

    def __post_init__(self):
        self.leq.setflags(write=False)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(e) for e in self.elements))

    def __len__(self):
        return len(self.elements)

    @cached_property
    def less(self) -> np.ndarray:
        lt = self.leq.copy()
        np.fill_diagonal(lt, False)
        return lt

    def check(self) -> None:
        n = len(self)
        if n == 0:
            return
        if not self.leq.diagonal().all():
            raise ValueError("poset relation is not reflexive")
        if (self.leq & self.leq.T & ~np.eye(n, dtype=bool)).any():
            raise ValueError("poset relation is not antisymmetric")
        m = self.leq.astype(np.int64)
        if ((m @ m > 0) & ~self.leq).any():
            raise ValueError("poset relation is not transitive")

    def restrict(self, keep: Sequence[int]) -> "Poset":
        """Induced subposet on the given positions (kept in the given order)."""
        keep = list(keep)
        return Poset(tuple(self.elements[i] for i in keep),
                     self.leq[np.ix_(keep, keep)].copy(),
                     tuple(self.labels[i] for i in keep))

    @cached_property
    def hasse(self) -> list[tuple[int, int]]:
        """Cover relations (lower, upper) by transitive reduction."""
        lt = self.less.astype(np.int64)
        two_step = (lt @ lt) > 0
        cov = self.less & ~two_step
        return [(int(i), int(j)) for i, j in np.argwhere(cov)]

    def maximal(self) -> list[int]:
        return [i for i in range(len(self)) if not self.less[i].any()]

    def minimal(self) -> list[int]:
        return [j for j in range(len(self)) if not self.less[:, j].any()]

    def longest_chain_length(self) -> int:
        """Number of cover steps in a longest chain (0 for a one-element poset)."""
        n = len(self)
        if n == 0:
            return -1
        order = sorted(range(n), key=lambda i: int(self.leq[:, i].sum()))
        best = [0] * n
        for j in order:
            below = np.flatnonzero(self.less[:, j])
            if below.size:
                best[j] = 1 + max(best[i] for i in below)
        return max(best)


def r_order(B: LRB) -> Poset:
    """Green's R-order: ``a <= b`` iff ``b*a == a``."""
    t = B.table
    n = B.size
    # leq[a, b] = (t[b, a] == a)
    leq = (t.T == np.arange(n)[:, None])
    P = Poset(tuple(range(n)), leq, B.labels)
    if (leq & leq.T & ~np.eye(n, dtype=bool)).any():
        raise RuntimeError("R-order not antisymmetric: table is not an LRB")
    return P


@dataclass(frozen=True, eq=False)
class SupportLattice:
    """Lattice of principal left ideals Ba, ordered by inclusion."""
    class_of: tuple[int, ...]          # element -> class index
    classes: tuple[frozenset, ...]     # each class is the ideal Ba
    leq: np.ndarray
    meet: np.ndarray
    top: int
    bottom: int
    labels: tuple[str, ...]

    def __len__(self):
        return len(self.classes)

    def lt(self, x: int, y: int) -> bool:
        return x != y and bool(self.leq[x, y])

    def representatives(self) -> list[int]:
        """Smallest element index in each class (the canonical y)."""
        reps = [-1] * len(self.classes)
        for a, c in enumerate(self.class_of):
            if reps[c] < 0:
                reps[c] = a
        return reps

    def as_poset(self) -> Poset:
        return Poset(tuple(range(len(self))), self.leq.copy(), self.labels)

    def longest_chain(self) -> int:
        return self.as_poset().longest_chain_length()

    def pairs_lt(self) -> list[tuple[int, int]]:
        n = len(self)
        return [(x, y) for x in range(n) for y in range(n) if self.lt(x, y)]


def support_lattice(B: LRB) -> SupportLattice:
    t = B.table
    ideals = {}
    order = []
    for a in range(B.size):
        ideal = frozenset(int(v) for v in t[:, a])
        if ideal not in ideals:
            ideals[ideal] = None
            order.append(ideal)
    # largest ideals first; ties by smallest member
    order.sort(key=lambda s: (-len(s), sorted(s)))
    index = {s: i for i, s in enumerate(order)}
    class_of = tuple(index[frozenset(int(v) for v in t[:, a])] for a in range(B.size))
    k = len(order)
    leq = np.array([[order[i] <= order[j] for j in range(k)] for i in range(k)], dtype=bool)
    meet = np.empty((k, k), dtype=np.int32)
    for i in range(k):
        for j in range(k):
            inter = order[i] & order[j]
            if inter not in index:
                raise RuntimeError(f"ideal intersection {i}^{j} is not principal: table corrupted")
            meet[i, j] = index[inter]
    top = class_of[B.identity]
    bottoms = [i for i in range(k) if all(leq[i, j] for j in range(k))]
    if len(bottoms) != 1:
        raise RuntimeError("support lattice has no bottom")
    first = {}
    for a, c in enumerate(class_of):
        first.setdefault(c, a)
    labels = tuple(f"s({B.labels[first[c]]})" for c in range(k))
    L = SupportLattice(class_of, tuple(order), leq, meet, top, bottoms[0], labels)
    L.leq.setflags(write=False)
    L.meet.setflags(write=False)
    return L


def sigma(B: LRB, L: SupportLattice, a: int) -> int:
    return L.class_of[a]


def interval_elements(B: LRB, L: SupportLattice, X: int, Y: int, y: int | None = None,
                      include_y: bool = False) -> list[int]:
    """Elements z with X <= s(z) and z <=_R y, where s(y) = Y."""
    k = len(L)
    if not (0 <= X < k and 0 <= Y < k):
        raise IndexError("lattice index out of range")
    if y is None:
        y = L.representatives()[Y]
    elif L.class_of[y] != Y:
        raise ValueError(f"element {B.labels[y]} does not have support {Y}")
    t = B.table
    out = []
    for z in range(B.size):
        if z == y and not include_y:
            continue
        if L.leq[X, L.class_of[z]] and t[y, z] == z:
            out.append(z)
    return out


def interval_poset(B: LRB, X: int, Y: int, y: int | None = None,
                   L: SupportLattice | None = None, P: Poset | None = None) -> Poset:
    """B[X, Y] minus the chosen y, under the R-order."""
    L = L or support_lattice(B)
    P = P or r_order(B)
    return P.restrict(interval_elements(B, L, X, Y, y))


def contraction(B: LRB, X: int, L: SupportLattice | None = None,
                P: Poset | None = None) -> Poset:
    """B[X, top] including the identity; all of B when X is the bottom."""
    L = L or support_lattice(B)
    P = P or r_order(B)
    return P.restrict(interval_elements(B, L, X, L.top, B.identity, include_y=True))


def is_right_hereditary(B: LRB, P: Poset | None = None) -> bool:
    """The Hasse diagram of the R-order is a tree."""
    P = P or r_order(B)
    edges = P.hasse
    if len(edges) != len(P) - 1:
        return False
    from .topology import connected_components
    return connected_components(len(P), edges)[0] == 1


def is_geometric(B: LRB, P: Poset | None = None) -> bool:
    """Every left stabilizer {b : b >=_R a} is commutative."""
    P = P or r_order(B)
    t = B.table
    comm = t == t.T
    for a in range(B.size):
        stab = np.flatnonzero(P.leq[a])
        if not comm[np.ix_(stab, stab)].all():
            return False
    return True


def maximal_nonidentity(B: LRB, P: Poset | None = None) -> list[int]:
    """Maximal elements of B minus the identity (the coatoms of the R-order)."""
    P = P or r_order(B)
    rest = [a for a in range(B.size) if a != B.identity]
    return [a for a in rest if not any(P.less[a, b] for b in rest)]


def commutation_graph(B: LRB, P: Poset | None = None) -> tuple[Graph, list[int]]:
    """Commutation graph of the maximal elements of B minus the identity.

    Returns the graph (vertex i is ``elements[i]``) and the element list.
    """
    if B.size <= 1:
        raise ValueError("commutation graph needs |B| > 1")
    elems = maximal_nonidentity(B, P)
    t = B.table
    edges = [(i, j) for i in range(len(elems)) for j in range(i + 1, len(elems))
             if t[elems[i], elems[j]] == t[elems[j], elems[i]]]
    return Graph.from_edges(len(elems), edges), elems


def children(P: Poset, y: int) -> list[int]:
    """Hasse children of position y (elements covered by y)."""
    return sorted(lo for lo, hi in P.hasse if hi == y)


def children_count(B: LRB, y: int, X: int, L: SupportLattice | None = None,
                   P: Poset | None = None) -> int:
    """Children z of y in the R-order's Hasse diagram with s(z) >= X."""
    P = P or r_order(B)
    if not is_right_hereditary(B, P):
        raise ValueError("children_count requires a right hereditary LRB")
    L = L or support_lattice(B)
    return sum(1 for z in children(P, y) if L.leq[X, L.class_of[z]])
